#pragma once

// Phase expansion of the half-space contraction
//
//     S(k) = sum_lm [tau_plate(k)]_lm [dipole_plate(k)]_lm.
//
// Writing tau = a1 I + a2 Rhat Rhat and V = b1 I + b2 Rhat Rhat and expanding
// the four direct/image blocks with product-to-sum identities turns k^3 S(k)
// into a finite sum of terms  k^n {cos, sin}(k phi)  with n in 0..4 and phases
// phi in {2R, 2Rbar, R + Rbar, Rbar - R, 0}.
//
// Two structural facts, asserted at build time:
//   * the difference-phase (Rbar - R) and constant-phase cosine coefficients
//     cancel identically among the four blocks, so only phases >= R + Rbar-
//     type survive and every term decays on the scale of 2R at least;
//   * after the k^3 weighting, cosine monomials carry odd powers only and sine
//     monomials even powers only, which makes the termwise rotation
//     k -> iu exact:  k^n cos(k phi) -> (-1)^((n+1)/2) u^n e^{-u phi} (n odd),
//                     k^n sin(k phi) -> (-1)^(n/2)     u^n e^{-u phi} (n even).

#include <array>
#include <cmath>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "cpplate/errors.hpp"
#include "cpplate/geometry.hpp"
#include "cpplate/linalg.hpp"
#include "cpplate/tensors.hpp"

namespace cpplate {

/// One surviving oscillatory term of k^3 S(k): polynomial coefficients of
/// k^n cos(k phase) and k^n sin(k phase), n = 0..4.
struct TrigPhasePoly {
    double phase = 0.0;
    std::array<double, 5> cos_coeff{};
    std::array<double, 5> sin_coeff{};
};

/// One term of the rotated (imaginary-axis) integrand: poly(u) e^{-u phase}.
struct ImagAxisTerm {
    double phase = 0.0;
    std::array<double, 5> upoly{};
};

/// Direct tensor contraction sum_lm [tau_plate]_lm [dipole_plate]_lm,
/// evaluated from the closed-form kernels. Oracle for the phase expansion.
[[nodiscard]] inline double contraction_direct(double k, const PlateGeometry& g) {
    const Mat3 t = tau_plate_matrix(k, g.r_vec, g.rbar_vec);
    const Mat3 v = dipole_plate_matrix(k, g.r_vec, g.rbar_vec);
    return frobenius(t, v);
}

struct ContractionExpansion {
    std::vector<TrigPhasePoly> terms;  // ascending phase, all > 0
    double cancellation_residual = 0.0;  // dropped |coeff| relative to kept scale

    /// k^3 S(k) on the real axis; templated so the damped ladder can run it
    /// in long double.
    template <typename T>
    [[nodiscard]] T eval_weighted(T k) const {
        T total{};
        for (const auto& t : terms) {
            const T arg = k * static_cast<T>(t.phase);
            const T c = std::cos(arg), s = std::sin(arg);
            T kn = T(1);
            T acc{};
            for (int n = 0; n < 5; ++n, kn *= k)
                acc += kn * (static_cast<T>(t.cos_coeff[static_cast<std::size_t>(n)]) * c +
                             static_cast<T>(t.sin_coeff[static_cast<std::size_t>(n)]) * s);
            total += acc;
        }
        return total;
    }
};

namespace detail {

// coefficient-list entry: trig kind ('s'/'c'), power of k, r-dependent coeff
struct TrigTerm {
    char trig;
    int kpow;
    double coeff;
};

// tau = a1 I + a2 Rhat Rhat, dimensionless in x = kr:
//   a1 = sin/x + cos/x^2 - sin/x^3,  a2 = -sin/x - 3 cos/x^2 + 3 sin/x^3
inline void a_terms(double r, std::array<TrigTerm, 3>& a1, std::array<TrigTerm, 3>& a2) {
    const double r2 = r * r, r3 = r2 * r;
    a1 = {{{'s', -1, 1.0 / r}, {'c', -2, 1.0 / r2}, {'s', -3, -1.0 / r3}}};
    a2 = {{{'s', -1, -1.0 / r}, {'c', -2, -3.0 / r2}, {'s', -3, 3.0 / r3}}};
}

// V = b1 I + b2 Rhat Rhat:
//   b1 = -k^2 cos/r + k sin/r^2 + cos/r^3,  b2 = k^2 cos/r - 3k sin/r^2 - 3 cos/r^3
inline void b_terms(double r, std::array<TrigTerm, 3>& b1, std::array<TrigTerm, 3>& b2) {
    const double r2 = r * r, r3 = r2 * r;
    b1 = {{{'c', 2, -1.0 / r}, {'s', 1, 1.0 / r2}, {'c', 0, 1.0 / r3}}};
    b2 = {{{'c', 2, 1.0 / r}, {'s', 1, -3.0 / r2}, {'c', 0, -3.0 / r3}}};
}

struct Bucket {
    std::array<double, 5> cosc{};  // index = kpow + 3
    std::array<double, 5> sinc{};
};

}  // namespace detail

/// Build the phase expansion of k^3 S(k) for a geometry. Difference-phase and
/// constant-phase buckets are verified to cancel and then dropped; the largest
/// dropped coefficient (relative to the kept scale) is recorded.
[[nodiscard]] inline ContractionExpansion expand_contraction(const PlateGeometry& g) {
    const double r = g.r, rb = g.rbar;
    const Vec3 rh = g.r_vec / r;
    const Vec3 rbh = g.rbar_vec / rb;
    const double c1 = dot(rh, reflect(rh));
    const double c2 = dot(rbh, reflect(rbh));
    const double c3 = dot(rh, rbh);
    const double c4 = dot(rh, reflect(rbh));

    std::map<double, detail::Bucket> sum_buckets;   // phase -> polys
    std::map<double, detail::Bucket> diff_buckets;  // phase >= 0 -> polys

    auto add = [](std::map<double, detail::Bucket>& bs, double phase, char trig, int kpow,
                  double c) {
        auto& b = bs[phase];
        auto& arr = (trig == 'c') ? b.cosc : b.sinc;
        arr[static_cast<std::size_t>(kpow + 3)] += c;
    };

    // trig(k ra) * trig(k rb_) * c * k^(pa+pb), split by product-to-sum
    auto addprod = [&](char ta, int pa, double ca, double ra, char tb, int pb, double cb,
                       double rb_, double w) {
        const double c = ca * cb * w;
        if (c == 0.0) return;
        const int p = pa + pb;
        const double sum_phase = ra + rb_;
        const double diff_phase = std::abs(rb_ - ra);
        const double diff_sign = (rb_ >= ra) ? 1.0 : -1.0;  // sin(B-A) sign normalization
        if (ta == 's' && tb == 'c') {
            add(sum_buckets, sum_phase, 's', p, 0.5 * c);
            add(diff_buckets, diff_phase, 's', p, -0.5 * c * diff_sign);
        } else if (ta == 'c' && tb == 's') {
            add(sum_buckets, sum_phase, 's', p, 0.5 * c);
            add(diff_buckets, diff_phase, 's', p, 0.5 * c * diff_sign);
        } else if (ta == 'c' && tb == 'c') {
            add(sum_buckets, sum_phase, 'c', p, 0.5 * c);
            add(diff_buckets, diff_phase, 'c', p, 0.5 * c);
        } else {  // s * s
            add(diff_buckets, diff_phase, 'c', p, 0.5 * c);
            add(sum_buckets, sum_phase, 'c', p, -0.5 * c);
        }
    };

    // one tau/dipole block: contraction weights (w11, w12, w21, w22) with sign
    auto add_block = [&](double ra, double rb_, double w11, double w12, double w21, double w22,
                         double sign) {
        std::array<detail::TrigTerm, 3> a1, a2, b1, b2;
        detail::a_terms(ra, a1, a2);
        detail::b_terms(rb_, b1, b2);
        struct Pair {
            const std::array<detail::TrigTerm, 3>* a;
            const std::array<detail::TrigTerm, 3>* b;
            double w;
        };
        const Pair pairs[4] = {{&a1, &b1, w11}, {&a1, &b2, w12}, {&a2, &b1, w21}, {&a2, &b2, w22}};
        for (const auto& pr : pairs)
            for (const auto& ta : *pr.a)
                for (const auto& tb : *pr.b)
                    addprod(ta.trig, ta.kpow, ta.coeff, ra, tb.trig, tb.kpow, tb.coeff, rb_,
                            sign * pr.w);
    };

    // T1 free-free, T2 image-image, minus the two cross blocks; the cross
    // weights are the sigma-contraction invariants (tr sigma = 1, etc.)
    add_block(r, r, 3.0, 1.0, 1.0, 1.0, +1.0);
    add_block(rb, rb, 3.0, 1.0, 1.0, 1.0, +1.0);
    add_block(r, rb, 1.0, c2, c1, c3 * c4, -1.0);
    add_block(rb, r, 1.0, c1, c2, c3 * c4, -1.0);

    // scale of kept coefficients (with their k^n weighting made dimensionless
    // by powers of the smallest phase scale r)
    double kept_scale = 0.0;
    for (const auto& [phase, b] : sum_buckets) {
        (void)phase;
        for (int n = 0; n < 5; ++n) {
            const double w = std::pow(r, n);
            kept_scale = std::max(kept_scale, std::abs(b.cosc[static_cast<std::size_t>(n)]) * w);
            kept_scale = std::max(kept_scale, std::abs(b.sinc[static_cast<std::size_t>(n)]) * w);
        }
    }

    ContractionExpansion out;
    // difference-phase buckets must have cancelled; sin coefficients at phase
    // exactly zero multiply sin(0) and are structurally irrelevant
    double dropped = 0.0;
    for (const auto& [phase, b] : diff_buckets) {
        for (int n = 0; n < 5; ++n) {
            const double w = std::pow(r, n);
            dropped = std::max(dropped, std::abs(b.cosc[static_cast<std::size_t>(n)]) * w);
            if (phase > 0.0)
                dropped = std::max(dropped, std::abs(b.sinc[static_cast<std::size_t>(n)]) * w);
        }
    }
    out.cancellation_residual = dropped / std::max(kept_scale, 1e-300);
    if (out.cancellation_residual > 1e-10)
        throw NumericalError("phase expansion lost its difference-phase cancellation");

    for (const auto& [phase, b] : sum_buckets) {
        TrigPhasePoly t;
        t.phase = phase;
        for (int n = 0; n < 5; ++n) {
            t.cos_coeff[static_cast<std::size_t>(n)] = b.cosc[static_cast<std::size_t>(n)];
            t.sin_coeff[static_cast<std::size_t>(n)] = b.sinc[static_cast<std::size_t>(n)];
        }
        out.terms.push_back(t);
    }
    return out;
}

/// Termwise rotation k -> iu of the weighted expansion. Parity is structural
/// (cosine monomials odd, sine monomials even); any opposite-parity leftover
/// would signal an imaginary component and raises.
[[nodiscard]] inline std::vector<ImagAxisTerm> wick_rotate(const ContractionExpansion& ex) {
    std::vector<ImagAxisTerm> out;
    out.reserve(ex.terms.size());
    for (const auto& t : ex.terms) {
        ImagAxisTerm it;
        it.phase = t.phase;
        for (int n = 0; n < 5; ++n) {
            const double cc = t.cos_coeff[static_cast<std::size_t>(n)];
            const double sc = t.sin_coeff[static_cast<std::size_t>(n)];
            if (n % 2 == 1) {
                it.upoly[static_cast<std::size_t>(n)] += cc * (((n + 1) / 2) % 2 == 0 ? 1.0 : -1.0);
                if (sc != 0.0) throw NumericalError("sine monomial with odd weighted power");
            } else {
                it.upoly[static_cast<std::size_t>(n)] += sc * ((n / 2) % 2 == 0 ? 1.0 : -1.0);
                if (cc != 0.0) throw NumericalError("cosine monomial with even weighted power");
            }
        }
        out.push_back(it);
    }
    return out;
}

/// Evaluate the rotated integrand  sum_t poly_t(u) e^{-u phase_t}.
[[nodiscard]] inline double eval_imag_axis(const std::vector<ImagAxisTerm>& terms, double u) {
    double total = 0.0;
    for (const auto& t : terms) {
        double un = 1.0, acc = 0.0;
        for (int n = 0; n < 5; ++n, un *= u) acc += t.upoly[static_cast<std::size_t>(n)] * un;
        total += acc * std::exp(-u * t.phase);
    }
    return total;
}

}  // namespace cpplate
