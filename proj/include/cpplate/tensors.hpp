#pragma once

// Closed-form interaction kernels and their independent numerical oracles.
//
// Both kernels decompose as  M = diag * I + dyad * (Rhat Rhat^T):
//   transverse kernel tau(k, R):  angular average of (I - khat khat) e^{i k.R}
//   dipole kernel     V(k, R):    (I lap - grad grad) cos(k|r|)/|r|
//
// tau(k,R) = (I - Rhat Rhat) sin(x)/x + (I - 3 Rhat Rhat) (cos(x)/x^2 - sin(x)/x^3)
// V(k,R)   = -(I - Rhat Rhat) k^2 cos(x)/R
//            + (I - 3 Rhat Rhat) (cos(x)/R^3 + k sin(x)/R^2),     x = k R.
//
// The x -> 0 limits are tau -> (2/3) I and V -> (I - 3 Rhat Rhat)/R^3.

#include <cmath>
#include <cstddef>

#include "cpplate/errors.hpp"
#include "cpplate/geometry.hpp"
#include "cpplate/linalg.hpp"
#include "cpplate/quadrature.hpp"

namespace cpplate {

enum class KernelKind { tau, dipole, tau_plate, dipole_plate };

/// Scalar pair (diag, dyad) with M = diag * I + dyad * Rhat Rhat^T.
template <typename T>
struct KernelCoeffs {
    T diag{};
    T dyad{};
};

/// Threshold below which cos(x)/x^2 - sin(x)/x^3 switches to its Taylor series.
inline constexpr double kSmallArgThreshold = 1e-3;

/// cos(x)/x^2 - sin(x)/x^3, series-protected against cancellation at small x.
template <typename T>
[[nodiscard]] T osc_b(T x) {
    const T ax = x < T(0) ? -x : x;
    if (ax < T(kSmallArgThreshold)) {
        const T x2 = x * x;
        return T(-1.0L / 3.0L) + x2 * (T(1.0L / 30.0L) +
               x2 * (T(-1.0L / 840.0L) + x2 * T(1.0L / 45360.0L)));
    }
    return std::cos(x) / (x * x) - std::sin(x) / (x * x * x);
}

/// sin(x)/x with the exact x = 0 limit.
template <typename T>
[[nodiscard]] T sinc(T x) {
    if (x == T(0)) return T(1);
    return std::sin(x) / x;
}

/// Dimensionless transverse-kernel coefficients as functions of x = kR.
template <typename T>
[[nodiscard]] KernelCoeffs<T> tau_coefficients(T x) {
    const T s = sinc(x);
    const T b = osc_b(x);
    return {s + b, -s - T(3) * b};
}

/// Dipole-kernel coefficients; dimensionful (carry the 1/R^3 scale).
template <typename T>
[[nodiscard]] KernelCoeffs<T> dipole_coefficients(T k, T r) {
    const T x = k * r;
    const T c = std::cos(x);
    const T s = std::sin(x);
    const T inv_r3 = T(1) / (r * r * r);
    return {inv_r3 * (-x * x * c + x * s + c), inv_r3 * (x * x * c - T(3) * x * s - T(3) * c)};
}

namespace detail {

template <typename T>
[[nodiscard]] Mat3T<T> assemble(const KernelCoeffs<T>& cf, const Vec3T<T>& rhat) {
    Mat3T<T> m = outer(rhat, rhat) * cf.dyad;
    m(0, 0) += cf.diag;
    m(1, 1) += cf.diag;
    m(2, 2) += cf.diag;
    return m;
}

template <typename T>
void require_separation(const Vec3T<T>& rvec) {
    if (!(rvec.norm() > T(0)))
        throw DegenerateSeparation("kernel requested at zero separation");
}

}  // namespace detail

/// Transverse kernel tau(k, rvec) as a 3x3 matrix.
template <typename T>
[[nodiscard]] Mat3T<T> tau_matrix(T k, const Vec3T<T>& rvec) {
    detail::require_separation(rvec);
    const T r = rvec.norm();
    return detail::assemble(tau_coefficients(k * r), rvec / r);
}

/// Dipole kernel V(k, rvec) as a 3x3 matrix.
template <typename T>
[[nodiscard]] Mat3T<T> dipole_matrix(T k, const Vec3T<T>& rvec) {
    detail::require_separation(rvec);
    const T r = rvec.norm();
    return detail::assemble(dipole_coefficients(k, r), rvec / r);
}

/// Half-space transverse kernel: direct term minus the image term, the image
/// tensor being left-multiplied on its first index by sigma = diag(1, 1, -1).
template <typename T>
[[nodiscard]] Mat3T<T> tau_plate_matrix(T k, const Vec3T<T>& rvec, const Vec3T<T>& rbar_vec) {
    return tau_matrix(k, rvec) - matmul(reflection_matrix<T>(), tau_matrix(k, rbar_vec));
}

/// Half-space dipole kernel with the same image construction.
template <typename T>
[[nodiscard]] Mat3T<T> dipole_plate_matrix(T k, const Vec3T<T>& rvec, const Vec3T<T>& rbar_vec) {
    return dipole_matrix(k, rvec) - matmul(reflection_matrix<T>(), dipole_matrix(k, rbar_vec));
}

/// Kernel dispatch by kind (free-space kinds only).
template <typename T>
[[nodiscard]] Mat3T<T> kernel_matrix(KernelKind kind, T k, const Vec3T<T>& rvec) {
    if (kind != KernelKind::tau && kind != KernelKind::dipole)
        throw ValidationError("kernel_matrix dispatches free-space kinds only");
    return kind == KernelKind::tau ? tau_matrix(k, rvec) : dipole_matrix(k, rvec);
}

/// 3x3 interaction tensor with its provenance metadata.
struct InteractionTensor {
    Mat3 m = Mat3::zero();
    KernelKind kind = KernelKind::tau;
    double k = 0.0;
};

/// Transverse kernel at wavenumber k for the separation vector.
[[nodiscard]] inline InteractionTensor tau(double k, const Vec3& rvec) {
    if (!(k > 0.0)) throw ValidationError("tau requires k > 0");
    return {tau_matrix(k, rvec), KernelKind::tau, k};
}

/// Half-space transverse kernel for a plate geometry.
[[nodiscard]] inline InteractionTensor tau_plate(double k, const PlateGeometry& g) {
    if (!(k > 0.0)) throw ValidationError("tau_plate requires k > 0");
    return {tau_plate_matrix(k, g.r_vec, g.rbar_vec), KernelKind::tau_plate, k};
}

/// Retarded dipole-dipole kernel (k = 0 gives the electrostatic tensor).
[[nodiscard]] inline InteractionTensor dipole_kernel(double k, const Vec3& rvec) {
    if (k < 0.0) throw ValidationError("dipole_kernel requires k >= 0");
    return {dipole_matrix(k, rvec), KernelKind::dipole, k};
}

/// Half-space dipole kernel for a plate geometry.
[[nodiscard]] inline InteractionTensor dipole_kernel_plate(double k, const PlateGeometry& g) {
    if (k < 0.0) throw ValidationError("dipole_kernel_plate requires k >= 0");
    return {dipole_plate_matrix(k, g.r_vec, g.rbar_vec), KernelKind::dipole_plate, k};
}

// -------------------------------------------------------------------- oracles

struct AngularOracleResult {
    Mat3 tensor = Mat3::zero();
    double imag_residual = 0.0;  // largest |imaginary part| left by the quadrature
    long evaluations = 0;
};

/// Recompute tau(k, rvec) from its defining angular average
///   tau_ij = int dOmega/(4 pi) (delta_ij - khat_i khat_j) exp(i k khat . rvec)
/// using Gauss-Legendre in cos(theta) and a trapezoid in phi. Entirely
/// independent of the closed form above.
[[nodiscard]] inline AngularOracleResult angular_oracle_tau(double k, const Vec3& rvec,
                                                            int n_theta = 120, int n_phi = 192) {
    detail::require_separation(rvec);
    const auto& [us, ws] = detail::gl_rule(n_theta);
    const double two_pi = 6.28318530717958647692;
    AngularOracleResult out;
    Mat3 imag = Mat3::zero();
    for (int ip = 0; ip < n_phi; ++ip) {
        const double phi = two_pi * ip / n_phi;
        const double cphi = std::cos(phi), sphi = std::sin(phi);
        for (std::size_t iu = 0; iu < us.size(); ++iu) {
            const double u = us[iu];  // cos(theta)
            const double st = std::sqrt(std::max(0.0, 1.0 - u * u));
            const Vec3 khat{st * cphi, st * sphi, u};
            const double phase = k * dot(khat, rvec);
            const double cr = std::cos(phase), si = std::sin(phase);
            const double wgt = ws[iu] / (2.0 * n_phi);  // dOmega/(4 pi)
            Mat3 proj = outer(khat, khat) * (-1.0);
            proj(0, 0) += 1.0;
            proj(1, 1) += 1.0;
            proj(2, 2) += 1.0;
            out.tensor = out.tensor + proj * (wgt * cr);
            imag = imag + proj * (wgt * si);
            ++out.evaluations;
        }
    }
    out.imag_residual = max_abs(imag);
    return out;
}

/// Recompute the dipole kernel by central finite differences of the scalar
/// cos(k|r|)/|r|,  V_ij = (delta_ij lap - d_i d_j) s(r).  Step is absolute.
[[nodiscard]] inline Mat3 fd_oracle_dipole(double k, const Vec3& rvec, double step) {
    detail::require_separation(rvec);
    const double r = rvec.norm();
    if (!(step > 0.0)) throw ValidationError("finite-difference step must be positive");
    if (step > 0.01 * r)
        throw StepTooLarge("finite-difference step exceeds 1% of the separation");
    auto s = [k](const Vec3& p) {
        const double rr = p.norm();
        return std::cos(k * rr) / rr;
    };
    auto shift = [&rvec](int axis, double d) {
        Vec3 p = rvec;
        if (axis == 0) p.x += d;
        if (axis == 1) p.y += d;
        if (axis == 2) p.z += d;
        return p;
    };
    const double h = step;
    const double s0 = s(rvec);
    double d2[3];  // pure second derivatives
    for (int i = 0; i < 3; ++i)
        d2[i] = (s(shift(i, h)) - 2.0 * s0 + s(shift(i, -h))) / (h * h);
    const double lap = d2[0] + d2[1] + d2[2];
    Mat3 out = Mat3::zero();
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            double dij;
            if (i == j) {
                dij = d2[i];
            } else {
                Vec3 pp = shift(i, h), pm = shift(i, h), mp = shift(i, -h), mm = shift(i, -h);
                auto bump = [](Vec3 p, int axis, double d) {
                    if (axis == 0) p.x += d;
                    if (axis == 1) p.y += d;
                    if (axis == 2) p.z += d;
                    return p;
                };
                dij = (s(bump(pp, j, h)) - s(bump(pm, j, -h)) - s(bump(mp, j, h)) +
                       s(bump(mm, j, -h))) /
                      (4.0 * h * h);
            }
            out(i, j) = (i == j ? lap : 0.0) - dij;
        }
    }
    return out;
}

/// Richardson-extrapolated finite-difference oracle: combines steps h and h/2
/// to cancel the leading O(h^2) truncation error.
[[nodiscard]] inline Mat3 fd_oracle_dipole_richardson(double k, const Vec3& rvec, double step) {
    const Mat3 coarse = fd_oracle_dipole(k, rvec, step);
    const Mat3 fine = fd_oracle_dipole(k, rvec, 0.5 * step);
    return (fine * (4.0 / 3.0)) - (coarse * (1.0 / 3.0));
}

}  // namespace cpplate
