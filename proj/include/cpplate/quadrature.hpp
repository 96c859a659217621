#pragma once

// Quadrature toolbox:
//   - adaptive Gauss-Kronrod 7/15 on finite intervals (deterministic bisection)
//   - semi-infinite integrals via a rational map (default) or exp-sinh
//   - a damped-oscillatory ladder integrator that evaluates
//     I(eta) = int_0^inf e^{-eta k} g(k) dk for a whole ladder of regulators
//     in one pass, in long double, tracking cancellation noise
//   - weighted polynomial extrapolation of the ladder to eta -> 0

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "cpplate/errors.hpp"

namespace cpplate {

struct QuadratureConfig {
    double rel_tol = 1e-10;        // relative tolerance for adaptive rules
    double abs_tol = 1e-14;        // absolute floor for adaptive rules
    int max_subdivisions = 4000;   // panel budget for adaptive bisection

    // Abel regulator ladder, in units of the direct separation R.
    // Kept well above the long-double cancellation floor; see README.
    std::vector<double> regulator_etas = default_regulator_etas();
    int extrapolation_order = 4;   // polynomial order of the eta -> 0 fit

    enum class Map { rational, exp_sinh };
    Map semi_infinite_map = Map::rational;

    int panel_points = 12;           // Gauss-Legendre order per oscillatory panel
    double panels_per_period = 2.0;  // panels per period of the fastest oscillation

    [[nodiscard]] static std::vector<double> default_regulator_etas() {
        // 8 geometric values from 1e-1 down to 1e-2 (relative to R)
        std::vector<double> etas;
        const double ratio = std::pow(10.0, -1.0 / 7.0);
        double e = 1e-1;
        for (int i = 0; i < 8; ++i, e *= ratio) etas.push_back(e);
        return etas;
    }

    void validate() const {
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw ValidationError("quadrature tolerances must be positive");
        if (max_subdivisions < 1) throw ValidationError("max_subdivisions must be >= 1");
        if (regulator_etas.empty())
            throw ValidationError("regulator eta ladder must be non-empty");
        for (std::size_t i = 0; i < regulator_etas.size(); ++i) {
            if (!(regulator_etas[i] > 0.0))
                throw ValidationError("regulator etas must be positive");
            if (i > 0 && !(regulator_etas[i] < regulator_etas[i - 1]))
                throw ValidationError("regulator etas must be strictly decreasing");
        }
        if (extrapolation_order < 1) throw ValidationError("extrapolation_order must be >= 1");
        if (panel_points < 2 || panel_points > 64)
            throw ValidationError("panel_points out of range [2, 64]");
        if (!(panels_per_period > 0.0)) throw ValidationError("panels_per_period must be positive");
    }
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;       // absolute error estimate
    long evaluations = 0;
    bool converged = false;
};

namespace detail {

// Gauss-Kronrod 7/15 nodes on [-1, 1]: abscissae (positive half, descending),
// Kronrod weights, and the embedded 7-point Gauss weights.
inline constexpr double kGk15X[8] = {
    0.99145537112081263920685469752632852,
    0.94910791234275852452618968404785126,
    0.86486442335976907278971278864092620,
    0.74153118559939443986386477328078841,
    0.58608723546769113029414483825872960,
    0.40584515137739716690660641207696146,
    0.20778495500789846760068940377324491,
    0.0};
inline constexpr double kGk15W[8] = {
    0.02293532201052922496373200805896959,
    0.06309209262997855329070066318920429,
    0.10479001032225018383987632254151802,
    0.14065325971552591874518959051023792,
    0.16900472663926790282658342659855028,
    0.19035057806478540991325640242101368,
    0.20443294007529889241416199923464908,
    0.20948214108472782801299917489171426};
inline constexpr double kG7W[4] = {
    0.12948496616886969327061143267908202,
    0.27970539148927666790146777142377959,
    0.38183005050511894495036977548897513,
    0.41795918367346938775510204081632653};

/// One Gauss-Kronrod 7/15 panel; returns (kronrod, |kronrod - gauss|).
template <typename F>
[[nodiscard]] inline std::pair<double, double> gk15_panel(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0;
    // center node (Kronrod index 7; also a Gauss node, Gauss index 3)
    const double fc = f(c);
    kron += kGk15W[7] * fc;
    gauss += kG7W[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double fp = f(c + h * kGk15X[i]);
        const double fm = f(c - h * kGk15X[i]);
        kron += kGk15W[i] * (fp + fm);
        if (i % 2 == 1) gauss += kG7W[i / 2] * (fp + fm);
    }
    return {kron * h, std::abs(kron - gauss) * h};
}

/// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(static_cast<std::size_t>(n), 0.0);
    w.assign(static_cast<std::size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double t = std::cos(3.14159265358979323846 * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (t * p0 - p1) / (t * t - 1.0);
            const double dt = p0 / pp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[static_cast<std::size_t>(i)] = -t;
        x[static_cast<std::size_t>(n - 1 - i)] = t;
        w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * pp * pp);
        w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
}

/// Cached Gauss-Legendre rule (the library is single-threaded per evaluation).
inline const std::pair<std::vector<double>, std::vector<double>>& gl_rule(int n) {
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        std::pair<std::vector<double>, std::vector<double>> rule;
        gauss_legendre(n, rule.first, rule.second);
        it = cache.emplace(n, std::move(rule)).first;
    }
    return it->second;
}

template <typename F>
void adapt_recurse(F&& f, double a, double b, double tol, int depth, int& budget,
                   double& total, double& err_total, long& evals, bool& converged) {
    auto [v, e] = gk15_panel(f, a, b);
    evals += 15;
    if (e <= tol || depth >= 60 || budget <= 0) {
        total += v;
        err_total += e;
        if (e > tol && depth >= 60) converged = false;
        if (e > tol && budget <= 0) converged = false;
        return;
    }
    --budget;
    const double m = 0.5 * (a + b);
    adapt_recurse(f, a, m, 0.5 * tol, depth + 1, budget, total, err_total, evals, converged);
    adapt_recurse(f, m, b, 0.5 * tol, depth + 1, budget, total, err_total, evals, converged);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration over [a, b]. Deterministic: depth-first
/// bisection with a fixed tolerance split, independent of evaluation order.
template <typename F>
[[nodiscard]] QuadResult integrate_adaptive(F&& f, double a, double b, double rel_tol,
                                            double abs_tol, int max_subdivisions) {
    // first pass to scale the relative tolerance
    auto [v0, e0] = detail::gk15_panel(f, a, b);
    QuadResult res;
    res.evaluations = 15;
    const double tol = std::max(abs_tol, rel_tol * std::abs(v0));
    if (e0 <= tol) {
        res.value = v0;
        res.error = e0;
        res.converged = true;
        return res;
    }
    int budget = max_subdivisions;
    double total = 0.0, err = 0.0;
    bool converged = true;
    const double m = 0.5 * (a + b);
    --budget;
    detail::adapt_recurse(f, a, m, 0.5 * tol, 1, budget, total, err, res.evaluations, converged);
    detail::adapt_recurse(f, m, b, 0.5 * tol, 1, budget, total, err, res.evaluations, converged);
    res.value = total;
    res.error = err;
    res.converged = converged;
    return res;
}

/// Semi-infinite integral int_0^inf f(u) du via the rational map
/// u = scale * t/(1-t), t in [0, 1). `scale` should match the decay length.
template <typename F>
[[nodiscard]] QuadResult integrate_semi_infinite_rational(F&& f, double scale, double rel_tol,
                                                          double abs_tol, int max_subdivisions) {
    auto mapped = [&f, scale](double t) {
        const double om = 1.0 - t;
        const double u = scale * t / om;
        return f(u) * scale / (om * om);
    };
    return integrate_adaptive(mapped, 0.0, 1.0, rel_tol, abs_tol, max_subdivisions);
}

/// Semi-infinite integral via exp-sinh double-exponential quadrature
/// (trapezoid in t, u = scale * exp((pi/2) sinh t), step halving).
template <typename F>
[[nodiscard]] QuadResult integrate_semi_infinite_exp_sinh(F&& f, double scale, double rel_tol,
                                                          double abs_tol, int max_levels = 10) {
    const double pi_half = 1.57079632679489661923;
    const double tmax = 4.0;
    auto g = [&f, scale, pi_half](double t) {
        const double s = std::sinh(t);
        const double u = scale * std::exp(pi_half * s);
        const double du = u * pi_half * std::cosh(t);
        const double v = f(u) * du;
        return std::isfinite(v) ? v : 0.0;
    };
    QuadResult res;
    double h = 1.0;
    double sum = g(0.0);
    res.evaluations = 1;
    for (double t = h; t <= tmax; t += h) {
        sum += g(t) + g(-t);
        res.evaluations += 2;
    }
    double prev = sum * h;
    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5;
        double add = 0.0;
        for (double t = h; t <= tmax; t += 2.0 * h) {
            add += g(t) + g(-t);
            res.evaluations += 2;
        }
        sum += add;
        const double cur = sum * h;
        res.error = std::abs(cur - prev);
        prev = cur;
        if (res.error <= std::max(abs_tol, rel_tol * std::abs(cur)) && level >= 3) {
            res.converged = true;
            break;
        }
    }
    res.value = prev;
    return res;
}

/// Semi-infinite integral using the map selected in the config.
template <typename F>
[[nodiscard]] QuadResult integrate_semi_infinite(F&& f, double scale, const QuadratureConfig& cfg) {
    if (cfg.semi_infinite_map == QuadratureConfig::Map::exp_sinh)
        return integrate_semi_infinite_exp_sinh(f, scale, cfg.rel_tol, cfg.abs_tol);
    return integrate_semi_infinite_rational(f, scale, cfg.rel_tol, cfg.abs_tol, cfg.max_subdivisions);
}

// ----------------------------------------------------------------- eta ladder

struct DampedLadder {
    std::vector<double> etas;    // absolute regulators, descending
    std::vector<double> values;  // I(eta)
    std::vector<double> noise;   // estimated cancellation noise per value
    long evaluations = 0;
};

/// Evaluate I(eta) = int_0^inf e^{-eta k} g(k) dk for every eta in one pass.
///
/// g is evaluated once per node in long double and shared across the ladder.
/// Panels are sized to the fastest oscillation omega_max of g; each panel uses
/// a Gauss-Legendre rule. The partial-sum maximum tracks how much cancellation
/// occurred, giving an honest noise floor estimate per eta.
template <typename G>
[[nodiscard]] DampedLadder integrate_damped_ladder(G&& g, std::vector<double> etas,
                                                   double omega_max, int panel_points,
                                                   double panels_per_period,
                                                   double tail_eps = 1e-22) {
    std::sort(etas.begin(), etas.end(), std::greater<double>());
    const auto& [xs, ws] = detail::gl_rule(panel_points);
    const long double width = static_cast<long double>(2.0 * 3.14159265358979323846 /
                                                      (omega_max * panels_per_period));
    const double eta_min = etas.back();
    // cutoff where the k^4 envelope under e^{-eta k} is negligible
    double kcut = -std::log(tail_eps) / eta_min;
    for (int i = 0; i < 20; ++i)
        kcut = (-std::log(tail_eps) + 4.0 * std::log(std::max(kcut, 1.0))) / eta_min;
    const long npanels = static_cast<long>(std::ceil(kcut / static_cast<double>(width)));

    const std::size_t n = etas.size();
    std::vector<long double> sums(n, 0.0L), maxpart(n, 0.0L);
    std::vector<bool> live(n, true);
    std::vector<long double> gv(xs.size());
    DampedLadder out;
    out.etas = etas;
    std::size_t nlive = n;
    long panels_done = 0;
    for (long p = 0; p < npanels && nlive > 0; ++p) {
        const long double a = width * static_cast<long double>(p);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            const long double k = a + width * (0.5L + 0.5L * static_cast<long double>(xs[j]));
            gv[j] = g(k);
        }
        out.evaluations += static_cast<long>(xs.size());
        const double kend = static_cast<double>(a + width);
        for (std::size_t i = 0; i < n; ++i) {
            if (!live[i]) continue;
            const long double eta = etas[i];
            long double s = 0.0L;
            for (std::size_t j = 0; j < xs.size(); ++j) {
                const long double k = a + width * (0.5L + 0.5L * static_cast<long double>(xs[j]));
                s += static_cast<long double>(ws[j]) * std::exp(-eta * k) * gv[j];
            }
            sums[i] += 0.5L * width * s;
            maxpart[i] = std::max(maxpart[i], std::fabs(sums[i]));
            const double env = std::exp(-etas[i] * kend) * std::pow(std::max(kend, 1.0), 4);
            if (env < tail_eps * std::max(static_cast<double>(maxpart[i]), 1e-300)) {
                live[i] = false;
                --nlive;
            }
        }
        panels_done = p + 1;
    }
    out.values.resize(n);
    out.noise.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.values[i] = static_cast<double>(sums[i]);
        // long-double epsilon times the largest intermediate, random-walk scaled
        out.noise[i] = 1.1e-19 * static_cast<double>(maxpart[i]) *
                       std::sqrt(static_cast<double>(panels_done));
    }
    return out;
}

// -------------------------------------------------------------- extrapolation

struct Extrapolation {
    double value = 0.0;
    double error = 0.0;
    bool stable = true;
    std::vector<double> increments;  // |fit(m) - fit(m-1)| as smaller etas join
};

/// Weighted least-squares polynomial fit of I(eta), extrapolated to eta = 0.
///
/// Refits while appending ladder points from the largest eta down; the
/// extrapolant increments should shrink as smaller etas join. Increments that
/// instead grow (while clearly above the cancellation-noise floor) mark the
/// ladder unstable: the data contain an eta-dependence the polynomial model
/// cannot reach, so the eta -> 0 limit is not trustworthy.
[[nodiscard]] inline Extrapolation extrapolate_eta_ladder(const std::vector<double>& etas,
                                                          const std::vector<double>& values,
                                                          const std::vector<double>& noise,
                                                          int order) {
    const std::size_t n = etas.size();
    if (n < 2 || values.size() != n || noise.size() != n)
        throw ValidationError("eta ladder and values must align, with >= 2 points");
    const int p = std::min<int>(order, static_cast<int>(n) - 2);
    const int ncoef = std::max(p, 1) + 1;
    const long double emax = static_cast<long double>(etas.front());

    auto fit_m = [&](std::size_t m, long double* err_out) -> long double {
        // weighted normal equations in long double; basis (eta/emax)^j
        const int q = std::min<int>(ncoef, static_cast<int>(m));
        std::vector<long double> ata(static_cast<std::size_t>(q * q), 0.0L);
        std::vector<long double> atb(static_cast<std::size_t>(q), 0.0L);
        for (std::size_t i = 0; i < m; ++i) {
            const long double e = static_cast<long double>(etas[i]) / emax;
            const long double w = 1.0L / std::max(static_cast<long double>(noise[i]), 1e-300L);
            long double basis[16];
            basis[0] = 1.0L;
            for (int j = 1; j < q; ++j) basis[j] = basis[j - 1] * e;
            for (int r = 0; r < q; ++r) {
                for (int c = 0; c < q; ++c)
                    ata[static_cast<std::size_t>(r * q + c)] += w * w * basis[r] * basis[c];
                atb[static_cast<std::size_t>(r)] += w * w * basis[r] * static_cast<long double>(values[i]);
            }
        }
        // Gaussian elimination with partial pivoting
        std::vector<int> idx(static_cast<std::size_t>(q));
        for (int i = 0; i < q; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (int col = 0; col < q; ++col) {
            int piv = col;
            for (int r = col + 1; r < q; ++r)
                if (std::fabs(ata[static_cast<std::size_t>(r * q + col)]) >
                    std::fabs(ata[static_cast<std::size_t>(piv * q + col)]))
                    piv = r;
            if (piv != col) {
                for (int c = 0; c < q; ++c)
                    std::swap(ata[static_cast<std::size_t>(col * q + c)],
                              ata[static_cast<std::size_t>(piv * q + c)]);
                std::swap(atb[static_cast<std::size_t>(col)], atb[static_cast<std::size_t>(piv)]);
            }
            const long double d = ata[static_cast<std::size_t>(col * q + col)];
            if (d == 0.0L) return 0.0L;
            for (int r = col + 1; r < q; ++r) {
                const long double fct = ata[static_cast<std::size_t>(r * q + col)] / d;
                for (int c = col; c < q; ++c)
                    ata[static_cast<std::size_t>(r * q + c)] -= fct * ata[static_cast<std::size_t>(col * q + c)];
                atb[static_cast<std::size_t>(r)] -= fct * atb[static_cast<std::size_t>(col)];
            }
        }
        std::vector<long double> coef(static_cast<std::size_t>(q), 0.0L);
        for (int r = q - 1; r >= 0; --r) {
            long double s = atb[static_cast<std::size_t>(r)];
            for (int c = r + 1; c < q; ++c)
                s -= ata[static_cast<std::size_t>(r * q + c)] * coef[static_cast<std::size_t>(c)];
            coef[static_cast<std::size_t>(r)] = s / ata[static_cast<std::size_t>(r * q + r)];
        }
        if (err_out != nullptr) {
            // rms of weighted residuals, mapped back to an absolute error at 0
            long double chi2 = 0.0L;
            long double wmax = 0.0L;
            for (std::size_t i = 0; i < m; ++i) {
                const long double e = static_cast<long double>(etas[i]) / emax;
                long double fiti = 0.0L, b = 1.0L;
                for (int j = 0; j < q; ++j, b *= e) fiti += coef[static_cast<std::size_t>(j)] * b;
                const long double sg = std::max(static_cast<long double>(noise[i]), 1e-300L);
                const long double rr = (static_cast<long double>(values[i]) - fiti) / sg;
                chi2 += rr * rr;
                wmax = std::max(wmax, sg);
            }
            const long double dof = static_cast<long double>(m > static_cast<std::size_t>(q) ? m - static_cast<std::size_t>(q) : 1);
            *err_out = wmax * std::sqrt(std::max(chi2 / dof, 1.0L));
        }
        return coef[0];
    };

    Extrapolation out;
    long double err = 0.0L;
    long double prev = 0.0L;
    bool have_prev = false;
    for (std::size_t m = static_cast<std::size_t>(ncoef) + 1; m <= n; ++m) {
        const long double em = fit_m(m, m == n ? &err : nullptr);
        if (have_prev) out.increments.push_back(static_cast<double>(std::fabs(em - prev)));
        prev = em;
        have_prev = true;
    }
    out.value = static_cast<double>(prev);
    const std::size_t ni = out.increments.size();
    const double last_inc = ni >= 1 ? out.increments[ni - 1] : 0.0;
    const double prev_inc = ni >= 2 ? out.increments[ni - 2] : 0.0;
    out.error = std::max({static_cast<double>(err), last_inc, prev_inc}) * 8.0;
    if (ni >= 2) {
        // increments should settle as smaller etas join the fit; growth that is
        // clearly above the noise floor means the model cannot follow the data
        const double noise_floor = *std::max_element(noise.begin(), noise.end());
        if (last_inc > 2.0 * out.increments.front() && last_inc > 50.0 * noise_floor)
            out.stable = false;
    }
    return out;
}

}  // namespace cpplate
