#pragma once

// Casimir-Polder potential engine: four mutually cross-validating routes.
//
//   free_space          -(1/pi R^2) int du u^4 aA(iu) aB(iu) P(1/uR) e^{-2uR}
//   far_zone_closed     three-term closed form in (R, Rbar, sin theta, sin theta_bar)
//   correlation_wick    (1/pi) int dk k^3 aA aB S(k), rotated termwise to the
//                       imaginary axis through the phase expansion
//   correlation_abel    same integral, Abel-regularized with e^{-eta k} on a
//                       ladder of etas and extrapolated to eta -> 0
//   double_integral_far -(aA0 aB0/pi^2) int dt sum_lm g_lm(t)^2 where g_lm is
//                       the closed-form Laplace transform of k^3 tau_plate
//
// All values are reduced potentials (energy over hbar c) with polarizability
// factors included; reduced_coefficient multiplies by R^7/(aA0 aB0) so the
// free-space benchmark is the pure number -23/(4 pi).

#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "cpplate/atom.hpp"
#include "cpplate/contraction.hpp"
#include "cpplate/errors.hpp"
#include "cpplate/geometry.hpp"
#include "cpplate/linalg.hpp"
#include "cpplate/quadrature.hpp"
#include "cpplate/tensors.hpp"

namespace cpplate {

inline constexpr double kPi = 3.14159265358979323846;

enum class Method { far_zone_closed, correlation_wick, correlation_abel, double_integral_far, free_space };

[[nodiscard]] inline const char* method_name(Method m) {
    switch (m) {
        case Method::far_zone_closed: return "far_zone_closed";
        case Method::correlation_wick: return "correlation_wick";
        case Method::correlation_abel: return "correlation_abel";
        case Method::double_integral_far: return "double_integral_far";
        case Method::free_space: return "free_space";
    }
    return "unknown";
}

[[nodiscard]] inline Method parse_method(const std::string& s) {
    if (s == "far" || s == "far_zone_closed") return Method::far_zone_closed;
    if (s == "wick" || s == "correlation_wick") return Method::correlation_wick;
    if (s == "abel" || s == "correlation_abel") return Method::correlation_abel;
    if (s == "double" || s == "double_integral_far") return Method::double_integral_far;
    if (s == "free" || s == "free_space") return Method::free_space;
    throw ValidationError("unknown method '" + s + "' (expected far|wick|abel|double|free)");
}

enum class AlphaTreatment { static_only, dynamic };

struct PotentialResult {
    double value = 0.0;
    double reduced_coefficient = 0.0;  // value * R^7 / (alpha_A0 alpha_B0)
    double error_estimate = 0.0;
    Method method = Method::far_zone_closed;
    double r = 0.0;
    double rbar = std::numeric_limits<double>::quiet_NaN();
    std::map<std::string, double> diagnostics;
};

// ------------------------------------------------------------------ free space

/// Free-space Casimir-Polder potential between two atoms at separation R.
[[nodiscard]] inline PotentialResult cp_free_space(const AtomSpec& atom_a, const AtomSpec& atom_b,
                                                   double r, const QuadratureConfig& quad,
                                                   AlphaTreatment treatment = AlphaTreatment::dynamic) {
    if (!(r > 0.0)) throw ValidationError("cp_free_space requires R > 0");
    validate_atom(atom_a);
    validate_atom(atom_b);
    quad.validate();
    const double a0a = alpha_static(atom_a);
    const double a0b = alpha_static(atom_b);
    // bracket combined into a single polynomial so u -> 0 is manifestly finite
    auto integrand = [&](double u) {
        const double aa = (treatment == AlphaTreatment::dynamic) ? alpha_imag(atom_a, u) : a0a;
        const double ab = (treatment == AlphaTreatment::dynamic) ? alpha_imag(atom_b, u) : a0b;
        const double u2 = u * u;
        const double invr = 1.0 / r;
        const double poly = u2 * u2 + 2.0 * u2 * u * invr + 5.0 * u2 * invr * invr +
                            6.0 * u * invr * invr * invr + 3.0 * invr * invr * invr * invr;
        return aa * ab * poly * std::exp(-2.0 * u * r);
    };
    const QuadResult q = integrate_semi_infinite(integrand, 0.5 / r, quad);
    if (!q.converged)
        throw QuadratureFailure("free-space u-integral did not converge within budget");
    const double pref = -1.0 / (kPi * r * r);
    PotentialResult out;
    out.method = Method::free_space;
    out.r = r;
    out.value = pref * q.value;
    out.reduced_coefficient = out.value * std::pow(r, 7) / (a0a * a0b);
    out.error_estimate = std::abs(pref) * q.error;
    out.diagnostics["evaluations"] = static_cast<double>(q.evaluations);
    return out;
}

// ------------------------------------------------------------------- far zone

/// Closed-form far-zone potential near the plate. The three diagnostics are
/// the direct R^-7 term, the image Rbar^-7 term, and the mixed term.
[[nodiscard]] inline PotentialResult cp_far_zone_plate(double alpha_a0, double alpha_b0,
                                                       const PlateGeometry& g) {
    if (!(alpha_a0 > 0.0) || !(alpha_b0 > 0.0))
        throw ValidationError("static polarizabilities must be positive");
    const double r = g.r, rb = g.rbar;
    const double s2 = g.sin2_theta, s2b = g.sin2_theta_bar;
    const double r2 = r * r, rb2 = rb * rb;
    const double numer = r2 * r2 * s2 + 5.0 * r2 * r * rb * s2 + r2 * rb2 * (6.0 + s2 + s2b) +
                         5.0 * r * rb2 * rb * s2b + rb2 * rb2 * s2b;
    const double denom = r2 * r * rb2 * rb * std::pow(r + rb, 5);
    const double term_direct = -23.0 / (4.0 * kPi * std::pow(r, 7));
    const double term_image = -23.0 / (4.0 * kPi * std::pow(rb, 7));
    const double term_mixed = 8.0 / kPi * numer / denom;
    const double aa = alpha_a0 * alpha_b0;
    PotentialResult out;
    out.method = Method::far_zone_closed;
    out.r = r;
    out.rbar = rb;
    out.value = aa * (term_direct + term_image + term_mixed);
    out.reduced_coefficient = out.value * std::pow(r, 7) / aa;
    out.error_estimate = 8.0 * std::numeric_limits<double>::epsilon() * aa *
                         (std::abs(term_direct) + std::abs(term_image) + std::abs(term_mixed));
    out.diagnostics["term_direct"] = aa * term_direct;
    out.diagnostics["term_image"] = aa * term_image;
    out.diagnostics["term_mixed"] = aa * term_mixed;
    return out;
}

// ------------------------------------------------- correlation (wick and abel)

enum class RegulatorMode { wick, abel };

/// Field-correlation route: (1/pi) int dk k^3 aA(k) aB(k) S(k), by either the
/// termwise rotation to the imaginary axis (wick) or the Abel eta-ladder.
///
/// abel mode requires static polarizabilities: with dynamic alpha the damped
/// real-axis integrand has poles at the transition wavenumbers and the
/// regulated integral is not defined without a principal-value prescription.
[[nodiscard]] inline PotentialResult cp_plate_correlation(
    const AtomSpec& atom_a, const AtomSpec& atom_b, const PlateGeometry& g,
    const QuadratureConfig& quad, RegulatorMode mode,
    AlphaTreatment treatment = AlphaTreatment::static_only) {
    validate_atom(atom_a);
    validate_atom(atom_b);
    quad.validate();
    const double a0a = alpha_static(atom_a);
    const double a0b = alpha_static(atom_b);
    const ContractionExpansion ex = expand_contraction(g);

    PotentialResult out;
    out.r = g.r;
    out.rbar = g.rbar;
    out.diagnostics["cancellation_residual"] = ex.cancellation_residual;

    if (mode == RegulatorMode::wick) {
        const std::vector<ImagAxisTerm> rotated = wick_rotate(ex);
        auto integrand = [&](double u) {
            const double aa = (treatment == AlphaTreatment::dynamic) ? alpha_imag(atom_a, u) : a0a;
            const double ab = (treatment == AlphaTreatment::dynamic) ? alpha_imag(atom_b, u) : a0b;
            return aa * ab * eval_imag_axis(rotated, u);
        };
        const QuadResult q = integrate_semi_infinite(integrand, 0.5 / g.r, quad);
        if (!q.converged)
            throw QuadratureFailure("wick-rotated u-integral did not converge within budget");
        out.method = Method::correlation_wick;
        out.value = q.value / kPi;
        out.error_estimate = q.error / kPi;
        out.diagnostics["evaluations"] = static_cast<double>(q.evaluations);
    } else {
        if (treatment == AlphaTreatment::dynamic)
            throw ValidationError(
                "abel mode requires static polarizabilities (dynamic alpha has real-axis poles); "
                "use wick mode for dynamic polarizabilities");
        const double pref = a0a * a0b / kPi;
        auto damped = [&ex, pref](long double k) -> long double {
            return static_cast<long double>(pref) * ex.eval_weighted(k);
        };
        std::vector<double> etas;
        etas.reserve(quad.regulator_etas.size());
        for (double e : quad.regulator_etas) etas.push_back(e * g.r);
        const DampedLadder ladder = integrate_damped_ladder(
            damped, etas, 2.0 * g.rbar, quad.panel_points, quad.panels_per_period);
        const Extrapolation extr =
            extrapolate_eta_ladder(ladder.etas, ladder.values, ladder.noise, quad.extrapolation_order);
        out.method = Method::correlation_abel;
        out.value = extr.value;
        out.error_estimate = extr.error;
        out.diagnostics["evaluations"] = static_cast<double>(ladder.evaluations);
        out.diagnostics["eta_count"] = static_cast<double>(ladder.etas.size());
        for (std::size_t i = 0; i < extr.increments.size(); ++i)
            out.diagnostics["eta_residual_" + std::to_string(i)] = extr.increments[i];
        if (!extr.stable)
            throw ExtrapolationUnstable("eta-ladder extrapolant increments stopped decreasing");
    }
    out.reduced_coefficient = out.value * std::pow(g.r, 7) / (a0a * a0b);
    // single-mode correlation results are marked unverified; compare_methods
    // upgrades this flag when wick and abel agree
    out.diagnostics["verified"] = 0.0;
    return out;
}

// ------------------------------------------------------- double-integral route

/// Closed-form Laplace transform  g(t, rvec) = int_0^inf dk k^3 e^{-kt} tau(k, rvec):
///   g = (I - Rhat Rhat) 2(3t^2 - r^2)/(t^2 + r^2)^3 - (I - 3 Rhat Rhat) 2/(t^2 + r^2)^2.
template <typename T>
[[nodiscard]] Mat3T<T> laplace_tau_matrix(T t, const Vec3T<T>& rvec) {
    const T r = rvec.norm();
    if (!(r > T(0))) throw DegenerateSeparation("laplace_tau_matrix at zero separation");
    const Vec3T<T> rh = rvec / r;
    const T d = t * t + r * r;
    const T a = T(2) * (T(3) * t * t - r * r) / (d * d * d);
    const T b = T(-2) / (d * d);
    Mat3T<T> m = outer(rh, rh) * (-(a + T(3) * b));
    m(0, 0) += a + b;
    m(1, 1) += a + b;
    m(2, 2) += a + b;
    return m;
}

/// Half-space version with the image term reflected on its first index.
[[nodiscard]] inline Mat3 laplace_tau_plate(double t, const PlateGeometry& g) {
    return laplace_tau_matrix(t, g.r_vec) -
           matmul(reflection_matrix<double>(), laplace_tau_matrix(t, g.rbar_vec));
}

/// Dressed-state double-integral route, far zone (static polarizabilities).
/// The symmetric double k-integral is factorized through 1/(k+k') =
/// int_0^inf dt e^{-(k+k')t}, leaving a single t-integral of sum_lm g_lm(t)^2.
[[nodiscard]] inline PotentialResult cp_plate_double_integral_far(double alpha_a0, double alpha_b0,
                                                                  const PlateGeometry& g,
                                                                  const QuadratureConfig& quad) {
    if (!(alpha_a0 > 0.0) || !(alpha_b0 > 0.0))
        throw ValidationError("static polarizabilities must be positive");
    quad.validate();
    auto integrand = [&g](double t) {
        const Mat3 gp = laplace_tau_plate(t, g);
        return frobenius(gp, gp);
    };
    // the t -> 0 limit must be finite (g_lm is regular at t = 0 for R > 0)
    for (double probe : {1e-8 * g.rbar, 1e-4 * g.rbar})
        if (!std::isfinite(integrand(probe)))
            throw EndpointSingularity("t-integrand diverges as t -> 0");
    const QuadResult q = integrate_semi_infinite(integrand, g.rbar, quad);
    if (!q.converged)
        throw QuadratureFailure("t-integral did not converge within budget");
    const double pref = -alpha_a0 * alpha_b0 / (kPi * kPi);
    PotentialResult out;
    out.method = Method::double_integral_far;
    out.r = g.r;
    out.rbar = g.rbar;
    out.value = pref * q.value;
    out.reduced_coefficient = out.value * std::pow(g.r, 7) / (alpha_a0 * alpha_b0);
    out.error_estimate = std::abs(pref) * q.error;
    out.diagnostics["evaluations"] = static_cast<double>(q.evaluations);
    return out;
}

// ----------------------------------------------------------------- comparison

struct GridPoint {
    double z_a = 0.0, z_b = 0.0, rho = 0.0;
};

struct ComparePoint {
    GridPoint point;
    double r = 0.0, rbar = 0.0;
    std::vector<PotentialResult> results;           // one per successful method
    std::map<std::string, std::string> failures;    // method name -> error text
    double max_rel_deviation = 0.0;
    bool pass = false;
    bool geometry_ok = false;
};

[[nodiscard]] inline std::vector<Method> default_compare_methods() {
    return {Method::far_zone_closed, Method::correlation_wick, Method::correlation_abel,
            Method::double_integral_far};
}

/// Run the requested methods on every grid point, isolating per-point and
/// per-method failures, and report the largest pairwise relative deviation.
[[nodiscard]] inline std::vector<ComparePoint> compare_methods(
    const AtomSpec& atom_a, const AtomSpec& atom_b, const std::vector<GridPoint>& grid,
    const QuadratureConfig& quad, double tol,
    const std::vector<Method>& methods = default_compare_methods()) {
    if (grid.empty()) throw ValidationError("comparison grid must be non-empty");
    if (methods.empty()) throw ValidationError("comparison requires at least one method");
    if (!(tol > 0.0)) throw ValidationError("comparison tolerance must be positive");
    validate_atom(atom_a);
    validate_atom(atom_b);
    const double a0a = alpha_static(atom_a);
    const double a0b = alpha_static(atom_b);
    std::vector<ComparePoint> report;
    report.reserve(grid.size());
    for (const GridPoint& p : grid) {
        ComparePoint row;
        row.point = p;
        PlateGeometry g;
        try {
            g = build_geometry_cylindrical(p.z_a, p.z_b, p.rho);
            row.geometry_ok = true;
            row.r = g.r;
            row.rbar = g.rbar;
        } catch (const Error& e) {
            row.failures["geometry"] = e.what();
            report.push_back(row);
            continue;
        }
        for (Method m : methods) {
            try {
                switch (m) {
                    case Method::far_zone_closed:
                        row.results.push_back(cp_far_zone_plate(a0a, a0b, g));
                        break;
                    case Method::correlation_wick:
                        row.results.push_back(cp_plate_correlation(atom_a, atom_b, g, quad,
                                                                   RegulatorMode::wick,
                                                                   AlphaTreatment::static_only));
                        break;
                    case Method::correlation_abel:
                        row.results.push_back(cp_plate_correlation(atom_a, atom_b, g, quad,
                                                                   RegulatorMode::abel,
                                                                   AlphaTreatment::static_only));
                        break;
                    case Method::double_integral_far:
                        row.results.push_back(cp_plate_double_integral_far(a0a, a0b, g, quad));
                        break;
                    case Method::free_space:
                        row.results.push_back(cp_free_space(atom_a, atom_b, g.r, quad,
                                                            AlphaTreatment::static_only));
                        break;
                }
            } catch (const Error& e) {
                row.failures[method_name(m)] = e.what();
            }
        }
        double dev = 0.0;
        for (std::size_t i = 0; i < row.results.size(); ++i)
            for (std::size_t j = i + 1; j < row.results.size(); ++j) {
                const double vi = row.results[i].value, vj = row.results[j].value;
                const double scale = std::max({std::abs(vi), std::abs(vj), 1e-300});
                dev = std::max(dev, std::abs(vi - vj) / scale);
            }
        row.max_rel_deviation = dev;
        row.pass = row.failures.empty() && dev <= tol;
        // mutual wick/abel agreement upgrades the unverified flag
        PotentialResult* wick = nullptr;
        PotentialResult* abel = nullptr;
        for (auto& res : row.results) {
            if (res.method == Method::correlation_wick) wick = &res;
            if (res.method == Method::correlation_abel) abel = &res;
        }
        if (wick != nullptr && abel != nullptr) {
            const double scale = std::max({std::abs(wick->value), std::abs(abel->value), 1e-300});
            if (std::abs(wick->value - abel->value) / scale <= tol) {
                wick->diagnostics["verified"] = 1.0;
                abel->diagnostics["verified"] = 1.0;
            }
        }
        report.push_back(row);
    }
    return report;
}

}  // namespace cpplate
