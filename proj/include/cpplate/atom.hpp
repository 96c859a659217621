#pragma once

// Ground-state atomic polarizability built from a list of electric-dipole
// transitions. In reduced units (hbar = c = 1):
//
//   alpha(k)  = (2/3) sum_p k_p mu2_p / (k_p^2 - k^2)       (real axis)
//   alpha(iu) = (2/3) sum_p k_p mu2_p / (k_p^2 + u^2)       (imaginary axis)
//
// alpha(iu) is positive, monotonically decreasing, and completely monotone;
// alpha(0) is the static polarizability.

#include <cmath>
#include <string>
#include <vector>

#include "cpplate/errors.hpp"

namespace cpplate {

struct Transition {
    double k = 0.0;    // transition wavenumber k_p0 > 0
    double mu2 = 0.0;  // squared transition dipole moment, >= 0
};

struct AtomSpec {
    std::string label;
    std::vector<Transition> transitions;
};

/// Default guard band around each transition wavenumber for real-axis
/// evaluation: |k - k_p| < pole_guard * k_p is rejected.
inline constexpr double kDefaultPoleGuard = 1e-6;

/// Throws InvalidAtomSpec unless the spec has at least one transition, all
/// wavenumbers positive and finite, all mu2 non-negative, and at least one
/// mu2 positive.
inline void validate_atom(const AtomSpec& atom) {
    if (atom.transitions.empty())
        throw InvalidAtomSpec("atom '" + atom.label + "': no transitions");
    bool any_weight = false;
    for (const auto& t : atom.transitions) {
        if (!(t.k > 0.0) || !std::isfinite(t.k))
            throw InvalidAtomSpec("atom '" + atom.label + "': transition wavenumber must be positive and finite");
        if (!(t.mu2 >= 0.0) || !std::isfinite(t.mu2))
            throw InvalidAtomSpec("atom '" + atom.label + "': squared dipole moment must be non-negative and finite");
        any_weight = any_weight || t.mu2 > 0.0;
    }
    if (!any_weight)
        throw InvalidAtomSpec("atom '" + atom.label + "': all transition weights are zero");
}

/// Static polarizability alpha(0) = (2/3) sum_p mu2_p / k_p.
[[nodiscard]] inline double alpha_static(const AtomSpec& atom) {
    validate_atom(atom);
    double s = 0.0;
    for (const auto& t : atom.transitions) s += t.mu2 / t.k;
    return 2.0 / 3.0 * s;
}

/// Real-axis polarizability alpha(k). Throws PoleProximity when k falls
/// within the relative guard band of any transition.
[[nodiscard]] inline double alpha_dynamic(const AtomSpec& atom, double k,
                                          double pole_guard = kDefaultPoleGuard) {
    validate_atom(atom);
    for (const auto& t : atom.transitions)
        if (std::abs(k - t.k) < pole_guard * t.k)
            throw PoleProximity("atom '" + atom.label + "': k = " + std::to_string(k) +
                                " within guard band of transition at " + std::to_string(t.k));
    double s = 0.0;
    for (const auto& t : atom.transitions) s += t.k * t.mu2 / (t.k * t.k - k * k);
    return 2.0 / 3.0 * s;
}

/// Imaginary-axis polarizability alpha(iu); real, positive, decreasing in |u|.
[[nodiscard]] inline double alpha_imag(const AtomSpec& atom, double u) {
    double s = 0.0;
    for (const auto& t : atom.transitions) s += t.k * t.mu2 / (t.k * t.k + u * u);
    return 2.0 / 3.0 * s;
}

/// Long-double variant used inside cancellation-sensitive quadratures.
[[nodiscard]] inline long double alpha_imag_ld(const AtomSpec& atom, long double u) {
    long double s = 0.0L;
    for (const auto& t : atom.transitions) {
        const long double k = t.k;
        s += k * static_cast<long double>(t.mu2) / (k * k + u * u);
    }
    return 2.0L / 3.0L * s;
}

/// A one-transition atom with unit static polarizability is a convenient
/// benchmark species: alpha(0) = 1 requires mu2 = (3/2) k0.
[[nodiscard]] inline AtomSpec unit_static_atom(double k0 = 1.0, std::string label = "unit") {
    return AtomSpec{std::move(label), {Transition{k0, 1.5 * k0}}};
}

}  // namespace cpplate
