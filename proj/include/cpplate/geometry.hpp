#pragma once

// Two-atom geometry relative to a perfectly conducting plate occupying the
// z = 0 plane. All lengths are in reduced units (hbar = c = 1). The image
// construction reflects a point through the plate: sigma = diag(1, 1, -1).

#include <cmath>

#include "cpplate/errors.hpp"
#include "cpplate/linalg.hpp"

namespace cpplate {

/// Reflection through the plate plane, sigma = diag(1, 1, -1).
template <typename T>
[[nodiscard]] constexpr Vec3T<T> reflect(const Vec3T<T>& v) {
    return {v.x, v.y, -v.z};
}

/// sigma as a matrix, for contractions that act on one tensor index.
template <typename T = double>
[[nodiscard]] constexpr Mat3T<T> reflection_matrix() {
    Mat3T<T> m = Mat3T<T>::identity();
    m(2, 2) = T{-1};
    return m;
}

struct PlateGeometry {
    Vec3 r_a, r_b;          // atom positions, z >= 0
    Vec3 r_vec;             // r_b - r_a (direct separation vector)
    Vec3 rbar_vec;          // r_b - sigma r_a (separation from the image of A)
    double r = 0.0;         // |r_vec|
    double rbar = 0.0;      // |rbar_vec|; always >= r, equal iff z_a*z_b = 0
    double rho = 0.0;       // transverse separation sqrt(dx^2 + dy^2)
    double theta = 0.0;     // angle between r_vec and the plate normal, in [0, pi]
    double theta_bar = 0.0; // angle between rbar_vec and the normal, in [0, pi/2]
    double sin2_theta = 0.0;     // sin^2(theta), stored directly for stability
    double sin2_theta_bar = 0.0; // sin^2(theta_bar)
    bool on_plate = false;  // true when at least one atom sits exactly on the plate
};

/// Validate atom positions and assemble all derived quantities.
/// Throws BelowPlate if either z < 0, CoincidentAtoms if the atoms coincide.
[[nodiscard]] inline PlateGeometry build_geometry(const Vec3& r_a, const Vec3& r_b) {
    if (r_a.z < 0.0 || r_b.z < 0.0)
        throw BelowPlate("atom position below the plate: z_a = " + std::to_string(r_a.z) +
                         ", z_b = " + std::to_string(r_b.z));
    PlateGeometry g;
    g.r_a = r_a;
    g.r_b = r_b;
    g.r_vec = r_b - r_a;
    g.rbar_vec = r_b - reflect(r_a);
    g.r = g.r_vec.norm();
    if (g.r == 0.0) throw CoincidentAtoms("atoms coincide");
    g.rbar = g.rbar_vec.norm();
    g.rho = std::hypot(g.r_vec.x, g.r_vec.y);
    g.theta = std::atan2(g.rho, g.r_vec.z);
    g.theta_bar = std::atan2(g.rho, g.rbar_vec.z);
    const double st = g.rho / g.r;
    const double stb = g.rho / g.rbar;
    g.sin2_theta = st * st;
    g.sin2_theta_bar = stb * stb;
    g.on_plate = (r_a.z == 0.0) || (r_b.z == 0.0);
    return g;
}

/// Convenience: atom A on the z axis at height z_a, atom B at transverse
/// distance rho and height z_b. The canonical placement used by scans; any
/// other placement is related to it by a rotation about the plate normal.
[[nodiscard]] inline PlateGeometry build_geometry_cylindrical(double z_a, double z_b, double rho) {
    return build_geometry({0.0, 0.0, z_a}, {rho, 0.0, z_b});
}

}  // namespace cpplate
