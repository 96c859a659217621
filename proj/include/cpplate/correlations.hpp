#pragma once

// Equal-time spatial correlations of the transverse displacement field near a
// perfectly conducting plate, at fixed wavenumber k:
//
//   density(k) = 2 pi k [ tau(k R_vec) - sigma tau(k Rbar_vec) ]   (hbar = c = 1)
//
// plus the per-direction polarization-sum kernel whose angular average over
// khat reproduces the bracketed combination.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "cpplate/errors.hpp"
#include "cpplate/geometry.hpp"
#include "cpplate/linalg.hpp"
#include "cpplate/tensors.hpp"

namespace cpplate {

struct CorrelationDensity {
    double k = 0.0;
    PlateGeometry geometry;
    InteractionTensor tensor;  // 2 pi k * tau_plate(k, geometry)
};

/// Per-direction kernel
///   [delta - khat khat] e^{i khat.(r - r')} - sigma [delta - khat khat] e^{i khat.(r - sigma r')}
/// with positions already scaled by the wavenumber (phases are khat . k r).
/// Its average over the unit sphere of khat is tau_plate.
[[nodiscard]] inline CMat3 polarization_sum(const Vec3& k_hat, const Vec3& r,
                                            const Vec3& r_prime) {
    if (std::abs(k_hat.norm() - 1.0) > 1e-12)
        throw NonUnitDirection("polarization_sum requires |k_hat| = 1 within 1e-12");
    Mat3 proj = outer(k_hat, k_hat) * (-1.0);
    proj(0, 0) += 1.0;
    proj(1, 1) += 1.0;
    proj(2, 2) += 1.0;
    const Mat3 mirrored = matmul(reflection_matrix<double>(), proj);
    const std::complex<double> ph_direct =
        std::exp(std::complex<double>(0.0, dot(k_hat, r - r_prime)));
    const std::complex<double> ph_image =
        std::exp(std::complex<double>(0.0, dot(k_hat, r - reflect(r_prime))));
    CMat3 out;
    for (std::size_t i = 0; i < 9; ++i)
        out.a[i] = ph_direct * proj.a[i] - ph_image * mirrored.a[i];
    return out;
}

/// Angular-reduced spectral density at wavenumber k for a plate geometry.
[[nodiscard]] inline CorrelationDensity correlation_density(double k, const PlateGeometry& g) {
    if (!(k > 0.0)) throw ValidationError("correlation_density requires k > 0");
    const double two_pi = 6.28318530717958647692;
    CorrelationDensity out;
    out.k = k;
    out.geometry = g;
    InteractionTensor t = tau_plate(k, g);
    t.m = t.m * (two_pi * k);
    out.tensor = t;
    return out;
}

struct CorrelationScanConfig {
    std::vector<double> k;
    std::vector<double> z_a;
    std::vector<double> z_b;
    std::vector<double> rho;
};

struct CorrelationRow {
    double k = 0.0, z_a = 0.0, z_b = 0.0, rho = 0.0;
    Mat3 tensor;
};

/// Scan the correlation density over a rectangular grid. Row order is
/// lexicographic in (k, z_a, z_b, rho) grid indices.
[[nodiscard]] inline std::vector<CorrelationRow> correlation_scan(
    const CorrelationScanConfig& cfg) {
    if (cfg.k.empty() || cfg.z_a.empty() || cfg.z_b.empty() || cfg.rho.empty())
        throw InvalidGrid("correlation scan requires non-empty k, z_a, z_b, rho axes");
    for (double k : cfg.k)
        if (!(k > 0.0)) throw InvalidGrid("correlation scan requires k > 0");
    std::vector<CorrelationRow> rows;
    rows.reserve(cfg.k.size() * cfg.z_a.size() * cfg.z_b.size() * cfg.rho.size());
    for (double k : cfg.k)
        for (double za : cfg.z_a)
            for (double zb : cfg.z_b)
                for (double rho : cfg.rho) {
                    const PlateGeometry g = build_geometry_cylindrical(za, zb, rho);
                    CorrelationRow row;
                    row.k = k;
                    row.z_a = za;
                    row.z_b = zb;
                    row.rho = rho;
                    row.tensor = correlation_density(k, g).tensor.m;
                    rows.push_back(row);
                }
    return rows;
}

}  // namespace cpplate
