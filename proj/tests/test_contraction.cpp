#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "cpplate/contraction.hpp"
#include "cpplate/geometry.hpp"
#include "cpplate/quadrature.hpp"
#include "cpplate/tensors.hpp"

using namespace cpplate;

namespace {

// envelope sum_t sum_n (|cos c| + |sin c|) k^n, a safe scale for comparisons
double expansion_scale(const ContractionExpansion& ex, double k) {
    double scale = 0.0;
    for (const auto& t : ex.terms) {
        double kn = 1.0;
        for (int n = 0; n < 5; ++n, kn *= k)
            scale += (std::abs(t.cos_coeff[static_cast<std::size_t>(n)]) +
                      std::abs(t.sin_coeff[static_cast<std::size_t>(n)])) *
                     kn;
    }
    return scale;
}

}  // namespace

TEST_CASE("phase expansion reproduces the direct tensor contraction", "[contraction][property]") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> zd(0.2, 2.5), rd(0.0, 3.0);
    for (int trial = 0; trial < 25; ++trial) {
        const double rho = trial % 5 == 0 ? 0.0 : rd(rng);
        const double za = zd(rng);
        double zb = zd(rng);
        if (rho == 0.0 && std::abs(zb - za) < 0.1) zb = za + 0.8;
        const PlateGeometry g = build_geometry_cylindrical(za, zb, rho);
        const ContractionExpansion ex = expand_contraction(g);
        CHECK(ex.cancellation_residual < 1e-12);
        for (double k : {0.3, 1.0, 2.7, 6.3}) {
            const double direct = k * k * k * contraction_direct(k, g);
            const double expanded = ex.eval_weighted(k);
            INFO("za=" << za << " zb=" << zb << " rho=" << rho << " k=" << k);
            CHECK(std::abs(expanded - direct) <= 1e-12 * expansion_scale(ex, k));
        }
    }
}

TEST_CASE("surviving phases are 2R, R+Rbar, 2Rbar in ascending order", "[contraction]") {
    const PlateGeometry g = build_geometry_cylindrical(0.7, 1.4, 1.1);
    const ContractionExpansion ex = expand_contraction(g);
    REQUIRE(ex.terms.size() == 3);
    CHECK(ex.terms[0].phase == 2.0 * g.r);
    CHECK(ex.terms[1].phase == g.r + g.rbar);
    CHECK(ex.terms[2].phase == 2.0 * g.rbar);
    CHECK(ex.terms[0].phase < ex.terms[1].phase);
    CHECK(ex.terms[1].phase < ex.terms[2].phase);
}

TEST_CASE("on-plate geometry collapses to a single phase", "[contraction]") {
    const PlateGeometry g = build_geometry_cylindrical(0.0, 0.0, 1.6);
    REQUIRE(g.on_plate);
    const ContractionExpansion ex = expand_contraction(g);
    REQUIRE(ex.terms.size() == 1);
    CHECK(ex.terms[0].phase == 2.0 * g.r);

    // with both atoms on the plate only the doubled normal rows survive, so
    // S(k) is four times the free-kernel normal-row overlap
    for (double k : {0.4, 1.3, 3.1}) {
        const Mat3 t = tau_matrix(k, g.r_vec);
        const Mat3 v = dipole_matrix(k, g.r_vec);
        double row_overlap = 0.0;
        for (int j = 0; j < 3; ++j) row_overlap += t(2, j) * v(2, j);
        const double direct = contraction_direct(k, g);
        CHECK(direct == Catch::Approx(4.0 * row_overlap).margin(1e-14 * std::abs(direct) + 1e-300));
        CHECK(ex.eval_weighted(k) ==
              Catch::Approx(k * k * k * direct).margin(1e-12 * expansion_scale(ex, k)));
    }
}

TEST_CASE("expansion is deterministic", "[contraction]") {
    const PlateGeometry g = build_geometry_cylindrical(0.9, 1.7, 0.6);
    const ContractionExpansion a = expand_contraction(g);
    const ContractionExpansion b = expand_contraction(g);
    REQUIRE(a.terms.size() == b.terms.size());
    for (std::size_t i = 0; i < a.terms.size(); ++i) {
        CHECK(a.terms[i].phase == b.terms[i].phase);
        for (int n = 0; n < 5; ++n) {
            CHECK(a.terms[i].cos_coeff[static_cast<std::size_t>(n)] ==
                  b.terms[i].cos_coeff[static_cast<std::size_t>(n)]);
            CHECK(a.terms[i].sin_coeff[static_cast<std::size_t>(n)] ==
                  b.terms[i].sin_coeff[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("rotation applies the alternating phase rule termwise", "[contraction]") {
    ContractionExpansion ex;
    TrigPhasePoly t;
    t.phase = 1.5;
    t.cos_coeff = {0.0, 2.0, 0.0, 5.0, 0.0};   // odd powers only
    t.sin_coeff = {7.0, 0.0, -3.0, 0.0, 11.0};  // even powers only
    ex.terms.push_back(t);
    const std::vector<ImagAxisTerm> rotated = wick_rotate(ex);
    REQUIRE(rotated.size() == 1);
    CHECK(rotated[0].phase == 1.5);
    // k cos -> -u, k^3 cos -> +u^3 ; sin -> +1, k^2 sin -> -(-3) u^2, k^4 sin -> +u^4
    CHECK(rotated[0].upoly[0] == 7.0);
    CHECK(rotated[0].upoly[1] == -2.0);
    CHECK(rotated[0].upoly[2] == 3.0);
    CHECK(rotated[0].upoly[3] == 5.0);
    CHECK(rotated[0].upoly[4] == 11.0);
}

TEST_CASE("rotation rejects wrong-parity monomials", "[contraction]") {
    ContractionExpansion even_cos;
    TrigPhasePoly t1;
    t1.phase = 1.0;
    t1.cos_coeff[0] = 1.0;  // k^0 cos: even power under cosine
    even_cos.terms.push_back(t1);
    CHECK_THROWS_AS(wick_rotate(even_cos), NumericalError);

    ContractionExpansion odd_sin;
    TrigPhasePoly t2;
    t2.phase = 1.0;
    t2.sin_coeff[1] = 1.0;  // k^1 sin: odd power under sine
    odd_sin.terms.push_back(t2);
    CHECK_THROWS_AS(wick_rotate(odd_sin), NumericalError);
}

TEST_CASE("geometry expansions always rotate cleanly", "[contraction][property]") {
    std::mt19937 rng(717);
    std::uniform_real_distribution<double> zd(0.2, 2.0), rd(0.2, 2.5);
    for (int trial = 0; trial < 20; ++trial) {
        const PlateGeometry g = build_geometry_cylindrical(zd(rng), zd(rng), rd(rng));
        CHECK_NOTHROW(wick_rotate(expand_contraction(g)));
    }
}

TEST_CASE("imaginary-axis evaluation matches its polynomial form", "[contraction]") {
    std::vector<ImagAxisTerm> terms(1);
    terms[0].phase = 2.0;
    terms[0].upoly = {1.0, 0.0, 3.0, 0.0, -0.5};
    for (double u : {0.0, 0.4, 1.7}) {
        const double expected = (1.0 + 3.0 * u * u - 0.5 * std::pow(u, 4)) * std::exp(-2.0 * u);
        CHECK(eval_imag_axis(terms, u) == Catch::Approx(expected).margin(1e-15));
    }
}

TEST_CASE("rotated and regulated routes integrate to the same number", "[contraction][property]") {
    // int_0^inf k^3 S(k) dk (Abel-regulated) equals int_0^inf W(u) du after
    // rotation; this is the engine identity behind the two correlation methods
    const PlateGeometry g = build_geometry_cylindrical(0.8, 1.3, 0.9);
    const ContractionExpansion ex = expand_contraction(g);
    const std::vector<ImagAxisTerm> rotated = wick_rotate(ex);

    QuadratureConfig quad;
    const QuadResult along_imag = integrate_semi_infinite(
        [&rotated](double u) { return eval_imag_axis(rotated, u); }, 0.5 / g.r, quad);
    REQUIRE(along_imag.converged);

    std::vector<double> etas;
    for (double e : QuadratureConfig::default_regulator_etas()) etas.push_back(e * g.r);
    const DampedLadder lad = integrate_damped_ladder(
        [&ex](long double k) { return ex.eval_weighted(k); }, etas, 2.0 * g.rbar, 12, 2.0);
    const Extrapolation limit = extrapolate_eta_ladder(lad.etas, lad.values, lad.noise, 4);
    CHECK(limit.stable);
    CHECK(limit.value == Catch::Approx(along_imag.value).epsilon(1e-6));
    CHECK(std::abs(limit.value - along_imag.value) <= limit.error + along_imag.error);
}