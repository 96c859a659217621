#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "cpplate/geometry.hpp"

using namespace cpplate;

TEST_CASE("reflection through the plate", "[geometry]") {
    const Vec3 v{1.5, -2.0, 3.0};
    const Vec3 rv = reflect(v);
    CHECK(rv.x == 1.5);
    CHECK(rv.y == -2.0);
    CHECK(rv.z == -3.0);
    // involution
    const Vec3 back = reflect(rv);
    CHECK(back.z == 3.0);
    // matrix form agrees with the componentwise form
    const Mat3 s = reflection_matrix<double>();
    CHECK(s(0, 0) == 1.0);
    CHECK(s(1, 1) == 1.0);
    CHECK(s(2, 2) == -1.0);
    CHECK(s(0, 1) == 0.0);
}

TEST_CASE("stacked geometry derived quantities", "[geometry]") {
    // atoms on the normal through the origin: R = 1, image separation = 3
    const PlateGeometry g = build_geometry({0, 0, 1}, {0, 0, 2});
    CHECK(g.r == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(g.rbar == Catch::Approx(3.0).epsilon(1e-15));
    CHECK(g.rho == 0.0);
    CHECK(g.sin2_theta == 0.0);
    CHECK(g.sin2_theta_bar == 0.0);
    CHECK_FALSE(g.on_plate);
}

TEST_CASE("side-by-side geometry", "[geometry]") {
    // equal heights h, transverse separation rho: Rbar = sqrt(rho^2 + 4h^2)
    const PlateGeometry g = build_geometry({0, 0, 1}, {2, 0, 1});
    CHECK(g.r == Catch::Approx(2.0).epsilon(1e-15));
    CHECK(g.rbar == Catch::Approx(std::sqrt(8.0)).epsilon(1e-15));
    CHECK(g.sin2_theta == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(g.sin2_theta_bar == Catch::Approx(4.0 / 8.0).epsilon(1e-14));
}

TEST_CASE("on-plate atoms collapse image onto direct separation", "[geometry]") {
    const PlateGeometry g = build_geometry({0, 0, 0}, {1, 0, 0});
    CHECK(g.on_plate);
    CHECK(g.r == 1.0);
    CHECK(g.rbar == 1.0);
    CHECK(g.rbar_vec.x == g.r_vec.x);
    CHECK(g.rbar_vec.z == g.r_vec.z);
}

TEST_CASE("geometry validation errors", "[geometry]") {
    CHECK_THROWS_AS(build_geometry({0, 0, -0.1}, {0, 0, 1}), BelowPlate);
    CHECK_THROWS_AS(build_geometry({0, 0, 1}, {0, 0, -2}), BelowPlate);
    CHECK_THROWS_AS(build_geometry({0.5, 0.5, 1}, {0.5, 0.5, 1}), CoincidentAtoms);
}

TEST_CASE("cylindrical builder matches explicit positions", "[geometry]") {
    const PlateGeometry g1 = build_geometry_cylindrical(0.7, 1.9, 1.3);
    const PlateGeometry g2 = build_geometry({0, 0, 0.7}, {1.3, 0, 1.9});
    CHECK(g1.r == g2.r);
    CHECK(g1.rbar == g2.rbar);
    CHECK(g1.sin2_theta == g2.sin2_theta);
}

TEST_CASE("transverse identity and image ordering over random geometries", "[geometry][property]") {
    // R sin(theta) and Rbar sin(theta_bar) are both the transverse separation,
    // and the image path is never shorter than the direct one
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Vec3 ra{4.0 * unif(rng) - 2.0, 4.0 * unif(rng) - 2.0, 3.0 * unif(rng)};
        const Vec3 rb{4.0 * unif(rng) - 2.0, 4.0 * unif(rng) - 2.0, 3.0 * unif(rng)};
        PlateGeometry g;
        try {
            g = build_geometry(ra, rb);
        } catch (const ValidationError&) {
            continue;
        }
        const double lhs = g.r * std::sqrt(g.sin2_theta);
        const double rhs = g.rbar * std::sqrt(g.sin2_theta_bar);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(g.r, g.rbar));
        REQUIRE(g.rbar >= g.r);
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("horizontal translation invariance", "[geometry][property]") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    for (int i = 0; i < 50; ++i) {
        const Vec3 ra{unif(rng), unif(rng), 1.0 + 0.5 * std::abs(unif(rng))};
        const Vec3 rb{unif(rng), unif(rng), 0.5 + 0.5 * std::abs(unif(rng))};
        const Vec3 shift{unif(rng), unif(rng), 0.0};
        const PlateGeometry g1 = build_geometry(ra, rb);
        const PlateGeometry g2 = build_geometry(ra + shift, rb + shift);
        CHECK(g1.r == Catch::Approx(g2.r).epsilon(1e-13));
        CHECK(g1.rbar == Catch::Approx(g2.rbar).epsilon(1e-13));
    }
}
