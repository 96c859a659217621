#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "cpplate/atom.hpp"

using namespace cpplate;

TEST_CASE("atom validation rules", "[atom]") {
    CHECK_THROWS_AS(validate_atom(AtomSpec{"empty", {}}), InvalidAtomSpec);
    CHECK_THROWS_AS(validate_atom(AtomSpec{"bad-k", {{0.0, 1.0}}}), InvalidAtomSpec);
    CHECK_THROWS_AS(validate_atom(AtomSpec{"neg-k", {{-1.0, 1.0}}}), InvalidAtomSpec);
    CHECK_THROWS_AS(validate_atom(AtomSpec{"bad-mu", {{1.0, 0.0}}}), InvalidAtomSpec);
    CHECK_NOTHROW(validate_atom(AtomSpec{"ok", {{1.0, 1.0}, {2.0, 3.0}}}));
}

TEST_CASE("static polarizability of a two-transition atom", "[atom]") {
    // alpha(0) = (2/3)(mu1^2/k1 + mu2^2/k2) = (2/3)(1/1 + 3/2) = 5/3
    const AtomSpec atom{"two", {{1.0, 1.0}, {2.0, 3.0}}};
    CHECK(alpha_static(atom) == Catch::Approx(5.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("unit static atom normalizes alpha(0) to one", "[atom]") {
    for (double k0 : {0.5, 1.0, 3.0}) {
        const AtomSpec atom = unit_static_atom(k0);
        CHECK(alpha_static(atom) == Catch::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("real-axis polarizability and pole guard", "[atom]") {
    // single transition k0 = 1, mu2 = 1.5: alpha(k) = 1/(1 - k^2)
    const AtomSpec atom = unit_static_atom(1.0);
    CHECK(alpha_dynamic(atom, 0.5) == Catch::Approx(1.0 / 0.75).epsilon(1e-14));
    CHECK(alpha_dynamic(atom, 2.0) == Catch::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK_THROWS_AS(alpha_dynamic(atom, 1.0 + 1e-8), PoleProximity);
    CHECK_THROWS_AS(alpha_dynamic(atom, 1.0 - 1e-8), PoleProximity);
    // the guard band is relative to the transition wavenumber
    CHECK_NOTHROW(alpha_dynamic(atom, 1.0 + 1e-5));
}

TEST_CASE("imaginary-axis polarizability", "[atom]") {
    // single transition: alpha(iu) = 1/(1 + u^2); even, positive, decaying
    const AtomSpec atom = unit_static_atom(1.0);
    CHECK(alpha_imag(atom, 0.0) == Catch::Approx(alpha_static(atom)).epsilon(1e-15));
    CHECK(alpha_imag(atom, 1.0) == Catch::Approx(0.5).epsilon(1e-14));
    CHECK(alpha_imag(atom, 3.0) == Catch::Approx(0.1).epsilon(1e-14));
    for (double u : {0.3, 1.7, 12.0}) {
        CHECK(alpha_imag(atom, u) > 0.0);
        CHECK(alpha_imag(atom, u) == alpha_imag(atom, -u));
        CHECK(alpha_imag(atom, u) < alpha_imag(atom, 0.5 * u));
    }
    // long-double variant agrees with the double one
    CHECK(static_cast<double>(alpha_imag_ld(atom, 0.7L)) ==
          Catch::Approx(alpha_imag(atom, 0.7)).epsilon(1e-15));
}
