#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "core/params.hpp"

using namespace psr;

namespace {
const double inf = std::numeric_limits<double>::infinity();

MediumParams ph2(double n_cm3) {
    MediumParams m;
    m.n_cm3 = n_cm3;
    return m;  // defaults are the pH2 X v=1 -> 0 values
}
}  // namespace

TEST_CASE("derived units at n = 1e20 cm^-3") {
    const DerivedParams d = derive(ph2(1e20));
    // ~14 cm and ~0.5 ns; exact values from the unit conversion
    CHECK(d.length_unit_cm == doctest::Approx(13.79909091).epsilon(1e-9));
    CHECK(d.time_unit_ns == doctest::Approx(0.4602919013).epsilon(1e-9));
    CHECK(d.length_unit_cm == doctest::Approx(14.0).epsilon(0.05));
    CHECK(d.alpha_m_cm == doctest::Approx(1.0 / d.length_unit_cm).epsilon(1e-12));
    // 2 c eps_eg n: 4.995e9 W/mm^2 at this density
    CHECK(d.flux_unit_W_mm2 == doctest::Approx(4.9953e9).epsilon(1e-4));
}

TEST_CASE("density scaling: 1/n in size, linear in flux") {
    const DerivedParams a = derive(ph2(1e20));
    const DerivedParams b = derive(ph2(1e21));
    CHECK(b.length_unit_cm == doctest::Approx(a.length_unit_cm / 10).epsilon(1e-13));
    CHECK(b.time_unit_ns == doctest::Approx(a.time_unit_ns / 10).epsilon(1e-13));
    CHECK(b.flux_unit_W_mm2 == doctest::Approx(10 * a.flux_unit_W_mm2).epsilon(1e-13));
    // doubling n exactly halves the units
    const DerivedParams c = derive(ph2(2e20));
    CHECK(c.length_unit_cm == doctest::Approx(a.length_unit_cm / 2).epsilon(1e-14));
    CHECK(c.flux_unit_W_mm2 == doctest::Approx(2 * a.flux_unit_W_mm2).epsilon(1e-14));
}

TEST_CASE("gamma factors for the pH2 couplings") {
    const DerivedParams d = derive(ph2(1e21));
    CHECK(d.gamma_plus == doctest::Approx(15.1818181818).epsilon(1e-10));
    CHECK(d.gamma_minus == doctest::Approx(0.63636363636).epsilon(1e-10));
    CHECK(d.gamma_plus > d.gamma_minus);
    CHECK(d.gamma_minus > 0.0);
}

TEST_CASE("dimensionless relaxation times") {
    MediumParams m = ph2(1e21);
    m.T2_ns = 10.0;
    m.T1_ns = 1e3;
    const DerivedParams d = derive(m);
    CHECK(d.tau2 == doctest::Approx(217.2534423).epsilon(1e-9));
    CHECK(d.tau1 == doctest::Approx(21725.34423).epsilon(1e-9));
    CHECK(d.inv_tau2 == doctest::Approx(1.0 / d.tau2));

    m.T1_ns = inf;
    const DerivedParams di = derive(m);
    CHECK(std::isinf(di.tau1));
    CHECK(di.inv_tau1 == 0.0);
}

TEST_CASE("derive rejects invalid media") {
    CHECK_THROWS_AS(derive(ph2(-1.0)), std::invalid_argument);
    CHECK_THROWS_AS(derive(ph2(0.0)), std::invalid_argument);
    MediumParams m = ph2(1e20);
    m.eps_eg_eV = 0.0;
    CHECK_THROWS_AS(derive(m), std::invalid_argument);
    m = ph2(1e20);
    m.mu_ge = -0.1;
    CHECK_THROWS_AS(derive(m), std::invalid_argument);
    m = ph2(1e20);
    m.T1_ns = 4.0;  // violates T1 > T2/2
    m.T2_ns = 10.0;
    CHECK_THROWS_AS(derive(m), std::invalid_argument);
    m.T1_ns = 5.0;  // boundary is rejected too
    CHECK_THROWS_AS(derive(m), std::invalid_argument);
    m.T1_ns = 5.1;
    CHECK_NOTHROW(derive(m));
    m.T2_ns = inf;  // infinite T2 needs infinite T1
    CHECK_THROWS_AS(derive(m), std::invalid_argument);
    m.T1_ns = inf;
    CHECK_NOTHROW(derive(m));
}

TEST_CASE("flux <-> amplitude conversions") {
    const DerivedParams d = derive(ph2(1e21));
    // independent arithmetic: 2 * 0.52 eV * 1e21 cm^-3 * c, in W/mm^2
    const double unit = 2.0 * 0.52 * 1.602176634e-19 * 1e21 * 2.9979e10 / 100.0;
    CHECK(d.flux_unit_W_mm2 == doctest::Approx(unit).epsilon(1e-13));
    CHECK(flux_to_intensity(unit, d) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(flux_to_amplitude(0.0, d) == 0.0);
    CHECK(flux_to_intensity(1e-6, d) == doctest::Approx(1e-6 / unit).epsilon(1e-13));
    CHECK_THROWS_AS(flux_to_amplitude(-1.0, d), std::invalid_argument);

    // round trip is exact to floating precision
    for (double p : {1e-12, 2.7e-3, 1.0, 3.4e5, 9.9e8}) {
        const double e = flux_to_amplitude(p, d);
        CHECK(amplitude_to_flux(e, d) == doctest::Approx(p).epsilon(1e-15));
    }
}

TEST_CASE("two-color couplings") {
    const MediumParams m = ph2(1e21);
    const double eps = m.eps_eg_eV;

    SUBCASE("degenerate point gives unit weights exactly") {
        const TwoColorCouplings c = two_color(eps / 2, m);
        CHECK(c.a1 == 1.0);
        CHECK(c.a2 == 1.0);
        CHECK(c.a12 == 1.0);
        CHECK(c.a21 == 1.0);
    }
    SUBCASE("quarter split") {
        const TwoColorCouplings c = two_color(eps / 4, m);
        CHECK(c.a1 == doctest::Approx(0.5).epsilon(1e-14));
        CHECK(c.a2 == doctest::Approx(1.5).epsilon(1e-14));
        CHECK(c.a12 == doctest::Approx(4.5).epsilon(1e-14));
        CHECK(c.a21 == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    }
    SUBCASE("mirror split omega -> eps - omega swaps the weights") {
        for (double f : {0.1, 0.25, 0.37, 0.44}) {
            const TwoColorCouplings c1 = two_color(f * eps, m);
            const TwoColorCouplings c2 = two_color(eps - f * eps, m);
            CHECK(c1.a1 == doctest::Approx(c2.a2).epsilon(1e-13));
            CHECK(c1.a12 == doctest::Approx(c2.a21).epsilon(1e-13));
            // the dimensionless unit is the same for both members of a pair
            CHECK(c1.gamma_p_1 == c2.gamma_p_1);
        }
    }
    SUBCASE("out-of-range omega rejected") {
        CHECK_THROWS_AS(two_color(0.0, m), std::invalid_argument);
        CHECK_THROWS_AS(two_color(eps, m), std::invalid_argument);
        CHECK_THROWS_AS(two_color(-0.1, m), std::invalid_argument);
    }
}
