#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/pulse.hpp"

using namespace psr;

namespace {

constexpr double pi = std::numbers::pi;

MediumParams ph2() {
    MediumParams m;
    m.n_cm3 = 1e21;
    return m;
}

// Independent quadrature oracle: Simpson integration of F against the same
// unit conversion written out from scratch.
double area_oracle(const std::vector<double>& t_ns, const std::vector<double>& F, double mu_ee,
                   double mu_gg, double mu_ge) {
    const double mu_bar = std::sqrt(mu_ge * mu_ge + 0.25 * (mu_ee - mu_gg) * (mu_ee - mu_gg));
    double integral = 0.0;  // trapezoid on the provided fine grid
    for (std::size_t i = 0; i + 1 < t_ns.size(); ++i)
        integral += 0.5 * (F[i] + F[i + 1]) * (t_ns[i + 1] - t_ns[i]);
    // W/mm^2 * ns -> natural units: x 6.2415091e9 eV/(W ns) x 100 mm^2/cm^2
    // / (hbar c = 1.97327e-5 eV cm), mu in 1e-24 cm^3
    return mu_bar * 1e-24 * integral * 6.2415091e9 * 100.0 / 1.97327e-5;
}

}  // namespace

TEST_CASE("pulse area") {
    const MediumParams m = ph2();
    SUBCASE("zero pulse") { CHECK(pulse_area(RectPulse{0.0, 5.0}, m) == 0.0); }
    SUBCASE("linearity in the flux") {
        const double a1 = pulse_area(RectPulse{1e8, 2.0}, m);
        const double a2 = pulse_area(RectPulse{2e8, 2.0}, m);
        CHECK(a2 == doctest::Approx(2.0 * a1).epsilon(1e-14));
    }
    SUBCASE("rectangular pulse against the quadrature oracle") {
        const double F = 7.6e8, T = 2.0;
        std::vector<double> t, f;
        for (int i = 0; i <= 2000; ++i) {
            t.push_back(T * i / 2000.0);
            f.push_back(F);
        }
        const double want = area_oracle(t, f, m.mu_ee, m.mu_gg, m.mu_ge);
        CHECK(pulse_area(RectPulse{F, T}, m) == doctest::Approx(want).epsilon(1e-12));
    }
    SUBCASE("pulse tuned to area pi") {
        // F*T such that theta = pi: the sampled and the closed forms agree
        const double FT = pi / (std::sqrt(0.055 * 0.055 + 0.25 * 0.07 * 0.07) * 1e-24 *
                                6.2415091e9 * 100.0 / 1.97327e-5);
        const double theta = pulse_area(RectPulse{FT / 3.0, 3.0}, m);
        CHECK(theta == doctest::Approx(pi).epsilon(1e-12));
    }
    SUBCASE("Lorentzian closed form vs sampled") {
        const LorentzianPulse lor{3e8, 0.7};
        std::vector<double> t, f;
        for (int i = 0; i <= 400000; ++i) {
            const double x = -2000.0 + i * 0.01;  // wide window for the tails
            t.push_back(x);
            f.push_back(lor.peak_W_mm2 / (1.0 + (x / lor.half_width_ns) * (x / lor.half_width_ns)));
        }
        const double closed = pulse_area(lor, m);
        const double sampled = pulse_area(SampledPulse{t, f}, m);
        CHECK(sampled == doctest::Approx(closed).epsilon(1e-3));
    }
    SUBCASE("negative flux rejected") {
        CHECK_THROWS_AS(pulse_area(RectPulse{-1.0, 1.0}, m), std::invalid_argument);
    }
}

TEST_CASE("split count") {
    SUBCASE("4 pi gives two pulses") {
        const SplitCount c = split_count(4.0 * pi);
        CHECK(c.n == 2);
        CHECK(c.remainder == doctest::Approx(0.0));
    }
    SUBCASE("pi gives none with remainder pi") {
        const SplitCount c = split_count(pi);
        CHECK(c.n == 0);
        CHECK(c.remainder == doctest::Approx(pi));
    }
    SUBCASE("composition with pulse_area") {
        const MediumParams m = ph2();
        const double theta = pulse_area(RectPulse{2.2e9, 2.0}, m);
        const SplitCount c = split_count(theta);
        CHECK(c.n == static_cast<long>(std::floor(theta / (2.0 * pi))));
        CHECK(c.remainder == doctest::Approx(theta - 2.0 * pi * c.n));
    }
    SUBCASE("negative area rejected") { CHECK_THROWS_AS(split_count(-1.0), std::invalid_argument); }
}

TEST_CASE("compression factor") {
    SUBCASE("zero area: no compression") {
        CHECK(compression_factor(0.0, 5.0, GainSign::amplifier) == doctest::Approx(1.0));
        CHECK(compression_factor(0.0, 5.0, GainSign::absorber) == doctest::Approx(1.0));
    }
    SUBCASE("direct arithmetic at sin(theta/2) = 0.1") {
        const double theta = 2.0 * std::asin(0.1);
        const double c = std::sqrt(1.0 - 0.01);
        const double want = 1.0 / ((10.0 * 0.1 + c) * (10.0 * 0.1 + c) + 0.01);
        CHECK(compression_factor(theta, 10.0, GainSign::amplifier) ==
              doctest::Approx(want).epsilon(1e-14));
        CHECK(want == doctest::Approx(0.2506).epsilon(1e-3));
    }
    SUBCASE("trigonometric periodicity in theta") {
        for (double theta : {0.3, 1.7, 4.0}) {
            for (double ax : {0.5, 3.0}) {
                CHECK(compression_factor(theta, ax, GainSign::absorber) ==
                      doctest::Approx(compression_factor(theta + 4.0 * pi, ax, GainSign::absorber))
                          .epsilon(1e-10));
            }
        }
    }
    SUBCASE("CW estimate agrees with the exact formula to first order") {
        const double ax = 7.0;
        for (double theta : {1e-3, 1e-4}) {
            for (GainSign sg : {GainSign::amplifier, GainSign::absorber}) {
                const double exact = compression_factor(theta, ax, sg);
                const double cw = compression_factor_cw(theta, ax, sg);
                // both deviate from 1 by -+ ax*theta to first order
                CHECK(cw - exact == doctest::Approx(0.0).epsilon(1e-6));
                CHECK(std::abs((cw - exact)) < 0.01 * std::abs(1.0 - exact));
            }
        }
    }
}

TEST_CASE("area equation solver") {
    MediumParams m = ph2();
    m.T1_ns = m.T2_ns = std::numeric_limits<double>::infinity();
    const DerivedParams d = derive(m);

    SUBCASE("theta = 0 is a fixed point") {
        AreaScenario s;
        s.l = 10.0;
        s.cells = 64;
        s.tau_end = 3.0;
        const AreaRecord rec = area_equation_solve(s);
        for (double th : rec.theta) CHECK(th == 0.0);
        for (double v : rec.v) CHECK(v == 0.0);
    }
    SUBCASE("intensity mapping round trip") {
        const double e2 = 0.123;
        CHECK(intensity_from_area_rate(area_rate_from_intensity(e2, d), d) ==
              doctest::Approx(e2).epsilon(1e-15));
    }
    SUBCASE("swept area bookkeeping: a weak pulse deposits its full area") {
        AreaScenario s;
        s.l = 40.0;
        s.cells = 2048;
        s.tau_end = 24.0;
        s.sign = GainSign::absorber;
        const double x0 = 6.0, w = 1.0, area = 0.01;
        const double amp = area / (w * std::sqrt(2.0 * pi));
        s.v0 = [&](double xi) {
            return amp * std::exp(-0.5 * (xi - x0) * (xi - x0) / (w * w));
        };
        const AreaRecord rec = area_equation_solve(s);
        const int probe = static_cast<int>(10.0 / rec.dxi);
        CHECK(rec.theta[probe] == doctest::Approx(area).epsilon(0.05));
    }
    SUBCASE("emergent pulse counts near 2 pi N match split_count") {
        // the splitting shows up transiently before the dispersionless
        // reshaping steepens the pulses below grid scale
        auto pulses_for = [&](double area) {
            AreaScenario s;
            s.l = 40.0;
            s.cells = 4096;
            s.tau_end = 6.0;
            s.sign = GainSign::absorber;
            const double x0 = 6.0, w = 2.0;
            const double amp = area / (w * std::sqrt(2.0 * pi));
            s.v0 = [&](double xi) {
                return amp * std::exp(-0.5 * (xi - x0) * (xi - x0) / (w * w));
            };
            return count_pulses(area_equation_solve(s).v, 0.2);
        };
        CHECK(pulses_for(2.2 * pi) == static_cast<int>(split_count(2.2 * pi).n));
        CHECK(pulses_for(4.2 * pi) == static_cast<int>(split_count(4.2 * pi).n));
    }
    SUBCASE("bad grid rejected") {
        AreaScenario s;
        s.l = 0.0;
        s.cells = 64;
        s.tau_end = 1.0;
        CHECK_THROWS_AS(area_equation_solve(s), std::invalid_argument);
    }
}
