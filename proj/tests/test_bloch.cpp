#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "core/bloch.hpp"

using namespace psr;

namespace {

DerivedParams ph2_derived(double T1 = 1e3, double T2 = 10.0) {
    MediumParams m;
    m.n_cm3 = 1e21;
    m.T1_ns = T1;
    m.T2_ns = T2;
    return derive(m);
}

DerivedParams no_relax() {
    MediumParams m;
    m.n_cm3 = 1e21;
    m.T1_ns = std::numeric_limits<double>::infinity();
    m.T2_ns = std::numeric_limits<double>::infinity();
    return derive(m);
}

struct Rng {
    std::mt19937_64 gen{20260810};
    std::uniform_real_distribution<double> uni{-1.0, 1.0};
    double real() { return uni(gen); }
    cplx complex(double scale = 1.0) { return scale * cplx{uni(gen), uni(gen)}; }
    BlochVector bloch() {
        BlochVector r{real(), real(), real()};
        return r;
    }
};

}  // namespace

TEST_CASE("dark state") {
    SUBCASE("complete inversion") {
        const BlochVector r = dark_state(1.0, 0.7);
        CHECK(r.r1 == 0.0);
        CHECK(r.r2 == 0.0);
        CHECK(r.r3 == 1.0);
    }
    SUBCASE("half inversion, zero phase") {
        const BlochVector r = dark_state(0.5, 0.0);
        CHECK(r.r1 == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(r.r2 == 0.0);
        CHECK(r.r3 == 0.0);
    }
    SUBCASE("0.5% excitation") {
        const BlochVector r = dark_state(0.005, 0.0);
        CHECK(r.r3 == doctest::Approx(-0.99).epsilon(1e-15));
        CHECK(r.r1 == doctest::Approx(0.14106736).epsilon(1e-7));
        CHECK(r.r1 == doctest::Approx(std::sqrt(1.0 - r.r3 * r.r3)).epsilon(1e-12));
        CHECK(r.r2 == 0.0);
    }
    SUBCASE("always a pure state") {
        Rng rng;
        for (int i = 0; i < 200; ++i) {
            const double p = 0.5 * (rng.real() + 1.0);
            const BlochVector r = dark_state(p, 3.0 * rng.real());
            CHECK(r.norm2() == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("p out of range") {
        CHECK_THROWS_AS(dark_state(-0.01, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(dark_state(1.01, 0.0), std::invalid_argument);
    }
}

TEST_CASE("degenerate polarization RHS examples") {
    SUBCASE("zero fields, pure relaxation") {
        const DerivedParams d = ph2_derived();
        const BlochRhs rhs = bloch_rhs_degenerate({1.0, 0.0, 0.0}, {}, d);
        CHECK(rhs.dr1 == doctest::Approx(-d.inv_tau2).epsilon(1e-15));
        CHECK(rhs.dr2 == 0.0);
        CHECK(rhs.dr3 == doctest::Approx(-d.inv_tau1).epsilon(1e-15));
    }
    SUBCASE("inverted state driven by equal real fields") {
        const DerivedParams d = no_relax();
        const double e = 0.37;
        const BlochRhs rhs = bloch_rhs_degenerate({0.0, 0.0, 1.0}, {cplx{e, 0}, cplx{e, 0}}, d);
        CHECK(rhs.dr1 == 0.0);
        CHECK(rhs.dr2 == doctest::Approx(8.0 * e * e).epsilon(1e-15));
        CHECK(rhs.dr3 == 0.0);
    }
    SUBCASE("ground state with zero fields is stationary") {
        const DerivedParams d = ph2_derived();
        const BlochRhs rhs = bloch_rhs_degenerate({0.0, 0.0, -1.0}, {}, d);
        CHECK(rhs.dr1 == 0.0);
        CHECK(rhs.dr2 == 0.0);
        CHECK(rhs.dr3 == 0.0);
    }
}

TEST_CASE("norm conservation: RHS orthogonal to r without relaxation") {
    const DerivedParams d = no_relax();
    Rng rng;
    for (int i = 0; i < 500; ++i) {
        const BlochVector r = rng.bloch();
        const LocalFields f{rng.complex(), rng.complex()};
        const BlochRhs rhs = bloch_rhs_degenerate(r, f, d);
        const double dot = r.r1 * rhs.dr1 + r.r2 * rhs.dr2 + r.r3 * rhs.dr3;
        const double scale = std::abs(r.r1 * rhs.dr1) + std::abs(r.r2 * rhs.dr2) +
                             std::abs(r.r3 * rhs.dr3) + 1e-300;
        CHECK(std::abs(dot) <= 1e-13 * scale);
    }
}

TEST_CASE("field sources") {
    const DerivedParams d = ph2_derived();
    SUBCASE("population-only polarization rotates the phase, |e| preserved") {
        const LocalFields f{cplx{0.3, -0.2}, cplx{0.0, 0.0}};
        const FieldSources s = field_source_degenerate({0.0, 0.0, 0.4}, f, d);
        // d|eR|^2/dtau = 2 Re(conj(eR) srcR) vanishes identically
        CHECK((std::conj(f.eR) * s.srcR).real() == 0.0);
        CHECK(s.srcL == cplx{0.0, 0.0});
    }
    SUBCASE("RL-mixing identity") {
        Rng rng;
        for (int i = 0; i < 500; ++i) {
            const BlochVector r = rng.bloch();
            const LocalFields f{rng.complex(), rng.complex()};
            const FieldSources s = field_source_degenerate(r, f, d);
            const cplx P = f.eR * f.eL;
            const double expected = r.r1 * P.imag() + r.r2 * P.real();
            const double dR = 2.0 * (std::conj(f.eR) * s.srcR).real();
            const double dL = 2.0 * (std::conj(f.eL) * s.srcL).real();
            CHECK(dR == doctest::Approx(expected).epsilon(1e-12));
            CHECK(dL == doctest::Approx(expected).epsilon(1e-12));
        }
    }
    SUBCASE("swapping eR and eL swaps the sources") {
        Rng rng;
        for (int i = 0; i < 100; ++i) {
            const BlochVector r = rng.bloch();
            const cplx a = rng.complex(), b = rng.complex();
            const FieldSources s1 = field_source_degenerate(r, {a, b}, d);
            const FieldSources s2 = field_source_degenerate(r, {b, a}, d);
            CHECK(s1.srcR == s2.srcL);
            CHECK(s1.srcL == s2.srcR);
        }
    }
}

TEST_CASE("two-color RHS reduces bit-for-bit at the degenerate point") {
    MediumParams m;
    m.n_cm3 = 1e21;
    const DerivedParams d = derive(m);
    const TwoColorCouplings c = two_color(m.eps_eg_eV / 2, m);
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        const BlochVector r = rng.bloch();
        const LocalFields f{rng.complex(), rng.complex()};
        const BlochRhs b1 = bloch_rhs_degenerate(r, f, d);
        const BlochRhs b2 = bloch_rhs_two_color(r, f, c, d);
        CHECK(b1.dr1 == b2.dr1);
        CHECK(b1.dr2 == b2.dr2);
        CHECK(b1.dr3 == b2.dr3);
        const FieldSources s1 = field_source_degenerate(r, f, d);
        const FieldSources s2 = field_source_two_color(r, f, c, d);
        CHECK(s1.srcR == s2.srcR);
        CHECK(s1.srcL == s2.srcL);

        // grating RHS with vanishing grating amplitudes: same r0 / field parts
        GratingBloch g;
        g.r0 = r;
        const GratingRhs gr = rhs_two_color_grating(g, f, c, d);
        CHECK(gr.dr0.dr1 == b1.dr1);
        CHECK(gr.dr0.dr2 == b1.dr2);
        CHECK(gr.dr0.dr3 == b1.dr3);
        CHECK(gr.src.srcR == s1.srcR);
        CHECK(gr.src.srcL == s1.srcL);
    }
}

TEST_CASE("grating amplitudes decay at their relaxation rates in zero field") {
    const DerivedParams d = ph2_derived();
    MediumParams m;
    m.n_cm3 = 1e21;
    const TwoColorCouplings c = two_color(m.eps_eg_eV / 2, m);
    GratingBloch g;
    g.r0 = {0.1, -0.2, 0.3};
    g.rp1 = {0.05, -0.01};
    g.rp2 = {-0.02, 0.03};
    g.rp3 = {0.01, 0.02};
    const GratingRhs rhs = rhs_two_color_grating(g, {}, c, d);
    CHECK(rhs.drp1 == -g.rp1 * d.inv_tau2);
    CHECK(rhs.drp2 == -g.rp2 * d.inv_tau2);
    CHECK(rhs.drp3 == -g.rp3 * d.inv_tau1);
}

TEST_CASE("grating-free norm conservation holds for the two-color RHS") {
    MediumParams m;
    m.n_cm3 = 1e21;
    m.T1_ns = m.T2_ns = std::numeric_limits<double>::infinity();
    const DerivedParams d = derive(m);
    const TwoColorCouplings c = two_color(0.31 * m.eps_eg_eV, m);
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        const BlochVector r = rng.bloch();
        const LocalFields f{rng.complex(), rng.complex()};
        const BlochRhs rhs = bloch_rhs_two_color(r, f, c, d);
        const double dot = r.r1 * rhs.dr1 + r.r2 * rhs.dr2 + r.r3 * rhs.dr3;
        CHECK(std::abs(dot) <= 1e-12);
    }
}

TEST_CASE("single-mode propagation RHS") {
    const DerivedParams d = no_relax();
    SUBCASE("pair coherence consistency r1 = -gamma_minus r3 is preserved") {
        // if r1 = -g- r3 and r2 arbitrary, then d(r1 + g- r3)/dtau = 0
        Rng rng;
        for (int i = 0; i < 200; ++i) {
            const double r3 = rng.real(), r2 = rng.real();
            const BlochVector r{-d.gamma_minus * r3, r2, r3};
            const double e = rng.real();
            const BlochRhs rhs = bloch_rhs_single_mode(r, e, d);
            CHECK(rhs.dr1 + d.gamma_minus * rhs.dr3 == doctest::Approx(0.0).epsilon(1e-14));
        }
    }
    SUBCASE("source keeps a real envelope real and feeds on r2") {
        CHECK(field_source_single_mode({0.2, 0.6, -0.1}, 0.5) == doctest::Approx(0.15));
    }
}
