#include "core/bloch.hpp"

#include <cmath>
#include <stdexcept>

namespace psr {

namespace {

constexpr cplx I{0.0, 1.0};

// Shared polarization kernel.  The degenerate form is the special case
// gm1 == gm2; keeping one code path makes the reduction exact.
inline BlochRhs bloch_kernel(const BlochVector& r, const LocalFields& f, double gm1, double gm2,
                             double inv_tau1, double inv_tau2) {
    const double aR = std::norm(f.eR);
    const double aL = std::norm(f.eL);
    const cplx P = f.eR * f.eL;
    const double reP = P.real();
    const double imP = P.imag();
    const double mix = 4.0 * (gm1 * aR + gm2 * aL);
    BlochRhs out;
    out.dr1 = mix * r.r2 + 8.0 * imP * r.r3 - r.r1 * inv_tau2;
    out.dr2 = -mix * r.r1 + 8.0 * reP * r.r3 - r.r2 * inv_tau2;
    out.dr3 = -8.0 * (reP * r.r2 + imP * r.r1) - (r.r3 + 1.0) * inv_tau1;
    return out;
}

inline FieldSources source_kernel(const BlochVector& r, const LocalFields& f, double a1, double a2,
                                  double a12, double a21, double gp1, double gp2, double gm1,
                                  double gm2) {
    const cplx coh{r.r1, -r.r2};  // r1 - i r2
    FieldSources out;
    out.srcR = I * (0.5 * a1) * (gp1 + gm1 * r.r3) * f.eR + I * (0.5 * a12) * coh * std::conj(f.eL);
    out.srcL = I * (0.5 * a2) * (gp2 + gm2 * r.r3) * f.eL + I * (0.5 * a21) * coh * std::conj(f.eR);
    return out;
}

}  // namespace

BlochVector dark_state(double p, double theta0_rad) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("dark_state: p must lie in [0, 1]");
    const double amp = 2.0 * std::sqrt(p * (1.0 - p));
    BlochVector r;
    r.r1 = amp * std::cos(theta0_rad);
    r.r2 = amp * std::sin(theta0_rad);
    r.r3 = 2.0 * p - 1.0;
    return r;
}

BlochRhs bloch_rhs_degenerate(const BlochVector& r, const LocalFields& f, const DerivedParams& d) {
    return bloch_kernel(r, f, d.gamma_minus, d.gamma_minus, d.inv_tau1, d.inv_tau2);
}

FieldSources field_source_degenerate(const BlochVector& r, const LocalFields& f,
                                     const DerivedParams& d) {
    return source_kernel(r, f, 1.0, 1.0, 1.0, 1.0, d.gamma_plus, d.gamma_plus, d.gamma_minus,
                         d.gamma_minus);
}

BlochRhs bloch_rhs_two_color(const BlochVector& r, const LocalFields& f,
                             const TwoColorCouplings& c, const DerivedParams& d) {
    return bloch_kernel(r, f, c.gamma_m_1, c.gamma_m_2, d.inv_tau1, d.inv_tau2);
}

FieldSources field_source_two_color(const BlochVector& r, const LocalFields& f,
                                    const TwoColorCouplings& c, const DerivedParams& d) {
    (void)d;
    return source_kernel(r, f, c.a1, c.a2, c.a12, c.a21, c.gamma_p_1, c.gamma_p_2, c.gamma_m_1,
                         c.gamma_m_2);
}

GratingRhs rhs_two_color_grating(const GratingBloch& g, const LocalFields& f,
                                 const TwoColorCouplings& c, const DerivedParams& d) {
    GratingRhs out;
    out.dr0 = bloch_kernel(g.r0, f, c.gamma_m_1, c.gamma_m_2, d.inv_tau1, d.inv_tau2);
    out.src = source_kernel(g.r0, f, c.a1, c.a2, c.a12, c.a21, c.gamma_p_1, c.gamma_p_2,
                            c.gamma_m_1, c.gamma_m_2);

    const cplx eR = f.eR;
    const cplx eL = f.eL;
    const cplx P = eR * eL;
    const double reP = P.real();
    const double imP = P.imag();
    const double aR = std::norm(eR);
    const double aL = std::norm(eL);
    const double mix = 4.0 * (c.gamma_m_1 * aR + c.gamma_m_2 * aL);

    const cplx eR2 = eR * eR;
    const cplx eL2 = eL * eL;
    const cplx cR2 = std::conj(eR2);
    const cplx cL2 = std::conj(eL2);
    const cplx q = eR * std::conj(eL);  // pairs with r^{(-)} = conj(r^{(+)})

    // r^{(0)} contributions from the grating amplitudes come in conjugate
    // pairs; take the real combination explicitly (gamma_m_12 == gamma_m_21
    // by construction of TwoColorCouplings).
    out.dr0.dr1 += 8.0 * c.gamma_m_12 * (q * std::conj(g.rp2)).real() +
                   4.0 * ((eL2 - cR2) * g.rp3).imag();
    out.dr0.dr2 += -8.0 * c.gamma_m_12 * (q * std::conj(g.rp1)).real() +
                   4.0 * ((eL2 + cR2) * g.rp3).real();
    out.dr0.dr3 += -4.0 * ((eL2 - cR2) * g.rp1).imag() - 4.0 * ((eL2 + cR2) * g.rp2).real();

    constexpr cplx I2{0.0, 2.0};
    out.drp1 = 4.0 * c.gamma_m_12 * q * g.r0.r2 - I2 * (eR2 - cL2) * g.r0.r3 + mix * g.rp2 +
               8.0 * imP * g.rp3 - g.rp1 * d.inv_tau2;
    out.drp2 = -4.0 * c.gamma_m_12 * q * g.r0.r1 + 2.0 * (eR2 + cL2) * g.r0.r3 - mix * g.rp1 +
               8.0 * reP * g.rp3 - g.rp2 * d.inv_tau2;
    out.drp3 = I2 * g.r0.r1 * (eR2 - cL2) - 2.0 * g.r0.r2 * (eR2 + cL2) -
               8.0 * (reP * g.rp2 + imP * g.rp1) - g.rp3 * d.inv_tau1;

    out.src.srcR += I * 0.5 * c.gamma_m_12 * g.rp3 * eL +
                    I * 0.5 * (g.rp1 - I * g.rp2) * std::conj(eR);
    out.src.srcL += I * 0.5 * c.gamma_m_21 * std::conj(g.rp3) * eR +
                    I * 0.5 * (std::conj(g.rp1) - I * std::conj(g.rp2)) * std::conj(eL);
    return out;
}

BlochRhs bloch_rhs_single_mode(const BlochVector& r, double e, const DerivedParams& d) {
    // Real envelope: Im(e^2) = 0, |e|^2 = Re(e^2) = e^2.
    const double e2 = e * e;
    BlochRhs out;
    out.dr1 = 4.0 * d.gamma_minus * r.r2 * e2 - r.r1 * d.inv_tau2;
    out.dr2 = 4.0 * r.r3 * e2 - 4.0 * d.gamma_minus * r.r1 * e2 - r.r2 * d.inv_tau2;
    out.dr3 = -4.0 * r.r2 * e2 - (r.r3 + 1.0) * d.inv_tau1;
    return out;
}

double field_source_single_mode(const BlochVector& r, double e) { return 0.5 * r.r2 * e; }

}  // namespace psr
