#include "core/soliton.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace psr {

namespace {

constexpr double pi = std::numbers::pi;

struct PhaseCoeffs {
    double e02, tau1, tau2, gm, gp;
    double A;  // 16 g-^2 e0^4 tau2^2
    double B;  // 16 e0^4 tau1 tau2
};

PhaseCoeffs coeffs(double e0, const DerivedParams& d) {
    if (std::isinf(d.tau1) || std::isinf(d.tau2))
        throw std::invalid_argument("soliton: relaxation times must be finite");
    PhaseCoeffs c;
    c.e02 = e0 * e0;
    c.tau1 = d.tau1;
    c.tau2 = d.tau2;
    c.gm = d.gamma_minus;
    c.gp = d.gamma_plus;
    const double e04 = c.e02 * c.e02;
    c.A = 16.0 * c.gm * c.gm * e04 * c.tau2 * c.tau2;
    c.B = 16.0 * e04 * c.tau1 * c.tau2;
    return c;
}

inline double denom(const PhaseCoeffs& c, double phi) {
    const double s = std::sin(2.0 * phi);
    return 1.0 + c.A + c.B * s * s;
}

// Phase rate of the individual e_R phase in the steady state:
//   chi_R' = (g+ + g- r3)/2 - 4 a tau2 |e_L|^2 / Den,
// with a = 4 g- tau2 e0^2 and Den = 1 + a^2 + 64 tau1 tau2 |P|^2.
inline double chi_rate(const PhaseCoeffs& c, double phi) {
    const double a = 4.0 * c.gm * c.tau2 * c.e02;
    const double sin_phi = std::sin(phi);
    const double rhoL2 = c.e02 * sin_phi * sin_phi;
    const double den = denom(c, phi);  // == 1 + a^2 + 64 tau1 tau2 |P|^2
    const double r3 = -(1.0 + a * a) / den;
    return 0.5 * (c.gp + c.gm * r3) - 4.0 * a * c.tau2 * rhoL2 / den;
}

}  // namespace

PhaseRhs phase_rhs(double phi, double e0, const DerivedParams& d) {
    const PhaseCoeffs c = coeffs(e0, d);
    const double den = denom(c, phi);
    PhaseRhs out;
    out.dphi = 2.0 * c.e02 * c.tau2 * std::sin(2.0 * phi) / den;
    out.dS = 16.0 * c.gm * c.e02 * c.tau2 * c.tau2 * std::cos(2.0 * phi) / den;
    return out;
}

PhaseRhs phase_rhs_steady(double phi, double e0, const DerivedParams& d) {
    const PhaseCoeffs c = coeffs(e0, d);
    const double den = denom(c, phi);
    PhaseRhs out;
    out.dphi = 2.0 * c.e02 * c.tau2 * std::sin(2.0 * phi) / den;
    out.dS = 16.0 * c.gm * c.e02 * c.e02 * c.tau2 * c.tau2 * std::cos(2.0 * phi) / den;
    return out;
}

BlochVector steady_bloch(const cplx& eR, const cplx& eL, const DerivedParams& d) {
    if (std::isinf(d.tau1) || std::isinf(d.tau2))
        throw std::invalid_argument("steady_bloch: relaxation times must be finite");
    const double a = 4.0 * d.gamma_minus * d.tau2 * (std::norm(eR) + std::norm(eL));
    const cplx P = eR * eL;
    const double den = 1.0 + a * a + 64.0 * d.tau1 * d.tau2 * std::norm(P);
    const double r3 = -(1.0 + a * a) / den;
    const cplx w = 8.0 * d.tau2 * r3 * cplx{a, -1.0} * P / (1.0 + a * a);
    BlochVector r;
    r.r1 = w.real();
    r.r2 = -w.imag();
    r.r3 = r3;
    return r;
}

SolitonProfile integrate_profile(double e0, double l, SolitonKind kind, const DerivedParams& d,
                                 int n_samples) {
    if (!(e0 > 0.0)) throw std::invalid_argument("integrate_profile: e0 must be > 0");
    if (!(l > 0.0)) throw std::invalid_argument("integrate_profile: l must be > 0");
    if (n_samples < 3) throw std::invalid_argument("integrate_profile: need >= 3 samples");
    if (n_samples % 2 == 0) ++n_samples;  // keep a sample exactly at l/2

    const PhaseCoeffs c = coeffs(e0, d);
    const double phi_center = kind == SolitonKind::absorber ? 0.25 * pi : 0.75 * pi;
    const double h_sample = l / (n_samples - 1);
    const int center = (n_samples - 1) / 2;

    // y = (phi, S, chi_R); S' is the steady-consistent form, selected by the
    // dynamical residual check.
    auto rhs = [&c](const double y[3], double out[3]) {
        const double den = denom(c, y[0]);
        out[0] = 2.0 * c.e02 * c.tau2 * std::sin(2.0 * y[0]) / den;
        out[1] = 16.0 * c.gm * c.e02 * c.e02 * c.tau2 * c.tau2 * std::cos(2.0 * y[0]) / den;
        out[2] = chi_rate(c, y[0]);
    };
    auto rk4 = [&rhs](double y[3], double h) {
        double k1[3], k2[3], k3[3], k4[3], t[3];
        rhs(y, k1);
        for (int i = 0; i < 3; ++i) t[i] = y[i] + 0.5 * h * k1[i];
        rhs(t, k2);
        for (int i = 0; i < 3; ++i) t[i] = y[i] + 0.5 * h * k2[i];
        rhs(t, k3);
        for (int i = 0; i < 3; ++i) t[i] = y[i] + h * k3[i];
        rhs(t, k4);
        for (int i = 0; i < 3; ++i) y[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    };

    auto sweep = [&](int nsub, std::vector<double>& phi, std::vector<double>& S,
                     std::vector<double>& chi) {
        phi.assign(n_samples, 0.0);
        S.assign(n_samples, 0.0);
        chi.assign(n_samples, 0.0);
        phi[center] = phi_center;
        for (int dir : {+1, -1}) {
            double y[3] = {phi_center, 0.0, 0.0};
            const double h = dir * h_sample / nsub;
            for (int k = center + dir; k >= 0 && k < n_samples; k += dir) {
                for (int s = 0; s < nsub; ++s) rk4(y, h);
                phi[k] = y[0];
                S[k] = y[1];
                chi[k] = y[2];
            }
        }
    };

    SolitonProfile p;
    std::vector<double> phi_c, S_c, chi_c;
    int nsub = 1;
    for (;;) {
        std::vector<double> phi_f, S_f, chi_f;
        sweep(nsub, phi_c, S_c, chi_c);
        sweep(2 * nsub, phi_f, S_f, chi_f);
        double err = 0.0;
        for (int k = 0; k < n_samples; ++k) err = std::max(err, std::abs(phi_f[k] - phi_c[k]));
        if (err < 1e-11) {
            phi_c.swap(phi_f);
            S_c.swap(S_f);
            chi_c.swap(chi_f);
            break;
        }
        nsub *= 2;
        if (nsub > 256)
            throw std::runtime_error("integrate_profile: step-size control did not converge");
    }

    p.e0 = e0;
    p.l = l;
    p.kind = kind;
    p.derived = d;
    p.xi.resize(n_samples);
    p.phi = std::move(phi_c);
    p.S = std::move(S_c);
    p.chi_R = std::move(chi_c);
    p.eR.resize(n_samples);
    p.eL.resize(n_samples);
    p.r1.resize(n_samples);
    p.r2.resize(n_samples);
    p.r3.resize(n_samples);
    for (int k = 0; k < n_samples; ++k) {
        p.xi[k] = k * h_sample;
        const double chi_L = p.S[k] - p.chi_R[k];
        p.eR[k] = std::polar(e0 * std::cos(p.phi[k]), p.chi_R[k]);
        p.eL[k] = std::polar(e0 * std::sin(p.phi[k]), chi_L);
        const BlochVector r = steady_bloch(p.eR[k], p.eL[k], d);
        p.r1[k] = r.r1;
        p.r2[k] = r.r2;
        p.r3[k] = r.r3;
    }
    p.xi_s = soliton_size(e0, d);
    const WindingResult w = composite_winding(p);
    p.winding_turns = w.turns;
    p.winding_spinor = w.spinor;
    p.winding = w.w;
    return p;
}

double soliton_size(double e0, const DerivedParams& d) {
    const double e04 = e0 * e0 * e0 * e0;
    const double A = 16.0 * d.gamma_minus * d.gamma_minus * d.tau2 * d.tau2 * e04;
    return (A + 1.0) / (8.0 * d.tau2 * e04);
}

double measured_tail_rate(const SolitonProfile& p) {
    // Decaying tail: |e_L|^2 toward xi = 0 for the absorber branch (and its
    // mirror for the emitter).  Fit d ln/d xi deep in the tail where the
    // decay is asymptotically exponential.
    const int n = static_cast<int>(p.xi.size());
    const int a = n / 50, b = n / 10;
    double num = 0.0, den = 0.0, sx = 0.0, sy = 0.0;
    int m = 0;
    for (int k = a; k < b; ++k) {
        const double v = std::norm(p.eL[k]);
        if (v <= 0.0) continue;
        sx += p.xi[k];
        sy += std::log(v);
        ++m;
    }
    const double mx = sx / m, my = sy / m;
    for (int k = a; k < b; ++k) {
        const double v = std::norm(p.eL[k]);
        if (v <= 0.0) continue;
        num += (p.xi[k] - mx) * (std::log(v) - my);
        den += (p.xi[k] - mx) * (p.xi[k] - mx);
    }
    return num / den;
}

AnalyticResidual analytic_residual(const SolitonProfile& p) {
    const double e0 = p.e0;
    const double e02 = e0 * e0;
    const double e04 = e02 * e02;
    const DerivedParams& d = p.derived;
    const double A = 16.0 * d.gamma_minus * d.gamma_minus * d.tau2 * d.tau2 * e04;
    const double coef_printed = (A + 1.0) / (32.0 * d.tau1 * d.tau2 * e04);
    const double coef_rederived = (A + 1.0) / (32.0 * d.tau1 * d.tau2 * e02);
    AnalyticResidual res;
    for (std::size_t k = 0; k < p.xi.size(); ++k) {
        const double u = std::norm(p.eR[k]);
        // log singularities at u = 0 and u = e0^2 are excluded
        if (u < 1e-9 * e02 || u > (1.0 - 1e-9) * e02) continue;
        const double lg = std::log(u / (e02 - u));
        const double rhs = -(p.xi[k] - 0.5 * p.l) / (4.0 * d.tau1);
        res.printed = std::max(res.printed, std::abs(2.0 * u - e02 + coef_printed * lg - rhs));
        res.rederived =
            std::max(res.rederived, std::abs(2.0 * u - e02 + coef_rederived * lg - rhs));
        res.rhs_scale = std::max(res.rhs_scale, std::abs(rhs));
    }
    return res;
}

double steady_state_residual(const SolitonProfile& p) {
    const DerivedParams& d = p.derived;
    const PhaseCoeffs c = coeffs(p.e0, d);
    double worst = 0.0;
    for (std::size_t k = 0; k < p.xi.size(); ++k) {
        const double phi = p.phi[k];
        const double den = denom(c, phi);
        const double rhoR = p.e0 * std::cos(phi);
        const double rhoL = p.e0 * std::sin(phi);
        const double a = 4.0 * c.gm * c.tau2 * c.e02;
        // analytic spatial derivatives of the reconstruction
        const double drhoR = -4.0 * c.tau2 * rhoR * rhoL * rhoL / den;
        const double drhoL = 4.0 * c.tau2 * rhoR * rhoR * rhoL / den;
        const double dchiR = chi_rate(c, phi);
        const double r3 = -(1.0 + a * a) / den;
        const double g = c.gp + c.gm * r3;
        const double dchiL = -0.5 * g + 4.0 * a * c.tau2 * rhoR * rhoR / den;
        const double chiL = p.S[k] - p.chi_R[k];
        const cplx dR = (cplx{drhoR, rhoR * dchiR}) * std::polar(1.0, p.chi_R[k]);
        const cplx dL = (cplx{drhoL, rhoL * dchiL}) * std::polar(1.0, chiL);

        const BlochVector r{p.r1[k], p.r2[k], p.r3[k]};
        const LocalFields f{p.eR[k], p.eL[k]};
        const BlochRhs br = bloch_rhs_degenerate(r, f, d);
        const FieldSources src = field_source_degenerate(r, f, d);
        const cplx dtau_eR = src.srcR - dR;  // (d_tau + d_xi) eR = srcR
        const cplx dtau_eL = src.srcL + dL;  // (d_tau - d_xi) eL = srcL
        worst = std::max({worst, std::abs(br.dr1), std::abs(br.dr2), std::abs(br.dr3),
                          std::abs(dtau_eR), std::abs(dtau_eL)});
    }
    return worst;
}

WindingResult winding_number(const std::vector<cplx>& Z) {
    if (Z.size() < 2) throw std::invalid_argument("winding_number: need >= 2 samples");
    double zmax = 0.0;
    for (const cplx& z : Z) zmax = std::max(zmax, std::abs(z));
    double accum = 0.0;
    for (std::size_t k = 0; k + 1 < Z.size(); ++k) {
        if (std::abs(Z[k]) < 1e-12 * zmax || std::abs(Z[k + 1]) < 1e-12 * zmax)
            throw std::invalid_argument("winding_number: |Z| not bounded away from 0");
        accum += std::arg(Z[k + 1] / Z[k]);
    }
    WindingResult res;
    res.turns = accum / (2.0 * pi);
    const double nearest = std::round(res.turns);
    const double half = std::round(2.0 * res.turns) / 2.0;
    if (std::abs(res.turns - nearest) <= 0.1) {
        res.w = static_cast<int>(nearest);
    } else if (std::abs(res.turns - half) <= 0.1) {
        res.spinor = true;  // two-valued (spinor) map
    } else {
        throw std::runtime_error("winding_number: accumulated phase is not quantized");
    }
    return res;
}

WindingResult composite_winding(const SolitonProfile& p) {
    // Forward pass through the profile's phase, then the return leg through
    // the mirrored fundamental region (pi - phi), traversed right to left.
    std::vector<cplx> Z;
    Z.reserve(2 * p.phi.size());
    for (double phi : p.phi) Z.push_back(std::polar(1.0, phi));
    for (auto it = p.phi.rbegin(); it != p.phi.rend(); ++it)
        Z.push_back(std::polar(1.0, pi - *it));
    return winding_number(Z);
}

}  // namespace psr
