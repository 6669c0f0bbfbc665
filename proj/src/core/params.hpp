#pragma once

#include <stdexcept>

namespace psr {

// Physical description of the two-level target medium.  Couplings mu_ab are
// the polarizability-like constants of the dipole-forbidden pair transition,
// in units of 1e-24 cm^3.
struct MediumParams {
    double n_cm3 = 0.0;        // participating number density (cm^-3)
    double eps_eg_eV = 0.52;   // level splitting (eV)
    double mu_ee = 0.87;       // 1e-24 cm^3
    double mu_gg = 0.80;       // 1e-24 cm^3
    double mu_ge = 0.055;      // 1e-24 cm^3
    double T1_ns = 1.0e3;      // population relaxation time (may be +inf)
    double T2_ns = 10.0;       // phase relaxation time (may be +inf)

    void validate() const;  // throws std::invalid_argument
};

// Dimensionless constants derived from MediumParams.  All dynamics are
// integrated in units of the inverse medium gain length alpha_m.
struct DerivedParams {
    double alpha_m_cm = 0.0;      // (eps_eg/2) * n * mu_ge, in cm^-1
    double length_unit_cm = 0.0;  // 1/alpha_m
    double time_unit_ns = 0.0;    // length_unit / c
    double gamma_plus = 0.0;      // (mu_ee + mu_gg) / (2 mu_ge)
    double gamma_minus = 0.0;     // (mu_ee - mu_gg) / (2 mu_ge)
    double tau1 = 0.0;            // T1 / time_unit (may be +inf)
    double tau2 = 0.0;            // T2 / time_unit (may be +inf)
    double inv_tau1 = 0.0;        // 0 when T1 = +inf
    double inv_tau2 = 0.0;
    double flux_unit_W_mm2 = 0.0;  // physical flux at |e|^2 = 1
};

// Couplings of the two-color variant with omega1 + omega2 = eps_eg.  The
// mu_ab(omega_a, omega_b) matrix is modeled as frequency independent (equal
// to the degenerate values), so the gamma factors coincide with gamma_pm;
// only the kinematic weights a_i, a_ij vary with the color split.
struct TwoColorCouplings {
    double omega1_eV = 0.0;
    double omega2_eV = 0.0;
    double a1 = 1.0, a2 = 1.0;    // 2*omega_i / eps_eg
    double a12 = 1.0, a21 = 1.0;  // 2*omega_j^2 / (omega_i * eps_eg)
    double gamma_p_1 = 0.0, gamma_p_2 = 0.0;
    double gamma_m_1 = 0.0, gamma_m_2 = 0.0;
    double gamma_p_12 = 0.0, gamma_p_21 = 0.0;
    double gamma_m_12 = 0.0, gamma_m_21 = 0.0;
};

// Populates every derived constant; deterministic, throws on invalid input.
DerivedParams derive(const MediumParams& m);

// Conversions between physical flux (W/mm^2) and the dimensionless envelope.
// |e|^2 = power / flux_unit; the round trip is exact to floating precision.
double flux_to_intensity(double power_W_mm2, const DerivedParams& d);  // |e|^2
double flux_to_amplitude(double power_W_mm2, const DerivedParams& d);  // |e|
double intensity_to_flux(double e_abs2, const DerivedParams& d);
double amplitude_to_flux(double e_abs, const DerivedParams& d);

// Two-color couplings for a trigger pair (omega1, eps_eg - omega1).
TwoColorCouplings two_color(double omega1_eV, const MediumParams& m);

}  // namespace psr
