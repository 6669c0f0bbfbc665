#pragma once

#include <optional>
#include <vector>

#include "core/bloch.hpp"
#include "core/params.hpp"

namespace psr {

enum class SolitonKind { absorber, emitter };

// d(phi)/dxi and dS/dxi of the steady-profile phase system.
struct PhaseRhs {
    double dphi = 0.0;
    double dS = 0.0;
};

// Phase equations as printed:
//   phi' = 2 e0^2 tau2 sin(2 phi) / D
//   S'   = 16 g- e0^2 tau2^2 cos(2 phi) / D
//   D    = 1 + 16 g-^2 e0^4 tau2^2 + 16 e0^4 tau1 tau2 sin^2(2 phi)
PhaseRhs phase_rhs(double phi, double e0, const DerivedParams& d);

// Same system with S' carrying e0^4 instead of e0^2.  This is the form that
// follows from eliminating the polarization in the steady limit of the full
// dynamical equations; it is selected by the steady-state residual check
// (the two coincide at e0 = 1).
PhaseRhs phase_rhs_steady(double phi, double e0, const DerivedParams& d);

// Polarization eliminated in favor of the fields in the steady limit:
//   a = 4 g- tau2 (|eR|^2 + |eL|^2),   P = eR eL,
//   r3 = -(1 + a^2) / (1 + a^2 + 64 tau1 tau2 |P|^2),
//   r1 - i r2 = 8 tau2 r3 (a - i) P / (1 + a^2).
// Requires finite relaxation times.
BlochVector steady_bloch(const cplx& eR, const cplx& eL, const DerivedParams& d);

struct SolitonProfile {
    double e0 = 0.0;
    double l = 0.0;  // dimensionless window length; boundary data at l/2
    SolitonKind kind = SolitonKind::absorber;
    std::vector<double> xi;
    std::vector<double> phi;
    std::vector<double> S;
    std::vector<double> chi_R;  // individual phase of e_R in the steady state
    std::vector<cplx> eR, eL;   // fully phased steady fields
    std::vector<double> r1, r2, r3;
    double xi_s = 0.0;  // e-folding size, printed formula
    double winding_turns = 0.0;
    bool winding_spinor = false;
    std::optional<int> winding;
    DerivedParams derived;
};

// Integrates the phase system outward from xi = l/2 (phi = pi/4 or 3pi/4 by
// region, S = 0) with RK4 plus step-doubling control, reconstructs the
// steady fields with their individual phases, and the polarization via
// steady_bloch.  Throws on non-convergent step refinement.
SolitonProfile integrate_profile(double e0, double l, SolitonKind kind, const DerivedParams& d,
                                 int n_samples = 4001);

// Printed e-folding size (16 g-^2 tau2^2 e0^4 + 1) / (8 tau2 e0^4).
double soliton_size(double e0, const DerivedParams& d);

// Measured e-folding rate of the decaying-field tail, d ln|e|^2 / dxi,
// estimated from the profile's outer quarter.
double measured_tail_rate(const SolitonProfile& p);

// Residuals of the implicit closed-form relation along the profile, for the
// printed log coefficient (denominator 32 tau1 tau2 e0^4) and the re-derived
// one (32 tau1 tau2 e0^2).  The profile integration is the ground truth.
struct AnalyticResidual {
    double printed = 0.0;
    double rederived = 0.0;
    double rhs_scale = 0.0;  // max |xi - l/2| / (4 tau1), for normalization
};
AnalyticResidual analytic_residual(const SolitonProfile& p);

// Max |d/dtau| over all field and polarization components when the profile
// is inserted into the dynamical right-hand sides.
double steady_state_residual(const SolitonProfile& p);

// Winding of complex samples along a loop: nearest integer of the
// accumulated phase / 2pi.  Half-odd-integer totals are flagged as spinor
// (two-valued) maps; anything else is an error.  |Z| must stay away from 0.
struct WindingResult {
    double turns = 0.0;
    std::optional<int> w;
    bool spinor = false;
};
WindingResult winding_number(const std::vector<cplx>& Z);

// Winding diagnostic of the composite forward-plus-return loop built from a
// profile (the return leg continues through the mirrored fundamental
// region); spinor by construction for a single soliton.
WindingResult composite_winding(const SolitonProfile& p);

}  // namespace psr
