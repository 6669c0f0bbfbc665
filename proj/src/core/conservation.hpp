#pragma once

#include "core/solver.hpp"

namespace psr {

// Drift-rate residuals of the three conservation laws, evaluated from a
// recorded run.  The boundary-flux integrals accumulated by the solver make
// transport exact in the bookkeeping, so each residual measures only the
// source-substep error and must shrink at the scheme's order under grid
// refinement.  All values are dimensionless, per unit tau.
struct ConservationReport {
    double chirality_drift = 0.0;
    double energy_drift = 0.0;
    double bloch_norm_drift = 0.0;
    int worst_cell = 0;      // cell with the largest |r|^2 deviation
    double scale = 0.0;      // magnitude used for relative comparisons
    double t1_leak_rate = 0.0;  // reported separately when 1/tau1 > 0
};

// Exact law, any relaxation:  d/dtau Int (|eR|^2 - |eL|^2) dxi balances the
// boundary fluxes.  Requires at least two series samples.
double chirality_residual(const RunRecord& record);

// Energy law, exact at 1/tau1 = 0:
//   d/dtau Int (r3 + 4(|eR|^2 + |eL|^2)) dxi + 4 [boundary] = 0.
// With finite tau1 the relaxation leakage is subtracted using the solver's
// accumulated leak integral, and its rate is reported separately.
double energy_residual(const RunRecord& record, bool tau1_infinite, double* leak_rate = nullptr);

// Bloch norm law, exact with relaxation off: max_j | |r_j|^2 - |r_j(0)|^2 |
// per unit tau (the last series sample).
double bloch_norm_residual(const RunRecord& record, int* worst_cell = nullptr);

ConservationReport conservation_report(const RunRecord& record);

}  // namespace psr
