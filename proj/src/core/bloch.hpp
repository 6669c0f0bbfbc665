#pragma once

#include <complex>

#include "core/params.hpp"

namespace psr {

using cplx = std::complex<double>;

// Medium polarization at one grid cell: r3 is the population difference
// (+1 fully inverted), r1/r2 the pair coherence.  |r| <= 1, = 1 for pure
// states.
struct BlochVector {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    double norm2() const { return r1 * r1 + r2 * r2 + r3 * r3; }
};

// Polarization with spatial grating components.  Only the e^{+2 i omega x}
// amplitudes are stored; the conjugate components are implied by reality of
// the physical polarization.
struct GratingBloch {
    BlochVector r0;
    cplx rp1{0.0, 0.0};
    cplx rp2{0.0, 0.0};
    cplx rp3{0.0, 0.0};
};

// Counter-propagating field envelopes at one cell, dimensionless
// (|e|^2 = physical flux / flux_unit).
struct LocalFields {
    cplx eR{0.0, 0.0};
    cplx eL{0.0, 0.0};
};

struct BlochRhs {
    double dr1 = 0.0, dr2 = 0.0, dr3 = 0.0;
};

struct FieldSources {
    cplx srcR{0.0, 0.0};
    cplx srcL{0.0, 0.0};
};

struct GratingRhs {
    BlochRhs dr0;
    cplx drp1{0.0, 0.0}, drp2{0.0, 0.0}, drp3{0.0, 0.0};
    FieldSources src;
};

// Dark-state polarization for a fraction p in the upper level and coherence
// phase theta0: r = (2 sqrt(p(1-p)) cos theta0, 2 sqrt(p(1-p)) sin theta0, 2p-1).
// Always a unit-norm (pure state) vector.  Throws for p outside [0, 1].
BlochVector dark_state(double p, double theta0_rad);

// Local time derivative of the polarization for the degenerate single-color
// system:
//   dr1 =  4 g- (|eR|^2+|eL|^2) r2 + 8 Im(eR eL) r3 - r1/tau2
//   dr2 = -4 g- (|eR|^2+|eL|^2) r1 + 8 Re(eR eL) r3 - r2/tau2
//   dr3 = -8 (Re(eR eL) r2 + Im(eR eL) r1) - (r3+1)/tau1
BlochRhs bloch_rhs_degenerate(const BlochVector& r, const LocalFields& f, const DerivedParams& d);

// Non-transport part of the field equations for the degenerate system:
//   srcR = (i/2)(g+ + g- r3) eR + (i/2)(r1 - i r2) conj(eL)   (and R<->L).
FieldSources field_source_degenerate(const BlochVector& r, const LocalFields& f,
                                     const DerivedParams& d);

// Two-color RHS without grating: same structure with per-color weights a_i,
// a_ij and gamma factors.
BlochRhs bloch_rhs_two_color(const BlochVector& r, const LocalFields& f,
                             const TwoColorCouplings& c, const DerivedParams& d);
FieldSources field_source_two_color(const BlochVector& r, const LocalFields& f,
                                    const TwoColorCouplings& c, const DerivedParams& d);

// Full two-color RHS including the grating amplitudes r^{(+)}.  The r^{(-)}
// components entering the printed equations are evaluated as conjugates of
// the stored r^{(+)}.  With vanishing grating amplitudes the r0/field parts
// reduce bit-for-bit to the two-color (and, at omega1 = eps/2, degenerate)
// RHS above.
GratingRhs rhs_two_color_grating(const GratingBloch& g, const LocalFields& f,
                                 const TwoColorCouplings& c, const DerivedParams& d);

// Single-mode propagation reduction: one right-moving real envelope, the
// pair coherence riding on the mode's own grating.  The common AC-Stark
// phase is absorbed into the carrier, which keeps a real envelope real:
//   dr1 =  4 r3 Im(e^2) + 4 g- r2 |e|^2 - r1/tau2
//   dr2 =  4 r3 Re(e^2) - 4 g- r1 |e|^2 - r2/tau2
//   dr3 = -4 (r1 Im(e^2) + r2 Re(e^2)) - (r3+1)/tau1
//   src  = (1/2) r2 e
BlochRhs bloch_rhs_single_mode(const BlochVector& r, double e, const DerivedParams& d);
double field_source_single_mode(const BlochVector& r, double e);

}  // namespace psr
