#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "core/params.hpp"

namespace psr {

// Pulse flux profiles F(t), W/mm^2 against ns.
struct RectPulse {
    double power_W_mm2 = 0.0;
    double duration_ns = 0.0;
};
struct LorentzianPulse {
    double peak_W_mm2 = 0.0;
    double half_width_ns = 0.0;  // F = peak / (1 + (t/half_width)^2)
};
struct SampledPulse {
    std::vector<double> t_ns;
    std::vector<double> F_W_mm2;  // trapezoid-integrated
};
using PulseShape = std::variant<RectPulse, LorentzianPulse, SampledPulse>;

// Pulse area theta = sqrt(mu_ge^2 + (mu_ee - mu_gg)^2 / 4) * Int F dt in
// natural units (mu in cm^3, F converted from W/mm^2, t from ns).
double pulse_area(const PulseShape& p, const MediumParams& m);

// theta / 2pi as a whole split-pulse count plus remainder.
struct SplitCount {
    long n = 0;
    double remainder = 0.0;
};
SplitCount split_count(double theta);

// +: amplifier, -: absorber in the compression formulas.
enum class GainSign { amplifier, absorber };

// E = 1 / ((alpha_m x sin(theta/2) +- cos(theta/2))^2 + sin^2(theta/2)).
double compression_factor(double theta, double alpha_m_x, GainSign sign);

// CW estimate E = 1 / ((beta t alpha_m x +- 1)^2 + (beta t)^2) with
// beta = theta / (2 t), so that beta t = theta/2 matches the exact formula
// to first order in theta.
double compression_factor_cw(double theta, double alpha_m_x, GainSign sign);

// Characteristics solution of the reduced propagation system
//   d(theta)/dtau = v,   (d_tau + d_xi) v = s * sin(theta) * v,
// on the unit-CFL grid shared with the main solver (half-step RK4 source,
// exact shift of v, second half-step).  e_R^2 = v / (4 sqrt(1 + g-^2)).
struct AreaScenario {
    double l = 0.0;
    int cells = 0;
    double tau_end = 0.0;
    GainSign sign = GainSign::absorber;
    std::function<double(double xi)> theta0;  // default 0
    std::function<double(double xi)> v0;      // default 0
    double v_inflow = 0.0;                    // boundary v at xi = 0
};

struct AreaRecord {
    double dxi = 0.0, dtau = 0.0;
    long n_steps = 0;
    std::vector<double> xi;
    std::vector<double> theta;  // final profiles
    std::vector<double> v;
};

AreaRecord area_equation_solve(const AreaScenario& s);

// v = 4 sqrt(1 + g-^2) e^2.
double area_rate_from_intensity(double e_abs2, const DerivedParams& d);
double intensity_from_area_rate(double v, const DerivedParams& d);

// Local maxima of v above frac * max(v): emergent pulse count.
int count_pulses(const std::vector<double>& v, double frac = 0.1);

}  // namespace psr
