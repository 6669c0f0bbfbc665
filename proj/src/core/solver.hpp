#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/bloch.hpp"
#include "core/params.hpp"

namespace psr {

enum class Variant {
    degenerate,          // single color, counter-propagating, no grating
    two_color,           // omega1 + omega2 = eps_eg, no grating
    two_color_grating,   // two color with r^{(+)} grating dynamics
    single_mode,         // one real right-moving envelope (propagation reduction)
};

const char* variant_name(Variant v);
std::optional<Variant> variant_from_name(const std::string& name);

// CW step trigger switched on at t = 0: power_left is injected as e_R at
// xi = 0, power_right as e_L at xi = l.
struct TriggerSpec {
    double power_left_W_mm2 = 0.0;
    double power_right_W_mm2 = 0.0;
    double phase_left_rad = 0.0;
    double phase_right_rad = 0.0;
};

// Full run configuration.  The profile/field callbacks are programmatic
// extensions used by tests and the steady-state tooling; config files only
// reach the scalar fields.
struct Scenario {
    MediumParams medium;
    Variant variant = Variant::degenerate;
    double omega1_eV = 0.0;  // 0 -> eps_eg/2 for two-color variants
    double length_cm = 0.0;
    int grid_points = 2048;
    TriggerSpec trigger;
    double init_p = 0.5;           // dark-state fraction in the upper level
    double init_theta0_rad = 0.0;  // dark-state coherence phase
    double t_end_ns = 10.0;
    std::vector<double> snapshot_times_ns;
    int series_stride = 0;  // sampling stride in steps; 0 = auto (~2000 rows)

    std::function<BlochVector(double xi)> init_bloch_profile;  // overrides dark state
    std::function<cplx(double xi)> init_field_R;               // bulk fields, default 0
    std::function<cplx(double xi)> init_field_L;

    void validate() const;  // throws std::invalid_argument
};

// Per-cell state on the uniform xi-grid (cell centers at (j+1/2) dxi).
struct GridState {
    double tau = 0.0;
    long step = 0;
    std::vector<cplx> eR, eL;
    std::vector<double> r1, r2, r3;
    std::vector<cplx> rp1, rp2, rp3;  // grating variant only

    std::size_t cells() const { return eR.size(); }
};

// Thrown when the integrator encounters a non-finite value.
struct NumericalError : std::runtime_error {
    std::size_t cell;
    double tau;
    NumericalError(std::size_t cell_, double tau_);
};

struct SeriesSample {
    double tau = 0.0;
    double t_ns = 0.0;
    double flux_right_W_mm2 = 0.0;  // |e_R|^2 at xi = l, physical units
    double flux_left_W_mm2 = 0.0;   // |e_L|^2 at xi = 0
    double stored_energy_fraction = 0.0;  // (1/2l) Int (r3+1) dxi
    // Conservation bookkeeping, all dimensionless.
    double chirality_integral = 0.0;  // dxi * sum(|eR|^2 - |eL|^2)
    double energy_integral = 0.0;     // dxi * sum(r3 + 4(|eR|^2+|eL|^2))
    double cum_out_R = 0.0;           // Int |e_R(l)|^2 dtau through the shifts
    double cum_out_L = 0.0;
    double cum_in_R = 0.0;
    double cum_in_L = 0.0;
    double cum_t1_leak = 0.0;  // Int dtau (1/tau1) Int (r3+1) dxi
    double bloch_norm_dev_max = 0.0;  // max_j | |r_j|^2 - |r_j(0)|^2 |
    int bloch_norm_dev_cell = 0;
};

struct Snapshot {
    double tau = 0.0;
    double t_ns = 0.0;
    std::vector<double> x_cm;
    std::vector<cplx> eR, eL;
    std::vector<double> r1, r2, r3;
};

struct RunRecord {
    Scenario scenario;
    DerivedParams derived;
    double dxi = 0.0;
    double dtau = 0.0;
    long n_steps = 0;
    std::vector<SeriesSample> series;
    std::vector<Snapshot> snapshots;
};

// Time-domain integrator: unit-CFL characteristics (dtau = dxi) with Strang
// splitting.  A step is: half-step RK4 of the local sources on every cell,
// exact one-cell shift of e_R rightward / e_L leftward with trigger
// injection at the inflow boundaries, second source half-step.
class Simulation {
  public:
    explicit Simulation(const Scenario& s);

    void step();
    RunRecord run();  // integrates to t_end with series / snapshot recording

    const GridState& state() const { return state_; }
    GridState& state() { return state_; }
    const DerivedParams& derived() const { return derived_; }
    const TwoColorCouplings& couplings() const { return couplings_; }
    double dxi() const { return dxi_; }
    double dtau() const { return dtau_; }
    long total_steps() const { return total_steps_; }

    SeriesSample sample() const;  // observables of the current state

  private:
    template <Variant V>
    void source_half();
    void apply_sources(double h);
    void shift_and_inject();
    void check_finite() const;
    double stored_sum_r3p1() const;

    Scenario scenario_;
    DerivedParams derived_;
    TwoColorCouplings couplings_;
    GridState state_;
    double dxi_ = 0.0;
    double dtau_ = 0.0;
    long total_steps_ = 0;
    cplx inject_R_{0.0, 0.0};  // boundary value entering e_R at xi=0
    cplx inject_L_{0.0, 0.0};  // boundary value entering e_L at xi=l
    double cum_out_R_ = 0.0, cum_out_L_ = 0.0;
    double cum_in_R_ = 0.0, cum_in_L_ = 0.0;
    double cum_t1_leak_ = 0.0;
    std::vector<double> init_norm2_;
};

// Free-function forms of the per-operation contracts.
GridState init(const Scenario& s);
void step(GridState& state, const Scenario& s);
RunRecord run(const Scenario& s);

// Time of the first local maximum of the right-end output flux exceeding
// 10x the trigger flux; empty when no explosive event occurs.
std::optional<double> delay_time_ns(const RunRecord& record);

}  // namespace psr
