#include "core/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace psr {

const char* variant_name(Variant v) {
    switch (v) {
        case Variant::degenerate: return "degenerate";
        case Variant::two_color: return "two_color";
        case Variant::two_color_grating: return "two_color_grating";
        case Variant::single_mode: return "single_mode";
    }
    return "?";
}

std::optional<Variant> variant_from_name(const std::string& name) {
    if (name == "degenerate") return Variant::degenerate;
    if (name == "two_color") return Variant::two_color;
    if (name == "two_color_grating") return Variant::two_color_grating;
    if (name == "single_mode") return Variant::single_mode;
    return std::nullopt;
}

void Scenario::validate() const {
    medium.validate();
    auto bad = [](const std::string& what) { throw std::invalid_argument("scenario: " + what); };
    if (!(length_cm > 0.0)) bad("length_cm must be > 0");
    if (grid_points < 16) bad("grid_points must be >= 16");
    if (!(t_end_ns > 0.0)) bad("t_end_ns must be > 0");
    if (trigger.power_left_W_mm2 < 0.0 || trigger.power_right_W_mm2 < 0.0)
        bad("trigger powers must be >= 0");
    if (!(init_p >= 0.0 && init_p <= 1.0)) bad("init.p must lie in [0, 1]");
    for (double t : snapshot_times_ns)
        if (t < 0.0 || t > t_end_ns) bad("snapshot times must lie in [0, t_end]");
    if (omega1_eV != 0.0 && !(omega1_eV > 0.0 && omega1_eV < medium.eps_eg_eV))
        bad("omega1_eV must lie in (0, eps_eg)");
    if (variant == Variant::single_mode) {
        // Single right-moving real envelope: no left trigger, no phases.
        if (trigger.power_right_W_mm2 != 0.0) bad("single_mode forbids a right trigger");
        if (trigger.phase_left_rad != 0.0 || trigger.phase_right_rad != 0.0)
            bad("single_mode requires zero trigger phases");
    }
}

NumericalError::NumericalError(std::size_t cell_, double tau_)
    : std::runtime_error("non-finite value at cell " + std::to_string(cell_) + ", tau = " +
                         std::to_string(tau_)),
      cell(cell_),
      tau(tau_) {}

namespace {

// Small value types for the cell-local RK4 substep.

struct DegY {
    double r1, r2, r3;
    cplx eR, eL;
};
inline DegY operator+(const DegY& a, const DegY& b) {
    return {a.r1 + b.r1, a.r2 + b.r2, a.r3 + b.r3, a.eR + b.eR, a.eL + b.eL};
}
inline DegY operator*(double s, const DegY& a) {
    return {s * a.r1, s * a.r2, s * a.r3, s * a.eR, s * a.eL};
}

struct GratY {
    double r1, r2, r3;
    cplx p1, p2, p3;
    cplx eR, eL;
};
inline GratY operator+(const GratY& a, const GratY& b) {
    return {a.r1 + b.r1, a.r2 + b.r2, a.r3 + b.r3, a.p1 + b.p1,
            a.p2 + b.p2, a.p3 + b.p3, a.eR + b.eR, a.eL + b.eL};
}
inline GratY operator*(double s, const GratY& a) {
    return {s * a.r1, s * a.r2, s * a.r3, s * a.p1, s * a.p2, s * a.p3, s * a.eR, s * a.eL};
}

struct SmY {
    double r1, r2, r3, e;
};
inline SmY operator+(const SmY& a, const SmY& b) {
    return {a.r1 + b.r1, a.r2 + b.r2, a.r3 + b.r3, a.e + b.e};
}
inline SmY operator*(double s, const SmY& a) { return {s * a.r1, s * a.r2, s * a.r3, s * a.e}; }

template <class Y, class F>
inline Y rk4(const Y& y, double h, F&& f) {
    const Y k1 = f(y);
    const Y k2 = f(y + (0.5 * h) * k1);
    const Y k3 = f(y + (0.5 * h) * k2);
    const Y k4 = f(y + h * k3);
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace

Simulation::Simulation(const Scenario& s) : scenario_(s) {
    scenario_.validate();
    derived_ = derive(scenario_.medium);
    const double omega1 =
        scenario_.omega1_eV > 0.0 ? scenario_.omega1_eV : 0.5 * scenario_.medium.eps_eg_eV;
    couplings_ = two_color(omega1, scenario_.medium);

    const int n = scenario_.grid_points;
    const double l = scenario_.length_cm * derived_.alpha_m_cm;
    dxi_ = l / n;
    dtau_ = dxi_;  // unit CFL: transport is an exact one-cell shift
    if (dtau_ > 0.010000001) {
        std::fprintf(stderr,
                     "psr: warning: dtau = %.4g exceeds 0.01; the gamma_+ phase rotation may be "
                     "under-resolved (increase sim.grid_points)\n",
                     dtau_);
    }
    const double tau_end = scenario_.t_end_ns / derived_.time_unit_ns;
    total_steps_ = static_cast<long>(std::ceil(tau_end / dtau_ - 1e-9));

    state_.eR.assign(n, cplx{0.0, 0.0});
    state_.eL.assign(n, cplx{0.0, 0.0});
    state_.r1.assign(n, 0.0);
    state_.r2.assign(n, 0.0);
    state_.r3.assign(n, 0.0);
    if (scenario_.variant == Variant::two_color_grating) {
        state_.rp1.assign(n, cplx{0.0, 0.0});
        state_.rp2.assign(n, cplx{0.0, 0.0});
        state_.rp3.assign(n, cplx{0.0, 0.0});
    }

    const BlochVector uniform = dark_state(scenario_.init_p, scenario_.init_theta0_rad);
    for (int j = 0; j < n; ++j) {
        const double xi = (j + 0.5) * dxi_;
        const BlochVector r =
            scenario_.init_bloch_profile ? scenario_.init_bloch_profile(xi) : uniform;
        state_.r1[j] = r.r1;
        state_.r2[j] = r.r2;
        state_.r3[j] = r.r3;
        if (scenario_.init_field_R) state_.eR[j] = scenario_.init_field_R(xi);
        if (scenario_.init_field_L) state_.eL[j] = scenario_.init_field_L(xi);
    }

    const double aL = flux_to_amplitude(scenario_.trigger.power_left_W_mm2, derived_);
    const double aR = flux_to_amplitude(scenario_.trigger.power_right_W_mm2, derived_);
    inject_R_ = std::polar(aL, scenario_.trigger.phase_left_rad);
    inject_L_ = std::polar(aR, scenario_.trigger.phase_right_rad);
    // Prime the inflow cells so the trigger is present from the first sample.
    if (scenario_.trigger.power_left_W_mm2 > 0.0) state_.eR[0] = inject_R_;
    if (scenario_.trigger.power_right_W_mm2 > 0.0) state_.eL[n - 1] = inject_L_;

    init_norm2_.resize(n);
    for (int j = 0; j < n; ++j)
        init_norm2_[j] = state_.r1[j] * state_.r1[j] + state_.r2[j] * state_.r2[j] +
                         state_.r3[j] * state_.r3[j];
}

template <Variant V>
void Simulation::source_half() {
    const double h = 0.5 * dtau_;
    const DerivedParams d = derived_;
    const TwoColorCouplings c = couplings_;
    const int n = static_cast<int>(state_.cells());

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int j = 0; j < n; ++j) {
        if constexpr (V == Variant::degenerate) {
            DegY y{state_.r1[j], state_.r2[j], state_.r3[j], state_.eR[j], state_.eL[j]};
            y = rk4(y, h, [&d](const DegY& v) {
                const BlochVector r{v.r1, v.r2, v.r3};
                const LocalFields f{v.eR, v.eL};
                const BlochRhs b = bloch_rhs_degenerate(r, f, d);
                const FieldSources s = field_source_degenerate(r, f, d);
                return DegY{b.dr1, b.dr2, b.dr3, s.srcR, s.srcL};
            });
            state_.r1[j] = y.r1;
            state_.r2[j] = y.r2;
            state_.r3[j] = y.r3;
            state_.eR[j] = y.eR;
            state_.eL[j] = y.eL;
        } else if constexpr (V == Variant::two_color) {
            DegY y{state_.r1[j], state_.r2[j], state_.r3[j], state_.eR[j], state_.eL[j]};
            y = rk4(y, h, [&d, &c](const DegY& v) {
                const BlochVector r{v.r1, v.r2, v.r3};
                const LocalFields f{v.eR, v.eL};
                const BlochRhs b = bloch_rhs_two_color(r, f, c, d);
                const FieldSources s = field_source_two_color(r, f, c, d);
                return DegY{b.dr1, b.dr2, b.dr3, s.srcR, s.srcL};
            });
            state_.r1[j] = y.r1;
            state_.r2[j] = y.r2;
            state_.r3[j] = y.r3;
            state_.eR[j] = y.eR;
            state_.eL[j] = y.eL;
        } else if constexpr (V == Variant::two_color_grating) {
            GratY y{state_.r1[j],  state_.r2[j],  state_.r3[j],  state_.rp1[j],
                    state_.rp2[j], state_.rp3[j], state_.eR[j],  state_.eL[j]};
            y = rk4(y, h, [&d, &c](const GratY& v) {
                GratingBloch g;
                g.r0 = BlochVector{v.r1, v.r2, v.r3};
                g.rp1 = v.p1;
                g.rp2 = v.p2;
                g.rp3 = v.p3;
                const LocalFields f{v.eR, v.eL};
                const GratingRhs rr = rhs_two_color_grating(g, f, c, d);
                return GratY{rr.dr0.dr1, rr.dr0.dr2, rr.dr0.dr3, rr.drp1,
                             rr.drp2,    rr.drp3,    rr.src.srcR, rr.src.srcL};
            });
            state_.r1[j] = y.r1;
            state_.r2[j] = y.r2;
            state_.r3[j] = y.r3;
            state_.rp1[j] = y.p1;
            state_.rp2[j] = y.p2;
            state_.rp3[j] = y.p3;
            state_.eR[j] = y.eR;
            state_.eL[j] = y.eL;
        } else {  // single_mode: real envelope
            SmY y{state_.r1[j], state_.r2[j], state_.r3[j], state_.eR[j].real()};
            y = rk4(y, h, [&d](const SmY& v) {
                const BlochVector r{v.r1, v.r2, v.r3};
                const BlochRhs b = bloch_rhs_single_mode(r, v.e, d);
                return SmY{b.dr1, b.dr2, b.dr3, field_source_single_mode(r, v.e)};
            });
            state_.r1[j] = y.r1;
            state_.r2[j] = y.r2;
            state_.r3[j] = y.r3;
            state_.eR[j] = cplx{y.e, 0.0};
        }
    }
}

void Simulation::apply_sources(double) {
    switch (scenario_.variant) {
        case Variant::degenerate: source_half<Variant::degenerate>(); break;
        case Variant::two_color: source_half<Variant::two_color>(); break;
        case Variant::two_color_grating: source_half<Variant::two_color_grating>(); break;
        case Variant::single_mode: source_half<Variant::single_mode>(); break;
    }
}

void Simulation::shift_and_inject() {
    const std::size_t n = state_.cells();
    const double out_R = std::norm(state_.eR[n - 1]);
    const double out_L = std::norm(state_.eL[0]);
    std::copy_backward(state_.eR.begin(), state_.eR.end() - 1, state_.eR.end());
    std::copy(state_.eL.begin() + 1, state_.eL.end(), state_.eL.begin());
    state_.eR[0] = inject_R_;
    state_.eL[n - 1] = inject_L_;
    cum_out_R_ += dtau_ * out_R;
    cum_out_L_ += dtau_ * out_L;
    cum_in_R_ += dtau_ * std::norm(inject_R_);
    cum_in_L_ += dtau_ * std::norm(inject_L_);
}

double Simulation::stored_sum_r3p1() const {
    double s = 0.0;
    for (double v : state_.r3) s += v + 1.0;
    return s;
}

void Simulation::check_finite() const {
    double probe = 0.0;
    const std::size_t n = state_.cells();
    for (std::size_t j = 0; j < n; ++j) {
        probe += std::norm(state_.eR[j]) + std::norm(state_.eL[j]) + state_.r1[j] + state_.r2[j] +
                 state_.r3[j];
    }
    if (std::isfinite(probe)) return;
    for (std::size_t j = 0; j < n; ++j) {
        const bool ok = std::isfinite(state_.eR[j].real()) && std::isfinite(state_.eR[j].imag()) &&
                        std::isfinite(state_.eL[j].real()) && std::isfinite(state_.eL[j].imag()) &&
                        std::isfinite(state_.r1[j]) && std::isfinite(state_.r2[j]) &&
                        std::isfinite(state_.r3[j]);
        if (!ok) throw NumericalError(j, state_.tau);
    }
    throw NumericalError(0, state_.tau);
}

void Simulation::step() {
    const double pre_r3p1 = stored_sum_r3p1();
    apply_sources(0.5 * dtau_);
    shift_and_inject();
    apply_sources(0.5 * dtau_);
    state_.tau += dtau_;
    state_.step += 1;
    cum_t1_leak_ += dtau_ * derived_.inv_tau1 * 0.5 * (pre_r3p1 + stored_sum_r3p1()) * dxi_;
    check_finite();
}

SeriesSample Simulation::sample() const {
    const std::size_t n = state_.cells();
    SeriesSample s;
    s.tau = state_.tau;
    s.t_ns = state_.tau * derived_.time_unit_ns;
    s.flux_right_W_mm2 = intensity_to_flux(std::norm(state_.eR[n - 1]), derived_);
    s.flux_left_W_mm2 = intensity_to_flux(std::norm(state_.eL[0]), derived_);

    double sum_r3p1 = 0.0, q_ch = 0.0, q_en = 0.0;
    double dev_max = -1.0;
    int dev_cell = 0;
    for (std::size_t j = 0; j < n; ++j) {
        const double aR = std::norm(state_.eR[j]);
        const double aL = std::norm(state_.eL[j]);
        sum_r3p1 += state_.r3[j] + 1.0;
        q_ch += aR - aL;
        q_en += state_.r3[j] + 4.0 * (aR + aL);
        const double norm2 = state_.r1[j] * state_.r1[j] + state_.r2[j] * state_.r2[j] +
                             state_.r3[j] * state_.r3[j];
        const double dev = std::abs(norm2 - init_norm2_[j]);
        if (dev > dev_max) {
            dev_max = dev;
            dev_cell = static_cast<int>(j);
        }
    }
    s.stored_energy_fraction = sum_r3p1 / (2.0 * n);
    s.chirality_integral = dxi_ * q_ch;
    s.energy_integral = dxi_ * q_en;
    s.cum_out_R = cum_out_R_;
    s.cum_out_L = cum_out_L_;
    s.cum_in_R = cum_in_R_;
    s.cum_in_L = cum_in_L_;
    s.cum_t1_leak = cum_t1_leak_;
    s.bloch_norm_dev_max = dev_max;
    s.bloch_norm_dev_cell = dev_cell;
    return s;
}

RunRecord Simulation::run() {
    RunRecord rec;
    rec.scenario = scenario_;
    rec.derived = derived_;
    rec.dxi = dxi_;
    rec.dtau = dtau_;
    rec.n_steps = total_steps_;

    long stride = scenario_.series_stride;
    if (stride <= 0) stride = std::max<long>(1, total_steps_ / 2000);

    std::set<long> snap_steps;
    for (double t : scenario_.snapshot_times_ns) {
        const long idx = std::lround(t / derived_.time_unit_ns / dtau_);
        snap_steps.insert(std::clamp<long>(idx, 0, total_steps_));
    }

    auto take_snapshot = [&]() {
        Snapshot sn;
        sn.tau = state_.tau;
        sn.t_ns = state_.tau * derived_.time_unit_ns;
        const std::size_t n = state_.cells();
        sn.x_cm.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            sn.x_cm[j] = (j + 0.5) * dxi_ * derived_.length_unit_cm;
        sn.eR = state_.eR;
        sn.eL = state_.eL;
        sn.r1 = state_.r1;
        sn.r2 = state_.r2;
        sn.r3 = state_.r3;
        rec.snapshots.push_back(std::move(sn));
    };

    rec.series.push_back(sample());
    if (snap_steps.count(0)) take_snapshot();
    for (long k = 1; k <= total_steps_; ++k) {
        step();
        if (k % stride == 0 || k == total_steps_) rec.series.push_back(sample());
        if (snap_steps.count(k)) take_snapshot();
    }
    return rec;
}

GridState init(const Scenario& s) { return Simulation(s).state(); }

void step(GridState& state, const Scenario& s) {
    Simulation sim(s);
    sim.state() = state;
    sim.step();
    state = sim.state();
}

RunRecord run(const Scenario& s) { return Simulation(s).run(); }

std::optional<double> delay_time_ns(const RunRecord& record) {
    const double trig = std::max(record.scenario.trigger.power_left_W_mm2,
                                 record.scenario.trigger.power_right_W_mm2);
    const double threshold = 10.0 * trig;
    const auto& rows = record.series;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        const double f = rows[i].flux_right_W_mm2;
        if (f > rows[i - 1].flux_right_W_mm2 && f >= rows[i + 1].flux_right_W_mm2 &&
            f > threshold && f > 0.0)
            return rows[i].t_ns;
    }
    return std::nullopt;
}

}  // namespace psr
