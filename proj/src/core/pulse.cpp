#include "core/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "core/constants.hpp"

namespace psr {

namespace {

constexpr double pi = std::numbers::pi;

// Int F dt in W*ns/mm^2.
double fluence(const PulseShape& p) {
    if (const auto* r = std::get_if<RectPulse>(&p)) {
        if (r->power_W_mm2 < 0.0 || r->duration_ns < 0.0)
            throw std::invalid_argument("pulse: rectangular pulse must be non-negative");
        return r->power_W_mm2 * r->duration_ns;
    }
    if (const auto* lo = std::get_if<LorentzianPulse>(&p)) {
        if (lo->peak_W_mm2 < 0.0 || lo->half_width_ns <= 0.0)
            throw std::invalid_argument("pulse: bad Lorentzian parameters");
        return pi * lo->peak_W_mm2 * lo->half_width_ns;
    }
    const auto& s = std::get<SampledPulse>(p);
    if (s.t_ns.size() != s.F_W_mm2.size() || s.t_ns.size() < 2)
        throw std::invalid_argument("pulse: bad sample arrays");
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < s.t_ns.size(); ++i) {
        if (s.F_W_mm2[i] < 0.0 || s.F_W_mm2[i + 1] < 0.0)
            throw std::invalid_argument("pulse: flux samples must be >= 0");
        acc += 0.5 * (s.F_W_mm2[i] + s.F_W_mm2[i + 1]) * (s.t_ns[i + 1] - s.t_ns[i]);
    }
    return acc;
}

}  // namespace

double pulse_area(const PulseShape& p, const MediumParams& m) {
    m.validate();
    const double dmu = m.mu_ee - m.mu_gg;
    const double mu_bar_cm3 = std::sqrt(m.mu_ge * m.mu_ge + 0.25 * dmu * dmu) * 1e-24;
    // theta = mu_bar [cm^3] * F [eV ns^-1 cm^-2] * t [ns] / (hbar c [eV cm]);
    // 1 W/mm^2 = eV_per_W_ns * 100 eV ns^-1 cm^-2.
    const double conv = eV_per_W_ns * 100.0 / hbar_c_eV_cm;
    return mu_bar_cm3 * fluence(p) * conv;
}

SplitCount split_count(double theta) {
    if (theta < 0.0) throw std::invalid_argument("split_count: theta must be >= 0");
    SplitCount out;
    out.n = static_cast<long>(std::floor(theta / (2.0 * pi)));
    out.remainder = theta - 2.0 * pi * out.n;
    return out;
}

double compression_factor(double theta, double alpha_m_x, GainSign sign) {
    const double s = std::sin(0.5 * theta);
    const double c = std::cos(0.5 * theta);
    const double pm = sign == GainSign::amplifier ? 1.0 : -1.0;
    const double t = alpha_m_x * s + pm * c;
    return 1.0 / (t * t + s * s);
}

double compression_factor_cw(double theta, double alpha_m_x, GainSign sign) {
    const double bt = 0.5 * theta;  // beta t with beta = theta / (2t)
    const double pm = sign == GainSign::amplifier ? 1.0 : -1.0;
    const double t = bt * alpha_m_x + pm;
    return 1.0 / (t * t + bt * bt);
}

AreaRecord area_equation_solve(const AreaScenario& s) {
    if (!(s.l > 0.0) || s.cells < 16 || !(s.tau_end > 0.0))
        throw std::invalid_argument("area_equation_solve: bad grid");
    const int n = s.cells;
    AreaRecord rec;
    rec.dxi = s.l / n;
    rec.dtau = rec.dxi;
    rec.n_steps = static_cast<long>(std::ceil(s.tau_end / rec.dtau - 1e-9));
    rec.xi.resize(n);
    rec.theta.assign(n, 0.0);
    rec.v.assign(n, 0.0);
    for (int j = 0; j < n; ++j) {
        rec.xi[j] = (j + 0.5) * rec.dxi;
        if (s.theta0) rec.theta[j] = s.theta0(rec.xi[j]);
        if (s.v0) rec.v[j] = s.v0(rec.xi[j]);
    }
    const double sg = s.sign == GainSign::amplifier ? 1.0 : -1.0;
    const double h = 0.5 * rec.dtau;

    auto source_half = [&]() {
        for (int j = 0; j < n; ++j) {
            double th = rec.theta[j], v = rec.v[j];
            // RK4 on theta' = v, v' = sg sin(theta) v
            const double k1t = v, k1v = sg * std::sin(th) * v;
            const double t2 = th + 0.5 * h * k1t, v2 = v + 0.5 * h * k1v;
            const double k2t = v2, k2v = sg * std::sin(t2) * v2;
            const double t3 = th + 0.5 * h * k2t, v3 = v + 0.5 * h * k2v;
            const double k3t = v3, k3v = sg * std::sin(t3) * v3;
            const double t4 = th + h * k3t, v4 = v + h * k3v;
            const double k4t = v4, k4v = sg * std::sin(t4) * v4;
            rec.theta[j] = th + h / 6.0 * (k1t + 2.0 * k2t + 2.0 * k3t + k4t);
            rec.v[j] = v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        }
    };

    for (long k = 0; k < rec.n_steps; ++k) {
        source_half();
        std::copy_backward(rec.v.begin(), rec.v.end() - 1, rec.v.end());
        rec.v[0] = s.v_inflow;
        source_half();
        for (int j = 0; j < n; ++j)
            if (!std::isfinite(rec.v[j]) || !std::isfinite(rec.theta[j]))
                throw std::runtime_error("area_equation_solve: non-finite value at cell " +
                                         std::to_string(j));
    }
    return rec;
}

double area_rate_from_intensity(double e_abs2, const DerivedParams& d) {
    return 4.0 * std::sqrt(1.0 + d.gamma_minus * d.gamma_minus) * e_abs2;
}

double intensity_from_area_rate(double v, const DerivedParams& d) {
    return v / (4.0 * std::sqrt(1.0 + d.gamma_minus * d.gamma_minus));
}

int count_pulses(const std::vector<double>& v, double frac) {
    double vmax = 0.0;
    for (double x : v) vmax = std::max(vmax, x);
    if (vmax <= 0.0) return 0;
    const double thr = frac * vmax;
    int count = 0;
    for (std::size_t j = 1; j + 1 < v.size(); ++j)
        if (v[j] > thr && v[j] > v[j - 1] && v[j] >= v[j + 1]) ++count;
    return count;
}

}  // namespace psr
