#include "psr/psr.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include "core/config.hpp"
#include "core/conservation.hpp"
#include "core/csv.hpp"
#include "core/pulse.hpp"
#include "core/soliton.hpp"
#include "core/solver.hpp"
#include "core/sweep.hpp"

namespace {

thread_local std::string g_last_error;

int fail(int code, const std::string& message) {
    g_last_error = message;
    return code;
}

// Maps C++ exceptions from the core onto status codes.
template <class F>
int guarded(F&& f) {
    try {
        return f();
    } catch (const psr::ConfigError& e) {
        return fail(PSR_EPARSE, e.what());
    } catch (const psr::NumericalError& e) {
        return fail(PSR_ENUMERIC, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(PSR_EINVAL, e.what());
    } catch (const std::exception& e) {
        return fail(PSR_EIO, e.what());
    }
}

}  // namespace

struct psr_scenario {
    psr::RunConfig cfg;
};

struct psr_run {
    psr::RunRecord record;
    std::string config_echo;
};

struct psr_soliton {
    psr::SolitonProfile profile;
    psr::AnalyticResidual residual;
    double dtau_residual = 0.0;
};

extern "C" {

const char* psr_status_name(int status) {
    switch (status) {
        case PSR_OK: return "ok";
        case PSR_EINVAL: return "invalid argument";
        case PSR_EPARSE: return "parse error";
        case PSR_ENUMERIC: return "numerical instability";
        case PSR_EIO: return "i/o error";
        case PSR_ENOEVENT: return "no explosive event";
        case PSR_ERANGE: return "out of range";
    }
    return "unknown status";
}

const char* psr_last_error(void) { return g_last_error.c_str(); }

int psr_derive(double n_cm3, double eps_eg_eV, double mu_ee, double mu_gg, double mu_ge,
               double T1_ns, double T2_ns, psr_derived* out) {
    if (!out) return fail(PSR_EINVAL, "psr_derive: out is NULL");
    return guarded([&] {
        psr::MediumParams m;
        m.n_cm3 = n_cm3;
        m.eps_eg_eV = eps_eg_eV;
        m.mu_ee = mu_ee;
        m.mu_gg = mu_gg;
        m.mu_ge = mu_ge;
        m.T1_ns = T1_ns;
        m.T2_ns = T2_ns;
        const psr::DerivedParams d = psr::derive(m);
        out->alpha_m_cm = d.alpha_m_cm;
        out->length_unit_cm = d.length_unit_cm;
        out->time_unit_ns = d.time_unit_ns;
        out->gamma_plus = d.gamma_plus;
        out->gamma_minus = d.gamma_minus;
        out->tau1 = d.tau1;
        out->tau2 = d.tau2;
        out->flux_unit_W_mm2 = d.flux_unit_W_mm2;
        return PSR_OK;
    });
}

int psr_scenario_parse(const char* config_text, psr_scenario** out) {
    if (!config_text || !out) return fail(PSR_EINVAL, "psr_scenario_parse: NULL argument");
    return guarded([&] {
        auto* s = new psr_scenario{psr::parse_config(config_text)};
        *out = s;
        return PSR_OK;
    });
}

int psr_scenario_parse_file(const char* path, psr_scenario** out) {
    if (!path || !out) return fail(PSR_EINVAL, "psr_scenario_parse_file: NULL argument");
    return guarded([&] {
        auto* s = new psr_scenario{psr::parse_config_file(path)};
        *out = s;
        return PSR_OK;
    });
}

int psr_scenario_preset(const char* name, psr_scenario** out) {
    if (!name || !out) return fail(PSR_EINVAL, "psr_scenario_preset: NULL argument");
    return guarded([&] {
        auto* s = new psr_scenario{psr::preset(name)};
        *out = s;
        return PSR_OK;
    });
}

int psr_scenario_set(psr_scenario* s, const char* key, const char* value) {
    if (!s || !key || !value) return fail(PSR_EINVAL, "psr_scenario_set: NULL argument");
    return guarded([&] {
        psr::set_key(s->cfg, key, value);
        return PSR_OK;
    });
}

int psr_scenario_echo(const psr_scenario* s, char* buf, size_t cap, size_t* needed) {
    if (!s) return fail(PSR_EINVAL, "psr_scenario_echo: NULL scenario");
    const std::string text = psr::emit_config(s->cfg);
    if (needed) *needed = text.size();
    if (!buf) return PSR_OK;
    if (cap <= text.size()) return fail(PSR_ERANGE, "psr_scenario_echo: buffer too small");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    return PSR_OK;
}

void psr_scenario_destroy(psr_scenario* s) { delete s; }

int psr_run_scenario(const psr_scenario* s, psr_run** out) {
    if (!s || !out) return fail(PSR_EINVAL, "psr_run_scenario: NULL argument");
    return guarded([&] {
        s->cfg.scenario.validate();
        auto* r = new psr_run;
        try {
            r->record = psr::run(s->cfg.scenario);
            r->config_echo = psr::emit_config(s->cfg);
        } catch (...) {
            delete r;
            throw;
        }
        *out = r;
        return PSR_OK;
    });
}

size_t psr_run_series_count(const psr_run* r) { return r ? r->record.series.size() : 0; }

int psr_run_series_get(const psr_run* r, size_t index, psr_sample* out) {
    if (!r || !out) return fail(PSR_EINVAL, "psr_run_series_get: NULL argument");
    if (index >= r->record.series.size())
        return fail(PSR_ERANGE, "psr_run_series_get: index out of range");
    const psr::SeriesSample& s = r->record.series[index];
    out->t_ns = s.t_ns;
    out->flux_right_W_mm2 = s.flux_right_W_mm2;
    out->flux_left_W_mm2 = s.flux_left_W_mm2;
    out->stored_energy_fraction = s.stored_energy_fraction;
    return PSR_OK;
}

int psr_run_delay_ns(const psr_run* r, double* out_ns) {
    if (!r || !out_ns) return fail(PSR_EINVAL, "psr_run_delay_ns: NULL argument");
    const auto d = psr::delay_time_ns(r->record);
    if (!d) return fail(PSR_ENOEVENT, "no explosive event: output never crossed 10x trigger");
    *out_ns = *d;
    return PSR_OK;
}

int psr_run_peak_flux(const psr_run* r, double* out_W_mm2) {
    if (!r || !out_W_mm2) return fail(PSR_EINVAL, "psr_run_peak_flux: NULL argument");
    *out_W_mm2 = psr::peak_output_flux(r->record);
    return PSR_OK;
}

int psr_run_released_fraction(const psr_run* r, double* out) {
    if (!r || !out) return fail(PSR_EINVAL, "psr_run_released_fraction: NULL argument");
    *out = psr::released_fraction(r->record);
    return PSR_OK;
}

int psr_run_write_csv(const psr_run* r, const char* dir) {
    if (!r || !dir) return fail(PSR_EINVAL, "psr_run_write_csv: NULL argument");
    return guarded([&] {
        psr::write_run_outputs(r->record, r->config_echo, dir);
        return PSR_OK;
    });
}

void psr_run_destroy(psr_run* r) { delete r; }

int psr_sweep(const psr_scenario* base, const char* axis_key, const double* values,
              size_t n_values, const char* out_dir, int workers) {
    if (!base || !axis_key || (!values && n_values > 0) || !out_dir)
        return fail(PSR_EINVAL, "psr_sweep: NULL argument");
    return guarded([&]() -> int {
        const std::vector<double> vals(values, values + n_values);
        const psr::SweepResult result = psr::sweep(base->cfg, axis_key, vals, workers);
        std::filesystem::create_directories(out_dir);
        psr::write_sweep_summary_csv(axis_key, result.rows,
                                     std::string(out_dir) + "/summary.csv");
        bool all_ok = true;
        for (std::size_t i = 0; i < result.rows.size(); ++i) {
            if (!result.rows[i].ok) {
                all_ok = false;
                continue;
            }
            psr::RunConfig cfg = base->cfg;
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", vals[i]);
            psr::set_key(cfg, axis_key, buf);
            psr::write_run_outputs(result.records[i], psr::emit_config(cfg),
                                   std::string(out_dir) + "/value_" + std::to_string(i));
        }
        if (!all_ok) return fail(PSR_ENUMERIC, "psr_sweep: at least one run failed (see summary)");
        return PSR_OK;
    });
}

int psr_soliton_solve(const psr_soliton_request* req, psr_soliton** out) {
    if (!req || !out) return fail(PSR_EINVAL, "psr_soliton_solve: NULL argument");
    return guarded([&] {
        psr::MediumParams m;
        m.n_cm3 = req->n_cm3;
        if (req->eps_eg_eV > 0.0) m.eps_eg_eV = req->eps_eg_eV;
        if (req->mu_ee > 0.0) m.mu_ee = req->mu_ee;
        if (req->mu_gg > 0.0) m.mu_gg = req->mu_gg;
        if (req->mu_ge > 0.0) m.mu_ge = req->mu_ge;
        if (req->T1_ns > 0.0) m.T1_ns = req->T1_ns;
        if (req->T2_ns > 0.0) m.T2_ns = req->T2_ns;
        const psr::DerivedParams d = psr::derive(m);
        const double l = req->length_cm * d.alpha_m_cm;
        const auto kind = req->kind == PSR_SOLITON_EMITTER ? psr::SolitonKind::emitter
                                                           : psr::SolitonKind::absorber;
        const int samples = req->samples > 0 ? req->samples : 4001;
        auto* p = new psr_soliton;
        try {
            p->profile = psr::integrate_profile(req->e0, l, kind, d, samples);
            p->residual = psr::analytic_residual(p->profile);
            p->dtau_residual = psr::steady_state_residual(p->profile);
        } catch (...) {
            delete p;
            throw;
        }
        *out = p;
        return PSR_OK;
    });
}

size_t psr_soliton_sample_count(const psr_soliton* p) { return p ? p->profile.xi.size() : 0; }

int psr_soliton_samples(const psr_soliton* p, double* x_cm, double* flux_R_W_mm2,
                        double* flux_L_W_mm2, double* r3) {
    if (!p) return fail(PSR_EINVAL, "psr_soliton_samples: NULL profile");
    const psr::SolitonProfile& pr = p->profile;
    const double fu = pr.derived.flux_unit_W_mm2;
    for (std::size_t k = 0; k < pr.xi.size(); ++k) {
        if (x_cm) x_cm[k] = pr.xi[k] * pr.derived.length_unit_cm;
        if (flux_R_W_mm2) flux_R_W_mm2[k] = std::norm(pr.eR[k]) * fu;
        if (flux_L_W_mm2) flux_L_W_mm2[k] = std::norm(pr.eL[k]) * fu;
        if (r3) r3[k] = pr.r3[k];
    }
    return PSR_OK;
}

int psr_soliton_info(const psr_soliton* p, double* size_xi, double* winding_turns, int* spinor,
                     double* residual_printed, double* residual_rederived,
                     double* max_dtau_residual) {
    if (!p) return fail(PSR_EINVAL, "psr_soliton_info: NULL profile");
    if (size_xi) *size_xi = p->profile.xi_s;
    if (winding_turns) *winding_turns = p->profile.winding_turns;
    if (spinor) *spinor = p->profile.winding_spinor ? 1 : 0;
    if (residual_printed) *residual_printed = p->residual.printed;
    if (residual_rederived) *residual_rederived = p->residual.rederived;
    if (max_dtau_residual) *max_dtau_residual = p->dtau_residual;
    return PSR_OK;
}

int psr_soliton_write_csv(const psr_soliton* p, const char* path) {
    if (!p || !path) return fail(PSR_EINVAL, "psr_soliton_write_csv: NULL argument");
    return guarded([&] {
        std::ofstream out(path);
        if (!out) throw std::runtime_error(std::string("cannot write '") + path + "'");
        const psr::SolitonProfile& pr = p->profile;
        const double fu = pr.derived.flux_unit_W_mm2;
        out << "x_cm,flux_R_W_mm2,flux_L_W_mm2,r3\n";
        for (std::size_t k = 0; k < pr.xi.size(); ++k) {
            out << psr::csv_num(pr.xi[k] * pr.derived.length_unit_cm) << ','
                << psr::csv_num(std::norm(pr.eR[k]) * fu) << ','
                << psr::csv_num(std::norm(pr.eL[k]) * fu) << ',' << psr::csv_num(pr.r3[k])
                << '\n';
        }
        if (!out) throw std::runtime_error(std::string("failed writing '") + path + "'");
        return PSR_OK;
    });
}

void psr_soliton_destroy(psr_soliton* p) { delete p; }

int psr_pulse_area_rect(double power_W_mm2, double duration_ns, double mu_ee, double mu_gg,
                        double mu_ge, double* out_theta) {
    if (!out_theta) return fail(PSR_EINVAL, "psr_pulse_area_rect: out is NULL");
    return guarded([&] {
        psr::MediumParams m;
        m.n_cm3 = 1.0;  // density does not enter the pulse area
        m.mu_ee = mu_ee;
        m.mu_gg = mu_gg;
        m.mu_ge = mu_ge;
        *out_theta = psr::pulse_area(psr::RectPulse{power_W_mm2, duration_ns}, m);
        return PSR_OK;
    });
}

int psr_pulse_split_count(double theta, long* out_n, double* out_remainder) {
    if (!out_n || !out_remainder) return fail(PSR_EINVAL, "psr_pulse_split_count: NULL out");
    return guarded([&] {
        const psr::SplitCount c = psr::split_count(theta);
        *out_n = c.n;
        *out_remainder = c.remainder;
        return PSR_OK;
    });
}

int psr_pulse_compression(double theta, double alpha_m_x, int sign_plus, double* out_E) {
    if (!out_E) return fail(PSR_EINVAL, "psr_pulse_compression: out is NULL");
    *out_E = psr::compression_factor(
        theta, alpha_m_x, sign_plus ? psr::GainSign::amplifier : psr::GainSign::absorber);
    return PSR_OK;
}

}  // extern "C"
