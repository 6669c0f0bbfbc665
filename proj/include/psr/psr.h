/*
 * psr — 1+1D semi-classical simulator of two-photon paired superradiance.
 *
 * C API of the shared library: opaque handles, integer status codes.  All
 * functions returning int yield PSR_OK (0) on success; psr_last_error()
 * returns a thread-local description of the most recent failure.
 */

#ifndef PSR_H
#define PSR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum psr_status {
    PSR_OK = 0,
    PSR_EINVAL = 1,   /* invalid argument / violated invariant */
    PSR_EPARSE = 2,   /* config text could not be parsed */
    PSR_ENUMERIC = 3, /* integrator hit a non-finite value */
    PSR_EIO = 4,      /* file system failure */
    PSR_ENOEVENT = 5, /* no explosive event in the record */
    PSR_ERANGE = 6,   /* index out of range / buffer too small */
};

const char* psr_status_name(int status);
const char* psr_last_error(void);

/* ---- derived medium constants ---- */

typedef struct psr_derived {
    double alpha_m_cm;       /* inverse unit length, cm^-1 */
    double length_unit_cm;
    double time_unit_ns;
    double gamma_plus;
    double gamma_minus;
    double tau1, tau2;       /* dimensionless relaxation times */
    double flux_unit_W_mm2;  /* physical flux at |e|^2 = 1 */
} psr_derived;

/* T1_ns / T2_ns may be HUGE_VAL for no relaxation. */
int psr_derive(double n_cm3, double eps_eg_eV, double mu_ee, double mu_gg, double mu_ge,
               double T1_ns, double T2_ns, psr_derived* out);

/* ---- scenarios ---- */

typedef struct psr_scenario psr_scenario;

int psr_scenario_parse(const char* config_text, psr_scenario** out);
int psr_scenario_parse_file(const char* path, psr_scenario** out);
int psr_scenario_preset(const char* name, psr_scenario** out);
/* Same keys as config files, plus the alias trigger.power_W_mm2. */
int psr_scenario_set(psr_scenario* s, const char* key, const char* value);
/* Fully resolved configuration echo; *needed excludes the terminator. */
int psr_scenario_echo(const psr_scenario* s, char* buf, size_t cap, size_t* needed);
void psr_scenario_destroy(psr_scenario* s);

/* ---- runs ---- */

typedef struct psr_run psr_run;

typedef struct psr_sample {
    double t_ns;
    double flux_right_W_mm2;
    double flux_left_W_mm2;
    double stored_energy_fraction;
} psr_sample;

int psr_run_scenario(const psr_scenario* s, psr_run** out);
size_t psr_run_series_count(const psr_run* r);
int psr_run_series_get(const psr_run* r, size_t index, psr_sample* out);
/* First output-flux maximum above 10x the trigger; PSR_ENOEVENT if none. */
int psr_run_delay_ns(const psr_run* r, double* out_ns);
int psr_run_peak_flux(const psr_run* r, double* out_W_mm2);
int psr_run_released_fraction(const psr_run* r, double* out);
/* series.csv, snapshot_t*.csv and config.txt under dir. */
int psr_run_write_csv(const psr_run* r, const char* dir);
void psr_run_destroy(psr_run* r);

/* One run per value of a numeric config key; per-run directories
 * value_<index> plus summary.csv under out_dir.  workers <= 0 picks the
 * hardware concurrency.  Returns PSR_OK only if every run succeeded. */
int psr_sweep(const psr_scenario* base, const char* axis_key, const double* values,
              size_t n_values, const char* out_dir, int workers);

/* ---- steady soliton profiles ---- */

typedef struct psr_soliton psr_soliton;

enum psr_soliton_kind { PSR_SOLITON_ABSORBER = 0, PSR_SOLITON_EMITTER = 1 };

typedef struct psr_soliton_request {
    double n_cm3;
    double eps_eg_eV; /* 0 -> default medium values */
    double mu_ee, mu_gg, mu_ge;
    double T1_ns, T2_ns;
    double e0;        /* dimensionless total-flux amplitude */
    double length_cm; /* profile window */
    int kind;         /* psr_soliton_kind */
    int samples;      /* 0 -> default */
} psr_soliton_request;

int psr_soliton_solve(const psr_soliton_request* req, psr_soliton** out);
size_t psr_soliton_sample_count(const psr_soliton* p);
/* Arrays of length psr_soliton_sample_count(); any pointer may be NULL. */
int psr_soliton_samples(const psr_soliton* p, double* x_cm, double* flux_R_W_mm2,
                        double* flux_L_W_mm2, double* r3);
int psr_soliton_info(const psr_soliton* p, double* size_xi, double* winding_turns,
                     int* spinor, double* residual_printed, double* residual_rederived,
                     double* max_dtau_residual);
int psr_soliton_write_csv(const psr_soliton* p, const char* path);
void psr_soliton_destroy(psr_soliton* p);

/* ---- pulse propagation analytics ---- */

/* Area of a rectangular pulse in radians. */
int psr_pulse_area_rect(double power_W_mm2, double duration_ns, double mu_ee, double mu_gg,
                        double mu_ge, double* out_theta);
int psr_pulse_split_count(double theta, long* out_n, double* out_remainder);
/* sign_plus != 0 selects the amplifier branch. */
int psr_pulse_compression(double theta, double alpha_m_x, int sign_plus, double* out_E);

#ifdef __cplusplus
}
#endif

#endif /* PSR_H */
