// Copyright 2026 The acgem Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the acgem library. Every function returns an
 * acgem_status; on failure acgem_last_error() describes the problem for the
 * calling thread. Angular frequencies are rad/s, detunings of the shifting
 * laser are measured from the D1 F=2 centroid (red negative), intensities
 * are W/m^2 and splittings Hz per (W/m^2). */

#ifndef ACGEM_H
#define ACGEM_H

#include <stddef.h>

#if defined(_WIN32)
#if defined(ACGEM_BUILDING_LIBRARY)
#define ACGEM_API __declspec(dllexport)
#else
#define ACGEM_API __declspec(dllimport)
#endif
#else
#define ACGEM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    ACGEM_OK = 0,
    ACGEM_ERR_INVALID_ARGUMENT = 1,
    ACGEM_ERR_NEAR_RESONANCE = 2,
    ACGEM_ERR_FORBIDDEN_SCHEME = 3,
    ACGEM_ERR_UNDEFINED_RATIO = 4,
    ACGEM_ERR_NUMERICAL = 5,
    ACGEM_ERR_OUT_OF_RANGE = 6,
    ACGEM_ERR_INTERNAL = 99
} acgem_status;

ACGEM_API const char *acgem_version(void);
ACGEM_API const char *acgem_last_error(void);
/* Nonzero for near-resonance, forbidden-scheme and undefined-ratio codes. */
ACGEM_API int acgem_is_domain_error(acgem_status status);

/* ---- atomic structure ---- */

typedef struct acgem_atom acgem_atom;

typedef struct {
    double mass;
    double wavelength_D1;
    double gamma;
    double delta_hfs;
    double delta_hfs_excited_d1;
    double delta_hfs_excited_d2;
    double delta_fs;
    double g1;
    double g2;
} acgem_atom_params;

ACGEM_API acgem_status acgem_atom_create_rb87(acgem_atom **out);
ACGEM_API acgem_status acgem_atom_create(const acgem_atom_params *params, acgem_atom **out);
ACGEM_API void acgem_atom_destroy(acgem_atom *atom);
ACGEM_API acgem_status acgem_atom_get_params(const acgem_atom *atom, acgem_atom_params *out);
ACGEM_API acgem_status acgem_atom_omega_d1(const acgem_atom *atom, double *out);
ACGEM_API acgem_status acgem_atom_wavelength_d2(const acgem_atom *atom, double *out);
/* jp_twice is 2 J' (1 for D1, 3 for D2). */
ACGEM_API acgem_status acgem_atom_reduced_dipole(const acgem_atom *atom, int jp_twice, double *out);

ACGEM_API acgem_status acgem_wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3,
                                       double *out);
ACGEM_API acgem_status acgem_wigner_6j(double j1, double j2, double j3, double j4, double j5, double j6,
                                       double *out);
ACGEM_API acgem_status acgem_dipole_matrix_element(const acgem_atom *atom, int F, int mF, int jp_twice, int Fp,
                                                   int mFp, int q, double *out);
ACGEM_API acgem_status acgem_detuning_of(const acgem_atom *atom, double omega_l, int F, int jp_twice,
                                         double *out);

/* ---- light shifts ---- */

typedef struct {
    int approx; /* 0: full excited-state sum, 1: closed-form approximation */
    int rwa;    /* 1: drop counter-rotating terms */
    double guard_gammas;
} acgem_options;

ACGEM_API void acgem_options_default(acgem_options *out);

typedef struct {
    int m1;
    int m2;
    int q_p;
    int q_c;
    int multiplier;
} acgem_scheme;

typedef struct {
    double deltaF1;
    double deltaF2;
    double delta12;
    double deltaT;
    int sign;
} acgem_splittings;

typedef enum { ACGEM_PROFILE_GAUSSIAN = 0, ACGEM_PROFILE_LINEAR = 1 } acgem_profile_kind;

typedef struct {
    int kind;
    double power;
    double length_L;
    double radius_R;
    double waist; /* Gaussian only; <= 0 selects 2L/3 */
} acgem_profile;

ACGEM_API acgem_status acgem_laser_omega(const acgem_atom *atom, double d1_detuning, double *out);
ACGEM_API acgem_status acgem_stark_shift(const acgem_atom *atom, int F, int mF, double omega_l, int q,
                                         double intensity, const acgem_options *opt, double *out);
ACGEM_API acgem_status acgem_select_level_scheme(int q_p, int q_c, acgem_scheme *out);
ACGEM_API acgem_status acgem_compute_splittings(const acgem_atom *atom, double omega_l, int q, const acgem_scheme *scheme,
                                                const acgem_options *opt, acgem_splittings *out);
ACGEM_API acgem_status acgem_profile_intensity(const acgem_profile *profile, double x, double z, double *out);
/* Arrays may be NULL; non-NULL arrays must hold z_points values. */
ACGEM_API acgem_status acgem_gradient_and_bandwidth(const acgem_atom *atom, const acgem_profile *profile,
                                                    double omega_l, int q, const acgem_scheme *scheme,
                                                    const acgem_options *opt, size_t z_points, double *z,
                                                    double *intensity, double *delta_t, double *eta,
                                                    double *bandwidth, int *monotone);

/* ---- decoherence ---- */

ACGEM_API acgem_status acgem_scattering_rate(const acgem_atom *atom, int F, int mF, double omega_l, int q,
                                             double intensity, int simplified, const acgem_options *opt,
                                             double *out);
ACGEM_API acgem_status acgem_scattering_per_bandwidth(const acgem_atom *atom, int F, int mF, double omega_l, int q,
                                                      const acgem_scheme *scheme, const acgem_options *opt,
                                                      double *out);
ACGEM_API acgem_status acgem_find_optimal_detuning(const acgem_atom *atom, int F, int mF, int q,
                                                   const acgem_scheme *scheme, double lo, double hi,
                                                   size_t grid_points, double rel_tol, const acgem_options *opt,
                                                   double *detuning, double *rate_per_hz, int *boundary);
ACGEM_API acgem_status acgem_coupling_field_scattering(const acgem_atom *atom, double Omega_c, double Delta_1p,
                                                       int q_c, const acgem_options *opt, double *out);

typedef struct {
    double wavelength;
    double power;
    double waist;
    double length_L;
    double inv_alpha;
    double beta_hcc;
    double density_n;
    int q;
    int F;
    int mF;
} acgem_trap_spec;

typedef struct {
    double depth_K;
    double depth_J;
    double peak_intensity;
    double scatter_rate;
    double recoil_energy;
    double lifetime;
    double site_detuning_diff;
    double collision_rate;
    double background_rate;
    double coherence_time;
} acgem_trap_report;

ACGEM_API void acgem_trap_spec_default(acgem_trap_spec *out);
ACGEM_API acgem_status acgem_trap_report_compute(const acgem_atom *atom, const acgem_trap_spec *spec,
                                                 double bandwidth, const acgem_options *opt,
                                                 acgem_trap_report *out);

/* ---- gradient echo dynamics ---- */

typedef struct acgem_schedule acgem_schedule;
typedef struct acgem_gem_result acgem_gem_result;

typedef enum { ACGEM_SWITCH_REVERSE = 0, ACGEM_SWITCH_FLIP = 1 } acgem_switch_method;
typedef enum { ACGEM_GRID_COARSE = 0, ACGEM_GRID_DEFAULT = 1, ACGEM_GRID_FINE = 2 } acgem_grid;
typedef enum { ACGEM_SHAPE_CENTRED = 0, ACGEM_SHAPE_ONE_SIDED = 1 } acgem_gradient_shape;

typedef struct {
    double length_L;
    double gamma;
    double g;
    double gN_over_c;
    size_t z_points;
    double dt;
    double total_time;
    size_t snapshot_stride;
} acgem_gem_config;

typedef struct {
    double t_peak;
    double duration_tp;
    double amplitude_re;
    double amplitude_im;
    double carrier_offset;
} acgem_pulse;

typedef struct {
    double efficiency;
    double transmitted_fraction;
    double echo_time;
    double time_reversal_fidelity;
    double phase_overlap;
    double carrier_shift;
    double spectral_resolution;
} acgem_recall_metrics;

typedef struct {
    double g_eff;
    double gamma_eff;
    int far_detuned;
    int slow_enough;
} acgem_two_level;

ACGEM_API acgem_status acgem_schedule_create(const double *delta_of_z, size_t z_points, double freq_offset,
                                             acgem_schedule **out);
ACGEM_API void acgem_schedule_destroy(acgem_schedule *schedule);
ACGEM_API acgem_status acgem_schedule_add_segment(acgem_schedule *schedule, double t_start,
                                                  const double *delta_of_z, size_t z_points, double freq_offset);
ACGEM_API acgem_status acgem_schedule_apply_switch(acgem_schedule *schedule, int method, double t_switch,
                                                   int compensate);
ACGEM_API acgem_status acgem_schedule_segment_count(const acgem_schedule *schedule, size_t *out);
/* delta_of_z may be NULL; otherwise it must hold z_points values. */
ACGEM_API acgem_status acgem_schedule_segment(const acgem_schedule *schedule, size_t index, double *t_start,
                                              double *freq_offset, double *delta_of_z, size_t z_points);

ACGEM_API acgem_status acgem_gem_reference_scenario(double d_prime, double bandwidth, double length_L, int grid,
                                                    int method, int compensate, int shape, double bandwidth_ratio,
                                                    double gamma, acgem_gem_config *config, acgem_pulse *pulse,
                                                    double *t_switch, acgem_schedule **schedule);
ACGEM_API acgem_status acgem_gem_solve(const acgem_gem_config *config, const acgem_schedule *schedule,
                                       const acgem_pulse *pulse, acgem_gem_result **out);
ACGEM_API void acgem_gem_result_destroy(acgem_gem_result *result);
ACGEM_API acgem_status acgem_gem_result_length(const acgem_gem_result *result, size_t *out);
/* Any output pointer may be NULL; others must hold acgem_gem_result_length values. */
ACGEM_API acgem_status acgem_gem_result_series(const acgem_gem_result *result, double *t, double *in_re,
                                               double *in_im, double *out_re, double *out_im, double *stored);
ACGEM_API acgem_status acgem_gem_result_energies(const acgem_gem_result *result, double *energy_in,
                                                 double *energy_out);
ACGEM_API acgem_status acgem_gem_result_snapshot_count(const acgem_gem_result *result, size_t *snapshots,
                                                       size_t *z_points);
ACGEM_API acgem_status acgem_gem_result_snapshot(const acgem_gem_result *result, size_t index, double *t,
                                                 double *sigma_re, double *sigma_im, double *field_re,
                                                 double *field_im);
ACGEM_API acgem_status acgem_gem_metrics(const acgem_gem_result *result, const acgem_pulse *pulse, double t_switch,
                                         acgem_recall_metrics *out);
ACGEM_API acgem_status acgem_effective_two_level(double Omega_c, double Delta_1p, double g, double gamma,
                                                 double gamma_0, double d, double T, double margin,
                                                 acgem_two_level *out);

/* ---- memory budget ---- */

typedef struct {
    double pulse_tp;
    double store_ts;
    double Omega_over_Delta;
    double Delta_1p;
    double Delta_ac;
    int q_ac;
    int q_c;
    int q_p;
    double length_L;
    double radius_R;
    double atom_count_N;
    double loading_eff;
    double coupling_g;
    double bandwidth;
    int multi_pulse;
} acgem_memory_scenario;

typedef struct {
    double trap_scatter;
    double collision_rate;
    double background_loss;
} acgem_background;

typedef struct {
    double gamma_ac_per_hz;
    double gamma_c_per_omega2;
    acgem_background background;
} acgem_rate_model;

typedef struct {
    double d_prime;
    double eps_w;
    double eps_r;
    double eps_rw;
    double eps_s;
    double eps_total;
    double Gamma_bg;
    double Gamma_rw;
    double Gamma_ac;
    double Gamma_c;
    double dbp;
} acgem_breakdown;

typedef enum { ACGEM_AXIS_PULSE_TP = 0, ACGEM_AXIS_STORE_TS = 1, ACGEM_AXIS_OMEGA_OVER_DELTA = 2 } acgem_sweep_axis;

typedef struct {
    double value;
    double pulse_tp;
    double store_ts;
    double bandwidth;
    acgem_breakdown breakdown;
} acgem_sweep_row;

ACGEM_API acgem_status acgem_gaussian_pulse_bandwidth(double t_p, double *out);
ACGEM_API void acgem_reference_memory_scenario(acgem_memory_scenario *out);
ACGEM_API acgem_status acgem_reference_background(const acgem_atom *atom, acgem_background *out);
ACGEM_API acgem_status acgem_build_rate_model(const acgem_atom *atom, const acgem_memory_scenario *scenario,
                                              const acgem_background *background, const acgem_options *opt,
                                              acgem_rate_model *out);
ACGEM_API acgem_status acgem_efficiency_breakdown(const acgem_memory_scenario *scenario,
                                                  const acgem_rate_model *rates, acgem_breakdown *out);
/* rows must hold n values. */
ACGEM_API acgem_status acgem_efficiency_sweep(const acgem_memory_scenario *scenario, const acgem_rate_model *rates,
                                              int axis, const double *values, size_t n, int follow_pulse,
                                              acgem_sweep_row *rows);
ACGEM_API acgem_status acgem_threshold_storage_ratio(const acgem_memory_scenario *scenario,
                                                     const acgem_rate_model *rates, double threshold, double lo,
                                                     double hi, double *out);
ACGEM_API acgem_status acgem_bandwidth_per_watt(const acgem_atom *atom, double omega_l, int q,
                                                const acgem_scheme *scheme, const acgem_profile *profile,
                                                const acgem_options *opt, double *out);
ACGEM_API acgem_status acgem_power_for_bandwidth(const acgem_atom *atom, double bandwidth, double omega_l, int q,
                                                 const acgem_scheme *scheme, const acgem_profile *profile,
                                                 const acgem_options *opt, double *out);

#ifdef __cplusplus
}
#endif

#endif
