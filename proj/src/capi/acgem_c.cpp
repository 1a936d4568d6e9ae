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

#include "acgem/acgem.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "acgem/budget.hpp"
#include "acgem/decoherence.hpp"
#include "acgem/error.hpp"
#include "acgem/gem.hpp"
#include "acgem/stark.hpp"

struct acgem_atom {
    acgem::atomic::AtomSpec spec;
};

struct acgem_schedule {
    acgem::gem::GradientSchedule schedule;
};

struct acgem_gem_result {
    acgem::gem::GemState state;
};

namespace {

using namespace acgem;

thread_local std::string g_last_error;

acgem_status fail(acgem_status s, const char *what) {
    g_last_error = what;
    return s;
}

template <class F>
acgem_status guarded(F &&body) {
    try {
        g_last_error.clear();
        body();
        return ACGEM_OK;
    } catch (const Error &e) {
        return fail(static_cast<acgem_status>(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(ACGEM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(ACGEM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ACGEM_ERR_INTERNAL, "unknown failure");
    }
}

void need(const void *p, const char *name) {
    if (p == nullptr) throw Error(ErrorCode::invalid_argument, std::string("null argument: ") + name);
}

stark::ShiftOptions options(const acgem_options *o) {
    stark::ShiftOptions s;
    if (o != nullptr) {
        s.mode = o->approx ? stark::ShiftMode::approx : stark::ShiftMode::full;
        s.rwa = o->rwa != 0;
        s.guard_gammas = o->guard_gammas;
    }
    return s;
}

stark::LaserSpec laser(double omega_l, int q) {
    stark::LaserSpec l;
    l.omega_l = omega_l;
    l.q = q;
    l.validate();
    return l;
}

stark::LevelScheme scheme_of(const acgem_scheme *s) {
    need(s, "scheme");
    stark::LevelScheme out;
    out.m1 = s->m1;
    out.m2 = s->m2;
    out.q_p = s->q_p;
    out.q_c = s->q_c;
    out.multiplier = s->multiplier;
    return out;
}

void scheme_to(const stark::LevelScheme &s, acgem_scheme *out) {
    out->m1 = s.m1;
    out->m2 = s.m2;
    out->q_p = s.q_p;
    out->q_c = s.q_c;
    out->multiplier = s.multiplier;
}

stark::IntensityProfile profile_of(const acgem_profile *p) {
    need(p, "profile");
    stark::EnsembleGeometry g;
    g.length_L = p->length_L;
    g.radius_R = p->radius_R;
    if (p->kind == ACGEM_PROFILE_LINEAR) return stark::IntensityProfile::linear(p->power, g);
    if (p->kind == ACGEM_PROFILE_GAUSSIAN) return stark::IntensityProfile::gaussian(p->power, g, p->waist);
    throw Error(ErrorCode::invalid_argument, "unknown profile kind");
}

atomic::HalfInt jp(int twice) { return atomic::half(twice); }

gem::GemConfig config_of(const acgem_gem_config *c) {
    need(c, "config");
    gem::GemConfig g;
    g.length_L = c->length_L;
    g.effective_gamma = c->gamma;
    g.g = c->g;
    g.gN_over_c = c->gN_over_c;
    g.z_points = c->z_points;
    g.dt = c->dt;
    g.total_time = c->total_time;
    g.snapshot_stride = c->snapshot_stride;
    return g;
}

gem::PulseSpec pulse_of(const acgem_pulse *p) {
    need(p, "pulse");
    gem::PulseSpec s;
    s.t_peak = p->t_peak;
    s.duration_tp = p->duration_tp;
    s.amplitude = {p->amplitude_re, p->amplitude_im};
    s.carrier_offset = p->carrier_offset;
    return s;
}

budget::MemoryScenario scenario_of(const acgem_memory_scenario *s) {
    need(s, "scenario");
    budget::MemoryScenario m;
    m.pulse_tp = s->pulse_tp;
    m.store_ts = s->store_ts;
    m.Omega_over_Delta = s->Omega_over_Delta;
    m.Delta_1p = s->Delta_1p;
    m.Delta_ac = s->Delta_ac;
    m.q_ac = s->q_ac;
    m.q_c = s->q_c;
    m.q_p = s->q_p;
    m.geometry.length_L = s->length_L;
    m.geometry.radius_R = s->radius_R;
    m.geometry.atom_count_N = s->atom_count_N;
    m.geometry.loading_eff = s->loading_eff;
    m.geometry.coupling_g = s->coupling_g;
    m.bandwidth_Bs = s->bandwidth;
    m.multi_pulse = s->multi_pulse != 0;
    return m;
}

budget::RateModel rates_of(const acgem_rate_model *r) {
    need(r, "rates");
    budget::RateModel m;
    m.gamma_ac_per_hz = r->gamma_ac_per_hz;
    m.gamma_c_per_omega2 = r->gamma_c_per_omega2;
    m.background = {r->background.trap_scatter, r->background.collision_rate, r->background.background_loss};
    return m;
}

void breakdown_to(const budget::EfficiencyBreakdown &b, acgem_breakdown *o) {
    *o = {b.d_prime, b.eps_w,    b.eps_r,    b.eps_rw,   b.eps_s, b.eps_total,
          b.Gamma_bg, b.Gamma_rw, b.Gamma_ac, b.Gamma_c, b.dbp};
}

}  // namespace

extern "C" {

const char *acgem_version(void) { return "0.1.0"; }

const char *acgem_last_error(void) { return g_last_error.c_str(); }

int acgem_is_domain_error(acgem_status s) {
    return s == ACGEM_ERR_NEAR_RESONANCE || s == ACGEM_ERR_FORBIDDEN_SCHEME || s == ACGEM_ERR_UNDEFINED_RATIO;
}

acgem_status acgem_atom_create_rb87(acgem_atom **out) {
    return guarded([&] {
        need(out, "out");
        *out = new acgem_atom{atomic::AtomSpec::rb87()};
    });
}

acgem_status acgem_atom_create(const acgem_atom_params *p, acgem_atom **out) {
    return guarded([&] {
        need(p, "params");
        need(out, "out");
        atomic::AtomSpec a = atomic::AtomSpec::rb87();
        a.mass = p->mass;
        a.wavelength_D1 = p->wavelength_D1;
        a.gamma = p->gamma;
        a.delta_hfs = p->delta_hfs;
        a.delta_hfs_excited_d1 = p->delta_hfs_excited_d1;
        a.delta_hfs_excited_d2 = p->delta_hfs_excited_d2;
        a.delta_fs = p->delta_fs;
        a.g1 = p->g1;
        a.g2 = p->g2;
        a.validate();
        *out = new acgem_atom{a};
    });
}

void acgem_atom_destroy(acgem_atom *atom) { delete atom; }

acgem_status acgem_atom_get_params(const acgem_atom *atom, acgem_atom_params *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        const auto &a = atom->spec;
        *out = {a.mass, a.wavelength_D1, a.gamma, a.delta_hfs, a.delta_hfs_excited_d1, a.delta_hfs_excited_d2,
                a.delta_fs, a.g1, a.g2};
    });
}

acgem_status acgem_atom_omega_d1(const acgem_atom *atom, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = atom->spec.omega_D1();
    });
}

acgem_status acgem_atom_wavelength_d2(const acgem_atom *atom, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = atom->spec.wavelength_D2();
    });
}

acgem_status acgem_atom_reduced_dipole(const acgem_atom *atom, int jp_twice, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = atom->spec.reduced_dipole(jp(jp_twice));
    });
}

acgem_status acgem_wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = atomic::wigner_3j(j1, j2, j3, m1, m2, m3);
    });
}

acgem_status acgem_wigner_6j(double j1, double j2, double j3, double j4, double j5, double j6, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = atomic::wigner_6j(j1, j2, j3, j4, j5, j6);
    });
}

acgem_status acgem_dipole_matrix_element(const acgem_atom *atom, int F, int mF, int jp_twice, int Fp, int mFp,
                                         int q, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = atomic::dipole_matrix_element({F, mF}, {jp(jp_twice), Fp, mFp}, atomic::PolarizationQ(q),
                                             atom->spec);
    });
}

acgem_status acgem_detuning_of(const acgem_atom *atom, double omega_l, int F, int jp_twice, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        atomic::HyperfineState g{F, 0};
        g.validate(atom->spec);
        *out = atomic::detuning_of(omega_l, g, jp(jp_twice), atom->spec);
    });
}

void acgem_options_default(acgem_options *out) {
    if (out == nullptr) return;
    stark::ShiftOptions s;
    out->approx = s.mode == stark::ShiftMode::approx;
    out->rwa = s.rwa;
    out->guard_gammas = s.guard_gammas;
}

acgem_status acgem_laser_omega(const acgem_atom *atom, double d1_detuning, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = stark::LaserSpec::from_d1_detuning(atom->spec, d1_detuning, 0).omega_l;
    });
}

acgem_status acgem_stark_shift(const acgem_atom *atom, int F, int mF, double omega_l, int q, double intensity,
                               const acgem_options *opt, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = stark::stark_shift(atom->spec, {F, mF}, laser(omega_l, q), intensity, options(opt));
    });
}

acgem_status acgem_select_level_scheme(int q_p, int q_c, acgem_scheme *out) {
    return guarded([&] {
        need(out, "out");
        scheme_to(stark::select_level_scheme(q_p, q_c), out);
    });
}

acgem_status acgem_compute_splittings(const acgem_atom *atom, double omega_l, int q, const acgem_scheme *scheme,
                              const acgem_options *opt, acgem_splittings *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        const auto s = stark::splittings(atom->spec, laser(omega_l, q), scheme_of(scheme), options(opt));
        *out = {s.deltaF_bar[0], s.deltaF_bar[1], s.delta12_bar, s.deltaT_bar, s.sign};
    });
}

acgem_status acgem_profile_intensity(const acgem_profile *profile, double x, double z, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = stark::profile_intensity(profile_of(profile), x, z);
    });
}

acgem_status acgem_gradient_and_bandwidth(const acgem_atom *atom, const acgem_profile *profile, double omega_l,
                                          int q, const acgem_scheme *scheme, const acgem_options *opt,
                                          size_t z_points, double *z, double *intensity, double *delta_t,
                                          double *eta, double *bandwidth, int *monotone) {
    return guarded([&] {
        need(atom, "atom");
        const auto r = stark::gradient_and_bandwidth(atom->spec, profile_of(profile), laser(omega_l, q),
                                                     scheme_of(scheme), z_points, options(opt));
        if (z) std::copy(r.z.begin(), r.z.end(), z);
        if (intensity) std::copy(r.intensity.begin(), r.intensity.end(), intensity);
        if (delta_t) std::copy(r.delta_t.begin(), r.delta_t.end(), delta_t);
        if (eta) std::copy(r.eta.begin(), r.eta.end(), eta);
        if (bandwidth) *bandwidth = r.bandwidth_Bs;
        if (monotone) *monotone = r.monotone;
    });
}

acgem_status acgem_scattering_rate(const acgem_atom *atom, int F, int mF, double omega_l, int q, double intensity,
                                   int simplified, const acgem_options *opt, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        const auto mode = simplified ? decoherence::ScatterMode::simplified : decoherence::ScatterMode::full;
        *out = decoherence::scattering_rate(atom->spec, {F, mF}, laser(omega_l, q), intensity, mode, options(opt));
    });
}

acgem_status acgem_scattering_per_bandwidth(const acgem_atom *atom, int F, int mF, double omega_l, int q,
                                            const acgem_scheme *scheme, const acgem_options *opt, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = decoherence::scattering_per_bandwidth(atom->spec, {F, mF}, laser(omega_l, q), scheme_of(scheme),
                                                     options(opt));
    });
}

acgem_status acgem_find_optimal_detuning(const acgem_atom *atom, int F, int mF, int q, const acgem_scheme *scheme,
                                         double lo, double hi, size_t grid_points, double rel_tol,
                                         const acgem_options *opt, double *detuning, double *rate_per_hz,
                                         int *boundary) {
    return guarded([&] {
        need(atom, "atom");
        const auto r = decoherence::find_optimal_detuning(atom->spec, {F, mF}, q, scheme_of(scheme), lo, hi,
                                                          grid_points, rel_tol, options(opt));
        if (detuning) *detuning = r.detuning;
        if (rate_per_hz) *rate_per_hz = r.rate_per_hz;
        if (boundary) *boundary = r.boundary_minimum;
    });
}

acgem_status acgem_coupling_field_scattering(const acgem_atom *atom, double Omega_c, double Delta_1p, int q_c,
                                             const acgem_options *opt, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = decoherence::coupling_field_scattering(atom->spec, Omega_c, Delta_1p, q_c, options(opt));
    });
}

void acgem_trap_spec_default(acgem_trap_spec *out) {
    if (out == nullptr) return;
    decoherence::TrapSpec t;
    *out = {t.wavelength, t.power,     t.waist, t.geometry.length_L, t.pressure_inv_alpha,
            t.beta_hcc,   t.density_n, t.q,     t.state.F,           t.state.mF};
}

acgem_status acgem_trap_report_compute(const acgem_atom *atom, const acgem_trap_spec *spec, double bandwidth,
                                       const acgem_options *opt, acgem_trap_report *out) {
    return guarded([&] {
        need(atom, "atom");
        need(spec, "spec");
        need(out, "out");
        decoherence::TrapSpec t;
        t.wavelength = spec->wavelength;
        t.power = spec->power;
        t.waist = spec->waist;
        t.geometry.length_L = spec->length_L;
        t.pressure_inv_alpha = spec->inv_alpha;
        t.beta_hcc = spec->beta_hcc;
        t.density_n = spec->density_n;
        t.q = spec->q;
        t.state = {spec->F, spec->mF};
        const auto r = decoherence::trap_report(atom->spec, t, bandwidth, options(opt));
        *out = {r.depth_Ut,          r.depth_J,        r.peak_intensity, r.scatter_Gamma_t, r.recoil_energy,
                r.lifetime_tau_trap, r.site_detuning_diff, r.collision_rate, r.background_rate, r.coherence_time};
    });
}

acgem_status acgem_schedule_create(const double *delta_of_z, size_t z_points, double freq_offset,
                                   acgem_schedule **out) {
    return guarded([&] {
        need(delta_of_z, "delta_of_z");
        need(out, "out");
        *out = new acgem_schedule{
            gem::GradientSchedule::constant(std::vector<double>(delta_of_z, delta_of_z + z_points), freq_offset)};
    });
}

void acgem_schedule_destroy(acgem_schedule *schedule) { delete schedule; }

acgem_status acgem_schedule_add_segment(acgem_schedule *schedule, double t_start, const double *delta_of_z,
                                        size_t z_points, double freq_offset) {
    return guarded([&] {
        need(schedule, "schedule");
        need(delta_of_z, "delta_of_z");
        auto &segs = schedule->schedule.segments;
        if (!segs.empty() && !(t_start > segs.back().t_start)) {
            throw Error(ErrorCode::invalid_argument, "segments must be time-ordered");
        }
        segs.push_back({t_start, std::vector<double>(delta_of_z, delta_of_z + z_points), freq_offset});
    });
}

acgem_status acgem_schedule_apply_switch(acgem_schedule *schedule, int method, double t_switch, int compensate) {
    return guarded([&] {
        need(schedule, "schedule");
        if (method != ACGEM_SWITCH_REVERSE && method != ACGEM_SWITCH_FLIP) {
            throw Error(ErrorCode::invalid_argument, "unknown switch method");
        }
        const auto m = method == ACGEM_SWITCH_FLIP ? gem::SwitchMethod::PolarizationFlip
                                                   : gem::SwitchMethod::IntensityReverse;
        schedule->schedule = gem::apply_switch(schedule->schedule, m, t_switch, compensate != 0);
    });
}

acgem_status acgem_schedule_segment_count(const acgem_schedule *schedule, size_t *out) {
    return guarded([&] {
        need(schedule, "schedule");
        need(out, "out");
        *out = schedule->schedule.segments.size();
    });
}

acgem_status acgem_schedule_segment(const acgem_schedule *schedule, size_t index, double *t_start,
                                    double *freq_offset, double *delta_of_z, size_t z_points) {
    return guarded([&] {
        need(schedule, "schedule");
        const auto &segs = schedule->schedule.segments;
        if (index >= segs.size()) throw Error(ErrorCode::out_of_range, "segment index out of range");
        const auto &s = segs[index];
        if (t_start) *t_start = s.t_start;
        if (freq_offset) *freq_offset = s.freq_offset;
        if (delta_of_z) {
            if (z_points != s.delta_of_z.size()) throw Error(ErrorCode::invalid_argument, "z_points mismatch");
            std::copy(s.delta_of_z.begin(), s.delta_of_z.end(), delta_of_z);
        }
    });
}

acgem_status acgem_gem_reference_scenario(double d_prime, double bandwidth, double length_L, int grid, int method,
                                          int compensate, int shape, double bandwidth_ratio, double gamma,
                                          acgem_gem_config *config, acgem_pulse *pulse, double *t_switch,
                                          acgem_schedule **schedule) {
    return guarded([&] {
        need(config, "config");
        need(pulse, "pulse");
        need(t_switch, "t_switch");
        need(schedule, "schedule");
        if (grid < ACGEM_GRID_COARSE || grid > ACGEM_GRID_FINE) throw Error(ErrorCode::invalid_argument, "bad grid");
        if (method != ACGEM_SWITCH_REVERSE && method != ACGEM_SWITCH_FLIP) {
            throw Error(ErrorCode::invalid_argument, "unknown switch method");
        }
        if (shape != ACGEM_SHAPE_CENTRED && shape != ACGEM_SHAPE_ONE_SIDED) {
            throw Error(ErrorCode::invalid_argument, "unknown gradient shape");
        }
        const auto s = gem::reference_scenario(
            d_prime, bandwidth, length_L, static_cast<gem::GridPreset>(grid),
            method == ACGEM_SWITCH_FLIP ? gem::SwitchMethod::PolarizationFlip : gem::SwitchMethod::IntensityReverse,
            compensate != 0, shape == ACGEM_SHAPE_ONE_SIDED ? gem::GradientShape::one_sided : gem::GradientShape::centred,
            bandwidth_ratio, gamma);
        *config = {s.config.length_L, s.config.effective_gamma, s.config.g,          s.config.gN_over_c,
                   s.config.z_points, s.config.dt,              s.config.total_time, s.config.snapshot_stride};
        *pulse = {s.pulse.t_peak, s.pulse.duration_tp, s.pulse.amplitude.real(), s.pulse.amplitude.imag(),
                  s.pulse.carrier_offset};
        *t_switch = s.t_switch;
        *schedule = new acgem_schedule{s.schedule};
    });
}

acgem_status acgem_gem_solve(const acgem_gem_config *config, const acgem_schedule *schedule,
                             const acgem_pulse *pulse, acgem_gem_result **out) {
    return guarded([&] {
        need(schedule, "schedule");
        need(out, "out");
        auto r = std::make_unique<acgem_gem_result>();
        r->state = gem::solve(config_of(config), schedule->schedule, pulse_of(pulse));
        *out = r.release();
    });
}

void acgem_gem_result_destroy(acgem_gem_result *result) { delete result; }

acgem_status acgem_gem_result_length(const acgem_gem_result *result, size_t *out) {
    return guarded([&] {
        need(result, "result");
        need(out, "out");
        *out = result->state.t.size();
    });
}

acgem_status acgem_gem_result_series(const acgem_gem_result *result, double *t, double *in_re, double *in_im,
                                     double *out_re, double *out_im, double *stored) {
    return guarded([&] {
        need(result, "result");
        const auto &s = result->state;
        for (std::size_t i = 0; i < s.t.size(); ++i) {
            if (t) t[i] = s.t[i];
            if (in_re) in_re[i] = s.E_in[i].real();
            if (in_im) in_im[i] = s.E_in[i].imag();
            if (out_re) out_re[i] = s.E_out[i].real();
            if (out_im) out_im[i] = s.E_out[i].imag();
            if (stored) stored[i] = s.stored_energy[i];
        }
    });
}

acgem_status acgem_gem_result_energies(const acgem_gem_result *result, double *energy_in, double *energy_out) {
    return guarded([&] {
        need(result, "result");
        if (energy_in) *energy_in = result->state.energy_in;
        if (energy_out) *energy_out = result->state.energy_out;
    });
}

acgem_status acgem_gem_result_snapshot_count(const acgem_gem_result *result, size_t *snapshots, size_t *z_points) {
    return guarded([&] {
        need(result, "result");
        if (snapshots) *snapshots = result->state.snapshot_t.size();
        if (z_points) *z_points = result->state.z.size();
    });
}

acgem_status acgem_gem_result_snapshot(const acgem_gem_result *result, size_t index, double *t, double *sigma_re,
                                       double *sigma_im, double *field_re, double *field_im) {
    return guarded([&] {
        need(result, "result");
        const auto &s = result->state;
        if (index >= s.snapshot_t.size()) throw Error(ErrorCode::out_of_range, "snapshot index out of range");
        const std::size_t nz = s.z.size();
        if (t) *t = s.snapshot_t[index];
        for (std::size_t i = 0; i < nz; ++i) {
            const auto &sg = s.sigma[index * nz + i];
            const auto &e = s.field[index * nz + i];
            if (sigma_re) sigma_re[i] = sg.real();
            if (sigma_im) sigma_im[i] = sg.imag();
            if (field_re) field_re[i] = e.real();
            if (field_im) field_im[i] = e.imag();
        }
    });
}

acgem_status acgem_gem_metrics(const acgem_gem_result *result, const acgem_pulse *pulse, double t_switch,
                               acgem_recall_metrics *out) {
    return guarded([&] {
        need(result, "result");
        need(out, "out");
        const auto m = gem::recall_metrics(result->state, pulse_of(pulse), t_switch);
        *out = {m.efficiency,    m.transmitted_fraction, m.echo_time,          m.time_reversal_fidelity,
                m.phase_overlap, m.carrier_shift,        m.spectral_resolution};
    });
}

acgem_status acgem_effective_two_level(double Omega_c, double Delta_1p, double g, double gamma, double gamma_0,
                                       double d, double T, double margin, acgem_two_level *out) {
    return guarded([&] {
        need(out, "out");
        const auto r = gem::effective_two_level(Omega_c, Delta_1p, g, gamma, gamma_0, d, T, margin);
        *out = {r.g_eff, r.gamma_eff, r.far_detuned, r.slow_enough};
    });
}

acgem_status acgem_gaussian_pulse_bandwidth(double t_p, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = budget::gaussian_pulse_bandwidth(t_p);
    });
}

void acgem_reference_memory_scenario(acgem_memory_scenario *out) {
    if (out == nullptr) return;
    const auto s = budget::reference_memory_scenario();
    *out = {s.pulse_tp,
            s.store_ts,
            s.Omega_over_Delta,
            s.Delta_1p,
            s.Delta_ac,
            s.q_ac,
            s.q_c,
            s.q_p,
            s.geometry.length_L,
            s.geometry.radius_R,
            s.geometry.atom_count_N,
            s.geometry.loading_eff,
            s.geometry.coupling_g,
            s.bandwidth_Bs,
            s.multi_pulse};
}

acgem_status acgem_reference_background(const acgem_atom *atom, acgem_background *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        const auto b = budget::reference_background(atom->spec);
        *out = {b.trap_scatter, b.collision_rate, b.background_loss};
    });
}

acgem_status acgem_build_rate_model(const acgem_atom *atom, const acgem_memory_scenario *scenario,
                                    const acgem_background *background, const acgem_options *opt,
                                    acgem_rate_model *out) {
    return guarded([&] {
        need(atom, "atom");
        need(background, "background");
        need(out, "out");
        const budget::BackgroundRates bg{background->trap_scatter, background->collision_rate,
                                         background->background_loss};
        const auto r = budget::build_rate_model(atom->spec, scenario_of(scenario), bg, options(opt));
        *out = {r.gamma_ac_per_hz, r.gamma_c_per_omega2, *background};
    });
}

acgem_status acgem_efficiency_breakdown(const acgem_memory_scenario *scenario, const acgem_rate_model *rates,
                                        acgem_breakdown *out) {
    return guarded([&] {
        need(out, "out");
        breakdown_to(budget::efficiency_breakdown(scenario_of(scenario), rates_of(rates)), out);
    });
}

acgem_status acgem_efficiency_sweep(const acgem_memory_scenario *scenario, const acgem_rate_model *rates, int axis,
                                    const double *values, size_t n, int follow_pulse, acgem_sweep_row *rows) {
    return guarded([&] {
        need(values, "values");
        need(rows, "rows");
        if (axis < ACGEM_AXIS_PULSE_TP || axis > ACGEM_AXIS_OMEGA_OVER_DELTA) {
            throw Error(ErrorCode::invalid_argument, "unknown sweep axis");
        }
        const auto out = budget::efficiency_sweep(scenario_of(scenario), rates_of(rates),
                                                  static_cast<budget::SweepAxis>(axis),
                                                  std::vector<double>(values, values + n), follow_pulse != 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            rows[i].value = out[i].value;
            rows[i].pulse_tp = out[i].scenario.pulse_tp;
            rows[i].store_ts = out[i].scenario.store_ts;
            rows[i].bandwidth = out[i].scenario.bandwidth_Bs;
            breakdown_to(out[i].breakdown, &rows[i].breakdown);
        }
    });
}

acgem_status acgem_threshold_storage_ratio(const acgem_memory_scenario *scenario, const acgem_rate_model *rates,
                                           double threshold, double lo, double hi, double *out) {
    return guarded([&] {
        need(out, "out");
        *out = budget::threshold_storage_ratio(scenario_of(scenario), rates_of(rates), threshold, lo, hi);
    });
}

acgem_status acgem_bandwidth_per_watt(const acgem_atom *atom, double omega_l, int q, const acgem_scheme *scheme,
                                      const acgem_profile *profile, const acgem_options *opt, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = budget::bandwidth_per_watt(atom->spec, laser(omega_l, q), scheme_of(scheme), profile_of(profile),
                                          options(opt));
    });
}

acgem_status acgem_power_for_bandwidth(const acgem_atom *atom, double bandwidth, double omega_l, int q,
                                       const acgem_scheme *scheme, const acgem_profile *profile,
                                       const acgem_options *opt, double *out) {
    return guarded([&] {
        need(atom, "atom");
        need(out, "out");
        *out = budget::power_for_bandwidth(atom->spec, bandwidth, laser(omega_l, q), scheme_of(scheme),
                                           profile_of(profile), options(opt));
    });
}

}  // extern "C"
