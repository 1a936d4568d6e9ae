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

#include <gtest/gtest.h>

#include <acgem/acgem.h>

#include <cmath>
#include <string>
#include <thread>
#include <vector>

namespace {
constexpr double kTwoPi = 6.283185307179586;

struct Atom {
    acgem_atom *p = nullptr;
    Atom() { EXPECT_EQ(acgem_atom_create_rb87(&p), ACGEM_OK); }
    ~Atom() { acgem_atom_destroy(p); }
};

acgem_options defaults() {
    acgem_options o;
    acgem_options_default(&o);
    return o;
}
}  // namespace

TEST(CApi, VersionAndDefaults) {
    EXPECT_STREQ(acgem_version(), "0.1.0");
    const auto o = defaults();
    EXPECT_EQ(o.approx, 0);
    EXPECT_EQ(o.rwa, 0);
    EXPECT_EQ(o.guard_gammas, 10.0);
}

TEST(CApi, NullArgumentsReported) {
    EXPECT_EQ(acgem_atom_create_rb87(nullptr), ACGEM_ERR_INVALID_ARGUMENT);
    EXPECT_NE(std::string(acgem_last_error()), "");
    double out = 0.0;
    EXPECT_EQ(acgem_atom_omega_d1(nullptr, &out), ACGEM_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(acgem_wigner_3j(1, 1, 0, 0, 0, 0, nullptr), ACGEM_ERR_INVALID_ARGUMENT);
    acgem_atom_destroy(nullptr);
    acgem_schedule_destroy(nullptr);
    acgem_gem_result_destroy(nullptr);
}

TEST(CApi, SuccessClearsLastError) {
    EXPECT_EQ(acgem_atom_create_rb87(nullptr), ACGEM_ERR_INVALID_ARGUMENT);
    double v = 0.0;
    EXPECT_EQ(acgem_wigner_3j(1, 1, 0, 0, 0, 0, &v), ACGEM_OK);
    EXPECT_STREQ(acgem_last_error(), "");
    EXPECT_NEAR(v, -1.0 / std::sqrt(3.0), 1e-14);
}

TEST(CApi, LastErrorIsPerThread) {
    EXPECT_EQ(acgem_wigner_3j(0.3, 1, 1, 0, 0, 0, nullptr), ACGEM_ERR_INVALID_ARGUMENT);
    const std::string mine = acgem_last_error();
    std::string theirs = "unset";
    std::thread t([&] { theirs = acgem_last_error(); });
    t.join();
    EXPECT_EQ(theirs, "");
    EXPECT_EQ(std::string(acgem_last_error()), mine);
}

TEST(CApi, AtomParametersRoundTrip) {
    Atom a;
    acgem_atom_params p;
    ASSERT_EQ(acgem_atom_get_params(a.p, &p), ACGEM_OK);
    EXPECT_NEAR(p.gamma, kTwoPi * 6e6, 1.0);
    EXPECT_NEAR(p.wavelength_D1, 795e-9, 1e-15);
    p.delta_fs = kTwoPi * 8e12;
    acgem_atom *custom = nullptr;
    ASSERT_EQ(acgem_atom_create(&p, &custom), ACGEM_OK);
    double lambda2 = 0.0;
    EXPECT_EQ(acgem_atom_wavelength_d2(custom, &lambda2), ACGEM_OK);
    EXPECT_LT(lambda2, 780e-9);
    acgem_atom_destroy(custom);

    p.gamma = -1.0;
    EXPECT_EQ(acgem_atom_create(&p, &custom), ACGEM_ERR_INVALID_ARGUMENT);
    double d = 0.0;
    EXPECT_EQ(acgem_atom_reduced_dipole(a.p, 2, &d), ACGEM_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(acgem_atom_reduced_dipole(a.p, 3, &d), ACGEM_OK);
    EXPECT_GT(d, 0.0);
}

TEST(CApi, DomainErrorCodes) {
    Atom a;
    const auto o = defaults();
    double w = 0.0, out = 0.0;
    ASSERT_EQ(acgem_atom_omega_d1(a.p, &w), ACGEM_OK);
    acgem_atom_params p;
    ASSERT_EQ(acgem_atom_get_params(a.p, &p), ACGEM_OK);
    // Just above the F=2 -> F'=2 line.
    const double line = w + 0.5 * p.delta_hfs_excited_d1;
    EXPECT_EQ(acgem_stark_shift(a.p, 2, 0, line + 20 * p.gamma, 1, 1.0, &o, &out), ACGEM_OK);
    const acgem_status near = acgem_stark_shift(a.p, 2, 0, line + p.gamma, 1, 1.0, &o, &out);
    EXPECT_EQ(near, ACGEM_ERR_NEAR_RESONANCE);
    EXPECT_TRUE(acgem_is_domain_error(near));

    acgem_scheme s;
    const acgem_status forbidden = acgem_select_level_scheme(-1, 1, &s);
    EXPECT_EQ(forbidden, ACGEM_ERR_FORBIDDEN_SCHEME);
    EXPECT_TRUE(acgem_is_domain_error(forbidden));

    ASSERT_EQ(acgem_select_level_scheme(1, 1, &s), ACGEM_OK);
    double wl = 0.0;
    ASSERT_EQ(acgem_laser_omega(a.p, -kTwoPi * 5e12, &wl), ACGEM_OK);
    const acgem_status ratio = acgem_scattering_per_bandwidth(a.p, 1, -1, wl, 0, &s, &o, &out);
    EXPECT_EQ(ratio, ACGEM_ERR_UNDEFINED_RATIO);
    EXPECT_TRUE(acgem_is_domain_error(ratio));

    acgem_profile prof{ACGEM_PROFILE_LINEAR, 1.0, 0.01, 1e-5, 0.0};
    EXPECT_EQ(acgem_profile_intensity(&prof, 0.0, 0.02, &out), ACGEM_ERR_OUT_OF_RANGE);
    EXPECT_FALSE(acgem_is_domain_error(ACGEM_ERR_OUT_OF_RANGE));
    EXPECT_FALSE(acgem_is_domain_error(ACGEM_ERR_INVALID_ARGUMENT));
}

TEST(CApi, SplittingsAndBandwidth) {
    Atom a;
    const auto o = defaults();
    acgem_scheme s;
    ASSERT_EQ(acgem_select_level_scheme(0, 1, &s), ACGEM_OK);
    EXPECT_EQ(s.multiplier, 3);
    EXPECT_EQ(s.m2, -2);
    double wl = 0.0;
    ASSERT_EQ(acgem_laser_omega(a.p, -kTwoPi * 5e12, &wl), ACGEM_OK);
    acgem_splittings sp;
    ASSERT_EQ(acgem_compute_splittings(a.p, wl, 1, &s, &o, &sp), ACGEM_OK);
    EXPECT_NEAR(sp.deltaF1 * 1e4, 50.0, 10.0);

    acgem_profile prof{ACGEM_PROFILE_LINEAR, 1.0, 0.01, 1e-5, 0.0};
    std::vector<double> z(128), eta(128);
    double bw = 0.0;
    int monotone = 0;
    ASSERT_EQ(acgem_gradient_and_bandwidth(a.p, &prof, wl, 1, &s, &o, 128, z.data(), nullptr, nullptr, eta.data(),
                                           &bw, &monotone),
              ACGEM_OK);
    EXPECT_EQ(monotone, 1);
    EXPECT_NEAR(bw, 150e3, 30e3);
    EXPECT_NEAR(z.back(), 0.01, 1e-15);
    double per_watt = 0.0, power = 0.0;
    ASSERT_EQ(acgem_bandwidth_per_watt(a.p, wl, 1, &s, &prof, &o, &per_watt), ACGEM_OK);
    EXPECT_NEAR(per_watt, bw, 1e-6);
    ASSERT_EQ(acgem_power_for_bandwidth(a.p, 1e6, wl, 1, &s, &prof, &o, &power), ACGEM_OK);
    EXPECT_LT(power, 10.0);
}

TEST(CApi, OptimizerAndTrap) {
    Atom a;
    const auto o = defaults();
    acgem_scheme s;
    ASSERT_EQ(acgem_select_level_scheme(1, 1, &s), ACGEM_OK);
    double det = 0.0, rate = 0.0;
    int boundary = -1;
    ASSERT_EQ(acgem_find_optimal_detuning(a.p, 2, -2, 1, &s, -kTwoPi * 0.5e12, -kTwoPi * 40e12, 100, 0.01, &o, &det,
                                          &rate, &boundary),
              ACGEM_OK);
    EXPECT_EQ(boundary, 1);
    EXPECT_GT(rate, 0.0);

    acgem_trap_spec t;
    acgem_trap_spec_default(&t);
    EXPECT_EQ(t.wavelength, 1064e-9);
    acgem_trap_report r;
    ASSERT_EQ(acgem_trap_report_compute(a.p, &t, 1e6, &o, &r), ACGEM_OK);
    EXPECT_NEAR(r.site_detuning_diff, 53.2, 1e-9);
    EXPECT_LE(r.coherence_time, 1.0 / r.scatter_rate);
    t.waist = -1.0;
    EXPECT_EQ(acgem_trap_report_compute(a.p, &t, 1e6, &o, &r), ACGEM_ERR_INVALID_ARGUMENT);
}

TEST(CApi, GemRoundTrip) {
    acgem_gem_config cfg;
    acgem_pulse pulse;
    double t_switch = 0.0;
    acgem_schedule *sched = nullptr;
    ASSERT_EQ(acgem_gem_reference_scenario(0.5, 1e6, 1.0, ACGEM_GRID_DEFAULT, ACGEM_SWITCH_REVERSE, 0,
                                           ACGEM_SHAPE_CENTRED, 3.0, 0.0, &cfg, &pulse, &t_switch, &sched),
              ACGEM_OK);
    size_t n = 0;
    ASSERT_EQ(acgem_schedule_segment_count(sched, &n), ACGEM_OK);
    EXPECT_EQ(n, 2u);
    cfg.snapshot_stride = 50;
    acgem_gem_result *res = nullptr;
    ASSERT_EQ(acgem_gem_solve(&cfg, sched, &pulse, &res), ACGEM_OK);
    size_t len = 0, snaps = 0, nz = 0;
    ASSERT_EQ(acgem_gem_result_length(res, &len), ACGEM_OK);
    std::vector<double> t(len), re(len);
    ASSERT_EQ(acgem_gem_result_series(res, t.data(), nullptr, nullptr, re.data(), nullptr, nullptr), ACGEM_OK);
    EXPECT_EQ(t.front(), 0.0);
    ASSERT_EQ(acgem_gem_result_snapshot_count(res, &snaps, &nz), ACGEM_OK);
    EXPECT_GT(snaps, 0u);
    EXPECT_EQ(nz, cfg.z_points);
    std::vector<double> sr(nz);
    double ts = -1.0;
    EXPECT_EQ(acgem_gem_result_snapshot(res, 0, &ts, sr.data(), nullptr, nullptr, nullptr), ACGEM_OK);
    EXPECT_EQ(acgem_gem_result_snapshot(res, snaps, &ts, nullptr, nullptr, nullptr, nullptr),
              ACGEM_ERR_OUT_OF_RANGE);
    acgem_recall_metrics m;
    ASSERT_EQ(acgem_gem_metrics(res, &pulse, t_switch, &m), ACGEM_OK);
    EXPECT_NEAR(m.efficiency, 0.9154, 0.02);
    acgem_gem_result_destroy(res);

    cfg.dt *= 5.0;
    EXPECT_EQ(acgem_gem_solve(&cfg, sched, &pulse, &res), ACGEM_ERR_NUMERICAL);
    acgem_schedule_destroy(sched);
}

TEST(CApi, ScheduleEditing) {
    std::vector<double> d(64);
    for (size_t i = 0; i < d.size(); ++i) d[i] = static_cast<double>(i);
    acgem_schedule *s = nullptr;
    ASSERT_EQ(acgem_schedule_create(d.data(), d.size(), 0.0, &s), ACGEM_OK);
    ASSERT_EQ(acgem_schedule_apply_switch(s, ACGEM_SWITCH_FLIP, 1e-6, 1), ACGEM_OK);
    std::vector<double> after(64);
    double t0 = 0.0, off = 0.0;
    ASSERT_EQ(acgem_schedule_segment(s, 1, &t0, &off, after.data(), after.size()), ACGEM_OK);
    EXPECT_EQ(t0, 1e-6);
    EXPECT_EQ(off, 63.0);
    EXPECT_EQ(after[0] + off, 63.0);
    EXPECT_EQ(acgem_schedule_segment(s, 1, &t0, &off, after.data(), 10), ACGEM_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(acgem_schedule_add_segment(s, 0.5e-6, d.data(), d.size(), 0.0), ACGEM_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(acgem_schedule_apply_switch(s, 7, 2e-6, 0), ACGEM_ERR_INVALID_ARGUMENT);
    acgem_schedule_destroy(s);
}

TEST(CApi, BudgetThresholds) {
    Atom a;
    const auto o = defaults();
    acgem_memory_scenario s;
    acgem_reference_memory_scenario(&s);
    acgem_background bg;
    ASSERT_EQ(acgem_reference_background(a.p, &bg), ACGEM_OK);
    acgem_rate_model rates;
    ASSERT_EQ(acgem_build_rate_model(a.p, &s, &bg, &o, &rates), ACGEM_OK);
    double thr = 0.0;
    ASSERT_EQ(acgem_threshold_storage_ratio(&s, &rates, 0.9, 0.0, 1e4, &thr), ACGEM_OK);
    EXPECT_NEAR(thr, 130.0, 26.0);
    acgem_breakdown b;
    ASSERT_EQ(acgem_efficiency_breakdown(&s, &rates, &b), ACGEM_OK);
    EXPECT_NEAR(b.eps_total, b.eps_rw * b.eps_s, 1e-15);
    const double values[] = {1e-5, 2e-5, 4e-5};
    acgem_sweep_row rows[3];
    ASSERT_EQ(acgem_efficiency_sweep(&s, &rates, ACGEM_AXIS_PULSE_TP, values, 3, 1, rows), ACGEM_OK);
    EXPECT_EQ(rows[2].store_ts, 4e-5);
    EXPECT_EQ(acgem_efficiency_sweep(&s, &rates, 9, values, 3, 1, rows), ACGEM_ERR_INVALID_ARGUMENT);
    s.bandwidth = 0.0;
    EXPECT_EQ(acgem_efficiency_breakdown(&s, &rates, &b), ACGEM_ERR_INVALID_ARGUMENT);
    double bg_hz = 0.0;
    ASSERT_EQ(acgem_gaussian_pulse_bandwidth(20e-6, &bg_hz), ACGEM_OK);
    EXPECT_NEAR(bg_hz, 202.6e3, 100.0);
}

TEST(CApi, EffectiveTwoLevel) {
    acgem_two_level r;
    ASSERT_EQ(acgem_effective_two_level(1e8, 1e10, kTwoPi * 1.5e6, kTwoPi * 6e6, 0.0, 10.0, 1e-3, 10.0, &r), ACGEM_OK);
    EXPECT_NEAR(r.g_eff, kTwoPi * 15e3, 1e-6);
    EXPECT_EQ(r.far_detuned, 1);
    EXPECT_EQ(acgem_effective_two_level(1e8, 0.0, 1.0, 1.0, 0.0, 1.0, 1.0, 10.0, &r), ACGEM_ERR_INVALID_ARGUMENT);
}
