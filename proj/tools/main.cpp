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

#include <CLI11.hpp>

#include <acgem/acgem.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "config.hpp"
#include "csv.hpp"

namespace fs = std::filesystem;
using acgem::cli::Config;
using acgem::cli::ConfigError;
using acgem::cli::CsvTable;

namespace {

constexpr double kTwoPi = 6.283185307179586;
constexpr double kWcm2 = 1e4;  // W/m^2 per W/cm^2

struct ApiFailure {
    acgem_status status;
    std::string message;
};

void check(acgem_status s) {
    if (s != ACGEM_OK) throw ApiFailure{s, acgem_last_error()};
}

struct AtomDeleter {
    void operator()(acgem_atom *a) const { acgem_atom_destroy(a); }
};
struct ScheduleDeleter {
    void operator()(acgem_schedule *s) const { acgem_schedule_destroy(s); }
};
struct ResultDeleter {
    void operator()(acgem_gem_result *r) const { acgem_gem_result_destroy(r); }
};
using AtomPtr = std::unique_ptr<acgem_atom, AtomDeleter>;
using SchedulePtr = std::unique_ptr<acgem_schedule, ScheduleDeleter>;
using ResultPtr = std::unique_ptr<acgem_gem_result, ResultDeleter>;

AtomPtr make_atom() {
    acgem_atom *a = nullptr;
    check(acgem_atom_create_rb87(&a));
    return AtomPtr(a);
}

struct Output {
    std::string path;
    CsvTable table;
};

struct Context {
    std::string command;
    Config cfg;
    int grid = ACGEM_GRID_DEFAULT;
    std::string grid_name = "default";
    fs::path out;
};

int as_int(long v, const char *key) {
    if (v < -1000 || v > 1000) throw ConfigError(std::string(key) + " out of range");
    return static_cast<int>(v);
}

acgem_options options(const Config &c) {
    acgem_options o;
    acgem_options_default(&o);
    o.approx = c.choice("shift.mode") == "approx";
    o.rwa = c.boolean("shift.rwa");
    o.guard_gammas = c.real("shift.guard");
    return o;
}

acgem_scheme scheme(int q_p, int q_c) {
    acgem_scheme s;
    check(acgem_select_level_scheme(q_p, q_c, &s));
    return s;
}

CsvTable table(const Context &ctx, std::vector<std::string> columns) {
    CsvTable t(std::move(columns));
    std::vector<std::pair<std::string, std::string>> params = ctx.cfg.resolved();
    params.emplace_back("grid", ctx.grid_name);
    for (const auto &line : acgem::cli::provenance(acgem_version(), ctx.command, params)) t.comment(line);
    return t;
}

std::string sibling(const fs::path &out, const std::string &suffix) {
    fs::path p = out;
    p.replace_filename(out.stem().string() + suffix + out.extension().string());
    return p.string();
}

std::vector<double> spaced(double a, double b, long n, bool log) {
    if (n < 1) throw ConfigError("point count must be positive");
    std::vector<double> v(static_cast<std::size_t>(n));
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (long i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(n - 1);
        v[static_cast<std::size_t>(i)] = log ? std::exp(std::log(a) + f * (std::log(b) - std::log(a))) : a + f * (b - a);
    }
    v.back() = b;
    return v;
}

void same_sign(double a, double b, const char *what) {
    if (a == 0.0 || b == 0.0 || (a > 0) != (b > 0)) {
        throw ConfigError(std::string(what) + " bounds must be nonzero and of the same sign");
    }
}

// ---- commands ----

std::vector<Output> stark_scan(const Context &ctx) {
    const Config &c = ctx.cfg;
    auto atom = make_atom();
    const auto opt = options(c);
    const int q = as_int(c.integer("laser.q"), "laser.q");
    const auto sch = scheme(as_int(c.integer("scheme.q_p"), "scheme.q_p"), as_int(c.integer("scheme.q_c"), "scheme.q_c"));
    const int F = as_int(c.integer("optimum.state_F"), "optimum.state_F");
    const int mF = as_int(c.integer("optimum.state_mF"), "optimum.state_mF");
    const double lo = c.quantity("scan.detuning_min");
    const double hi = c.quantity("scan.detuning_max");
    same_sign(lo, hi, "scan detuning");
    const double sign = lo < 0 ? -1.0 : 1.0;
    const auto grid = spaced(std::abs(lo), std::abs(hi), c.integer("scan.points"), true);

    CsvTable t = table(ctx, {"detuning_hz", "deltaF1_hz_per_w_cm2", "deltaF2_hz_per_w_cm2", "delta12_hz_per_w_cm2",
                             "deltaT_hz_per_w_cm2", "deltaT_sign", "scatter_rate_per_w_cm2",
                             "scatter_per_bandwidth_per_mhz"});
    for (double a : grid) {
        const double det = sign * a;
        double omega_l = 0.0;
        check(acgem_laser_omega(atom.get(), kTwoPi * det, &omega_l));
        acgem_splittings sp;
        check(acgem_compute_splittings(atom.get(), omega_l, q, &sch, &opt, &sp));
        double rate = 0.0, per_hz = 0.0;
        check(acgem_scattering_rate(atom.get(), F, mF, omega_l, q, kWcm2, 0, &opt, &rate));
        check(acgem_scattering_per_bandwidth(atom.get(), F, mF, omega_l, q, &sch, &opt, &per_hz));
        t.row({det, sp.deltaF1 * kWcm2, sp.deltaF2 * kWcm2, sp.delta12 * kWcm2, sp.deltaT * kWcm2,
               static_cast<double>(sp.sign), rate, per_hz * 1e6});
    }
    return {{ctx.out.string(), std::move(t)}};
}

std::vector<Output> optimal_detuning(const Context &ctx) {
    const Config &c = ctx.cfg;
    auto atom = make_atom();
    const auto opt = options(c);
    const int q = as_int(c.integer("laser.q"), "laser.q");
    const auto sch = scheme(as_int(c.integer("optimum.q_p"), "optimum.q_p"), as_int(c.integer("optimum.q_c"), "optimum.q_c"));
    const int F = as_int(c.integer("optimum.state_F"), "optimum.state_F");
    const int mF = as_int(c.integer("optimum.state_mF"), "optimum.state_mF");
    const double lo = c.quantity("optimum.range_min");
    const double hi = c.quantity("optimum.range_max");
    same_sign(lo, hi, "optimum range");
    const long grid = c.integer("optimum.grid");
    if (grid < 3) throw ConfigError("optimum.grid must be at least 3");

    double det = 0.0, per_hz = 0.0;
    int boundary = 0;
    check(acgem_find_optimal_detuning(atom.get(), F, mF, q, &sch, kTwoPi * lo, kTwoPi * hi,
                                      static_cast<std::size_t>(grid), c.real("optimum.tolerance"), &opt, &det,
                                      &per_hz, &boundary));
    CsvTable t = table(ctx, {"detuning_hz", "scatter_per_bandwidth_per_hz", "scatter_per_bandwidth_per_mhz",
                             "boundary_minimum", "state_F", "state_mF", "q", "multiplier"});
    t.row({det / kTwoPi, per_hz, per_hz * 1e6, static_cast<double>(boundary), static_cast<double>(F),
           static_cast<double>(mF), static_cast<double>(q), static_cast<double>(sch.multiplier)});
    return {{ctx.out.string(), std::move(t)}};
}

acgem_trap_spec trap_spec(const Config &c) {
    acgem_trap_spec s;
    acgem_trap_spec_default(&s);
    s.wavelength = c.quantity("trap.wavelength");
    s.power = c.quantity("trap.power");
    s.waist = c.quantity("trap.waist");
    s.length_L = c.quantity("ensemble.length");
    s.inv_alpha = c.quantity("trap.inv_alpha");
    s.beta_hcc = c.quantity("trap.beta");
    s.density_n = c.quantity("trap.density");
    s.q = as_int(c.integer("trap.q"), "trap.q");
    s.F = as_int(c.integer("trap.state_F"), "trap.state_F");
    s.mF = as_int(c.integer("trap.state_mF"), "trap.state_mF");
    return s;
}

std::vector<Output> trap_report(const Context &ctx) {
    const Config &c = ctx.cfg;
    auto atom = make_atom();
    const auto opt = options(c);
    const auto spec = trap_spec(c);
    acgem_trap_report r;
    check(acgem_trap_report_compute(atom.get(), &spec, c.quantity("trap.bandwidth"), &opt, &r));
    CsvTable t = table(ctx, {"depth_k", "depth_j", "peak_intensity_w_m2", "scatter_rate_per_s", "recoil_energy_j",
                             "lifetime_s", "site_detuning_diff_hz", "collision_rate_per_s", "background_rate_per_s",
                             "coherence_time_s"});
    t.row({r.depth_K, r.depth_J, r.peak_intensity, r.scatter_rate, r.recoil_energy, r.lifetime, r.site_detuning_diff,
           r.collision_rate, r.background_rate, r.coherence_time});
    return {{ctx.out.string(), std::move(t)}};
}

struct GemSetup {
    acgem_gem_config config;
    acgem_pulse pulse;
    double t_switch = 0.0;
    SchedulePtr schedule;
};

GemSetup gem_setup(const Context &ctx, int method, int compensate) {
    const Config &c = ctx.cfg;
    GemSetup s;
    acgem_schedule *raw = nullptr;
    const int shape = c.choice("gem.shape") == "one_sided" ? ACGEM_SHAPE_ONE_SIDED : ACGEM_SHAPE_CENTRED;
    check(acgem_gem_reference_scenario(c.real("gem.d_prime"), c.quantity("gem.bandwidth"), c.quantity("gem.length"),
                                       ctx.grid, method, compensate, shape, c.real("gem.bandwidth_ratio"),
                                       kTwoPi * c.quantity("gem.gamma"), &s.config, &s.pulse, &s.t_switch, &raw));
    s.schedule.reset(raw);
    return s;
}

int gem_method(const Config &c) { return c.choice("gem.method") == "flip" ? ACGEM_SWITCH_FLIP : ACGEM_SWITCH_REVERSE; }

std::vector<Output> gem_sim(const Context &ctx) {
    const Config &c = ctx.cfg;
    auto s = gem_setup(ctx, gem_method(c), c.boolean("gem.compensate"));
    acgem_gem_result *raw = nullptr;
    check(acgem_gem_solve(&s.config, s.schedule.get(), &s.pulse, &raw));
    ResultPtr res(raw);
    std::size_t n = 0;
    check(acgem_gem_result_length(res.get(), &n));
    std::vector<double> t(n), in_re(n), in_im(n), out_re(n), out_im(n);
    check(acgem_gem_result_series(res.get(), t.data(), in_re.data(), in_im.data(), out_re.data(), out_im.data(),
                                  nullptr));
    acgem_recall_metrics m;
    check(acgem_gem_metrics(res.get(), &s.pulse, s.t_switch, &m));

    CsvTable series = table(ctx, {"t_s", "in_re", "in_im", "in_abs2", "out_re", "out_im", "out_abs2"});
    for (std::size_t i = 0; i < n; ++i) {
        series.row({t[i], in_re[i], in_im[i], in_re[i] * in_re[i] + in_im[i] * in_im[i], out_re[i], out_im[i],
                    out_re[i] * out_re[i] + out_im[i] * out_im[i]});
    }
    const double d = c.real("gem.d_prime");
    const double transmission = std::exp(-kTwoPi * d);
    CsvTable summary = table(ctx, {"efficiency", "expected_efficiency", "transmitted_fraction", "expected_transmission",
                                   "echo_time_s", "expected_echo_time_s", "time_reversal_fidelity", "phase_overlap",
                                   "carrier_shift_hz", "spectral_resolution_hz"});
    summary.row({m.efficiency, (1.0 - transmission) * (1.0 - transmission), m.transmitted_fraction, transmission,
                 m.echo_time, 2.0 * s.t_switch - s.pulse.t_peak, m.time_reversal_fidelity, m.phase_overlap,
                 m.carrier_shift, m.spectral_resolution});
    return {{ctx.out.string(), std::move(series)}, {sibling(ctx.out, "_summary"), std::move(summary)}};
}

std::vector<double> segment_detuning(const acgem_schedule *s, std::size_t index, std::size_t z_points) {
    std::vector<double> d(z_points);
    double t0 = 0.0, offset = 0.0;
    check(acgem_schedule_segment(s, index, &t0, &offset, d.data(), z_points));
    for (double &v : d) v += offset;
    return d;
}

std::vector<Output> switch_demo(const Context &ctx) {
    auto base = gem_setup(ctx, ACGEM_SWITCH_REVERSE, 0);
    const std::size_t nz = base.config.z_points;
    std::vector<double> before(nz);
    double t0 = 0.0, offset = 0.0;
    check(acgem_schedule_segment(base.schedule.get(), 0, &t0, &offset, before.data(), nz));

    auto switched = [&](int method, int compensate) {
        acgem_schedule *raw = nullptr;
        check(acgem_schedule_create(before.data(), nz, offset, &raw));
        SchedulePtr s(raw);
        check(acgem_schedule_apply_switch(s.get(), method, base.t_switch, compensate));
        return segment_detuning(s.get(), 1, nz);
    };
    const auto reverse = switched(ACGEM_SWITCH_REVERSE, 0);
    const auto flip = switched(ACGEM_SWITCH_FLIP, 0);
    const auto flip_comp = switched(ACGEM_SWITCH_FLIP, 1);

    CsvTable t = table(ctx, {"z_m", "before_hz", "after_reverse_hz", "after_flip_hz", "after_flip_compensated_hz"});
    const double L = base.config.length_L;
    for (std::size_t i = 0; i < nz; ++i) {
        const double z = i + 1 == nz ? L : L * static_cast<double>(i) / static_cast<double>(nz - 1);
        t.row({z, before[i] + offset, reverse[i], flip[i], flip_comp[i]});
    }
    return {{ctx.out.string(), std::move(t)}};
}

acgem_memory_scenario memory_scenario(const Config &c) {
    acgem_memory_scenario m;
    acgem_reference_memory_scenario(&m);
    m.pulse_tp = c.quantity("memory.pulse_tp");
    m.store_ts = c.quantity("memory.store_ts");
    m.Omega_over_Delta = c.real("memory.omega_over_delta");
    m.Delta_1p = kTwoPi * c.quantity("memory.delta_1p");
    m.Delta_ac = kTwoPi * c.quantity("memory.delta_ac");
    m.q_ac = as_int(c.integer("memory.q_ac"), "memory.q_ac");
    m.q_p = as_int(c.integer("scheme.q_p"), "scheme.q_p");
    m.q_c = as_int(c.integer("scheme.q_c"), "scheme.q_c");
    m.length_L = c.quantity("ensemble.length");
    m.radius_R = c.quantity("ensemble.radius");
    m.atom_count_N = c.real("ensemble.atom_count");
    m.loading_eff = c.real("ensemble.loading_eff");
    m.coupling_g = kTwoPi * c.quantity("ensemble.coupling_g");
    m.multi_pulse = c.boolean("memory.multi_pulse");
    const double bw = c.quantity("memory.bandwidth");
    if (bw > 0) {
        m.bandwidth = bw;
    } else {
        check(acgem_gaussian_pulse_bandwidth(m.pulse_tp, &m.bandwidth));
    }
    return m;
}

acgem_rate_model rate_model(const Config &c, const acgem_atom *atom, const acgem_memory_scenario &m,
                            const acgem_options &opt) {
    acgem_background bg{};
    if (c.boolean("memory.trap_scatter")) {
        const auto spec = trap_spec(c);
        acgem_trap_report r;
        check(acgem_trap_report_compute(atom, &spec, 0.0, &opt, &r));
        bg.trap_scatter = r.scatter_rate;
    }
    bg.collision_rate = c.quantity("memory.collision_rate");
    bg.background_loss = c.quantity("memory.background_loss");
    acgem_rate_model rates;
    check(acgem_build_rate_model(atom, &m, &bg, &opt, &rates));
    return rates;
}

std::vector<Output> efficiency_sweep(const Context &ctx) {
    const Config &c = ctx.cfg;
    auto atom = make_atom();
    const auto opt = options(c);
    const auto m = memory_scenario(c);
    const auto rates = rate_model(c, atom.get(), m, opt);
    const std::string axis_name = c.choice("sweep.axis");
    const bool log = c.choice("sweep.spacing") == "log";
    const long n = c.integer("sweep.points");
    int axis = ACGEM_AXIS_STORE_TS;
    std::vector<double> values;
    if (axis_name == "store_ts") {
        values = spaced(c.real("sweep.dbp_min") * m.pulse_tp, c.real("sweep.dbp_max") * m.pulse_tp, n, log);
    } else if (axis_name == "pulse_tp") {
        axis = ACGEM_AXIS_PULSE_TP;
        values = spaced(c.quantity("sweep.tp_min"), c.quantity("sweep.tp_max"), n, log);
    } else {
        axis = ACGEM_AXIS_OMEGA_OVER_DELTA;
        values = spaced(c.real("sweep.ratio_min"), c.real("sweep.ratio_max"), n, log);
    }
    std::vector<acgem_sweep_row> rows(values.size());
    check(acgem_efficiency_sweep(&m, &rates, axis, values.data(), values.size(), c.boolean("sweep.follow_pulse"),
                                 rows.data()));
    CsvTable t = table(ctx, {"value", "pulse_tp_s", "store_ts_s", "bandwidth_hz", "d_prime", "eps_w", "eps_r",
                             "eps_rw", "eps_s", "eps_total", "gamma_bg_per_s", "gamma_rw_per_s", "gamma_ac_per_s",
                             "gamma_c_per_s", "dbp"});
    for (const auto &r : rows) {
        const auto &b = r.breakdown;
        t.row({r.value, r.pulse_tp, r.store_ts, r.bandwidth, b.d_prime, b.eps_w, b.eps_r, b.eps_rw, b.eps_s,
               b.eps_total, b.Gamma_bg, b.Gamma_rw, b.Gamma_ac, b.Gamma_c, b.dbp});
    }

    CsvTable thr = table(ctx, {"multi_pulse", "threshold", "max_dbp"});
    for (int multi : {0, 1}) {
        acgem_memory_scenario mm = m;
        mm.multi_pulse = multi;
        for (double level : {0.9, 0.5}) {
            double dbp = 0.0;
            check(acgem_threshold_storage_ratio(&mm, &rates, level, 0.0, 1e4, &dbp));
            thr.row({static_cast<double>(multi), level, dbp});
        }
    }
    return {{ctx.out.string(), std::move(t)}, {sibling(ctx.out, "_thresholds"), std::move(thr)}};
}

std::vector<Output> power_budget(const Context &ctx) {
    const Config &c = ctx.cfg;
    auto atom = make_atom();
    const auto opt = options(c);
    const int q = as_int(c.integer("laser.q"), "laser.q");
    const auto sch = scheme(as_int(c.integer("scheme.q_p"), "scheme.q_p"), as_int(c.integer("scheme.q_c"), "scheme.q_c"));
    double omega_l = 0.0;
    check(acgem_laser_omega(atom.get(), kTwoPi * c.quantity("laser.detuning"), &omega_l));
    double bg = 0.0;
    check(acgem_gaussian_pulse_bandwidth(c.quantity("memory.pulse_tp"), &bg));
    const double targets[] = {c.quantity("power.bandwidth"), bg};

    CsvTable t = table(ctx, {"profile_linear", "target_bandwidth_hz", "bandwidth_per_watt_hz_per_w", "required_power_w"});
    for (int kind : {ACGEM_PROFILE_LINEAR, ACGEM_PROFILE_GAUSSIAN}) {
        acgem_profile p{kind, 1.0, c.quantity("ensemble.length"), c.quantity("ensemble.radius"),
                        c.quantity("profile.waist")};
        double per_watt = 0.0;
        check(acgem_bandwidth_per_watt(atom.get(), omega_l, q, &sch, &p, &opt, &per_watt));
        for (double target : targets) {
            double power = 0.0;
            check(acgem_power_for_bandwidth(atom.get(), target, omega_l, q, &sch, &p, &opt, &power));
            t.row({kind == ACGEM_PROFILE_LINEAR ? 1.0 : 0.0, target, per_watt, power});
        }
    }
    return {{ctx.out.string(), std::move(t)}};
}

void write_all(const std::vector<Output> &outputs) {
    for (const auto &o : outputs) {
        const std::string tmp = o.path + ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            f << o.table.str();
            if (!f) throw std::runtime_error("cannot write " + o.path);
        }
        fs::rename(tmp, o.path);
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Light-shift gradient echo memory toolkit"};
    app.set_version_flag("--version", std::string(acgem_version()));
    app.require_subcommand(1);

    std::string config_path, out_path, grid_name = "default";
    std::vector<std::string> overrides;
    app.add_option("--config", config_path, "Configuration file")->check(CLI::ExistingFile);
    app.add_option("--out", out_path, "Output CSV path (default <command>.csv)");
    app.add_option("--set", overrides, "Override key=value (repeatable)")->take_all()->allow_extra_args(false);
    app.add_option("--grid", grid_name, "Solver resolution")->check(CLI::IsMember({"fine", "default", "coarse"}));

    using Command = std::vector<Output> (*)(const Context &);
    const std::vector<std::tuple<std::string, std::string, Command>> commands = {
        {"stark-scan", "Splittings and scattering over detuning", stark_scan},
        {"optimal-detuning", "Detuning minimizing scattering per bandwidth", optimal_detuning},
        {"trap-report", "Dipole-trap depth, lifetime and coherence", trap_report},
        {"gem-sim", "Storage and recall time series", gem_sim},
        {"efficiency-sweep", "Memory efficiency budget", efficiency_sweep},
        {"switch-demo", "Gradient before and after each switch method", switch_demo},
        {"power-budget", "Shifting-laser power for a target bandwidth", power_budget},
    };
    std::vector<CLI::App *> subs;
    for (const auto &[name, help, fn] : commands) subs.push_back(app.add_subcommand(name, help)->fallthrough());

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Context ctx;
        Command fn = nullptr;
        for (std::size_t i = 0; i < subs.size(); ++i) {
            if (subs[i]->parsed()) {
                ctx.command = std::get<0>(commands[i]);
                fn = std::get<2>(commands[i]);
            }
        }
        if (!config_path.empty()) ctx.cfg.load_file(config_path);
        for (const auto &o : overrides) ctx.cfg.set_override(o);
        ctx.grid_name = grid_name;
        ctx.grid = grid_name == "fine" ? ACGEM_GRID_FINE : grid_name == "coarse" ? ACGEM_GRID_COARSE : ACGEM_GRID_DEFAULT;
        ctx.out = out_path.empty() ? fs::path(ctx.command + ".csv") : fs::path(out_path);
        const fs::path dir = ctx.out.has_parent_path() ? ctx.out.parent_path() : fs::path(".");
        if (!fs::is_directory(dir)) throw ConfigError("output directory '" + dir.string() + "' does not exist");

        const auto outputs = fn(ctx);
        write_all(outputs);
        for (const auto &o : outputs) std::cout << o.path << "\n";
        return 0;
    } catch (const ConfigError &e) {
        std::cerr << "acgem: " << e.what() << "\n";
        return 2;
    } catch (const ApiFailure &e) {
        std::cerr << "acgem: " << e.message << "\n";
        if (acgem_is_domain_error(e.status)) return 3;
        if (e.status == ACGEM_ERR_INVALID_ARGUMENT || e.status == ACGEM_ERR_OUT_OF_RANGE) return 2;
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "acgem: " << e.what() << "\n";
        return 1;
    }
}
