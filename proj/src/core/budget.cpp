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

#include "acgem/budget.hpp"

#include <cmath>
#include <string>

#include "acgem/constants.hpp"
#include "acgem/error.hpp"

namespace acgem::budget {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

}  // namespace

double gaussian_pulse_bandwidth(double t_p) {
    require(t_p > 0, "pulse length must be positive");
    return 9.0 * std::sqrt(2.0) / (phys::pi * t_p);
}

void MemoryScenario::validate() const {
    require(pulse_tp > 0, "pulse length must be positive");
    require(store_ts > 0, "storage time must be positive");
    require(Omega_over_Delta >= 0 && Omega_over_Delta < 1, "|Omega_c/Delta_1p| must lie in [0, 1)");
    require(std::isfinite(Delta_1p) && std::isfinite(Delta_ac), "detunings must be finite");
    geometry.validate();
    require(bandwidth_Bs >= 0, "bandwidth must be non-negative");
}

RateModel build_rate_model(const AtomSpec &atom, const MemoryScenario &scenario, const BackgroundRates &background,
                           const stark::ShiftOptions &opt) {
    scenario.validate();
    RateModel r;
    const auto scheme = stark::select_level_scheme(scenario.q_p, scenario.q_c);
    const auto laser = stark::LaserSpec::from_d1_detuning(atom, scenario.Delta_ac, scenario.q_ac);
    r.gamma_ac_per_hz = decoherence::scattering_per_bandwidth(atom, {1, -1}, laser, scheme, opt);
    r.gamma_c_per_omega2 =
        decoherence::coupling_field_scattering_coefficient(atom, scenario.Delta_1p, scenario.q_c, opt);
    r.background = background;
    return r;
}

EfficiencyBreakdown efficiency_breakdown(const MemoryScenario &scenario, const RateModel &rates) {
    scenario.validate();
    if (!(scenario.bandwidth_Bs > 0.0)) throw Error(ErrorCode::invalid_argument, "bandwidth must be positive");
    require(rates.gamma_ac_per_hz >= 0 && rates.gamma_c_per_omega2 >= 0, "rates must be non-negative");
    const auto &geo = scenario.geometry;
    EfficiencyBreakdown b;
    const double r = scenario.Omega_over_Delta;
    b.d_prime = geo.coupling_g * geo.coupling_g * geo.loading_eff * geo.atom_count_N * geo.length_L /
                (phys::c * phys::two_pi * scenario.bandwidth_Bs) * r * r;
    b.eps_w = 1.0 - std::exp(-phys::two_pi * b.d_prime);
    b.eps_r = b.eps_w;
    b.eps_rw = b.eps_w * b.eps_r;

    const double Omega_c = r * std::abs(scenario.Delta_1p);
    b.Gamma_ac = rates.gamma_ac_per_hz * scenario.bandwidth_Bs;
    b.Gamma_c = rates.gamma_c_per_omega2 * Omega_c * Omega_c;
    b.Gamma_rw = b.Gamma_ac + b.Gamma_c;
    b.Gamma_bg = rates.background.total();
    require(b.Gamma_bg >= 0, "background rates must be non-negative");

    const double tp = scenario.pulse_tp, ts = scenario.store_ts;
    if (scenario.multi_pulse) {
        b.eps_s = std::exp(-(2.0 * tp + ts) * (b.Gamma_rw + b.Gamma_bg));
    } else {
        b.eps_s = std::exp(-2.0 * tp * b.Gamma_rw) * std::exp(-(2.0 * tp + ts) * b.Gamma_bg);
    }
    b.eps_total = b.eps_rw * b.eps_s;
    b.dbp = ts / tp;
    return b;
}

std::vector<SweepRow> efficiency_sweep(const MemoryScenario &base, const RateModel &rates, SweepAxis axis,
                                       const std::vector<double> &values, bool follow_pulse) {
    for (std::size_t i = 0; i < values.size(); ++i) {
        require(values[i] > 0, "sweep values must be positive");
        if (i > 0) require(values[i] > values[i - 1], "sweep values must be sorted ascending");
    }
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (double v : values) {
        MemoryScenario s = base;
        switch (axis) {
            case SweepAxis::pulse_tp:
                s.pulse_tp = v;
                if (follow_pulse) {
                    s.store_ts = v;
                    s.bandwidth_Bs = gaussian_pulse_bandwidth(v);
                }
                break;
            case SweepAxis::store_ts:
                s.store_ts = v;
                break;
            case SweepAxis::Omega_over_Delta:
                s.Omega_over_Delta = v;
                break;
        }
        rows.push_back({v, s, efficiency_breakdown(s, rates)});
    }
    return rows;
}

double threshold_storage_ratio(const MemoryScenario &base, const RateModel &rates, double threshold, double lo,
                               double hi) {
    require(hi > lo && lo >= 0, "invalid bracket");
    auto eps = [&](double ratio) {
        MemoryScenario s = base;
        s.store_ts = std::max(ratio, 1e-12) * base.pulse_tp;
        return efficiency_breakdown(s, rates).eps_total;
    };
    if (eps(lo) < threshold) return 0.0;
    if (eps(hi) >= threshold) return hi;
    for (int i = 0; i < 200 && (hi - lo) > 1e-9 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (eps(mid) >= threshold ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double bandwidth_per_watt(const AtomSpec &atom, const stark::LaserSpec &laser, const stark::LevelScheme &scheme,
                          const stark::IntensityProfile &profile, const stark::ShiftOptions &opt) {
    stark::IntensityProfile unit;
    switch (profile.kind) {
        case stark::ProfileKind::Linear:
            unit = stark::IntensityProfile::linear(1.0, profile.geometry);
            break;
        case stark::ProfileKind::Gaussian:
            unit = stark::IntensityProfile::gaussian(1.0, profile.geometry, profile.waist_w0);
            break;
        case stark::ProfileKind::Sampled:
            throw Error(ErrorCode::invalid_argument, "power scaling needs a Linear or Gaussian profile");
    }
    return stark::gradient_and_bandwidth(atom, unit, laser, scheme, 2, opt).bandwidth_Bs;
}

double power_for_bandwidth(const AtomSpec &atom, double B_target, const stark::LaserSpec &laser,
                           const stark::LevelScheme &scheme, const stark::IntensityProfile &profile,
                           const stark::ShiftOptions &opt) {
    require(B_target >= 0, "target bandwidth must be non-negative");
    const double per_watt = bandwidth_per_watt(atom, laser, scheme, profile, opt);
    if (!(per_watt > 0.0)) throw DomainError(ErrorCode::undefined_ratio, "bandwidth per watt is zero");
    return B_target / per_watt;
}

MemoryScenario reference_memory_scenario() {
    MemoryScenario s;
    s.pulse_tp = 20e-6;
    s.store_ts = 20e-6;
    s.Omega_over_Delta = 0.02;
    s.Delta_1p = -phys::two_pi * 2e9;
    s.Delta_ac = -phys::two_pi * 5e12;
    s.q_ac = 1;
    s.q_p = 0;
    s.q_c = 1;
    s.geometry.length_L = 0.01;
    s.geometry.radius_R = 1e-5;
    s.geometry.atom_count_N = 2.5e6;
    s.geometry.loading_eff = 0.4;
    s.geometry.coupling_g = phys::two_pi * 1.5e6;
    s.bandwidth_Bs = gaussian_pulse_bandwidth(s.pulse_tp);
    s.multi_pulse = false;
    return s;
}

BackgroundRates reference_background(const AtomSpec &atom) {
    decoherence::TrapSpec trap;
    const auto report = decoherence::trap_report(atom, trap, 0.0);
    BackgroundRates b;
    b.trap_scatter = report.scatter_Gamma_t;
    b.collision_rate = 30.0;
    b.background_loss = 1.0 / trap.pressure_inv_alpha;
    return b;
}

}  // namespace acgem::budget
