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

#ifndef ACGEM_BUDGET_HPP
#define ACGEM_BUDGET_HPP

#include <vector>

#include "acgem/decoherence.hpp"

namespace acgem::budget {

using atomic::AtomSpec;
using stark::EnsembleGeometry;

/// 9 sqrt(2) / (pi t_p), Hz.
double gaussian_pulse_bandwidth(double t_p);

struct MemoryScenario {
    double pulse_tp = 20e-6;          // s
    double store_ts = 20e-6;          // s
    double Omega_over_Delta = 0.02;   // |Omega_c / Delta_1p|
    double Delta_1p = 0.0;            // rad/s
    double Delta_ac = 0.0;            // rad/s, D1 detuning of the shifting laser
    int q_ac = 1;
    int q_c = 1;
    int q_p = 0;
    EnsembleGeometry geometry{};
    double bandwidth_Bs = 0.0;  // Hz
    bool multi_pulse = false;

    void validate() const;
};

/// Decoherence channels present at all times, 1/s each.
struct BackgroundRates {
    double trap_scatter = 0.0;
    double collision_rate = 0.0;
    double background_loss = 0.0;

    double total() const { return trap_scatter + collision_rate + background_loss; }
};

/// Rate coefficients behind an efficiency estimate.
struct RateModel {
    double gamma_ac_per_hz = 0.0;     // (1/s)/Hz of bandwidth
    double gamma_c_per_omega2 = 0.0;  // s, multiplies Omega_c^2
    BackgroundRates background{};
};

RateModel build_rate_model(const AtomSpec &atom, const MemoryScenario &scenario, const BackgroundRates &background,
                           const stark::ShiftOptions &opt = {});

struct EfficiencyBreakdown {
    double d_prime = 0.0;
    double eps_w = 0.0;
    double eps_r = 0.0;
    double eps_rw = 0.0;
    double eps_s = 0.0;
    double eps_total = 0.0;
    double Gamma_bg = 0.0;
    double Gamma_rw = 0.0;
    double Gamma_ac = 0.0;
    double Gamma_c = 0.0;
    double dbp = 0.0;
};

EfficiencyBreakdown efficiency_breakdown(const MemoryScenario &scenario, const RateModel &rates);

enum class SweepAxis { pulse_tp, store_ts, Omega_over_Delta };

struct SweepRow {
    double value;
    MemoryScenario scenario;
    EfficiencyBreakdown breakdown;
};

/// With `follow_pulse` on a pulse_tp sweep, each row stores for one pulse
/// length (t_s = t_p) and matches the bandwidth to the pulse (B_s = B_G).
std::vector<SweepRow> efficiency_sweep(const MemoryScenario &base, const RateModel &rates, SweepAxis axis,
                                       const std::vector<double> &values, bool follow_pulse = true);

/// Largest t_s / t_p for which eps_total stays at or above `threshold`,
/// by bisection between `lo` and `hi` (in units of t_p). Returns 0 if the
/// threshold fails already at `lo`, `hi` if it still holds there.
double threshold_storage_ratio(const MemoryScenario &base, const RateModel &rates, double threshold,
                               double lo = 0.0, double hi = 1e4);

/// Laser power (W) giving bandwidth `B_target` with the profile shape of
/// `profile` (its own power is ignored).
double power_for_bandwidth(const AtomSpec &atom, double B_target, const stark::LaserSpec &laser,
                           const stark::LevelScheme &scheme, const stark::IntensityProfile &profile,
                           const stark::ShiftOptions &opt = {});

/// Bandwidth per watt, Hz/W, for the shape of `profile`.
double bandwidth_per_watt(const AtomSpec &atom, const stark::LaserSpec &laser, const stark::LevelScheme &scheme,
                          const stark::IntensityProfile &profile, const stark::ShiftOptions &opt = {});

/// Storage-time reference setup: t_p = 20 us, |Omega/Delta| = 0.02,
/// Delta_1p = -2 pi 2 GHz, Delta_ac = -2 pi 5 THz, g = 2 pi 1.5 MHz,
/// N = 2.5e6, loading 0.4, L = 1 cm, B_s = B_G.
MemoryScenario reference_memory_scenario();

/// Trap scattering from a 1.5 W, 10 um, 1064 nm trap, 30 /s collisions and
/// 1 /s background loss.
BackgroundRates reference_background(const AtomSpec &atom);

}  // namespace acgem::budget

#endif
