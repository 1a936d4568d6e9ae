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

#ifndef ACGEM_GEM_HPP
#define ACGEM_GEM_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace acgem::gem {

using cplx = std::complex<double>;

/// Moving-frame two-level ensemble on [0, length_L].
struct GemConfig {
    double length_L = 1.0;         // m
    double effective_gamma = 0.0;  // rad/s
    double g = 1.0;                // rad/s per field unit
    double gN_over_c = 0.0;        // field units per m per unit coherence
    std::size_t z_points = 256;
    double dt = 0.0;          // s, upper bound on the step
    double total_time = 0.0;  // s
    /// Record sigma and E over z every this many steps; 0 disables.
    std::size_t snapshot_stride = 0;

    void validate() const;
    std::vector<double> z_grid() const;
};

enum class SwitchMethod { IntensityReverse, PolarizationFlip };

/// Static detuning profile from `t_start` onward. Detunings in Hz.
struct GradientSegment {
    double t_start = 0.0;
    std::vector<double> delta_of_z;
    double freq_offset = 0.0;
};

struct GradientSchedule {
    std::vector<GradientSegment> segments;
    SwitchMethod switch_method = SwitchMethod::IntensityReverse;

    static GradientSchedule constant(std::vector<double> delta_of_z, double freq_offset = 0.0);
    void validate(std::size_t z_points) const;
    double max_abs_detuning() const;
    const GradientSegment &at(double t) const;
};

/// Appends the post-switch segment at `t_switch`. IntensityReverse maps
/// delta(z) to delta(L - z). PolarizationFlip maps delta(z) to -delta(z);
/// `compensate` shifts the coupling field so the flip behaves as a pure
/// reversal, adding delta(0) + delta(L) to the offset.
GradientSchedule apply_switch(const GradientSchedule &schedule, SwitchMethod method, double t_switch,
                              bool compensate = false);

/// Gaussian field envelope exp(-(t - t_peak)^2 / (2 s^2)), s = duration_tp / 6,
/// carrying exp(-i 2 pi carrier_offset t).
struct PulseSpec {
    double t_peak = 0.0;
    double duration_tp = 0.0;
    cplx amplitude{1.0, 0.0};
    double carrier_offset = 0.0;

    void validate() const;
    cplx envelope(double t) const;
    /// 9 sqrt(2) / (pi t_p).
    double bandwidth() const;
};

struct GemState {
    std::vector<double> t;
    std::vector<cplx> E_in;
    std::vector<cplx> E_out;
    std::vector<double> z;
    std::vector<double> snapshot_t;
    std::vector<cplx> sigma;  // snapshot-major, z fastest
    std::vector<cplx> field;  // same layout as sigma
    std::vector<double> stored_energy;  // at each recorded time
    double energy_in = 0.0;
    double energy_out = 0.0;
};

GemState solve(const GemConfig &config, const GradientSchedule &schedule, const PulseSpec &pulse);

struct RecallMetrics {
    double efficiency = 0.0;
    double transmitted_fraction = 0.0;
    double echo_time = 0.0;  // s, centroid of the output intensity after the switch
    double time_reversal_fidelity = 0.0;
    double phase_overlap = 0.0;
    double carrier_shift = 0.0;        // Hz
    double spectral_resolution = 0.0;  // Hz, inverse of the echo window
};

RecallMetrics recall_metrics(const GemState &state, const PulseSpec &pulse, double t_switch);

struct EffectiveTwoLevel {
    double g_eff = 0.0;
    double gamma_eff = 0.0;
    bool far_detuned = false;
    bool slow_enough = false;
    bool valid() const { return far_detuned && slow_enough; }
};

/// Far-detuned Lambda system as a two-level one: g' = g Omega_c / Delta_1p,
/// decay gamma_0. `d` is the resonant optical depth, `T` the fastest time
/// scale; each condition must hold by `margin`.
EffectiveTwoLevel effective_two_level(double Omega_c, double Delta_1p, double g, double gamma, double gamma_0,
                                      double d, double T, double margin = 10.0);

enum class GridPreset { coarse, standard, fine };

/// Linear detuning profile on the z grid from `at_start` to `at_end`, Hz.
std::vector<double> linear_profile(std::size_t z_points, double at_start, double at_end);

/// Ready-to-run storage/recall setup.
struct Scenario {
    GemConfig config;
    GradientSchedule schedule;
    PulseSpec pulse;
    double t_switch = 0.0;
};

enum class GradientShape { centred, one_sided };

/// Linear-gradient scenario with effective optical depth d_prime and
/// bandwidth `Bs` (Hz) over length `L`. The pulse bandwidth is Bs / bandwidth_ratio,
/// the switch falls 1.2 t_p after the start, and the run lasts 2 tau + t_p.
Scenario reference_scenario(double d_prime, double Bs, double L = 1.0, GridPreset grid = GridPreset::standard,
                            SwitchMethod method = SwitchMethod::IntensityReverse, bool compensate = false,
                            GradientShape shape = GradientShape::centred, double bandwidth_ratio = 3.0,
                            double gamma = 0.0);

}  // namespace acgem::gem

#endif
