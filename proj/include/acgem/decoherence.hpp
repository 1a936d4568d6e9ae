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

#ifndef ACGEM_DECOHERENCE_HPP
#define ACGEM_DECOHERENCE_HPP

#include <vector>

#include "acgem/stark.hpp"

namespace acgem::decoherence {

using atomic::AtomSpec;
using atomic::HyperfineState;
using stark::LaserSpec;
using stark::LevelScheme;
using stark::ShiftOptions;

enum class ScatterMode { full, simplified };

struct ScatteringChannel {
    HyperfineState initial;
    HyperfineState final_state;
    int q_sc = 0;
    double omega_fi = 0.0;  // rad/s, negative if the final state lies lower
    double rate_per_intensity = 0.0;
};

/// Raman and Rayleigh channels out of `state`; their rates sum to the total.
std::vector<ScatteringChannel> scattering_channels(const AtomSpec &atom, const HyperfineState &state,
                                                   const LaserSpec &laser, ScatterMode mode = ScatterMode::full,
                                                   const ShiftOptions &opt = {});

/// Photon-scattering rate in 1/s.
double scattering_rate(const AtomSpec &atom, const HyperfineState &state, const LaserSpec &laser, double intensity,
                       ScatterMode mode = ScatterMode::full, const ShiftOptions &opt = {});

/// Scattering rate per hertz of total splitting, (1/s)/Hz. Throws
/// DomainError(undefined_ratio) when the splitting vanishes.
double scattering_per_bandwidth(const AtomSpec &atom, const HyperfineState &state, const LaserSpec &laser,
                                const LevelScheme &scheme, const ShiftOptions &opt = {});

struct OptimumResult {
    double detuning = 0.0;      // D1 detuning, rad/s
    double rate_per_hz = 0.0;   // (1/s)/Hz
    bool boundary_minimum = false;
    std::vector<double> grid_detuning;
    std::vector<double> grid_rate;
};

/// Minimizes scattering per bandwidth over D1 detunings between `lo` and
/// `hi` (same sign, rad/s). Log-spaced grid then golden-section refinement
/// to `rel_tol` in |detuning|.
OptimumResult find_optimal_detuning(const AtomSpec &atom, const HyperfineState &state, int q,
                                    const LevelScheme &scheme, double lo, double hi, std::size_t grid_points = 400,
                                    double rel_tol = 0.01, const ShiftOptions &opt = {});

/// Scattering rate induced by a coupling field of Rabi frequency Omega_c,
/// one-photon detuning Delta_1p from the D1 F=2 centroid, polarization q_c.
/// Evaluated for the F=1, mF=-1 population state.
double coupling_field_scattering(const AtomSpec &atom, double Omega_c, double Delta_1p, int q_c,
                                 const ShiftOptions &opt = {});
/// Gamma_c / Omega_c^2 in s.
double coupling_field_scattering_coefficient(const AtomSpec &atom, double Delta_1p, int q_c,
                                             const ShiftOptions &opt = {});

struct TrapSpec {
    double wavelength = 1064e-9;
    double power = 1.5;
    double waist = 10e-6;
    stark::EnsembleGeometry geometry{};
    double pressure_inv_alpha = 1.0;  // s
    double beta_hcc = 5e-17;          // m^3/s
    double density_n = 1e17;          // m^-3
    int q = 0;
    HyperfineState state{1, -1};

    void validate() const;
};

struct TrapReport {
    double depth_Ut = 0.0;            // K
    double depth_J = 0.0;             // J
    double peak_intensity = 0.0;      // W/m^2
    double scatter_Gamma_t = 0.0;     // 1/s
    double recoil_energy = 0.0;       // J
    double lifetime_tau_trap = 0.0;   // s
    double site_detuning_diff = 0.0;  // Hz
    double collision_rate = 0.0;      // 1/s
    double background_rate = 0.0;     // 1/s
    double coherence_time = 0.0;      // s
};

/// `bandwidth_Bs` (Hz) sets the standing-wave site detuning difference.
/// The trap shift is evaluated without the rotating-wave approximation
/// unless `opt` says otherwise.
TrapReport trap_report(const AtomSpec &atom, const TrapSpec &trap, double bandwidth_Bs,
                       const ShiftOptions &opt = {});

}  // namespace acgem::decoherence

#endif
