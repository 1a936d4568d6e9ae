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

#ifndef ACGEM_STARK_HPP
#define ACGEM_STARK_HPP

#include <array>
#include <cstddef>
#include <vector>

#include "acgem/atom.hpp"

namespace acgem::stark {

using atomic::AtomSpec;
using atomic::HyperfineState;

enum class ShiftMode { full, approx };

/// Evaluation options shared by the light-shift and scattering routines.
/// `guard_gammas` is the half-width, in units of gamma, of the exclusion
/// band around every included transition.
struct ShiftOptions {
    ShiftMode mode = ShiftMode::full;
    bool rwa = false;
    double guard_gammas = 10.0;
};

struct LaserSpec {
    double omega_l = 0.0;  // rad/s
    int q = 1;
    double power = 0.0;  // W

    /// Laser tuned `delta` (rad/s) from the D1 F=2 centroid; red is negative.
    static LaserSpec from_d1_detuning(const AtomSpec &atom, double delta, int q, double power = 0.0);
    double d1_detuning(const AtomSpec &atom) const;
    void validate() const;
};

struct EnsembleGeometry {
    double length_L = 0.01;
    double radius_R = 1e-5;
    double atom_count_N = 0.0;
    double loading_eff = 1.0;
    double coupling_g = 0.0;  // rad/s

    void validate() const;
};

enum class ProfileKind { Gaussian, Linear, Sampled };

/// Intensity of the shifting beam over the ensemble. Gaussian is centred
/// at z = 0 and falls along z; Linear falls from I0 at z = 0 to 0 at z = L.
/// Sampled holds on-axis values on a uniform grid over [0, L].
struct IntensityProfile {
    ProfileKind kind = ProfileKind::Linear;
    double I0 = 0.0;        // W/m^2
    double waist_w0 = 0.0;  // m
    EnsembleGeometry geometry{};
    std::vector<double> samples;

    static IntensityProfile linear(double power, const EnsembleGeometry &geometry);
    /// `waist` <= 0 selects the default 2L/3.
    static IntensityProfile gaussian(double power, const EnsembleGeometry &geometry, double waist = 0.0);
    static IntensityProfile sampled(std::vector<double> on_axis, const EnsembleGeometry &geometry);
    void validate() const;
};

/// Per-unit-intensity splittings in Hz per (W/m^2). Magnitudes, with the
/// sign of the total splitting kept separately.
struct SplittingSet {
    std::array<double, 2> deltaF_bar{};  // index 0: F=1, index 1: F=2
    double delta12_bar = 0.0;            // signed: (U_{1,0} - U_{2,0})/h
    double deltaT_bar = 0.0;
    int sign = 1;
    double detuning = 0.0;  // D1 detuning of the laser, rad/s
    int q = 0;

    double deltaF(int F) const { return deltaF_bar.at(F == 1 ? 0 : 1); }
    double signed_deltaT() const { return sign * deltaT_bar; }
};

struct LevelScheme {
    int m1 = -1;
    int m2 = -1;
    int q_p = 1;
    int q_c = 1;
    /// Coefficient of the F splitting in the total splitting, 2 + q_c - q_p.
    int multiplier = 2;
};

/// U_{F,mF} in J.
double stark_shift(const AtomSpec &atom, const HyperfineState &state, const LaserSpec &laser, double intensity,
                   const ShiftOptions &opt = {});

SplittingSet splittings(const AtomSpec &atom, const LaserSpec &laser, const LevelScheme &scheme,
                        const ShiftOptions &opt = {});

/// m1 is fixed to -1. Throws DomainError(forbidden_scheme) if |m2| > 2.
LevelScheme select_level_scheme(int q_p, int q_c);

/// W/m^2 at transverse offset x and axial position z.
double profile_intensity(const IntensityProfile &profile, double x, double z);
/// On-axis dI/dz in W/m^3.
double profile_gradient(const IntensityProfile &profile, double z);

struct GradientResult {
    std::vector<double> z;          // m
    std::vector<double> intensity;  // W/m^2, on axis
    std::vector<double> delta_t;    // two-photon detuning profile, Hz
    std::vector<double> eta;        // rad/s per m
    double bandwidth_Bs = 0.0;      // Hz
    bool monotone = true;
};

GradientResult gradient_and_bandwidth(const AtomSpec &atom, const IntensityProfile &profile, const LaserSpec &laser,
                                      const LevelScheme &scheme, std::size_t z_points = 512,
                                      const ShiftOptions &opt = {});

}  // namespace acgem::stark

#endif
