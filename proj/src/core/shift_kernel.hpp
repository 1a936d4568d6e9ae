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

#ifndef ACGEM_SRC_CORE_SHIFT_KERNEL_HPP
#define ACGEM_SRC_CORE_SHIFT_KERNEL_HPP

#include "acgem/stark.hpp"
#include "dipole_table.hpp"

namespace acgem::detail {

// Per-unit-intensity kernels. Shifts in J per (W/m^2), rates in 1/s per (W/m^2).

double full_shift_per_intensity(const DipoleTable &table, const atomic::AtomSpec &atom, int gi,
                                const stark::LaserSpec &laser, const stark::ShiftOptions &opt);

double approx_shift_per_intensity(const atomic::AtomSpec &atom, const atomic::HyperfineState &state,
                                  const stark::LaserSpec &laser, const stark::ShiftOptions &opt);

/// One scattering channel g_i -> g_f. `rate` is per unit intensity.
struct ChannelRate {
    int F_f;
    int mF_f;
    int q_sc;
    double omega_fi;
    double rate;
};

std::vector<ChannelRate> full_scattering_channels(const DipoleTable &table, const atomic::AtomSpec &atom, int gi,
                                                  const stark::LaserSpec &laser, const stark::ShiftOptions &opt);

std::vector<ChannelRate> simplified_scattering_channels(const DipoleTable &table, const atomic::AtomSpec &atom,
                                                        int gi, const stark::LaserSpec &laser,
                                                        const stark::ShiftOptions &opt);

/// Throws DomainError(near_resonance) if the laser lies within the guard
/// band of any transition out of ground level F.
void check_guard_full(const DipoleTable &table, const atomic::AtomSpec &atom, int gi, double omega_l,
                      double guard_gammas);
void check_guard_lines(const atomic::AtomSpec &atom, int F, double omega_l, double guard_gammas);

}  // namespace acgem::detail

#endif
