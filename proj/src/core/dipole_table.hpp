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

#ifndef ACGEM_SRC_CORE_DIPOLE_TABLE_HPP
#define ACGEM_SRC_CORE_DIPOLE_TABLE_HPP

#include <vector>

#include "acgem/atom.hpp"

namespace acgem::detail {

/// All ground-to-excited dipole elements of one atom, indexed by ground
/// sublevel, excited sublevel and polarization.
class DipoleTable {
   public:
    explicit DipoleTable(const atomic::AtomSpec &atom);

    const std::vector<atomic::HyperfineState> &ground() const { return ground_; }
    const std::vector<atomic::ExcitedState> &excited() const { return excited_; }
    int ground_index(int F, int mF) const;

    double element(int gi, int ai, int q) const { return elem_[(gi * excited_.size() + ai) * 3 + (q + 1)]; }
    /// Excited-minus-ground transition frequency, rad/s.
    double omega(int gi, int ai) const { return omega_[gi * excited_.size() + ai]; }

   private:
    std::vector<atomic::HyperfineState> ground_;
    std::vector<atomic::ExcitedState> excited_;
    std::vector<double> elem_;
    std::vector<double> omega_;
};

}  // namespace acgem::detail

#endif
