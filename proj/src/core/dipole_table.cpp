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

#include "dipole_table.hpp"

#include "acgem/error.hpp"

namespace acgem::detail {

DipoleTable::DipoleTable(const atomic::AtomSpec &atom) {
    atom.validate();
    ground_ = atomic::ground_states(atom);
    for (auto Jp : {atomic::half(1), atomic::half(3)}) {
        for (const auto &a : atomic::excited_states(atom, Jp)) excited_.push_back(a);
    }
    elem_.resize(ground_.size() * excited_.size() * 3);
    omega_.resize(ground_.size() * excited_.size());
    for (std::size_t gi = 0; gi < ground_.size(); ++gi) {
        for (std::size_t ai = 0; ai < excited_.size(); ++ai) {
            const auto &g = ground_[gi];
            const auto &a = excited_[ai];
            omega_[gi * excited_.size() + ai] = atom.excited_energy(a.Jp, a.Fp) - atom.ground_energy(g.F);
            for (int q = -1; q <= 1; ++q) {
                elem_[(gi * excited_.size() + ai) * 3 + (q + 1)] =
                    atomic::dipole_matrix_element(g, a, atomic::PolarizationQ(q), atom);
            }
        }
    }
}

int DipoleTable::ground_index(int F, int mF) const {
    for (std::size_t i = 0; i < ground_.size(); ++i) {
        if (ground_[i].F == F && ground_[i].mF == mF) return static_cast<int>(i);
    }
    throw Error(ErrorCode::invalid_argument, "no such ground sublevel");
}

}  // namespace acgem::detail
