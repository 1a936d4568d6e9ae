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

#ifndef ACGEM_ATOM_HPP
#define ACGEM_ATOM_HPP

#include <vector>

#include "acgem/angular.hpp"

namespace acgem::atomic {

/// Level data for an alkali atom with a J = 1/2 ground state and the two
/// fine-structure components J' = 1/2 (D1) and J' = 3/2 (D2). Angular
/// frequencies are in rad/s. The D1 wavelength and the fine-structure
/// splitting are primitive; the D2 line follows from them.
struct AtomSpec {
    double mass;
    double wavelength_D1;
    double gamma;
    double delta_hfs;
    double delta_hfs_excited_d1;
    double delta_hfs_excited_d2;
    double delta_fs;
    double g1;
    double g2;
    HalfInt nuclear_spin = half(3);

    static AtomSpec rb87();

    /// Throws Error(invalid_argument) if any rate, mass or splitting is not positive.
    void validate() const;

    double omega_D1() const;
    double omega_D2() const;
    double wavelength_D2() const;
    double omega_line(HalfInt Jp) const;
    double delta_hfs_excited(HalfInt Jp) const;
    /// |<J=1/2 || e r || J'>| in C m, from gamma and the line frequency.
    double reduced_dipole(HalfInt Jp) const;
    double lande_gF(int F) const;

    /// Ground hyperfine energies relative to F = 2, in rad/s.
    double ground_energy(int F) const;
    /// Excited F' energies relative to the ground F = 2 level, in rad/s.
    double excited_energy(HalfInt Jp, int Fp) const;
    std::vector<int> excited_F(HalfInt Jp) const;
    std::vector<int> ground_F() const;
};

struct HyperfineState {
    int F;
    int mF;
    HalfInt J = half(1);

    void validate(const AtomSpec &atom) const;
};

struct ExcitedState {
    HalfInt Jp;
    int Fp;
    int mFp;

    void validate(const AtomSpec &atom) const;
};

/// Spherical polarization component, restricted to -1, 0, +1.
class PolarizationQ {
   public:
    explicit PolarizationQ(int q);
    int value() const { return q_; }
    bool operator==(const PolarizationQ &) const = default;

   private:
    int q_;
};

/// <a| e r . eps_q |g> in C m (Wigner-Eckart with Edmonds phases).
double dipole_matrix_element(const HyperfineState &g, const ExcitedState &a, PolarizationQ q,
                             const AtomSpec &atom);

/// Detuning of a laser from the transition S_{1/2},F -> centre of J'.
/// Red detuning is negative.
double detuning_of(double laser_omega, const HyperfineState &g, HalfInt Jp, const AtomSpec &atom);

/// All excited sublevels of one fine-structure manifold.
std::vector<ExcitedState> excited_states(const AtomSpec &atom, HalfInt Jp);
/// All ground sublevels.
std::vector<HyperfineState> ground_states(const AtomSpec &atom);

}  // namespace acgem::atomic

#endif
