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

#include "acgem/atom.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "acgem/constants.hpp"
#include "acgem/error.hpp"

namespace acgem::atomic {

namespace {

const HalfInt kJg = half(1);
const HalfInt kD1 = half(1);
const HalfInt kD2 = half(3);

void require(bool ok, const std::string &what) {
    if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

void require_fine(HalfInt Jp) { require(Jp == kD1 || Jp == kD2, "J' must be 1/2 or 3/2"); }

int sign_of_integer(HalfInt x) {
    require(x.is_integer(), "phase exponent is not an integer");
    return (x.twice() / 2) % 2 == 0 ? 1 : -1;
}

}  // namespace

AtomSpec AtomSpec::rb87() {
    using phys::two_pi;
    AtomSpec a{};
    a.mass = 86.909180527 * phys::amu;
    a.wavelength_D1 = 795e-9;
    a.gamma = two_pi * 6e6;
    a.delta_hfs = two_pi * 6.8e9;
    a.delta_hfs_excited_d1 = two_pi * 800e6;
    a.delta_hfs_excited_d2 = two_pi * 500e6;
    a.delta_fs = two_pi * 7e12;
    a.g1 = -0.5;
    a.g2 = 0.5;
    a.nuclear_spin = half(3);
    return a;
}

void AtomSpec::validate() const {
    require(mass > 0, "mass must be positive");
    require(wavelength_D1 > 0, "D1 wavelength must be positive");
    require(gamma > 0, "gamma must be positive");
    require(delta_hfs > 0 && delta_hfs_excited_d1 >= 0 && delta_hfs_excited_d2 >= 0,
            "hyperfine splittings must be positive");
    require(delta_fs > 0, "fine-structure splitting must be positive");
    require(nuclear_spin.twice() >= 1, "nuclear spin must be positive");
}

double AtomSpec::omega_D1() const { return phys::two_pi * phys::c / wavelength_D1; }
double AtomSpec::omega_D2() const { return omega_D1() + delta_fs; }
double AtomSpec::wavelength_D2() const { return phys::two_pi * phys::c / omega_D2(); }

double AtomSpec::omega_line(HalfInt Jp) const {
    require_fine(Jp);
    return Jp == kD1 ? omega_D1() : omega_D2();
}

double AtomSpec::delta_hfs_excited(HalfInt Jp) const {
    require_fine(Jp);
    return Jp == kD1 ? delta_hfs_excited_d1 : delta_hfs_excited_d2;
}

double AtomSpec::reduced_dipole(HalfInt Jp) const {
    const double w = omega_line(Jp);
    const double two_jp_1 = Jp.twice() + 1;
    return std::sqrt(two_jp_1 * 3.0 * phys::pi * phys::eps0 * phys::hbar * std::pow(phys::c, 3) * gamma /
                     (w * w * w));
}

double AtomSpec::lande_gF(int F) const {
    auto fs = ground_F();
    require(F == fs.front() || F == fs.back(), "no such ground hyperfine level");
    return F == fs.front() ? g1 : g2;
}

std::vector<int> AtomSpec::ground_F() const {
    std::vector<int> out;
    for (int t = std::abs(nuclear_spin.twice() - kJg.twice()); t <= nuclear_spin.twice() + kJg.twice(); t += 2) {
        out.push_back(t / 2);
    }
    return out;
}

std::vector<int> AtomSpec::excited_F(HalfInt Jp) const {
    require_fine(Jp);
    std::vector<int> out;
    for (int t = std::abs(nuclear_spin.twice() - Jp.twice()); t <= nuclear_spin.twice() + Jp.twice(); t += 2) {
        out.push_back(t / 2);
    }
    return out;
}

double AtomSpec::ground_energy(int F) const {
    auto fs = ground_F();
    require(F == fs.front() || F == fs.back(), "no such ground hyperfine level");
    return F == fs.back() ? 0.0 : -delta_hfs;
}

double AtomSpec::excited_energy(HalfInt Jp, int Fp) const {
    auto fs = excited_F(Jp);
    const int n = static_cast<int>(fs.size());
    int k = -1;
    for (int i = 0; i < n; ++i) {
        if (fs[i] == Fp) k = i;
    }
    require(k >= 0, "F' not allowed for this J'");
    // F' levels spread uniformly across the manifold's hyperfine width.
    const double offset = n > 1 ? (static_cast<double>(k) / (n - 1) - 0.5) * delta_hfs_excited(Jp) : 0.0;
    return omega_line(Jp) + offset;
}

void HyperfineState::validate(const AtomSpec &atom) const {
    require(J == kJg, "ground state must have J = 1/2");
    auto fs = atom.ground_F();
    require(F == fs.front() || F == fs.back(), "ground F not allowed");
    require(std::abs(mF) <= F, "|mF| exceeds F");
}

void ExcitedState::validate(const AtomSpec &atom) const {
    require_fine(Jp);
    bool ok = false;
    for (int f : atom.excited_F(Jp)) ok = ok || f == Fp;
    require(ok, "excited F' not allowed");
    require(std::abs(mFp) <= Fp, "|mF'| exceeds F'");
}

PolarizationQ::PolarizationQ(int q) : q_(q) {
    require(q >= -1 && q <= 1, "polarization q must be -1, 0 or +1");
}

double dipole_matrix_element(const HyperfineState &g, const ExcitedState &a, PolarizationQ q, const AtomSpec &atom) {
    g.validate(atom);
    a.validate(atom);
    if (a.mFp != g.mF + q.value()) return 0.0;
    if (std::abs(a.Fp - g.F) > 1) return 0.0;
    const HalfInt I = atom.nuclear_spin;
    const HalfInt F = g.F, Fp = a.Fp;
    const double reduced_F = sign_of_integer(a.Jp + I + F + 1) * std::sqrt((2.0 * a.Fp + 1) * (2.0 * g.F + 1)) *
                             wigner_6j(a.Jp, Fp, I, F, g.J, HalfInt(1)) * atom.reduced_dipole(a.Jp);
    return sign_of_integer(Fp - HalfInt(a.mFp)) *
           wigner_3j(Fp, HalfInt(1), F, HalfInt(-a.mFp), HalfInt(q.value()), HalfInt(g.mF)) * reduced_F;
}

double detuning_of(double laser_omega, const HyperfineState &g, HalfInt Jp, const AtomSpec &atom) {
    require_fine(Jp);
    return laser_omega - (atom.omega_line(Jp) - atom.ground_energy(g.F));
}

std::vector<ExcitedState> excited_states(const AtomSpec &atom, HalfInt Jp) {
    std::vector<ExcitedState> out;
    for (int Fp : atom.excited_F(Jp)) {
        for (int m = -Fp; m <= Fp; ++m) out.push_back({Jp, Fp, m});
    }
    return out;
}

std::vector<HyperfineState> ground_states(const AtomSpec &atom) {
    std::vector<HyperfineState> out;
    for (int F : atom.ground_F()) {
        for (int m = -F; m <= F; ++m) out.push_back({F, m});
    }
    return out;
}

}  // namespace acgem::atomic
