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

#include "shift_kernel.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "acgem/constants.hpp"
#include "acgem/error.hpp"

namespace acgem::detail {

namespace {

using atomic::half;

void near_resonance(double detuning, double guard) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "near resonance: detuning %.6g Hz is inside the %.6g Hz guard band",
                  detuning / phys::two_pi, guard / phys::two_pi);
    throw DomainError(ErrorCode::near_resonance, buf);
}

double shift_prefactor() { return 1.0 / (2.0 * phys::c * phys::eps0 * phys::hbar); }

double scatter_prefactor() {
    return 1.0 / (6.0 * phys::pi * phys::eps0 * phys::eps0 * std::pow(phys::hbar, 3) * std::pow(phys::c, 4));
}

}  // namespace

void check_guard_full(const DipoleTable &table, const atomic::AtomSpec &atom, int gi, double omega_l,
                      double guard_gammas) {
    const double guard = guard_gammas * atom.gamma;
    for (std::size_t ai = 0; ai < table.excited().size(); ++ai) {
        const double d = omega_l - table.omega(gi, static_cast<int>(ai));
        if (std::abs(d) < guard) near_resonance(d, guard);
    }
}

void check_guard_lines(const atomic::AtomSpec &atom, int F, double omega_l, double guard_gammas) {
    const double guard = guard_gammas * atom.gamma;
    for (auto Jp : {half(1), half(3)}) {
        const double d = atomic::detuning_of(omega_l, {F, 0}, Jp, atom);
        if (std::abs(d) < guard) near_resonance(d, guard);
    }
}

double full_shift_per_intensity(const DipoleTable &table, const atomic::AtomSpec &atom, int gi,
                                const stark::LaserSpec &laser, const stark::ShiftOptions &opt) {
    check_guard_full(table, atom, gi, laser.omega_l, opt.guard_gammas);
    double sum = 0.0;
    for (std::size_t ai = 0; ai < table.excited().size(); ++ai) {
        const int a = static_cast<int>(ai);
        const double w = table.omega(gi, a);
        const double d = table.element(gi, a, laser.q);
        sum += d * d / (laser.omega_l - w);
        if (!opt.rwa) {
            const double dc = table.element(gi, a, -laser.q);
            sum -= dc * dc / (laser.omega_l + w);
        }
    }
    return sum * shift_prefactor();
}

double approx_shift_per_intensity(const atomic::AtomSpec &atom, const atomic::HyperfineState &state,
                                  const stark::LaserSpec &laser, const stark::ShiftOptions &opt) {
    check_guard_lines(atom, state.F, laser.omega_l, opt.guard_gammas);
    const double w_o = 0.5 * (atom.omega_D1() + atom.omega_D2());
    const double pref = phys::pi * phys::c * phys::c * atom.gamma / (2.0 * w_o * w_o * w_o);
    const double qgm = laser.q * atom.lande_gF(state.F) * state.mF;
    const double d32 = atomic::detuning_of(laser.omega_l, state, half(3), atom);
    const double d12 = atomic::detuning_of(laser.omega_l, state, half(1), atom);
    double bracket = (2.0 + qgm) / d32 + (1.0 - qgm) / d12;
    if (!opt.rwa) {
        const double s32 = laser.omega_l + (atom.omega_D2() - atom.ground_energy(state.F));
        const double s12 = laser.omega_l + (atom.omega_D1() - atom.ground_energy(state.F));
        bracket -= (2.0 - qgm) / s32 + (1.0 + qgm) / s12;
    }
    return pref * bracket;
}

std::vector<ChannelRate> full_scattering_channels(const DipoleTable &table, const atomic::AtomSpec &atom, int gi,
                                                  const stark::LaserSpec &laser, const stark::ShiftOptions &opt) {
    check_guard_full(table, atom, gi, laser.omega_l, opt.guard_gammas);
    const auto &gs = table.ground();
    const int q = laser.q;
    const int mi = gs[gi].mF;
    std::vector<ChannelRate> out;
    for (std::size_t fi = 0; fi < gs.size(); ++fi) {
        const int f = static_cast<int>(fi);
        const int qs = mi + q - gs[f].mF;
        if (std::abs(qs) > 1) continue;
        const double w_fi = atom.ground_energy(gs[f].F) - atom.ground_energy(gs[gi].F);
        const double w_s = laser.omega_l - w_fi;
        if (w_s <= 0.0) continue;  // final state above E_i + hbar w_l
        const double cross_sign = ((q + qs) % 2 == 0) ? 1.0 : -1.0;
        double amp = 0.0;
        for (std::size_t ai = 0; ai < table.excited().size(); ++ai) {
            const int a = static_cast<int>(ai);
            const double w_ai = table.omega(gi, a);
            amp += table.element(f, a, qs) * table.element(gi, a, q) / (w_ai - laser.omega_l);
            if (!opt.rwa) {
                amp += cross_sign * table.element(f, a, -q) * table.element(gi, a, -qs) / (w_ai + w_s);
            }
        }
        out.push_back({gs[f].F, gs[f].mF, qs, w_fi, scatter_prefactor() * w_s * w_s * w_s * amp * amp});
    }
    return out;
}

std::vector<ChannelRate> simplified_scattering_channels(const DipoleTable &table, const atomic::AtomSpec &atom,
                                                        int gi, const stark::LaserSpec &laser,
                                                        const stark::ShiftOptions &opt) {
    const auto &gs = table.ground();
    const int Fi = gs[gi].F;
    check_guard_lines(atom, Fi, laser.omega_l, opt.guard_gammas);
    const int q = laser.q;
    const int mi = gs[gi].mF;
    std::vector<ChannelRate> out;
    for (std::size_t fi = 0; fi < gs.size(); ++fi) {
        const int f = static_cast<int>(fi);
        const int qs = mi + q - gs[f].mF;
        if (std::abs(qs) > 1) continue;
        const double w_fi = atom.ground_energy(gs[f].F) - atom.ground_energy(Fi);
        const double w_s = laser.omega_l - w_fi;
        if (w_s <= 0.0) continue;
        const double cross_sign = ((q + qs) % 2 == 0) ? 1.0 : -1.0;
        double amp = 0.0;
        for (auto Jp : {half(1), half(3)}) {
            double A = 0.0, B = 0.0;
            for (std::size_t ai = 0; ai < table.excited().size(); ++ai) {
                const int a = static_cast<int>(ai);
                if (table.excited()[ai].Jp != Jp) continue;
                A += table.element(f, a, qs) * table.element(gi, a, q);
                B += table.element(f, a, -q) * table.element(gi, a, -qs);
            }
            const double detuning = atomic::detuning_of(laser.omega_l, gs[gi], Jp, atom);
            amp += -A / detuning;
            if (!opt.rwa) {
                const double w_line = atom.omega_line(Jp) - atom.ground_energy(Fi);
                amp += cross_sign * B / (w_line + w_s);
            }
        }
        out.push_back({gs[f].F, gs[f].mF, qs, w_fi, scatter_prefactor() * w_s * w_s * w_s * amp * amp});
    }
    return out;
}

}  // namespace acgem::detail
