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

#include "acgem/decoherence.hpp"

#include <cmath>
#include <string>

#include "acgem/constants.hpp"
#include "acgem/error.hpp"
#include "dipole_table.hpp"
#include "golden.hpp"
#include "shift_kernel.hpp"

namespace acgem::decoherence {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

}  // namespace

std::vector<ScatteringChannel> scattering_channels(const AtomSpec &atom, const HyperfineState &state,
                                                   const LaserSpec &laser, ScatterMode mode, const ShiftOptions &opt) {
    laser.validate();
    state.validate(atom);
    detail::DipoleTable table(atom);
    const int gi = table.ground_index(state.F, state.mF);
    auto raw = mode == ScatterMode::full ? detail::full_scattering_channels(table, atom, gi, laser, opt)
                                         : detail::simplified_scattering_channels(table, atom, gi, laser, opt);
    std::vector<ScatteringChannel> out;
    out.reserve(raw.size());
    for (const auto &c : raw) out.push_back({state, {c.F_f, c.mF_f}, c.q_sc, c.omega_fi, c.rate});
    return out;
}

double scattering_rate(const AtomSpec &atom, const HyperfineState &state, const LaserSpec &laser, double intensity,
                       ScatterMode mode, const ShiftOptions &opt) {
    require(intensity >= 0 && std::isfinite(intensity), "intensity must be non-negative");
    double total = 0.0;
    for (const auto &c : scattering_channels(atom, state, laser, mode, opt)) total += c.rate_per_intensity;
    return total * intensity;
}

double scattering_per_bandwidth(const AtomSpec &atom, const HyperfineState &state, const LaserSpec &laser,
                                const LevelScheme &scheme, const ShiftOptions &opt) {
    if (laser.q == 0) {
        throw DomainError(ErrorCode::undefined_ratio,
                          "scattering per bandwidth undefined for q = 0: the mF splitting vanishes");
    }
    const auto s = stark::splittings(atom, laser, scheme, opt);
    if (!(s.deltaT_bar > 0.0)) {
        throw DomainError(ErrorCode::undefined_ratio, "total splitting is zero");
    }
    return scattering_rate(atom, state, laser, 1.0, ScatterMode::full, opt) / s.deltaT_bar;
}

OptimumResult find_optimal_detuning(const AtomSpec &atom, const HyperfineState &state, int q,
                                    const LevelScheme &scheme, double lo, double hi, std::size_t grid_points,
                                    double rel_tol, const ShiftOptions &opt) {
    require(lo != 0.0 && hi != 0.0 && (lo > 0) == (hi > 0), "search range must not straddle zero");
    require(grid_points >= 3, "need at least three grid points");
    require(rel_tol > 0, "tolerance must be positive");
    const double sign = lo > 0 ? 1.0 : -1.0;
    double a = std::log(std::min(std::abs(lo), std::abs(hi)));
    double b = std::log(std::max(std::abs(lo), std::abs(hi)));
    require(b > a, "search range is empty");

    auto f = [&](double log_mag) {
        const auto laser = LaserSpec::from_d1_detuning(atom, sign * std::exp(log_mag), q);
        return scattering_per_bandwidth(atom, state, laser, scheme, opt);
    };

    OptimumResult r;
    r.grid_detuning.resize(grid_points);
    r.grid_rate.resize(grid_points);
    std::size_t best = 0;
    for (std::size_t i = 0; i < grid_points; ++i) {
        const double x = a + (b - a) * static_cast<double>(i) / static_cast<double>(grid_points - 1);
        r.grid_detuning[i] = sign * std::exp(x);
        r.grid_rate[i] = f(x);
        if (r.grid_rate[i] < r.grid_rate[best]) best = i;  // ties keep the smaller |detuning|
    }
    if (best == 0 || best + 1 == grid_points) {
        r.boundary_minimum = true;
        r.detuning = r.grid_detuning[best];
        r.rate_per_hz = r.grid_rate[best];
        return r;
    }
    const double step = (b - a) / static_cast<double>(grid_points - 1);
    const double x0 = a + step * static_cast<double>(best - 1);
    const double x1 = a + step * static_cast<double>(best + 1);
    const auto g = detail::golden_section(f, x0, x1, std::log1p(rel_tol));
    r.detuning = sign * std::exp(g.x);
    r.rate_per_hz = g.fx;
    return r;
}

double coupling_field_scattering_coefficient(const AtomSpec &atom, double Delta_1p, int q_c,
                                             const ShiftOptions &opt) {
    require(std::isfinite(Delta_1p), "one-photon detuning must be finite");
    const auto laser = LaserSpec::from_d1_detuning(atom, Delta_1p, q_c);
    const double mu23 = atom.reduced_dipole(atomic::half(1));
    const double rate_per_intensity = scattering_rate(atom, {1, -1}, laser, 1.0, ScatterMode::full, opt);
    return 2.0 * phys::hbar * phys::hbar * phys::eps0 * phys::c / (mu23 * mu23) * rate_per_intensity;
}

double coupling_field_scattering(const AtomSpec &atom, double Omega_c, double Delta_1p, int q_c,
                                 const ShiftOptions &opt) {
    require(std::isfinite(Omega_c), "Rabi frequency must be finite");
    return coupling_field_scattering_coefficient(atom, Delta_1p, q_c, opt) * Omega_c * Omega_c;
}

void TrapSpec::validate() const {
    require(wavelength > 0, "trap wavelength must be positive");
    require(power > 0, "trap power must be positive");
    require(waist > 0, "trap waist must be positive");
    require(pressure_inv_alpha > 0, "background-collision time must be positive");
    require(beta_hcc > 0, "collision coefficient must be positive");
    require(density_n > 0, "density must be positive");
    geometry.validate();
}

TrapReport trap_report(const AtomSpec &atom, const TrapSpec &trap, double bandwidth_Bs, const ShiftOptions &opt) {
    trap.validate();
    require(bandwidth_Bs >= 0, "bandwidth must be non-negative");
    LaserSpec laser;
    laser.omega_l = phys::two_pi * phys::c / trap.wavelength;
    laser.q = trap.q;
    laser.power = trap.power;

    TrapReport r;
    r.peak_intensity = 2.0 * trap.power / (phys::pi * trap.waist * trap.waist);
    r.depth_J = std::abs(stark::stark_shift(atom, trap.state, laser, r.peak_intensity, opt));
    r.depth_Ut = r.depth_J / phys::k_B;
    r.scatter_Gamma_t = scattering_rate(atom, trap.state, laser, r.peak_intensity, ScatterMode::full, opt);
    const double k = phys::two_pi / atom.wavelength_D2();
    r.recoil_energy = (phys::hbar * k) * (phys::hbar * k) / (2.0 * atom.mass);
    r.lifetime_tau_trap = atom.mass * r.depth_J / (phys::hbar * phys::hbar * k * k * r.scatter_Gamma_t);
    r.site_detuning_diff = bandwidth_Bs * trap.wavelength / (2.0 * trap.geometry.length_L);
    r.collision_rate = trap.beta_hcc * trap.density_n;
    r.background_rate = 1.0 / trap.pressure_inv_alpha;
    r.coherence_time = 1.0 / (r.scatter_Gamma_t + r.collision_rate + r.background_rate);
    return r;
}

}  // namespace acgem::decoherence
