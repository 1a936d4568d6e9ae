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

#include "acgem/stark.hpp"

#include <cmath>
#include <string>

#include "acgem/constants.hpp"
#include "acgem/error.hpp"
#include "dipole_table.hpp"
#include "shift_kernel.hpp"

namespace acgem::stark {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

}  // namespace

LaserSpec LaserSpec::from_d1_detuning(const AtomSpec &atom, double delta, int q, double power) {
    LaserSpec l;
    l.omega_l = atom.omega_D1() + delta;
    l.q = q;
    l.power = power;
    l.validate();
    return l;
}

double LaserSpec::d1_detuning(const AtomSpec &atom) const { return omega_l - atom.omega_D1(); }

void LaserSpec::validate() const {
    require(std::isfinite(omega_l) && omega_l > 0, "laser frequency must be positive");
    atomic::PolarizationQ check(q);
    (void)check;
    require(power >= 0 && std::isfinite(power), "laser power must be non-negative");
}

void EnsembleGeometry::validate() const {
    require(length_L > 0, "ensemble length must be positive");
    require(radius_R > 0, "ensemble radius must be positive");
    require(atom_count_N >= 0, "atom number must be non-negative");
    require(loading_eff >= 0 && loading_eff <= 1, "loading efficiency must lie in [0, 1]");
    require(coupling_g >= 0, "coupling strength must be non-negative");
}

IntensityProfile IntensityProfile::linear(double power, const EnsembleGeometry &geometry) {
    geometry.validate();
    require(power >= 0, "power must be non-negative");
    IntensityProfile p;
    p.kind = ProfileKind::Linear;
    p.geometry = geometry;
    p.I0 = power / (geometry.length_L * geometry.radius_R);
    return p;
}

IntensityProfile IntensityProfile::gaussian(double power, const EnsembleGeometry &geometry, double waist) {
    geometry.validate();
    require(power >= 0, "power must be non-negative");
    IntensityProfile p;
    p.kind = ProfileKind::Gaussian;
    p.geometry = geometry;
    p.waist_w0 = waist > 0 ? waist : 2.0 * geometry.length_L / 3.0;
    p.I0 = 2.0 * power / (phys::pi * p.waist_w0 * p.waist_w0);
    return p;
}

IntensityProfile IntensityProfile::sampled(std::vector<double> on_axis, const EnsembleGeometry &geometry) {
    geometry.validate();
    require(on_axis.size() >= 2, "sampled profile needs at least two points");
    IntensityProfile p;
    p.kind = ProfileKind::Sampled;
    p.geometry = geometry;
    p.samples = std::move(on_axis);
    p.I0 = p.samples.front();
    p.validate();
    return p;
}

void IntensityProfile::validate() const {
    geometry.validate();
    require(I0 >= 0 && std::isfinite(I0), "peak intensity must be non-negative");
    if (kind == ProfileKind::Gaussian) require(waist_w0 > 0, "Gaussian waist must be positive");
    if (kind == ProfileKind::Sampled) {
        require(samples.size() >= 2, "sampled profile needs at least two points");
        for (double s : samples) require(s >= 0 && std::isfinite(s), "sampled intensity must be non-negative");
    }
}

double stark_shift(const AtomSpec &atom, const HyperfineState &state, const LaserSpec &laser, double intensity,
                   const ShiftOptions &opt) {
    laser.validate();
    state.validate(atom);
    require(intensity >= 0 && std::isfinite(intensity), "intensity must be non-negative");
    if (opt.mode == ShiftMode::approx) {
        return detail::approx_shift_per_intensity(atom, state, laser, opt) * intensity;
    }
    detail::DipoleTable table(atom);
    return detail::full_shift_per_intensity(table, atom, table.ground_index(state.F, state.mF), laser, opt) *
           intensity;
}

SplittingSet splittings(const AtomSpec &atom, const LaserSpec &laser, const LevelScheme &scheme,
                        const ShiftOptions &opt) {
    laser.validate();
    auto ubar = [&](int F, int mF) { return stark_shift(atom, {F, mF}, laser, 1.0, opt); };
    SplittingSet s;
    s.q = laser.q;
    s.detuning = laser.d1_detuning(atom);
    for (int F : {1, 2}) s.deltaF_bar[F - 1] = std::abs(ubar(F, 0) - ubar(F, 1)) / phys::h;
    s.delta12_bar = (ubar(1, 0) - ubar(2, 0)) / phys::h;
    const double total =
        s.delta12_bar - laser.q * (scheme.m2 * s.deltaF_bar[1] + scheme.m1 * s.deltaF_bar[0]);
    s.deltaT_bar = std::abs(total);
    s.sign = total < 0 ? -1 : 1;
    return s;
}

LevelScheme select_level_scheme(int q_p, int q_c) {
    atomic::PolarizationQ pp(q_p), pc(q_c);
    (void)pp;
    (void)pc;
    LevelScheme s;
    s.m1 = -1;
    s.q_p = q_p;
    s.q_c = q_c;
    s.m2 = s.m1 + q_p - q_c;
    s.multiplier = 2 + q_c - q_p;
    if (std::abs(s.m2) > 2) {
        throw DomainError(ErrorCode::forbidden_scheme,
                          "forbidden scheme: q_p = " + std::to_string(q_p) + ", q_c = " + std::to_string(q_c) +
                              " gives m2 = " + std::to_string(s.m2));
    }
    return s;
}

namespace {

double sampled_at(const IntensityProfile &p, double z) {
    const double L = p.geometry.length_L;
    const std::size_t n = p.samples.size();
    const double u = z / L * static_cast<double>(n - 1);
    std::size_t k = static_cast<std::size_t>(std::floor(u));
    if (k >= n - 1) return p.samples.back();
    const double f = u - static_cast<double>(k);
    return (1.0 - f) * p.samples[k] + f * p.samples[k + 1];
}

void require_inside(const IntensityProfile &p, double z) {
    const double L = p.geometry.length_L;
    if (!(z >= 0.0 && z <= L)) {
        throw Error(ErrorCode::out_of_range, "z = " + std::to_string(z) + " m lies outside the ensemble [0, L]");
    }
}

}  // namespace

double profile_intensity(const IntensityProfile &profile, double x, double z) {
    profile.validate();
    require_inside(profile, z);
    const double L = profile.geometry.length_L;
    switch (profile.kind) {
        case ProfileKind::Linear:
            if (std::abs(x) > profile.geometry.radius_R) return 0.0;
            return profile.I0 * (1.0 - z / L);
        case ProfileKind::Gaussian: {
            const double w = profile.waist_w0;
            return profile.I0 * std::exp(-2.0 * (x * x + z * z) / (w * w));
        }
        case ProfileKind::Sampled:
            if (std::abs(x) > profile.geometry.radius_R) return 0.0;
            return sampled_at(profile, z);
    }
    return 0.0;
}

double profile_gradient(const IntensityProfile &profile, double z) {
    profile.validate();
    require_inside(profile, z);
    const double L = profile.geometry.length_L;
    switch (profile.kind) {
        case ProfileKind::Linear:
            return -profile.I0 / L;
        case ProfileKind::Gaussian: {
            const double w = profile.waist_w0;
            return -4.0 * z / (w * w) * profile.I0 * std::exp(-2.0 * z * z / (w * w));
        }
        case ProfileKind::Sampled: {
            const std::size_t n = profile.samples.size();
            const double dz = L / static_cast<double>(n - 1);
            std::size_t k = static_cast<std::size_t>(std::floor(z / dz));
            if (k >= n - 1) k = n - 2;
            return (profile.samples[k + 1] - profile.samples[k]) / dz;
        }
    }
    return 0.0;
}

GradientResult gradient_and_bandwidth(const AtomSpec &atom, const IntensityProfile &profile, const LaserSpec &laser,
                                      const LevelScheme &scheme, std::size_t z_points, const ShiftOptions &opt) {
    profile.validate();
    require(z_points >= 2, "need at least two z points");
    const SplittingSet s = splittings(atom, laser, scheme, opt);
    const double dt_bar = s.signed_deltaT();
    const double L = profile.geometry.length_L;

    GradientResult r;
    r.z.resize(z_points);
    r.intensity.resize(z_points);
    r.delta_t.resize(z_points);
    r.eta.resize(z_points);
    for (std::size_t i = 0; i < z_points; ++i) {
        const double z = (i + 1 == z_points) ? L : L * static_cast<double>(i) / static_cast<double>(z_points - 1);
        r.z[i] = z;
        r.intensity[i] = profile_intensity(profile, 0.0, z);
        r.delta_t[i] = dt_bar * r.intensity[i];
        r.eta[i] = phys::two_pi * dt_bar * profile_gradient(profile, z);
    }
    bool up = true, down = true;
    for (std::size_t i = 1; i < z_points; ++i) {
        if (r.intensity[i] > r.intensity[i - 1]) down = false;
        if (r.intensity[i] < r.intensity[i - 1]) up = false;
    }
    r.monotone = up || down;
    r.bandwidth_Bs = std::abs(dt_bar * (r.intensity.back() - r.intensity.front()));
    return r;
}

}  // namespace acgem::stark
