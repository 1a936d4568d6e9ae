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

#include <gtest/gtest.h>

#include <acgem/budget.hpp>
#include <acgem/constants.hpp>
#include <acgem/decoherence.hpp>
#include <acgem/error.hpp>

#include <cmath>

using namespace acgem;
using namespace acgem::decoherence;

namespace {
const AtomSpec rb = AtomSpec::rb87();
constexpr double THz = phys::two_pi * 1e12;
constexpr double GHz = phys::two_pi * 1e9;

LaserSpec at(double detuning, int q = 1) { return LaserSpec::from_d1_detuning(rb, detuning, q); }
const LevelScheme optimal = stark::select_level_scheme(0, 1);
const LevelScheme doubled = stark::select_level_scheme(1, 1);
}  // namespace

TEST(Scattering, ZeroIntensityGivesZero) { EXPECT_EQ(scattering_rate(rb, {1, -1}, at(-5 * THz), 0.0), 0.0); }

TEST(Scattering, PositiveOffResonanceInBothModes) {
    for (double d : {-0.2, -5.0, -30.0, 4.0})
        for (const auto &g : atomic::ground_states(rb))
            for (auto mode : {ScatterMode::full, ScatterMode::simplified}) {
                EXPECT_GT(scattering_rate(rb, g, at(d * THz, 1), 1e7, mode), 0.0);
                EXPECT_GT(scattering_rate(rb, g, at(d * THz, 0), 1e7, mode), 0.0);
            }
}

TEST(Scattering, FullAndSimplifiedAgreeWithinTenPercent) {
    for (double d = 1.0; d <= 10.0001; d *= 1.25)
        for (const auto &g : atomic::ground_states(rb)) {
            const double full = scattering_rate(rb, g, at(-d * THz), 1.0);
            const double simple = scattering_rate(rb, g, at(-d * THz), 1.0, ScatterMode::simplified);
            EXPECT_NEAR(simple / full, 1.0, 0.1) << d << " THz F=" << g.F << " mF=" << g.mF;
        }
}

TEST(Scattering, InverseSquareScalingWhileD1Dominates) {
    for (const auto &g : atomic::ground_states(rb)) {
        const double r = scattering_rate(rb, g, at(-0.4 * THz), 1.0) / scattering_rate(rb, g, at(-0.2 * THz), 1.0);
        if (g.F == 2 && g.mF == 2) {
            // Dark to sigma+ on D1; only the distant D2 line scatters.
            EXPECT_GT(r, 0.9);
            continue;
        }
        EXPECT_NEAR(r, 0.25, 0.25 * 0.1) << g.F << " " << g.mF;
    }
}

TEST(Scattering, LinearInIntensity) {
    const HyperfineState g{1, -1};
    const auto laser = at(-5 * THz);
    EXPECT_NEAR(scattering_rate(rb, g, laser, 10.0) / scattering_rate(rb, g, laser, 1.0), 10.0, 1e-12);
}

TEST(Scattering, ChannelsRespectEnergyConservation) {
    for (double d : {-5.0, -0.01}) {
        const auto laser = at(d * THz);
        for (const auto &g : atomic::ground_states(rb)) {
            const auto channels = scattering_channels(rb, g, laser);
            EXPECT_FALSE(channels.empty());
            double total = 0.0;
            for (const auto &c : channels) {
                EXPECT_LT(c.omega_fi, laser.omega_l);
                EXPECT_EQ(c.final_state.mF, g.mF + laser.q - c.q_sc);
                EXPECT_GE(c.rate_per_intensity, 0.0);
                total += c.rate_per_intensity;
            }
            EXPECT_NEAR(total / scattering_rate(rb, g, laser, 1.0), 1.0, 1e-12);
        }
    }
}

TEST(ScatteringPerBandwidth, AcCoefficientAtOperatingPoint) {
    const double k = scattering_per_bandwidth(rb, {1, -1}, at(-5 * THz), optimal);
    EXPECT_NEAR(k, 7e-6, 7e-6 * 0.3);
}

TEST(ScatteringPerBandwidth, ThreeFoldSchemeCutsRateByTwoThirds) {
    for (double d : {-2.0, -5.0, -10.0}) {
        const double r3 = scattering_per_bandwidth(rb, {1, -1}, at(d * THz), optimal);
        const double r2 = scattering_per_bandwidth(rb, {1, -1}, at(d * THz), doubled);
        EXPECT_NEAR(r3 / r2, 2.0 / 3.0, 0.02);
    }
}

TEST(ScatteringPerBandwidth, UndefinedForLinearPolarization) {
    try {
        scattering_per_bandwidth(rb, {1, -1}, at(-5 * THz, 0), doubled);
        FAIL() << "expected undefined ratio";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::undefined_ratio);
    }
}

TEST(ScatteringPerBandwidth, PerMegahertzAtFiveTerahertz) {
    const double per_mhz = 1e6 * scattering_per_bandwidth(rb, {1, -1}, at(-5 * THz), doubled);
    EXPECT_NEAR(per_mhz, 11.0, 11.0 * 0.3);
}

TEST(OptimalDetuning, UpperStretchedStateHasFlatBottomAroundTheAcScale) {
    const auto o = find_optimal_detuning(rb, {2, 1}, 1, doubled, -0.5 * THz, -40 * THz);
    EXPECT_NEAR(o.rate_per_hz * 1e6, 11.0, 11.0 * 0.3);
    const double r5 = scattering_per_bandwidth(rb, {2, 1}, at(-5 * THz), doubled);
    const double r20 = scattering_per_bandwidth(rb, {2, 1}, at(-20 * THz), doubled);
    EXPECT_NEAR(r20 / r5, 1.0, 0.1);
}

TEST(OptimalDetuning, LowerStretchedStateIsMonotone) {
    const auto o = find_optimal_detuning(rb, {2, -2}, 1, doubled, -0.5 * THz, -40 * THz);
    EXPECT_TRUE(o.boundary_minimum);
    for (std::size_t i = 1; i < o.grid_rate.size(); ++i) EXPECT_LT(o.grid_rate[i], o.grid_rate[i - 1]);
}

TEST(OptimalDetuning, GridDensityDoesNotMoveTheResult) {
    for (HyperfineState g : {HyperfineState{1, -1}, HyperfineState{2, 2}}) {
        const auto a = find_optimal_detuning(rb, g, 1, doubled, -0.5 * THz, -40 * THz, 400);
        const auto b = find_optimal_detuning(rb, g, 1, doubled, -0.5 * THz, -40 * THz, 800);
        EXPECT_NEAR(b.detuning / a.detuning, 1.0, 0.01);
        EXPECT_EQ(a.boundary_minimum, b.boundary_minimum);
    }
}

TEST(OptimalDetuning, GridIsLogSpacedAndReturnedValueIsTheMinimum) {
    const auto o = find_optimal_detuning(rb, {1, -1}, 1, doubled, -0.5 * THz, -40 * THz, 50);
    ASSERT_EQ(o.grid_detuning.size(), 50u);
    const double r0 = o.grid_detuning[1] / o.grid_detuning[0];
    const double r1 = o.grid_detuning[49] / o.grid_detuning[48];
    EXPECT_NEAR(r0 / r1, 1.0, 1e-9);
    for (double r : o.grid_rate) EXPECT_GE(r, o.rate_per_hz * (1 - 1e-12));
}

TEST(OptimalDetuning, RejectsMixedSignRange) {
    EXPECT_THROW(find_optimal_detuning(rb, {1, -1}, 1, doubled, 1 * THz, -40 * THz), Error);
}

TEST(CouplingField, QuadraticInRabiFrequency) {
    EXPECT_EQ(coupling_field_scattering(rb, 0.0, -2 * GHz, 1), 0.0);
    const double a = coupling_field_scattering(rb, 40e6, -2 * GHz, 1);
    const double b = coupling_field_scattering(rb, 80e6, -2 * GHz, 1);
    EXPECT_NEAR(b / a, 4.0, 1e-12);
}

TEST(CouplingField, DominatesShiftingLaserAtStorageOperatingPoint) {
    const auto s = budget::reference_memory_scenario();
    const double Gc = coupling_field_scattering(rb, s.Omega_over_Delta * std::abs(s.Delta_1p), s.Delta_1p, s.q_c);
    const double Gac = s.bandwidth_Bs * scattering_per_bandwidth(rb, {1, -1}, at(s.Delta_ac), optimal);
    EXPECT_GT(Gc / Gac, 10.0);
}

TEST(CouplingField, NearResonanceRejected) {
    const double on_line = rb.excited_energy(atomic::half(1), 2) - rb.ground_energy(1) - rb.omega_D1();
    EXPECT_THROW(coupling_field_scattering(rb, 1e6, on_line + 2 * rb.gamma, 1), DomainError);
    EXPECT_NO_THROW(coupling_field_scattering(rb, 1e6, on_line + 20 * rb.gamma, 1));
}

TEST(Trap, ArithmeticExamples) {
    TrapSpec t;
    t.beta_hcc = 5e-11 * 1e-6;
    t.density_n = 1e11 * 1e6;
    const auto r = trap_report(rb, t, 1e6);
    EXPECT_NEAR(r.collision_rate, 5.0, 1e-9);  // beta n evaluated literally
    EXPECT_NEAR(r.site_detuning_diff, 53.2, 1e-9);
    EXPECT_NEAR(r.peak_intensity, 2 * 1.5 / (phys::pi * 1e-10), 1e-3);
    EXPECT_NEAR(r.background_rate, 1.0, 1e-12);
}

TEST(Trap, CoherenceBoundedByScatterTime) {
    const auto r = trap_report(rb, TrapSpec{}, 1e6);
    EXPECT_GT(r.depth_Ut, 0.0);
    EXPECT_GT(r.scatter_Gamma_t, 0.0);
    EXPECT_LE(r.coherence_time, 1.0 / r.scatter_Gamma_t);
    EXPECT_NEAR(r.coherence_time, 1.0 / (r.scatter_Gamma_t + r.collision_rate + r.background_rate), 1e-15);
    EXPECT_NEAR(r.depth_J / (phys::k_B * r.depth_Ut), 1.0, 1e-12);
}

TEST(Trap, LifetimeLinearInDepthAtFixedScatterRate) {
    TrapSpec a, b;
    b.power = 3.0;
    const auto ra = trap_report(rb, a, 0.0);
    const auto rb2 = trap_report(rb, b, 0.0);
    const double ka = ra.lifetime_tau_trap * ra.scatter_Gamma_t / ra.depth_Ut;
    const double kb = rb2.lifetime_tau_trap * rb2.scatter_Gamma_t / rb2.depth_Ut;
    EXPECT_NEAR(ka / kb, 1.0, 1e-12);
    EXPECT_NEAR(rb2.depth_Ut / ra.depth_Ut, 2.0, 1e-12);
}

TEST(Trap, CounterRotatingTermsDeepenTheTrap) {
    ShiftOptions rwa;
    rwa.rwa = true;
    const auto with = trap_report(rb, TrapSpec{}, 0.0);
    const auto without = trap_report(rb, TrapSpec{}, 0.0, rwa);
    EXPECT_GT(with.depth_Ut, without.depth_Ut);
}

TEST(Trap, RejectsNonPositiveFields) {
    TrapSpec t;
    t.waist = 0.0;
    EXPECT_THROW(trap_report(rb, t, 0.0), Error);
}
