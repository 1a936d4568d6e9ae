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

#include "acgem/gem.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "acgem/constants.hpp"
#include "acgem/error.hpp"

namespace acgem::gem {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok) throw Error(ErrorCode::invalid_argument, what);
}

constexpr double kStabilityBound = 0.1;

// Trapezoidal weights for a possibly non-uniform time axis.
std::vector<double> trapezoid_weights(const std::vector<double> &t) {
    std::vector<double> w(t.size(), 0.0);
    for (std::size_t i = 1; i < t.size(); ++i) {
        const double h = 0.5 * (t[i] - t[i - 1]);
        w[i - 1] += h;
        w[i] += h;
    }
    return w;
}

// Centred derivative on a non-uniform axis, one-sided at the ends.
std::vector<cplx> derivative(const std::vector<double> &t, const std::vector<cplx> &f) {
    const std::size_t n = t.size();
    std::vector<cplx> d(n);
    if (n < 2) return d;
    d[0] = (f[1] - f[0]) / (t[1] - t[0]);
    d[n - 1] = (f[n - 1] - f[n - 2]) / (t[n - 1] - t[n - 2]);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) / (t[i + 1] - t[i - 1]);
    return d;
}

// Mean frequency in Hz of the field restricted to the mask; a component
// exp(-i 2 pi f t) has frequency f.
double spectral_centroid(const std::vector<double> &t, const std::vector<cplx> &f, const std::vector<double> &w,
                         const std::vector<bool> &mask) {
    const auto df = derivative(t, f);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!mask[i]) continue;
        num += std::imag(std::conj(f[i]) * df[i]) * w[i];
        den += std::norm(f[i]) * w[i];
    }
    if (den <= 0.0) return 0.0;
    return -num / den / phys::two_pi;
}

}  // namespace

void GemConfig::validate() const {
    require(length_L > 0, "ensemble length must be positive");
    require(effective_gamma >= 0, "decay rate must be non-negative");
    require(std::isfinite(g) && std::isfinite(gN_over_c), "coupling must be finite");
    require(gN_over_c >= 0, "coupling density must be non-negative");
    require(z_points >= 64, "need at least 64 z points");
    require(dt > 0, "time step must be positive");
    require(total_time > 0, "total time must be positive");
}

std::vector<double> GemConfig::z_grid() const {
    std::vector<double> z(z_points);
    for (std::size_t i = 0; i < z_points; ++i) z[i] = length_L * static_cast<double>(i) / (z_points - 1);
    z.back() = length_L;
    return z;
}

GradientSchedule GradientSchedule::constant(std::vector<double> delta_of_z, double freq_offset) {
    GradientSchedule s;
    s.segments.push_back({0.0, std::move(delta_of_z), freq_offset});
    return s;
}

void GradientSchedule::validate(std::size_t z_points) const {
    require(!segments.empty(), "gradient schedule has no segments");
    require(segments.front().t_start <= 0.0, "gradient schedule must start at t = 0");
    for (std::size_t i = 0; i < segments.size(); ++i) {
        require(segments[i].delta_of_z.size() == z_points, "segment detuning profile does not match the z grid");
        require(std::isfinite(segments[i].freq_offset), "segment offset must be finite");
        for (double d : segments[i].delta_of_z) require(std::isfinite(d), "segment detuning must be finite");
        if (i > 0) require(segments[i].t_start > segments[i - 1].t_start, "segments must be time-ordered");
    }
}

double GradientSchedule::max_abs_detuning() const {
    double m = 0.0;
    for (const auto &s : segments) {
        for (double d : s.delta_of_z) m = std::max(m, std::abs(d + s.freq_offset));
    }
    return m;
}

const GradientSegment &GradientSchedule::at(double t) const {
    const GradientSegment *cur = &segments.front();
    for (const auto &s : segments) {
        if (s.t_start <= t) cur = &s;
    }
    return *cur;
}

GradientSchedule apply_switch(const GradientSchedule &schedule, SwitchMethod method, double t_switch,
                              bool compensate) {
    require(!schedule.segments.empty(), "cannot switch an empty schedule");
    const GradientSegment &last = schedule.segments.back();
    require(t_switch > last.t_start, "switch time must follow the last segment start");
    GradientSchedule out = schedule;
    out.switch_method = method;
    GradientSegment seg;
    seg.t_start = t_switch;
    const auto &d = last.delta_of_z;
    if (method == SwitchMethod::IntensityReverse) {
        seg.delta_of_z.assign(d.rbegin(), d.rend());
        seg.freq_offset = last.freq_offset;
    } else {
        seg.delta_of_z.resize(d.size());
        std::transform(d.begin(), d.end(), seg.delta_of_z.begin(), [](double x) { return -x; });
        seg.freq_offset = last.freq_offset;
        if (compensate && !d.empty()) seg.freq_offset += d.front() + d.back();
    }
    out.segments.push_back(std::move(seg));
    return out;
}

void PulseSpec::validate() const {
    require(duration_tp > 0, "pulse duration must be positive");
    require(std::isfinite(t_peak) && std::isfinite(carrier_offset), "pulse parameters must be finite");
}

cplx PulseSpec::envelope(double t) const {
    const double s = duration_tp / 6.0;
    const double x = (t - t_peak) / s;
    return amplitude * std::exp(-0.5 * x * x) * std::polar(1.0, -phys::two_pi * carrier_offset * t);
}

double PulseSpec::bandwidth() const { return 9.0 * std::sqrt(2.0) / (phys::pi * duration_tp); }

GemState solve(const GemConfig &config, const GradientSchedule &schedule, const PulseSpec &pulse) {
    config.validate();
    schedule.validate(config.z_points);
    pulse.validate();
    const double max_det = schedule.max_abs_detuning();
    if (config.dt * max_det >= kStabilityBound) {
        throw Error(ErrorCode::numerical, "time step too coarse: dt * max|delta| = " +
                                              std::to_string(config.dt * max_det) + " (must stay below 0.1)");
    }

    const std::size_t nz = config.z_points;
    const double dz = config.length_L / static_cast<double>(nz - 1);
    const double half_gamma = 0.5 * config.effective_gamma;
    const cplx ig(0.0, config.g);
    const cplx i_gnc(0.0, config.gN_over_c);

    GemState st;
    st.z = config.z_grid();

    std::vector<cplx> sigma(nz, 0.0), E(nz), k1(nz), k2(nz), k3(nz), k4(nz), tmp(nz);
    std::vector<double> rate(nz);

    auto field = [&](double t, const std::vector<cplx> &s) {
        cplx acc = 0.0;
        E[0] = pulse.envelope(t);
        const cplx e0 = E[0];
        for (std::size_t i = 1; i < nz; ++i) {
            acc += 0.5 * (s[i] + s[i - 1]) * dz;
            E[i] = e0 + i_gnc * acc;
        }
    };
    auto rhs = [&](double t, const std::vector<cplx> &s, std::vector<cplx> &out) {
        field(t, s);
        for (std::size_t i = 0; i < nz; ++i) {
            out[i] = -cplx(half_gamma, rate[i]) * s[i] + ig * E[i];
        }
    };
    const double stored_scale = config.g != 0.0 ? config.gN_over_c / config.g : 0.0;
    auto stored = [&](const std::vector<cplx> &s) {
        double acc = 0.0;
        for (std::size_t i = 1; i < nz; ++i) acc += 0.5 * (std::norm(s[i]) + std::norm(s[i - 1])) * dz;
        return stored_scale * acc;
    };
    std::size_t step_count = 0;
    auto record = [&](double t) {
        field(t, sigma);
        st.t.push_back(t);
        st.E_in.push_back(E[0]);
        st.E_out.push_back(E[nz - 1]);
        st.stored_energy.push_back(stored(sigma));
        if (config.snapshot_stride > 0 && step_count % config.snapshot_stride == 0) {
            st.snapshot_t.push_back(t);
            st.sigma.insert(st.sigma.end(), sigma.begin(), sigma.end());
            st.field.insert(st.field.end(), E.begin(), E.end());
        }
    };

    std::vector<double> breaks{0.0};
    for (const auto &s : schedule.segments) {
        if (s.t_start > 0.0 && s.t_start < config.total_time) breaks.push_back(s.t_start);
    }
    breaks.push_back(config.total_time);

    record(0.0);
    for (std::size_t b = 0; b + 1 < breaks.size(); ++b) {
        const double t0 = breaks[b], t1 = breaks[b + 1];
        const auto &seg = schedule.at(t0);
        for (std::size_t i = 0; i < nz; ++i) rate[i] = phys::two_pi * (seg.delta_of_z[i] + seg.freq_offset);
        const auto n = static_cast<std::size_t>(std::ceil((t1 - t0) / config.dt - 1e-9));
        const double h = (t1 - t0) / static_cast<double>(n);
        for (std::size_t k = 0; k < n; ++k) {
            const double t = t0 + h * static_cast<double>(k);
            rhs(t, sigma, k1);
            for (std::size_t i = 0; i < nz; ++i) tmp[i] = sigma[i] + 0.5 * h * k1[i];
            rhs(t + 0.5 * h, tmp, k2);
            for (std::size_t i = 0; i < nz; ++i) tmp[i] = sigma[i] + 0.5 * h * k2[i];
            rhs(t + 0.5 * h, tmp, k3);
            for (std::size_t i = 0; i < nz; ++i) tmp[i] = sigma[i] + h * k3[i];
            rhs(t + h, tmp, k4);
            for (std::size_t i = 0; i < nz; ++i) {
                sigma[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
                if (!std::isfinite(sigma[i].real()) || !std::isfinite(sigma[i].imag())) {
                    throw Error(ErrorCode::numerical, "non-finite coherence at t = " + std::to_string(t + h) +
                                                          " s, z index " + std::to_string(i));
                }
            }
            ++step_count;
            record(k + 1 == n ? t1 : t + h);
        }
    }

    const auto w = trapezoid_weights(st.t);
    for (std::size_t i = 0; i < st.t.size(); ++i) {
        st.energy_in += std::norm(st.E_in[i]) * w[i];
        st.energy_out += std::norm(st.E_out[i]) * w[i];
    }
    return st;
}

RecallMetrics recall_metrics(const GemState &state, const PulseSpec &pulse, double t_switch) {
    require(!state.t.empty(), "empty simulation record");
    if (!(state.energy_in > 0.0)) throw Error(ErrorCode::undefined_ratio, "input pulse carries no energy");
    const auto &t = state.t;
    const auto w = trapezoid_weights(t);
    std::vector<bool> after(t.size()), before(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        after[i] = t[i] > t_switch;
        before[i] = !after[i];
    }

    RecallMetrics m;
    double echo = 0.0, transmitted = 0.0, centroid = 0.0;
    double mag_overlap = 0.0, mirror_norm = 0.0;
    cplx overlap = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const double p = std::norm(state.E_out[i]) * w[i];
        if (after[i]) {
            echo += p;
            centroid += t[i] * p;
            const cplx mirror = std::conj(pulse.envelope(2.0 * t_switch - t[i]));
            mag_overlap += std::abs(state.E_out[i]) * std::abs(mirror) * w[i];
            overlap += state.E_out[i] * std::conj(mirror) * w[i];
            mirror_norm += std::norm(mirror) * w[i];
        } else {
            transmitted += p;
        }
    }
    m.efficiency = echo / state.energy_in;
    m.transmitted_fraction = transmitted / state.energy_in;
    if (echo > 0.0) {
        m.echo_time = centroid / echo;
        const double norm = std::sqrt(echo * mirror_norm);
        if (norm > 0.0) {
            m.time_reversal_fidelity = mag_overlap / norm;
            m.phase_overlap = std::abs(overlap) / norm;
        }
        std::vector<bool> all(t.size(), true);
        m.carrier_shift =
            spectral_centroid(t, state.E_out, w, after) - spectral_centroid(t, state.E_in, w, all);
    }
    const double window = t.back() - t_switch;
    m.spectral_resolution = window > 0.0 ? 1.0 / window : 0.0;
    return m;
}

EffectiveTwoLevel effective_two_level(double Omega_c, double Delta_1p, double g, double gamma, double gamma_0,
                                      double d, double T, double margin) {
    if (Delta_1p == 0.0) throw Error(ErrorCode::invalid_argument, "one-photon detuning must be nonzero");
    require(Omega_c != 0.0, "coupling Rabi frequency must be nonzero");
    require(gamma >= 0 && gamma_0 >= 0 && d >= 0 && T > 0 && margin > 0, "invalid two-level reduction inputs");
    EffectiveTwoLevel r;
    r.g_eff = g * Omega_c / Delta_1p;
    r.gamma_eff = gamma_0;
    r.far_detuned = std::abs(Delta_1p) >= margin * d * gamma;
    r.slow_enough = T * gamma * d >= margin;
    return r;
}

std::vector<double> linear_profile(std::size_t z_points, double at_start, double at_end) {
    require(z_points >= 2, "need at least two z points");
    std::vector<double> d(z_points);
    for (std::size_t i = 0; i < z_points; ++i) {
        const double u = static_cast<double>(i) / static_cast<double>(z_points - 1);
        d[i] = at_start + (at_end - at_start) * u;
    }
    return d;
}

Scenario reference_scenario(double d_prime, double Bs, double L, GridPreset grid, SwitchMethod method,
                            bool compensate, GradientShape shape, double bandwidth_ratio, double gamma) {
    require(d_prime >= 0, "optical depth must be non-negative");
    require(Bs > 0 && L > 0 && bandwidth_ratio > 0, "bandwidth, length and ratio must be positive");
    double dt_factor = 0.05;
    std::size_t nz = 256;
    if (grid == GridPreset::coarse) {
        dt_factor = 0.08;
        nz = 128;
    } else if (grid == GridPreset::fine) {
        dt_factor = 0.025;
        nz = 512;
    }
    Scenario s;
    const double eta = phys::two_pi * Bs / L;
    s.config.length_L = L;
    s.config.g = 1.0;
    s.config.gN_over_c = d_prime * eta / s.config.g;
    s.config.effective_gamma = gamma;
    s.config.z_points = nz;

    s.pulse.duration_tp = 9.0 * std::sqrt(2.0) / (phys::pi * Bs / bandwidth_ratio);
    s.pulse.t_peak = 0.5 * s.pulse.duration_tp;
    s.t_switch = 1.2 * s.pulse.duration_tp;
    s.config.total_time = 2.0 * s.t_switch + s.pulse.duration_tp;

    std::vector<double> profile;
    if (shape == GradientShape::centred) {
        profile = linear_profile(nz, -0.5 * Bs, 0.5 * Bs);
    } else {
        profile = linear_profile(nz, Bs, 0.0);
        s.pulse.carrier_offset = 0.5 * Bs;
    }
    s.schedule = apply_switch(GradientSchedule::constant(std::move(profile)), method, s.t_switch, compensate);
    const double max_det = std::max(s.schedule.max_abs_detuning(), std::abs(s.pulse.carrier_offset));
    s.config.dt = dt_factor / max_det;
    return s;
}

}  // namespace acgem::gem
