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

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace acgem::cli {

namespace {

KeySpec q(const char *key, Dimension d, const char *def, const char *help) {
    return {key, ValueKind::quantity, d, def, {}, help};
}
KeySpec r(const char *key, const char *def, const char *help) { return {key, ValueKind::real, {}, def, {}, help}; }
KeySpec i(const char *key, const char *def, const char *help) {
    return {key, ValueKind::integer, {}, def, {}, help};
}
KeySpec b(const char *key, const char *def, const char *help) {
    return {key, ValueKind::boolean, {}, def, {}, help};
}
KeySpec c(const char *key, std::vector<std::string> choices, const char *help) {
    const std::string def = choices.front();
    return {key, ValueKind::choice, {}, def, std::move(choices), help};
}

std::string trim(const std::string &s) {
    std::size_t a = 0, e = s.size();
    while (a < e && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (e > a && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(a, e - a);
}

std::string format_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string unit_name(const Dimension &d) {
    if (d == dim::frequency) return "Hz";
    if (d == dim::power) return "W";
    if (d == dim::energy) return "J";
    if (d == dim::length) return "m";
    if (d == dim::time) return "s";
    if (d == dim::temperature) return "K";
    if (d == dim::density) return "m^-3";
    if (d == dim::rate_coefficient) return "m^3/s";
    return d.str();
}

}  // namespace

const std::vector<KeySpec> &schema() {
    using namespace dim;
    static const std::vector<KeySpec> s = {
        q("laser.detuning", frequency, "-5 THz", "shifting-laser detuning from the D1 F=2 centroid"),
        i("laser.q", "1", "shifting-laser polarization"),
        q("laser.power", power, "1 W", "shifting-laser power"),
        i("scheme.q_p", "0", "probe polarization"),
        i("scheme.q_c", "1", "coupling polarization"),
        q("ensemble.length", length, "1 cm", "ensemble length L"),
        q("ensemble.radius", length, "10 um", "ensemble radius R"),
        r("ensemble.atom_count", "2.5e6", "atom number N"),
        r("ensemble.loading_eff", "0.4", "loading efficiency"),
        q("ensemble.coupling_g", frequency, "1.5 MHz", "atom-light coupling g / 2 pi"),
        c("profile.kind", {"linear", "gaussian"}, "intensity profile shape"),
        q("profile.waist", length, "0 m", "Gaussian waist; 0 selects 2L/3"),
        c("shift.mode", {"full", "approx"}, "light-shift evaluation"),
        b("shift.rwa", "false", "drop counter-rotating terms"),
        r("shift.guard", "10", "near-resonance guard band in linewidths"),
        q("scan.detuning_min", frequency, "-50 GHz", "stark-scan detuning nearest resonance"),
        q("scan.detuning_max", frequency, "-40 THz", "stark-scan detuning farthest from resonance"),
        i("scan.points", "200", "stark-scan log-spaced points"),
        i("optimum.state_F", "1", "ground F of the scattering state"),
        i("optimum.state_mF", "-1", "ground mF of the scattering state"),
        i("optimum.q_p", "1", "probe polarization of the normalizing scheme"),
        i("optimum.q_c", "1", "coupling polarization of the normalizing scheme"),
        q("optimum.range_min", frequency, "-0.5 THz", "search bound nearest resonance"),
        q("optimum.range_max", frequency, "-40 THz", "search bound farthest from resonance"),
        i("optimum.grid", "400", "coarse grid points"),
        r("optimum.tolerance", "0.01", "relative refinement tolerance"),
        q("trap.wavelength", length, "1064 nm", "trap wavelength"),
        q("trap.power", power, "1.5 W", "trap power"),
        q("trap.waist", length, "10 um", "trap waist"),
        q("trap.inv_alpha", time, "1 s", "background-collision time 1/alpha"),
        q("trap.beta", rate_coefficient, "5e-11 cm^3/s", "hyperfine-changing collision coefficient"),
        q("trap.density", density, "1e11 cm^-3", "atomic density"),
        q("trap.bandwidth", frequency, "1 MHz", "memory bandwidth for the site detuning"),
        i("trap.q", "0", "trap polarization"),
        i("trap.state_F", "1", "trapped ground F"),
        i("trap.state_mF", "-1", "trapped ground mF"),
        r("gem.d_prime", "0.5", "effective optical depth"),
        q("gem.bandwidth", frequency, "1 MHz", "gradient bandwidth"),
        q("gem.length", length, "1 cm", "ensemble length"),
        q("gem.gamma", frequency, "0 Hz", "effective decay rate / 2 pi"),
        r("gem.bandwidth_ratio", "3", "gradient bandwidth over pulse bandwidth"),
        c("gem.method", {"reverse", "flip"}, "switch method"),
        b("gem.compensate", "false", "cancel the flip offset with the coupling field"),
        c("gem.shape", {"centred", "one_sided"}, "gradient shape"),
        q("memory.pulse_tp", time, "20 us", "pulse length"),
        q("memory.store_ts", time, "20 us", "storage time"),
        r("memory.omega_over_delta", "0.02", "|Omega_c / Delta_1p|"),
        q("memory.delta_1p", frequency, "-2 GHz", "one-photon detuning"),
        q("memory.delta_ac", frequency, "-5 THz", "shifting-laser D1 detuning"),
        i("memory.q_ac", "1", "shifting-laser polarization"),
        q("memory.bandwidth", frequency, "0 Hz", "memory bandwidth; 0 matches the pulse"),
        b("memory.multi_pulse", "false", "apply read/write scattering for the whole storage"),
        b("memory.trap_scatter", "true", "include trap-laser scattering from the trap section"),
        q("memory.collision_rate", frequency, "30 Hz", "collision decoherence rate"),
        q("memory.background_loss", frequency, "1 Hz", "background loss rate"),
        c("sweep.axis", {"store_ts", "pulse_tp", "omega_over_delta"}, "swept quantity"),
        i("sweep.points", "200", "sweep points"),
        c("sweep.spacing", {"log", "linear"}, "sweep spacing"),
        r("sweep.dbp_min", "1", "smallest t_s / t_p"),
        r("sweep.dbp_max", "1000", "largest t_s / t_p"),
        q("sweep.tp_min", time, "100 ns", "shortest pulse"),
        q("sweep.tp_max", time, "1 s", "longest pulse"),
        r("sweep.ratio_min", "1e-4", "smallest |Omega_c / Delta_1p|"),
        r("sweep.ratio_max", "0.1", "largest |Omega_c / Delta_1p|"),
        b("sweep.follow_pulse", "true", "on a pulse sweep store one pulse length and match bandwidth"),
        q("power.bandwidth", frequency, "1 MHz", "target bandwidth"),
    };
    return s;
}

Config::Config() {
    for (const auto &k : schema()) values_[k.key] = parse(k, k.default_text, "default");
}

const KeySpec &Config::spec(const std::string &key) const {
    for (const auto &k : schema()) {
        if (k.key == key) return k;
    }
    throw ConfigError("unknown key '" + key + "'");
}

Config::Value Config::parse(const KeySpec &k, const std::string &raw, const std::string &origin) const {
    const std::string text = trim(raw);
    auto fail = [&](const std::string &why) -> ConfigError {
        return ConfigError(origin + ": " + k.key + " = '" + text + "': " + why);
    };
    Value v;
    v.text = text;
    switch (k.kind) {
        case ValueKind::quantity: {
            try {
                v.q = parse_quantity(text);
            } catch (const UnitError &e) {
                throw fail(e.what());
            }
            if (!(v.q.dimension == k.dimension)) {
                throw fail("expected " + unit_name(k.dimension) + ", got " + unit_name(v.q.dimension));
            }
            break;
        }
        case ValueKind::real: {
            try {
                v.q = parse_quantity(text);
            } catch (const UnitError &e) {
                throw fail(e.what());
            }
            if (!(v.q.dimension == dim::none)) throw fail("expected a plain number");
            break;
        }
        case ValueKind::integer: {
            const char *b = text.data();
            if (!text.empty() && *b == '+') ++b;
            auto [ptr, ec] = std::from_chars(b, text.data() + text.size(), v.i);
            if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) throw fail("expected an integer");
            break;
        }
        case ValueKind::boolean: {
            std::string lower = text;
            std::transform(lower.begin(), lower.end(), lower.begin(),
                           [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
            if (lower == "true" || lower == "yes" || lower == "on" || lower == "1") {
                v.b = true;
            } else if (lower == "false" || lower == "no" || lower == "off" || lower == "0") {
                v.b = false;
            } else {
                throw fail("expected true or false");
            }
            break;
        }
        case ValueKind::choice:
            if (std::find(k.choices.begin(), k.choices.end(), text) == k.choices.end()) {
                std::string all;
                for (const auto &ch : k.choices) all += (all.empty() ? "" : ", ") + ch;
                throw fail("expected one of " + all);
            }
            break;
    }
    return v;
}

void Config::set(const std::string &key, const std::string &value, const std::string &origin) {
    const KeySpec *k = nullptr;
    for (const auto &s : schema()) {
        if (s.key == key) k = &s;
    }
    if (k == nullptr) throw ConfigError(origin + ": unknown key '" + key + "'");
    values_[key] = parse(*k, value, origin);
}

void Config::load_text(const std::string &text, const std::string &origin) {
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string where = origin + ":" + std::to_string(lineno);
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
            section = trim(line.substr(1, line.size() - 2));
            if (section.empty()) throw ConfigError(where + ": empty section name");
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string name = trim(line.substr(0, eq));
        if (name.empty()) throw ConfigError(where + ": missing key");
        const std::string key = section.empty() || name.find('.') != std::string::npos ? name : section + "." + name;
        set(key, line.substr(eq + 1), where);
    }
}

void Config::load_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    load_text(ss.str(), path);
}

void Config::set_override(const std::string &assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + assignment + "'");
    set(trim(assignment.substr(0, eq)), assignment.substr(eq + 1), "--set");
}

double Config::quantity(const std::string &key) const {
    const auto &k = spec(key);
    if (k.kind != ValueKind::quantity) throw ConfigError(key + " is not a quantity");
    return values_.at(key).q.value;
}

double Config::real(const std::string &key) const {
    const auto &k = spec(key);
    if (k.kind != ValueKind::real) throw ConfigError(key + " is not a number");
    return values_.at(key).q.value;
}

long Config::integer(const std::string &key) const {
    const auto &k = spec(key);
    if (k.kind != ValueKind::integer) throw ConfigError(key + " is not an integer");
    return values_.at(key).i;
}

bool Config::boolean(const std::string &key) const {
    const auto &k = spec(key);
    if (k.kind != ValueKind::boolean) throw ConfigError(key + " is not a flag");
    return values_.at(key).b;
}

const std::string &Config::choice(const std::string &key) const {
    const auto &k = spec(key);
    if (k.kind != ValueKind::choice) throw ConfigError(key + " is not a choice");
    return values_.at(key).text;
}

std::vector<std::pair<std::string, std::string>> Config::resolved() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto &k : schema()) {
        const auto &v = values_.at(k.key);
        std::string text;
        switch (k.kind) {
            case ValueKind::quantity:
                text = format_g(v.q.value) + " " + unit_name(k.dimension);
                break;
            case ValueKind::real:
                text = format_g(v.q.value);
                break;
            case ValueKind::integer:
                text = std::to_string(v.i);
                break;
            case ValueKind::boolean:
                text = v.b ? "true" : "false";
                break;
            case ValueKind::choice:
                text = v.text;
                break;
        }
        out.emplace_back(k.key, text);
    }
    return out;
}

}  // namespace acgem::cli
