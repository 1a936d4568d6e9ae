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

#include "units.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace acgem::cli {

Dimension Dimension::operator*(const Dimension &o) const {
    Dimension d;
    for (std::size_t i = 0; i < e.size(); ++i) d.e[i] = e[i] + o.e[i];
    return d;
}

Dimension Dimension::operator/(const Dimension &o) const {
    Dimension d;
    for (std::size_t i = 0; i < e.size(); ++i) d.e[i] = e[i] - o.e[i];
    return d;
}

Dimension Dimension::pow(int n) const {
    Dimension d;
    for (std::size_t i = 0; i < e.size(); ++i) d.e[i] = e[i] * n;
    return d;
}

std::string Dimension::str() const {
    static const char *names[] = {"m", "kg", "s", "A", "K"};
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += " ";
        out += names[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out.empty() ? "1" : out;
}

namespace {

struct Base {
    std::string_view symbol;
    double scale;
    Dimension dimension;
};

const std::vector<Base> &bases() {
    static const std::vector<Base> b = {
        {"m", 1.0, dim::length},
        {"g", 1e-3, dim::mass},
        {"s", 1.0, dim::time},
        {"Hz", 1.0, dim::frequency},
        {"W", 1.0, dim::power},
        {"J", 1.0, dim::energy},
        {"K", 1.0, dim::temperature},
        {"A", 1.0, Dimension{{0, 0, 0, 1, 0}}},
        {"C", 1.0, Dimension{{0, 0, 1, 1, 0}}},
        {"rad", 1.0 / (2.0 * std::numbers::pi), dim::none},
    };
    return b;
}

const std::vector<std::pair<std::string_view, double>> &prefixes() {
    static const std::vector<std::pair<std::string_view, double>> p = {
        {"T", 1e12}, {"G", 1e9}, {"M", 1e6},  {"k", 1e3},   {"c", 1e-2},  {"m", 1e-3},
        {"u", 1e-6}, {"\xC2\xB5", 1e-6}, {"\xCE\xBC", 1e-6}, {"n", 1e-9}, {"p", 1e-12}, {"f", 1e-15},
    };
    return p;
}

Quantity symbol(std::string_view s) {
    for (const auto &b : bases()) {
        if (s == b.symbol) return {b.scale, b.dimension};
    }
    for (const auto &[pre, factor] : prefixes()) {
        if (s.size() > pre.size() && s.substr(0, pre.size()) == pre) {
            const auto rest = s.substr(pre.size());
            for (const auto &b : bases()) {
                if (rest == b.symbol && b.symbol != "rad") return {factor * b.scale, b.dimension};
            }
        }
    }
    throw UnitError("unknown unit '" + std::string(s) + "'");
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// term := symbol ['^' int] | '1'
Quantity term(std::string_view t) {
    t = trim(t);
    if (t.empty()) throw UnitError("empty unit term");
    if (t == "1") return {1.0, dim::none};
    int power = 1;
    const auto caret = t.find('^');
    std::string_view sym = t;
    if (caret != std::string_view::npos) {
        sym = trim(t.substr(0, caret));
        auto exp = trim(t.substr(caret + 1));
        if (!exp.empty() && exp.front() == '+') exp.remove_prefix(1);
        auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), power);
        if (ec != std::errc() || ptr != exp.data() + exp.size() || power == 0) {
            throw UnitError("bad exponent in unit term '" + std::string(t) + "'");
        }
    }
    const Quantity q = symbol(sym);
    return {std::pow(q.value, power), q.dimension.pow(power)};
}

}  // namespace

Quantity parse_unit(std::string_view unit) {
    unit = trim(unit);
    Quantity acc{1.0, dim::none};
    if (unit.empty()) return acc;
    std::size_t pos = 0;
    char op = '*';
    if (unit.front() == '/') {
        op = '/';
        pos = 1;
    }
    while (pos <= unit.size()) {
        const auto next = unit.find_first_of("*/", pos);
        const auto piece = unit.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
        const Quantity q = term(piece);
        if (op == '*') {
            acc = {acc.value * q.value, acc.dimension * q.dimension};
        } else {
            acc = {acc.value / q.value, acc.dimension / q.dimension};
        }
        if (next == std::string_view::npos) break;
        op = unit[next];
        pos = next + 1;
    }
    return acc;
}

Quantity parse_quantity(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw UnitError("empty quantity");
    double value = 0.0;
    const char *begin = text.data();
    if (*begin == '+') ++begin;
    auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == begin) throw UnitError("no number in '" + std::string(text) + "'");
    if (!std::isfinite(value)) throw UnitError("non-finite number in '" + std::string(text) + "'");
    const auto unit = parse_unit(std::string_view(ptr, text.data() + text.size() - ptr));
    return {value * unit.value, unit.dimension};
}

}  // namespace acgem::cli
