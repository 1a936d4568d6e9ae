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

#ifndef ACGEM_TOOLS_UNITS_HPP
#define ACGEM_TOOLS_UNITS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

namespace acgem::cli {

/// Exponents of metre, kilogram, second, ampere, kelvin.
struct Dimension {
    std::array<int, 5> e{};

    bool operator==(const Dimension &) const = default;
    Dimension operator*(const Dimension &o) const;
    Dimension operator/(const Dimension &o) const;
    Dimension pow(int n) const;
    std::string str() const;
};

namespace dim {
inline constexpr Dimension none{};
inline constexpr Dimension length{{1, 0, 0, 0, 0}};
inline constexpr Dimension mass{{0, 1, 0, 0, 0}};
inline constexpr Dimension time{{0, 0, 1, 0, 0}};
inline constexpr Dimension frequency{{0, 0, -1, 0, 0}};
inline constexpr Dimension temperature{{0, 0, 0, 0, 1}};
inline constexpr Dimension power{{2, 1, -3, 0, 0}};
inline constexpr Dimension energy{{2, 1, -2, 0, 0}};
inline constexpr Dimension intensity{{0, 1, -3, 0, 0}};
inline constexpr Dimension density{{-3, 0, 0, 0, 0}};
inline constexpr Dimension rate_coefficient{{3, 0, -1, 0, 0}};
}  // namespace dim

struct Quantity {
    double value;  // SI; frequencies in cycles per second
    Dimension dimension;
};

class UnitError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Parses "1.5 W", "-5 THz", "1e11 cm^-3", "5e-11 cm^3/s", "10 um",
/// "2 kW/cm^2", "3". `rad` counts as 1/(2 pi) cycle, so "rad/s" gives Hz.
Quantity parse_quantity(std::string_view text);

/// Parses a unit expression alone; returns the SI scale and dimension.
Quantity parse_unit(std::string_view unit);

}  // namespace acgem::cli

#endif
