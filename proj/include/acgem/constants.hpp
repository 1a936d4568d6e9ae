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

#ifndef ACGEM_CONSTANTS_HPP
#define ACGEM_CONSTANTS_HPP

#include <numbers>

namespace acgem::phys {

// CODATA 2018, SI.
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr double c = 299792458.0;
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double h = two_pi * hbar;
inline constexpr double eps0 = 8.8541878128e-12;
inline constexpr double k_B = 1.380649e-23;
inline constexpr double amu = 1.66053906660e-27;

}  // namespace acgem::phys

#endif
