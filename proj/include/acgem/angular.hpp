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

#ifndef ACGEM_ANGULAR_HPP
#define ACGEM_ANGULAR_HPP

#include <compare>

namespace acgem::atomic {

/// Angular-momentum quantum number stored as twice its value, so 3/2 is
/// represented exactly as 3.
class HalfInt {
   public:
    constexpr HalfInt() = default;
    constexpr HalfInt(int whole) : twice_(2 * whole) {}
    static constexpr HalfInt from_twice(int twice) { return HalfInt(Twice{}, twice); }

    /// Throws Error(invalid_argument) unless `value` is a multiple of 1/2.
    static HalfInt from_double(double value);

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr auto operator<=>(const HalfInt &) const = default;

   private:
    struct Twice {};
    constexpr HalfInt(Twice, int twice) : twice_(twice) {}
    int twice_ = 0;
};

inline constexpr HalfInt half(int twice) { return HalfInt::from_twice(twice); }

/// Wigner 3j symbol from the Racah closed form, factorials in log space.
/// Returns 0 when the triangle rule or m1+m2+m3 = 0 fails or |m| > j.
/// Throws Error(invalid_argument) for negative j or when j and m of one
/// column differ by a non-integer.
double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3);

/// Wigner 6j symbol {j1 j2 j3; j4 j5 j6} via the Racah sum. Zero unless the
/// four triads (j1 j2 j3), (j1 j5 j6), (j4 j2 j6), (j4 j5 j3) are triangles.
double wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6);

/// Convenience overloads taking plain numbers; each argument must be a
/// multiple of 1/2.
double wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3);
double wigner_6j(double j1, double j2, double j3, double j4, double j5, double j6);

/// True if (a, b, c) satisfy |a-b| <= c <= a+b with integer perimeter.
bool triangle(HalfInt a, HalfInt b, HalfInt c);

}  // namespace acgem::atomic

#endif
