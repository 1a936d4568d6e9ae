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

#include "acgem/angular.hpp"

#include <array>
#include <cmath>
#include <string>

#include "acgem/error.hpp"

namespace acgem::atomic {

namespace {

constexpr int kMaxFactorial = 256;

const std::array<double, kMaxFactorial + 1> &log_factorial_table() {
    static const auto table = [] {
        std::array<double, kMaxFactorial + 1> t{};
        t[0] = 0.0;
        for (int n = 1; n <= kMaxFactorial; ++n) t[n] = t[n - 1] + std::log(static_cast<double>(n));
        return t;
    }();
    return table;
}

double log_fact(int n) {
    if (n < 0 || n > kMaxFactorial) throw Error(ErrorCode::out_of_range, "factorial argument out of table range");
    return log_factorial_table()[n];
}

// Arguments below are all in units of 1/2; `h(x)` converts a twice-value
// that is known to be even into the integer it represents.
int h(int twice) { return twice / 2; }

void check_j(HalfInt j) {
    if (j.twice() < 0) throw Error(ErrorCode::invalid_argument, "negative angular momentum");
}

double log_delta(HalfInt a, HalfInt b, HalfInt c) {
    return log_fact(h(a.twice() + b.twice() - c.twice())) + log_fact(h(a.twice() - b.twice() + c.twice())) +
           log_fact(h(-a.twice() + b.twice() + c.twice())) - log_fact(h(a.twice() + b.twice() + c.twice()) + 1);
}

bool m_ok(HalfInt j, HalfInt m) {
    return std::abs(m.twice()) <= j.twice() && ((j.twice() - m.twice()) % 2 == 0);
}

}  // namespace

HalfInt HalfInt::from_double(double value) {
    double twice = 2.0 * value;
    double rounded = std::round(twice);
    if (!std::isfinite(value) || std::abs(twice - rounded) > 1e-9) {
        throw Error(ErrorCode::invalid_argument, "not a half-integer: " + std::to_string(value));
    }
    return from_twice(static_cast<int>(rounded));
}

bool triangle(HalfInt a, HalfInt b, HalfInt c) {
    int A = a.twice(), B = b.twice(), C = c.twice();
    if ((A + B + C) % 2 != 0) return false;
    return C >= std::abs(A - B) && C <= A + B;
}

double wigner_3j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt m1, HalfInt m2, HalfInt m3) {
    check_j(j1);
    check_j(j2);
    check_j(j3);
    auto column_ok = [](HalfInt j, HalfInt m) { return (j.twice() - m.twice()) % 2 == 0; };
    if (!column_ok(j1, m1) || !column_ok(j2, m2) || !column_ok(j3, m3)) {
        throw Error(ErrorCode::invalid_argument, "3j column with j - m not an integer");
    }
    if (m1.twice() + m2.twice() + m3.twice() != 0) return 0.0;
    if (!triangle(j1, j2, j3)) return 0.0;
    if (!m_ok(j1, m1) || !m_ok(j2, m2) || !m_ok(j3, m3)) return 0.0;

    const int J1 = j1.twice(), J2 = j2.twice(), J3 = j3.twice();
    const int M1 = m1.twice(), M2 = m2.twice(), M3 = m3.twice();

    double log_pref = 0.5 * (log_delta(j1, j2, j3) + log_fact(h(J1 + M1)) + log_fact(h(J1 - M1)) +
                             log_fact(h(J2 + M2)) + log_fact(h(J2 - M2)) + log_fact(h(J3 + M3)) +
                             log_fact(h(J3 - M3)));

    // Summation bounds: every factorial argument non-negative.
    int k_min = std::max({0, h(J2 - J3 - M1), h(J1 - J3 + M2)});
    int k_max = std::min({h(J1 + J2 - J3), h(J1 - M1), h(J2 + M2)});
    double sum = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        double log_den = log_fact(k) + log_fact(h(J3 - J2 + M1) + k) + log_fact(h(J3 - J1 - M2) + k) +
                         log_fact(h(J1 + J2 - J3) - k) + log_fact(h(J1 - M1) - k) + log_fact(h(J2 + M2) - k);
        double term = std::exp(log_pref - log_den);
        sum += (k % 2 == 0) ? term : -term;
    }
    int phase = h(J1 - J2 - M3);
    return (phase % 2 == 0) ? sum : -sum;
}

double wigner_6j(HalfInt j1, HalfInt j2, HalfInt j3, HalfInt j4, HalfInt j5, HalfInt j6) {
    for (HalfInt j : {j1, j2, j3, j4, j5, j6}) check_j(j);
    if (!triangle(j1, j2, j3) || !triangle(j1, j5, j6) || !triangle(j4, j2, j6) || !triangle(j4, j5, j3)) {
        return 0.0;
    }
    const int a1 = h(j1.twice() + j2.twice() + j3.twice());
    const int a2 = h(j1.twice() + j5.twice() + j6.twice());
    const int a3 = h(j4.twice() + j2.twice() + j6.twice());
    const int a4 = h(j4.twice() + j5.twice() + j3.twice());
    const int b1 = h(j1.twice() + j2.twice() + j4.twice() + j5.twice());
    const int b2 = h(j2.twice() + j3.twice() + j5.twice() + j6.twice());
    const int b3 = h(j3.twice() + j1.twice() + j6.twice() + j4.twice());

    double log_pref =
        0.5 * (log_delta(j1, j2, j3) + log_delta(j1, j5, j6) + log_delta(j4, j2, j6) + log_delta(j4, j5, j3));

    int t_min = std::max({a1, a2, a3, a4});
    int t_max = std::min({b1, b2, b3});
    double sum = 0.0;
    for (int t = t_min; t <= t_max; ++t) {
        double log_term = log_fact(t + 1) - log_fact(t - a1) - log_fact(t - a2) - log_fact(t - a3) -
                          log_fact(t - a4) - log_fact(b1 - t) - log_fact(b2 - t) - log_fact(b3 - t);
        double term = std::exp(log_pref + log_term);
        sum += (t % 2 == 0) ? term : -term;
    }
    return sum;
}

double wigner_3j(double j1, double j2, double j3, double m1, double m2, double m3) {
    return wigner_3j(HalfInt::from_double(j1), HalfInt::from_double(j2), HalfInt::from_double(j3),
                     HalfInt::from_double(m1), HalfInt::from_double(m2), HalfInt::from_double(m3));
}

double wigner_6j(double j1, double j2, double j3, double j4, double j5, double j6) {
    return wigner_6j(HalfInt::from_double(j1), HalfInt::from_double(j2), HalfInt::from_double(j3),
                     HalfInt::from_double(j4), HalfInt::from_double(j5), HalfInt::from_double(j6));
}

}  // namespace acgem::atomic
