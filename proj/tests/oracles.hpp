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

// Reference implementations that share no code with the library.

#ifndef ACGEM_TESTS_ORACLES_HPP
#define ACGEM_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

// Clebsch-Gordan coefficients <j1 m1 j2 m2 | J M> built by applying the
// lowering operator to stretched states and Gram-Schmidt orthogonalizing the
// top state of each lower J. Angular momenta are passed as twice their value.
class ClebschGordan {
   public:
    ClebschGordan(int tj1, int tj2) : tj1_(tj1), tj2_(tj2) {
        for (int tJ = tj1 + tj2; tJ >= std::abs(tj1 - tj2); tJ -= 2) build(tJ);
    }

    double operator()(int tm1, int tm2, int tJ, int tM) const {
        if (tm1 + tm2 != tM) return 0.0;
        auto it = states_.find({tJ, tM});
        if (it == states_.end()) return 0.0;
        auto c = it->second.find(tm1);
        return c == it->second.end() ? 0.0 : c->second;
    }

   private:
    using Vec = std::map<int, double>;  // keyed by 2 m1

    static double ladder(int tj, int tm) {  // sqrt(j(j+1) - m(m-1)) from twice-values
        return 0.5 * std::sqrt(static_cast<double>(tj * (tj + 2) - tm * (tm - 2)));
    }
    static double dot(const Vec &a, const Vec &b) {
        double s = 0.0;
        for (const auto &[k, v] : a) {
            auto it = b.find(k);
            if (it != b.end()) s += v * it->second;
        }
        return s;
    }

    void build(int tJ) {
        // Orthogonal complement of the already-built states with M = J.
        Vec top;
        for (int tm1 = tj1_; tm1 >= -tj1_; tm1 -= 2) {
            const int tm2 = tJ - tm1;
            if (std::abs(tm2) > tj2_) continue;
            Vec trial{{tm1, 1.0}};
            for (int tK = tj1_ + tj2_; tK > tJ; tK -= 2) {
                const Vec &other = states_.at({tK, tJ});
                const double p = dot(trial, other);
                for (const auto &[k, v] : other) trial[k] -= p * v;
            }
            const double n = std::sqrt(dot(trial, trial));
            if (n > 1e-8) {
                for (auto &[k, v] : trial) v /= n;
                top = trial;
                break;
            }
        }
        // Condon-Shortley: coefficient with the largest m1 is positive.
        double lead = 0.0;
        for (auto it = top.rbegin(); it != top.rend(); ++it) {
            if (std::abs(it->second) > 1e-12) {
                lead = it->second;
                break;
            }
        }
        if (lead < 0) {
            for (auto &[k, v] : top) v = -v;
        }
        states_[{tJ, tJ}] = top;
        Vec cur = top;
        for (int tM = tJ; tM > -tJ; tM -= 2) {
            Vec next;
            for (const auto &[tm1, c] : cur) {
                const int tm2 = tM - tm1;
                if (tm1 > -tj1_) next[tm1 - 2] += c * ladder(tj1_, tm1);
                if (tm2 > -tj2_) next[tm1] += c * ladder(tj2_, tm2);
            }
            const double norm = ladder(tJ, tM);
            for (auto &[k, v] : next) v /= norm;
            states_[{tJ, tM - 2}] = next;
            cur = next;
        }
    }

    int tj1_, tj2_;
    std::map<std::pair<int, int>, Vec> states_;
};

// 3j symbol from the Clebsch-Gordan oracle; arguments are twice the values.
inline double three_j(int tj1, int tj2, int tj3, int tm1, int tm2, int tm3) {
    if (tm1 + tm2 + tm3 != 0) return 0.0;
    if (std::abs(tm1) > tj1 || std::abs(tm2) > tj2 || std::abs(tm3) > tj3) return 0.0;
    if (tj3 > tj1 + tj2 || tj3 < std::abs(tj1 - tj2) || (tj1 + tj2 + tj3) % 2) return 0.0;
    static std::map<std::pair<int, int>, ClebschGordan> cache;
    auto it = cache.find({tj1, tj2});
    if (it == cache.end()) it = cache.emplace(std::pair{tj1, tj2}, ClebschGordan(tj1, tj2)).first;
    const int phase2 = tj1 - tj2 - tm3;  // twice (j1 - j2 - m3), always even
    const double sign = (phase2 / 2) % 2 == 0 ? 1.0 : -1.0;
    return sign / std::sqrt(tj3 + 1.0) * it->second(tm1, tm2, tj3, -tm3);
}

// 6j symbol as a contraction of four 3j symbols over all projections.
inline double six_j(int tj1, int tj2, int tj3, int tj4, int tj5, int tj6) {
    double sum = 0.0;
    for (int m1 = -tj1; m1 <= tj1; m1 += 2)
        for (int m2 = -tj2; m2 <= tj2; m2 += 2) {
            const int m3 = -m1 - m2;  // first symbol carries (-m1, -m2, -m3)
            if (std::abs(m3) > tj3) continue;
            for (int m5 = -tj5; m5 <= tj5; m5 += 2) {
                const int m6 = m5 - m1;  // (j1 j5 j6; m1 -m5 m6)
                if (std::abs(m6) > tj6) continue;
                const int m4 = m6 - m2;  // (j4 j2 j6; m4 m2 -m6)
                if (std::abs(m4) > tj4) continue;
                if (-m4 + m5 + m3 != 0) continue;  // (j4 j5 j3; -m4 m5 m3)
                const int s2 = (tj1 - m1) + (tj2 - m2) + (tj3 - m3) + (tj4 - m4) + (tj5 - m5) + (tj6 - m6);
                const double sign = (s2 / 2) % 2 == 0 ? 1.0 : -1.0;
                sum += sign * three_j(tj1, tj2, tj3, -m1, -m2, -m3) * three_j(tj1, tj5, tj6, m1, -m5, m6) *
                       three_j(tj4, tj2, tj6, m4, m2, -m6) * three_j(tj4, tj5, tj3, -m4, m5, m3);
            }
        }
    return sum;
}

// Composite Simpson rule with n (even) intervals.
inline double simpson(const std::function<double(double)> &f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

}  // namespace oracle

#endif
