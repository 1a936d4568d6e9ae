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

#include <acgem/angular.hpp>
#include <acgem/error.hpp>

#include <cmath>

#include "oracles.hpp"

using namespace acgem::atomic;

TEST(Wigner3j, StretchedZeroCouplingClosedForm) {
    EXPECT_NEAR(wigner_3j(1., 1., 0., 0., 0., 0.), -1.0 / std::sqrt(3.0), 1e-14);
}

TEST(Wigner3j, StretchedJTwoMatchesRecursionOracle) {
    const double frozen = 0.447213595499958;
    EXPECT_NEAR(oracle::three_j(2, 2, 4, 2, 2, -4), frozen, 1e-14);
    EXPECT_NEAR(wigner_3j(1., 1., 2., 1., 1., -2.), frozen, 1e-14);
}

TEST(Wigner3j, ProjectionSumMustVanish) { EXPECT_EQ(wigner_3j(1., 1., 1., 1., 1., 1.), 0.0); }

TEST(Wigner3j, TriangleViolationIsZero) { EXPECT_EQ(wigner_3j(1., 1., 3., 0., 0., 0.), 0.0); }

TEST(Wigner3j, OddJSumWithZeroProjectionsIsZero) { EXPECT_EQ(wigner_3j(1., 1., 1., 0., 0., 0.), 0.0); }

TEST(Wigner3j, AgreesWithRecursionOracleUpToThree) {
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = 0; c <= 6; ++c)
                for (int ma = -a; ma <= a; ma += 2)
                    for (int mb = -b; mb <= b; mb += 2) {
                        const int mc = -ma - mb;
                        if (std::abs(mc) > c || (a + b + c) % 2 || (c + mc) % 2) continue;
                        EXPECT_NEAR(wigner_3j(half(a), half(b), half(c), half(ma), half(mb), half(mc)),
                                    oracle::three_j(a, b, c, ma, mb, mc), 1e-12)
                            << a << " " << b << " " << c << " " << ma << " " << mb;
                    }
}

TEST(Wigner3j, RejectsInvalidInputAndZeroesOutOfRangeProjections) {
    EXPECT_THROW(wigner_3j(0.3, 1., 1., 0., 0., 0.), acgem::Error);
    EXPECT_THROW(wigner_3j(-1., 1., 1., 0., 0., 0.), acgem::Error);
    EXPECT_EQ(wigner_3j(1., 1., 1., 2., -1., -1.), 0.0);
    EXPECT_THROW(wigner_3j(1., 1., 1., 0.5, -0.5, 0.), acgem::Error);
}

TEST(Wigner6j, HalfHalfOneMatchesContractionOracle) {
    EXPECT_NEAR(oracle::six_j(1, 1, 2, 1, 1, 2), 1.0 / 6.0, 1e-14);
    EXPECT_NEAR(wigner_6j(.5, .5, 1., .5, .5, 1.), 1.0 / 6.0, 1e-14);
}

TEST(Wigner6j, TriadViolationIsZero) {
    EXPECT_EQ(wigner_6j(1., 1., 3., 1., 1., 1.), 0.0);
    EXPECT_EQ(wigner_6j(1., 1., 1., 3., 0., 1.), 0.0);
}

TEST(Wigner6j, ZeroArgumentClosedForm) {
    for (int tj = 0; tj <= 8; ++tj)
        for (int tk = 0; tk <= 8; ++tk)
            for (int tl = std::abs(tj - tk); tl <= tj + tk; tl += 2) {
                const double expect = ((tj + tk + tl) / 2 % 2 ? -1.0 : 1.0) / std::sqrt((tj + 1.0) * (tk + 1.0));
                EXPECT_NEAR(wigner_6j(half(tj), half(0), half(tj), half(tk), half(tl), half(tk)), expect, 1e-13);
            }
}

TEST(Wigner6j, AgreesWithContractionOracleUpToTwo) {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (int c = 0; c <= 4; ++c)
                for (int d = 0; d <= 4; ++d)
                    for (int e = 0; e <= 4; ++e)
                        for (int f = 0; f <= 4; ++f) {
                            if ((a + b + c) % 2 || (a + e + f) % 2 || (d + b + f) % 2 || (d + e + c) % 2) continue;
                            EXPECT_NEAR(wigner_6j(half(a), half(b), half(c), half(d), half(e), half(f)),
                                        oracle::six_j(a, b, c, d, e, f), 1e-12);
                        }
}

TEST(Wigner6j, RejectsNonHalfIntegral) { EXPECT_THROW(wigner_6j(0.25, 1., 1., 1., 1., 1.), acgem::Error); }

TEST(Wigner, LargeArgumentsStayFinite) {
    const double v = wigner_3j(10., 10., 20., 10., -10., 0.);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_NE(v, 0.0);
    EXPECT_TRUE(std::isfinite(wigner_6j(10., 10., 10., 10., 10., 10.)));
}

TEST(HalfInt, Arithmetic) {
    EXPECT_EQ(half(3).value(), 1.5);
    EXPECT_TRUE(HalfInt(2).is_integer());
    EXPECT_EQ((half(3) + half(1)).twice(), 4);
    EXPECT_EQ((-half(3)).twice(), -3);
    EXPECT_EQ(HalfInt::from_double(-2.5).twice(), -5);
    EXPECT_THROW(HalfInt::from_double(0.7), acgem::Error);
    EXPECT_TRUE(triangle(1, 1, 2));
    EXPECT_FALSE(triangle(1, 1, 3));
    EXPECT_FALSE(triangle(half(1), 1, 1));
}
