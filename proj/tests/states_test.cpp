// Copyright 2026 The eghz Authors
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

#include <algorithm>
#include <gtest/gtest.h>

#include "eghz/eghz.hpp"
#include "test_util.h"

using namespace eghz;

namespace {
bool mentions(const Validity &v, const std::string &needle) {
    return v.summary().find(needle) != std::string::npos;
}

ComplexMatrix kron3(const ComplexMatrix &u) {
    ComplexMatrix out(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            out(i, j) = u(i >> 2, j >> 2) * u((i >> 1) & 1, (j >> 1) & 1) * u(i & 1, j & 1);
    return out;
}
}  // namespace

TEST(MakeExtended, OriginIsMaximallyMixed) {
    auto rho = make_extended({0, 0, 0, 0});
    EXPECT_EQ(rho.max_abs_difference(ComplexMatrix::identity(8) * (1.0 / 8.0)), 0.0);
}

TEST(MakeExtended, CornerIsGhzProjector) {
    auto rho = make_extended({0.5, 0.25, 0.25, 0.25});
    EXPECT_LT(rho.max_abs_difference(ghz_state().projector()), 1e-15);
    auto minus = make_extended({-0.5, 0.25, 0.25, 0.25});
    EXPECT_LT(minus.max_abs_difference(ghz_minus_state().projector()), 1e-15);
}

TEST(MakeExtended, UnitTraceAndHermitian) {
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        auto rho = make_extended(testutil::random_valid_params(rng));
        EXPECT_NEAR(rho.trace().real(), 1.0, 1e-14);
        EXPECT_TRUE(rho.is_hermitian());
    }
}

TEST(MakeExtended, WernerIsMixtureOfGhzAndNoise) {
    for (double p : {0.0, 0.2, 3.0 / 7.0, 0.5, 1.0}) {
        auto expected = ghz_state().projector() * p + ComplexMatrix::identity(8) * ((1 - p) / 8.0);
        EXPECT_LT(make_extended(make_werner(p)).max_abs_difference(expected), 1e-15);
    }
    EXPECT_THROW(make_werner(-0.1), ValidationError);
    EXPECT_THROW(make_werner(1.5), ValidationError);
}

TEST(ValidateExtended, Examples) {
    EXPECT_TRUE(validate_extended({0, 0, 0, 0}));
    EXPECT_TRUE(validate_extended({0.5, 0.25, 0.25, 0.25}));
    EXPECT_TRUE(validate_extended({0, -0.25, -0.25, 0.25}));

    auto v = validate_extended({0.2, 0, 0, 0});
    EXPECT_FALSE(v);
    EXPECT_TRUE(mentions(v, "1/8 + (y1+y2+y3)/2 - x")) << v.summary();
    EXPECT_TRUE(mentions(v, "-0.075")) << v.summary();

    auto hi = validate_extended({0, 0.25, 0.25, -0.25});
    EXPECT_FALSE(hi);
    EXPECT_TRUE(mentions(hi, "|y1+y2| - 1/4 <= y3")) << hi.summary();

    auto up = validate_extended({0, 0.25, -0.25, 0.1});
    EXPECT_FALSE(up);
    EXPECT_TRUE(mentions(up, "y3 <= 1/4 - |y1-y2|")) << up.summary();
}

TEST(ValidateExtended, BoundaryPointsAreValid) {
    EXPECT_TRUE(validate_extended({0.125, 0, 0, 0}));
    EXPECT_TRUE(validate_extended({0, 0.125, 0.125, 0}));
    EXPECT_FALSE(validate_extended({0.125 + 1e-9, 0, 0, 0}));
}

TEST(ValidateExtended, AgreesWithPositivityOnGrid) {
    // 10^4 points straddling the boundary of the polytope.
    int n = 0;
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b)
            for (int c = 0; c < 10; ++c)
                for (int d = 0; d < 10; ++d) {
                    ExtSymParams p{-0.55 + 1.1 * a / 9.0 + 0.0013, -0.3 + 0.6 * b / 9.0 + 0.0007,
                                   -0.3 + 0.6 * c / 9.0 - 0.0011, -0.3 + 0.6 * d / 9.0 + 0.0017};
                    const bool psd = min_eigenvalue(make_extended(p, Check::unchecked)) >= -kPsdTol;
                    EXPECT_EQ(static_cast<bool>(validate_extended(p)), psd)
                        << p.x << " " << p.y1 << " " << p.y2 << " " << p.y3;
                    ++n;
                }
    EXPECT_EQ(n, 10000);
}

TEST(MakeExtended, RejectsUnphysicalUnlessUnchecked) {
    EXPECT_THROW(make_extended({0.2, 0, 0, 0}), PhysicalityError);
    EXPECT_NO_THROW(make_extended({0.2, 0, 0, 0}, Check::unchecked));
}

TEST(GhzSymmetric, EmbedsIntoExtendedFamily) {
    Rng rng(2);
    for (int i = 0; i < 500; ++i) {
        auto p = testutil::random_valid_params(rng);
        const double y = p.y_sum() / 3.0;
        ExtSymParams sym{p.x, y, y, y};
        if (!validate_extended(sym)) continue;
        GhzSymParams q{sym.x, sym.y_sum() / kSqrt3};
        ASSERT_TRUE(validate_ghz_symmetric(q));
        EXPECT_LT(make_ghz_symmetric(q).max_abs_difference(make_extended(sym)), 1e-15);
    }
}

TEST(GhzSymmetric, Examples) {
    EXPECT_TRUE(validate_ghz_symmetric({0, 0}));
    EXPECT_TRUE(validate_ghz_symmetric({0.5, kSqrt3 / 4}));
    EXPECT_TRUE(validate_ghz_symmetric({0, -1 / (4 * kSqrt3)}));
    EXPECT_FALSE(validate_ghz_symmetric({0, kSqrt3 / 4 + 1e-6}));
    EXPECT_FALSE(validate_ghz_symmetric({0.2, 0}));
    EXPECT_LT(make_ghz_symmetric({0.5, kSqrt3 / 4}).max_abs_difference(ghz_state().projector()), 1e-15);
    EXPECT_THROW(make_ghz_symmetric({0.2, 0}), PhysicalityError);
}

TEST(GhzSymmetric, ValidityAgreesWithPositivity) {
    Rng rng(4);
    std::uniform_real_distribution<double> ux(-0.6, 0.6), uy(-0.2, 0.5);
    for (int i = 0; i < 5000; ++i) {
        GhzSymParams q{ux(rng), uy(rng)};
        const bool psd = min_eigenvalue(make_ghz_symmetric(q, Check::unchecked)) >= -kPsdTol;
        EXPECT_EQ(static_cast<bool>(validate_ghz_symmetric(q)), psd) << q.x << " " << q.y;
    }
}

TEST(ReflectX, IsInvolutionAndLocalUnitaryConjugation) {
    ComplexMatrix u(2);
    u(0, 1) = 1.0;
    u(1, 0) = -1.0;
    const auto U = kron3(u);
    const auto Ud = U.adjoint();
    for (const auto &p : sample_polytope(1000, 17)) {
        EXPECT_EQ(reflect_x(reflect_x(p)), p);
        auto lhs = U * make_extended(p) * Ud;
        EXPECT_LT(lhs.max_abs_difference(make_extended(reflect_x(p))), 1e-15);
    }
}

TEST(FourQubit, DiagonalLayoutAndEigenvalues) {
    FourQubitParams f{0.125, 1.0 / 16.0, 1.0 / 24.0, 0.1};
    ASSERT_TRUE(validate_four_qubit(f));
    auto m = make_four_qubit(f);
    EXPECT_NEAR(m.trace().real(), 1.0, 1e-15);
    // weight-0/4, odd, and weight-2 labels
    EXPECT_EQ(m(0, 0).real(), 0.125);
    EXPECT_EQ(m(15, 15).real(), 0.125);
    EXPECT_EQ(m(0b0001, 0b0001).real(), 1.0 / 16.0);
    EXPECT_EQ(m(0b0111, 0b0111).real(), 1.0 / 16.0);
    EXPECT_EQ(m(0b0011, 0b0011).real(), 1.0 / 24.0);
    EXPECT_EQ(m(0, 15).real(), 0.1);
    auto ev = eig_hermitian(m);
    std::vector<double> expected{0.025, 0.225};
    expected.insert(expected.end(), 8, 1.0 / 16.0);
    expected.insert(expected.end(), 6, 1.0 / 24.0);
    std::sort(expected.begin(), expected.end());
    for (std::size_t i = 0; i < 16; ++i) EXPECT_NEAR(ev[i], expected[i], 1e-12);
}

TEST(FourQubit, RejectsBrokenNormalization) {
    auto v = validate_four_qubit({0.125, 1.0 / 16.0, 1.0 / 16.0, 0.0});
    EXPECT_FALSE(v);
    EXPECT_TRUE(mentions(v, "residual 0.0625")) << v.summary();
    EXPECT_THROW(make_four_qubit({0.125, 1.0 / 16.0, 1.0 / 16.0, 0.0}), PhysicalityError);
}

TEST(FourQubit, RejectsCoherenceAboveDiagonal) {
    auto v = validate_four_qubit({0.125, 1.0 / 16.0, 1.0 / 24.0, 0.2});
    EXPECT_FALSE(v);
    EXPECT_TRUE(mentions(v, "|beta| <= alpha1")) << v.summary();
}

TEST(PureState, NamedStatesAreNormalized) {
    for (const auto &s : {ghz_state(), ghz_minus_state(), w_state(), PureState3::basis(5)}) {
        EXPECT_NEAR(s.norm_squared(), 1.0, 1e-15);
        EXPECT_NEAR(s.projector().trace().real(), 1.0, 1e-15);
    }
    PureState3 bad;
    bad.amplitudes[0] = 2.0;
    EXPECT_THROW(bad.require_normalized(), ValidationError);
}
