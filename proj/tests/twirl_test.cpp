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

#include <gtest/gtest.h>

#include "eghz/eghz.hpp"
#include "test_util.h"

using namespace eghz;

namespace {
void expect_params_near(const ExtSymParams &a, const ExtSymParams &b, double tol) {
    EXPECT_NEAR(a.x, b.x, tol);
    EXPECT_NEAR(a.y1, b.y1, tol);
    EXPECT_NEAR(a.y2, b.y2, tol);
    EXPECT_NEAR(a.y3, b.y3, tol);
}

GroupElement random_element(Rng &rng) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::bernoulli_distribution coin;
    return {angle(rng), angle(rng), coin(rng)};
}
}  // namespace

TEST(GroupElement, IdentityFlipAndPhase) {
    EXPECT_LT(group_element_matrix({}).max_abs_difference(ComplexMatrix::identity(8)), 1e-15);
    auto flip = group_element_matrix({0, 0, true});
    for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(flip(7 - i, i), Complex(1.0));
    auto rot = group_element_matrix({std::numbers::pi / 2, 0, false});
    EXPECT_NEAR(std::abs(rot(1, 1) - Complex(-1.0)), 0.0, 1e-15);
}

TEST(GroupElement, UnitaryAndMatchesFastConjugation) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        auto g = random_element(rng);
        auto u = group_element_matrix(g);
        EXPECT_LT((u * u.adjoint()).max_abs_difference(ComplexMatrix::identity(8)), 1e-14);
        auto rho = random_density_matrix(rng);
        EXPECT_LT(apply_group_element(g, rho).max_abs_difference(u * rho * u.adjoint()), 1e-14);
    }
}

TEST(GroupElement, ExtendedStatesAreInvariant) {
    Rng rng(5);
    for (int i = 0; i < 500; ++i) {
        auto p = testutil::random_valid_params(rng);
        auto rho = make_extended(p);
        EXPECT_LT(apply_group_element(random_element(rng), rho).max_abs_difference(rho), 1e-15);
    }
}

TEST(TwirlPure, Examples) {
    expect_params_near(twirl_pure_extended(ghz_state()), {0.5, 0.25, 0.25, 0.25}, 1e-15);
    expect_params_near(twirl_pure_extended(w_state()), {0, -1.0 / 12, -1.0 / 12, -1.0 / 12}, 1e-15);
    expect_params_near(twirl_pure_extended(PureState3::basis(0)), {0, 0.25, 0.25, 0.25}, 1e-15);
    expect_params_near(twirl_pure_extended(PureState3::basis(0b010)), {0, -0.25, 0.25, -0.25}, 1e-15);

    auto g = twirl_pure_ghz(ghz_state());
    EXPECT_NEAR(g.x, 0.5, 1e-15);
    EXPECT_NEAR(g.y, kSqrt3 / 4, 1e-15);
    auto w = twirl_pure_ghz(w_state());
    EXPECT_NEAR(w.x, 0.0, 1e-15);
    EXPECT_NEAR(w.y, -1 / (4 * kSqrt3), 1e-15);
}

TEST(TwirlPure, RejectsUnnormalized) {
    PureState3 s;
    s.amplitudes[0] = 0.5;
    EXPECT_THROW(twirl_pure_extended(s), ValidationError);
    EXPECT_THROW(twirl_pure_ghz(s), ValidationError);
}

TEST(TwirlPure, OutputsArePhysicalAndInvariant) {
    Rng rng(8);
    for (int i = 0; i < 1000; ++i) {
        auto psi = random_pure_state(rng);
        auto p = twirl_pure_extended(psi);
        EXPECT_TRUE(validate_extended(p));
        // the twirl of g|psi> equals the twirl of |psi>
        auto g = random_element(rng);
        auto u = group_element_matrix(g);
        PureState3 moved;
        for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c) moved.amplitudes[r] += u(r, c) * psi[c];
        expect_params_near(twirl_pure_extended(moved), p, 1e-12);
    }
}

TEST(TwirlPure, ProjectionCommutesWithTwirl) {
    Rng rng(13);
    for (int i = 0; i < 1000; ++i) {
        auto psi = random_pure_state(rng);
        auto a = project_to_ghz(twirl_pure_extended(psi));
        auto b = twirl_pure_ghz(psi);
        EXPECT_NEAR(a.x, b.x, 1e-12);
        EXPECT_NEAR(a.y, b.y, 1e-12);
    }
}

TEST(TwirlDensity, Examples) {
    expect_params_near(twirl_density_extended(ComplexMatrix::identity(8) * 0.125), {0, 0, 0, 0}, 1e-15);
    expect_params_near(twirl_density_extended(ghz_state().projector()), {0.5, 0.25, 0.25, 0.25}, 1e-15);
}

TEST(TwirlDensity, IdempotentOnFamily) {
    Rng rng(6);
    for (int i = 0; i < 500; ++i) {
        auto p = testutil::random_valid_params(rng);
        expect_params_near(twirl_density_extended(make_extended(p)), p, 1e-15);
    }
}

TEST(TwirlDensity, AgreesWithPureTwirlOnProjectors) {
    Rng rng(10);
    for (int i = 0; i < 500; ++i) {
        auto psi = random_pure_state(rng);
        expect_params_near(twirl_density_extended(psi.projector()), twirl_pure_extended(psi), 1e-12);
    }
}

TEST(TwirlDensity, RejectsNonStates) {
    auto nonherm = ComplexMatrix::identity(8) * 0.125;
    nonherm(0, 3) = 0.01;
    EXPECT_THROW(twirl_density_extended(nonherm), ValidationError);
    EXPECT_THROW(twirl_density_extended(ComplexMatrix::identity(8)), ValidationError);
    EXPECT_THROW(twirl_density_extended(make_extended({0.2, 0, 0, 0}, Check::unchecked)), ValidationError);
    EXPECT_THROW(twirl_density_extended(ComplexMatrix::identity(4) * 0.25), DimensionError);
}

TEST(TwirlDensity, MatchesNumericGroupAverage) {
    Rng rng(99);
    for (int i = 0; i < 10; ++i) {
        auto rho = random_density_matrix(rng);
        auto avg = group_average(rho, 10000, rng);
        EXPECT_LT(hs_distance(avg, make_extended(twirl_density_extended(rho))), 0.02);
    }
}

TEST(GroupAverage, RejectsBadArguments) {
    Rng rng(1);
    EXPECT_THROW(group_average(ComplexMatrix::identity(4), 10, rng), DimensionError);
    EXPECT_THROW(group_average(ComplexMatrix::identity(8), 0, rng), ValidationError);
}

TEST(ProjectToGhz, Examples) {
    auto q = project_to_ghz({0.5, 0.25, 0.25, 0.25});
    EXPECT_DOUBLE_EQ(q.x, 0.5);
    EXPECT_NEAR(q.y, kSqrt3 / 4, 1e-15);
    auto r = project_to_ghz({0.0, -0.25, -0.25, 0.25});
    EXPECT_NEAR(r.y, -0.25 / kSqrt3, 1e-15);
    EXPECT_TRUE(validate_ghz_symmetric(r));
    EXPECT_THROW(project_to_ghz({0.2, 0, 0, 0}), PhysicalityError);
}

TEST(ProductImage, Examples) {
    expect_params_near(product_image({1, 1, 1}), {0, 0.25, 0.25, 0.25}, 1e-15);
    const double h = std::sqrt(0.5);
    expect_params_near(product_image({h, h, h}), {0.125, 0, 0, 0}, 1e-15);
    expect_params_near(product_image({1, 0, 1}), {0, -0.25, 0.25, -0.25}, 1e-15);
    EXPECT_THROW(product_image({1.5, 0, 0}), ValidationError);
    EXPECT_THROW(product_image({-0.1, 0, 0}), ValidationError);
}

TEST(ProductImage, MatchesTwirlOfExplicitProductState) {
    Rng rng(12);
    std::uniform_real_distribution<double> unit(0.0, 1.0), angle(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < 1000; ++i) {
        const double a[3] = {unit(rng), unit(rng), unit(rng)};
        Complex col[3][2];
        for (int j = 0; j < 3; ++j) {
            col[j][0] = std::polar(a[j], angle(rng));
            col[j][1] = std::polar(std::sqrt(1 - a[j] * a[j]), angle(rng));
        }
        PureState3 psi;
        for (std::size_t k = 0; k < 8; ++k) psi.amplitudes[k] = col[0][k >> 2] * col[1][(k >> 1) & 1] * col[2][k & 1];
        auto twirled = twirl_pure_extended(psi);
        auto image = product_image({a[0], a[1], a[2]});
        // phases only rotate the GHZ coherence, so |x| is at most the image's x
        EXPECT_LE(std::abs(twirled.x), image.x + 1e-12);
        EXPECT_NEAR(twirled.y1, image.y1, 1e-12);
        EXPECT_NEAR(twirled.y2, image.y2, 1e-12);
        EXPECT_NEAR(twirled.y3, image.y3, 1e-12);
        EXPECT_TRUE(validate_extended(image));
        EXPECT_TRUE(ppt_report(image).ppt());
    }
}

TEST(ProductImage, RealProductStateReproducesImageExactly) {
    Rng rng(14);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double a[3] = {unit(rng), unit(rng), unit(rng)};
        PureState3 psi;
        for (std::size_t k = 0; k < 8; ++k) {
            double amp = 1.0;
            for (int j = 0; j < 3; ++j) {
                const bool one = (k >> (2 - j)) & 1;
                amp *= one ? std::sqrt(1 - a[j] * a[j]) : a[j];
            }
            psi.amplitudes[k] = amp;
        }
        expect_params_near(twirl_pure_extended(psi), product_image({a[0], a[1], a[2]}), 1e-12);
    }
}
