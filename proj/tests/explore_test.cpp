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

using namespace eghz;

TEST(SamplePolytope, PointsAreValidAndDeterministic) {
    auto a = sample_polytope(500, 42);
    auto b = sample_polytope(500, 42);
    auto c = sample_polytope(500, 43);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, c);
    for (const auto &p : a) EXPECT_TRUE(validate_extended(p));
    EXPECT_THROW(sample_polytope(0, 1), ValidationError);
}

TEST(SamplePolytope, AcceptanceRateIsOneTwelfth) {
    // polytope volume 1/96 inside a box of volume 1/8
    const std::size_t n = 10000;
    const double p = 1.0 / 12.0;
    const double sd = std::sqrt(n * (1 - p)) / p;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto s = draw_polytope(n, seed);
        EXPECT_NEAR(static_cast<double>(s.n_draws), n / p, 3 * sd) << "seed " << seed;
    }
}

TEST(EstimateVolumes, ReproducibleAndWorkerIndependent) {
    auto a = estimate_volumes(2000, 7, 1);
    auto b = estimate_volumes(2000, 7, 4);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.n_total, b.n_total);
    EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
    double total = 0.0;
    for (const auto &[k, f] : a.fractions) total += f;
    EXPECT_NEAR(total, 1.0, 1e-12);
    EXPECT_GT(a.fractions["Separable..Separable"], 0.0);
    EXPECT_EQ(a.polygon_misfilings, 0u);
}

TEST(EstimateVolumes, PolygonAgreesWithWitnessesOnLargerSample) {
    auto r = estimate_volumes(20000, 11);
    EXPECT_EQ(r.polygon_misfilings, 0u);
    EXPECT_EQ(r.n_valid, 20000u);
}

TEST(ComparePair, ExplicitExample) {
    auto c = compare_pair({0.05, 0, 0, 0.15}, {0.05, 0.05, 0.05, 0.05});
    EXPECT_LT(c.witness_discrepancy, 1e-12);
    EXPECT_NEAR(c.ppt_delta, 0.05, 1e-15);
    auto same = compare_pair({0.05, 0.05, 0.05, 0.05}, {0.05, 0.05, 0.05, 0.05});
    EXPECT_EQ(same.ppt_delta, 0.0);
    EXPECT_TRUE(same.verdicts_match);
}

TEST(ConjectureScan, WitnessesBlindToResplitPptIsNot) {
    auto r = conjecture_scan(300, 42);
    EXPECT_EQ(r.n_pairs, 300u);
    EXPECT_LT(r.witness_max_discrepancy, 1e-12);
    EXPECT_FALSE(r.ppt_bound_discrepancies.empty());
    for (const auto &c : r.ppt_bound_discrepancies) {
        EXPECT_NEAR(c.first.x, c.second.x, 0.0);
        EXPECT_NEAR(c.first.y_sum(), c.second.y_sum(), 1e-12);
    }
    EXPECT_EQ(to_json(r).dump(), to_json(conjecture_scan(300, 42)).dump());
    EXPECT_THROW(conjecture_scan(0, 1), ValidationError);
}

TEST(Resplit, PreservesXAndSum) {
    Rng rng(4);
    for (const auto &p : sample_polytope(200, 8)) {
        auto q = resplit(p, rng);
        if (!q) continue;
        EXPECT_EQ(q->x, p.x);
        EXPECT_NEAR(q->y_sum(), p.y_sum(), 1e-15);
        EXPECT_TRUE(validate_extended(*q));
    }
}

TEST(HullMembership, Examples) {
    auto center = hull_membership_xmax(0, 0, 0, 10000, 42);
    ASSERT_TRUE(center.has_value());
    EXPECT_GE(*center, 0.12);
    EXPECT_LE(*center, 0.125 + 1e-12);
    auto top = hull_membership_xmax(0.25, 0.25, 0.25, 100, 42);
    ASSERT_TRUE(top.has_value());
    EXPECT_NEAR(*top, 0.0, 1e-12);
    auto eq = hull_membership_xmax(0.125, 0.125, 0.125, 2000, 42);
    ASSERT_TRUE(eq.has_value());
    EXPECT_GE(*eq, 0.0575);
    EXPECT_LE(*eq, 0.0625 + 1e-12);
    EXPECT_THROW(hull_membership_xmax(0.25, 0.25, -0.25, 100, 1), PhysicalityError);
}

TEST(EmitFigure, SliceCsv) {
    FigureOptions opts;
    opts.n_images = 200;
    auto a = emit_figure(FigureId::fig3a, 5, opts);
    EXPECT_EQ(a.rfind("# seed=42\ny,x_stationary,x_hull,x_ppt,x_phys,x_lp\n", 0), 0u) << a;
    EXPECT_NE(a.find("\n0.25,0.0,0.0,0.0,0.5,"), std::string::npos) << a;
    auto c = emit_figure(FigureId::fig3c, 9, opts);
    EXPECT_NE(c.find("\n-0.125,,0.0625,0.0625,0.0625,"), std::string::npos) << c;
    EXPECT_EQ(a, emit_figure(FigureId::fig3a, 5, opts));
    EXPECT_THROW(emit_figure(FigureId::fig3a, 1), ValidationError);
}

TEST(EmitFigure, Fig4Json) {
    auto doc = json::parse(emit_figure(FigureId::fig4, 101));
    bool found = false;
    for (const auto &v : doc["vertices"]) {
        if (v["label"] == "left&w") {
            EXPECT_NEAR(v["Y"].get<double>(), 0.25, 1e-12);
            EXPECT_NEAR(v["x"].get<double>(), 0.25, 1e-12);
            found = true;
        }
    }
    EXPECT_TRUE(found);
    EXPECT_FALSE(doc["lines"]["ghz"].empty());
    EXPECT_EQ(figure_from_string("fig4"), FigureId::fig4);
    EXPECT_FALSE(figure_from_string("fig5").has_value());
}
