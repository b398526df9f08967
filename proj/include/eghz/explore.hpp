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

#pragma once

// Monte-Carlo exploration of the extended GHZ-symmetric polytope: sampling,
// verdict frequencies, the y1+y2+y3 conjecture scan and figure tables.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "eghz/classify.hpp"
#include "eghz/hull_oracle.hpp"
#include "eghz/io.hpp"
#include "eghz/random.hpp"
#include "eghz/separability.hpp"
#include "eghz/states.hpp"

namespace eghz {

/// Bounding box of the polytope: |x| <= 1/2, |y_i| <= 1/4. The polytope has
/// volume 1/96, so rejection from this box (volume 1/8) accepts 1/12.
inline constexpr double kBoxHalfX = 0.5;
inline constexpr double kBoxHalfY = 0.25;

struct PolytopeSample {
    std::vector<ExtSymParams> points;
    std::size_t n_draws = 0;
};

namespace detail {
inline ExtSymParams draw_valid_point(Rng &rng, std::size_t &draws) {
    std::uniform_real_distribution<double> ux(-kBoxHalfX, kBoxHalfX);
    std::uniform_real_distribution<double> uy(-kBoxHalfY, kBoxHalfY);
    while (true) {
        ++draws;
        ExtSymParams p;
        p.x = ux(rng);
        p.y1 = uy(rng);
        p.y2 = uy(rng);
        p.y3 = uy(rng);
        if (validate_extended(p)) return p;
    }
}
}  // namespace detail

/// Rejection sampling of `n` physical points; deterministic for a seed.
inline PolytopeSample draw_polytope(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ValidationError("sample_polytope: n must be at least 1");
    Rng rng(seed);
    PolytopeSample out;
    out.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.points.push_back(detail::draw_valid_point(rng, out.n_draws));
    return out;
}

inline std::vector<ExtSymParams> sample_polytope(std::size_t n, std::uint64_t seed) {
    return draw_polytope(n, seed).points;
}

inline std::string verdict_key(const ClassVerdict &v) {
    return std::string(to_string(v.lower)) + ".." + std::string(to_string(v.upper));
}

struct SampleReport {
    std::size_t n_total = 0;  // box draws
    std::size_t n_valid = 0;  // accepted points
    std::uint64_t seed = 0;
    std::map<std::string, std::size_t> counts;  // keyed "lower..upper"
    std::map<std::string, double> fractions;
    /// Samples whose witness-only class disagrees with the region read off
    /// the rough-classification polygon.
    std::size_t polygon_misfilings = 0;
};

namespace detail {
struct RegionLine {
    double y0, x0, y1, x1;
    /// Strictly above the line through (y0, x0) and (y1, x1), with y0 < y1.
    bool above(double Y, double x) const { return (y1 - y0) * (x - x0) - (x1 - x0) * (Y - y0) > 0; }
};

/// Line through the two polygon vertices whose label mentions `name`.
inline RegionLine polygon_line(const std::vector<LabeledVertex> &vertices, const std::string &name) {
    std::vector<const LabeledVertex *> on;
    for (const auto &v : vertices) {
        std::string label = "&" + v.label + "&";
        if (label.find("&" + name + "&") != std::string::npos) on.push_back(&v);
    }
    if (on.size() < 2) throw ConvergenceError("polygon has fewer than two vertices on line " + name);
    return {on.front()->y_sum, on.front()->x, on.back()->y_sum, on.back()->x};
}

inline Class polygon_class(const std::vector<LabeledVertex> &vertices, double Y, double x) {
    static const char *names[] = {"ghz", "w", "bisep"};
    static const Class classes[] = {Class::GHZ, Class::W, Class::Biseparable};
    for (int k = 0; k < 3; ++k) {
        if (polygon_line(vertices, names[k]).above(Y, x)) return classes[k];
    }
    return Class::Separable;
}
}  // namespace detail

/// Classify `n` sampled points and tabulate verdict intervals. Points are
/// split into contiguous ranges across `workers` threads (0 = hardware
/// concurrency); the report does not depend on the worker count.
inline SampleReport estimate_volumes(std::size_t n, std::uint64_t seed, unsigned workers = 0,
                                     const ClassifyOptions &options = {}) {
    const auto sample = draw_polytope(n, seed);
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

    const auto polygon = fig4_polygon(options.v0);
    std::vector<ClassVerdict> verdicts(n);
    std::vector<std::size_t> misfiled(workers, 0);
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                const std::size_t begin = n * w / workers, end = n * (w + 1) / workers;
                for (std::size_t i = begin; i < end; ++i) {
                    const auto &p = sample.points[i];
                    verdicts[i] = classify_extended(p, options);
                    const auto &ev = verdicts[i];
                    const Class by_witness = detail::witness_lower(ev.find("witness_bisep_vs_sep")->value,
                                                                   ev.find("witness_w_vs_bisep")->value,
                                                                   ev.find("witness_ghz_vs_w")->value);
                    if (by_witness != detail::polygon_class(polygon, p.y_sum(), std::abs(p.x))) ++misfiled[w];
                }
            });
        }
    }

    SampleReport report;
    report.n_total = sample.n_draws;
    report.n_valid = n;
    report.seed = seed;
    for (const auto &v : verdicts) ++report.counts[verdict_key(v)];
    for (const auto &[key, count] : report.counts) {
        report.fractions[key] = static_cast<double>(count) / static_cast<double>(n);
    }
    for (auto m : misfiled) report.polygon_misfilings += m;
    return report;
}

struct PairComparison {
    ExtSymParams first;
    ExtSymParams second;
    double witness_discrepancy = 0.0;  // max over the three witnesses
    double ppt_delta = 0.0;            // PPT x_max(second) - x_max(first)
    bool verdicts_match = true;
};

/// Compare two states with the same x and y1+y2+y3. Witness values are taken
/// from the operators, not the closed forms.
inline PairComparison compare_pair(const ExtSymParams &a, const ExtSymParams &b, const ClassifyOptions &options = {}) {
    PairComparison c{a, b};
    const auto ra = make_extended(a);
    const auto rb = make_extended(b);
    for (const auto &w : {Witness::bisep(), Witness::w(), Witness::ghz(options.v0)}) {
        const auto m = witness_matrix(w);
        c.witness_discrepancy = std::max(c.witness_discrepancy, std::abs(trace_of_product(m, ra) - trace_of_product(m, rb)));
    }
    c.ppt_delta = ppt_report(b).x_max - ppt_report(a).x_max;
    const auto va = classify_extended(a, options);
    const auto vb = classify_extended(b, options);
    c.verdicts_match = va.lower == vb.lower && va.upper == vb.upper;
    return c;
}

struct ConjectureReport {
    std::size_t n_pairs = 0;
    std::size_t n_skipped = 0;  // degenerate cross-sections
    std::uint64_t seed = 0;
    double witness_max_discrepancy = 0.0;
    std::vector<PairComparison> ppt_bound_discrepancies;  // |ppt_delta| > 1e-12
    std::vector<PairComparison> verdict_mismatches;
};

/// Resplit Y = y1+y2+y3 of a physical point into another physical triple with
/// the same x, by rejection over (y1, y2). Empty when 1000 draws all fail.
inline std::optional<ExtSymParams> resplit(const ExtSymParams &p, Rng &rng) {
    std::uniform_real_distribution<double> uy(-kBoxHalfY, kBoxHalfY);
    const double Y = p.y_sum();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        ExtSymParams q{p.x, uy(rng), uy(rng), 0.0};
        q.y3 = Y - q.y1 - q.y2;
        if (validate_extended(q)) return q;
    }
    return std::nullopt;
}

inline ConjectureReport conjecture_scan(std::size_t n_pairs, std::uint64_t seed, const ClassifyOptions &options = {}) {
    if (n_pairs == 0) throw ValidationError("conjecture_scan: need at least one pair");
    Rng rng(seed);
    ConjectureReport report;
    report.seed = seed;
    std::size_t draws = 0;
    while (report.n_pairs < n_pairs) {
        const auto p = detail::draw_valid_point(rng, draws);
        const auto q = resplit(p, rng);
        if (!q) {
            ++report.n_skipped;
            continue;
        }
        const auto c = compare_pair(p, *q, options);
        ++report.n_pairs;
        report.witness_max_discrepancy = std::max(report.witness_max_discrepancy, c.witness_discrepancy);
        if (std::abs(c.ppt_delta) > 1e-12) report.ppt_bound_discrepancies.push_back(c);
        if (!c.verdicts_match) report.verdict_mismatches.push_back(c);
    }
    return report;
}

inline json to_json(const SampleReport &r) {
    json fractions = json::object();
    json counts = json::object();
    for (const auto &[k, v] : r.fractions) fractions[k] = round12(v);
    for (const auto &[k, v] : r.counts) counts[k] = v;
    return {{"seed", r.seed},         {"n_total", r.n_total},   {"n_valid", r.n_valid},
            {"counts", counts},       {"fractions", fractions}, {"polygon_misfilings", r.polygon_misfilings}};
}

inline json to_json(const PairComparison &c) {
    return {{"first", to_json(c.first)["params"]},
            {"second", to_json(c.second)["params"]},
            {"witness_discrepancy", round12(c.witness_discrepancy)},
            {"ppt_delta", round12(c.ppt_delta)},
            {"verdicts_match", c.verdicts_match}};
}

inline json to_json(const ConjectureReport &r) {
    json ppt = json::array();
    json mismatches = json::array();
    for (const auto &c : r.ppt_bound_discrepancies) ppt.push_back(to_json(c));
    for (const auto &c : r.verdict_mismatches) mismatches.push_back(to_json(c));
    return {{"seed", r.seed},
            {"n_pairs", r.n_pairs},
            {"n_skipped", r.n_skipped},
            {"witness_max_discrepancy", round12(r.witness_max_discrepancy)},
            {"ppt_bound_discrepancies", ppt},
            {"verdict_mismatches", mismatches}};
}

enum class FigureId { fig3a, fig3b, fig3c, fig4 };

inline std::optional<FigureId> figure_from_string(std::string_view s) {
    if (s == "fig3a") return FigureId::fig3a;
    if (s == "fig3b") return FigureId::fig3b;
    if (s == "fig3c") return FigureId::fig3c;
    if (s == "fig4") return FigureId::fig4;
    return std::nullopt;
}

struct FigureOptions {
    std::uint64_t seed = 42;
    std::size_t n_images = 2000;  // LP columns per row of the fig3 overlay
    double v0 = kDefaultV0;
};

/// Figure data. fig3a/b/c: CSV of the slice table plus an x_lp column from
/// the LP hull oracle, preceded by a "# seed=" line. fig4: JSON with the
/// polygon vertices and the three witness zero lines sampled across the
/// physical triangle.
inline std::string emit_figure(FigureId id, int resolution, const FigureOptions &options = {}) {
    if (resolution < 2) throw ValidationError("emit_figure: resolution must be at least 2");
    if (id == FigureId::fig4) {
        json vertices = json::array();
        for (const auto &v : fig4_polygon(options.v0)) {
            vertices.push_back({{"label", v.label}, {"Y", round12(v.y_sum)}, {"x", round12(v.x)}});
        }
        json lines = json::object();
        for (auto [name, w] : {std::pair{"bisep", Witness::bisep()}, std::pair{"w", Witness::w()},
                               std::pair{"ghz", Witness::ghz(options.v0)}}) {
            const auto line = witness_line(w);
            json pts = json::array();
            for (int i = 0; i < resolution; ++i) {
                const double Y = -0.25 + 1.0 * i / (resolution - 1);
                const double x = line.x_at(Y);
                if (x >= 0.0 && x <= 0.125 + Y / 2) pts.push_back({round12(Y), round12(x)});
            }
            lines[name] = pts;
        }
        return json{{"v0", round12(options.v0)}, {"vertices", vertices}, {"lines", lines}}.dump(2) + "\n";
    }
    const Slice slice = id == FigureId::fig3a ? Slice::equal : id == FigureId::fig3b ? Slice::anti : Slice::axis;
    std::string out = "# seed=" + std::to_string(options.seed) + "\n";
    out += "y,x_stationary,x_hull,x_ppt,x_phys,x_lp\n";
    for (const auto &r : slice_boundary(slice, resolution)) {
        const auto t = slice_point(slice, r.y);
        const auto lp = hull_membership_xmax(t[0], t[1], t[2], std::max<std::size_t>(options.n_images, 10), options.seed);
        out += format_number(r.y) + "," + (r.x_stationary ? format_number(*r.x_stationary) : "") + "," +
               format_number(r.x_hull) + "," + format_number(r.x_ppt) + "," + format_number(r.x_phys) + "," +
               (lp ? format_number(*lp) : "") + "\n";
    }
    return out;
}

}  // namespace eghz
