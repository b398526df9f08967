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

// Classification in the hierarchy S < B < W < GHZ for extended
// GHZ-symmetric states: witnesses, separability bounds, boundary slices and
// the interval verdict.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eghz/errors.hpp"
#include "eghz/hull_oracle.hpp"
#include "eghz/numerics.hpp"
#include "eghz/separability.hpp"
#include "eghz/states.hpp"
#include "eghz/twirl.hpp"

namespace eghz {

enum class Class { Separable = 0, Biseparable = 1, W = 2, GHZ = 3 };

inline std::string_view to_string(Class c) {
    switch (c) {
        case Class::Separable: return "Separable";
        case Class::Biseparable: return "Biseparable";
        case Class::W: return "W";
        case Class::GHZ: return "GHZ";
    }
    return "?";
}

inline std::optional<Class> class_from_string(std::string_view s) {
    for (Class c : {Class::Separable, Class::Biseparable, Class::W, Class::GHZ}) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

struct Evidence {
    std::string name;
    double value = 0.0;
    double threshold = 0.0;
    bool operator==(const Evidence &) const = default;
};

/// Interval [lower, upper] in the class hierarchy plus the indicators used.
struct ClassVerdict {
    Class lower = Class::Separable;
    Class upper = Class::GHZ;
    std::vector<Evidence> evidence;

    bool operator==(const ClassVerdict &) const = default;

    const Evidence *find(std::string_view name) const {
        for (const auto &e : evidence)
            if (e.name == name) return &e;
        return nullptr;
    }
};

inline constexpr double kDefaultV0 = 0.981;

/// Class-specific witnesses: a negative expectation certifies the named
/// class or higher.
struct Witness {
    enum Kind { bisep_vs_sep, w_vs_bisep, ghz_vs_w };
    Kind kind = bisep_vs_sep;
    double v0 = kDefaultV0;

    static Witness bisep() { return {bisep_vs_sep, kDefaultV0}; }
    static Witness w() { return {w_vs_bisep, kDefaultV0}; }
    static Witness ghz(double v0 = kDefaultV0) { return {ghz_vs_w, v0}; }
};

namespace detail {
/// Coefficients (identity, GHZ+ projector, GHZ- projector) of a witness.
struct WitnessCoefficients {
    double identity;
    double ghz_plus;
    double ghz_minus;
};

inline WitnessCoefficients witness_coefficients(const Witness &w) {
    switch (w.kind) {
        case Witness::bisep_vs_sep: return {1.0, -4.0, 2.0};
        case Witness::w_vs_bisep: return {0.5, -1.0, 0.0};
        case Witness::ghz_vs_w: {
            if (!(w.v0 > 0.0)) throw ValidationError("GHZ\\W witness needs v0 > 0");
            const double v = w.v0;
            return {0.75, -3.0 / (v * v - 2 * v + 4), -3.0 / (v * v + 2 * v + 4)};
        }
    }
    throw ValidationError("unknown witness kind");
}
}  // namespace detail

inline ComplexMatrix witness_matrix(const Witness &w) {
    const auto c = detail::witness_coefficients(w);
    ComplexMatrix m = ComplexMatrix::identity(8) * c.identity;
    m += ghz_state().projector() * c.ghz_plus;
    m += ghz_minus_state().projector() * c.ghz_minus;
    return m;
}

/// Zero line of a witness in the (Y, x) plane, Y = y1+y2+y3:
/// the trace is proportional to intercept - Y - slope * x with a positive factor.
struct WitnessLine {
    double scale;      // positive prefactor
    double intercept;  // value of Y where the line meets x = 0
    double slope;
    double trace(double y_sum, double x) const { return scale * (intercept - y_sum - slope * x); }
    /// x on the zero line at this Y.
    double x_at(double y_sum) const { return (intercept - y_sum) / slope; }
};

/// Closed forms of the witness expectations on the extended family. They
/// depend on y only through Y. For the GHZ\W witness the x coefficient is
/// 4 v0 / (v0^2 + 4) inside the bracket, which is what the operator gives.
inline WitnessLine witness_line(const Witness &w) {
    switch (w.kind) {
        case Witness::bisep_vs_sep: return {1.0, 0.75, 6.0};
        case Witness::w_vs_bisep: return {0.5, 0.75, 2.0};
        case Witness::ghz_vs_w: {
            if (!(w.v0 > 0.0)) throw ValidationError("GHZ\\W witness needs v0 > 0");
            const double v2 = w.v0 * w.v0;
            const double d = (v2 - 2 * w.v0 + 4) * (v2 + 2 * w.v0 + 4);
            return {3.0 * (v2 + 4) / d, ((v2 + 3) * (v2 + 4) - 4 * v2) / (4 * (v2 + 4)), 4.0 * w.v0 / (v2 + 4)};
        }
    }
    throw ValidationError("unknown witness kind");
}

inline double witness_trace(const Witness &w, const ExtSymParams &p) {
    auto v = validate_extended(p);
    if (!v) throw PhysicalityError("witness_trace: parameters are not physical: " + v.summary());
    return witness_line(w).trace(p.y_sum(), p.x);
}

enum class SeparableMethod { analytic, hull_oracle, ppt };

/// What a separability value means relative to the true separable x_max.
enum class BoundSemantics {
    stationary_point,  // x of an actual product state: never above the truth
    inner,             // LP over product images: never above the truth
    outer,             // PPT: never below the truth
};

inline std::string_view to_string(BoundSemantics s) {
    switch (s) {
        case BoundSemantics::stationary_point: return "stationary_point";
        case BoundSemantics::inner: return "inner_bound";
        case BoundSemantics::outer: return "outer_bound";
    }
    return "?";
}

struct SeparableBound {
    double value = 0.0;
    BoundSemantics semantics = BoundSemantics::inner;
};

struct HullOracleOptions {
    std::size_t n_images = 10000;
    std::uint64_t seed = 42;
};

inline SeparableBound separable_xmax(double y1, double y2, double y3, SeparableMethod method,
                                     const HullOracleOptions &oracle = {}) {
    require_feasible_y(y1, y2, y3);
    switch (method) {
        case SeparableMethod::ppt: return {ppt_xmax(y1, y2, y3), BoundSemantics::outer};
        case SeparableMethod::analytic:
            if (auto s = separable_xmax_stationary(y1, y2, y3)) return {*s, BoundSemantics::stationary_point};
            [[fallthrough]];
        case SeparableMethod::hull_oracle: {
            auto h = hull_membership_xmax(y1, y2, y3, oracle.n_images, oracle.seed);
            if (!h) throw ConvergenceError("separable_xmax: hull oracle LP infeasible at a physical y");
            return {*h, BoundSemantics::inner};
        }
    }
    throw ValidationError("unknown separability method");
}

enum class Slice { equal, anti, axis };

inline std::string_view to_string(Slice s) {
    switch (s) {
        case Slice::equal: return "equal";
        case Slice::anti: return "anti";
        case Slice::axis: return "axis";
    }
    return "?";
}

inline std::optional<Slice> slice_from_string(std::string_view s) {
    for (Slice k : {Slice::equal, Slice::anti, Slice::axis}) {
        if (to_string(k) == s) return k;
    }
    return std::nullopt;
}

/// (y1, y2, y3) on a slice: equal (y,y,y), anti (y,y,-y), axis (0,0,y).
inline std::array<double, 3> slice_point(Slice s, double y) {
    switch (s) {
        case Slice::equal: return {y, y, y};
        case Slice::anti: return {y, y, -y};
        case Slice::axis: return {0.0, 0.0, y};
    }
    throw ValidationError("unknown slice");
}

/// Physical range of the slice coordinate.
inline std::pair<double, double> slice_range(Slice s) {
    switch (s) {
        case Slice::equal: return {-1.0 / 12.0, 0.25};
        case Slice::anti: return {-0.25, 1.0 / 12.0};
        case Slice::axis: return {-0.25, 0.25};
    }
    throw ValidationError("unknown slice");
}

struct SliceRow {
    double y = 0.0;
    std::optional<double> x_stationary;
    double x_hull = 0.0;
    double x_ppt = 0.0;
    double x_phys = 0.0;
};

namespace detail {
inline std::vector<double> slice_grid(Slice s, int resolution) {
    const auto [lo, hi] = slice_range(s);
    std::vector<double> ys(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
        double y = (i == resolution - 1) ? hi : lo + (hi - lo) * i / (resolution - 1);
        if (std::abs(y) < 1e-15) y = 0.0;
        ys[static_cast<std::size_t>(i)] = y;
    }
    return ys;
}

inline std::optional<double> slice_stationary(Slice s, double y) {
    const auto t = slice_point(s, y);
    return separable_xmax_stationary(t[0], t[1], t[2]);
}
}  // namespace detail

/// Separable boundary along one of the three reference slices.
///
/// x_hull is the upper hull of the stationary curve together with the x = 0
/// slice endpoints (diagonal states are separable), capped by physicality.
/// The hull is built on a grid of at least 2001 points that always contains
/// y = 0.
inline std::vector<SliceRow> slice_boundary(Slice s, int resolution) {
    if (resolution < 2) throw ValidationError("slice_boundary: resolution must be at least 2");
    const auto [lo, hi] = slice_range(s);

    std::vector<Point2> samples{{lo, 0.0}, {hi, 0.0}};
    auto fine = detail::slice_grid(s, std::max(resolution, 2001));
    fine.push_back(0.0);
    for (double y : fine) {
        if (auto v = detail::slice_stationary(s, y)) samples.push_back({y, *v});
    }
    const Polyline2D hull = upper_hull(samples);

    std::vector<SliceRow> rows;
    for (double y : detail::slice_grid(s, resolution)) {
        const auto t = slice_point(s, y);
        SliceRow row;
        row.y = y;
        row.x_stationary = separable_xmax_stationary(t[0], t[1], t[2]);
        row.x_phys = physical_xmax(t[0], t[1], t[2]);
        row.x_hull = std::min(hull.value_at(y), row.x_phys);
        row.x_ppt = ppt_xmax(t[0], t[1], t[2]);
        rows.push_back(row);
    }
    return rows;
}

/// Upper boundary of the separable GHZ-symmetric states in the (y, x) plane.
///
/// Product states with equal moduli a trace x = a^3 (1-a^2)^{3/2},
/// y = (a^6 + (1-a^2)^3 - 1/4)/sqrt3 for a in [1/sqrt2, 1]. The lower triangle
/// vertex (diagonal, separable) is added before hulling, and the result is
/// clipped to the physical triangle.
inline Polyline2D ghz_symmetric_separable_boundary(int resolution) {
    if (resolution < 2) throw ValidationError("ghz_symmetric_separable_boundary: resolution must be at least 2");
    std::vector<Point2> pts{{-1.0 / (4.0 * kSqrt3), 0.0}};
    const double a_lo = std::sqrt(0.5);
    for (int i = 0; i < resolution; ++i) {
        const double a = (i == resolution - 1) ? 1.0 : a_lo + (1.0 - a_lo) * i / (resolution - 1);
        const double s = a * a;
        const double x = std::pow(s * (1 - s), 1.5);
        const double y = (s * s * s + std::pow(1 - s, 3) - 0.25) / kSqrt3;
        pts.push_back({y, x});
    }
    Polyline2D hull = upper_hull(std::move(pts));
    for (auto &v : hull.vertices) v.v = std::clamp(v.v, 0.0, kSqrt3 / 2.0 * v.h + 0.125);
    return hull;
}

namespace detail {
inline const Polyline2D &default_ghz_boundary() {
    static const Polyline2D boundary = ghz_symmetric_separable_boundary(2001);
    return boundary;
}
}  // namespace detail

/// Separable bound on |x| for a GHZ-symmetric state at this y.
inline double ghz_symmetric_separable_xmax(double y) {
    const auto &b = detail::default_ghz_boundary();
    return b.value_at(std::clamp(y, b.h_min(), b.h_max()));
}

struct ClassifyOptions {
    double v0 = kDefaultV0;
};

namespace detail {
/// Values within kLinearTol of zero count as zero and certify nothing.
inline Class witness_lower(double bisep, double w, double ghz) {
    if (ghz < -kLinearTol) return Class::GHZ;
    if (w < -kLinearTol) return Class::W;
    if (bisep < -kLinearTol) return Class::Biseparable;
    return Class::Separable;
}
}  // namespace detail

/// Rough classification of an extended GHZ-symmetric state.
///
/// Lower bound: the highest class whose witness is strictly negative, raised
/// to Biseparable when the state is NPT or its GHZ-symmetric projection lies
/// outside the GHZ-symmetric separable region. Upper bound: Separable when
/// |x| is within both the LP inner bound and the PPT bound, otherwise GHZ.
/// The projection's witness values are recorded as corroborating evidence.
inline ClassVerdict classify_extended(const ExtSymParams &input, const ClassifyOptions &options = {}) {
    auto valid = validate_extended(input);
    if (!valid) throw PhysicalityError("classify_extended: parameters are not physical: " + valid.summary());
    const ExtSymParams p = input.x < 0 ? reflect_x(input) : input;
    const double ax = p.x;

    ClassVerdict verdict;
    auto record = [&](std::string name, double value, double threshold) {
        verdict.evidence.push_back({std::move(name), value, threshold});
    };

    const double t_bisep = witness_trace(Witness::bisep(), p);
    const double t_w = witness_trace(Witness::w(), p);
    const double t_ghz = witness_trace(Witness::ghz(options.v0), p);
    record("witness_bisep_vs_sep", t_bisep, 0.0);
    record("witness_w_vs_bisep", t_w, 0.0);
    record("witness_ghz_vs_w", t_ghz, 0.0);
    Class lower = detail::witness_lower(t_bisep, t_w, t_ghz);

    const auto ppt = ppt_report(p);
    record("ppt_xmax", ppt.x_max, ax);
    record("ppt_margin", ppt.margin, 0.0);
    record("ppt_min_eigenvalue", ppt.numeric_min_eig, -kPsdTol);

    const auto hull = reference_hull_xmax(p.y1, p.y2, p.y3);
    if (hull) record("hull_xmax", *hull, ax);

    const auto w = weights(p);
    record("physicality_margin", std::min({w.ghz_plus, w.ghz_minus, w.alpha2, w.alpha3, w.alpha4}), 0.0);

    const bool certified_separable = hull && ax <= *hull + kLinearTol && ppt.ppt();
    if (ppt.ppt() && !certified_separable) {
        record("separability_undetermined", ppt.x_max - (hull ? *hull : 0.0), 1e-3);
    }
    if (!ppt.ppt()) lower = std::max(lower, Class::Biseparable);

    // The projection onto the GHZ-symmetric family is a twirl, so its class
    // never exceeds the class of the state itself.
    const GhzSymParams q = project_to_ghz(p);
    const ComplexMatrix proj = make_ghz_symmetric(q, Check::unchecked);
    const double pb = trace_of_product(witness_matrix(Witness::bisep()), proj);
    const double pw = trace_of_product(witness_matrix(Witness::w()), proj);
    const double pg = trace_of_product(witness_matrix(Witness::ghz(options.v0)), proj);
    record("projected_witness_bisep_vs_sep", pb, 0.0);
    record("projected_witness_w_vs_bisep", pw, 0.0);
    record("projected_witness_ghz_vs_w", pg, 0.0);
    const double ghz_sep = ghz_symmetric_separable_xmax(q.y);
    record("projected_separable_margin", ghz_sep - ax, 0.0);
    Class projected = detail::witness_lower(pb, pw, pg);
    if (ax > ghz_sep + kLinearTol) projected = std::max(projected, Class::Biseparable);
    lower = std::max(lower, projected);

    verdict.lower = lower;
    verdict.upper = certified_separable ? Class::Separable : Class::GHZ;
    if (verdict.upper < verdict.lower) verdict.upper = verdict.lower;
    return verdict;
}

/// Vertex of the rough-classification diagram in the (Y, x) half-plane.
struct LabeledVertex {
    std::string label;  // the lines meeting here, joined by '&'
    double y_sum = 0.0;
    double x = 0.0;
};

/// Vertices of the arrangement formed by the three witness zero lines and the
/// physical triangle {x >= 0, x <= 1/8 + Y/2, Y <= 3/4} (the constraint
/// x <= 7/8 - Y/2 never binds inside it). Sorted by Y, then x.
inline std::vector<LabeledVertex> fig4_polygon(double v0 = kDefaultV0) {
    struct Line {
        std::string name;
        double a, b, c;  // a Y + b x = c
    };
    std::vector<Line> lines;
    for (auto [name, w] : {std::pair{"bisep", Witness::bisep()}, std::pair{"w", Witness::w()},
                           std::pair{"ghz", Witness::ghz(v0)}}) {
        const auto l = witness_line(w);
        lines.push_back({name, 1.0, l.slope, l.intercept});
    }
    lines.push_back({"left", -0.5, 1.0, 0.125});
    lines.push_back({"bottom", 0.0, 1.0, 0.0});
    lines.push_back({"right", 1.0, 0.0, 0.75});

    constexpr double tol = 1e-12;
    auto inside = [&](double Y, double x) { return x >= -tol && x <= 0.125 + Y / 2 + tol && Y <= 0.75 + tol; };

    struct Hit {
        double Y, x;
        std::vector<std::string> names;
    };
    std::vector<Hit> hits;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            const auto &l1 = lines[i];
            const auto &l2 = lines[j];
            const double det = l1.a * l2.b - l2.a * l1.b;
            if (std::abs(det) < 1e-15) continue;
            const double Y = (l1.c * l2.b - l2.c * l1.b) / det;
            const double x = (l1.a * l2.c - l2.a * l1.c) / det;
            if (!inside(Y, x)) continue;
            auto it = std::find_if(hits.begin(), hits.end(), [&](const Hit &h) {
                return std::abs(h.Y - Y) < 1e-12 && std::abs(h.x - x) < 1e-12;
            });
            if (it == hits.end()) {
                hits.push_back({Y, x, {}});
                it = hits.end() - 1;
            }
            for (const auto *n : {&l1.name, &l2.name}) {
                if (std::find(it->names.begin(), it->names.end(), *n) == it->names.end()) it->names.push_back(*n);
            }
        }

    std::vector<LabeledVertex> out;
    for (auto &h : hits) {
        std::sort(h.names.begin(), h.names.end());
        std::string label;
        for (const auto &n : h.names) label += (label.empty() ? "" : "&") + n;
        out.push_back({label, h.Y, std::max(0.0, h.x)});
    }
    std::sort(out.begin(), out.end(),
              [](const LabeledVertex &a, const LabeledVertex &b) { return a.y_sum < b.y_sum || (a.y_sum == b.y_sum && a.x < b.x); });
    return out;
}

}  // namespace eghz
