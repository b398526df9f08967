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

// Text formats shared by the library and the command line: JSON state and
// verdict documents, CSV boundary tables, and 12-significant-digit numbers.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "eghz/classify.hpp"
#include "eghz/errors.hpp"
#include "eghz/numerics.hpp"
#include "eghz/separability.hpp"
#include "eghz/states.hpp"

namespace eghz {

using json = nlohmann::ordered_json;

/// Round to 12 significant digits (idempotent).
inline double round12(double v) {
    if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

/// 12 significant digits; integral values keep a trailing ".0".
inline std::string format_number(double v) {
    if (v == 0.0) v = 0.0;  // drop negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    std::string s = buf;
    if (std::isfinite(v) && s.find_first_of(".en") == std::string::npos) s += ".0";
    return s;
}

/// Decimal number or simple fraction "p/q".
inline double parse_number(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_plain = [&](std::string_view s) {
        s = trim(s);
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
            throw ValidationError("not a number: '" + std::string(s) + "'");
        }
        return v;
    };
    text = trim(text);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const double num = parse_plain(text.substr(0, slash));
        const double den = parse_plain(text.substr(slash + 1));
        if (den == 0.0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
        return num / den;
    }
    return parse_plain(text);
}

inline std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_number(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

/// "x,y1,y2,y3"
inline ExtSymParams parse_params(std::string_view text) {
    const auto v = parse_number_list(text);
    if (v.size() != 4) throw ValidationError("expected four comma-separated values x,y1,y2,y3");
    return {v[0], v[1], v[2], v[3]};
}

inline json to_json(const ExtSymParams &p) {
    return {{"params", {{"x", round12(p.x)}, {"y1", round12(p.y1)}, {"y2", round12(p.y2)}, {"y3", round12(p.y3)}}}};
}

inline json to_json(const GhzSymParams &q) { return {{"ghz_params", {{"x", round12(q.x)}, {"y", round12(q.y)}}}}; }

inline json to_json(const ClassVerdict &v) {
    json evidence = json::array();
    for (const auto &e : v.evidence) {
        evidence.push_back({{"name", e.name}, {"value", round12(e.value)}, {"threshold", round12(e.threshold)}});
    }
    return {{"lower", std::string(to_string(v.lower))}, {"upper", std::string(to_string(v.upper))},
            {"evidence", evidence}};
}

inline ClassVerdict verdict_from_json(const json &j) {
    ClassVerdict v;
    auto lower = class_from_string(j.at("lower").get<std::string>());
    auto upper = class_from_string(j.at("upper").get<std::string>());
    if (!lower || !upper) throw ValidationError("verdict JSON: unknown class name");
    v.lower = *lower;
    v.upper = *upper;
    for (const auto &e : j.at("evidence")) {
        v.evidence.push_back({e.at("name").get<std::string>(), e.at("value").get<double>(), e.at("threshold").get<double>()});
    }
    return v;
}

inline json to_json(const PptReport &r) {
    return {{"alpha2", round12(r.alpha2)},   {"alpha3", round12(r.alpha3)},
            {"alpha4", round12(r.alpha4)},   {"x_max", round12(r.x_max)},
            {"margin", round12(r.margin)},   {"numeric_min_eig", round12(r.numeric_min_eig)},
            {"binding_qubit", r.binding_qubit}, {"ppt", r.ppt()}};
}

/// Any of the three state encodings accepted on input.
using StateInput = std::variant<ExtSymParams, ComplexMatrix, PureState3>;

namespace detail {
[[noreturn]] inline void bad_field(const std::string &source, const std::string &field, const std::string &what) {
    throw ValidationError(source + ": field '" + field + "': " + what);
}

inline double number_field(const json &obj, const std::string &key, const std::string &source,
                           const std::string &path) {
    const std::string field = path.empty() ? key : path + "." + key;
    if (!obj.is_object() || !obj.contains(key)) bad_field(source, field, "missing");
    const auto &v = obj.at(key);
    if (!v.is_number()) bad_field(source, field, "expected a number");
    return v.get<double>();
}

inline Complex complex_entry(const json &entry, const std::string &source, const std::string &field) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
        bad_field(source, field, "expected [re, im]");
    }
    return {entry[0].get<double>(), entry[1].get<double>()};
}
}  // namespace detail

/// Parses {"params": {...}}, {"matrix": [[[re,im] x8] x8]} or
/// {"amplitudes": [[re,im] x8]}. `source` names the input in diagnostics.
inline StateInput parse_state(const json &doc, const std::string &source) {
    if (!doc.is_object()) detail::bad_field(source, "<root>", "expected a JSON object");
    if (doc.contains("params")) {
        const auto &p = doc.at("params");
        if (!p.is_object()) detail::bad_field(source, "params", "expected an object");
        return ExtSymParams{detail::number_field(p, "x", source, "params"),
                            detail::number_field(p, "y1", source, "params"),
                            detail::number_field(p, "y2", source, "params"),
                            detail::number_field(p, "y3", source, "params")};
    }
    if (doc.contains("matrix")) {
        const auto &m = doc.at("matrix");
        if (!m.is_array() || m.size() != 8) detail::bad_field(source, "matrix", "expected 8 rows");
        ComplexMatrix out(8);
        for (std::size_t i = 0; i < 8; ++i) {
            const std::string row_field = "matrix[" + std::to_string(i) + "]";
            if (!m[i].is_array() || m[i].size() != 8) detail::bad_field(source, row_field, "expected 8 entries");
            for (std::size_t j = 0; j < 8; ++j) {
                out(i, j) = detail::complex_entry(m[i][j], source, row_field + "[" + std::to_string(j) + "]");
            }
        }
        return out;
    }
    if (doc.contains("amplitudes")) {
        const auto &a = doc.at("amplitudes");
        if (!a.is_array() || a.size() != 8) detail::bad_field(source, "amplitudes", "expected 8 [re, im] pairs");
        PureState3 s;
        for (std::size_t i = 0; i < 8; ++i) {
            s.amplitudes[i] = detail::complex_entry(a[i], source, "amplitudes[" + std::to_string(i) + "]");
        }
        return s;
    }
    detail::bad_field(source, "<root>", "expected one of 'params', 'matrix', 'amplitudes'");
}

inline json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw ValidationError(path + ": malformed JSON: " + e.what());
    }
}

inline StateInput load_state_file(const std::string &path) { return parse_state(read_json_file(path), path); }

inline json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({round12(m(i, j).real()), round12(m(i, j).imag())});
        rows.push_back(row);
    }
    return {{"matrix", rows}};
}

inline std::string slice_table_csv(const std::vector<SliceRow> &rows) {
    std::string out = "y,x_stationary,x_hull,x_ppt,x_phys\n";
    for (const auto &r : rows) {
        out += format_number(r.y) + "," + (r.x_stationary ? format_number(*r.x_stationary) : "") + "," +
               format_number(r.x_hull) + "," + format_number(r.x_ppt) + "," + format_number(r.x_phys) + "\n";
    }
    return out;
}

inline std::string polyline_csv(const Polyline2D &line, std::string_view h_name, std::string_view v_name) {
    std::string out = std::string(h_name) + "," + std::string(v_name) + "\n";
    for (const auto &p : line.vertices) out += format_number(p.h) + "," + format_number(p.v) + "\n";
    return out;
}

}  // namespace eghz
