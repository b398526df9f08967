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

// Separability bounds for the extended GHZ-symmetric family at fixed
// (y1, y2, y3): the Lagrange stationary point over product states and the
// PPT bound.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "eghz/errors.hpp"
#include "eghz/numerics.hpp"
#include "eghz/states.hpp"
#include "eghz/twirl.hpp"

namespace eghz {

/// Largest |x| allowed by physicality at fixed y: 1/8 + (y1+y2+y3)/2.
inline double physical_xmax(double y1, double y2, double y3) { return 0.125 + (y1 + y2 + y3) / 2.0; }

inline void require_feasible_y(double y1, double y2, double y3) {
    auto v = validate_extended({0.0, y1, y2, y3});
    if (!v) throw PhysicalityError("no physical state has these y coordinates: " + v.summary());
}

/// (1/8) sqrt((y1-4y2y3)(y2-4y1y3)(y3-4y1y2) / (y1y2y3)) with no admissibility
/// checks. Empty when the denominator vanishes or the radicand is negative.
inline std::optional<double> lagrange_xmax_unchecked(double y1, double y2, double y3) {
    const double denom = y1 * y2 * y3;
    if (denom == 0.0) return std::nullopt;
    const double radicand = (y1 - 4 * y2 * y3) * (y2 - 4 * y1 * y3) * (y3 - 4 * y1 * y2) / denom;
    if (radicand < 0.0) return std::nullopt;
    return std::sqrt(radicand) / 8.0;
}

/// Product-state moduli at the stationary point of x under fixed y.
///
/// With |A_j|^2 = 1/2 + e_j the constraints read y1 = e2 e3, y2 = e1 e3,
/// y3 = e1 e2, solved by e_j = sqrt(y1 y2 y3) / y_j. Real only when
/// y1 y2 y3 > 0 and every |e_j| <= 1/2. Zeros: all three zero gives e = 0;
/// exactly two zeros with the third y positive uses the symmetric limit
/// (e_k -> 0, the other two sqrt(y)); any other zero pattern has no point.
inline std::optional<ProductParams> stationary_moduli(double y1, double y2, double y3) {
    const std::array<double, 3> y{y1, y2, y3};
    const int zeros = static_cast<int>(std::count(y.begin(), y.end(), 0.0));
    std::array<double, 3> e{};
    if (zeros == 3) {
        e = {0.0, 0.0, 0.0};
    } else if (zeros == 2) {
        const auto k = static_cast<std::size_t>(std::find_if(y.begin(), y.end(), [](double v) { return v != 0.0; }) -
                                                y.begin());
        if (y[k] <= 0.0) return std::nullopt;
        const double r = std::sqrt(y[k]);
        e = {r, r, r};
        e[k] = 0.0;
    } else if (zeros == 1) {
        return std::nullopt;
    } else {
        const double prod = y1 * y2 * y3;
        if (prod <= 0.0) return std::nullopt;
        const double r = std::sqrt(prod);
        e = {r / y1, r / y2, r / y3};
    }
    for (double v : e) {
        if (std::abs(v) > 0.5 + 1e-15) return std::nullopt;
    }
    auto modulus = [](double ej) { return std::sqrt(std::clamp(0.5 + ej, 0.0, 1.0)); };
    return ProductParams{modulus(e[0]), modulus(e[1]), modulus(e[2])};
}

/// Stationary separable boundary value of x at fixed y, or empty when the
/// stationary equations have no admissible real solution. Capped by
/// physicality. Throws when no physical state has these y.
inline std::optional<double> separable_xmax_stationary(double y1, double y2, double y3) {
    require_feasible_y(y1, y2, y3);
    if (!stationary_moduli(y1, y2, y3)) return std::nullopt;
    const double cap = physical_xmax(y1, y2, y3);
    const int zeros = (y1 == 0.0) + (y2 == 0.0) + (y3 == 0.0);
    double value = 0.0;
    if (zeros == 3) {
        value = 0.125;
    } else if (zeros == 2) {
        value = (1.0 - 4.0 * (y1 + y2 + y3)) / 8.0;
    } else {
        auto v = lagrange_xmax_unchecked(y1, y2, y3);
        if (!v) return std::nullopt;
        value = *v;
    }
    return std::min(value, cap);
}

struct PptReport {
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double alpha4 = 0.0;
    double x_max = 0.0;            // min(alpha2, alpha3, alpha4)
    double margin = 0.0;           // x_max - |x|
    double numeric_min_eig = 0.0;  // over the partial transposes on qubits 1, 2, 3
    int binding_qubit = 1;         // qubit whose partial transpose is most negative

    bool ppt() const { return margin >= -kPsdTol; }
};

/// PPT test for an extended GHZ-symmetric state, analytic and numeric.
///
/// Transposing qubit 1 moves the GHZ coherence onto the |011>,|100> block
/// (eigenvalues alpha4 +- x); qubit 2 onto |010>,|101> (alpha3); qubit 3
/// onto |001>,|110> (alpha2).
inline PptReport ppt_report(const ExtSymParams &p) {
    auto v = validate_extended(p);
    if (!v) throw PhysicalityError("ppt_report: parameters are not physical: " + v.summary());
    const auto w = weights(p);
    PptReport r;
    r.alpha2 = w.alpha2;
    r.alpha3 = w.alpha3;
    r.alpha4 = w.alpha4;
    r.x_max = std::min({w.alpha2, w.alpha3, w.alpha4});
    r.margin = r.x_max - std::abs(p.x);

    const ComplexMatrix rho = make_extended(p, Check::unchecked);
    r.numeric_min_eig = std::numeric_limits<double>::infinity();
    for (int q = 1; q <= 3; ++q) {
        const double lo = min_eigenvalue(partial_transpose(rho, q));
        if (lo < r.numeric_min_eig) {
            r.numeric_min_eig = lo;
            r.binding_qubit = q;
        }
    }
    const bool analytic_ppt = r.margin >= 0.0;
    const bool numeric_ppt = r.numeric_min_eig >= 0.0;
    if (analytic_ppt != numeric_ppt && std::abs(r.margin) > kPsdTol && std::abs(r.numeric_min_eig) > kPsdTol) {
        throw ConvergenceError("ppt_report: analytic and numeric PPT verdicts disagree");
    }
    return r;
}

/// PPT bound on separable |x| at fixed y, capped by physicality. An outer
/// bound: every separable state satisfies it.
inline double ppt_xmax(double y1, double y2, double y3) {
    const auto w = weights({0.0, y1, y2, y3});
    return std::min({w.alpha2, w.alpha3, w.alpha4, physical_xmax(y1, y2, y3)});
}

}  // namespace eghz
