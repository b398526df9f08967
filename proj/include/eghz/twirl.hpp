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

// Projections of arbitrary three-qubit states onto the symmetric families.

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "eghz/errors.hpp"
#include "eghz/numerics.hpp"
#include "eghz/random.hpp"
#include "eghz/states.hpp"

namespace eghz {

/// Element of the extended GHZ symmetry group: z-rotations
/// e^{i phi1 sz} (x) e^{i phi2 sz} (x) e^{-i (phi1+phi2) sz}, optionally
/// followed by the global flip sx (x) sx (x) sx.
struct GroupElement {
    double phi1 = 0.0;
    double phi2 = 0.0;
    bool flip = false;
};

namespace detail {
inline Complex rotation_phase(const GroupElement &g, std::size_t index) {
    // sz|0> = +|0>, sz|1> = -|1>
    auto s = [&](int q) { return ((index >> (2 - q)) & 1U) ? -1.0 : 1.0; };
    const double angle = g.phi1 * s(0) + g.phi2 * s(1) - (g.phi1 + g.phi2) * s(2);
    return std::polar(1.0, angle);
}
}  // namespace detail

inline ComplexMatrix group_element_matrix(const GroupElement &g) {
    ComplexMatrix m(8);
    for (std::size_t i = 0; i < 8; ++i) {
        const std::size_t row = g.flip ? (7 - i) : i;
        m(row, i) = detail::rotation_phase(g, i);
    }
    return m;
}

/// U rho U^dag for a group element, exploiting that U is a phased permutation.
inline ComplexMatrix apply_group_element(const GroupElement &g, const ComplexMatrix &rho) {
    std::array<Complex, 8> phase;
    for (std::size_t i = 0; i < 8; ++i) phase[i] = detail::rotation_phase(g, i);
    ComplexMatrix out(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            const std::size_t ri = g.flip ? 7 - i : i;
            const std::size_t rj = g.flip ? 7 - j : j;
            out(ri, rj) = phase[i] * rho(i, j) * std::conj(phase[j]);
        }
    return out;
}

inline ExtSymParams twirl_pure_extended(const PureState3 &psi) {
    psi.require_normalized();
    auto p = [&](std::size_t i) { return std::norm(psi[i]); };
    const double pair = p(0b000) + p(0b111);
    return {
        (std::conj(psi[0b000]) * psi[0b111]).real(),
        (pair + p(0b011) + p(0b100)) / 2.0 - 0.25,
        (pair + p(0b101) + p(0b010)) / 2.0 - 0.25,
        (pair + p(0b110) + p(0b001)) / 2.0 - 0.25,
    };
}

inline GhzSymParams twirl_pure_ghz(const PureState3 &psi) {
    psi.require_normalized();
    return {
        (std::conj(psi[0b000]) * psi[0b111]).real(),
        (std::norm(psi[0b000]) + std::norm(psi[0b111]) - 0.25) / kSqrt3,
    };
}

/// Checks that `rho` is an 8x8 density matrix: Hermitian, unit trace, PSD.
inline void require_density_matrix(const ComplexMatrix &rho, double tol = kPsdTol) {
    if (rho.dim() != 8) throw DimensionError("expected an 8x8 density matrix, got dimension " + std::to_string(rho.dim()));
    const auto h = rho.hermitian_violation();
    if (h.magnitude > tol) {
        throw ValidationError("density matrix is not Hermitian at (" + std::to_string(h.row) + "," +
                              std::to_string(h.col) + "), deviation " + detail::fmt(h.magnitude));
    }
    const Complex tr = rho.trace();
    if (std::abs(tr - 1.0) > tol) throw ValidationError("density matrix trace is " + detail::fmt(tr.real()) + ", not 1");
    const double lo = min_eigenvalue(rho);
    if (lo < -tol) throw ValidationError("density matrix has negative eigenvalue " + detail::fmt(lo));
}

/// Group average of a mixed state over the extended GHZ symmetry, in closed
/// form: the linear map that agrees with the pure-state twirl and is
/// invariant under rotations and the flip.
inline ExtSymParams twirl_density_extended(const ComplexMatrix &rho) {
    require_density_matrix(rho);
    auto d = [&](std::size_t i) { return rho(i, i).real(); };
    const double pair = d(0b000) + d(0b111);
    return {
        rho(0b000, 0b111).real(),
        (pair + d(0b011) + d(0b100)) / 2.0 - 0.25,
        (pair + d(0b101) + d(0b010)) / 2.0 - 0.25,
        (pair + d(0b110) + d(0b001)) / 2.0 - 0.25,
    };
}

/// Monte-Carlo group average: mean of U rho U^dag over `samples` rotations
/// drawn uniformly from the torus, each evaluated with and without the flip.
inline ComplexMatrix group_average(const ComplexMatrix &rho, std::size_t samples, Rng &rng) {
    if (rho.dim() != 8) throw DimensionError("group_average: expected an 8x8 matrix");
    if (samples == 0) throw ValidationError("group_average: need at least one sample");
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    ComplexMatrix acc(8);
    for (std::size_t s = 0; s < samples; ++s) {
        GroupElement g{angle(rng), angle(rng), false};
        acc += apply_group_element(g, rho);
        g.flip = true;
        acc += apply_group_element(g, rho);
    }
    acc *= 1.0 / (2.0 * static_cast<double>(samples));
    return acc;
}

/// Map an extended GHZ-symmetric state to the GHZ-symmetric family by also
/// averaging over qubit permutations.
inline GhzSymParams project_to_ghz(const ExtSymParams &p) {
    auto v = validate_extended(p);
    if (!v) throw PhysicalityError("project_to_ghz: input is not physical: " + v.summary());
    return {p.x, p.y_sum() / kSqrt3};
}

/// Moduli |A_j| of a product state (U1 (x) U2 (x) U3)|000> with
/// U_j = [[A_j, -B_j*], [B_j, A_j*]]. Phases do not survive the twirl.
struct ProductParams {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
};

/// Extended-symmetric image of a product state.
inline ExtSymParams product_image(const ProductParams &a) {
    for (double v : {a.a1, a.a2, a.a3}) {
        if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("product moduli must lie in [0, 1], got " + detail::fmt(v));
    }
    const double s1 = a.a1 * a.a1, s2 = a.a2 * a.a2, s3 = a.a3 * a.a3;
    const double x = a.a1 * a.a2 * a.a3 * std::sqrt((1 - s1) * (1 - s2) * (1 - s3));
    auto mu = [](double u, double v) { return u * v + (1 - u) * (1 - v); };
    return {x, (mu(s2, s3) - 0.5) / 2.0, (mu(s1, s3) - 0.5) / 2.0, (mu(s1, s2) - 0.5) / 2.0};
}

}  // namespace eghz
