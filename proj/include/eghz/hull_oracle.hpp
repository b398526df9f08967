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

// Brute-force inner bound on the separable region: the largest x reachable
// by convex combinations of product-state images with prescribed y.

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "eghz/numerics.hpp"
#include "eghz/random.hpp"
#include "eghz/separability.hpp"
#include "eghz/twirl.hpp"

namespace eghz {

/// Product images that are always included: the eight computational basis
/// states (moduli 0 or 1) and the balanced state with all moduli 1/sqrt2.
inline std::vector<ProductParams> reference_product_params() {
    std::vector<ProductParams> out;
    for (int bits = 0; bits < 8; ++bits) {
        out.push_back({double((bits >> 2) & 1), double((bits >> 1) & 1), double(bits & 1)});
    }
    const double h = std::sqrt(0.5);
    out.push_back({h, h, h});
    return out;
}

/// Maximize x over conv(images and their x-reflections) at fixed y.
/// Empty when the y-triple is outside the hull of the images.
inline std::optional<double> hull_xmax_from_images(double y1, double y2, double y3,
                                                   const std::vector<ExtSymParams> &images) {
    const std::size_t n = 2 * images.size();
    std::vector<double> objective(n);
    DenseRows rows(4, std::vector<double>(n));
    for (std::size_t j = 0; j < images.size(); ++j) {
        const auto &im = images[j];
        for (std::size_t k : {2 * j, 2 * j + 1}) {
            objective[k] = (k % 2 == 0) ? im.x : -im.x;
            rows[0][k] = im.y1;
            rows[1][k] = im.y2;
            rows[2][k] = im.y3;
            rows[3][k] = 1.0;
        }
    }
    const std::array<double, 4> rhs{y1, y2, y3, 1.0};
    auto result = lp_maximize(objective, rows, rhs);
    if (result.status != LpStatus::optimal) return std::nullopt;
    return result.objective;
}

namespace detail {
inline std::vector<ExtSymParams> injected_images(double y1, double y2, double y3) {
    std::vector<ExtSymParams> images;
    for (const auto &a : reference_product_params()) images.push_back(product_image(a));
    if (auto a = stationary_moduli(y1, y2, y3)) images.push_back(product_image(*a));
    return images;
}
}  // namespace detail

/// LP inner bound using only the reference and stationary images. Cheap and
/// deterministic; used by the classifier.
inline std::optional<double> reference_hull_xmax(double y1, double y2, double y3) {
    return hull_xmax_from_images(y1, y2, y3, detail::injected_images(y1, y2, y3));
}

/// LP inner bound from `n_images` product states with moduli uniform on
/// [0,1]^3, plus the reference images and the stationary-point image when it
/// is real. Every feasible LP point is a mixture of product states, so the
/// optimum never exceeds the true separable x_max. Empty when infeasible.
inline std::optional<double> hull_membership_xmax(double y1, double y2, double y3, std::size_t n_images,
                                                  std::uint64_t seed) {
    if (n_images < 10) throw ValidationError("hull_membership_xmax: need at least 10 sampled images");
    require_feasible_y(y1, y2, y3);
    auto images = detail::injected_images(y1, y2, y3);
    Rng rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    images.reserve(images.size() + n_images);
    for (std::size_t i = 0; i < n_images; ++i) {
        const double a1 = unit(rng), a2 = unit(rng), a3 = unit(rng);
        images.push_back(product_image({a1, a2, a3}));
    }
    return hull_xmax_from_images(y1, y2, y3, images);
}

}  // namespace eghz
