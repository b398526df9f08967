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

#include <cstdint>
#include <random>

#include "eghz/numerics.hpp"
#include "eghz/states.hpp"

namespace eghz {

using Rng = std::mt19937_64;

/// Independent substream for (seed, stream index); results do not depend on
/// which worker evaluates which stream.
inline Rng substream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

inline PureState3 random_pure_state(Rng &rng) {
    std::normal_distribution<double> gauss;
    PureState3 s;
    for (auto &a : s.amplitudes) a = Complex(gauss(rng), gauss(rng));
    const double n = std::sqrt(s.norm_squared());
    for (auto &a : s.amplitudes) a /= n;
    return s;
}

/// Hilbert-Schmidt ensemble: G G^dag / tr(G G^dag) with complex Gaussian G.
inline ComplexMatrix random_density_matrix(Rng &rng, std::size_t dim = 8) {
    std::normal_distribution<double> gauss;
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / rho.trace().real();
    return rho;
}

}  // namespace eghz
