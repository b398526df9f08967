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

// State families and their physicality constraints.
//
// Basis convention used throughout the library: |i1 i2 i3> has index
// 4*i1 + 2*i2 + i3, so qubit 1 is the most significant bit. The four-qubit
// family follows the same rule with 16 indices.

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eghz/errors.hpp"
#include "eghz/numerics.hpp"

namespace eghz {

/// Tolerance on the linear physicality constraints.
inline constexpr double kLinearTol = 1e-12;

inline const double kSqrt3 = std::sqrt(3.0);

/// Coordinates (x, y1, y2, y3) of the extended GHZ-symmetric family.
/// Euclidean distance in these coordinates equals Hilbert-Schmidt distance.
struct ExtSymParams {
    double x = 0.0;
    double y1 = 0.0;
    double y2 = 0.0;
    double y3 = 0.0;

    double y_sum() const { return y1 + y2 + y3; }
    bool operator==(const ExtSymParams &) const = default;
};

/// Coordinates (x, y) of the GHZ-symmetric family.
struct GhzSymParams {
    double x = 0.0;
    double y = 0.0;
    bool operator==(const GhzSymParams &) const = default;
};

struct FourQubitParams {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    double alpha3 = 0.0;
    double beta = 0.0;
};

/// Whether constructors check physicality. `unchecked` exists for scans that
/// deliberately step outside the physical region.
enum class Check { enforce, unchecked };

struct Validity {
    bool valid = true;
    std::vector<std::string> violations;

    explicit operator bool() const { return valid; }
    std::string summary() const {
        std::string out;
        for (const auto &v : violations) {
            if (!out.empty()) out += "; ";
            out += v;
        }
        return out;
    }
};

namespace detail {
inline std::string fmt(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}
}  // namespace detail

/// Spectral weights of an extended GHZ-symmetric state: the GHZ+ and GHZ-
/// populations and the three doubly degenerate diagonal weights
/// alpha2 (|001>,|110>), alpha3 (|010>,|101>), alpha4 (|011>,|100>).
struct ExtSymWeights {
    double ghz_plus;
    double ghz_minus;
    double alpha2;
    double alpha3;
    double alpha4;
};

inline ExtSymWeights weights(const ExtSymParams &p) {
    const double core = 0.125 + p.y_sum() / 2.0;
    return {
        core + p.x,
        core - p.x,
        0.125 - (p.y1 + p.y2 - p.y3) / 2.0,
        0.125 - (p.y1 - p.y2 + p.y3) / 2.0,
        0.125 - (-p.y1 + p.y2 + p.y3) / 2.0,
    };
}

inline Validity validate_extended(const ExtSymParams &p) {
    Validity out;
    auto fail = [&](std::string what) {
        out.valid = false;
        out.violations.push_back(std::move(what));
    };
    const double lower = std::abs(p.y1 + p.y2) - 0.25;
    const double upper = 0.25 - std::abs(p.y1 - p.y2);
    if (p.y3 < lower - kLinearTol) {
        fail("|y1+y2| - 1/4 <= y3 violated: " + detail::fmt(lower) + " > " + detail::fmt(p.y3));
    }
    if (p.y3 > upper + kLinearTol) {
        fail("y3 <= 1/4 - |y1-y2| violated: " + detail::fmt(p.y3) + " > " + detail::fmt(upper));
    }
    const auto w = weights(p);
    for (auto [value, label] : {std::pair{w.ghz_plus, "1/8 + (y1+y2+y3)/2 + x"},
                                std::pair{w.ghz_minus, "1/8 + (y1+y2+y3)/2 - x"}}) {
        if (value < -kLinearTol) fail(std::string("0 <= ") + label + " violated: value " + detail::fmt(value));
        if (value > 1.0 + kLinearTol) fail(std::string(label) + " <= 1 violated: value " + detail::fmt(value));
    }
    return out;
}

namespace detail {
inline void write_ghz_block(ComplexMatrix &m, double ghz_plus, double ghz_minus) {
    // |GHZ+-> = (|000> +- |111>)/sqrt2
    const double diag = (ghz_plus + ghz_minus) / 2.0;
    const double coh = (ghz_plus - ghz_minus) / 2.0;
    m(0, 0) = diag;
    m(7, 7) = diag;
    m(0, 7) = coh;
    m(7, 0) = coh;
}
}  // namespace detail

/// Density matrix of the extended GHZ-symmetric state with parameters `p`.
inline ComplexMatrix make_extended(const ExtSymParams &p, Check check = Check::enforce) {
    if (check == Check::enforce) {
        auto v = validate_extended(p);
        if (!v) throw PhysicalityError("extended GHZ-symmetric parameters are not physical: " + v.summary());
    }
    const auto w = weights(p);
    ComplexMatrix m(8);
    detail::write_ghz_block(m, w.ghz_plus, w.ghz_minus);
    m(1, 1) = m(6, 6) = w.alpha2;  // |001>, |110>
    m(2, 2) = m(5, 5) = w.alpha3;  // |010>, |101>
    m(3, 3) = m(4, 4) = w.alpha4;  // |011>, |100>
    return m;
}

inline Validity validate_ghz_symmetric(const GhzSymParams &q) {
    Validity out;
    auto fail = [&](std::string what) {
        out.valid = false;
        out.violations.push_back(std::move(what));
    };
    const double floor = -1.0 / (4.0 * kSqrt3);
    const double ceil = kSqrt3 / 4.0;
    if (q.y < floor - kLinearTol) fail("y >= -1/(4 sqrt3) violated: y = " + detail::fmt(q.y));
    if (q.y > ceil + kLinearTol) fail("y <= sqrt3/4 violated: y = " + detail::fmt(q.y));
    for (double sign : {1.0, -1.0}) {
        const double bound = sign * 2.0 / kSqrt3 * q.x + floor;
        if (q.y < bound - kLinearTol) {
            fail(std::string("y >= ") + (sign > 0 ? "+" : "-") + "(2/sqrt3) x - 1/(4 sqrt3) violated: " +
                 detail::fmt(q.y) + " < " + detail::fmt(bound));
        }
    }
    return out;
}

/// Density matrix of the GHZ-symmetric state with parameters `q`.
inline ComplexMatrix make_ghz_symmetric(const GhzSymParams &q, Check check = Check::enforce) {
    if (check == Check::enforce) {
        auto v = validate_ghz_symmetric(q);
        if (!v) throw PhysicalityError("GHZ-symmetric parameters are not physical: " + v.summary());
    }
    ComplexMatrix m(8);
    const double half_y = kSqrt3 / 2.0 * q.y;
    detail::write_ghz_block(m, q.x + half_y + 0.125, -q.x + half_y + 0.125);
    const double rest = 0.125 - q.y / (2.0 * kSqrt3);
    for (std::size_t i = 1; i < 7; ++i) m(i, i) = rest;
    return m;
}

/// Parameters of p |GHZ+><GHZ+| + (1-p) identity/8.
inline ExtSymParams make_werner(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("Werner weight p must lie in [0, 1], got " + detail::fmt(p));
    return {p / 2.0, p / 4.0, p / 4.0, p / 4.0};
}

/// Flip the sign of x; realized by the local unitary u (x) u (x) u with
/// u = [[0, 1], [-1, 0]], so the entanglement class is unchanged.
inline ExtSymParams reflect_x(const ExtSymParams &p) { return {-p.x, p.y1, p.y2, p.y3}; }

inline Validity validate_four_qubit(const FourQubitParams &f) {
    Validity out;
    auto fail = [&](std::string what) {
        out.valid = false;
        out.violations.push_back(std::move(what));
    };
    const double residual = f.alpha1 + 4.0 * f.alpha2 + 3.0 * f.alpha3 - 0.5;
    if (std::abs(residual) > kLinearTol) {
        fail("alpha1 + 4 alpha2 + 3 alpha3 = 1/2 violated: residual " + detail::fmt(residual));
    }
    if (f.alpha1 < -kLinearTol) fail("alpha1 >= 0 violated");
    if (f.alpha2 < -kLinearTol) fail("alpha2 >= 0 violated");
    if (f.alpha3 < -kLinearTol) fail("alpha3 >= 0 violated");
    if (std::abs(f.beta) > f.alpha1 + kLinearTol) {
        fail("|beta| <= alpha1 violated: eigenvalue alpha1 - |beta| = " + detail::fmt(f.alpha1 - std::abs(f.beta)));
    }
    return out;
}

/// Four-qubit GHZ-like-symmetric state. Diagonal weights depend on the
/// Hamming weight of the basis label: alpha1 for 0000/1111, alpha2 for odd
/// weight, alpha3 for weight two; beta couples |0000> and |1111>.
inline ComplexMatrix make_four_qubit(const FourQubitParams &f, Check check = Check::enforce) {
    if (check == Check::enforce) {
        auto v = validate_four_qubit(f);
        if (!v) throw PhysicalityError("four-qubit parameters are not physical: " + v.summary());
    }
    ComplexMatrix m(16);
    for (std::size_t i = 0; i < 16; ++i) {
        const int weight = std::popcount(static_cast<unsigned>(i));
        m(i, i) = (weight == 0 || weight == 4) ? f.alpha1 : (weight % 2 == 1 ? f.alpha2 : f.alpha3);
    }
    m(0, 15) = f.beta;
    m(15, 0) = f.beta;
    return m;
}

/// Normalized three-qubit pure state; amplitude index follows the basis convention.
struct PureState3 {
    std::array<Complex, 8> amplitudes{};

    Complex operator[](std::size_t index) const { return amplitudes[index]; }

    double norm_squared() const {
        double s = 0.0;
        for (auto a : amplitudes) s += std::norm(a);
        return s;
    }

    void require_normalized(double tol = 1e-12) const {
        const double n = norm_squared();
        if (std::abs(n - 1.0) > tol) {
            throw ValidationError("pure state is not normalized: sum |psi|^2 = " + detail::fmt(n));
        }
    }

    ComplexMatrix projector() const {
        ComplexMatrix m(8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) m(i, j) = amplitudes[i] * std::conj(amplitudes[j]);
        return m;
    }

    static PureState3 basis(std::size_t index) {
        PureState3 s;
        s.amplitudes[index] = 1.0;
        return s;
    }
};

/// (|000> + |111>)/sqrt2
inline PureState3 ghz_state() {
    PureState3 s;
    s.amplitudes[0] = s.amplitudes[7] = std::numbers::sqrt2 / 2.0;
    return s;
}

/// (|000> - |111>)/sqrt2
inline PureState3 ghz_minus_state() {
    PureState3 s;
    s.amplitudes[0] = std::numbers::sqrt2 / 2.0;
    s.amplitudes[7] = -std::numbers::sqrt2 / 2.0;
    return s;
}

/// (|001> + |010> + |100>)/sqrt3
inline PureState3 w_state() {
    PureState3 s;
    s.amplitudes[1] = s.amplitudes[2] = s.amplitudes[4] = 1.0 / kSqrt3;
    return s;
}

}  // namespace eghz
