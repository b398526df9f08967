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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "eghz/errors.hpp"

namespace eghz {

using Complex = std::complex<double>;

/// Entrywise tolerance used for Hermiticity checks.
inline constexpr double kHermitianTol = 1e-12;
/// Smallest eigenvalue still counted as nonnegative.
inline constexpr double kPsdTol = 1e-10;

/// Dense row-major complex square matrix. Sizes here are 2, 8 or 16.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

    static ComplexMatrix identity(std::size_t dim) {
        ComplexMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    static ComplexMatrix diagonal(std::span<const double> values) {
        ComplexMatrix m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
        return m;
    }

    std::size_t dim() const { return dim_; }

    Complex &operator()(std::size_t row, std::size_t col) { return data_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const { return data_[row * dim_ + col]; }

    std::span<const Complex> entries() const { return data_; }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    ComplexMatrix adjoint() const {
        ComplexMatrix out(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
        return out;
    }

    ComplexMatrix &operator+=(const ComplexMatrix &other) {
        require_same_dim(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
        return *this;
    }
    ComplexMatrix &operator-=(const ComplexMatrix &other) {
        require_same_dim(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
        return *this;
    }
    ComplexMatrix &operator*=(Complex scale) {
        for (auto &v : data_) v *= scale;
        return *this;
    }

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

    friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
        a.require_same_dim(b);
        const std::size_t n = a.dim_;
        ComplexMatrix out(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const Complex aik = a(i, k);
                if (aik == Complex{}) continue;
                for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

    /// Largest |M[i][j] - conj(M[j][i])| and where it occurs.
    struct HermitianViolation {
        double magnitude = 0.0;
        std::size_t row = 0;
        std::size_t col = 0;
    };
    HermitianViolation hermitian_violation() const {
        HermitianViolation worst;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j) {
                double d = std::abs((*this)(i, j) - std::conj((*this)(j, i)));
                if (d > worst.magnitude) worst = {d, i, j};
            }
        return worst;
    }

    bool is_hermitian(double tol = kHermitianTol) const { return hermitian_violation().magnitude <= tol; }

    double max_abs_difference(const ComplexMatrix &other) const {
        require_same_dim(other);
        double worst = 0.0;
        for (std::size_t k = 0; k < data_.size(); ++k) worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
        return worst;
    }

    bool operator==(const ComplexMatrix &) const = default;

   private:
    void require_same_dim(const ComplexMatrix &other) const {
        if (other.dim_ != dim_) {
            throw DimensionError(
                "matrix dimension mismatch: " + std::to_string(dim_) + " vs " + std::to_string(other.dim_));
        }
    }

    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Real part of tr(A B) without forming the product.
inline double trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) throw DimensionError("trace_of_product: dimension mismatch");
    Complex t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) t += a(i, k) * b(k, i);
    return t.real();
}

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// Cyclic complex Jacobi: each 2x2 principal block is first made real by a
/// phase and then annihilated by a real rotation. Sweeps stop once the
/// largest off-diagonal magnitude drops below 1e-12 (scaled by the Frobenius
/// norm when that exceeds one).
inline std::vector<double> eig_hermitian(const ComplexMatrix &m) {
    const auto violation = m.hermitian_violation();
    if (violation.magnitude > kHermitianTol) {
        std::ostringstream msg;
        msg << "eig_hermitian: matrix is not Hermitian; worst entry (" << violation.row << "," << violation.col
            << ") differs from the conjugate of its mirror by " << violation.magnitude;
        throw ValidationError(msg.str());
    }
    const std::size_t n = m.dim();
    ComplexMatrix a = m;
    // Symmetrize exactly so rounding in the input does not leak into the result.
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }

    double frob = 0.0;
    for (auto v : a.entries()) frob += std::norm(v);
    const double tol = 1e-12 * std::max(1.0, std::sqrt(frob));

    auto max_off = [&] {
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(a(i, j)));
        return worst;
    };

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    while (max_off() >= tol) {
        if (++sweep > kMaxSweeps) {
            throw ConvergenceError("eig_hermitian: Jacobi iteration did not converge in 100 sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag < std::numeric_limits<double>::min()) continue;
                const Complex phase = apq / mag;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // J = diag(1, conj(phase)) * [[c, s], [-s, c]] acting on (p, q).
                const Complex jpp = c, jpq = s, jqp = -s * std::conj(phase), jqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * jpp + akq * jqp;
                    a(k, q) = akp * jpq + akq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
                    a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = app - t * mag;
                a(q, q) = aqq + t * mag;
            }
        }
    }

    std::vector<double> eigenvalues(n);
    for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a(i, i).real();
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

inline double min_eigenvalue(const ComplexMatrix &m) { return eig_hermitian(m).front(); }

/// Partial transpose of a three-qubit operator over `qubit` (1, 2 or 3).
/// Qubit 1 is the most significant bit of the basis index.
inline ComplexMatrix partial_transpose(const ComplexMatrix &m, int qubit) {
    if (m.dim() != 8) {
        throw DimensionError("partial_transpose: unsupported dimension " + std::to_string(m.dim()) + " (expected 8)");
    }
    if (qubit < 1 || qubit > 3) throw ValidationError("partial_transpose: qubit index must be 1, 2 or 3");
    const std::size_t bit = std::size_t{1} << (3 - qubit);
    ComplexMatrix out(8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            std::size_t ii = (i & ~bit) | (j & bit);
            std::size_t jj = (j & ~bit) | (i & bit);
            out(ii, jj) = m(i, j);
        }
    return out;
}

/// Hilbert-Schmidt distance sqrt(tr((A-B)^dag (A-B)) / 2).
inline double hs_distance(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw DimensionError(
            "hs_distance: dimension mismatch " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim()));
    }
    double sum = 0.0;
    auto ea = a.entries();
    auto eb = b.entries();
    for (std::size_t k = 0; k < ea.size(); ++k) sum += std::norm(ea[k] - eb[k]);
    return std::sqrt(sum / 2.0);
}

struct Point2 {
    double h = 0.0;  // horizontal
    double v = 0.0;  // vertical
    bool operator==(const Point2 &) const = default;
};

/// Piecewise-linear curve with strictly increasing horizontal coordinates.
struct Polyline2D {
    std::vector<Point2> vertices;

    double h_min() const { return vertices.front().h; }
    double h_max() const { return vertices.back().h; }

    /// Linear interpolation; throws outside [h_min, h_max].
    double value_at(double h) const {
        if (vertices.empty()) throw ValidationError("Polyline2D: empty");
        if (h < h_min() || h > h_max()) throw ValidationError("Polyline2D: abscissa outside the polyline's range");
        auto it = std::lower_bound(
            vertices.begin(), vertices.end(), h, [](const Point2 &p, double value) { return p.h < value; });
        if (it == vertices.begin()) return it->v;
        const Point2 &hi = *it;
        const Point2 &lo = *(it - 1);
        const double t = (h - lo.h) / (hi.h - lo.h);
        return lo.v + t * (hi.v - lo.v);
    }
};

/// Upper convex hull by Andrew's monotone chain. Collinear interior points are
/// dropped; among points sharing a horizontal coordinate the highest is kept.
inline Polyline2D upper_hull(std::vector<Point2> points) {
    for (const auto &p : points) {
        if (!std::isfinite(p.h) || !std::isfinite(p.v)) throw ValidationError("upper_hull: non-finite coordinate");
    }
    std::sort(points.begin(), points.end(), [](const Point2 &a, const Point2 &b) {
        return a.h < b.h || (a.h == b.h && a.v > b.v);
    });
    points.erase(
        std::unique(points.begin(), points.end(), [](const Point2 &a, const Point2 &b) { return a.h == b.h; }),
        points.end());
    if (points.size() < 2) throw ValidationError("upper_hull: need at least two points with distinct abscissae");

    auto cross = [](const Point2 &o, const Point2 &a, const Point2 &b) {
        return (a.h - o.h) * (b.v - o.v) - (a.v - o.v) * (b.h - o.h);
    };
    Polyline2D hull;
    for (const auto &p : points) {
        while (hull.vertices.size() >= 2 &&
               cross(hull.vertices[hull.vertices.size() - 2], hull.vertices.back(), p) >= 0.0) {
            hull.vertices.pop_back();
        }
        hull.vertices.push_back(p);
    }
    return hull;
}

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    std::vector<double> weights;
    double objective = 0.0;
};

/// Dense matrix given as rows.
using DenseRows = std::vector<std::vector<double>>;

/// maximize c.w  subject to  A w = b,  w >= 0.
///
/// Two-phase dense tableau simplex with Bland's rule. Phase one minimizes the
/// sum of artificial variables; a residual above 1e-9 is reported infeasible.
inline LpResult lp_maximize(std::span<const double> objective, const DenseRows &eq_rows, std::span<const double> rhs) {
    const std::size_t m = eq_rows.size();
    const std::size_t n = objective.size();
    if (rhs.size() != m) throw DimensionError("lp_maximize: rhs length does not match constraint rows");
    for (const auto &row : eq_rows) {
        if (row.size() != n) throw DimensionError("lp_maximize: constraint row length does not match objective");
    }
    if (n == 0) throw DimensionError("lp_maximize: no variables");

    constexpr double kPivotEps = 1e-12;
    constexpr double kCostEps = 1e-11;
    constexpr double kFeasTol = 1e-9;

    // Columns: n originals, m artificials, 1 rhs. Row m is the reduced-cost row.
    const std::size_t cols = n + m + 1;
    const std::size_t rhs_col = n + m;
    std::vector<double> t((m + 1) * cols, 0.0);
    auto at = [&](std::size_t r, std::size_t c) -> double & { return t[r * cols + c]; };
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        const double sign = rhs[r] < 0 ? -1.0 : 1.0;
        for (std::size_t c = 0; c < n; ++c) at(r, c) = sign * eq_rows[r][c];
        at(r, n + r) = 1.0;
        at(r, rhs_col) = sign * rhs[r];
        basis[r] = n + r;
    }

    auto pivot = [&](std::size_t pr, std::size_t pc) {
        const double inv = 1.0 / at(pr, pc);
        for (std::size_t c = 0; c < cols; ++c) at(pr, c) *= inv;
        at(pr, pc) = 1.0;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == pr) continue;
            const double f = at(r, pc);
            if (f == 0.0) continue;
            for (std::size_t c = 0; c < cols; ++c) at(r, c) -= f * at(pr, c);
            at(r, pc) = 0.0;
        }
        basis[pr] = pc;
    };

    // Loads reduced costs d_j = c_j - c_B B^-1 A_j; rhs slot holds -z.
    auto load_costs = [&](const std::vector<double> &cost) {
        for (std::size_t c = 0; c < cols; ++c) at(m, c) = c < n + m ? cost[c] : 0.0;
        for (std::size_t r = 0; r < m; ++r) {
            const double cb = cost[basis[r]];
            if (cb == 0.0) continue;
            for (std::size_t c = 0; c < cols; ++c) at(m, c) -= cb * at(r, c);
        }
    };

    // Returns false when unbounded.
    auto run = [&](std::size_t allowed_cols) {
        const std::size_t max_iter = 50 * (n + m) + 1000;
        for (std::size_t iter = 0; iter < max_iter; ++iter) {
            std::size_t enter = allowed_cols;
            for (std::size_t c = 0; c < allowed_cols; ++c) {
                if (at(m, c) > kCostEps) {
                    enter = c;
                    break;
                }
            }
            if (enter == allowed_cols) return true;
            std::size_t leave = m;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t r = 0; r < m; ++r) {
                const double a = at(r, enter);
                if (a <= kPivotEps) continue;
                const double ratio = at(r, rhs_col) / a;
                if (ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 && leave < m && basis[r] < basis[leave])) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
        throw ConvergenceError("lp_maximize: simplex iteration limit reached");
    };

    std::vector<double> phase1(n + m, 0.0);
    for (std::size_t r = 0; r < m; ++r) phase1[n + r] = -1.0;
    load_costs(phase1);
    run(n + m);
    if (-at(m, rhs_col) < -kFeasTol) return {LpStatus::infeasible, {}, 0.0};

    // Drive zero-valued artificials out of the basis where possible.
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (std::abs(at(r, c)) > 1e-9) {
                pivot(r, c);
                break;
            }
        }
    }

    std::vector<double> phase2(n + m, 0.0);
    std::copy(objective.begin(), objective.end(), phase2.begin());
    load_costs(phase2);
    if (!run(n)) return {LpStatus::unbounded, {}, 0.0};

    LpResult result;
    result.status = LpStatus::optimal;
    result.weights.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r) {
        if (basis[r] < n) result.weights[basis[r]] = std::max(0.0, at(r, rhs_col));
    }
    for (std::size_t c = 0; c < n; ++c) result.objective += objective[c] * result.weights[c];

    double residual = 0.0;
    for (std::size_t r = 0; r < m; ++r) {
        double lhs = 0.0;
        for (std::size_t c = 0; c < n; ++c) lhs += eq_rows[r][c] * result.weights[c];
        residual = std::max(residual, std::abs(lhs - rhs[r]));
    }
    if (residual > kFeasTol) return {LpStatus::infeasible, {}, 0.0};
    return result;
}

}  // namespace eghz
