#include "femvar/linear_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace femvar {

namespace {

double norm_inf(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double norm_one(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += std::abs(x);
    return s;
}

bool all_finite(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

double pivot_floor(const DenseMatrix& matrix) {
    return std::numeric_limits<double>::epsilon() * matrix.norm_inf() * static_cast<double>(matrix.size());
}

}  // namespace

LuFactorization::LuFactorization(DenseMatrix matrix) : lu_(std::move(matrix)), pivots_(lu_.size()) {
    const std::size_t n = lu_.size();
    min_pivot_ = n == 0 ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
        }
        pivots_[k] = p;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
        }
        const double pivot = lu_(k, k);
        min_pivot_ = std::min(min_pivot_, std::abs(pivot));
        if (pivot == 0.0) continue;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double factor = lu_(i, k) / pivot;
            lu_(i, k) = factor;
            if (factor == 0.0) continue;
            for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
        }
    }
}

std::vector<double> LuFactorization::solve(std::span<const double> rhs) const {
    const std::size_t n = lu_.size();
    std::vector<double> x(rhs.begin(), rhs.end());
    // Whole rows were swapped during factorization, so L is already in final
    // row order: permute first, then substitute.
    for (std::size_t k = 0; k < n; ++k) std::swap(x[k], x[pivots_[k]]);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = k + 1; i < n; ++i) x[i] -= lu_(i, k) * x[k];
    }
    for (std::size_t k = n; k-- > 0;) {
        double sum = x[k];
        for (std::size_t j = k + 1; j < n; ++j) sum -= lu_(k, j) * x[j];
        x[k] = sum / lu_(k, k);
    }
    return x;
}

std::vector<double> LuFactorization::solve_transposed(std::span<const double> rhs) const {
    // A = P^T L U, so A^T y = b  <=>  U^T L^T P y = b.
    const std::size_t n = lu_.size();
    std::vector<double> x(rhs.begin(), rhs.end());
    for (std::size_t k = 0; k < n; ++k) {
        double sum = x[k];
        for (std::size_t j = 0; j < k; ++j) sum -= lu_(j, k) * x[j];
        x[k] = sum / lu_(k, k);
    }
    for (std::size_t k = n; k-- > 0;) {
        double sum = x[k];
        for (std::size_t j = k + 1; j < n; ++j) sum -= lu_(j, k) * x[j];
        x[k] = sum;
    }
    for (std::size_t k = n; k-- > 0;) std::swap(x[k], x[pivots_[k]]);
    return x;
}

double rcond_estimate(const DenseMatrix& matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) return 0.0;
    const double anorm = matrix.norm_one();
    if (anorm == 0.0) return 0.0;
    const LuFactorization lu(matrix);
    if (lu.breakdown()) return 0.0;

    // Hager's iteration for ||A^-1||_1.
    std::vector<double> x(n, 1.0 / static_cast<double>(n));
    double estimate = 0.0;
    std::size_t last_index = n;
    for (int iter = 0; iter < 5; ++iter) {
        const std::vector<double> y = lu.solve(x);
        if (!all_finite(y)) return 0.0;
        estimate = std::max(estimate, norm_one(y));
        std::vector<double> sign(n);
        for (std::size_t i = 0; i < n; ++i) sign[i] = y[i] >= 0.0 ? 1.0 : -1.0;
        const std::vector<double> z = lu.solve_transposed(sign);
        if (!all_finite(z)) return 0.0;
        std::size_t j = 0;
        double ztx = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            ztx += z[i] * x[i];
            if (std::abs(z[i]) > std::abs(z[j])) j = i;
        }
        if (std::abs(z[j]) <= ztx || j == last_index) break;
        std::fill(x.begin(), x.end(), 0.0);
        x[j] = 1.0;
        last_index = j;
    }

    // Higham's alternating test vector catches cases the iteration underestimates.
    std::vector<double> alt(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double magnitude = n > 1 ? 1.0 + static_cast<double>(i) / static_cast<double>(n - 1) : 1.0;
        alt[i] = (i % 2 == 0) ? magnitude : -magnitude;
    }
    const std::vector<double> w = lu.solve(alt);
    if (!all_finite(w)) return 0.0;
    estimate = std::max(estimate, 2.0 * norm_one(w) / (3.0 * static_cast<double>(n)));

    if (!std::isfinite(estimate) || estimate == 0.0) return 0.0;
    return std::clamp(1.0 / (anorm * estimate), 0.0, 1.0);
}

std::optional<std::vector<double>> solve_tridiagonal(const DenseMatrix& matrix, std::span<const double> rhs,
                                                     double floor) {
    const std::size_t n = matrix.size();
    if (rhs.size() != n) throw std::invalid_argument("solve_tridiagonal: size mismatch");
    if (n == 0) return std::vector<double>{};
    if (n == 1) {
        if (std::abs(matrix(0, 0)) <= floor) return std::nullopt;
        return std::vector<double>{rhs[0] / matrix(0, 0)};
    }

    std::vector<double> dl(n - 1), d(n), du(n - 1), du2(n > 2 ? n - 2 : 0, 0.0);
    std::vector<bool> swapped(n - 1, false);
    for (std::size_t i = 0; i < n; ++i) d[i] = matrix(i, i);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        dl[i] = matrix(i + 1, i);
        du[i] = matrix(i, i + 1);
    }

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] != 0.0) {
                const double factor = dl[i] / d[i];
                dl[i] = factor;
                d[i + 1] -= factor * du[i];
            }
        } else {
            const double factor = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = factor;
            const double upper = du[i];
            du[i] = d[i + 1];
            d[i + 1] = upper - factor * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -factor * du[i + 1];
            }
            swapped[i] = true;
        }
    }
    for (double pivot : d) {
        if (std::abs(pivot) <= floor) return std::nullopt;
    }

    std::vector<double> x(rhs.begin(), rhs.end());
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!swapped[i]) {
            x[i + 1] -= dl[i] * x[i];
        } else {
            const double upper = x[i];
            x[i] = x[i + 1];
            x[i + 1] = upper - dl[i] * x[i];
        }
    }
    x[n - 1] /= d[n - 1];
    x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) {
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / d[i];
    }
    return x;
}

double relative_residual(const DenseMatrix& matrix, std::span<const double> x, std::span<const double> rhs) {
    const std::vector<double> ax = matrix.multiply(x);
    double r = 0.0;
    for (std::size_t i = 0; i < ax.size(); ++i) r = std::max(r, std::abs(ax[i] - rhs[i]));
    const double scale = matrix.norm_inf() * norm_inf(x) + norm_inf(rhs);
    return scale == 0.0 ? r : r / scale;
}

SolveReport lu_solve_dense(const DenseMatrix& matrix, std::span<const double> rhs) {
    if (rhs.size() != matrix.size()) throw std::invalid_argument("lu_solve: size mismatch");
    SolveReport report;
    report.path = SolvePath::Dense;
    report.rcond = rcond_estimate(matrix);
    const LuFactorization lu(matrix);
    if (lu.min_pivot() <= pivot_floor(matrix) || report.rcond < kRcondFloor) {
        report.singular = true;
        return report;
    }
    report.solution = lu.solve(rhs);
    return report;
}

SolveReport lu_solve(const LinearSystem& system) {
    const DenseMatrix& a = system.matrix;
    if (system.rhs.size() != a.size()) throw std::invalid_argument("lu_solve: size mismatch");
    if (a.bandwidth() > 1) return lu_solve_dense(a, system.rhs);

    SolveReport report;
    report.path = SolvePath::Tridiagonal;
    report.rcond = rcond_estimate(a);
    auto x = solve_tridiagonal(a, system.rhs, pivot_floor(a));
    if (!x || report.rcond < kRcondFloor) {
        report.singular = true;
        return report;
    }
    report.solution = std::move(*x);
    return report;
}

}  // namespace femvar
