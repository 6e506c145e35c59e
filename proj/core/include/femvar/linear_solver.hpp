#pragma once

#include <optional>
#include <span>
#include <vector>

#include "femvar/linear_system.hpp"

namespace femvar {

/// Below this reciprocal condition number a system is reported singular.
inline constexpr double kRcondFloor = 1e-12;

enum class SolvePath { Tridiagonal, Dense };

struct SolveReport {
    std::vector<double> solution;  ///< empty when singular
    double rcond = 0.0;
    bool singular = false;
    SolvePath path = SolvePath::Dense;
};

/// LU factors with partial pivoting, stored in place (unit lower L below the diagonal).
class LuFactorization {
public:
    explicit LuFactorization(DenseMatrix matrix);

    std::size_t size() const noexcept { return lu_.size(); }
    /// Smallest |U_kk|; exactly zero when elimination breaks down.
    double min_pivot() const noexcept { return min_pivot_; }
    bool breakdown() const noexcept { return min_pivot_ == 0.0; }

    std::vector<double> solve(std::span<const double> rhs) const;
    std::vector<double> solve_transposed(std::span<const double> rhs) const;

private:
    DenseMatrix lu_;
    std::vector<std::size_t> pivots_;
    double min_pivot_ = 0.0;
};

/// Estimate of 1 / (||A||_1 ||A^-1||_1) by Hager's method with Higham's
/// alternative lower bound. Returns 0 when the factorization has a zero pivot.
double rcond_estimate(const DenseMatrix& matrix);

/// Tridiagonal LU with partial pivoting (second superdiagonal from row swaps).
/// Returns nullopt if a pivot falls below pivot_floor.
std::optional<std::vector<double>> solve_tridiagonal(const DenseMatrix& matrix, std::span<const double> rhs,
                                                     double pivot_floor);

/// Solves a constrained system. Bandwidth-1 matrices go through the tridiagonal
/// path, everything else through dense LU. The system is flagged singular when
/// a pivot drops below eps * ||A||_inf * n or rcond < kRcondFloor.
SolveReport lu_solve(const LinearSystem& system);

/// Dense path only, for callers that want to bypass bandwidth detection.
SolveReport lu_solve_dense(const DenseMatrix& matrix, std::span<const double> rhs);

/// ||A x - b||_inf / (||A||_inf ||x||_inf + ||b||_inf)
double relative_residual(const DenseMatrix& matrix, std::span<const double> x, std::span<const double> rhs);

}  // namespace femvar
