#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

namespace femvar {

/// Row-major square matrix. Problem sizes stay in the low hundreds, so the
/// dense layout is used for assembly and condition estimation alike.
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    static DenseMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

    double norm_inf() const;
    double norm_one() const;

    /// Largest |i - j| over nonzero entries.
    std::size_t bandwidth() const;

    std::vector<double> multiply(std::span<const double> x) const;

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

struct DirichletConstraint {
    int node = 0;
    double value = 0.0;
};

/// Global system A * T = rhs over all mesh nodes.
struct LinearSystem {
    DenseMatrix matrix;
    std::vector<double> rhs;
    std::array<DirichletConstraint, 2> constraints{};
    double tau = 0.0;
    bool constrained = false;
};

}  // namespace femvar
