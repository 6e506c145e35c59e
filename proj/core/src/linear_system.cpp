#include "femvar/linear_system.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace femvar {

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

double DenseMatrix::norm_inf() const {
    double norm = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = 0.0;
        for (double v : row(i)) sum += std::abs(v);
        norm = std::max(norm, sum);
    }
    return norm;
}

double DenseMatrix::norm_one() const {
    double norm = 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n_; ++i) sum += std::abs((*this)(i, j));
        norm = std::max(norm, sum);
    }
    return norm;
}

std::size_t DenseMatrix::bandwidth() const {
    std::size_t width = 0;
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if ((*this)(i, j) != 0.0) width = std::max(width, i > j ? i - j : j - i);
        }
    }
    return width;
}

std::vector<double> DenseMatrix::multiply(std::span<const double> x) const {
    if (x.size() != n_) throw std::invalid_argument("DenseMatrix::multiply: size mismatch");
    std::vector<double> y(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n_; ++j) sum += (*this)(i, j) * x[j];
        y[i] = sum;
    }
    return y;
}

}  // namespace femvar
