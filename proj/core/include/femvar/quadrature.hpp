#pragma once

#include <functional>
#include <vector>

#include "femvar/mesh.hpp"

namespace femvar {

/// Gauss-Legendre rule on [-1, 1]. Exact for polynomials of degree <= 2*order - 1.
struct QuadratureRule {
    int order = 0;
    std::vector<double> points;
    std::vector<double> weights;
};

inline constexpr int kMinQuadratureOrder = 1;
inline constexpr int kMaxQuadratureOrder = 5;
inline constexpr int kDefaultQuadratureOrder = 2;

/// Closed-form abscissae and weights for 1 <= n <= 5. Throws std::invalid_argument otherwise.
QuadratureRule gauss_legendre(int n);

/// Integrates f over element `element` of `mesh` with the affine map from [-1, 1].
double integrate_on_element(const std::function<double(double)>& integrand, int element,
                            const Mesh1D& mesh, const QuadratureRule& rule);

}  // namespace femvar
