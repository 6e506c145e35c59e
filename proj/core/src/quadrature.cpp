#include "femvar/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace femvar {

QuadratureRule gauss_legendre(int n) {
    QuadratureRule rule;
    rule.order = n;
    switch (n) {
        case 1:
            rule.points = {0.0};
            rule.weights = {2.0};
            break;
        case 2: {
            const double p = 1.0 / std::sqrt(3.0);
            rule.points = {-p, p};
            rule.weights = {1.0, 1.0};
            break;
        }
        case 3: {
            const double p = std::sqrt(3.0 / 5.0);
            rule.points = {-p, 0.0, p};
            rule.weights = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
            break;
        }
        case 4: {
            const double r = 2.0 / 7.0 * std::sqrt(6.0 / 5.0);
            const double inner = std::sqrt(3.0 / 7.0 - r);
            const double outer = std::sqrt(3.0 / 7.0 + r);
            const double w_inner = (18.0 + std::sqrt(30.0)) / 36.0;
            const double w_outer = (18.0 - std::sqrt(30.0)) / 36.0;
            rule.points = {-outer, -inner, inner, outer};
            rule.weights = {w_outer, w_inner, w_inner, w_outer};
            break;
        }
        case 5: {
            const double r = 2.0 * std::sqrt(10.0 / 7.0);
            const double inner = std::sqrt(5.0 - r) / 3.0;
            const double outer = std::sqrt(5.0 + r) / 3.0;
            const double w_inner = (322.0 + 13.0 * std::sqrt(70.0)) / 900.0;
            const double w_outer = (322.0 - 13.0 * std::sqrt(70.0)) / 900.0;
            rule.points = {-outer, -inner, 0.0, inner, outer};
            rule.weights = {w_outer, w_inner, 128.0 / 225.0, w_inner, w_outer};
            break;
        }
        default:
            throw std::invalid_argument("gauss_legendre: order must be in [" +
                                        std::to_string(kMinQuadratureOrder) + ", " +
                                        std::to_string(kMaxQuadratureOrder) + "], got " +
                                        std::to_string(n));
    }
    return rule;
}

double integrate_on_element(const std::function<double(double)>& integrand, int element,
                            const Mesh1D& mesh, const QuadratureRule& rule) {
    const double half_length = 0.5 * mesh.element_length();
    double sum = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q) {
        const double xi = 0.5 * (rule.points[q] + 1.0);
        sum += rule.weights[q] * integrand(mesh.to_physical(element, xi));
    }
    return sum * half_length;
}

}  // namespace femvar
