#include "femvar/exact_solution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace femvar {

void validate(const ExactParams& params) {
    if (!(params.pe >= 0.0) || !std::isfinite(params.pe)) {
        throw std::invalid_argument("exact: Peclet number must be finite and >= 0, got " +
                                    std::to_string(params.pe));
    }
    if (!(params.b > params.a)) {
        throw std::invalid_argument("exact: domain requires a < b");
    }
    if (params.pe * (params.b - params.a) > kOverflowThreshold) {
        throw std::invalid_argument("exact: pe*(b-a) = " + std::to_string(params.pe * (params.b - params.a)) +
                                    " exceeds " + std::to_string(kOverflowThreshold) +
                                    "; exp() would overflow");
    }
}

double exact_T(double x, const ExactParams& params) {
    validate(params);
    if (!(x >= params.a && x <= params.b)) {
        throw std::domain_error("exact: x = " + std::to_string(x) + " outside [" + std::to_string(params.a) +
                                ", " + std::to_string(params.b) + "]");
    }
    const double length = params.b - params.a;
    if (params.pe * length < kLinearLimitThreshold) {
        return (x - params.a) / length;
    }
    return std::expm1(params.pe * (x - params.a)) / std::expm1(params.pe * length);
}

OdeResidualCheck verify_exact_satisfies_ode(const ExactParams& params, int n_samples, double fd_step,
                                            double exclude_right) {
    validate(params);
    if (n_samples < 1 || !(fd_step > 0.0) || !(exclude_right >= 0.0 && exclude_right < 1.0)) {
        throw std::invalid_argument("exact: need n_samples >= 1, fd_step > 0, exclude_right in [0, 1)");
    }
    const double length = params.b - params.a;
    const double upper = params.b - exclude_right * length;
    const double spacing = (upper - params.a) / (n_samples + 1);
    if (params.a + spacing - fd_step <= params.a || upper - spacing + fd_step >= params.b) {
        throw std::invalid_argument("exact: fd_step too large for the sample spacing");
    }

    OdeResidualCheck check;
    const double h2 = fd_step * fd_step;
    for (int k = 1; k <= n_samples; ++k) {
        const double x = params.a + k * spacing;
        const double left = exact_T(x - fd_step, params);
        const double mid = exact_T(x, params);
        const double right = exact_T(x + fd_step, params);
        const double txx = (right - 2.0 * mid + left) / h2;
        const double tx = (right - left) / (2.0 * fd_step);
        check.max_residual = std::max(check.max_residual, std::abs(txx - params.pe * tx));
        check.max_second_derivative = std::max(check.max_second_derivative, std::abs(txx));
    }
    return check;
}

}  // namespace femvar
