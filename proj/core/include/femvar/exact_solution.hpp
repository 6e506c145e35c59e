#pragma once

namespace femvar {

/// Steady convection-diffusion T'' = pe * T' on [a, b] with T(a) = 0, T(b) = 1.
struct ExactParams {
    double pe = 0.0;
    double a = 1.0;
    double b = 2.0;
};

/// Below this value of pe*(b-a) the linear limit is returned. The switch
/// discontinuity is bounded by pe*(b-a)/8.
inline constexpr double kLinearLimitThreshold = 1e-10;

/// exp(pe*(b-a)) overflows past this.
inline constexpr double kOverflowThreshold = 700.0;

/// Throws std::invalid_argument for pe < 0, b <= a or pe*(b-a) > 700.
void validate(const ExactParams& params);

/// (exp(pe*(x-a)) - 1) / (exp(pe*(b-a)) - 1), evaluated with expm1.
/// Throws std::domain_error for x outside [a, b].
double exact_T(double x, const ExactParams& params);

struct OdeResidualCheck {
    double max_residual = 0.0;           ///< max |T_xx - pe*T_x| over the samples
    double max_second_derivative = 0.0;  ///< max |T_xx| over the same samples
};

/// Central finite-difference check that exact_T solves the ODE.
///
/// Samples are spread uniformly over the open interval (a, b - exclude_right*(b-a)).
/// Throws std::invalid_argument if a sample +/- fd_step would leave (a, b).
OdeResidualCheck verify_exact_satisfies_ode(const ExactParams& params, int n_samples, double fd_step,
                                            double exclude_right = 0.0);

}  // namespace femvar
