#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "femvar/exact_solution.hpp"

namespace femvar {
namespace {

TEST(ExactSolution, BoundaryValues) {
    for (double pe : {0.0, 1e-12, 1e-3, 1.0, 50.0, 100.0, 500.0, 699.0}) {
        const ExactParams p{pe, 1.0, 2.0};
        EXPECT_EQ(exact_T(1.0, p), 0.0) << pe;
        EXPECT_EQ(exact_T(2.0, p), 1.0) << pe;
    }
}

TEST(ExactSolution, Examples) {
    EXPECT_EQ(exact_T(2.0, {100.0, 1.0, 2.0}), 1.0);
    EXPECT_EQ(exact_T(1.5, {0.0, 1.0, 2.0}), 0.5);
    // (e^0.5 - 1) / (e - 1), 40-digit reference value.
    EXPECT_NEAR(exact_T(1.5, {1.0, 1.0, 2.0}), 0.3775406687981454353610994342544915212467, 1e-15);
}

TEST(ExactSolution, GeneralInterval) {
    const ExactParams p{3.0, -1.0, 0.5};
    const double x = 0.2;
    EXPECT_NEAR(exact_T(x, p), (std::exp(3.0 * 1.2) - 1.0) / (std::exp(3.0 * 1.5) - 1.0), 1e-14);
}

TEST(ExactSolution, Errors) {
    EXPECT_THROW(exact_T(0.99, {1.0, 1.0, 2.0}), std::domain_error);
    EXPECT_THROW(exact_T(2.01, {1.0, 1.0, 2.0}), std::domain_error);
    EXPECT_THROW(exact_T(1.5, {-1.0, 1.0, 2.0}), std::invalid_argument);
    EXPECT_THROW(exact_T(1.5, {701.0, 1.0, 2.0}), std::invalid_argument);
    EXPECT_THROW(exact_T(1.5, {400.0, 0.0, 2.0}), std::invalid_argument);
    EXPECT_NO_THROW(exact_T(1.5, {500.0, 1.0, 2.0}));
}

TEST(ExactSolution, MonotoneAndBounded) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> xs(1.0, 2.0);
    for (double pe : {0.0, 1.0, 50.0, 100.0, 500.0}) {
        const ExactParams p{pe, 1.0, 2.0};
        for (int k = 0; k < 500; ++k) {
            double x1 = xs(rng), x2 = xs(rng);
            if (x1 > x2) std::swap(x1, x2);
            const double t1 = exact_T(x1, p), t2 = exact_T(x2, p);
            EXPECT_LE(t1, t2);
            EXPECT_GE(t1, 0.0);
            EXPECT_LE(t2, 1.0);
        }
    }
}

TEST(ExactSolution, ContinuousAcrossLinearLimitSwitch) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> xs(1.0, 2.0);
    for (double factor : {0.5, 1.5}) {
        const ExactParams p{kLinearLimitThreshold * factor, 1.0, 2.0};
        for (int k = 0; k < 50; ++k) {
            const double x = xs(rng);
            EXPECT_NEAR(exact_T(x, p), x - 1.0, 1e-10);
        }
    }
}

TEST(ExactSolution, BoundaryLayerSharpensWithPeclet) {
    // Bisection for the x where T = 1/2.
    auto half_point = [](double pe) {
        double lo = 1.0, hi = 2.0;
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            (exact_T(mid, {pe, 1.0, 2.0}) < 0.5 ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    double previous = 0.0;
    for (double pe : {1.0, 50.0, 100.0, 500.0}) {
        const double x = half_point(pe);
        EXPECT_GT(x, previous) << pe;
        previous = x;
    }
}

TEST(ExactSolution, FiniteDifferenceResidual) {
    const OdeResidualCheck linear = verify_exact_satisfies_ode({0.0, 1.0, 2.0}, 100, 1e-5);
    EXPECT_LT(linear.max_residual, 1e-5);

    const OdeResidualCheck pe1 = verify_exact_satisfies_ode({1.0, 1.0, 2.0}, 100, 1e-5);
    EXPECT_LT(pe1.max_residual, 1e-4 * pe1.max_second_derivative);

    const OdeResidualCheck pe50 = verify_exact_satisfies_ode({50.0, 1.0, 2.0}, 100, 1e-5, 0.01);
    EXPECT_LT(pe50.max_residual, 1e-3 * pe50.max_second_derivative);
}

TEST(ExactSolution, FiniteDifferenceRejectsOversizedStep) {
    EXPECT_THROW(verify_exact_satisfies_ode({1.0, 1.0, 2.0}, 100, 0.1), std::invalid_argument);
    EXPECT_THROW(verify_exact_satisfies_ode({1.0, 1.0, 2.0}, 0, 1e-5), std::invalid_argument);
}

}  // namespace
}  // namespace femvar
