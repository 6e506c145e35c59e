#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "femvar/assembly.hpp"
#include "femvar/linear_solver.hpp"
#include "support/oracles.hpp"

namespace femvar {
namespace {

void expect_matrix_near(const ElementMatrix& actual, const ElementMatrix& expected, double tol) {
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) EXPECT_NEAR(actual[i][j], expected[i][j], tol) << i << "," << j;
    }
}

DenseMatrix plus(const DenseMatrix& a, const DenseMatrix& b, double b_scale = 1.0) {
    DenseMatrix c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) + b_scale * b(i, j);
    }
    return c;
}

TEST(Method, NamesRoundTrip) {
    for (MethodKind m : kAllMethods) EXPECT_EQ(parse_method(to_string(m)), m);
    EXPECT_EQ(parse_method("gls"), MethodKind::GLS);
    EXPECT_EQ(parse_method("Cgls"), MethodKind::CGLS);
    EXPECT_FALSE(parse_method("xyz").has_value());
    EXPECT_FALSE(parse_method("").has_value());
}

TEST(Method, CompositesDecomposeIntoPrimitives) {
    EXPECT_TRUE(recipe(MethodKind::SG).galerkin);
    EXPECT_TRUE(recipe(MethodKind::C).collocation);
    EXPECT_TRUE(recipe(MethodKind::LS).least_squares);
    EXPECT_FALSE(recipe(MethodKind::LS).tau_scaled);
    const WeightRecipe cgls = recipe(MethodKind::CGLS);
    EXPECT_TRUE(cgls.galerkin && cgls.collocation && cgls.least_squares && cgls.tau_scaled);
    const WeightRecipe cls = recipe(MethodKind::CLS);
    EXPECT_TRUE(!cls.galerkin && cls.collocation && cls.least_squares && cls.tau_scaled);
}

TEST(Tau, Examples) {
    EXPECT_NEAR(tau(0.0, 0.04), 4.0e-4, 1e-18);
    // 40-digit references for ((2 pe / h)^2 + (4 / h^2)^2)^(-1/2).
    EXPECT_NEAR(tau(1.0, 0.04) / 3.999200239920027989923694627714605593874e-4, 1.0, 1e-14);
    EXPECT_NEAR(tau(500.0, 0.04) / 3.98014876083995654266109501495428759879e-5, 1.0, 1e-14);
    EXPECT_THROW(tau(1.0, 0.0), std::invalid_argument);
    EXPECT_THROW(tau(1.0, -0.1), std::invalid_argument);
    EXPECT_THROW(tau(-1.0, 0.1), std::invalid_argument);
}

TEST(Tau, PositiveAndNonincreasing) {
    for (double h : {0.01, 0.04, 0.5, 1.0}) {
        double previous = tau(0.0, h);
        for (int k = 1; k <= 100; ++k) {
            const double t = tau(5.0 * k, h);
            EXPECT_GT(t, 0.0);
            EXPECT_LE(t, previous);
            previous = t;
        }
    }
}

TEST(ElementMatrix, GalerkinSymbolic) {
    const QuadratureRule rule = gauss_legendre(2);
    const Mesh1D unit(0.0, 2.0, 2);
    expect_matrix_near(element_matrix_galerkin(0.0, 0, unit, rule), {{{1, -1}, {-1, 1}}}, 1e-15);
    expect_matrix_near(element_matrix_galerkin(1.0, 0, unit, rule), {{{0.5, -0.5}, {-1.5, 1.5}}}, 1e-15);
}

TEST(ElementMatrix, ConvectionRowSumsVanish) {
    const QuadratureRule rule = gauss_legendre(2);
    const Mesh1D mesh(1.0, 2.0, 25);
    for (double pe : {1.0, 50.0, 500.0}) {
        for (int e = 0; e < 25; ++e) {
            const ElementMatrix full = element_matrix_galerkin(pe, e, mesh, rule);
            const ElementMatrix diffusion = element_matrix_galerkin(0.0, e, mesh, rule);
            for (int i = 0; i < 2; ++i) {
                const double conv_row = (full[i][0] - diffusion[i][0]) + (full[i][1] - diffusion[i][1]);
                EXPECT_NEAR(conv_row, 0.0, 1e-12 * pe);
            }
        }
    }
}

TEST(ElementMatrix, LeastSquaresSymbolic) {
    const QuadratureRule rule = gauss_legendre(2);
    expect_matrix_near(element_matrix_leastsquares(0.0, 0, Mesh1D(0.0, 1.0, 2), rule), {{{0, 0}, {0, 0}}}, 0.0);
    expect_matrix_near(element_matrix_leastsquares(2.0, 0, Mesh1D(0.0, 1.0, 2), rule), {{{8, -8}, {-8, 8}}}, 1e-13);
    expect_matrix_near(element_matrix_leastsquares(1.0, 1, Mesh1D(0.0, 2.0, 2), rule), {{{1, -1}, {-1, 1}}}, 1e-15);
}

TEST(Collocation, RowCoefficients) {
    const Mesh1D quarter(1.0, 2.0, 4);
    const auto row = collocation_row(1.0, 2, quarter);
    ASSERT_EQ(row.size(), 3u);
    EXPECT_EQ(row[0].column, 1);
    EXPECT_NEAR(row[0].value, -2.0, 1e-15);
    EXPECT_EQ(row[1].value, 0.0);
    EXPECT_NEAR(row[2].value, 2.0, 1e-15);

    for (const RowEntry& e : collocation_row(0.0, 1, quarter)) EXPECT_EQ(e.value, 0.0);
    for (double pe : {0.3, 7.0, 500.0}) {
        double sum = 0.0;
        for (const RowEntry& e : collocation_row(pe, 3, quarter)) sum += e.value;
        EXPECT_EQ(sum, 0.0);
    }
    EXPECT_THROW(collocation_row(1.0, 0, quarter), std::out_of_range);
    EXPECT_THROW(collocation_row(1.0, 4, quarter), std::out_of_range);
}

TEST(Assemble, PureDiffusionLaplacianRow) {
    const LinearSystem s = assemble(MethodKind::SG, 0.0, Mesh1D(0.0, 1.0, 2), gauss_legendre(2));
    EXPECT_NEAR(s.matrix(1, 0), -2.0, 1e-14);
    EXPECT_NEAR(s.matrix(1, 1), 4.0, 1e-14);
    EXPECT_NEAR(s.matrix(1, 2), -2.0, 1e-14);
}

TEST(Assemble, AdditivityOfCompositeWeights) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pe_dist(0.0, 600.0);
    std::uniform_int_distribution<int> n_dist(2, 120);
    const QuadratureRule rule = gauss_legendre(2);
    for (int trial = 0; trial < 10; ++trial) {
        const double pe = pe_dist(rng);
        const Mesh1D mesh(1.0, 2.0, n_dist(rng));
        const double t = tau(pe, mesh.element_length());
        const DenseMatrix sg = assemble(MethodKind::SG, pe, mesh, rule).matrix;
        const DenseMatrix c = assemble(MethodKind::C, pe, mesh, rule).matrix;
        const DenseMatrix ls = assemble(MethodKind::LS, pe, mesh, rule).matrix;
        EXPECT_LE(testing::max_elementwise_relative(assemble(MethodKind::GLS, pe, mesh, rule).matrix, plus(sg, ls, t)),
                  1e-13);
        EXPECT_LE(testing::max_elementwise_relative(assemble(MethodKind::CG, pe, mesh, rule).matrix, plus(c, sg)),
                  1e-13);
        EXPECT_LE(testing::max_elementwise_relative(assemble(MethodKind::CLS, pe, mesh, rule).matrix, plus(c, ls, t)),
                  1e-13);
        EXPECT_LE(testing::max_elementwise_relative(assemble(MethodKind::CGLS, pe, mesh, rule).matrix,
                                                    plus(plus(c, sg), ls, t)),
                  1e-13);
    }
}

TEST(Assemble, LeastSquaresIsScaledDiffusion) {
    const QuadratureRule rule = gauss_legendre(2);
    const Mesh1D mesh(1.0, 2.0, 30);
    const DenseMatrix diffusion = assemble(MethodKind::SG, 0.0, mesh, rule).matrix;
    for (double pe : {0.5, 50.0, 500.0}) {
        DenseMatrix scaled(diffusion.size());
        for (std::size_t i = 0; i < scaled.size(); ++i) {
            for (std::size_t j = 0; j < scaled.size(); ++j) scaled(i, j) = pe * pe * diffusion(i, j);
        }
        EXPECT_LE(testing::max_elementwise_relative(assemble(MethodKind::LS, pe, mesh, rule).matrix, scaled), 1e-13);
    }
}

TEST(Assemble, GalerkinFamilyIsTridiagonal) {
    const Mesh1D mesh(1.0, 2.0, 20);
    for (MethodKind m : {MethodKind::SG, MethodKind::GLS, MethodKind::LS}) {
        EXPECT_EQ(assemble(m, 50.0, mesh, gauss_legendre(2)).matrix.bandwidth(), 1u);
    }
}

TEST(Assemble, IndependentOfQuadratureOrderAboveOne) {
    for (int n : {17, 25}) {
        const Mesh1D mesh(1.0, 2.0, n);
        for (MethodKind m : kAllMethods) {
            for (double pe : {0.0, 1.0, 50.0, 100.0, 500.0}) {
                const DenseMatrix two = assemble(m, pe, mesh, gauss_legendre(2)).matrix;
                for (int order : {3, 4, 5}) {
                    const DenseMatrix higher = assemble(m, pe, mesh, gauss_legendre(order)).matrix;
                    EXPECT_LE(testing::max_elementwise_relative(two, higher, 1e-12), 1e-12)
                        << to_string(m) << " " << pe << " " << n << " " << order;
                }
            }
        }
    }
}

TEST(Assemble, CellPecletOneCancelsOffDiagonal) {
    // pe h / 2 = 1 makes the SG super-diagonal pe/2 - 1/h vanish.
    const DenseMatrix a = assemble(MethodKind::SG, 50.0, Mesh1D(1.0, 2.0, 25), gauss_legendre(2)).matrix;
    for (std::size_t i = 1; i + 2 < a.size(); ++i) EXPECT_NEAR(a(i, i + 1), 0.0, 1e-12 * std::abs(a(i, i)));
}

TEST(ApplyDirichlet, IdentityRowsAndEliminatedColumns) {
    const Mesh1D mesh(1.0, 2.0, 6);
    const LinearSystem s = apply_dirichlet(assemble(MethodKind::GLS, 10.0, mesh, gauss_legendre(2)), 0.0, 1.0);
    EXPECT_TRUE(s.constrained);
    const std::size_t last = 6;
    for (std::size_t j = 0; j <= last; ++j) {
        EXPECT_EQ(s.matrix(0, j), j == 0 ? 1.0 : 0.0);
        EXPECT_EQ(s.matrix(last, j), j == last ? 1.0 : 0.0);
    }
    for (std::size_t i = 1; i < last; ++i) {
        EXPECT_EQ(s.matrix(i, 0), 0.0);
        EXPECT_EQ(s.matrix(i, last), 0.0);
    }
    EXPECT_EQ(s.rhs[0], 0.0);
    EXPECT_EQ(s.rhs[last], 1.0);
    EXPECT_NE(s.rhs[last - 1], 0.0);
}

TEST(ApplyDirichlet, SymmetricInteriorStaysSymmetric) {
    const Mesh1D mesh(1.0, 2.0, 9);
    const LinearSystem s = apply_dirichlet(assemble(MethodKind::LS, 3.0, mesh, gauss_legendre(2)));
    for (std::size_t i = 0; i < s.matrix.size(); ++i) {
        for (std::size_t j = 0; j < s.matrix.size(); ++j) EXPECT_EQ(s.matrix(i, j), s.matrix(j, i));
    }
}

TEST(ApplyDirichlet, PureDiffusionGivesLinearInterpolant) {
    for (int n : {2, 5, 40}) {
        const Mesh1D mesh(1.0, 2.0, n);
        const SolveReport r = lu_solve(apply_dirichlet(assemble(MethodKind::SG, 0.0, mesh, gauss_legendre(2))));
        ASSERT_FALSE(r.singular);
        for (int i = 0; i <= n; ++i) EXPECT_NEAR(r.solution[static_cast<std::size_t>(i)], mesh.node(i) - 1.0, 1e-13);
    }
}

}  // namespace
}  // namespace femvar
