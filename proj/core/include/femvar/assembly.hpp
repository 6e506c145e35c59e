#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "femvar/linear_system.hpp"
#include "femvar/mesh.hpp"
#include "femvar/quadrature.hpp"

namespace femvar {

/// Weighted-residual variant. The order here is the canonical report order.
enum class MethodKind { SG, C, LS, GLS, CG, CLS, CGLS };

inline constexpr std::array<MethodKind, 7> kAllMethods = {MethodKind::SG,  MethodKind::C,   MethodKind::LS,
                                                          MethodKind::GLS, MethodKind::CG,  MethodKind::CLS,
                                                          MethodKind::CGLS};

std::string_view to_string(MethodKind method) noexcept;

/// Case-insensitive lookup ("gls", "GLS", ...).
std::optional<MethodKind> parse_method(std::string_view name) noexcept;

/// Which primitive weights make up a method's test function
///   w_i = [galerkin] N_i + [collocation] delta_i + ls_scale * L(N_i).
struct WeightRecipe {
    bool galerkin = false;
    bool collocation = false;
    bool least_squares = false;
    bool tau_scaled = false;  ///< least-squares part carries the stabilization factor
};

WeightRecipe recipe(MethodKind method) noexcept;

/// Stabilization parameter ((2 pe / l_e)^2 + (4 / l_e^2)^2)^(-1/2).
/// Throws std::invalid_argument for l_e <= 0 or pe < 0.
double tau(double pe, double element_length);

using ElementMatrix = std::array<std::array<double, 2>, 2>;

/// K_ij = integral over the element of pe * N_j' * w_i + N_j' * w_i' with
/// w_i = galerkin_scale * N_i + ls_scale * (pe * N_i' - N_i'').
/// Row index i is the test function, column j the trial function.
ElementMatrix element_matrix(double pe, int element, const Mesh1D& mesh, const QuadratureRule& rule,
                             double galerkin_scale, double ls_scale);

ElementMatrix element_matrix_galerkin(double pe, int element, const Mesh1D& mesh, const QuadratureRule& rule);
ElementMatrix element_matrix_leastsquares(double pe, int element, const Mesh1D& mesh,
                                          const QuadratureRule& rule);

struct RowEntry {
    int column = 0;
    double value = 0.0;
};

/// Residual pe * T'(x_i) - T''(x_i) at interior node i, written in nodal unknowns.
/// T' at the node takes the mean of the two adjacent element slopes; T'' vanishes
/// for piecewise-linear trial functions. Throws std::out_of_range for boundary nodes.
std::vector<RowEntry> collocation_row(double pe, int node, const Mesh1D& mesh);

/// Global system before boundary conditions; rhs is zero.
LinearSystem assemble(MethodKind method, double pe, const Mesh1D& mesh, const QuadratureRule& rule);

/// Replaces the two boundary rows by identity rows and moves boundary columns
/// into the rhs, so interior rows only couple interior unknowns.
LinearSystem apply_dirichlet(LinearSystem system, double left_value = 0.0, double right_value = 1.0);

}  // namespace femvar
