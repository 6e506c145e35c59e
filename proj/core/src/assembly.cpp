#include "femvar/assembly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace femvar {

std::string_view to_string(MethodKind method) noexcept {
    switch (method) {
        case MethodKind::SG: return "SG";
        case MethodKind::C: return "C";
        case MethodKind::LS: return "LS";
        case MethodKind::GLS: return "GLS";
        case MethodKind::CG: return "CG";
        case MethodKind::CLS: return "CLS";
        case MethodKind::CGLS: return "CGLS";
    }
    return "?";
}

std::optional<MethodKind> parse_method(std::string_view name) noexcept {
    for (MethodKind m : kAllMethods) {
        const std::string_view canonical = to_string(m);
        if (canonical.size() == name.size() &&
            std::equal(name.begin(), name.end(), canonical.begin(), [](char x, char y) {
                return std::toupper(static_cast<unsigned char>(x)) == y;
            })) {
            return m;
        }
    }
    return std::nullopt;
}

WeightRecipe recipe(MethodKind method) noexcept {
    switch (method) {
        case MethodKind::SG: return {.galerkin = true};
        case MethodKind::C: return {.collocation = true};
        case MethodKind::LS: return {.least_squares = true};
        case MethodKind::GLS: return {.galerkin = true, .least_squares = true, .tau_scaled = true};
        case MethodKind::CG: return {.galerkin = true, .collocation = true};
        case MethodKind::CLS: return {.collocation = true, .least_squares = true, .tau_scaled = true};
        case MethodKind::CGLS:
            return {.galerkin = true, .collocation = true, .least_squares = true, .tau_scaled = true};
    }
    return {};
}

double tau(double pe, double element_length) {
    if (!(element_length > 0.0)) {
        throw std::invalid_argument("tau: element length must be positive, got " + std::to_string(element_length));
    }
    if (!(pe >= 0.0)) {
        throw std::invalid_argument("tau: Peclet number must be >= 0, got " + std::to_string(pe));
    }
    const double convective = 2.0 * pe / element_length;
    const double diffusive = 4.0 / (element_length * element_length);
    return 1.0 / std::sqrt(convective * convective + diffusive * diffusive);
}

ElementMatrix element_matrix(double pe, int element, const Mesh1D& mesh, const QuadratureRule& rule,
                             double galerkin_scale, double ls_scale) {
    const double left = mesh.node(element);
    const double h = mesh.element_length();
    ElementMatrix k{};
    for (LocalNode i : kLocalNodes) {
        const double dNi = shape_grad_physical(i, mesh);
        const double d2Ni = shape_second_derivative(i);
        for (LocalNode j : kLocalNodes) {
            const double dNj = shape_grad_physical(j, mesh);
            auto integrand = [&](double x) {
                const double xi = std::clamp((x - left) / h, 0.0, 1.0);
                const double w = galerkin_scale * shape_value(i, xi) + ls_scale * (pe * dNi - d2Ni);
                // d/dx of the operator part needs third derivatives, which vanish.
                const double dw = galerkin_scale * dNi + ls_scale * pe * d2Ni;
                return pe * dNj * w + dNj * dw;
            };
            k[static_cast<int>(i)][static_cast<int>(j)] = integrate_on_element(integrand, element, mesh, rule);
        }
    }
    return k;
}

ElementMatrix element_matrix_galerkin(double pe, int element, const Mesh1D& mesh, const QuadratureRule& rule) {
    return element_matrix(pe, element, mesh, rule, 1.0, 0.0);
}

ElementMatrix element_matrix_leastsquares(double pe, int element, const Mesh1D& mesh,
                                          const QuadratureRule& rule) {
    return element_matrix(pe, element, mesh, rule, 0.0, 1.0);
}

std::vector<RowEntry> collocation_row(double pe, int node, const Mesh1D& mesh) {
    if (node <= 0 || node >= mesh.n_nodes() - 1) {
        throw std::out_of_range("collocation_row: node " + std::to_string(node) + " is not interior");
    }
    // Slopes of the left element (node-1, node) and right element (node, node+1).
    const double dN_left = shape_grad_physical(LocalNode::Left, mesh);
    const double dN_right = shape_grad_physical(LocalNode::Right, mesh);
    std::array<double, 3> slope{};  // coefficients on node-1, node, node+1
    slope[0] += 0.5 * dN_left;
    slope[1] += 0.5 * dN_right;
    slope[1] += 0.5 * dN_left;
    slope[2] += 0.5 * dN_right;

    std::vector<RowEntry> row;
    row.reserve(3);
    for (int k = 0; k < 3; ++k) {
        row.push_back({node - 1 + k, pe * slope[static_cast<std::size_t>(k)]});
    }
    return row;
}

LinearSystem assemble(MethodKind method, double pe, const Mesh1D& mesh, const QuadratureRule& rule) {
    const WeightRecipe parts = recipe(method);
    const double stabilization = tau(pe, mesh.element_length());
    const double galerkin_scale = parts.galerkin ? 1.0 : 0.0;
    const double ls_scale = parts.least_squares ? (parts.tau_scaled ? stabilization : 1.0) : 0.0;

    const auto n = static_cast<std::size_t>(mesh.n_nodes());
    LinearSystem system;
    system.matrix = DenseMatrix(n);
    system.rhs.assign(n, 0.0);
    system.tau = stabilization;
    system.constraints = {DirichletConstraint{0, 0.0}, DirichletConstraint{mesh.n_nodes() - 1, 1.0}};

    if (parts.galerkin || parts.least_squares) {
        for (int e = 0; e < mesh.n_elements(); ++e) {
            const ElementMatrix k = element_matrix(pe, e, mesh, rule, galerkin_scale, ls_scale);
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    system.matrix(static_cast<std::size_t>(e + i), static_cast<std::size_t>(e + j)) += k[i][j];
                }
            }
        }
    }
    if (parts.collocation) {
        for (int node = 1; node < mesh.n_nodes() - 1; ++node) {
            for (const RowEntry& entry : collocation_row(pe, node, mesh)) {
                system.matrix(static_cast<std::size_t>(node), static_cast<std::size_t>(entry.column)) += entry.value;
            }
        }
    }
    return system;
}

LinearSystem apply_dirichlet(LinearSystem system, double left_value, double right_value) {
    DenseMatrix& a = system.matrix;
    const std::size_t n = a.size();
    if (n < 3) throw std::invalid_argument("apply_dirichlet: system has no interior unknowns");
    system.constraints[0] = {0, left_value};
    system.constraints[1] = {static_cast<int>(n - 1), right_value};

    for (const DirichletConstraint& c : system.constraints) {
        const auto col = static_cast<std::size_t>(c.node);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col) continue;
            system.rhs[i] -= a(i, col) * c.value;
            a(i, col) = 0.0;
        }
    }
    for (const DirichletConstraint& c : system.constraints) {
        const auto r = static_cast<std::size_t>(c.node);
        for (std::size_t j = 0; j < n; ++j) a(r, j) = 0.0;
        a(r, r) = 1.0;
        system.rhs[r] = c.value;
    }
    system.constrained = true;
    return system;
}

}  // namespace femvar
