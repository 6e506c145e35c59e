#pragma once

#include <span>
#include <vector>

namespace femvar {

/// Uniform partition of [a, b] into equal-length linear elements.
///
/// Element e spans nodes e and e+1. The last node is pinned to b so that the
/// boundary coordinate is exact regardless of rounding in a + i*h.
class Mesh1D {
public:
    /// Throws std::invalid_argument if b <= a or n_elements < 2.
    Mesh1D(double a, double b, int n_elements);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    int n_elements() const noexcept { return n_elements_; }
    int n_nodes() const noexcept { return n_elements_ + 1; }
    double element_length() const noexcept { return element_length_; }

    std::span<const double> nodes() const noexcept { return nodes_; }
    double node(int i) const { return nodes_.at(static_cast<std::size_t>(i)); }

    /// Physical coordinate of reference point xi in [0, 1] on element e.
    double to_physical(int element, double xi) const;

private:
    double a_;
    double b_;
    int n_elements_;
    double element_length_;
    std::vector<double> nodes_;
};

Mesh1D build_uniform_mesh(double a, double b, int n_elements);

/// Local node of a two-node linear element.
enum class LocalNode : int { Left = 0, Right = 1 };

inline constexpr LocalNode kLocalNodes[2] = {LocalNode::Left, LocalNode::Right};

/// Hat function restricted to the reference element [0, 1]:
/// N_left(xi) = 1 - xi, N_right(xi) = xi. Throws for xi outside [0, 1].
double shape_value(LocalNode local, double xi);

/// dN/dxi on the reference element: -1 or +1.
double shape_grad_reference(LocalNode local) noexcept;

/// dN/dx = (dN/dxi) / l_e, constant on every element of a uniform mesh.
double shape_grad_physical(LocalNode local, const Mesh1D& mesh) noexcept;

/// Linear shape functions have no curvature inside an element.
inline constexpr double shape_second_derivative(LocalNode) noexcept { return 0.0; }

}  // namespace femvar
