#include "femvar/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace femvar {

Mesh1D::Mesh1D(double a, double b, int n_elements)
    : a_(a), b_(b), n_elements_(n_elements), element_length_(0.0) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a)) {
        throw std::invalid_argument("mesh: domain requires finite a < b, got [" + std::to_string(a) +
                                    ", " + std::to_string(b) + "]");
    }
    if (n_elements < 2) {
        throw std::invalid_argument("mesh: need at least 2 elements for an interior unknown, got " +
                                    std::to_string(n_elements));
    }
    element_length_ = (b - a) / n_elements;
    nodes_.resize(static_cast<std::size_t>(n_elements) + 1);
    for (int i = 0; i < n_elements; ++i) {
        nodes_[static_cast<std::size_t>(i)] = a + i * element_length_;
    }
    nodes_.back() = b;
}

double Mesh1D::to_physical(int element, double xi) const {
    if (element < 0 || element >= n_elements_) {
        throw std::out_of_range("mesh: element index " + std::to_string(element) + " out of range");
    }
    const double left = nodes_[static_cast<std::size_t>(element)];
    const double right = nodes_[static_cast<std::size_t>(element) + 1];
    // Clamp guards against a one-ulp overshoot when right - left is inexact.
    return std::clamp(left + xi * (right - left), left, right);
}

Mesh1D build_uniform_mesh(double a, double b, int n_elements) { return Mesh1D(a, b, n_elements); }

double shape_value(LocalNode local, double xi) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw std::domain_error("shape_value: reference coordinate " + std::to_string(xi) +
                                " outside [0, 1]");
    }
    return local == LocalNode::Left ? 1.0 - xi : xi;
}

double shape_grad_reference(LocalNode local) noexcept { return local == LocalNode::Left ? -1.0 : 1.0; }

double shape_grad_physical(LocalNode local, const Mesh1D& mesh) noexcept {
    return shape_grad_reference(local) / mesh.element_length();
}

}  // namespace femvar
