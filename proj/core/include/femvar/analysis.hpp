#pragma once

#include <optional>
#include <span>
#include <vector>

#include "femvar/assembly.hpp"
#include "femvar/linear_solver.hpp"

namespace femvar {

/// Nodes whose exact value is at or below this magnitude are left out of the
/// relative error; at x = a the ratio is 0/0.
inline constexpr double kExactFloor = 1e-12;

/// |exact - numerical| / |exact| on every node, with boundary nodes and
/// below-floor nodes reported as nullopt.
struct RelativeError {
    std::vector<std::optional<double>> per_node;
    double max = 0.0;
    bool empty = true;  ///< no node survived the exclusions
};

RelativeError absolute_relative_error(std::span<const double> numerical, std::span<const double> exact);

/// Sum of |T[i+1] - T[i]|. Throws std::invalid_argument for fewer than 2 values.
double total_variation(std::span<const double> values);

struct ErrorReport {
    std::vector<std::optional<double>> per_node_abs_rel_error;
    double max_abs_rel_error = 0.0;
    bool error_empty = false;
    double total_variation = 0.0;
    double overshoot = 0.0;   ///< max(0, max T - 1)
    double undershoot = 0.0;  ///< max(0, -min T)
};

ErrorReport error_report(std::span<const double> numerical, std::span<const double> exact);

struct Domain {
    double a = 1.0;
    double b = 2.0;
};

struct CaseRecord {
    MethodKind method = MethodKind::SG;
    double pe = 0.0;
    int n_elements = 0;
    std::vector<double> x;
    std::vector<double> exact;
    std::vector<double> solution;  ///< empty when singular
    bool singular = false;
    double rcond = 0.0;
    double tau = 0.0;
    std::optional<ErrorReport> errors;  ///< absent when singular
};

/// Assemble, constrain, solve and score one case. A singular system is data,
/// not an error: the record carries the flag and no metrics.
CaseRecord run_case(MethodKind method, double pe, int n_elements, Domain domain = {},
                    const QuadratureRule& rule = gauss_legendre(kDefaultQuadratureOrder));

struct SweepConfig {
    std::vector<MethodKind> methods{kAllMethods.begin(), kAllMethods.end()};
    std::vector<double> pe_values{1.0, 50.0, 100.0, 500.0};
    std::vector<int> element_counts{25, 50, 75, 100};
    Domain domain{};
    int quad_order = kDefaultQuadratureOrder;
};

/// Throws std::invalid_argument on empty lists, negative pe, counts < 2 or a bad domain.
void validate(const SweepConfig& config);

struct SweepResult {
    std::vector<CaseRecord> cases;  ///< ordered by (method, pe, n_elements)

    const CaseRecord* find(MethodKind method, double pe, int n_elements) const;
};

/// Runs every (method, pe, n_elements) triple. Cases are independent and may
/// run on several threads; the result order does not depend on scheduling.
SweepResult run_sweep(const SweepConfig& config);

}  // namespace femvar
