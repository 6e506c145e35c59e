#include "femvar/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "femvar/exact_solution.hpp"

namespace femvar {

RelativeError absolute_relative_error(std::span<const double> numerical, std::span<const double> exact) {
    if (numerical.size() != exact.size()) {
        throw std::invalid_argument("absolute_relative_error: numerical and exact lengths differ");
    }
    const std::size_t n = exact.size();
    RelativeError result;
    result.per_node.assign(n, std::nullopt);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (std::abs(exact[i]) <= kExactFloor) continue;
        const double e = std::abs((exact[i] - numerical[i]) / exact[i]);
        result.per_node[i] = e;
        result.max = result.empty ? e : std::max(result.max, e);
        result.empty = false;
    }
    return result;
}

double total_variation(std::span<const double> values) {
    if (values.size() < 2) throw std::invalid_argument("total_variation: need at least 2 values");
    double tv = 0.0;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) tv += std::abs(values[i + 1] - values[i]);
    return tv;
}

ErrorReport error_report(std::span<const double> numerical, std::span<const double> exact) {
    RelativeError rel = absolute_relative_error(numerical, exact);
    ErrorReport report;
    report.per_node_abs_rel_error = std::move(rel.per_node);
    report.max_abs_rel_error = rel.max;
    report.error_empty = rel.empty;
    report.total_variation = total_variation(numerical);
    const auto [lo, hi] = std::minmax_element(numerical.begin(), numerical.end());
    report.overshoot = std::max(0.0, *hi - 1.0);
    report.undershoot = std::max(0.0, -*lo);
    return report;
}

CaseRecord run_case(MethodKind method, double pe, int n_elements, Domain domain, const QuadratureRule& rule) {
    const Mesh1D mesh(domain.a, domain.b, n_elements);
    const ExactParams params{pe, domain.a, domain.b};

    CaseRecord record;
    record.method = method;
    record.pe = pe;
    record.n_elements = n_elements;
    record.x.assign(mesh.nodes().begin(), mesh.nodes().end());
    record.exact.reserve(record.x.size());
    for (double x : record.x) record.exact.push_back(exact_T(x, params));

    const LinearSystem system = apply_dirichlet(assemble(method, pe, mesh, rule));
    record.tau = system.tau;
    SolveReport solve = lu_solve(system);
    record.rcond = solve.rcond;
    record.singular = solve.singular;
    if (!solve.singular) {
        record.solution = std::move(solve.solution);
        record.errors = error_report(record.solution, record.exact);
    }
    return record;
}

void validate(const SweepConfig& config) {
    if (config.methods.empty() || config.pe_values.empty() || config.element_counts.empty()) {
        throw std::invalid_argument("sweep: method, Peclet and element lists must be nonempty");
    }
    for (double pe : config.pe_values) {
        if (!(pe >= 0.0) || !std::isfinite(pe)) {
            throw std::invalid_argument("sweep: Peclet numbers must be finite and >= 0, got " + std::to_string(pe));
        }
        validate(ExactParams{pe, config.domain.a, config.domain.b});
    }
    for (int n : config.element_counts) {
        if (n < 2) throw std::invalid_argument("sweep: element counts must be >= 2, got " + std::to_string(n));
    }
    if (config.quad_order < kMinQuadratureOrder || config.quad_order > kMaxQuadratureOrder) {
        throw std::invalid_argument("sweep: quadrature order out of range");
    }
}

const CaseRecord* SweepResult::find(MethodKind method, double pe, int n_elements) const {
    for (const CaseRecord& c : cases) {
        if (c.method == method && c.pe == pe && c.n_elements == n_elements) return &c;
    }
    return nullptr;
}

SweepResult run_sweep(const SweepConfig& config) {
    validate(config);
    const QuadratureRule rule = gauss_legendre(config.quad_order);

    struct Key {
        MethodKind method;
        double pe;
        int n;
    };
    std::vector<Key> keys;
    for (MethodKind m : config.methods) {
        for (double pe : config.pe_values) {
            for (int n : config.element_counts) keys.push_back({m, pe, n});
        }
    }
    auto order = [](const Key& l, const Key& r) {
        return std::tie(l.method, l.pe, l.n) < std::tie(r.method, r.pe, r.n);
    };
    std::sort(keys.begin(), keys.end(), order);
    keys.erase(std::unique(keys.begin(), keys.end(),
                           [](const Key& l, const Key& r) {
                               return l.method == r.method && l.pe == r.pe && l.n == r.n;
                           }),
               keys.end());

    SweepResult result;
    result.cases.resize(keys.size());
    const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
    std::vector<std::future<void>> tasks;
    tasks.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < keys.size(); i += workers) {
                result.cases[i] = run_case(keys[i].method, keys[i].pe, keys[i].n, config.domain, rule);
            }
        }));
    }
    for (auto& t : tasks) t.get();
    return result;
}

}  // namespace femvar
