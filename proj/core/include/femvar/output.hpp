#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "femvar/analysis.hpp"

namespace femvar::io {

/// Raised for file-system failures; the message names the path.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest form that still round-trips: printf "%.17g".
std::string format_number(double value);

/// Columns: method,pe,n_elements,x,T_numeric,T_exact,abs_rel_error,excluded_flag,singular
/// One row per node; a singular case is a single row with empty numeric fields.
std::string solution_csv(const SweepResult& result);

/// Columns: method,pe,n_elements,max_abs_rel_error,total_variation,overshoot,undershoot,tau,rcond,singular
std::string summary_csv(const SweepResult& result);

/// Same content as the two CSV files, nested by case.
std::string sweep_json(const SweepResult& result);

/// Columns: pe,x,T_exact sampled at `samples` evenly spaced points per Peclet number.
std::string exact_csv(std::span<const double> pe_values, Domain domain, int samples);
std::string exact_json(std::span<const double> pe_values, Domain domain, int samples);

enum class PlotKind { SolutionOverlay, ErrorLogLog };

/// Filters for render_svg. Empty method list means every method in the result.
/// SolutionOverlay needs both pe and n_elements; ErrorLogLog ignores n_elements.
struct PlotSelection {
    std::vector<MethodKind> methods;
    std::optional<double> pe;
    std::optional<int> n_elements;
};

/// Deterministic standalone SVG document. Throws std::invalid_argument when
/// the selection contains no non-singular case.
std::string render_svg(const SweepResult& result, PlotKind kind, const PlotSelection& selection);

/// Exact solution curves for each Peclet number over the domain.
std::string render_exact_family(std::span<const double> pe_values, Domain domain);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

void write_solution_csv(const SweepResult& result, const std::filesystem::path& path);
void write_summary_csv(const SweepResult& result, const std::filesystem::path& path);

}  // namespace femvar::io
