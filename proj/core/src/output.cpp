#include "femvar/output.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "femvar/exact_solution.hpp"

namespace femvar::io {

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

namespace {

std::string case_prefix(const CaseRecord& c) {
    return std::string(to_string(c.method)) + "," + format_number(c.pe) + "," + std::to_string(c.n_elements);
}

nlohmann::json optional_number(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

std::string solution_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "method,pe,n_elements,x,T_numeric,T_exact,abs_rel_error,excluded_flag,singular\n";
    for (const CaseRecord& c : result.cases) {
        if (c.singular || !c.errors) {
            out << case_prefix(c) << ",,,,,,true\n";
            continue;
        }
        for (std::size_t i = 0; i < c.x.size(); ++i) {
            const auto& err = c.errors->per_node_abs_rel_error[i];
            out << case_prefix(c) << ',' << format_number(c.x[i]) << ',' << format_number(c.solution[i]) << ','
                << format_number(c.exact[i]) << ',' << (err ? format_number(*err) : std::string()) << ','
                << (err ? "false" : "true") << ",false\n";
        }
    }
    return out.str();
}

std::string summary_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "method,pe,n_elements,max_abs_rel_error,total_variation,overshoot,undershoot,tau,rcond,singular\n";
    for (const CaseRecord& c : result.cases) {
        out << case_prefix(c) << ',';
        if (c.errors) {
            const ErrorReport& e = *c.errors;
            out << (e.error_empty ? std::string() : format_number(e.max_abs_rel_error)) << ','
                << format_number(e.total_variation) << ',' << format_number(e.overshoot) << ','
                << format_number(e.undershoot) << ',';
        } else {
            out << ",,,,";
        }
        out << format_number(c.tau) << ',' << format_number(c.rcond) << ',' << (c.singular ? "true" : "false")
            << '\n';
    }
    return out.str();
}

std::string sweep_json(const SweepResult& result) {
    nlohmann::json cases = nlohmann::json::array();
    for (const CaseRecord& c : result.cases) {
        nlohmann::json entry;
        entry["method"] = std::string(to_string(c.method));
        entry["pe"] = c.pe;
        entry["n_elements"] = c.n_elements;
        entry["tau"] = c.tau;
        entry["rcond"] = c.rcond;
        entry["singular"] = c.singular;
        if (c.errors) {
            const ErrorReport& e = *c.errors;
            entry["summary"] = {
                {"max_abs_rel_error", e.error_empty ? nlohmann::json(nullptr) : nlohmann::json(e.max_abs_rel_error)},
                {"total_variation", e.total_variation},
                {"overshoot", e.overshoot},
                {"undershoot", e.undershoot},
            };
            nlohmann::json nodes = nlohmann::json::array();
            for (std::size_t i = 0; i < c.x.size(); ++i) {
                const auto& err = e.per_node_abs_rel_error[i];
                nodes.push_back({{"x", c.x[i]},
                                 {"T_numeric", c.solution[i]},
                                 {"T_exact", c.exact[i]},
                                 {"abs_rel_error", optional_number(err)},
                                 {"excluded", !err.has_value()}});
            }
            entry["nodes"] = std::move(nodes);
        } else {
            entry["summary"] = nullptr;
            entry["nodes"] = nlohmann::json::array();
        }
        cases.push_back(std::move(entry));
    }
    return nlohmann::json{{"cases", std::move(cases)}}.dump(2) + "\n";
}

std::string exact_csv(std::span<const double> pe_values, Domain domain, int samples) {
    if (samples < 2) throw std::invalid_argument("exact_csv: need at least 2 samples");
    std::ostringstream out;
    out << "pe,x,T_exact\n";
    for (double pe : pe_values) {
        const ExactParams params{pe, domain.a, domain.b};
        for (int k = 0; k < samples; ++k) {
            const double x = k == samples - 1 ? domain.b : domain.a + (domain.b - domain.a) * k / (samples - 1);
            out << format_number(pe) << ',' << format_number(x) << ',' << format_number(exact_T(x, params)) << '\n';
        }
    }
    return out.str();
}

std::string exact_json(std::span<const double> pe_values, Domain domain, int samples) {
    if (samples < 2) throw std::invalid_argument("exact_json: need at least 2 samples");
    nlohmann::json curves = nlohmann::json::array();
    for (double pe : pe_values) {
        const ExactParams params{pe, domain.a, domain.b};
        nlohmann::json xs = nlohmann::json::array(), ts = nlohmann::json::array();
        for (int k = 0; k < samples; ++k) {
            const double x = k == samples - 1 ? domain.b : domain.a + (domain.b - domain.a) * k / (samples - 1);
            xs.push_back(x);
            ts.push_back(exact_T(x, params));
        }
        curves.push_back({{"pe", pe}, {"x", std::move(xs)}, {"T_exact", std::move(ts)}});
    }
    return nlohmann::json{{"domain", {domain.a, domain.b}}, {"curves", std::move(curves)}}.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("write failed for " + path.string());
}

void write_solution_csv(const SweepResult& result, const std::filesystem::path& path) {
    write_file(path, solution_csv(result));
}

void write_summary_csv(const SweepResult& result, const std::filesystem::path& path) {
    write_file(path, summary_csv(result));
}

}  // namespace femvar::io
