#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "femvar/output.hpp"

namespace femvar::cli {

namespace {

struct RawOptions {
    std::vector<std::string> methods;
    std::vector<double> pe;
    std::vector<int> elements;
    std::vector<double> domain;
    int quad_order = kDefaultQuadratureOrder;
    std::string out = ".";
    std::vector<std::string> formats;
};

void add_common_options(CLI::App& sub, RawOptions& raw, bool with_solver_options) {
    sub.add_option("--pe", raw.pe, "Peclet number(s), comma separated")->delimiter(',');
    sub.add_option("--domain", raw.domain, "Domain endpoints a,b")->delimiter(',')->expected(2);
    sub.add_option("--out", raw.out, "Output directory");
    sub.add_option("--format", raw.formats, "Output formats: csv,json,svg")->delimiter(',');
    if (with_solver_options) {
        sub.add_option("--method", raw.methods, "Methods: sg,c,ls,gls,cg,cls,cgls or all")->delimiter(',');
        sub.add_option("--elements", raw.elements, "Element count(s), comma separated")->delimiter(',');
        sub.add_option("--quad-order", raw.quad_order, "Gauss-Legendre points per element (1-5)");
    }
}

std::string file_tag(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%g", v);
    return buffer;
}

void write(const std::filesystem::path& path, const std::string& content, std::ostream& log) {
    io::write_file(path, content);
    log << "wrote " << path.string() << '\n';
}

}  // namespace

RunConfig parse_config(std::span<const std::string> args) {
    CLI::App app{"Weighted-residual finite element variants for steady 1D convection-diffusion", "femvar"};
    app.require_subcommand(1);
    RawOptions raw;
    CLI::App* exact = app.add_subcommand("exact", "Tabulate and plot the exact solution");
    CLI::App* solve = app.add_subcommand("solve", "Solve one (Pe, N) case with the selected methods");
    CLI::App* sweep = app.add_subcommand("sweep", "Run the full method x Pe x N study");
    add_common_options(*exact, raw, false);
    add_common_options(*solve, raw, true);
    add_common_options(*sweep, raw, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        throw ConfigError(out.str() + err.str(), code == 0);
    }

    RunConfig config;
    if (exact->parsed()) {
        config.subcommand = Subcommand::Exact;
    } else if (solve->parsed()) {
        config.subcommand = Subcommand::Solve;
        config.sweep.pe_values = {100.0};
        config.sweep.element_counts = {75};
    } else {
        config.subcommand = Subcommand::Sweep;
    }

    if (!raw.methods.empty()) {
        config.sweep.methods.clear();
        for (const std::string& name : raw.methods) {
            if (name == "all" || name == "ALL") {
                config.sweep.methods.assign(kAllMethods.begin(), kAllMethods.end());
                continue;
            }
            const auto m = parse_method(name);
            if (!m) throw ConfigError("unknown method '" + name + "' (expected sg, c, ls, gls, cg, cls, cgls or all)");
            config.sweep.methods.push_back(*m);
        }
        std::sort(config.sweep.methods.begin(), config.sweep.methods.end());
        config.sweep.methods.erase(std::unique(config.sweep.methods.begin(), config.sweep.methods.end()),
                                   config.sweep.methods.end());
    }
    if (!raw.pe.empty()) config.sweep.pe_values = raw.pe;
    if (!raw.elements.empty()) config.sweep.element_counts = raw.elements;
    if (!raw.domain.empty()) config.sweep.domain = Domain{raw.domain[0], raw.domain[1]};
    config.sweep.quad_order = raw.quad_order;
    config.out_dir = raw.out;

    if (!raw.formats.empty()) {
        config.formats = OutputFormats{false, false, false};
        for (const std::string& f : raw.formats) {
            if (f == "csv") config.formats.csv = true;
            else if (f == "json") config.formats.json = true;
            else if (f == "svg") config.formats.svg = true;
            else throw ConfigError("unknown format '" + f + "' (expected csv, json or svg)");
        }
    }

    if (config.subcommand == Subcommand::Solve &&
        (config.sweep.pe_values.size() != 1 || config.sweep.element_counts.size() != 1)) {
        throw ConfigError("solve takes a single --pe and a single --elements; use sweep for lists");
    }
    try {
        validate(config.sweep);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    return config;
}

void run(const RunConfig& config, std::ostream& log) {
    const SweepConfig& sc = config.sweep;
    const std::filesystem::path& dir = config.out_dir;

    if (config.subcommand == Subcommand::Exact) {
        if (config.formats.csv) write(dir / "exact.csv", io::exact_csv(sc.pe_values, sc.domain, 201), log);
        if (config.formats.json) write(dir / "exact.json", io::exact_json(sc.pe_values, sc.domain, 201), log);
        if (config.formats.svg) write(dir / "fig_exact.svg", io::render_exact_family(sc.pe_values, sc.domain), log);
        return;
    }

    const SweepResult result = run_sweep(sc);
    std::size_t singular = 0;
    for (const CaseRecord& c : result.cases) singular += c.singular ? 1 : 0;
    log << result.cases.size() << " cases, " << singular << " singular\n";

    if (config.formats.csv) {
        write(dir / "solutions.csv", io::solution_csv(result), log);
        write(dir / "summary.csv", io::summary_csv(result), log);
    }
    if (config.formats.json) write(dir / "sweep.json", io::sweep_json(result), log);
    if (config.formats.svg) {
        write(dir / "fig_exact.svg", io::render_exact_family(sc.pe_values, sc.domain), log);
        std::set<double> pes(sc.pe_values.begin(), sc.pe_values.end());
        std::set<int> counts(sc.element_counts.begin(), sc.element_counts.end());
        for (double pe : pes) {
            for (int n : counts) {
                const bool any = std::any_of(result.cases.begin(), result.cases.end(), [&](const CaseRecord& c) {
                    return c.pe == pe && c.n_elements == n && !c.singular;
                });
                if (!any) continue;
                const io::PlotSelection sel{{}, pe, n};
                write(dir / ("fig_overlay_pe" + file_tag(pe) + "_n" + std::to_string(n) + ".svg"),
                      io::render_svg(result, io::PlotKind::SolutionOverlay, sel), log);
            }
        }
        try {
            write(dir / "fig_error_loglog.svg", io::render_svg(result, io::PlotKind::ErrorLogLog, {}), log);
        } catch (const std::invalid_argument& e) {
            log << "skipped fig_error_loglog.svg: " << e.what() << '\n';
        }
    }
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config = parse_config(args);
    } catch (const ConfigError& e) {
        if (e.help()) {
            out << e.what();
            return 0;
        }
        const std::string message = e.what();
        err << "femvar: " << message;
        if (message.empty() || message.back() != '\n') err << "\nRun with --help for usage.\n";
        return 2;
    }
    try {
        run(config, out);
    } catch (const io::IoError& e) {
        err << "femvar: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "femvar: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace femvar::cli
