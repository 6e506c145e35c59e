#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>

#include "femvar/analysis.hpp"

namespace femvar::cli {

enum class Subcommand { Exact, Solve, Sweep };

struct OutputFormats {
    bool csv = true;
    bool json = false;
    bool svg = true;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::Sweep;
    SweepConfig sweep;
    std::filesystem::path out_dir = ".";
    OutputFormats formats;
};

/// Bad flags or values. `help` marks an explicit --help request, which is not a failure.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& message, bool help = false) : std::runtime_error(message), help_(help) {}
    bool help() const noexcept { return help_; }

private:
    bool help_;
};

/// Parses arguments (without the program name). Defaults reproduce the full
/// study: every method, Pe {1, 50, 100, 500}, elements {25, 50, 75, 100} on
/// (1, 2) with 2-point quadrature. `solve` takes one Pe and one element count
/// (defaults 100 and 75). Throws ConfigError.
RunConfig parse_config(std::span<const std::string> args);

/// Executes a parsed configuration and writes the requested files.
/// Throws io::IoError on file-system failures.
void run(const RunConfig& config, std::ostream& log);

/// Full entry point: parse, run, map failures to exit codes.
/// 0 on success (singular cases included), 2 on bad configuration, 3 on I/O failure.
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace femvar::cli
