#pragma once

// Subcommand implementations behind the `zerofield` executable. Each table
// builder is a pure function of its inputs so tests can call it directly.

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "zerofield/units.hpp"

namespace zerofield::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitConfigError = 2,
    kExitIoError = 3,
};

/// Relative half-width of the band around the wall that sweeps skip.
inline constexpr double kNotchRel = 1e-9;

using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Decimal with 17 significant digits, locale independent.
std::string format_double(double v);

void write_csv(std::ostream& out, const Table& t);
nlohmann::json table_to_json(const Table& t);

/// Worker count from ZEROFIELD_THREADS (if set and positive), otherwise the
/// hardware concurrency, never below 1.
unsigned worker_count();

/// Linear grid of `samples` radii on [lo, hi] with points inside
/// R (1 +/- kNotchRel) dropped; dropped radii are appended to `notched`.
std::vector<double> notched_grid(double lo, double hi, int samples, double radius, std::vector<double>* notched);

struct SweepRange {
    double rho_min = 0.0;  ///< cm
    double rho_max = 0.0;  ///< cm
    int samples = 100;
};

Table potentials_table(const SolenoidConfig& cfg, const SweepRange& range, double alpha, unsigned threads,
                       std::vector<double>* notched = nullptr);

/// Rows are (rho, phase) pairs, rho-major. The last column holds
/// Re[phi^0 e^{i phase}] per radian of azimuth.
Table decompose_table(const SolenoidConfig& cfg, const SweepRange& range, const std::vector<double>& phases,
                      unsigned threads, std::vector<double>* notched = nullptr);

nlohmann::json observables_json(const SolenoidConfig& cfg);

/// S and contrast over a log-spaced frequency grid.
Table interference_sweep_table(const SolenoidConfig& cfg, double f_min, double f_max, int samples);

/// Run record written next to every output file.
nlohmann::json manifest(const std::string& command, const SolenoidConfig& cfg, const std::string& timestamp);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

std::string tool_version();

/// Full command-line entry point; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zerofield::cli
