#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liouville/experiments/report.hpp"
#include "liouville/field/point.hpp"

namespace liouville::cli {

/// Bad configuration; maps to exit status 2.
struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Format { Csv, Json };

struct RunConfig {
  std::string experiment = "quantization";
  double mu = 1.0;
  std::optional<int> n;
  std::optional<double> half_width;
  std::optional<double> radius;
  std::string out = "-";
  Format format = Format::Csv;
  std::uint64_t seed = 20240501;
  std::vector<double> deltas;
  std::vector<int> ks;
  std::vector<Point> centers;
  bool inject_kernel_fault = false;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitTolerance = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

/// Throws ConfigError for an unknown experiment, mu outside (0, 2), or n not
/// a power of two in [64, 2048].
void validate(const RunConfig& cfg);

/// Parses "a,b,c".
std::vector<double> parse_reals(const std::string& text);
std::vector<int> parse_ints(const std::string& text);
/// Parses "x,y;x,y".
std::vector<Point> parse_points(const std::string& text);

/// Reads flat key=value lines (same keys as the long flags) into `cfg`.
/// Keys already set on the command line are listed in `skip`.
void apply_config_file(const std::string& path, RunConfig& cfg, const std::vector<std::string>& skip = {});

/// Runs the configured experiment and returns its report.
ExperimentReport execute(const RunConfig& cfg);

struct VerifyOptions {
  int n = 128;
  std::uint64_t seed = 20240501;
  bool kernel_fault = false;
};

/// Oracle equivalence, energies, transforms, selection, driving estimate and
/// Brezis-Merle checks in one report.
ExperimentReport verify_core(const VerifyOptions& options);

std::string to_csv(const ExperimentReport& report);
std::string to_json(const ExperimentReport& report);

/// Writes the report to `path` ("-" for stdout). Throws ConfigError if the
/// path cannot be written.
void emit_report(const ExperimentReport& report, Format format, const std::string& path);

/// Executes, emits and maps the outcome to an exit status.
int run(const RunConfig& cfg, std::ostream& log);

/// Command-line entry point.
int main_entry(int argc, char** argv);

}  // namespace liouville::cli
