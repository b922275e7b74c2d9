#pragma once

#include <limits>
#include <string>
#include <vector>

#include "liouville/blowup/analysis.hpp"

namespace liouville {

/// One checked (or informational) number. A row passes iff
/// |value - target| <= tolerance; informational rows carry an infinite tolerance.
struct ReportRow {
  std::string experiment;
  std::string param_name;
  std::string param_value;
  std::string quantity;
  double value = 0.0;
  double target = 0.0;
  double tolerance = std::numeric_limits<double>::infinity();

  bool pass() const;
};

struct ExperimentReport {
  std::string id;
  std::vector<ReportRow> rows;
  std::vector<MassReport> masses;
  bool inconclusive = false;
  std::vector<std::string> notes;

  void check(std::string param_name, std::string param_value, std::string quantity, double value, double target,
             double tolerance);
  void info(std::string param_name, std::string param_value, std::string quantity, double value,
            double target = 0.0);
  /// One-sided check: an informational row with the value (target = limit),
  /// then `<quantity>_excess` = max(0, value - limit) against target 0.
  void at_most(std::string param_name, std::string param_value, std::string quantity, double value, double limit);
  /// Same with `<quantity>_shortfall` = max(0, limit - value).
  void at_least(std::string param_name, std::string param_value, std::string quantity, double value, double limit);

  bool passed() const;
  const ReportRow* find(const std::string& quantity, const std::string& param_value = "") const;
};

/// Shortest round-trip text for a number, at most 8 significant digits.
std::string format_number(double v);

struct PowerLawFit {
  double exponent = 0.0;
  double quality = 0.0;  // coefficient of determination
};

/// Least-squares slope of log y against log x.
PowerLawFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys);

}  // namespace liouville
