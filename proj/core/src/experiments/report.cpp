#include "liouville/experiments/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace liouville {

bool ReportRow::pass() const {
  if (std::isnan(value)) return false;
  if (std::isinf(tolerance)) return true;
  return std::abs(value - target) <= tolerance;
}

void ExperimentReport::check(std::string param_name, std::string param_value, std::string quantity, double value,
                             double target, double tolerance) {
  rows.push_back({id, std::move(param_name), std::move(param_value), std::move(quantity), value, target, tolerance});
}

void ExperimentReport::info(std::string param_name, std::string param_value, std::string quantity, double value,
                            double target) {
  check(std::move(param_name), std::move(param_value), std::move(quantity), value, target,
        std::numeric_limits<double>::infinity());
}

void ExperimentReport::at_most(std::string param_name, std::string param_value, std::string quantity, double value,
                               double limit) {
  info(param_name, param_value, quantity, value, limit);
  check(std::move(param_name), std::move(param_value), quantity + "_excess", std::max(0.0, value - limit), 0.0, 0.0);
}

void ExperimentReport::at_least(std::string param_name, std::string param_value, std::string quantity, double value,
                                double limit) {
  info(param_name, param_value, quantity, value, limit);
  check(std::move(param_name), std::move(param_value), quantity + "_shortfall", std::max(0.0, limit - value), 0.0,
        0.0);
}

bool ExperimentReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.pass(); });
}

const ReportRow* ExperimentReport::find(const std::string& quantity, const std::string& param_value) const {
  for (const auto& r : rows) {
    if (r.quantity == quantity && (param_value.empty() || r.param_value == param_value)) return &r;
  }
  return nullptr;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 8);
  return std::string(buf.data(), res.ptr);
}

PowerLawFit fit_power_law(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("fit_power_law: length mismatch");
  if (xs.size() < 3) throw std::invalid_argument("fit_power_law: need at least 3 points");
  const auto n = static_cast<double>(xs.size());
  double sx = 0, sy = 0;
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) throw std::invalid_argument("fit_power_law: data must be positive");
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]));
    sx += lx.back();
    sy += ly.back();
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_power_law: xs must not all be equal");
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  double ss_res = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (my + fit.exponent * (lx[i] - mx));
    ss_res += e * e;
  }
  // A constant series is fitted exactly by slope 0.
  fit.quality = syy > 0.0 ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

}  // namespace liouville
