#include "liouville/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "liouville/errors.hpp"
#include "liouville/experiments/experiments.hpp"

namespace liouville::cli {

namespace {

const std::vector<std::string> kExperiments{"quantization", "multibubble", "rigged", "verify-core"};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_real(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot read " + what + " from '" + s + "'");
  }
}

int to_int(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot read " + what + " from '" + s + "'");
  }
}

Format to_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw ConfigError("format must be csv or json, got '" + s + "'");
}

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "experiment") cfg.experiment = value;
  else if (key == "mu") cfg.mu = to_real(value, "mu");
  else if (key == "n") cfg.n = to_int(value, "n");
  else if (key == "half-width") cfg.half_width = to_real(value, "half-width");
  else if (key == "radius") cfg.radius = to_real(value, "radius");
  else if (key == "out") cfg.out = value;
  else if (key == "format") cfg.format = to_format(value);
  else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(to_real(value, "seed"));
  else if (key == "deltas") cfg.deltas = parse_reals(value);
  else if (key == "ks") cfg.ks = parse_ints(value);
  else if (key == "centers") cfg.centers = parse_points(value);
  else if (key == "inject-fault") {
    if (value != "kernel") throw ConfigError("unknown fault '" + value + "'");
    cfg.inject_kernel_fault = true;
  } else {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json json_number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

ExperimentReport merge(ExperimentReport a, const ExperimentReport& b) {
  a.rows.insert(a.rows.end(), b.rows.begin(), b.rows.end());
  a.masses.insert(a.masses.end(), b.masses.begin(), b.masses.end());
  a.notes.insert(a.notes.end(), b.notes.begin(), b.notes.end());
  a.inconclusive = a.inconclusive || b.inconclusive;
  return a;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (std::find(kExperiments.begin(), kExperiments.end(), cfg.experiment) == kExperiments.end()) {
    throw ConfigError("unknown experiment '" + cfg.experiment + "'");
  }
  if (!(cfg.mu > 0.0 && cfg.mu < 2.0)) throw ConfigError("mu must lie in (0, 2)");
  if (cfg.n) {
    const int n = *cfg.n;
    if (n < 64 || n > 2048 || (n & (n - 1)) != 0) throw ConfigError("n must be a power of two in [64, 2048]");
  }
  if (cfg.half_width && !(*cfg.half_width > 0.0)) throw ConfigError("half-width must be positive");
  if (cfg.radius && !(*cfg.radius > 0.0)) throw ConfigError("radius must be positive");
}

std::vector<double> parse_reals(const std::string& text) {
  std::vector<double> out;
  for (const auto& s : split(text, ',')) out.push_back(to_real(s, "list entry"));
  return out;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(to_int(s, "list entry"));
  return out;
}

std::vector<Point> parse_points(const std::string& text) {
  std::vector<Point> out;
  for (const auto& item : split(text, ';')) {
    const auto xy = split(item, ',');
    if (xy.size() != 2) throw ConfigError("points are written x,y;x,y");
    out.push_back({to_real(xy[0], "x"), to_real(xy[1], "y")});
  }
  return out;
}

void apply_config_file(const std::string& path, RunConfig& cfg, const std::vector<std::string>& skip) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    if (std::find(skip.begin(), skip.end(), key) != skip.end()) continue;
    set_key(cfg, key, trim(line.substr(eq + 1)));
  }
}

ExperimentReport execute(const RunConfig& cfg) {
  validate(cfg);
  if (cfg.experiment == "quantization") {
    const std::vector<double> deltas = cfg.deltas.empty() ? std::vector<double>{8, 16, 32, 64} : cfg.deltas;
    return run_quantization(cfg.mu, deltas, cfg.radius.value_or(1.0),
                            {cfg.half_width.value_or(1.0), cfg.n.value_or(1024)});
  }
  if (cfg.experiment == "multibubble") {
    const std::vector<Point> centers =
        cfg.centers.empty() ? std::vector<Point>{{-0.45, 0.0}, {0.45, 0.0}} : cfg.centers;
    const std::vector<double> deltas = cfg.deltas.empty() ? std::vector<double>{120} : cfg.deltas;
    ExperimentReport rep = run_multibubble(cfg.mu, centers, deltas, cfg.radius.value_or(1.0),
                                           {cfg.half_width.value_or(1.0), cfg.n.value_or(1024)});
    return merge(std::move(rep), run_interaction_decay(cfg.mu, 40.0, {1, 2, 4, 8}, 0.25));
  }
  if (cfg.experiment == "rigged") {
    const std::vector<int> ks = cfg.ks.empty() ? std::vector<int>{4, 8, 16, 32} : cfg.ks;
    return run_rigged(cfg.mu, ks, {cfg.half_width.value_or(2.0), cfg.n.value_or(1024)});
  }
  return verify_core({cfg.n.value_or(128), cfg.seed, cfg.inject_kernel_fault});
}

std::string to_csv(const ExperimentReport& report) {
  std::string out = "experiment,param_name,param_value,quantity,value,target,tolerance,pass\n";
  for (const auto& r : report.rows) {
    out += csv_field(r.experiment) + ',' + csv_field(r.param_name) + ',' + csv_field(r.param_value) + ',' +
           csv_field(r.quantity) + ',' + format_number(r.value) + ',' + format_number(r.target) + ',' +
           format_number(r.tolerance) + ',' + (r.pass() ? "true" : "false") + '\n';
  }
  return out;
}

std::string to_json(const ExperimentReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : report.rows) {
    arr.push_back({{"experiment", r.experiment},
                   {"param_name", r.param_name},
                   {"param_value", r.param_value},
                   {"quantity", r.quantity},
                   {"value", json_number(r.value)},
                   {"target", json_number(r.target)},
                   {"tolerance", json_number(r.tolerance)},
                   {"pass", r.pass()}});
  }
  return arr.dump(2) + "\n";
}

void emit_report(const ExperimentReport& report, Format format, const std::string& path) {
  const std::string text = format == Format::Csv ? to_csv(report) : to_json(report);
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write report to '" + path + "'");
  out << text;
  if (!out) throw ConfigError("cannot write report to '" + path + "'");
}

int run(const RunConfig& cfg, std::ostream& log) {
  try {
    const ExperimentReport rep = execute(cfg);
    emit_report(rep, cfg.format, cfg.out);
    for (const auto& r : rep.rows) {
      if (std::isnan(r.value)) {
        log << "numeric failure: " << r.quantity << " is NaN\n";
        return kExitNumeric;
      }
    }
    std::size_t failed = 0;
    for (const auto& r : rep.rows) {
      if (!r.pass()) {
        ++failed;
        log << "FAIL " << r.experiment << ' ' << r.param_name << '=' << r.param_value << ' ' << r.quantity
            << " value=" << format_number(r.value) << " target=" << format_number(r.target)
            << " tolerance=" << format_number(r.tolerance) << '\n';
      }
    }
    for (const auto& note : rep.notes) log << "note: " << note << '\n';
    return failed == 0 ? kExitPass : kExitTolerance;
  } catch (const NumericError& e) {
    log << "numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    log << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    log << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Numerical checks for the nonlocal Liouville equation"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  RunConfig cfg;
  std::string format = "csv", deltas, ks, centers, fault, config;
  double mu = cfg.mu;
  int n = 0;
  double half_width = 0.0, radius = 0.0;
  std::uint64_t seed = cfg.seed;

  app.add_option("--experiment", cfg.experiment, "quantization | multibubble | rigged | verify-core");
  app.add_option("--mu", mu, "kernel order in (0, 2)");
  app.add_option("--n", n, "cells per axis (power of two, 64..2048)");
  app.add_option("--half-width", half_width, "grid half-width");
  app.add_option("--radius", radius, "radius R of the mass ball");
  app.add_option("--out", cfg.out, "report path, - for stdout");
  app.add_option("--format", format, "csv | json");
  app.add_option("--seed", seed, "seed for randomized checks");
  app.add_option("--deltas", deltas, "comma-separated concentration scales");
  app.add_option("--ks", ks, "comma-separated k values");
  app.add_option("--centers", centers, "bubble centers, x,y;x,y");
  app.add_option("--inject-fault", fault, "self-test: 'kernel' perturbs the fast-path kernel");
  app.add_option("--config", config, "flat key=value file with the same keys");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    std::vector<std::string> given;
    for (const auto* opt : app.get_options()) {
      if (opt->count() > 0) given.push_back(opt->get_name().substr(2));
    }
    if (!config.empty()) apply_config_file(config, cfg, given);
    auto given_flag = [&](const char* name) { return std::find(given.begin(), given.end(), name) != given.end(); };
    if (given_flag("mu")) cfg.mu = mu;
    if (given_flag("n")) cfg.n = n;
    if (given_flag("half-width")) cfg.half_width = half_width;
    if (given_flag("radius")) cfg.radius = radius;
    if (given_flag("format")) cfg.format = to_format(format);
    if (given_flag("seed")) cfg.seed = seed;
    if (given_flag("deltas")) cfg.deltas = parse_reals(deltas);
    if (given_flag("ks")) cfg.ks = parse_ints(ks);
    if (given_flag("centers")) cfg.centers = parse_points(centers);
    if (given_flag("inject-fault")) set_key(cfg, "inject-fault", fault);
    validate(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }
  return run(cfg, std::cerr);
}

}  // namespace liouville::cli
