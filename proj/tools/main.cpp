// seqent: grid scans of the temporal-memory witness and randomized bound
// checks. Exit codes: 0 ok, 1 violation found, 2 usage error, 3 I/O error.

#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "seqent/scan.hpp"

namespace {

using namespace seqent;

int parse_twice_spin(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const long num = std::stol(text.substr(0, slash));
      const long den = std::stol(text.substr(slash + 1));
      if (den == 2) return static_cast<int>(num);
      if (den == 1) return static_cast<int>(2 * num);
    } else {
      const double v = std::stod(text);
      const long twice = std::lround(2.0 * v);
      if (std::abs(2.0 * v - static_cast<double>(twice)) < 1e-9)
        return static_cast<int>(twice);
    }
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("spin '" + text + "' is not a half-integer (try 1/2, 1, 3/2)");
}

void parse_range(const std::string& text, double& lo, double& hi, const char* name) {
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      lo = std::stod(text.substr(0, colon), &used);
      const bool lo_ok = used == colon;
      const std::string rest = text.substr(colon + 1);
      hi = std::stod(rest, &used);
      if (lo_ok && used == rest.size()) return;
    } catch (const std::exception&) {
    }
  }
  throw std::invalid_argument(std::string(name) + " range '" + text +
                              "' is not of the form a:b");
}

std::string spin_pretty(int twice_s) {
  if (twice_s % 2 == 0) return std::to_string(twice_s / 2);
  return std::to_string(twice_s) + "/2";
}

struct CliOptions {
  std::string spin = "1/2";
  int resolution = 101;
  std::string theta_range = "0:6.283185307179586";
  std::string phi_range = "0:6.283185307179586";
  std::string format = "csv";
  std::string out;
  int threads = 0;
  std::string config_path;
  std::string kind;
  int trials = 1000;
  std::size_t dim = 2;
  std::uint64_t seed = 12345;
};

void add_scan_options(CLI::App& cmd, CliOptions& opt) {
  cmd.add_option("--spin", opt.spin, "spin s as a rational, e.g. 1/2, 1, 3/2")
      ->capture_default_str();
  cmd.add_option("--res", opt.resolution, "grid points per axis")->capture_default_str();
  cmd.add_option("--theta-range", opt.theta_range, "theta axis as min:max (radians)")
      ->capture_default_str();
  cmd.add_option("--phi-range", opt.phi_range, "phi axis as min:max (radians)")
      ->capture_default_str();
  cmd.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd.add_option("--out", opt.out, "output file (default scan.<format>)");
  cmd.add_option("--threads", opt.threads,
                 "worker count; 0 honors SEQENT_THREADS, else hardware")
      ->capture_default_str();
  cmd.add_option("--config", opt.config_path, "key=value config file; flags override it");
}

void add_check_options(CLI::App& cmd, CliOptions& opt) {
  cmd.add_option("--trials", opt.trials, "number of random draws")->capture_default_str();
  cmd.add_option("--dim", opt.dim, "Hilbert space dimension")->capture_default_str();
  cmd.add_option("--seed", opt.seed, "base seed for the derived trial streams")
      ->capture_default_str();
}

// Flat key=value file, one entry per line, # comments. Values fill in only
// the options that were not given on the command line.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos || eq == first)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " is not key=value: '" + line + "'");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(value, &used);
    if (used == value.size()) return static_cast<T>(v);
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("config key '" + key + "' has a non-numeric value '" + value +
                              "'");
}

void apply_config_file(const CLI::App& cmd, CliOptions& opt) {
  if (opt.config_path.empty()) return;
  const auto kv = read_config_file(opt.config_path);
  auto from_file = [&](const char* flag) {
    return cmd.get_option(flag) != nullptr && cmd.count(flag) == 0;
  };
  for (const auto& [key, value] : kv) {
    const std::string flag = "--" + key;
    if (cmd.get_option_no_throw(flag) == nullptr)
      throw std::invalid_argument("config key '" + key + "' is not a known option");
    if (!from_file(flag.c_str())) continue;  // command line wins
    if (key == "spin")
      opt.spin = value;
    else if (key == "res")
      opt.resolution = parse_number<int>(key, value);
    else if (key == "theta-range")
      opt.theta_range = value;
    else if (key == "phi-range")
      opt.phi_range = value;
    else if (key == "format") {
      if (value != "csv" && value != "json")
        throw std::invalid_argument("config key 'format' must be csv or json");
      opt.format = value;
    } else if (key == "out")
      opt.out = value;
    else if (key == "threads")
      opt.threads = parse_number<int>(key, value);
    else if (key == "trials")
      opt.trials = parse_number<int>(key, value);
    else if (key == "dim")
      opt.dim = parse_number<std::size_t>(key, value);
    else if (key == "seed")
      opt.seed = parse_number<std::uint64_t>(key, value);
    else if (key == "config")
      throw std::invalid_argument("config files cannot nest");
  }
}

ScanConfig to_scan_config(const CliOptions& opt) {
  ScanConfig cfg;
  cfg.twice_s = parse_twice_spin(opt.spin);
  cfg.resolution = opt.resolution;
  parse_range(opt.theta_range, cfg.theta_min, cfg.theta_max, "theta");
  parse_range(opt.phi_range, cfg.phi_min, cfg.phi_max, "phi");
  cfg.format = opt.format == "json" ? OutputFormat::json : OutputFormat::csv;
  cfg.output_path = opt.out.empty() ? "scan." + opt.format : opt.out;
  cfg.threads = opt.threads;
  cfg.validate();
  return cfg;
}

int do_scan(const CliOptions& opt) {
  const ScanConfig cfg = to_scan_config(opt);
  const ScanResult result = run_scan(cfg);
  emit(result);
  std::printf("wrote %s: spin %s, %dx%d grid\n", cfg.output_path.c_str(),
              spin_pretty(cfg.twice_s).c_str(), cfg.resolution, cfg.resolution);
  std::printf("negative_fraction=%.6f min=%.12g at theta=%.12g phi=%.12g\n",
              result.negative_fraction, result.min_value, result.argmin_theta,
              result.argmin_phi);
  return 0;
}

int do_check(const CliOptions& opt) {
  CheckKind kind;
  if (opt.kind == "mu")
    kind = CheckKind::mu;
  else if (opt.kind == "berta")
    kind = CheckKind::berta;
  else if (opt.kind == "theorem")
    kind = CheckKind::theorem;
  else
    throw std::invalid_argument("unsupported check kind '" + opt.kind +
                                "' (expected mu, berta or theorem)");
  const CheckSummary summary = run_checks(kind, opt.trials, opt.dim, opt.seed);
  std::printf("%s\n", summary_line(summary).c_str());
  return summary.violations == 0 ? 0 : 1;
}

int do_show_config(const CliOptions& opt) {
  const ScanConfig cfg = to_scan_config(opt);
  std::printf("spin=%s\n", spin_pretty(cfg.twice_s).c_str());
  std::printf("twice_s=%d\n", cfg.twice_s);
  std::printf("theta_range=%.12g:%.12g\n", cfg.theta_min, cfg.theta_max);
  std::printf("phi_range=%.12g:%.12g\n", cfg.phi_min, cfg.phi_max);
  std::printf("res=%d\n", cfg.resolution);
  std::printf("format=%s\n", cfg.format == OutputFormat::csv ? "csv" : "json");
  std::printf("out=%s\n", cfg.output_path.c_str());
  std::printf("threads=%d\n", cfg.threads);
  std::printf("trials=%d\n", opt.trials);
  std::printf("dim=%zu\n", opt.dim);
  std::printf("seed=%llu\n", static_cast<unsigned long long>(opt.seed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sequential-measurement entropics: witness scans and bound checks"};
  app.require_subcommand(1);

  CliOptions opt;
  CLI::App* scan = app.add_subcommand("scan", "scan the memory witness over a (theta, phi) grid");
  add_scan_options(*scan, opt);

  CLI::App* check = app.add_subcommand("check", "run a randomized bound sweep");
  check->add_option("kind", opt.kind, "one of: mu, berta, theorem")->required();
  add_check_options(*check, opt);
  check->add_option("--config", opt.config_path, "key=value config file; flags override it");

  CLI::App* show = app.add_subcommand("show-config", "print the effective configuration");
  add_scan_options(*show, opt);
  add_check_options(*show, opt);

  try {
    app.parse(argc, argv);
    if (scan->parsed()) {
      apply_config_file(*scan, opt);
      return do_scan(opt);
    }
    if (check->parsed()) {
      apply_config_file(*check, opt);
      return do_check(opt);
    }
    if (show->parsed()) {
      apply_config_file(*show, opt);
      return do_show_config(opt);
    }
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
