#include "seqent/scan.hpp"

#include <atomic>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "seqent/tolerances.hpp"

namespace seqent {

void ScanConfig::validate() const {
  if (twice_s < 1) throw std::invalid_argument("scan config: spin must be at least 1/2");
  if (resolution < 2) throw std::invalid_argument("scan config: resolution must be >= 2");
  if (!(theta_max > theta_min))
    throw std::invalid_argument("scan config: theta range needs max > min");
  if (!(phi_max > phi_min))
    throw std::invalid_argument("scan config: phi range needs max > min");
  if (threads < 0) throw std::invalid_argument("scan config: threads must be >= 0");
}

double ScanConfig::theta_at(int i) const {
  return theta_min + (theta_max - theta_min) * static_cast<double>(i) /
                         static_cast<double>(resolution - 1);
}

double ScanConfig::phi_at(int j) const {
  return phi_min + (phi_max - phi_min) * static_cast<double>(j) /
                       static_cast<double>(resolution - 1);
}

namespace {

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SEQENT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// %.12g string for every number in the emitted files.
std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

double round_sig12(double v) { return std::strtod(format_sig12(v).c_str(), nullptr); }

}  // namespace

ScanResult run_scan(const ScanConfig& cfg) {
  cfg.validate();
  const Spin spin(cfg.twice_s);
  const int res = cfg.resolution;

  ScanResult result;
  result.config = cfg;
  result.grid.assign(static_cast<std::size_t>(res) * res, 0.0);

  const int n_workers = std::min(resolve_threads(cfg.threads), res);
  std::atomic<int> next_row{0};
  auto worker = [&] {
    for (;;) {
      const int i = next_row.fetch_add(1);
      if (i >= res) return;
      const double theta = cfg.theta_at(i);
      for (int j = 0; j < res; ++j)
        result.grid[static_cast<std::size_t>(i) * res + j] =
            memory_witness(spin, theta, cfg.phi_at(j));
    }
  };
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::size_t negatives = 0;
  std::size_t argmin = 0;
  for (std::size_t k = 0; k < result.grid.size(); ++k) {
    if (result.grid[k] < -tol::negative_cell) ++negatives;
    if (result.grid[k] < result.grid[argmin]) argmin = k;
  }
  result.negative_fraction =
      static_cast<double>(negatives) / static_cast<double>(result.grid.size());
  result.min_value = result.grid[argmin];
  result.argmin_theta = cfg.theta_at(static_cast<int>(argmin) / res);
  result.argmin_phi = cfg.phi_at(static_cast<int>(argmin) % res);
  return result;
}

void emit_csv(const ScanResult& result, std::ostream& out) {
  const int res = result.config.resolution;
  out << "theta,phi,m\n";
  for (int i = 0; i < res; ++i) {
    const std::string theta = format_sig12(result.config.theta_at(i));
    for (int j = 0; j < res; ++j) {
      out << theta << ',' << format_sig12(result.config.phi_at(j)) << ','
          << format_sig12(result.grid[static_cast<std::size_t>(i) * res + j]) << '\n';
    }
  }
}

void emit_json(const ScanResult& result, std::ostream& out) {
  // Only grid-defining parameters are echoed; execution details (threads,
  // output path) stay out so identical scans emit identical bytes.
  nlohmann::ordered_json doc;
  doc["config"] = {
      {"twice_s", result.config.twice_s},
      {"theta_min", result.config.theta_min},
      {"theta_max", result.config.theta_max},
      {"phi_min", result.config.phi_min},
      {"phi_max", result.config.phi_max},
      {"resolution", result.config.resolution},
  };
  nlohmann::ordered_json grid = nlohmann::ordered_json::array();
  for (double v : result.grid) grid.push_back(round_sig12(v));
  doc["grid"] = std::move(grid);
  doc["summary"] = {
      {"negative_fraction", result.negative_fraction},
      {"min_value", round_sig12(result.min_value)},
      {"argmin_theta", round_sig12(result.argmin_theta)},
      {"argmin_phi", round_sig12(result.argmin_phi)},
  };
  out << doc.dump(2) << '\n';
}

void emit(const ScanResult& result) {
  const std::string& path = result.config.output_path;
  if (path.empty()) throw std::runtime_error("emit: empty output path");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit: cannot open '" + path + "': " + std::strerror(errno));
  if (result.config.format == OutputFormat::csv)
    emit_csv(result, out);
  else
    emit_json(result, out);
  out.flush();
  if (!out) throw std::runtime_error("emit: write to '" + path + "' failed");
}

CheckSummary run_checks(CheckKind kind, int trials, std::size_t dim, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("run_checks: trials must be >= 1");
  if (dim < 2) throw std::invalid_argument("run_checks: dim must be >= 2");

  CheckSummary summary;
  summary.kind = kind;
  summary.trials = trials;
  summary.dim = dim;
  summary.seed = seed;

  switch (kind) {
    case CheckKind::mu: {
      for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const DensityMatrix rho = random_density(dim, rng);
        const Observable x = random_nondegenerate_observable(dim, rng);
        const Observable z = random_nondegenerate_observable(dim, rng);
        const BoundReport r = maassen_uffink_check(rho, x, z);
        summary.min_slack = std::min(summary.min_slack, r.slack);
        if (!r.satisfied) ++summary.violations;
      }
      break;
    }
    case CheckKind::berta: {
      for (int t = 0; t < trials; ++t) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
        const BipartiteState rho_ab = random_bipartite(dim, dim, rng);
        const Observable x = random_nondegenerate_observable(dim, rng);
        const Observable z = random_nondegenerate_observable(dim, rng);
        const BoundReport r = berta_check(rho_ab, x, z);
        summary.min_slack = std::min(summary.min_slack, r.slack);
        if (!r.satisfied) ++summary.violations;
      }
      break;
    }
    case CheckKind::theorem: {
      // Spin components of the matching rotor make the canonical X, Z pair.
      const SpinOperators ops = spin_operators(Spin(static_cast<int>(dim) - 1));
      const TheoremSweepSummary ts =
          theorem_sweep(dim, trials, Observable(ops.sx), Observable(ops.sz), seed);
      summary.violations = ts.violations;
      summary.min_slack = ts.min_slack;
      summary.min_member_mu_slack = ts.min_member_mu_slack;
      summary.min_averaging_slack = ts.min_averaging_slack;
      break;
    }
  }
  return summary;
}

std::string summary_line(const CheckSummary& summary) {
  const char* name = summary.kind == CheckKind::mu       ? "mu"
                     : summary.kind == CheckKind::berta  ? "berta"
                                                         : "theorem";
  std::ostringstream out;
  out << "check " << name << ": trials=" << summary.trials << " dim=" << summary.dim
      << " seed=" << summary.seed << " violations=" << summary.violations
      << " min_slack=" << format_sig12(summary.min_slack);
  if (summary.kind == CheckKind::theorem) {
    out << " min_member_mu_slack=" << format_sig12(summary.min_member_mu_slack)
        << " min_averaging_slack=" << format_sig12(summary.min_averaging_slack);
  }
  return out.str();
}

}  // namespace seqent
