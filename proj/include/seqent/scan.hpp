#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>

#include "seqent/lhs.hpp"

namespace seqent {

enum class OutputFormat { csv, json };

struct ScanConfig {
  int twice_s = 1;
  double theta_min = 0.0;
  double theta_max = 6.283185307179586;  // 2 pi
  double phi_min = 0.0;
  double phi_max = 6.283185307179586;
  int resolution = 101;  // grid points per axis, endpoints included
  OutputFormat format = OutputFormat::csv;
  std::string output_path;
  int threads = 0;  // 0 = SEQENT_THREADS env var, else hardware count

  void validate() const;  // throws std::invalid_argument naming the bad field
  double theta_at(int i) const;
  double phi_at(int j) const;
};

struct ScanResult {
  ScanConfig config;
  std::vector<double> grid;  // resolution^2, row major, theta outer
  double negative_fraction = 0.0;  // cells below -tol::negative_cell
  double min_value = 0.0;
  double argmin_theta = 0.0;
  double argmin_phi = 0.0;
};

// Fills grid[i*res + j] = memory_witness(s, theta_i, phi_j). Rows are farmed
// to a worker pool; every cell is computed independently, so the result is
// identical for any thread count.
ScanResult run_scan(const ScanConfig& cfg);

// CSV: header `theta,phi,m`, one row per cell, %.12g values, theta-outer.
void emit_csv(const ScanResult& result, std::ostream& out);
// JSON: {"config": ..., "grid": [...], "summary": ...}; grid values carry the
// same 12-significant-digit rounding as the CSV so both parse identically.
void emit_json(const ScanResult& result, std::ostream& out);
// Writes result.config.output_path in result.config.format.
void emit(const ScanResult& result);

enum class CheckKind { mu, berta, theorem };

struct CheckSummary {
  CheckKind kind = CheckKind::mu;
  int trials = 0;
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  int violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  // theorem only; NaN otherwise
  double min_member_mu_slack = std::numeric_limits<double>::quiet_NaN();
  double min_averaging_slack = std::numeric_limits<double>::quiet_NaN();
};

// Randomized bound sweeps backing the `check` subcommand. Trial k draws from
// the derived seed stream, so summaries are reproducible for a given seed.
CheckSummary run_checks(CheckKind kind, int trials, std::size_t dim, std::uint64_t seed);

std::string summary_line(const CheckSummary& summary);

}  // namespace seqent
