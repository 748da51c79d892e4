#pragma once

#include <vector>

#include "seqent/linalg.hpp"
#include "seqent/spin.hpp"

namespace seqent {

// Normalized quantum state: Hermitian, unit trace, positive semidefinite
// within the central tolerances; all three are checked at construction.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);
  static DensityMatrix maximally_mixed(std::size_t dim);
  static DensityMatrix pure(const std::vector<cx>& amplitudes);  // normalizes

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

// Hermitian observable with cached spectral data. Projectors are grouped by
// eigenvalue clusters (width tol::degeneracy_cluster), so a degenerate
// spectrum yields fewer, higher-rank projectors; outcomes stay ascending.
class Observable {
 public:
  explicit Observable(Matrix m);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const EigenSystem& spectrum() const { return spectrum_; }
  std::size_t n_outcomes() const { return outcomes_.size(); }
  double outcome(std::size_t k) const { return outcomes_[k]; }
  const std::vector<double>& outcomes() const { return outcomes_; }
  const Matrix& projector(std::size_t k) const { return projectors_[k]; }
  bool nondegenerate() const { return outcomes_.size() == dim(); }

 private:
  Matrix m_;
  EigenSystem spectrum_;
  std::vector<double> outcomes_;
  std::vector<Matrix> projectors_;
};

// P(a, b) over labeled outcomes of a first (a) and second (b) measurement.
// Entries in [-tol::prob_clamp, 0) clamp to zero; a total off by more than
// tol::prob_sum is rejected rather than silently repaired.
class JointDistribution {
 public:
  JointDistribution(std::vector<double> labels_a, std::vector<double> labels_b,
                    std::vector<double> p_row_major);

  std::size_t n_a() const { return labels_a_.size(); }
  std::size_t n_b() const { return labels_b_.size(); }
  double at(std::size_t i, std::size_t j) const { return p_[i * n_b() + j]; }
  const std::vector<double>& probabilities() const { return p_; }
  const std::vector<double>& labels_a() const { return labels_a_; }
  const std::vector<double>& labels_b() const { return labels_b_; }
  std::vector<double> marginal_a() const;  // sum over b
  std::vector<double> marginal_b() const;  // sum over a

 private:
  std::vector<double> labels_a_, labels_b_;
  std::vector<double> p_;
};

class BipartiteState {
 public:
  BipartiteState(std::size_t dim_a, std::size_t dim_b, Matrix m);

  std::size_t dim_a() const { return dim_a_; }
  std::size_t dim_b() const { return dim_b_; }
  const DensityMatrix& state() const { return state_; }
  const Matrix& matrix() const { return state_.matrix(); }
  Matrix reduced_a() const;  // trace out B
  Matrix reduced_b() const;  // trace out A

 private:
  std::size_t dim_a_, dim_b_;
  DensityMatrix state_;
};

// Born probabilities p_k = Tr[rho P_k], one per observable outcome.
std::vector<double> measure_distribution(const DensityMatrix& rho, const Observable& obs);

// Two-time statistics of projective measurements: P(a, b) = Tr[P_a rho P_a P_b],
// outcome a recorded first, b on the collapsed state.
JointDistribution sequential_joint(const DensityMatrix& rho, const Observable& first,
                                   const Observable& second);

// Closed-form spin rotor statistics P(m0, m) = |d^s_{m m0}(angle)|^2 / (2s+1)
// for the maximally mixed initial state; labels ascending m = -s..s to match
// sequential_joint's eigenvalue ordering.
JointDistribution sequential_joint_spin(Spin spin, double angle);

// Post-measurement bipartite state sum_k (P_k x I) rho (P_k x I) for a
// measurement on subsystem A. The B marginal is unchanged.
BipartiteState post_measurement_bipartite(const BipartiteState& rho_ab,
                                          const Observable& on_a);

// Maximally entangled state (1/sqrt(d)) sum_k |kk> as a density matrix.
BipartiteState bell_state(std::size_t d);

}  // namespace seqent
