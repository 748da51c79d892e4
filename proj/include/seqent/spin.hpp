#pragma once

#include <vector>

#include "seqent/linalg.hpp"

namespace seqent {

// Spin quantum number carried as 2s, so half-integer spins stay exact.
// Basis ordering everywhere: m = s, s-1, ..., -s.
struct Spin {
  int twice_s;

  explicit Spin(int twice_s_);  // throws unless twice_s >= 1
  std::size_t dim() const { return static_cast<std::size_t>(twice_s) + 1; }
  int twice_m(std::size_t index) const { return twice_s - 2 * static_cast<int>(index); }
  double m(std::size_t index) const { return 0.5 * twice_m(index); }
  double s() const { return 0.5 * twice_s; }
};

struct SpinOperators {
  Matrix sx, sy, sz;
};

// Angular momentum matrices in the S_z eigenbasis (hbar = 1), built from the
// ladder elements <m+1|S+|m> = sqrt(s(s+1) - m(m+1)).
SpinOperators spin_operators(Spin spin);

// Rotation matrix d^s_{m'm}(theta) = <s m'| exp(-i theta S_y) |s m>,
// row index m' = s..-s, column index m = s..-s. Real orthogonal.
class WignerD {
 public:
  WignerD(Spin spin, double angle, std::vector<double> entries);

  Spin spin() const { return spin_; }
  double angle() const { return angle_; }
  std::size_t dim() const { return spin_.dim(); }
  double operator()(std::size_t i, std::size_t j) const { return d_[i * dim() + j]; }
  const std::vector<double>& entries() const { return d_; }
  Matrix to_matrix() const;

 private:
  Spin spin_;
  double angle_;
  std::vector<double> d_;
};

// Explicit Wigner sum formula with an exact factorial table; agrees with the
// matrix exponential of S_y to ~1e-13 for 2s <= 40.
WignerD wigner_small_d(Spin spin, double theta);

// Heisenberg-picture spin component S_z(t) = S_z cos(wt) + S_x sin(wt) of a
// spin rotating uniformly about the y axis.
Matrix evolved_sz(Spin spin, double omega_t);

}  // namespace seqent
