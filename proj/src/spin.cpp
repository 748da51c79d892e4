#include "seqent/spin.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace seqent {

namespace {

constexpr int kMaxTwiceSpin = 40;

// Factorials 0..40 built by integer recurrence in long double; exact through
// 20!, correctly rounded to <= 1 ulp beyond.
const std::array<long double, kMaxTwiceSpin + 1>& factorial_table() {
  static const auto table = [] {
    std::array<long double, kMaxTwiceSpin + 1> f{};
    f[0] = 1.0L;
    for (int n = 1; n <= kMaxTwiceSpin; ++n) f[n] = f[n - 1] * static_cast<long double>(n);
    return f;
  }();
  return table;
}

long double ipow(long double base, int exponent) {
  long double r = 1.0L;
  long double b = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

// Single d^s_{m'm} entry; twice_* arguments keep half-integers exact.
double wigner_entry(int twice_s, int twice_mp, int twice_m, long double cos_half,
                    long double sin_half) {
  const auto& f = factorial_table();
  const int s_plus_m = (twice_s + twice_m) / 2;
  const int s_minus_m = (twice_s - twice_m) / 2;
  const int s_plus_mp = (twice_s + twice_mp) / 2;
  const int s_minus_mp = (twice_s - twice_mp) / 2;
  const int mp_minus_m = (twice_mp - twice_m) / 2;

  const long double pref =
      std::sqrt(f[s_plus_mp] * f[s_minus_mp] * f[s_plus_m] * f[s_minus_m]);

  const int k_min = std::max(0, -mp_minus_m);
  const int k_max = std::min(s_plus_m, s_minus_mp);

  // Kahan compensation: the alternating terms can cancel several digits for
  // large s.
  long double sum = 0.0L, comp = 0.0L;
  for (int k = k_min; k <= k_max; ++k) {
    const long double den =
        f[s_plus_m - k] * f[k] * f[s_minus_mp - k] * f[mp_minus_m + k];
    long double term = ipow(cos_half, s_plus_m + s_minus_mp - 2 * k) *
                       ipow(sin_half, mp_minus_m + 2 * k) / den;
    if ((mp_minus_m + k) & 1) term = -term;
    const long double y = term - comp;
    const long double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return static_cast<double>(pref * sum);
}

}  // namespace

Spin::Spin(int twice_s_) : twice_s(twice_s_) {
  if (twice_s < 1) throw std::invalid_argument("Spin: twice_s must be >= 1");
  if (twice_s > kMaxTwiceSpin)
    throw std::invalid_argument("Spin: twice_s beyond factorial table range");
}

SpinOperators spin_operators(Spin spin) {
  const std::size_t d = spin.dim();
  SpinOperators ops{Matrix(d, d), Matrix(d, d), Matrix(d, d)};
  for (std::size_t i = 0; i < d; ++i) ops.sz(i, i) = spin.m(i);
  // S+ raises m: with m = s..-s ordering it sits one row above the diagonal.
  const double s = spin.s();
  for (std::size_t j = 1; j < d; ++j) {
    const double m = spin.m(j);
    const double amp = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
    ops.sx(j - 1, j) += 0.5 * amp;
    ops.sx(j, j - 1) += 0.5 * amp;
    ops.sy(j - 1, j) += cx(0.0, -0.5) * amp;
    ops.sy(j, j - 1) += cx(0.0, 0.5) * amp;
  }
  return ops;
}

WignerD::WignerD(Spin spin, double angle, std::vector<double> entries)
    : spin_(spin), angle_(angle), d_(std::move(entries)) {
  if (d_.size() != spin_.dim() * spin_.dim())
    throw std::invalid_argument("WignerD: entry count does not match dimension");
}

Matrix WignerD::to_matrix() const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = (*this)(i, j);
  return m;
}

WignerD wigner_small_d(Spin spin, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("wigner_small_d: non-finite angle");
  const std::size_t d = spin.dim();
  const long double cos_half = std::cos(0.5L * static_cast<long double>(theta));
  const long double sin_half = std::sin(0.5L * static_cast<long double>(theta));
  std::vector<double> entries(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      entries[i * d + j] =
          wigner_entry(spin.twice_s, spin.twice_m(i), spin.twice_m(j), cos_half, sin_half);
  return WignerD(spin, theta, std::move(entries));
}

Matrix evolved_sz(Spin spin, double omega_t) {
  const SpinOperators ops = spin_operators(spin);
  Matrix m = ops.sz;
  m *= std::cos(omega_t);
  Matrix x = ops.sx;
  x *= std::sin(omega_t);
  m += x;
  return m;
}

}  // namespace seqent
