#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "seqent/entropy.hpp"
#include "seqent/quantum.hpp"
#include "seqent/random.hpp"
#include "testutil.hpp"

using namespace seqent;
using namespace seqent::testutil;

namespace {
constexpr double kPi = 3.14159265358979323846;

Observable tilted_qubit(double angle) {
  // cos(a) sigma_z + sin(a) sigma_x
  return Observable(std::cos(angle) * sigma_z() + std::sin(angle) * sigma_x());
}
}  // namespace

TEST_CASE("DensityMatrix: invariants enforced at construction") {
  CHECK_THROWS_AS(DensityMatrix(Matrix::identity(2)), std::invalid_argument);  // trace 2
  CHECK_THROWS_AS(DensityMatrix(Matrix::from_rows({{0.5, 0.5}, {0.0, 0.5}})),
                  std::invalid_argument);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix(Matrix::from_rows({{1.5, 0.0}, {0.0, -0.5}})),
                  std::invalid_argument);  // negative eigenvalue
  CHECK(DensityMatrix::maximally_mixed(3).dim() == 3);
  const DensityMatrix psi = DensityMatrix::pure({cx(3.0, 0.0), cx(0.0, 4.0)});
  CHECK(std::abs(psi.matrix().trace() - cx(1.0, 0.0)) < 1e-14);
}

TEST_CASE("Observable: spectral cache and projector algebra") {
  Rng rng(606);
  for (std::size_t d = 2; d <= 5; ++d) {
    const Observable obs(random_hermitian(d, rng));
    Matrix sum(d, d);
    for (std::size_t k = 0; k < obs.n_outcomes(); ++k) {
      sum += obs.projector(k);
      for (std::size_t l = 0; l < obs.n_outcomes(); ++l) {
        const Matrix prod = obs.projector(k) * obs.projector(l);
        if (k == l)
          CHECK(max_abs_diff(prod, obs.projector(k)) < 1e-9);
        else
          CHECK(max_abs_diff(prod, Matrix(d, d)) < 1e-9);
      }
    }
    CHECK(max_abs_diff(sum, Matrix::identity(d)) < 1e-10);
  }
  // Degenerate spectrum clusters into one higher-rank projector.
  const Observable ident(Matrix::identity(3));
  CHECK(ident.n_outcomes() == 1);
  CHECK_FALSE(ident.nondegenerate());

  // Hidden two-fold degeneracy: diag(1, 1, 2) conjugated by a random unitary.
  Rng rot_rng(608);
  const Matrix u = expm_skew_hermitian(random_hermitian(3, rot_rng), 1.3);
  Matrix degenerate(3, 3);
  degenerate(0, 0) = 1.0;
  degenerate(1, 1) = 1.0;
  degenerate(2, 2) = 2.0;
  const Observable two_level(u * degenerate * u.adjoint());
  REQUIRE(two_level.n_outcomes() == 2);
  CHECK_FALSE(two_level.nondegenerate());
  CHECK(two_level.outcome(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(two_level.outcome(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::abs(two_level.projector(0).trace() - cx(2.0, 0.0)) < 1e-10);
  CHECK(std::abs(two_level.projector(1).trace() - cx(1.0, 0.0)) < 1e-10);
  const Matrix idem = two_level.projector(0) * two_level.projector(0);
  CHECK(max_abs_diff(idem, two_level.projector(0)) < 1e-9);
}

TEST_CASE("measure_distribution: Born probabilities") {
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  const auto p = measure_distribution(mixed, Observable(sigma_z()));
  CHECK(p[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(0.5).epsilon(1e-14));

  // Uniform outcomes for the maximally mixed spin state measured along x.
  for (int twice_s : {1, 2, 3}) {
    const Spin spin(twice_s);
    const auto u = measure_distribution(DensityMatrix::maximally_mixed(spin.dim()),
                                        Observable(spin_operators(spin).sx));
    for (double v : u) CHECK(v == doctest::Approx(1.0 / spin.dim()).epsilon(1e-12));
  }

  const DensityMatrix up = DensityMatrix::pure({1.0, 0.0});
  const auto q = measure_distribution(up, Observable(sigma_z()));
  CHECK(q[0] == doctest::Approx(0.0).epsilon(1e-14));  // outcome -1
  CHECK(q[1] == doctest::Approx(1.0).epsilon(1e-14));  // outcome +1

  CHECK_THROWS_AS(measure_distribution(mixed, Observable(Matrix::identity(3))),
                  std::invalid_argument);
}

TEST_CASE("sequential_joint: qubit closed form 1/4 [1 + x0 x cos(theta)]") {
  // theta is the Bloch angle between the prior axis and the later axis, as in
  // the rotor runs: X0 sits at theta + pi/2 from z when X = sigma_x, Z0 sits
  // at phi from z when Z = sigma_z.
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(2);
  const Observable x = Observable(sigma_x());
  const Observable z = Observable(sigma_z());
  for (double theta : {0.0, 0.37, 1.1, kPi / 2.0, 2.6, 5.0}) {
    const JointDistribution jx = sequential_joint(mixed, tilted_qubit(theta + kPi / 2.0), x);
    const JointDistribution jz = sequential_joint(mixed, tilted_qubit(theta), z);
    // Labels ascend: index 0 -> outcome -1, index 1 -> +1.
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) {
        const double expected =
            0.25 * (1.0 + jx.labels_a()[a] * jx.labels_b()[b] * std::cos(theta));
        CHECK(jx.at(a, b) == doctest::Approx(expected).epsilon(1e-13));
        CHECK(jz.at(a, b) == doctest::Approx(expected).epsilon(1e-13));
      }
  }
}

TEST_CASE("sequential_joint: repeating a measurement correlates perfectly") {
  Rng rng(17);
  const DensityMatrix rho = random_density(3, rng);
  const Observable obs = random_nondegenerate_observable(3, rng);
  const JointDistribution j = sequential_joint(rho, obs, obs);
  const auto p = measure_distribution(rho, obs);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      CHECK(j.at(a, b) == doctest::Approx(a == b ? p[a] : 0.0).epsilon(1e-12));
}

TEST_CASE("sequential_joint: marginal over the later outcome") {
  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = random_density(4, rng);
    const Observable first = random_nondegenerate_observable(4, rng);
    const Observable second = random_nondegenerate_observable(4, rng);
    const JointDistribution j = sequential_joint(rho, first, second);
    const auto marg = j.marginal_a();
    const auto direct = measure_distribution(rho, first);
    for (std::size_t a = 0; a < 4; ++a)
      CHECK(std::abs(marg[a] - direct[a]) < 1e-12);
  }
}

TEST_CASE("sequential_joint: maximally mixed state gives Tr[Pa Pb]/d symmetry") {
  Rng rng(29);
  const DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
  const Observable first = random_nondegenerate_observable(3, rng);
  const Observable second = random_nondegenerate_observable(3, rng);
  const JointDistribution fwd = sequential_joint(mixed, first, second);
  const JointDistribution rev = sequential_joint(mixed, second, first);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) CHECK(std::abs(fwd.at(a, b) - rev.at(b, a)) < 1e-13);
}

TEST_CASE("sequential_joint_spin: closed form and cross-module agreement") {
  // s = 1/2: P(+,+) = cos^2(theta/2) / 2, uniform marginals.
  for (double theta : {0.15, 1.0, 2.5}) {
    const JointDistribution j = sequential_joint_spin(Spin(1), theta);
    const double c2 = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    CHECK(j.at(1, 1) == doctest::Approx(0.5 * c2).epsilon(1e-13));
    CHECK(j.at(0, 0) == doctest::Approx(0.5 * c2).epsilon(1e-13));
    CHECK(j.at(0, 1) == doctest::Approx(0.5 * (1.0 - c2)).epsilon(1e-13));
    for (double m : j.marginal_a()) CHECK(m == doctest::Approx(0.5).epsilon(1e-12));
    for (double m : j.marginal_b()) CHECK(m == doctest::Approx(0.5).epsilon(1e-12));
  }

  // angle 0: diagonal 1/(2s+1)
  const JointDistribution diag = sequential_joint_spin(Spin(3), 0.0);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      CHECK(diag.at(a, b) == doctest::Approx(a == b ? 0.25 : 0.0).epsilon(1e-14));

  // General route: first = S_z rotated to angle theta + pi/2, second = S_x.
  Rng rng(31);
  for (int twice_s : {1, 2, 3, 4}) {
    const Spin spin(twice_s);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(spin.dim());
    const SpinOperators ops = spin_operators(spin);
    for (int rep = 0; rep < 4; ++rep) {
      const double theta = rng.uniform(-6.0, 6.0);
      const JointDistribution closed = sequential_joint_spin(spin, theta);
      const JointDistribution general = sequential_joint(
          mixed, Observable(evolved_sz(spin, theta + kPi / 2.0)), Observable(ops.sx));
      for (std::size_t a = 0; a < spin.dim(); ++a)
        for (std::size_t b = 0; b < spin.dim(); ++b)
          CHECK(std::abs(closed.at(a, b) - general.at(a, b)) < 1e-10);
    }
  }
}

TEST_CASE("post_measurement_bipartite: fixed points and collapse") {
  // Eigenstate product state is unchanged.
  const BipartiteState eigen_prod(
      2, 2, kron(DensityMatrix::pure({1.0, 0.0}).matrix(),
                 DensityMatrix::pure({cx(1.0, 0.0), cx(0.0, 1.0)}).matrix()));
  const BipartiteState after = post_measurement_bipartite(eigen_prod, Observable(sigma_z()));
  CHECK(max_abs_diff(after.matrix(), eigen_prod.matrix()) < 1e-12);

  // Bell state measured in z collapses onto the classically correlated mix.
  const BipartiteState bell = bell_state(2);
  const BipartiteState collapsed = post_measurement_bipartite(bell, Observable(sigma_z()));
  Matrix expect(4, 4);
  expect(0, 0) = 0.5;
  expect(3, 3) = 0.5;
  CHECK(max_abs_diff(collapsed.matrix(), expect) < 1e-12);

  // Maximally mixed is a fixed point of any projective measurement.
  Rng rng(37);
  const BipartiteState mixed(2, 2, 0.25 * Matrix::identity(4));
  const Observable any = random_nondegenerate_observable(2, rng);
  CHECK(max_abs_diff(post_measurement_bipartite(mixed, any).matrix(), mixed.matrix()) < 1e-12);
}

TEST_CASE("post_measurement_bipartite: idempotent, keeps the B marginal") {
  Rng rng(41);
  for (int rep = 0; rep < 8; ++rep) {
    const BipartiteState rho_ab = random_bipartite(2, 3, rng);
    const Observable on_a = random_nondegenerate_observable(2, rng);
    const BipartiteState once = post_measurement_bipartite(rho_ab, on_a);
    const BipartiteState twice = post_measurement_bipartite(once, on_a);
    CHECK(max_abs_diff(once.matrix(), twice.matrix()) < 1e-12);
    CHECK(max_abs_diff(once.reduced_b(), rho_ab.reduced_b()) < 1e-10);
  }
  CHECK_THROWS_AS(post_measurement_bipartite(random_bipartite(2, 2, rng),
                                             Observable(Matrix::identity(3))),
                  std::invalid_argument);
}

TEST_CASE("bell_state: corners, reduced state, purity") {
  const BipartiteState bell = bell_state(2);
  for (std::size_t k : {0, 3})
    for (std::size_t l : {0, 3})
      CHECK(std::abs(bell.matrix()(k, l) - cx(0.5, 0.0)) < 1e-15);
  CHECK(std::abs(bell.matrix()(1, 1)) == 0.0);

  for (std::size_t d : {2, 3, 5}) {
    const BipartiteState phi = bell_state(d);
    CHECK(max_abs_diff(phi.reduced_a(),
                       (1.0 / static_cast<double>(d)) * Matrix::identity(d)) < 1e-14);
    const Matrix sq = phi.matrix() * phi.matrix();
    CHECK(std::abs(sq.trace() - cx(1.0, 0.0)) < 1e-12);
  }
  CHECK_THROWS_AS(bell_state(1), std::invalid_argument);
}
