// Python bindings for the seqent core: matrices cross the boundary as numpy
// arrays, probabilities as 1-D/2-D float arrays.

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

#include "seqent/bounds.hpp"
#include "seqent/entropy.hpp"
#include "seqent/lhs.hpp"
#include "seqent/quantum.hpp"
#include "seqent/scan.hpp"

namespace py = pybind11;
using namespace seqent;

namespace {

using ComplexArray = py::array_t<cx, py::array::c_style | py::array::forcecast>;
using RealArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

Matrix to_matrix(const ComplexArray& arr) {
  if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D array");
  Matrix m(static_cast<std::size_t>(arr.shape(0)), static_cast<std::size_t>(arr.shape(1)));
  auto view = arr.unchecked<2>();
  for (py::ssize_t i = 0; i < arr.shape(0); ++i)
    for (py::ssize_t j = 0; j < arr.shape(1); ++j)
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = view(i, j);
  return m;
}

py::array_t<cx> from_matrix(const Matrix& m) {
  py::array_t<cx> arr({m.rows(), m.cols()});
  auto view = arr.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = m(i, j);
  return arr;
}

py::array_t<double> real_matrix(const std::vector<double>& flat, std::size_t rows,
                                std::size_t cols) {
  py::array_t<double> arr({rows, cols});
  auto view = arr.mutable_unchecked<2>();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = flat[i * cols + j];
  return arr;
}

std::vector<double> to_vector(const RealArray& arr) {
  if (arr.ndim() != 1) throw std::invalid_argument("expected a 1-D array");
  auto view = arr.unchecked<1>();
  std::vector<double> v(static_cast<std::size_t>(arr.shape(0)));
  for (py::ssize_t k = 0; k < arr.shape(0); ++k) v[static_cast<std::size_t>(k)] = view(k);
  return v;
}

JointDistribution to_joint(const RealArray& arr) {
  if (arr.ndim() != 2) throw std::invalid_argument("expected a 2-D probability array");
  const auto na = static_cast<std::size_t>(arr.shape(0));
  const auto nb = static_cast<std::size_t>(arr.shape(1));
  auto view = arr.unchecked<2>();
  std::vector<double> p(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      p[i * nb + j] = view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j));
  std::vector<double> la(na), lb(nb);
  for (std::size_t i = 0; i < na; ++i) la[i] = static_cast<double>(i);
  for (std::size_t j = 0; j < nb; ++j) lb[j] = static_cast<double>(j);
  return JointDistribution(std::move(la), std::move(lb), std::move(p));
}

Subsystem parse_subsystem(const std::string& name) {
  if (name == "a") return Subsystem::a;
  if (name == "b") return Subsystem::b;
  throw std::invalid_argument("traced_out must be 'a' or 'b'");
}

CheckKind parse_kind(const std::string& name) {
  if (name == "mu") return CheckKind::mu;
  if (name == "berta") return CheckKind::berta;
  if (name == "theorem") return CheckKind::theorem;
  throw std::invalid_argument("kind must be one of: mu, berta, theorem");
}

py::dict summary_dict(const CheckSummary& s) {
  py::dict d;
  d["kind"] = s.kind == CheckKind::mu ? "mu" : s.kind == CheckKind::berta ? "berta" : "theorem";
  d["trials"] = s.trials;
  d["dim"] = s.dim;
  d["seed"] = s.seed;
  d["violations"] = s.violations;
  d["min_slack"] = s.min_slack;
  if (s.kind == CheckKind::theorem) {
    d["min_member_mu_slack"] = s.min_member_mu_slack;
    d["min_averaging_slack"] = s.min_averaging_slack;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Sequential-measurement statistics and entropic uncertainty bounds";

  py::class_<BoundReport>(m, "BoundReport")
      .def_readonly("lhs", &BoundReport::lhs)
      .def_readonly("rhs", &BoundReport::rhs)
      .def_readonly("slack", &BoundReport::slack)
      .def_readonly("satisfied", &BoundReport::satisfied)
      .def("__repr__", [](const BoundReport& r) {
        return "BoundReport(lhs=" + std::to_string(r.lhs) + ", rhs=" + std::to_string(r.rhs) +
               ", satisfied=" + (r.satisfied ? "True" : "False") + ")";
      });

  // spin
  m.def(
      "spin_operators",
      [](int twice_s) {
        const SpinOperators ops = spin_operators(Spin(twice_s));
        return py::make_tuple(from_matrix(ops.sx), from_matrix(ops.sy), from_matrix(ops.sz));
      },
      py::arg("twice_s"), "Angular momentum matrices (Sx, Sy, Sz) for spin twice_s/2.");
  m.def(
      "wigner_small_d",
      [](int twice_s, double theta) {
        const WignerD w = wigner_small_d(Spin(twice_s), theta);
        return real_matrix(w.entries(), w.dim(), w.dim());
      },
      py::arg("twice_s"), py::arg("theta"),
      "Rotation matrix d^s_{m'm}(theta), rows/columns ordered m = s..-s.");
  m.def(
      "evolved_sz",
      [](int twice_s, double omega_t) {
        return from_matrix(evolved_sz(Spin(twice_s), omega_t));
      },
      py::arg("twice_s"), py::arg("omega_t"), "Sz cos(wt) + Sx sin(wt).");

  // linear algebra
  m.def(
      "eig_hermitian",
      [](const ComplexArray& a) {
        const EigenSystem es = eig_hermitian(to_matrix(a));
        return py::make_tuple(py::cast(es.eigenvalues), from_matrix(es.eigenvectors));
      },
      py::arg("a"), "Ascending eigenvalues and orthonormal eigenvector columns.");
  m.def(
      "expm_skew_hermitian",
      [](const ComplexArray& g, double t) {
        return from_matrix(expm_skew_hermitian(to_matrix(g), t));
      },
      py::arg("g"), py::arg("t"), "exp(-i t G) for Hermitian G.");
  m.def(
      "kron",
      [](const ComplexArray& a, const ComplexArray& b) {
        return from_matrix(kron(to_matrix(a), to_matrix(b)));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "partial_trace",
      [](const ComplexArray& mat, const std::string& traced_out, std::size_t dim_a,
         std::size_t dim_b) {
        return from_matrix(partial_trace(to_matrix(mat), parse_subsystem(traced_out), dim_a,
                                         dim_b));
      },
      py::arg("m"), py::arg("traced_out"), py::arg("dim_a"), py::arg("dim_b"));
  m.def(
      "bell_state", [](std::size_t d) { return from_matrix(bell_state(d).matrix()); },
      py::arg("d"), "Maximally entangled state of two d-level systems.");

  // measurement statistics
  m.def(
      "measure_distribution",
      [](const ComplexArray& rho, const ComplexArray& obs) {
        return measure_distribution(DensityMatrix(to_matrix(rho)), Observable(to_matrix(obs)));
      },
      py::arg("rho"), py::arg("observable"),
      "Born probabilities over the ascending outcomes of the observable.");
  m.def(
      "sequential_joint",
      [](const ComplexArray& rho, const ComplexArray& first, const ComplexArray& second) {
        const JointDistribution j = sequential_joint(DensityMatrix(to_matrix(rho)),
                                                     Observable(to_matrix(first)),
                                                     Observable(to_matrix(second)));
        return py::make_tuple(real_matrix(j.probabilities(), j.n_a(), j.n_b()),
                              py::cast(j.labels_a()), py::cast(j.labels_b()));
      },
      py::arg("rho"), py::arg("first"), py::arg("second"),
      "Two-time statistics (P, labels_first, labels_second).");
  m.def(
      "sequential_joint_spin",
      [](int twice_s, double angle) {
        const JointDistribution j = sequential_joint_spin(Spin(twice_s), angle);
        return real_matrix(j.probabilities(), j.n_a(), j.n_b());
      },
      py::arg("twice_s"), py::arg("angle"),
      "Closed-form rotor statistics P(m0, m), labels ascending m = -s..s.");

  // entropies
  m.def("shannon", [](const RealArray& p) { return shannon(to_vector(p)); }, py::arg("p"));
  m.def("binary_entropy", &binary_entropy, py::arg("p"));
  m.def(
      "conditional_entropy",
      [](const RealArray& joint) { return conditional_entropy(to_joint(joint)); },
      py::arg("joint"), "H(B|A) of a 2-D joint with A as the row index.");
  m.def(
      "mutual_information",
      [](const RealArray& joint) { return mutual_information(to_joint(joint)); },
      py::arg("joint"));
  m.def(
      "relative_entropy",
      [](const RealArray& p, const RealArray& q) {
        return relative_entropy(Distribution(to_vector(p)), Distribution(to_vector(q)));
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "von_neumann_entropy",
      [](const ComplexArray& rho) { return von_neumann_entropy(DensityMatrix(to_matrix(rho))); },
      py::arg("rho"));
  m.def(
      "conditional_von_neumann",
      [](const ComplexArray& rho_ab, std::size_t dim_a, std::size_t dim_b) {
        return conditional_von_neumann(BipartiteState(dim_a, dim_b, to_matrix(rho_ab)));
      },
      py::arg("rho_ab"), py::arg("dim_a"), py::arg("dim_b"), "S(A|B), negative on entanglement.");

  // bounds
  m.def(
      "max_overlap",
      [](const ComplexArray& x, const ComplexArray& z) {
        return max_overlap(Observable(to_matrix(x)), Observable(to_matrix(z)));
      },
      py::arg("x"), py::arg("z"));
  m.def(
      "robertson_check",
      [](const ComplexArray& rho, const ComplexArray& x, const ComplexArray& z) {
        return robertson_check(DensityMatrix(to_matrix(rho)), Observable(to_matrix(x)),
                               Observable(to_matrix(z)));
      },
      py::arg("rho"), py::arg("x"), py::arg("z"));
  m.def(
      "maassen_uffink_check",
      [](const ComplexArray& rho, const ComplexArray& x, const ComplexArray& z) {
        return maassen_uffink_check(DensityMatrix(to_matrix(rho)), Observable(to_matrix(x)),
                                    Observable(to_matrix(z)));
      },
      py::arg("rho"), py::arg("x"), py::arg("z"));
  m.def(
      "berta_check",
      [](const ComplexArray& rho_ab, std::size_t dim_a, std::size_t dim_b,
         const ComplexArray& x, const ComplexArray& z) {
        return berta_check(BipartiteState(dim_a, dim_b, to_matrix(rho_ab)),
                           Observable(to_matrix(x)), Observable(to_matrix(z)));
      },
      py::arg("rho_ab"), py::arg("dim_a"), py::arg("dim_b"), py::arg("x"), py::arg("z"));
  m.def(
      "conditioned_bound_check",
      [](const ComplexArray& rho, const ComplexArray& x0, const ComplexArray& x,
         const ComplexArray& z0, const ComplexArray& z) {
        return conditioned_bound_check(DensityMatrix(to_matrix(rho)), Observable(to_matrix(x0)),
                                       Observable(to_matrix(x)), Observable(to_matrix(z0)),
                                       Observable(to_matrix(z)));
      },
      py::arg("rho"), py::arg("x0"), py::arg("x"), py::arg("z0"), py::arg("z"));
  m.def(
      "steering_witness",
      [](const RealArray& jx, const RealArray& jz, double c) {
        return steering_witness(to_joint(jx), to_joint(jz), c);
      },
      py::arg("jx"), py::arg("jz"), py::arg("c"),
      "Temporal steering check; satisfied=False certifies nonclassical correlations.");
  m.def(
      "memory_witness",
      [](int twice_s, double theta, double phi) {
        return memory_witness(Spin(twice_s), theta, phi);
      },
      py::arg("twice_s"), py::arg("theta"), py::arg("phi"),
      "M_s(theta, phi); negative values certify quantum temporal memory.");

  // scans and sweeps
  m.def(
      "run_scan",
      [](int twice_s, int resolution, std::pair<double, double> theta_range,
         std::pair<double, double> phi_range, int threads) {
        ScanConfig cfg;
        cfg.twice_s = twice_s;
        cfg.resolution = resolution;
        cfg.theta_min = theta_range.first;
        cfg.theta_max = theta_range.second;
        cfg.phi_min = phi_range.first;
        cfg.phi_max = phi_range.second;
        cfg.threads = threads;
        const ScanResult r = run_scan(cfg);
        const std::size_t res = static_cast<std::size_t>(cfg.resolution);
        std::vector<double> thetas(res), phis(res);
        for (std::size_t k = 0; k < res; ++k) {
          thetas[k] = cfg.theta_at(static_cast<int>(k));
          phis[k] = cfg.phi_at(static_cast<int>(k));
        }
        py::dict d;
        d["grid"] = real_matrix(r.grid, res, res);
        d["thetas"] = py::cast(thetas);
        d["phis"] = py::cast(phis);
        d["negative_fraction"] = r.negative_fraction;
        d["min_value"] = r.min_value;
        d["argmin_theta"] = r.argmin_theta;
        d["argmin_phi"] = r.argmin_phi;
        return d;
      },
      py::arg("twice_s"), py::arg("resolution") = 101,
      py::arg("theta_range") = std::pair<double, double>(0.0, 6.283185307179586),
      py::arg("phi_range") = std::pair<double, double>(0.0, 6.283185307179586),
      py::arg("threads") = 0,
      "Grid scan of the memory witness; returns grid, axes and summary stats.");
  m.def(
      "run_checks",
      [](const std::string& kind, int trials, std::size_t dim, std::uint64_t seed) {
        return summary_dict(run_checks(parse_kind(kind), trials, dim, seed));
      },
      py::arg("kind"), py::arg("trials") = 1000, py::arg("dim") = 2,
      py::arg("seed") = 12345, "Randomized sweep of one bound: kind in {mu, berta, theorem}.");
}
