// Python bindings for the lattice determinant core. Exact integer results
// cross the boundary as decimal strings; everything else is plain floats
// and lists. Exceptions map to ValueError / RuntimeError via pybind11's
// standard translation.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "latdet/asympt.hpp"
#include "latdet/exact.hpp"
#include "latdet/precision.hpp"
#include "latdet/specfun.hpp"
#include "latdet/spectra.hpp"
#include "latdet/zetadet.hpp"

namespace py = pybind11;

namespace {

latdet::exact::GraphKind graph_kind(const std::string& kind) {
  if (kind == "grid") return latdet::exact::GraphKind::grid;
  if (kind == "torus") return latdet::exact::GraphKind::torus;
  if (kind == "qad") return latdet::exact::GraphKind::qad;
  throw std::invalid_argument("kind must be grid, torus or qad");
}

latdet::spectra::LatticeSpec lattice_spec(const std::string& kind,
                                          const std::vector<int>& sides) {
  latdet::spectra::LatticeSpec spec;
  if (kind == "torus") {
    spec.kind = latdet::spectra::LatticeKind::torus;
  } else if (kind != "grid") {
    throw std::invalid_argument("kind must be grid or torus");
  }
  spec.sides = sides;
  spec.validate();
  return spec;
}

latdet::Precision precision_arg(const std::string& name) {
  return latdet::precision_from_name(name);
}

latdet::zetadet::ZetaConvention convention_arg(const std::string& name) {
  if (name == "single") return latdet::zetadet::ZetaConvention::single;
  if (name == "doubled") return latdet::zetadet::ZetaConvention::doubled;
  throw std::invalid_argument("convention must be single or doubled");
}

latdet::zetadet::DomainKind domain_kind(const std::string& name) {
  if (name == "interval") return latdet::zetadet::DomainKind::interval;
  if (name == "orthotope") return latdet::zetadet::DomainKind::orthotope;
  if (name == "torus") return latdet::zetadet::DomainKind::torus;
  if (name == "triangle") return latdet::zetadet::DomainKind::triangle;
  throw std::invalid_argument("domain must be interval, orthotope, torus or triangle");
}

py::dict rhs_to_dict(const latdet::asympt::TheoremRHS& rhs) {
  py::dict d;
  d["bulk"] = rhs.bulk;
  d["boundary"] = rhs.boundary;
  d["log_coefficient"] = rhs.log_coefficient;
  d["constant"] = rhs.constant;
  d["degree"] = rhs.degree;
  return d;
}

}  // namespace

PYBIND11_MODULE(_latdet, m) {
  m.doc() = "lattice Laplacian determinants, tree counts, and their expansions";

  m.def(
      "tau",
      [](const std::string& kind, const std::vector<int>& sizes) {
        std::vector<int> params = sizes;
        if (kind == "torus")
          for (int& s : params) s *= 2;  // torus sizes are the half-sides
        const auto g = latdet::exact::build_graph(graph_kind(kind), params);
        return latdet::exact::matrix_tree(g).get_str();
      },
      py::arg("kind"), py::arg("sizes"),
      "exact spanning tree count as a decimal string");

  m.def(
      "forest_polynomial",
      [](const std::string& kind, const std::vector<int>& sizes) {
        const auto g = latdet::exact::build_graph(graph_kind(kind), sizes);
        const auto poly = latdet::exact::forest_polynomial(g);
        std::vector<std::string> out;
        out.reserve(poly.coeffs.size());
        for (const auto& c : poly.coeffs) out.push_back(c.get_str());
        return out;
      },
      py::arg("kind"), py::arg("sizes"),
      "coefficients of det(Laplacian + x I) as decimal strings, low degree first");

  m.def(
      "verify_torus_grid_identity",
      [](int n1, int n2) {
        const auto w = latdet::exact::verify_torus_grid_identity(n1, n2);
        return py::make_tuple(w.ok, w.lhs.get_str(), w.rhs.get_str());
      },
      py::arg("n1"), py::arg("n2"));

  m.def(
      "verify_qad_identity",
      [](int n) {
        const auto w = latdet::exact::verify_qad_identity(n);
        return py::make_tuple(w.ok, w.lhs.get_str(), w.rhs.get_str());
      },
      py::arg("n"));

  m.def(
      "tau_qad_product",
      [](int n, const std::string& precision) {
        return latdet::exact::tau_qad_product(n, precision_arg(precision));
      },
      py::arg("n"), py::arg("precision") = "standard",
      "log of the staircase tree count via the closed double product");

  m.def(
      "log_det_star",
      [](const std::string& kind, const std::vector<int>& sides) {
        return latdet::spectra::log_det_star(lattice_spec(kind, sides));
      },
      py::arg("kind"), py::arg("sides"),
      "sum of log lambda over the nonzero Laplacian spectrum");

  m.def(
      "theta",
      [](const std::string& kind, const std::vector<int>& sides, double t) {
        return latdet::spectra::theta(lattice_spec(kind, sides), t);
      },
      py::arg("kind"), py::arg("sides"), py::arg("t"), "heat trace at time t");

  m.def(
      "spectral_sum",
      [](const std::string& kind, const std::vector<int>& sides, int p) {
        return latdet::spectra::spectral_sum(lattice_spec(kind, sides), p);
      },
      py::arg("kind"), py::arg("sides"), py::arg("p"),
      "sum of lambda^-p over the nonzero spectrum, p in {1, 2}");

  m.def("catalan", &latdet::specfun::catalan);
  m.def("dedekind_eta_imag", &latdet::specfun::dedekind_eta_imag, py::arg("y"),
        "Dedekind eta at purely imaginary argument iy");

  m.def("c_d", &latdet::asympt::c_d, py::arg("d"), py::arg("abs_tol") = 1e-10,
        "bulk constant of the log det expansion");
  m.def("boundary_coeff", &latdet::asympt::boundary_coeff, py::arg("d"), py::arg("m"),
        py::arg("abs_tol") = 1e-10, "m-face coefficient of the expansion in dimension d");
  m.def("watson", &latdet::asympt::watson, py::arg("d"), py::arg("abs_tol") = 1e-10,
        "lattice Green function of Z^d at the origin, d >= 3");
  m.def("green", &latdet::asympt::green, py::arg("d"), py::arg("k"), py::arg("w"),
        py::arg("abs_tol") = 1e-10, "generalized lattice Green integral G_d(k, w)");
  m.def("glasser_j", &latdet::asympt::glasser_j, py::arg("m"), py::arg("w"),
        py::arg("abs_tol") = 1e-10, "Mahler measure integral J_m(w), w >= m");

  m.def(
      "theorem1_rhs",
      [](const std::vector<int>& alphas, const std::string& convention) {
        return rhs_to_dict(latdet::asympt::theorem1_rhs({alphas}, convention_arg(convention)));
      },
      py::arg("alphas"), py::arg("convention") = "single",
      "expansion coefficients of log tau for the alpha-box family");

  m.def(
      "theorem3_rhs",
      [](const std::string& convention) {
        return rhs_to_dict(latdet::asympt::theorem3_rhs(convention_arg(convention)));
      },
      py::arg("convention") = "single",
      "expansion coefficients of the staircase log tau");

  m.def(
      "residual_sweep",
      [](const std::string& target, const std::vector<int>& alphas,
         const std::vector<long>& n_list, const std::string& convention,
         const std::string& precision) {
        const auto tgt = [&] {
          if (target == "theorem1") return latdet::asympt::SweepTarget::theorem1;
          if (target == "theorem3") return latdet::asympt::SweepTarget::theorem3;
          throw std::invalid_argument("target must be theorem1 or theorem3");
        }();
        const auto recs = latdet::asympt::residual_sweep(
            tgt, {alphas}, n_list, convention_arg(convention), precision_arg(precision));
        py::list out;
        for (const auto& r : recs) {
          py::dict d;
          d["n"] = r.n;
          d["lhs"] = r.lhs;
          d["rhs_partial"] = r.rhs_partial;
          d["residual"] = r.residual;
          out.append(d);
        }
        return out;
      },
      py::arg("target"), py::arg("alphas"), py::arg("n_list"),
      py::arg("convention") = "single", py::arg("precision") = "standard");

  m.def(
      "forest_prediction",
      [](int k, const std::vector<int>& alphas, long n) {
        return latdet::asympt::forest_prediction(static_cast<int>(alphas.size()), {alphas},
                                                 n, k);
      },
      py::arg("k"), py::arg("alphas"), py::arg("n"),
      "leading-order prediction of the k-forest to tree ratio");

  m.def(
      "zeta_prime0_interval",
      [](double alpha, const std::string& convention) {
        return latdet::zetadet::zeta_prime0_interval(alpha, convention_arg(convention));
      },
      py::arg("alpha"), py::arg("convention") = "single");
  m.def("zeta_prime0_orthotope", &latdet::zetadet::zeta_prime0_orthotope, py::arg("lengths"));
  m.def("epstein_zeta_prime0", &latdet::zetadet::epstein_zeta_prime0, py::arg("lengths"));
  m.def("zeta_prime0_triangle", &latdet::zetadet::zeta_prime0_triangle);
  m.def("zeta_prime0_triangle_direct", &latdet::zetadet::zeta_prime0_triangle_direct);

  m.def(
      "det_star",
      [](const std::string& domain, const std::vector<double>& lengths) {
        latdet::zetadet::DomainSpec spec;
        spec.kind = domain_kind(domain);
        spec.lengths = lengths;
        return latdet::zetadet::det_star(spec);
      },
      py::arg("domain"), py::arg("lengths") = std::vector<double>{},
      "zeta-regularized determinant of the continuum domain Laplacian");
}
