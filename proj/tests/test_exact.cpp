#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "latdet/exact.hpp"
#include "latdet/spectra.hpp"

using namespace latdet::exact;

namespace {

// independent oracle: count spanning trees by enumerating all
// (vertex_count - 1)-subsets of edges and testing acyclic connectivity
// with a union-find; only for tiny graphs
long count_trees_by_enumeration(const GraphSpec& g) {
  const int n = g.vertex_count;
  const int m = static_cast<int>(g.edges.size());
  REQUIRE(m <= 20);
  long count = 0;
  for (unsigned subset = 0; subset < (1u << m); ++subset) {
    if (__builtin_popcount(subset) != n - 1) continue;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (int e = 0; e < m && acyclic; ++e) {
      if (!(subset & (1u << e))) continue;
      const int ru = find(g.edges[e].first), rv = find(g.edges[e].second);
      if (ru == rv)
        acyclic = false;
      else
        parent[ru] = rv;
    }
    if (acyclic) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("matrix tree counts on small lattices") {
  const auto c4 = build_graph(GraphKind::grid, {2, 2});
  CHECK(matrix_tree(c4) == 4);
  CHECK(count_trees_by_enumeration(c4) == 4);

  const auto g23 = build_graph(GraphKind::grid, {2, 3});
  CHECK(matrix_tree(g23) == 15);
  CHECK(count_trees_by_enumeration(g23) == 15);

  CHECK(matrix_tree(build_graph(GraphKind::grid, {3, 3})) == 192);
  CHECK(matrix_tree(build_graph(GraphKind::grid, {4, 4})) == 100352);
  CHECK(matrix_tree(build_graph(GraphKind::grid, {1})) == 1);

  const auto t22 = build_graph(GraphKind::torus, {2, 2});
  CHECK(t22.vertex_count == 4);
  CHECK(t22.edges.size() == 8);
  CHECK(matrix_tree(t22) == 32);
  CHECK(matrix_tree(build_graph(GraphKind::torus, {2, 4})) == 2304);
}

TEST_CASE("matrix tree on random multigraphs agrees with enumeration") {
  // fixed handmade multigraph: triangle with one doubled edge plus a tail
  GraphSpec g;
  g.vertex_count = 4;
  g.edges = {{0, 1}, {0, 1}, {1, 2}, {2, 0}, {2, 3}};
  CHECK(matrix_tree(g) == count_trees_by_enumeration(g));
  CHECK(matrix_tree(g) == 5);
}

TEST_CASE("disconnected graphs are rejected with a witness") {
  GraphSpec g;
  g.vertex_count = 5;
  g.edges = {{0, 1}, {2, 3}, {3, 4}};
  try {
    matrix_tree(g);
    FAIL("expected DisconnectedError");
  } catch (const DisconnectedError& e) {
    CHECK(e.component == std::vector<int>{0, 1});
  }
}

TEST_CASE("forest polynomial small cases") {
  const auto p = forest_polynomial(build_graph(GraphKind::grid, {2, 2}));
  const std::vector<mpz_class> want{0, 16, 20, 8, 1};
  CHECK(p.coeffs == want);

  const auto single = forest_polynomial(build_graph(GraphKind::grid, {1}));
  CHECK(single.coeffs == std::vector<mpz_class>{0, 1});

  const auto path2 = forest_polynomial(build_graph(GraphKind::grid, {2}));
  CHECK(path2.coeffs == std::vector<mpz_class>{0, 2, 1});
}

TEST_CASE("forest polynomial invariants") {
  for (const auto& g :
       {build_graph(GraphKind::grid, {2, 3}), build_graph(GraphKind::grid, {3, 3}),
        build_graph(GraphKind::torus, {2, 4}), build_graph(GraphKind::qad, {4})}) {
    const auto p = forest_polynomial(g);
    REQUIRE(static_cast<int>(p.coeffs.size()) == g.vertex_count + 1);
    CHECK(p.coeffs[0] == 0);
    CHECK(p.coeffs[1] == g.vertex_count * matrix_tree(g));
    CHECK(p.coeffs[g.vertex_count] == 1);
    for (const auto& c : p.coeffs) CHECK(c >= 0);
  }
}

TEST_CASE("forest polynomial matches the closed-form spectrum product") {
  using latdet::spectra::LatticeKind;
  using latdet::spectra::LatticeSpec;
  const auto p = forest_polynomial(build_graph(GraphKind::grid, {3, 3}));
  auto ev = latdet::spectra::eigenvalues(LatticeSpec{LatticeKind::grid, {3, 3}});
  // expand prod (lambda + x) in floating point
  std::vector<double> poly{1.0};
  for (double lambda : ev) {
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i] * lambda;
      next[i + 1] += poly[i];
    }
    poly = std::move(next);
  }
  REQUIRE(poly.size() == p.coeffs.size());
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const double exact_c = p.coeffs[i].get_d();
    CHECK(std::abs(poly[i] - exact_c) <= 1e-9 * std::max(1.0, std::abs(exact_c)));
  }
  // ratio of one- and two-tree forest counts equals the spectral sum
  const double n2_over_n1 = mpq_class(p.coeffs[2], p.coeffs[1]).get_d();
  const double s1 = latdet::spectra::spectral_sum(LatticeSpec{LatticeKind::grid, {3, 3}}, 1);
  CHECK(std::abs(n2_over_n1 - s1) <= 1e-12 * s1);
}

TEST_CASE("qad construction under both vertex rules") {
  const auto q3 = build_graph(GraphKind::qad, {3});
  CHECK(q3.vertex_count == 6);
  CHECK(q3.edges.size() == 6);
  CHECK(matrix_tree(q3) == 4);

  const auto q2 = build_graph(GraphKind::qad, {2});
  CHECK(q2.vertex_count == 3);  // a path; one spanning tree
  CHECK(matrix_tree(q2) == 1);

  // the uncorrected boundary rule yields the next size up
  const auto q2_stated = build_graph(GraphKind::qad, {2}, QadVertexRule::stated);
  CHECK(q2_stated.vertex_count == 6);
  CHECK(matrix_tree(q2_stated) == 4);

  CHECK(matrix_tree(build_graph(GraphKind::qad, {1})) == 1);
  CHECK(matrix_tree(build_graph(GraphKind::qad, {4})) == 56);
  CHECK(matrix_tree(build_graph(GraphKind::qad, {5})) == 2640);
}

TEST_CASE("chebyshev products and the algebraic-integer bridge") {
  CHECK(chebyshev_product(1, 5) == AlgebraicInt{5, 0});
  CHECK(chebyshev_product(3, 1) == AlgebraicInt{0, 4});
  CHECK(chebyshev_product(3, 2) == AlgebraicInt{0, 24});
  const std::vector<long> u{0, 1, 6, 35, 204, 1189, 6930, 40391};
  for (int n = 0; n < static_cast<int>(u.size()); ++n) CHECK(chebyshev_u(n) == u[n]);
  // 4 sqrt(2) U_n = (3 + 2 sqrt 2)^n - (3 - 2 sqrt 2)^n exactly
  for (int n = 0; n <= 64; ++n) {
    const AlgebraicInt lhs{0, 4 * chebyshev_u(n)};
    const AlgebraicInt rhs =
        AlgebraicInt{3, 2}.pow(n) - AlgebraicInt{3, -2}.pow(n);
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS(chebyshev_product(2, 3), std::invalid_argument);
  CHECK_THROWS_AS(chebyshev_product(3, 0), std::invalid_argument);
}

TEST_CASE("algebraic integer ring operations") {
  const AlgebraicInt x{3, 2};
  CHECK(x * x.conjugate() == AlgebraicInt{1, 0});  // norm of the fundamental unit
  CHECK(x.pow(0) == AlgebraicInt{1, 0});
  CHECK(x.pow(3) == x * x * x);
  CHECK((AlgebraicInt{1, 1} * AlgebraicInt{1, -1}) == AlgebraicInt{-1, 0});
  CHECK(AlgebraicInt{0, 4}.str() == "0+4*sqrt(2)");
  CHECK(AlgebraicInt{2, -3}.str() == "2-3*sqrt(2)");
}

TEST_CASE("torus-grid fourth-power identity on small sides") {
  for (int n1 = 1; n1 <= 3; ++n1) {
    for (int n2 = 1; n2 <= 3; ++n2) {
      const auto w = verify_torus_grid_identity(n1, n2);
      CHECK(w.ok);
      CHECK(w.lhs == w.rhs);
    }
  }
  CHECK(verify_torus_grid_identity(1, 1).lhs == 32);
  CHECK(verify_torus_grid_identity(1, 2).lhs == 2304);
}

TEST_CASE("square grid factors through the triangular count") {
  for (int n = 1; n <= 7; ++n) {
    const auto w = verify_qad_identity(n);
    CHECK(w.ok);
  }
  CHECK(verify_qad_identity(3).lhs == 192);
  CHECK_THROWS_AS(verify_qad_identity(13), std::invalid_argument);
}

TEST_CASE("interior-mode product form of the triangular count") {
  CHECK(tau_qad_product(2) == 0.0);
  CHECK(std::abs(tau_qad_product(3) - std::log(4.0)) <= 1e-13);
  for (int n : {6, 9, 12}) {
    const double lg = std::log(matrix_tree(build_graph(GraphKind::qad, {n})).get_d());
    CHECK(std::abs(tau_qad_product(n) - lg) <= 1e-10 * std::max(1.0, lg));
    const double ext = tau_qad_product(n, latdet::Precision::extended);
    CHECK(std::abs(ext - lg) <= 1e-10 * std::max(1.0, lg));
  }
  CHECK_THROWS_AS(tau_qad_product(0), std::invalid_argument);
  CHECK_THROWS_AS(tau_qad_product(1025), std::invalid_argument);
}

TEST_CASE("square grid log determinant matches the triangular decomposition") {
  using latdet::spectra::LatticeKind;
  using latdet::spectra::LatticeSpec;
  for (int n = 2; n <= 10; ++n) {
    const double lds = latdet::spectra::log_det_star(LatticeSpec{LatticeKind::grid, {n, n}});
    const double tau_log = tau_qad_product(n);
    const double rhs = std::log(static_cast<double>(n) * n)  // vertex count
                       + std::log(static_cast<double>(n)) + (n - 1) * std::log(2.0)
                       + 2.0 * tau_log;
    CHECK(std::abs(lds - rhs) <= 1e-10 * std::max(1.0, std::abs(lds)));
  }
}

TEST_CASE("edge list serialization round trips") {
  const auto g = build_graph(GraphKind::torus, {2, 2});
  const std::string text = to_edge_list(g);
  const auto back = parse_edge_list(text);
  CHECK(back.vertex_count == g.vertex_count);
  CHECK(back.edges == g.edges);
  CHECK(to_edge_list(back) == text);

  const std::string hand = "p 3\ne 0 1\ne 1 2\ne 0 1\n";
  CHECK(to_edge_list(parse_edge_list(hand)) == hand);

  CHECK_THROWS_AS(parse_edge_list(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("e 0 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("p 2\ne 0 2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("p 2\ne 0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_edge_list("p 2\ne 0 1 7\n"), std::invalid_argument);
}

TEST_CASE("graph construction validation") {
  CHECK_THROWS_AS(build_graph(GraphKind::grid, {}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(GraphKind::grid, {0}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(GraphKind::qad, {2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_tree(build_graph(GraphKind::grid, {25, 25})),
                  std::invalid_argument);
  CHECK_THROWS_AS(forest_polynomial(build_graph(GraphKind::grid, {9, 9})),
                  std::invalid_argument);
}
