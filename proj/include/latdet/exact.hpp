#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latdet/precision.hpp"

namespace latdet::exact {

// Undirected multigraph on vertices 0..vertex_count-1. Parallel edges are
// meaningful (the doubled torus sides need them); self-loops are not allowed.
struct GraphSpec {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const {
    if (vertex_count < 1) throw std::invalid_argument("GraphSpec: need at least one vertex");
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
        throw std::invalid_argument("GraphSpec: edge endpoint out of range");
      if (u == v) throw std::invalid_argument("GraphSpec: self-loops not allowed");
    }
  }
};

enum class GraphKind { grid, torus, qad };

// The triangular lattice piece is cut at k1 + k2 <= n - 1. The stated_rule
// variant keeps the boundary row k1 + k2 = n for side-by-side comparison;
// it is one order larger and fails the product-formula cross-checks.
enum class QadVertexRule { corrected, stated };

// grid: Cartesian product of paths with the given side lengths.
// torus: product of cycles, full cycle lengths as given; a length-2 cycle
// contributes a doubled edge.
// qad: params = {n}, right-triangle subgraph of the square lattice.
GraphSpec build_graph(GraphKind kind, const std::vector<int>& params,
                      QadVertexRule rule = QadVertexRule::corrected);

// Plain text graph format: "p <vertex_count>" then "e <u> <v>" per edge,
// one per line, edge order preserved. parse/serialize round trip exactly.
std::string to_edge_list(const GraphSpec& g);
GraphSpec parse_edge_list(const std::string& text);

class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError(std::string what, std::vector<int> witness)
      : std::runtime_error(std::move(what)), component(std::move(witness)) {}
  std::vector<int> component;  // one maximal connected piece, sorted
};

// Exact spanning tree count: any cofactor of the Laplacian, computed by
// fraction-free elimination over the integers. Desk scale, <= 400 vertices.
mpz_class matrix_tree(const GraphSpec& g);

// Coefficients of det(Laplacian + x I), index = power of x. c_1 counts
// rooted spanning forests with one tree, i.e. vertex_count * matrix_tree.
struct ForestPolynomial {
  std::vector<mpz_class> coeffs;
};

ForestPolynomial forest_polynomial(const GraphSpec& g);

// a + b sqrt(2) with exact integer components.
struct AlgebraicInt {
  mpz_class a, b;

  AlgebraicInt conjugate() const { return {a, -b}; }

  friend AlgebraicInt operator+(const AlgebraicInt& x, const AlgebraicInt& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend AlgebraicInt operator-(const AlgebraicInt& x, const AlgebraicInt& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend AlgebraicInt operator*(const AlgebraicInt& x, const AlgebraicInt& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const AlgebraicInt& x, const AlgebraicInt& y) {
    return x.a == y.a && x.b == y.b;
  }

  AlgebraicInt pow(unsigned long e) const;
  std::string str() const;
};

// n-th term of the shifted Chebyshev sequence U_0 = 0, U_1 = 1,
// U_{n+1} = 6 U_n - U_{n-1}.
mpz_class chebyshev_u(int n);

// Closed forms of prod_{k=1}^{n-1} (2s - 2 cos(pi k / n)) for shift s = 1
// (value n) and s = 3 (value U_n, returned scaled as 4 sqrt(2) U_n, the
// difference of conjugate powers it equals).
AlgebraicInt chebyshev_product(int shift, int n);

struct IdentityWitness {
  bool ok = false;
  mpz_class lhs, rhs;
};

// tau(T(2 n1, 2 n2)) = 32 n1 n2 U_{n1}^2 U_{n2}^2 tau(L(n1, n2))^4,
// both sides as exact integers from independent computations.
IdentityWitness verify_torus_grid_identity(int n1, int n2);

// tau(L(n, n)) = n 2^{n-1} tau(QAD_n)^2, exact both sides.
IdentityWitness verify_qad_identity(int n);

// log tau(QAD_n) from the double product over interior mode pairs,
// sum over 0 < k1 < k2 < n of log(4 sin^2 + 4 sin^2). n <= 1024.
double tau_qad_product(int n, Precision precision = Precision::standard);

}  // namespace latdet::exact
