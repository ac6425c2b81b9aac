#include "latdet/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>

#ifdef LATDET_HAVE_FLOAT128
#include <quadmath.h>
#endif

namespace latdet {

Precision precision_from_env() {
  const char* v = std::getenv("LATDET_PRECISION");
  if (v == nullptr || *v == '\0') return Precision::standard;
  return precision_from_name(v);
}

}  // namespace latdet

namespace latdet::exact {

namespace {

// natural log of a positive big integer, safe far beyond double range
double log_mpz(const mpz_class& v) {
  signed long exp2;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * M_LN2;
}

std::vector<int> component_of_zero(const GraphSpec& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(g.vertex_count, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  std::vector<int> comp{0};
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        comp.push_back(v);
        q.push(v);
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

// fraction-free elimination; every division is exact by construction
mpz_class bareiss_determinant(std::vector<std::vector<mpz_class>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  mpz_class prev = 1, t;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? mpz_class(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

std::vector<std::vector<mpz_class>> laplacian(const GraphSpec& g) {
  std::vector<std::vector<mpz_class>> lap(
      g.vertex_count, std::vector<mpz_class>(g.vertex_count, 0));
  for (const auto& [u, v] : g.edges) {
    lap[u][u] += 1;
    lap[v][v] += 1;
    lap[u][v] -= 1;
    lap[v][u] -= 1;
  }
  return lap;
}

GraphSpec build_orthotope(const std::vector<int>& sides, bool wrap) {
  if (sides.empty()) throw std::invalid_argument("build_graph: need at least one side");
  for (int n : sides)
    if (n < 1) throw std::invalid_argument("build_graph: sides must be >= 1");
  const int d = static_cast<int>(sides.size());
  long long count = 1;
  for (int n : sides) {
    count *= n;
    if (count > 2'000'000) throw std::invalid_argument("build_graph: lattice too large");
  }
  std::vector<long long> stride(d);
  stride[d - 1] = 1;
  for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * sides[i + 1];
  GraphSpec g;
  g.vertex_count = static_cast<int>(count);
  std::vector<int> k(d, 0);
  for (long long v = 0; v < count; ++v) {
    for (int i = 0; i < d; ++i) {
      if (k[i] + 1 < sides[i]) {
        g.edges.emplace_back(static_cast<int>(v), static_cast<int>(v + stride[i]));
      } else if (wrap && sides[i] > 1) {
        g.edges.emplace_back(static_cast<int>(v), static_cast<int>(v - k[i] * stride[i]));
      }
    }
    int i = d - 1;
    while (i >= 0 && ++k[i] == sides[i]) k[i--] = 0;
  }
  return g;
}

GraphSpec build_qad(int n, QadVertexRule rule) {
  if (n < 1) throw std::invalid_argument("build_graph: qad order must be >= 1");
  const int cap = (rule == QadVertexRule::corrected) ? n - 1 : n;
  std::map<std::pair<int, int>, int> index;
  for (int k1 = 0; k1 <= cap; ++k1)
    for (int k2 = 0; k1 + k2 <= cap; ++k2)
      index.emplace(std::make_pair(k1, k2), static_cast<int>(index.size()));
  GraphSpec g;
  g.vertex_count = static_cast<int>(index.size());
  for (const auto& [coord, v] : index) {
    const auto [k1, k2] = coord;
    if (auto it = index.find({k1 + 1, k2}); it != index.end())
      g.edges.emplace_back(v, it->second);
    if (auto it = index.find({k1, k2 + 1}); it != index.end())
      g.edges.emplace_back(v, it->second);
  }
  return g;
}

}  // namespace

GraphSpec build_graph(GraphKind kind, const std::vector<int>& params, QadVertexRule rule) {
  switch (kind) {
    case GraphKind::grid:
      return build_orthotope(params, false);
    case GraphKind::torus:
      return build_orthotope(params, true);
    case GraphKind::qad:
      if (params.size() != 1)
        throw std::invalid_argument("build_graph: qad takes exactly one parameter");
      return build_qad(params[0], rule);
  }
  throw std::invalid_argument("build_graph: unknown kind");
}

std::string to_edge_list(const GraphSpec& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count << "\n";
  for (const auto& [u, v] : g.edges) out << "e " << u << " " << v << "\n";
  return out.str();
}

GraphSpec parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GraphSpec g;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) throw std::invalid_argument("parse_edge_list: blank line");
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (!have_header) {
      if (tag != "p" || !(ls >> g.vertex_count))
        throw std::invalid_argument("parse_edge_list: expected 'p <vertex_count>' first");
      have_header = true;
    } else {
      int u, v;
      if (tag != "e" || !(ls >> u >> v))
        throw std::invalid_argument("parse_edge_list: expected 'e <u> <v>'");
      g.edges.emplace_back(u, v);
    }
    std::string extra;
    if (ls >> extra) throw std::invalid_argument("parse_edge_list: trailing tokens");
  }
  if (!have_header) throw std::invalid_argument("parse_edge_list: empty input");
  g.validate();
  return g;
}

mpz_class matrix_tree(const GraphSpec& g) {
  g.validate();
  if (g.vertex_count > 400)
    throw std::invalid_argument("matrix_tree: graph above desk-scale bound of 400 vertices");
  const auto comp = component_of_zero(g);
  if (static_cast<int>(comp.size()) != g.vertex_count)
    throw DisconnectedError("matrix_tree: graph is disconnected", comp);
  auto lap = laplacian(g);
  // first cofactor: strike row and column 0
  std::vector<std::vector<mpz_class>> minor;
  minor.reserve(g.vertex_count - 1);
  for (int i = 1; i < g.vertex_count; ++i)
    minor.emplace_back(lap[i].begin() + 1, lap[i].end());
  return bareiss_determinant(std::move(minor));
}

ForestPolynomial forest_polynomial(const GraphSpec& g) {
  g.validate();
  const int n = g.vertex_count;
  if (n > 64)
    throw std::invalid_argument("forest_polynomial: graph above desk-scale bound of 64 vertices");
  // Faddeev-LeVerrier on A = -Laplacian gives det(xI - A) = det(xI + L);
  // every division by the step index is exact over the integers
  auto lap = laplacian(g);
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = -lap[i][j];
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<mpz_class>> m = a, next(n, std::vector<mpz_class>(n));
  mpz_class tr = 0;
  for (int i = 0; i < n; ++i) tr += m[i][i];
  c[n - 1] = -tr;
  for (int k = 2; k <= n; ++k) {
    for (int i = 0; i < n; ++i) m[i][i] += c[n - k + 1];
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        mpz_class& acc = next[i][j];
        acc = 0;
        for (int l = 0; l < n; ++l) acc += a[i][l] * m[l][j];
      }
    }
    std::swap(m, next);
    tr = 0;
    for (int i = 0; i < n; ++i) tr += m[i][i];
    mpz_class ck;
    mpz_class num = -tr;
    mpz_class den = k;
    mpz_divexact(ck.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    c[n - k] = ck;
  }
  return ForestPolynomial{std::move(c)};
}

AlgebraicInt AlgebraicInt::pow(unsigned long e) const {
  AlgebraicInt base = *this;
  AlgebraicInt acc{1, 0};
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::string AlgebraicInt::str() const {
  return a.get_str() + (b >= 0 ? "+" : "") + b.get_str() + "*sqrt(2)";
}

mpz_class chebyshev_u(int n) {
  if (n < 0) throw std::invalid_argument("chebyshev_u: n must be >= 0");
  mpz_class prev = 0, cur = 1;
  if (n == 0) return prev;
  for (int i = 1; i < n; ++i) {
    mpz_class nxt = 6 * cur - prev;
    prev = cur;
    cur = nxt;
  }
  return cur;
}

AlgebraicInt chebyshev_product(int shift, int n) {
  if (n < 1) throw std::invalid_argument("chebyshev_product: n must be >= 1");
  if (shift == 1) return AlgebraicInt{n, 0};
  if (shift != 3) throw std::invalid_argument("chebyshev_product: shift must be 1 or 3");
  const mpz_class u = chebyshev_u(n);
  // guard the recurrence against the direct floating product
  double sum = 0.0;
  for (int k = 1; k < n; ++k) sum += std::log(6.0 - 2.0 * std::cos(M_PI * k / n));
  const double lu = log_mpz(u);
  if (std::abs(sum - lu) > 1e-10 * std::max(1.0, std::abs(lu)))
    throw std::logic_error("chebyshev_product: recurrence disagrees with direct product");
  return AlgebraicInt{0, 4 * u};
}

IdentityWitness verify_torus_grid_identity(int n1, int n2) {
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("verify_torus_grid_identity: sides must be >= 1");
  const mpz_class lhs = matrix_tree(build_graph(GraphKind::torus, {2 * n1, 2 * n2}));
  const mpz_class tau_grid = matrix_tree(build_graph(GraphKind::grid, {n1, n2}));
  const mpz_class u1 = chebyshev_u(n1), u2 = chebyshev_u(n2);
  const mpz_class rhs =
      32 * n1 * n2 * u1 * u1 * u2 * u2 * tau_grid * tau_grid * tau_grid * tau_grid;
  return IdentityWitness{lhs == rhs, lhs, rhs};
}

IdentityWitness verify_qad_identity(int n) {
  if (n < 1) throw std::invalid_argument("verify_qad_identity: n must be >= 1");
  if (n > 12) throw std::invalid_argument("verify_qad_identity: exact arm capped at n = 12");
  const mpz_class lhs = matrix_tree(build_graph(GraphKind::grid, {n, n}));
  const mpz_class tau_qad = matrix_tree(build_graph(GraphKind::qad, {n}));
  mpz_class pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, n - 1);
  const mpz_class rhs = n * pow2 * tau_qad * tau_qad;
  return IdentityWitness{lhs == rhs, lhs, rhs};
}

double tau_qad_product(int n, Precision precision) {
  if (n < 1 || n > 1024)
    throw std::invalid_argument("tau_qad_product: n must be in [1, 1024]");
#ifdef LATDET_HAVE_FLOAT128
  if (precision == Precision::extended) {
    std::vector<__float128> axis(n);
    for (int k = 0; k < n; ++k) {
      const __float128 s = sinq(M_PIq * k / (2 * n));
      axis[k] = 4 * s * s;
    }
    __float128 sum = 0;
    for (int k1 = 1; k1 < n; ++k1)
      for (int k2 = k1 + 1; k2 < n; ++k2) sum += logq(axis[k1] + axis[k2]);
    return static_cast<double>(sum);
  }
#else
  if (precision == Precision::extended) {
    std::vector<long double> axis(n);
    for (int k = 0; k < n; ++k) {
      const long double s = std::sin(static_cast<long double>(M_PI) * k / (2 * n));
      axis[k] = 4 * s * s;
    }
    long double sum = 0;
    for (int k1 = 1; k1 < n; ++k1)
      for (int k2 = k1 + 1; k2 < n; ++k2) sum += std::log(axis[k1] + axis[k2]);
    return static_cast<double>(sum);
  }
#endif
  std::vector<double> axis(n);
  for (int k = 0; k < n; ++k) {
    const double s = std::sin(M_PI * k / (2.0 * n));
    axis[k] = 4.0 * s * s;
  }
  double sum = 0.0, carry = 0.0;
  for (int k1 = 1; k1 < n; ++k1) {
    for (int k2 = k1 + 1; k2 < n; ++k2) {
      const double x = std::log(axis[k1] + axis[k2]) - carry;
      const double t = sum + x;
      carry = (t - sum) - x;
      sum = t;
    }
  }
  return sum;
}

}  // namespace latdet::exact
