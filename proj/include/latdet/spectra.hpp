#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace latdet::spectra {

enum class LatticeKind { grid, torus };

// Orthotope grid lattice L(n_1,...,n_d) or discrete torus T(2n_1,...,2n_d).
// Torus sides are stored halved: sides = {1,2} with kind torus means T(2,4).
struct LatticeSpec {
  LatticeKind kind = LatticeKind::grid;
  std::vector<int> sides;

  int dimension() const { return static_cast<int>(sides.size()); }

  std::uint64_t vertex_count() const {
    std::uint64_t v = 1;
    for (int n : sides) v *= (kind == LatticeKind::torus) ? 2u * n : static_cast<unsigned>(n);
    return v;
  }

  void validate() const {
    if (sides.empty()) throw std::invalid_argument("LatticeSpec: empty sides");
    for (int n : sides)
      if (n < 1) throw std::invalid_argument("LatticeSpec: sides must be >= 1");
  }
};

// Side ratios of the limiting box [0,a_1) x ... x [0,a_d).
struct OrthotopeSpec {
  std::vector<int> alphas;

  void validate() const {
    if (alphas.empty()) throw std::invalid_argument("OrthotopeSpec: empty alphas");
    for (int a : alphas)
      if (a < 1) throw std::invalid_argument("OrthotopeSpec: alphas must be >= 1");
  }
};

// Total m-dimensional volume of the m-faces, 2^{d-m} sum over m-subsets of
// the products of the chosen alphas. m = d gives the volume itself.
double face_volume(const OrthotopeSpec& o, int m);

namespace detail {

// 4 sin^2(pi k / (2n)) for 0 <= k < 2n. The sine form keeps full relative
// accuracy near the zero mode; past the quarter turn the half-angle form
// 2 + 2 sin(pi(2x - 1/2)) takes over, whose shifted argument is computed
// exactly, so the eigenvalues 2 and 4 are exact rather than off by an ulp.
inline double axis_eigenvalue(int k, int n) {
  double x = static_cast<double>(k) / (2.0 * n);
  if (x > 0.5) x = 1.0 - x;
  if (x < 0.25) {
    const double s = std::sin(M_PI * x);
    return 4.0 * s * s;
  }
  return 2.0 + 2.0 * std::sin(M_PI * (2.0 * x - 0.5));
}

}  // namespace detail

// Streams all vertex_count Laplacian eigenvalues in lexicographic index
// order. Grid indices run over k_i in [0, n_i), torus over [0, 2 n_i);
// both use lambda = sum_i 4 sin^2(pi k_i / (2 n_i)). k = 0 is always the
// single zero mode.
template <typename Visitor>
void for_each_eigenvalue(const LatticeSpec& spec, Visitor&& visit) {
  spec.validate();
  const int d = spec.dimension();
  std::vector<std::vector<double>> axis(d);
  for (int i = 0; i < d; ++i) {
    const int extent = (spec.kind == LatticeKind::torus) ? 2 * spec.sides[i] : spec.sides[i];
    axis[i].resize(extent);
    for (int k = 0; k < extent; ++k)
      axis[i][k] = detail::axis_eigenvalue(k, spec.sides[i]);
  }
  std::vector<int> k(d, 0);
  for (;;) {
    double lambda = 0.0;
    for (int i = 0; i < d; ++i) lambda += axis[i][k[i]];
    visit(static_cast<const std::vector<int>&>(k), lambda);
    int i = d - 1;
    while (i >= 0 && ++k[i] == static_cast<int>(axis[i].size())) k[i--] = 0;
    if (i < 0) break;
  }
}

std::vector<double> eigenvalues(const LatticeSpec& spec);

// Heat trace sum_k e^{-lambda_k t}. Domain error for t <= 0.
double theta(const LatticeSpec& spec, double t);

// Heat trace restricted to interior indices k_i in [1, n_i), grid kernel.
// An empty side list is the empty summation and returns 1.
double theta_star(const std::vector<int>& sides, double t);

struct ThetaDecomposition {
  double residual_star;
  double residual_torus;
};

// Residuals of the two exact decompositions of the grid heat trace:
// theta_L = sum over subsets S of theta_star(sides_S), and
// theta_L = 2^{-d} sum_m (1-e^{-4t})^{d-m} sum_{|S|=m} theta_T(sides_S).
// Both should vanish to rounding. Desk scale only: d <= 4, sides <= 8.
ThetaDecomposition check_theta_decomposition(const std::vector<int>& sides, double t);

// Sum of log lambda over the nonzero spectrum, compensated, lexicographic
// order, exactly the k = 0 term excluded. Streaming: no arrays of size
// vertex_count are kept. Requires vertex_count <= 1e8.
double log_det_star(const LatticeSpec& spec);

// Sum of lambda^{-p} over the nonzero spectrum, p in {1, 2}.
double spectral_sum(const LatticeSpec& spec, int p);

}  // namespace latdet::spectra
