#include "latdet/spectra.hpp"

#include <cmath>

namespace latdet::spectra {

namespace {

// Kahan compensated accumulator; keeps the streaming sums reproducible
// to the last bit in the fixed lexicographic order.
struct KahanSum {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

std::vector<int> subset_of(const std::vector<int>& sides, unsigned mask) {
  std::vector<int> out;
  for (std::size_t i = 0; i < sides.size(); ++i)
    if (mask & (1u << i)) out.push_back(sides[i]);
  return out;
}

}  // namespace

double face_volume(const OrthotopeSpec& o, int m) {
  o.validate();
  const int d = static_cast<int>(o.alphas.size());
  if (m < 1 || m > d) throw std::out_of_range("face_volume: need 0 < m <= d");
  double sum = 0.0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    double prod = 1.0;
    for (int i = 0; i < d; ++i)
      if (mask & (1u << i)) prod *= o.alphas[i];
    sum += prod;
  }
  return std::ldexp(sum, d - m);
}

std::vector<double> eigenvalues(const LatticeSpec& spec) {
  spec.validate();
  if (spec.vertex_count() > 10'000'000)
    throw std::invalid_argument("eigenvalues: spectrum too large to materialize, stream instead");
  std::vector<double> out;
  out.reserve(spec.vertex_count());
  for_each_eigenvalue(spec, [&](const std::vector<int>&, double lambda) {
    out.push_back(lambda);
  });
  return out;
}

double theta(const LatticeSpec& spec, double t) {
  if (!(t > 0.0)) throw std::domain_error("theta: requires t > 0");
  spec.validate();
  KahanSum acc;
  for_each_eigenvalue(spec, [&](const std::vector<int>&, double lambda) {
    acc.add(std::exp(-lambda * t));
  });
  return acc.sum;
}

double theta_star(const std::vector<int>& sides, double t) {
  if (!(t > 0.0)) throw std::domain_error("theta_star: requires t > 0");
  if (sides.empty()) return 1.0;  // empty summation convention
  for (int n : sides)
    if (n < 1) throw std::invalid_argument("theta_star: sides must be >= 1");
  const int d = static_cast<int>(sides.size());
  for (int n : sides)
    if (n == 1) return 0.0;  // no interior indices
  std::vector<std::vector<double>> axis(d);
  for (int i = 0; i < d; ++i) {
    axis[i].resize(sides[i] - 1);
    for (int k = 1; k < sides[i]; ++k)
      axis[i][k - 1] = detail::axis_eigenvalue(k, sides[i]);
  }
  KahanSum acc;
  std::vector<int> k(d, 0);
  for (;;) {
    double lambda = 0.0;
    for (int i = 0; i < d; ++i) lambda += axis[i][k[i]];
    acc.add(std::exp(-lambda * t));
    int i = d - 1;
    while (i >= 0 && ++k[i] == static_cast<int>(axis[i].size())) k[i--] = 0;
    if (i < 0) break;
  }
  return acc.sum;
}

ThetaDecomposition check_theta_decomposition(const std::vector<int>& sides, double t) {
  if (!(t > 0.0)) throw std::domain_error("check_theta_decomposition: requires t > 0");
  const int d = static_cast<int>(sides.size());
  if (d < 1 || d > 4) throw std::invalid_argument("check_theta_decomposition: 1 <= d <= 4");
  for (int n : sides)
    if (n < 1 || n > 8)
      throw std::invalid_argument("check_theta_decomposition: sides must be in [1, 8]");

  const double theta_grid = theta(LatticeSpec{LatticeKind::grid, sides}, t);

  // grid indices split per coordinate into {0} or interior, so the grid
  // heat trace is the subset sum of interior traces
  KahanSum star;
  for (unsigned mask = 0; mask < (1u << d); ++mask)
    star.add(theta_star(subset_of(sides, mask), t));

  // torus route: each coordinate is either unfolded onto the doubled torus
  // or dropped with weight (1 - e^{-4t}), all divided by 2^d
  const double w = 1.0 - std::exp(-4.0 * t);
  KahanSum torus;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    const int m = __builtin_popcount(mask);
    const std::vector<int> sub = subset_of(sides, mask);
    const double theta_t =
        sub.empty() ? 1.0 : theta(LatticeSpec{LatticeKind::torus, sub}, t);
    torus.add(std::pow(w, d - m) * theta_t);
  }
  const double torus_side = std::ldexp(torus.sum, -d);

  return ThetaDecomposition{std::abs(theta_grid - star.sum),
                            std::abs(theta_grid - torus_side)};
}

double log_det_star(const LatticeSpec& spec) {
  spec.validate();
  if (spec.vertex_count() > 100'000'000)
    throw std::invalid_argument("log_det_star: vertex_count above streaming bound");
  KahanSum acc;
  bool first = true;
  for_each_eigenvalue(spec, [&](const std::vector<int>&, double lambda) {
    if (first) {  // k = 0, the unique zero mode
      first = false;
      return;
    }
    acc.add(std::log(lambda));
  });
  return acc.sum;
}

double spectral_sum(const LatticeSpec& spec, int p) {
  if (p != 1 && p != 2) throw std::invalid_argument("spectral_sum: p must be 1 or 2");
  spec.validate();
  if (spec.vertex_count() > 100'000'000)
    throw std::invalid_argument("spectral_sum: vertex_count above streaming bound");
  KahanSum acc;
  bool first = true;
  for_each_eigenvalue(spec, [&](const std::vector<int>&, double lambda) {
    if (first) {
      first = false;
      return;
    }
    acc.add(p == 1 ? 1.0 / lambda : 1.0 / (lambda * lambda));
  });
  return acc.sum;
}

}  // namespace latdet::spectra
