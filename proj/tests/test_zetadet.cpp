#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "latdet/combinatorics.hpp"
#include "latdet/specfun.hpp"
#include "latdet/zetadet.hpp"

using namespace latdet::zetadet;
using latdet::specfun::dedekind_eta_imag;

namespace {
bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// modular closed form for the two-dimensional torus determinant
double eta_oracle_det(double l1, double l2) {
  return l2 * l2 * std::pow(dedekind_eta_imag(l2 / l1), 4);
}
}  // namespace

TEST_CASE("one-dimensional torus zeta derivative is -2 log L") {
  for (double l : {0.8, 2.0, 3.0, 5.0}) {
    CHECK(near(epstein_zeta_prime0({l}), -2.0 * std::log(l), 1e-11));
  }
}

TEST_CASE("two-dimensional torus matches the eta closed form") {
  CHECK(near(epstein_zeta_prime0({1.0, 1.0}), 1.0546882809956721, 1e-10));
  CHECK(near(epstein_zeta_prime0({1.0, 2.0}), 0.7081146907156994, 1e-10));
  for (auto [l1, l2] : std::vector<std::pair<double, double>>{
           {1, 1}, {2, 4}, {2, 2}, {1, 3}, {1.5, 2.7}}) {
    const double det = std::exp(-epstein_zeta_prime0({l1, l2}));
    const double oracle = eta_oracle_det(l1, l2);
    CHECK(near(det, oracle, 1e-10 * oracle));
    // the closed form itself is swap-symmetric through the eta inversion
    CHECK(near(eta_oracle_det(l2, l1), oracle, 1e-12 * oracle));
  }
}

TEST_CASE("three-dimensional torus reference values") {
  CHECK(near(epstein_zeta_prime0({1.0, 1.0, 1.0}), 1.4538466879681837, 1e-10));
  CHECK(near(epstein_zeta_prime0({2.0, 2.0, 2.0}), 0.06755232684829338, 1e-10));
  CHECK(near(epstein_zeta_prime0({1.0, 2.0, 3.0}), 1.6696846482255117, 1e-10));
}

TEST_CASE("torus zeta dimension and domain guards") {
  CHECK_THROWS_AS(epstein_zeta_prime0({1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(epstein_zeta_prime0({}), std::invalid_argument);
  CHECK_THROWS_AS(epstein_zeta_prime0({1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("dilation shifts the torus zeta derivative by -2 log") {
  // eigenvalue homogeneity: zeta(0) = -1 for every torus dimension
  CHECK(near(epstein_zeta_prime0({2, 2}), epstein_zeta_prime0({1, 1}) - 2 * std::log(2.0), 1e-11));
  CHECK(near(epstein_zeta_prime0({2, 4}), epstein_zeta_prime0({1, 2}) - 2 * std::log(2.0), 1e-11));
  CHECK(near(epstein_zeta_prime0({2, 2, 2}),
             epstein_zeta_prime0({1, 1, 1}) - 2 * std::log(2.0), 1e-11));
  CHECK(near(epstein_zeta_prime0({3.0}), epstein_zeta_prime0({1.5}) - 2 * std::log(2.0), 1e-11));
}

TEST_CASE("orthotope zeta derivative in one dimension") {
  for (double a : {1.0, 3.0, 0.7}) {
    CHECK(near(zeta_prime0_orthotope({a}), -std::log(2.0 * a), 1e-11));
  }
  CHECK(near(zeta_prime0_interval(1.0), -std::log(2.0), 1e-15));
  CHECK(near(zeta_prime0_interval(3.0), -std::log(6.0), 1e-15));
  CHECK(near(zeta_prime0_interval(1.0, ZetaConvention::doubled), -2.0 * std::log(2.0), 1e-15));
  CHECK(near(zeta_prime0_interval(3.0, ZetaConvention::doubled), -2.0 * std::log(6.0), 1e-15));
}

TEST_CASE("unit square zeta derivative against the eta pipeline") {
  const double square = zeta_prime0_orthotope({1.0, 1.0});
  CHECK(near(square, 0.61024566052889064, 1e-9));
  // independent route: subtract the interval faces from the eta-oracle
  // torus value, zeta'_T(2,2) = 4 zeta'_1(1) + 4 zeta'_{1x1}(0)
  const double torus_eta = -std::log(eta_oracle_det(2.0, 2.0));
  const double via_eta = 0.25 * (torus_eta + 4.0 * std::log(2.0));
  CHECK(near(square, via_eta, 1e-9));
}

TEST_CASE("orthotope reference values and scaling") {
  CHECK(near(zeta_prime0_orthotope({1, 2}), 0.8701758532388704, 1e-9));
  CHECK(near(zeta_prime0_orthotope({2, 2}), 0.9568192508088633, 1e-9));
  CHECK(near(zeta_prime0_orthotope({1, 1, 1}), -0.38706406451734043, 1e-9));
  // orthotope zeta(0) = 1/4 in two dimensions, so dilation by 2 adds log2/2
  CHECK(near(zeta_prime0_orthotope({2, 2}) - zeta_prime0_orthotope({1, 1}),
             0.5 * std::log(2.0), 1e-10));
  CHECK_THROWS_AS(zeta_prime0_orthotope({1, 1, 1, 1}), std::invalid_argument);
}

TEST_CASE("torus values decompose over orthotope faces") {
  for (double a1 : {1.0, 2.0}) {
    for (double a2 : {1.0, 2.0}) {
      latdet::combinatorics::SubsetTable<double> g(2);
      g[1] = 2.0 * zeta_prime0_orthotope({a1});
      g[2] = 2.0 * zeta_prime0_orthotope({a2});
      g[3] = 4.0 * zeta_prime0_orthotope({a1, a2});
      const auto f = latdet::combinatorics::forward(g);
      CHECK(near(f[1] - 1.0, epstein_zeta_prime0({2 * a1}), 1e-9));
      CHECK(near(f[2] - 1.0, epstein_zeta_prime0({2 * a2}), 1e-9));
      CHECK(near(f[3] - 1.0, epstein_zeta_prime0({2 * a1, 2 * a2}), 1e-9));
    }
  }
}

TEST_CASE("triangle zeta derivative, defining relation and direct route") {
  const double tri = zeta_prime0_triangle();
  const double square = zeta_prime0_orthotope({1.0, 1.0});
  CHECK(near(2.0 * tri - std::log(2.0), square, 1e-12));
  const double direct = zeta_prime0_triangle_direct();
  CHECK(near(direct, 0.47840962540443165, 1e-9));
  // the defining square relation and the direct continuation disagree by
  // exactly (log 2)/4; both are kept and the gap is pinned here
  CHECK(near(tri - direct, 0.25 * std::log(2.0), 1e-9));
  CHECK(std::exp(-tri) > 0.0);
}

TEST_CASE("square zeta splits into sector and diagonal at s = 2") {
  const int cap = 100;
  double lhs = 0.0, sector = 0.0, diag = 0.0;
  for (int k1 = 1; k1 <= cap; ++k1) {
    for (int k2 = 1; k2 <= cap; ++k2) {
      const double term = std::pow(k1 * k1 + k2 * k2, -2.0);
      lhs += term;
      if (k2 < k1) sector += term;
    }
    diag += std::pow(2.0 * k1 * k1, -2.0);
  }
  const double pi4 = std::pow(M_PI, 4.0);
  CHECK(near(lhs / pi4, (2.0 * sector + diag) / pi4, 1e-10));
  // truncated square zeta approaches zeta(2) G - zeta(4), scaled
  const double closed =
      (M_PI * M_PI / 6.0) * latdet::specfun::catalan() - pi4 / 90.0;
  CHECK(near(lhs, closed, 1e-4));
}

TEST_CASE("regularized determinants per domain") {
  CHECK(near(det_star({DomainKind::interval, {1.0}}), 2.0, 1e-12));
  CHECK(near(det_star({DomainKind::interval, {3.0}}), 6.0, 1e-12));
  CHECK(near(det_star({DomainKind::orthotope, {1.0, 1.0}}), 0.543217405606654, 1e-9));
  CHECK(near(det_star({DomainKind::torus, {1.0, 1.0}}),
             std::exp(-1.0546882809956721), 1e-10));
  CHECK(near(det_star({DomainKind::torus, {2.0, 2.0}}), 1.3932039296856769, 1e-9));
  CHECK(near(det_star({DomainKind::triangle, {}}), std::exp(-zeta_prime0_triangle()), 1e-15));
  CHECK_THROWS_AS(det_star({DomainKind::interval, {1.0, 2.0}}), std::invalid_argument);
  CHECK_THROWS_AS(det_star({DomainKind::triangle, {1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(det_star({DomainKind::orthotope, {}}), std::invalid_argument);
  CHECK_THROWS_AS(det_star({DomainKind::orthotope, {-1.0}}), std::invalid_argument);
}
