#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <random>

#include "latdet/combinatorics.hpp"

using namespace latdet::combinatorics;

namespace {
std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("forward transform on one and two elements") {
  SubsetTable<mpq_class> g(1);
  g[1] = mpq_class(7, 3);
  const auto f = forward(g);
  CHECK(f[0] == 1);
  CHECK(f[1] == mpq_class(10, 3));  // empty set contributes its unit

  SubsetTable<mpq_class> zero(2);  // nonempty entries all zero
  const auto fz = forward(zero);
  for (unsigned m = 0; m < 4; ++m) CHECK(fz[m] == 1);
}

TEST_CASE("all-ones input counts subsets") {
  SubsetTable<mpq_class> g(3);
  for (unsigned m = 1; m < 8; ++m) g[m] = 1;
  const auto f = forward(g);
  for (unsigned m = 0; m < 8; ++m)
    CHECK(f[m] == mpq_class(1 << __builtin_popcount(m)));
}

TEST_CASE("inversion on a single element") {
  SubsetTable<mpq_class> f(1);
  f[1] = 1 + mpq_class(5, 9);
  const auto g = invert(f);
  CHECK(g[0] == 1);
  CHECK(g[1] == mpq_class(5, 9));
}

TEST_CASE("forward and invert are mutually inverse on random rational tables") {
  std::mt19937 rng(0x5eedu);
  std::uniform_int_distribution<int> numer(-99, 99), denom(1, 20), size(0, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const int l = size(rng);
    SubsetTable<mpq_class> g(l);
    for (unsigned m = 1; m < (1u << l); ++m) {
      g[m] = mpq_class(numer(rng), denom(rng));
      g[m].canonicalize();
    }
    CHECK(invert(forward(g)) == g);
    SubsetTable<mpq_class> f(l);
    for (unsigned m = 1; m < (1u << l); ++m) {
      f[m] = mpq_class(numer(rng), denom(rng));
      f[m].canonicalize();
    }
    CHECK(forward(invert(f)) == f);
  }
}

TEST_CASE("level-constant tables reduce to binomial inversion") {
  // g depends only on |T|; then f(S) = sum_k C(|S|,k) g_k and inverting
  // recovers the levels
  const int l = 6;
  mpq_class levels[l + 1];
  levels[0] = 1;
  for (int k = 1; k <= l; ++k) levels[k] = mpq_class(k * k, 7);
  SubsetTable<mpq_class> g(l);
  for (unsigned m = 1; m < (1u << l); ++m) g[m] = levels[__builtin_popcount(m)];
  const auto f = forward(g);
  for (unsigned m = 0; m < (1u << l); ++m) {
    const int s = __builtin_popcount(m);
    mpq_class want = 0;
    for (int k = 0; k <= s; ++k)
      want += mpq_class(static_cast<unsigned long>(binom(s, k))) * levels[k];
    CHECK(f[m] == want);
  }
  CHECK(invert(f) == g);
}

TEST_CASE("pair counting collapses the double sum") {
  // pairs (T, U) with U subset of T subset of S, |T| = k, |U| = m, number
  // C(l-m, k-m) C(l, m) when S is the full ground set
  for (int l = 0; l <= 8; ++l) {
    for (int k = 0; k <= l; ++k) {
      for (int m = 0; m <= k; ++m) {
        std::uint64_t count = 0;
        for (unsigned t = 0; t < (1u << l); ++t) {
          if (__builtin_popcount(t) != k) continue;
          for (unsigned u = 0; u < (1u << l); ++u)
            if ((u & t) == u && __builtin_popcount(u) == m) ++count;
        }
        CHECK(count == binom(l - m, k - m) * binom(l, m));
      }
    }
  }
}

TEST_CASE("table validation") {
  CHECK_THROWS_AS(SubsetTable<double>(21), std::length_error);
  CHECK_THROWS_AS(SubsetTable<double>(-1), std::length_error);
  SubsetTable<double> bad(2);
  bad[0] = 0.5;
  CHECK_THROWS_AS(forward(bad), std::invalid_argument);
  CHECK_THROWS_AS(invert(bad), std::invalid_argument);
  SubsetTable<double> empty(0);
  CHECK(forward(empty)[0] == 1.0);
  CHECK(invert(empty)[0] == 1.0);
}

TEST_CASE("real-valued tables round trip to rounding accuracy") {
  std::mt19937 rng(99u);
  std::uniform_real_distribution<double> val(-3.0, 3.0);
  SubsetTable<double> g(8);
  for (unsigned m = 1; m < 256; ++m) g[m] = val(rng);
  const auto back = invert(forward(g));
  for (unsigned m = 0; m < 256; ++m)
    CHECK(std::abs(back[m] - g[m]) <= 1e-12);
}
