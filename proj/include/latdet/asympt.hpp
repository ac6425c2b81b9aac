#pragma once

#include <vector>

#include "latdet/precision.hpp"
#include "latdet/spectra.hpp"
#include "latdet/zetadet.hpp"

namespace latdet::asympt {

// Coefficient record for the determinant expansions. The record is
// size-independent; evaluate() reconstitutes the right-hand side at a
// concrete n. partial() leaves the constant out, so a measured
// residual lhs - partial(n) should converge to `constant`.
struct TheoremRHS {
  double bulk = 0.0;               // multiplies n^degree
  std::vector<double> boundary;    // boundary[m-1] multiplies n^m, m = 1..degree-1
  double log_coefficient = 0.0;    // multiplies log n
  double constant = 0.0;
  int degree = 1;
  zetadet::ZetaConvention convention = zetadet::ZetaConvention::single;

  double partial(double n) const;
  double evaluate(double n) const { return partial(n) + constant; }
};

struct SweepRecord {
  long n = 0;
  double lhs = 0.0;          // measured log-determinant or log-count
  double rhs_partial = 0.0;  // expansion terms up to and excluding the constant
  double residual = 0.0;     // lhs - rhs_partial
};

enum class SweepTarget { theorem1, theorem3 };

// Bulk constant c_d = int_0^inf (e^{-t} - e^{-2dt} I0(2t)^d) dt/t for
// 1 <= d <= 6. c_1 vanishes; c_2 equals 4G/pi.
double c_d(int d, double abs_tol = 1e-10);

// Face coefficient at zero offset,
//   I^d_m(0) = -4^{m-d} int_0^inf (1-e^{-4t})^{d-m} e^{-2mt} I0(2t)^m dt/t,
// for 1 <= m < d <= 6. Always negative.
double boundary_coeff(int d, int m, double abs_tol = 1e-10);

// Closed form of boundary_coeff(d, 1):
//   4^{1-d} sum_k C(d-1,k) (-1)^k log(2k+1+2 sqrt(k^2+k)).
double boundary_coeff_closed_m1(int d);

// Same coefficient through the binomial expansion into J integrals,
//   4^{m-d} sum_k C(d-m,k) (-1)^k J_m(2k+m);
// agreement with boundary_coeff is a cross-check of both quadratures.
double boundary_coeff_via_glasser(int d, int m, double abs_tol = 1e-10);

// Watson integral W_d = int_0^inf e^{-dt} I0(t)^d dt, 3 <= d <= 6.
// Diverges for d <= 2 (domain_error).
double watson(int d, double abs_tol = 1e-10);

// Lattice Green integral G_d(k, w) = (1/Gamma(k)) int t^{k-1} e^{-wt} I0(t)^d dt.
// Needs w > d, or w == d together with 2k < d; otherwise domain_error.
double green(int d, int k, double w, double abs_tol = 1e-10);

// J_m(w) = int_0^inf (e^{-t} - e^{-wt} I0(t)^m) dt/t for w >= m.
// At w = m the tail is only algebraic, t^{-m/2-1}, but still integrable.
// The Mahler measure of 2w + sum_{j<=m} (x_j + 1/x_j) is log 2 + J_m(w).
double glasser_j(int m, double w, double abs_tol = 1e-10);

// Expansion of log det* for the grid with sides alpha_i n: bulk
// c_d V^d_d, face terms I^d_m(0) V^d_m, the (2 - 2^{1-d}) log n term,
// and the constant built from the continuum face determinants plus the
// closed binomial sum 2^{-d} sum_m C(d,m) (-1)^m log(4m). The
// convention fixes the one-dimensional det* entering the constant.
TheoremRHS theorem1_rhs(const spectra::OrthotopeSpec& alphas,
                        zetadet::ZetaConvention convention);

// Expansion of the staircase log tree count: (2G/pi) n^2 - log(2+sqrt2) n
// - (3/4) log n + [log det* of the unit right triangle + (23/8) log 2].
// single takes the triangle determinant from the direct spectral
// continuation, doubled from the square-splitting relation; the two
// differ by exactly (log 2)/4.
TheoremRHS theorem3_rhs(zetadet::ZetaConvention convention);

// Predicted rooted-forest count ratio N_k / N_1 on the grid with sides
// alpha_i n. Supported: d = 3 with k = 2, d = 4 with k in {2, 3}.
double forest_prediction(int d, const spectra::OrthotopeSpec& alphas, long n, int k);

// Residual records lhs - partial(n) for ascending n. theorem1 measures
// log det* of the grid with sides alpha_i n (alpha_i n must be whole);
// theorem3 measures the staircase log tree count and ignores alphas.
std::vector<SweepRecord> residual_sweep(SweepTarget target,
                                        const spectra::OrthotopeSpec& alphas,
                                        const std::vector<long>& n_list,
                                        zetadet::ZetaConvention convention,
                                        Precision precision = Precision::standard);

}  // namespace latdet::asympt
