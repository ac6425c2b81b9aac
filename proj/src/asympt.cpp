#include "latdet/asympt.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "latdet/exact.hpp"
#include "latdet/specfun.hpp"

namespace latdet::asympt {

namespace {

using specfun::FrullaniIntegrand;
using specfun::QuadratureSpec;
using specfun::bessel_i0_scaled;

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

double pow_int(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

QuadratureSpec make_spec(double abs_tol) {
  QuadratureSpec q;
  q.abs_tol = abs_tol;
  // the series hooks here carry three terms, so the truncation error in
  // the head panel is ~ a3 cut^4 / 4; cut = 1e-4 pushes it below 1e-15
  q.small_t_cut = 1e-4;
  return q;
}

// 4^{-1} int_0^inf (1 - e^{-2t}) e^{-3t} I0(t)^3 dt, the d = 4 face
// correction entering the rooted-forest displays. Equal to
// (watson(3) - green(3,1,5)) / 4, which the tests assert.
double forest_surface_coeff() {
  FrullaniIntegrand f;
  f.g = [](double t) {
    return t * (-std::expm1(-2.0 * t)) * pow_int(bessel_i0_scaled(t), 3);
  };
  f.g_over_t_series = [](double t) {
    return t * (2.0 + t * (-8.0 + t * (107.0 / 6.0)));
  };
  return 0.25 * specfun::integrate_frullani(f, make_spec(1e-11)).value;
}

}  // namespace

double TheoremRHS::partial(double n) const {
  double sum = bulk * pow_int(n, degree);
  for (int m = 1; m < degree; ++m) sum += boundary[m - 1] * pow_int(n, m);
  return sum + log_coefficient * std::log(n);
}

double c_d(int d, double abs_tol) {
  if (d < 1 || d > 6) throw std::invalid_argument("c_d: need 1 <= d <= 6");
  FrullaniIntegrand f;
  f.g = [d](double t) {
    return std::exp(-t) - pow_int(bessel_i0_scaled(2.0 * t), d);
  };
  f.g_over_t_series = [d](double t) {
    const double dd = d;
    return (2.0 * dd - 1.0) +
           t * ((0.5 - 2.0 * dd * dd - dd) +
                t * (4.0 * dd * dd * dd / 3.0 + 2.0 * dd * dd - 1.0 / 6.0));
  };
  return specfun::integrate_frullani(f, make_spec(abs_tol)).value;
}

double boundary_coeff(int d, int m, double abs_tol) {
  if (m < 1 || m >= d || d > 6)
    throw std::invalid_argument("boundary_coeff: need 1 <= m < d <= 6");
  const int p = d - m;
  FrullaniIntegrand f;
  f.g = [p, m](double t) {
    return pow_int(-std::expm1(-4.0 * t), p) * pow_int(bessel_i0_scaled(2.0 * t), m);
  };
  f.g_over_t_series = [p, m](double t) {
    const double pp = p, mm = m;
    const double quad = (8.0 * pp / 3.0 + 2.0 * pp * pp - 2.0 * pp) +
                        (2.0 * mm * mm + mm) + 4.0 * pp * mm;
    return pow_int(4.0, p) * pow_int(t, p - 1) *
           (1.0 + t * (-2.0 * (pp + mm) + t * quad));
  };
  const double integral = specfun::integrate_frullani(f, make_spec(abs_tol)).value;
  return -std::ldexp(integral, -2 * p);
}

double boundary_coeff_closed_m1(int d) {
  if (d < 2 || d > 6) throw std::invalid_argument("boundary_coeff_closed_m1: need 2 <= d <= 6");
  double sum = 0.0;
  for (int k = 0; k < d; ++k) {
    const double kk = k;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom(d - 1, k) *
           std::log(2.0 * kk + 1.0 + 2.0 * std::sqrt(kk * kk + kk));
  }
  return std::ldexp(sum, -2 * (d - 1));
}

double boundary_coeff_via_glasser(int d, int m, double abs_tol) {
  if (m < 1 || m >= d || d > 6)
    throw std::invalid_argument("boundary_coeff_via_glasser: need 1 <= m < d <= 6");
  const int p = d - m;
  double sum = 0.0;
  for (int k = 0; k <= p; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binom(p, k) * glasser_j(m, 2.0 * k + m, abs_tol);
  }
  return std::ldexp(sum, -2 * p);
}

double watson(int d, double abs_tol) {
  if (d <= 2) throw std::domain_error("watson: integral diverges for d <= 2");
  if (d > 6) throw std::invalid_argument("watson: need d <= 6");
  FrullaniIntegrand f;
  f.g = [d](double t) { return t * pow_int(bessel_i0_scaled(t), d); };
  f.g_over_t_series = [d](double t) {
    const double dd = d;
    return 1.0 + t * (-dd + t * (dd * dd / 2.0 + dd / 4.0));
  };
  return specfun::integrate_frullani(f, make_spec(abs_tol)).value;
}

double green(int d, int k, double w, double abs_tol) {
  if (d < 1 || d > 6 || k < 1) throw std::invalid_argument("green: need 1 <= d <= 6, k >= 1");
  if (w < d)
    throw std::domain_error("green: diverges, exponential growth for w < d");
  if (w == static_cast<double>(d) && 2 * k >= d)
    throw std::domain_error("green: diverges, algebraic tail needs 2k < d at w = d");
  const double gamma_k = std::tgamma(static_cast<double>(k));
  FrullaniIntegrand f;
  f.g = [d, k, w, gamma_k](double t) {
    return pow_int(t, k) * std::exp(-(w - d) * t) * pow_int(bessel_i0_scaled(t), d) / gamma_k;
  };
  f.g_over_t_series = [d, k, w, gamma_k](double t) {
    const double dd = d;
    return pow_int(t, k - 1) * (1.0 + t * (-w + t * (w * w / 2.0 + dd / 4.0))) / gamma_k;
  };
  return specfun::integrate_frullani(f, make_spec(abs_tol)).value;
}

double glasser_j(int m, double w, double abs_tol) {
  if (m < 1) throw std::invalid_argument("glasser_j: need m >= 1");
  if (w < m) throw std::domain_error("glasser_j: diverges for w < m");
  FrullaniIntegrand f;
  f.g = [m, w](double t) {
    return std::exp(-t) - std::exp(-(w - m) * t) * pow_int(bessel_i0_scaled(t), m);
  };
  f.g_over_t_series = [m, w](double t) {
    const double mm = m;
    return (w - 1.0) +
           t * ((0.5 - w * w / 2.0 - mm / 4.0) +
                t * (w * w * w / 6.0 + w * mm / 4.0 - 1.0 / 6.0));
  };
  return specfun::integrate_frullani(f, make_spec(abs_tol)).value;
}

TheoremRHS theorem1_rhs(const spectra::OrthotopeSpec& alphas,
                        zetadet::ZetaConvention convention) {
  alphas.validate();
  const int d = static_cast<int>(alphas.alphas.size());
  if (d > 3)
    throw std::invalid_argument("theorem1_rhs: face determinants available up to d = 3");
  TheoremRHS r;
  r.degree = d;
  r.convention = convention;
  r.bulk = c_d(d, 1e-12) * spectra::face_volume(alphas, d);
  for (int m = 1; m < d; ++m)
    r.boundary.push_back(boundary_coeff(d, m, 1e-11) * spectra::face_volume(alphas, m));
  r.log_coefficient = 2.0 - std::ldexp(1.0, 1 - d);

  // continuum face determinants over every non-empty subset of the axes
  double constant = 0.0;
  for (int mask = 1; mask < (1 << d); ++mask) {
    std::vector<double> sub;
    for (int i = 0; i < d; ++i)
      if (mask & (1 << i)) sub.push_back(alphas.alphas[i]);
    if (sub.size() == 1)
      constant -= zetadet::zeta_prime0_interval(sub[0], convention);
    else
      constant -= zetadet::zeta_prime0_orthotope(sub);
  }
  for (int m = 1; m <= d; ++m) {
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    constant += std::ldexp(sign * binom(d, m) * std::log(4.0 * m), -d);
  }
  r.constant = constant;
  return r;
}

TheoremRHS theorem3_rhs(zetadet::ZetaConvention convention) {
  TheoremRHS r;
  r.degree = 2;
  r.convention = convention;
  r.bulk = 2.0 * specfun::catalan() / M_PI;
  r.boundary = {-std::log(2.0 + std::sqrt(2.0))};
  r.log_coefficient = -0.75;
  // single pairs with the direct spectral continuation of the triangle
  // zeta, doubled with the square-splitting value; see zetadet
  const double zp = (convention == zetadet::ZetaConvention::single)
                        ? zetadet::zeta_prime0_triangle_direct()
                        : zetadet::zeta_prime0_triangle();
  r.constant = -zp + 23.0 / 8.0 * std::log(2.0);
  return r;
}

double forest_prediction(int d, const spectra::OrthotopeSpec& alphas, long n, int k) {
  alphas.validate();
  if (static_cast<int>(alphas.alphas.size()) != d)
    throw std::invalid_argument("forest_prediction: alphas must have length d");
  if (n < 1) throw std::invalid_argument("forest_prediction: need n >= 1");
  const double nn = static_cast<double>(n);
  if (d == 3 && k == 2) return 0.5 * spectra::face_volume(alphas, 3) * watson(3) * pow_int(nn, 3);
  if (d == 4 && (k == 2 || k == 3)) {
    static const double surface = forest_surface_coeff();
    const double a = 0.5 * spectra::face_volume(alphas, 4) * watson(4);
    const double b = 0.5 * spectra::face_volume(alphas, 3) * surface;
    // two-term displays: N2/N1 ~ a n^4 - b n^3, and squaring and halving
    // gives N3/N1 ~ a^2/2 n^8 - a b n^7
    if (k == 2) return a * pow_int(nn, 4) - b * pow_int(nn, 3);
    return 0.5 * a * a * pow_int(nn, 8) - a * b * pow_int(nn, 7);
  }
  throw std::invalid_argument("forest_prediction: supported are d=3 k=2 and d=4 k in {2,3}");
}

std::vector<SweepRecord> residual_sweep(SweepTarget target,
                                        const spectra::OrthotopeSpec& alphas,
                                        const std::vector<long>& n_list,
                                        zetadet::ZetaConvention convention,
                                        Precision precision) {
  if (n_list.empty()) throw std::invalid_argument("residual_sweep: empty n list");
  for (std::size_t i = 0; i + 1 < n_list.size(); ++i)
    if (n_list[i] >= n_list[i + 1])
      throw std::invalid_argument("residual_sweep: n list must be strictly ascending");
  if (n_list.front() < 1) throw std::invalid_argument("residual_sweep: n must be positive");

  const TheoremRHS rhs = (target == SweepTarget::theorem1)
                             ? theorem1_rhs(alphas, convention)
                             : theorem3_rhs(convention);
  std::vector<SweepRecord> out;
  out.reserve(n_list.size());
  for (long n : n_list) {
    double lhs;
    if (target == SweepTarget::theorem1) {
      spectra::LatticeSpec spec;
      spec.kind = spectra::LatticeKind::grid;
      for (int a : alphas.alphas) spec.sides.push_back(a * static_cast<int>(n));
      lhs = spectra::log_det_star(spec);
    } else {
      lhs = exact::tau_qad_product(n, precision);
    }
    const double part = rhs.partial(static_cast<double>(n));
    out.push_back({n, lhs, part, lhs - part});
  }
  return out;
}

}  // namespace latdet::asympt
