#include "latdet/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <vector>

namespace latdet::specfun {

namespace detail {

double i0_series(double x) {
  // I0(x) = sum_k (x^2/4)^k / (k!)^2, all terms positive
  const double q = 0.25 * x * x;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

double in_series(int nu, double x) {
  // I_nu(x) = (x/2)^nu / nu! * sum_k (x^2/4)^k / (k! (nu+1)_k)
  const double q = 0.25 * x * x;
  double pref = 1.0;
  for (int k = 1; k <= nu; ++k) pref *= 0.5 * x / k;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<double>(k) * (k + nu));
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return pref * sum;
}

double i0_asymptotic_scaled(double x) {
  // e^{-x} I0(x) ~ (2 pi x)^{-1/2} sum_k ((2k-1)!!)^2 / (k! (8x)^k)
  // valid for large x; terms shrink until k ~ 4x, truncate at the smallest
  double term = 1.0, sum = 1.0;
  double prev = 1e300;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= odd * odd / (8.0 * x * k);
    if (std::abs(term) >= prev) break;
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) < 1e-17 * sum) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

double in_asymptotic_scaled(int nu, double x) {
  // e^{-x} I_nu(x) ~ (2 pi x)^{-1/2} sum_k (-1)^k a_k(nu) / (8x)^k
  // with a_k = prod_{j=1..k} (4 nu^2 - (2j-1)^2) / k!
  const double mu = 4.0 * static_cast<double>(nu) * nu;
  double term = 1.0, sum = 1.0;
  double prev = 1e300;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (8.0 * x * k);
    if (std::abs(term) >= prev) break;
    sum += term;
    prev = std::abs(term);
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

}  // namespace detail

static constexpr double kBesselCrossover = 30.0;

double bessel_i0(double x) {
  x = std::abs(x);
  if (x < kBesselCrossover) return detail::i0_series(x);
  return std::exp(x) * detail::i0_asymptotic_scaled(x);
}

double bessel_i0_scaled(double x) {
  x = std::abs(x);
  if (x < kBesselCrossover) return std::exp(-x) * detail::i0_series(x);
  return detail::i0_asymptotic_scaled(x);
}

double bessel_in(int nu, double x) {
  nu = std::abs(nu);
  if (nu == 0) return bessel_i0(x);
  const double ax = std::abs(x);
  const double sign = (x < 0 && (nu & 1)) ? -1.0 : 1.0;
  if (ax < kBesselCrossover) return sign * detail::in_series(nu, ax);
  return sign * std::exp(ax) * detail::in_asymptotic_scaled(nu, ax);
}

double bessel_in_scaled(int nu, double x) {
  nu = std::abs(nu);
  if (nu == 0) return bessel_i0_scaled(x);
  const double ax = std::abs(x);
  const double sign = (x < 0 && (nu & 1)) ? -1.0 : 1.0;
  if (ax < kBesselCrossover) return sign * std::exp(-ax) * detail::in_series(nu, ax);
  return sign * detail::in_asymptotic_scaled(nu, ax);
}

double expint_e1(double x) {
  if (!(x > 0.0)) throw std::domain_error("expint_e1: requires x > 0");
  if (x <= 1.0) {
    // E1(x) = -gamma - log x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
    static constexpr double kEulerGamma = 0.57721566490153286060651209008240;
    double sum = -kEulerGamma - std::log(x);
    double p = 1.0;  // x^k / k!
    for (int k = 1; k < 40; ++k) {
      p *= x / k;
      const double c = p / k;
      sum += (k & 1) ? c : -c;
      if (c < 1e-18) break;
    }
    return sum;
  }
  // continued fraction E1(x) = e^{-x} / (x+1 - 1/(x+3 - 4/(x+5 - ...)))
  // evaluated with the modified Lentz scheme
  const double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int k = 1; k < 200; ++k) {
    const double a = -static_cast<double>(k) * k;
    b += 2.0;
    d = 1.0 / (b + a * d);
    c = b + a / c;
    const double delta = c * d;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return h * std::exp(-x);
}

double gamma_upper_half_orders(double two_s, double x) {
  if (x < 0.0) throw std::domain_error("gamma_upper_half_orders: requires x >= 0");
  const double rx = std::sqrt(x);
  if (two_s == 2.0) return std::exp(-x);
  if (two_s == 1.0) return std::sqrt(M_PI) * std::erfc(rx);
  if (two_s == 3.0) return 0.5 * std::sqrt(M_PI) * std::erfc(rx) + rx * std::exp(-x);
  throw std::domain_error("gamma_upper_half_orders: 2s must be 1, 2 or 3");
}

double dedekind_eta_imag(double y) {
  if (!(y > 0.0)) throw std::domain_error("dedekind_eta_imag: requires y > 0");
  if (y < 0.25) return dedekind_eta_imag(1.0 / y) / std::sqrt(y);
  // eta(i y) = e^{-pi y / 12} prod_{k>=1} (1 - e^{-2 pi k y})
  const double q = std::exp(-2.0 * M_PI * y);
  double prod = 1.0;
  double qk = q;
  while (qk > 1e-20) {
    prod *= 1.0 - qk;
    qk *= q;
  }
  return std::exp(-M_PI * y / 12.0) * prod;
}

double catalan() {
  // G = 3/8 sum_n 1 / ((2n+1)^2 binom(2n,n)) + pi/8 log(2 + sqrt 3)
  static const double value = [] {
    double sum = 0.0;
    double binom = 1.0;  // binom(2n, n)
    for (int n = 0; n < 40; ++n) {
      if (n > 0) binom *= 2.0 * (2.0 * n - 1.0) / n;
      const double odd = 2.0 * n + 1.0;
      const double term = 1.0 / (odd * odd * binom);
      sum += term;
      if (term < 1e-18 * sum) break;
    }
    return 0.375 * sum + M_PI / 8.0 * std::log(2.0 + std::sqrt(3.0));
  }();
  return value;
}

namespace {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1]. The embedded Gauss rule
// uses the odd-indexed nodes.
constexpr double kKronrodNodes[15] = {
    -0.991455371120812639206854697526329,
    -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926,
    -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730,
    -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245,
    0.0,
    0.207784955007898467600689403773245,
    0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,
    0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,
    0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kKronrodWeights[15] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
    0.204432940075298892414161999234649,
    0.190350578064785409913256402421014,
    0.169004726639267902826583426598550,
    0.140653259715525918745189590510238,
    0.104790010322250183839876322541518,
    0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double kGaussWeights[7] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
    0.381830050505118944950369775488975,
    0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct Panel {
  double a, b, integral, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double gk = 0.0, g = 0.0;
  for (int i = 0; i < 15; ++i) {
    const double v = f(mid + half * kKronrodNodes[i]);
    gk += kKronrodWeights[i] * v;
    if (i & 1) g += kGaussWeights[i / 2] * v;
  }
  gk *= half;
  g *= half;
  return Panel{a, b, gk, std::abs(gk - g)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol,
                                    std::size_t max_subdivisions) {
  std::priority_queue<Panel> panels;
  panels.push(evaluate_panel(f, a, b));
  std::size_t evals = 15;
  double total_err = panels.top().error;
  double total_val = panels.top().integral;
  std::size_t splits = 0;
  while (total_err > abs_tol) {
    if (splits >= max_subdivisions) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "integrate_adaptive: subdivision budget exhausted, "
                    "error estimate %.3g above tolerance %.3g",
                    total_err, abs_tol);
      throw QuadratureError(msg, total_val, total_err);
    }
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    evals += 30;
    total_err += left.error + right.error - worst.error;
    total_val += left.integral + right.integral - worst.integral;
    panels.push(left);
    panels.push(right);
    ++splits;
  }
  return QuadratureResult{total_val, total_err, evals};
}

QuadratureResult integrate_frullani(const FrullaniIntegrand& f,
                                    const QuadratureSpec& spec) {
  if (!(spec.small_t_cut > 0.0) || !(spec.split_point > spec.small_t_cut))
    throw std::invalid_argument("integrate_frullani: need 0 < small_t_cut < split_point");
  const double tol = spec.abs_tol / 3.0;
  const QuadratureResult head = integrate_adaptive(
      f.g_over_t_series, 0.0, spec.small_t_cut, tol, spec.max_subdivisions);
  const QuadratureResult mid = integrate_adaptive(
      [&](double t) { return f.g(t) / t; }, spec.small_t_cut, spec.split_point,
      tol, spec.max_subdivisions);
  // tail: t = split/u^2 maps [split, inf) to (0, 1] with dt/t = 2 du/u.
  // The squared map turns every half-integer algebraic tail t^{-j/2}
  // into a polynomial u^j near u = 0, so the panel stays smooth even
  // for integrands at the edge of convergence.
  const double split = spec.split_point;
  const QuadratureResult tail = integrate_adaptive(
      [&](double u) { return 2.0 * f.g(split / (u * u)) / u; }, 0.0, 1.0, tol,
      spec.max_subdivisions);
  return QuadratureResult{head.value + mid.value + tail.value,
                          head.error_estimate + mid.error_estimate + tail.error_estimate,
                          head.evaluations + mid.evaluations + tail.evaluations};
}

}  // namespace latdet::specfun
