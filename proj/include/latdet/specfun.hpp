#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>

namespace latdet::specfun {

// Modified Bessel function of the first kind, integer order.
// bessel_i0_scaled returns exp(-|x|) * I0(x) and stays bounded for large x.
double bessel_i0(double x);
double bessel_i0_scaled(double x);
double bessel_in(int nu, double x);
double bessel_in_scaled(int nu, double x);

// Exponential integral E1(x) for x > 0.
double expint_e1(double x);

// Upper incomplete gamma Gamma(s, x) for s in {1/2, 1, 3/2} and x >= 0.
// These half-integer orders are the only ones the lattice zeta sums need.
double gamma_upper_half_orders(double two_s, double x);

// Dedekind eta on the imaginary axis, eta(i y) for y > 0.
// Uses the modular inversion y -> 1/y below y = 1/4 so the q-product
// always converges geometrically with ratio at most exp(-pi/2).
double dedekind_eta_imag(double y);

// Catalan's constant, computed once from a rapidly convergent central
// binomial series and cached.
double catalan();

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double value, double achieved)
      : std::runtime_error(what), value(value), achieved(achieved) {}
  double value;     // best estimate at the point of failure
  double achieved;  // error estimate actually reached
};

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double split_point = 1.0;  // boundary between the mid panel and the 1/t tail
  double small_t_cut = 1e-3; // head panel, integrated from the series hook
  std::size_t max_subdivisions = 4000;
};

// Adaptive Gauss-Kronrod 7-15 on a finite interval. Throws QuadratureError
// if the subdivision budget runs out before the tolerance is met.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b,
                                    double abs_tol,
                                    std::size_t max_subdivisions);

// Integrand for integrals of the form  int_0^inf g(t) dt / t  with
// g(0) = 0 and g decaying at infinity. g_over_t_series must return
// g(t)/t accurately for 0 <= t <= small_t_cut, where computing g
// directly would lose all precision to cancellation; a truncated
// Taylor series is the usual supplier. g itself must stay finite for
// large t, so any Bessel factors have to be carried in scaled form.
struct FrullaniIntegrand {
  std::function<double(double)> g;
  std::function<double(double)> g_over_t_series;
};

// int_0^inf g(t)/t dt, split as [0,cut] + [cut,split] + [split,inf),
// the last after the substitution t = split/u^2.
QuadratureResult integrate_frullani(const FrullaniIntegrand& f,
                                    const QuadratureSpec& spec = {});

namespace detail {
// branch implementations, exposed so tests can pin the crossover
double i0_series(double x);
double i0_asymptotic_scaled(double x);
double in_series(int nu, double x);
double in_asymptotic_scaled(int nu, double x);
}  // namespace detail

}  // namespace latdet::specfun
