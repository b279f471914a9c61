#ifndef EXWAVE_QUADRATURE_HPP
#define EXWAVE_QUADRATURE_HPP

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>

#include "exwave/error.hpp"

namespace exwave::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

/// Adaptive Gauss-Kronrod (G7-K15) on a finite interval.
template <class F>
Result gk(const F& f, double a, double b, int max_depth = 15) {
  if (a == b) return {0.0, 0.0};
  double err = 0.0;
  double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, max_depth, 1e-14, &err);
  return {v, err};
}

/// Gauss-Kronrod with a hard absolute-error gate.
template <class F>
double gk_checked(const F& f, double a, double b, double abs_tol, int max_depth = 15) {
  Result r = gk(f, a, b, max_depth);
  double gate = std::max(abs_tol, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(r.value));
  if (!(r.error <= gate) || !std::isfinite(r.value))
    raise(errc::quadrature_failure, "adaptive quadrature did not reach tolerance " +
                                        std::to_string(abs_tol) + " (err=" + std::to_string(r.error) + ")");
  return r.value;
}

/// tanh-sinh rule; robust for integrable endpoint singularities.
template <class F>
Result ts(const F& f, double a, double b, double rel_tol = 1e-12) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  double v = integrator.integrate(f, a, b, rel_tol, &err, &l1);
  return {v, err * l1};
}

/// exp-sinh rule for [a, +inf).
template <class F>
Result semi_infinite(const F& f, double a, double rel_tol = 1e-12) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0, l1 = 0.0;
  auto shifted = [&](double x) { return f(a + x); };
  double v = integrator.integrate(shifted, rel_tol, &err, &l1);
  return {v, err * l1};
}

}  // namespace exwave::quad

#endif
