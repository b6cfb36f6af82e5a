#pragma once

// Reference values frozen from 30-digit mpmath evaluations, plus quadrature
// helpers that evaluate the Riemann-Liouville integrals directly.

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace oracle {

// integral of exp(-2 pi x^2) over R
inline constexpr double kGaussianSquareIntegral = 0.707106781186547524;
// |exp(-pi x^2)|_{H^1} = sqrt(pi / sqrt 2)
inline constexpr double kGaussianSeminormOrder1 = 1.49045008942909025;
inline constexpr double kGaussianNormOrderHalf = 1.30656296487637653;
inline constexpr double kGaussianNormOrder1 = 1.71130016369593404;
// D^{-1/4} sin(2x) at x = 0.3
inline constexpr double kSineIntegralAt03 = 0.1730727606594948;
// D^{1/2} sin(x) at x = 0.3
inline constexpr double kSineDerivativeAt03 = 0.884489251883547581;
// D^{-1/2} e^x at x = 0.3
inline constexpr double kExpIntegralAt03 = 1.349858807576003104;
inline constexpr double kCosPi8 = 0.923879532511286756;
inline constexpr double kSinPi8 = 0.382683432365089772;
inline constexpr double kTwoCosPi8 = 1.847759065022573512;
// sqrt(2 + 2 cos(0.4 pi)) and its reciprocal
inline constexpr double kOneSidedBound04 = 1.618033988749894807;
inline constexpr double kOneSidedInvBound04 = 0.618033988749894864;

// (1/Gamma(sigma)) int_0^inf t^{sigma-1} f(x - t) dt, for f decaying leftward.
inline double rl_left_integral(const std::function<double(double)>& f, double sigma, double x) {
  boost::math::quadrature::tanh_sinh<double> near;
  boost::math::quadrature::exp_sinh<double> far;
  const auto g = [&](double t) {
    const double v = f(x - t);
    return v == 0.0 ? 0.0 : std::pow(t, sigma - 1.0) * v;
  };
  const double head = near.integrate(g, 0.0, 1.0);
  const double tail = far.integrate(g, 1.0, std::numeric_limits<double>::infinity());
  return (head + tail) / boost::math::tgamma(sigma);
}

// Marchaud form of the left derivative of order 0 < mu < 1:
// mu / Gamma(1 - mu) int_0^inf (f(x) - f(x - t)) t^{-1-mu} dt.
// The difference cancels near t = 0; expect about 5e-9 relative, not 1e-12.
inline double rl_left_derivative(const std::function<double(double)>& f, double mu, double x) {
  boost::math::quadrature::tanh_sinh<double> near;
  boost::math::quadrature::exp_sinh<double> far;
  const auto g = [&](double t) {
    const double d = f(x) - f(x - t);
    return d == 0.0 ? 0.0 : d * std::pow(t, -1.0 - mu);
  };
  const double head = near.integrate(g, 0.0, 1.0);
  const double tail = far.integrate(g, 1.0, std::numeric_limits<double>::infinity());
  return mu / boost::math::tgamma(1.0 - mu) * (head + tail);
}

// int_{-inf}^{inf} g(xi) d xi for an even, rapidly decaying g.
inline double even_integral(const std::function<double(double)>& g) {
  boost::math::quadrature::exp_sinh<double> far;
  return 2.0 * far.integrate(g, 0.0, std::numeric_limits<double>::infinity());
}

}  // namespace oracle
