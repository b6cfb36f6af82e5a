#pragma once

#include <vector>

#include "rlfrac/fourier.hpp"
#include "rlfrac/signal.hpp"

namespace rlfrac {

/// Operator order in the unified convention: mu > 0 derivative, mu < 0
/// integral of order |mu|, mu = 0 identity.
struct FracOrder {
  double mu = 0.0;

  constexpr explicit FracOrder(double value) noexcept : mu(value) {}
  constexpr bool is_integral() const noexcept { return mu < 0.0; }
  constexpr bool is_derivative() const noexcept { return mu > 0.0; }
};

/// Generalized binomial weights w_k = (-1)^k binom(mu, k).
struct GLWeights {
  double mu = 0.0;
  std::vector<double> w;
};

/// D^mu (Left) or D^{mu*} (Right) as a Fourier multiplier. |mu| < 1.
/// Negative orders drop the DC bin.
SampledSignal apply_spectral(const SampledSignal& a, FracOrder order, OperatorSide side);

/// w_0 .. w_m via w_k = w_{k-1} (k - 1 - mu) / k.
GLWeights gl_weights(double mu, std::size_t m);

/// Unshifted Grünwald–Letnikov sum, first order in dx. The signal is taken
/// as zero outside the grid on the side the operator integrates over.
SampledSignal apply_grunwald(const SampledSignal& a, FracOrder order, OperatorSide side);

/// |(u, D^{mu} psi on the opposite side) - (w, psi)|: zero when w is the weak
/// mu-order derivative of u on `side`, tested against psi.
double adjoint_defect(const SampledSignal& u, const SampledSignal& w, const SampledSignal& psi,
                      double mu, OperatorSide side);

}  // namespace rlfrac
