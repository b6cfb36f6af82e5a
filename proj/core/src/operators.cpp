#include "rlfrac/operators.hpp"

#include <cmath>
#include <string>

namespace rlfrac {

namespace {

void require_spectral_order(double mu) {
  if (!std::isfinite(mu) || std::abs(mu) >= 1.0) {
    throw Error(ErrorCode::OrderOutOfRange,
                "spectral operators need |order| < 1, got " + std::to_string(mu));
  }
}

}  // namespace

SampledSignal apply_spectral(const SampledSignal& a, FracOrder order, OperatorSide side) {
  require_spectral_order(order.mu);
  const Spectrum S = dft_forward(a);
  return dft_inverse(apply_multiplier(S, power_symbol(order.mu, side, a.grid())));
}

GLWeights gl_weights(double mu, std::size_t m) {
  if (mu == 0.0) throw Error(ErrorCode::DegenerateOrder, "Grünwald weights need a nonzero order");
  if (!std::isfinite(mu) || std::abs(mu) >= 1.0) {
    throw Error(ErrorCode::OrderOutOfRange, "Grünwald weights need order in (-1, 1)");
  }
  if (m < 1) throw Error(ErrorCode::InvalidParameter, "Grünwald weights need m >= 1");
  GLWeights g{mu, std::vector<double>(m + 1)};
  g.w[0] = 1.0;
  for (std::size_t k = 1; k <= m; ++k) {
    const double kk = static_cast<double>(k);
    g.w[k] = g.w[k - 1] * (kk - 1.0 - mu) / kk;
  }
  return g;
}

SampledSignal apply_grunwald(const SampledSignal& a, FracOrder order, OperatorSide side) {
  if (!std::isfinite(order.mu) || order.mu == 0.0 || std::abs(order.mu) >= 1.0) {
    throw Error(ErrorCode::OrderOutOfRange,
                "Grünwald operators need order in (-1, 1) \\ {0}, got " + std::to_string(order.mu));
  }
  const std::size_t n = a.size();
  const auto weights = gl_weights(order.mu, n - 1).w;
  const double scale = std::pow(a.grid().dx(), -order.mu);
  const auto v = a.values();
  std::vector<double> out(n, 0.0);

  if (side == OperatorSide::Left) {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k <= j; ++k) acc += weights[k] * v[j - k];
      out[j] = scale * acc;
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; j + k < n; ++k) acc += weights[k] * v[j + k];
      out[j] = scale * acc;
    }
  }
  return SampledSignal(a.grid(), std::move(out));
}

double adjoint_defect(const SampledSignal& u, const SampledSignal& w, const SampledSignal& psi,
                      double mu, OperatorSide side) {
  require_compatible(u.grid(), w.grid());
  require_compatible(u.grid(), psi.grid());
  if (!(mu > 0.0 && mu < 1.0)) {
    throw Error(ErrorCode::OrderOutOfRange, "weak derivative order must lie in (0, 1)");
  }
  const SampledSignal test = apply_spectral(psi, FracOrder(mu), opposite(side));
  return std::abs(inner_product(u, test) - inner_product(w, psi));
}

}  // namespace rlfrac
