#pragma once

#include <string>
#include <utility>

#include "rlfrac/signal.hpp"

namespace rlfrac {

/// || |2 pi xi|^mu u^ ||_2. mu >= 0.
double sobolev_seminorm(const SampledSignal& u, double mu);
/// (||u||^2 + |u|_mu^2)^(1/2).
double sobolev_norm(const SampledSignal& u, double mu);

/// Power-law fit |u^(xi)| ~ xi^exponent over [xi_lo, xi_hi].
struct RegularityFit {
  double exponent = 0.0;
  double xi_lo = 0.0;
  double xi_hi = 0.0;
  double rms_fit_error = 0.0;
  /// Decay steepens across the window (or drops below the fp floor):
  /// faster than any power.
  bool super_polynomial = false;
  /// Number of frequency bins that entered the fit.
  std::size_t bins_used = 0;
};

/// [0.1, 0.5] x Nyquist.
std::pair<double, double> default_decay_window(const UniformGrid& grid);

/// Least-squares slope of log band-RMS |u^| against log xi, using 16
/// log-spaced bands and averaging the +xi and -xi bins.
RegularityFit decay_exponent(const SampledSignal& u, double xi_lo, double xi_hi);

std::string to_json(const RegularityFit& fit);

}  // namespace rlfrac
