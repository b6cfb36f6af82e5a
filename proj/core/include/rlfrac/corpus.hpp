#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "rlfrac/signal.hpp"

namespace rlfrac {

/// exp(-pi ((x - center) / width)^2)
struct Gaussian {
  double center = 0.0;
  double width = 1.0;
};

/// d/dx of Gaussian(center, width).
struct GaussianDerivative {
  double center = 0.0;
  double width = 1.0;
};

/// exp(-1 / (1 - t^2)) on (a, b), t the affine map of (a, b) onto (-1, 1); zero elsewhere.
struct Bump {
  double a = -1.0;
  double b = 1.0;
};

/// bump(x + h) - 2 bump(x) + bump(x - h): zero mean and zero first moment.
struct BalancedBump {
  double a = -1.5;
  double b = 1.5;
  double h = 2.5;
};

/// sin(omega x) times an erf taper equal to 1 on |x| << plateau.
struct TaperedSine {
  double omega = 1.0;
  double taper_width = 2.0;
  double plateau = 12.0;
};

/// Indicator of [a, b], 1/2 at the endpoints.
struct Box {
  double a = -1.0;
  double b = 1.0;
};

/// Hat on [a, b] with unit peak at the midpoint.
struct Triangle {
  double a = -1.0;
  double b = 1.0;
};

/// exp(lambda x) for x <= cutoff, zero beyond.
struct ExpLeft {
  double lambda = 1.0;
  double cutoff = 0.0;
};

/// Seeded trigonometric polynomial times exp(-pi (x / width)^2). With
/// odd_only the polynomial is a pure sine series and the signal has zero mean.
struct TrigGaussian {
  std::uint64_t seed = 0;
  int terms = 4;
  double width = 2.0;
  bool odd_only = false;
};

using AnalyticDescriptor = std::variant<Gaussian, GaussianDerivative, Bump, BalancedBump, TaperedSine, Box,
                                        Triangle, ExpLeft, TrigGaussian>;

/// Rejects non-positive widths, a >= b, and the like.
void validate(const AnalyticDescriptor& d);

double evaluate(const AnalyticDescriptor& d, double x);
SampledSignal sample(const AnalyticDescriptor& d, const UniformGrid& grid);

std::string kind_name(const AnalyticDescriptor& d);
/// e.g. "Bump(a=-1, b=1)".
std::string describe(const AnalyticDescriptor& d);

struct NamedDescriptor {
  std::string name;
  AnalyticDescriptor descriptor;
};

/// The named corpus served by `corpus list` / `corpus emit`. The seed feeds
/// the trigonometric entries.
std::vector<NamedDescriptor> named_corpus(std::uint64_t seed = 0);
/// Throws InvalidParameter for an unknown name.
AnalyticDescriptor find_named(const std::string& name, std::uint64_t seed = 0);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const noexcept { return x >= lo && x <= hi; }
};

/// D^order on `side` applied to `input` equals `output` on `validity`.
struct ClosedFormPair {
  std::string name;
  AnalyticDescriptor input;
  double order = 0.0;
  OperatorSide side = OperatorSide::Left;
  std::function<double(double)> output;
  std::string formula;
  Interval validity;
  /// Grid on which the pair is meant to be checked.
  UniformGrid grid = UniformGrid::default_grid();
  bool spectral_applicable = true;
  bool gl_applicable = true;
};

std::vector<ClosedFormPair> oracle_pairs();

/// Same first and last sample as `grid`, dx halved (2n - 1 samples).
UniformGrid refine(const UniformGrid& grid);

}  // namespace rlfrac
