#include "rlfrac/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <random>

namespace rlfrac {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Shortest %g form that round-trips.
std::string fmt(double v) {
  char buf[32];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

double bump_profile(double a, double b, double x) {
  if (x <= a || x >= b) return 0.0;
  const double t = (2.0 * x - a - b) / (b - a);
  return std::exp(-1.0 / (1.0 - t * t));
}

double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct TrigTerm {
  double omega;
  double cos_coeff;
  double sin_coeff;
};

// Frequencies in [0.25, 2.5) rad per unit length, coefficients in [-1, 1).
std::vector<TrigTerm> trig_terms(const TrigGaussian& d) {
  std::mt19937_64 rng(d.seed);
  std::vector<TrigTerm> terms;
  for (int m = 0; m < d.terms; ++m) {
    TrigTerm t{};
    t.omega = 0.25 + 2.25 * unit_uniform(rng);
    t.cos_coeff = 2.0 * unit_uniform(rng) - 1.0;
    t.sin_coeff = 2.0 * unit_uniform(rng) - 1.0;
    if (d.odd_only) t.cos_coeff = 0.0;
    terms.push_back(t);
  }
  return terms;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::InvalidParameter, what);
}

}  // namespace

void validate(const AnalyticDescriptor& d) {
  std::visit(overloaded{
                 [](const Gaussian& g) { require(g.width > 0.0, "Gaussian width must be > 0"); },
                 [](const GaussianDerivative& g) {
                   require(g.width > 0.0, "GaussianDerivative width must be > 0");
                 },
                 [](const Bump& b) { require(b.a < b.b, "Bump needs a < b"); },
                 [](const BalancedBump& b) {
                   require(b.a < b.b, "BalancedBump needs a < b");
                   require(b.h > 0.0, "BalancedBump shift must be > 0");
                 },
                 [](const TaperedSine& t) {
                   require(t.omega > 0.0, "TaperedSine omega must be > 0");
                   require(t.taper_width > 0.0, "TaperedSine taper_width must be > 0");
                   require(t.plateau > 0.0, "TaperedSine plateau must be > 0");
                 },
                 [](const Box& b) { require(b.a < b.b, "Box needs a < b"); },
                 [](const Triangle& t) { require(t.a < t.b, "Triangle needs a < b"); },
                 [](const ExpLeft& e) { require(e.lambda > 0.0, "ExpLeft lambda must be > 0"); },
                 [](const TrigGaussian& t) {
                   require(t.terms >= 1, "TrigGaussian needs at least one term");
                   require(t.width > 0.0, "TrigGaussian width must be > 0");
                 },
             },
             d);
}

double evaluate(const AnalyticDescriptor& d, double x) {
  return std::visit(
      overloaded{
          [x](const Gaussian& g) {
            const double t = (x - g.center) / g.width;
            return std::exp(-kPi * t * t);
          },
          [x](const GaussianDerivative& g) {
            const double t = (x - g.center) / g.width;
            return -2.0 * kPi * t / g.width * std::exp(-kPi * t * t);
          },
          [x](const Bump& b) { return bump_profile(b.a, b.b, x); },
          [x](const BalancedBump& b) {
            return bump_profile(b.a, b.b, x + b.h) - 2.0 * bump_profile(b.a, b.b, x) +
                   bump_profile(b.a, b.b, x - b.h);
          },
          [x](const TaperedSine& t) {
            const double taper =
                0.5 * (std::erf((x + t.plateau) / t.taper_width) - std::erf((x - t.plateau) / t.taper_width));
            return taper * std::sin(t.omega * x);
          },
          [x](const Box& b) {
            if (x == b.a || x == b.b) return 0.5;
            return (x > b.a && x < b.b) ? 1.0 : 0.0;
          },
          [x](const Triangle& t) {
            const double mid = 0.5 * (t.a + t.b);
            const double half = 0.5 * (t.b - t.a);
            return std::max(0.0, 1.0 - std::abs(x - mid) / half);
          },
          [x](const ExpLeft& e) { return x <= e.cutoff ? std::exp(e.lambda * x) : 0.0; },
          [x](const TrigGaussian& t) {
            double poly = 0.0;
            for (const auto& term : trig_terms(t)) {
              poly += term.cos_coeff * std::cos(term.omega * x) + term.sin_coeff * std::sin(term.omega * x);
            }
            const double r = x / t.width;
            return poly * std::exp(-kPi * r * r);
          },
      },
      d);
}

SampledSignal sample(const AnalyticDescriptor& d, const UniformGrid& grid) {
  validate(d);
  std::vector<double> v(grid.size());
  if (const auto* t = std::get_if<TrigGaussian>(&d)) {
    // Draw the coefficients once rather than per sample.
    const auto terms = trig_terms(*t);
    for (std::size_t j = 0; j < v.size(); ++j) {
      const double x = grid.x(j);
      double poly = 0.0;
      for (const auto& term : terms) {
        poly += term.cos_coeff * std::cos(term.omega * x) + term.sin_coeff * std::sin(term.omega * x);
      }
      const double r = x / t->width;
      v[j] = poly * std::exp(-kPi * r * r);
    }
  } else {
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = evaluate(d, grid.x(j));
  }
  return SampledSignal(grid, std::move(v));
}

std::string kind_name(const AnalyticDescriptor& d) {
  static constexpr const char* names[] = {"Gaussian", "GaussianDerivative", "Bump", "BalancedBump", "TaperedSine",
                                          "Box",      "Triangle",           "ExpLeft", "TrigGaussian"};
  return names[d.index()];
}

std::string describe(const AnalyticDescriptor& d) {
  const std::string params = std::visit(
      overloaded{
          [](const Gaussian& g) { return "center=" + fmt(g.center) + ", width=" + fmt(g.width); },
          [](const GaussianDerivative& g) { return "center=" + fmt(g.center) + ", width=" + fmt(g.width); },
          [](const Bump& b) { return "a=" + fmt(b.a) + ", b=" + fmt(b.b); },
          [](const BalancedBump& b) { return "a=" + fmt(b.a) + ", b=" + fmt(b.b) + ", h=" + fmt(b.h); },
          [](const TaperedSine& t) {
            return "omega=" + fmt(t.omega) + ", taper_width=" + fmt(t.taper_width) + ", plateau=" + fmt(t.plateau);
          },
          [](const Box& b) { return "a=" + fmt(b.a) + ", b=" + fmt(b.b); },
          [](const Triangle& t) { return "a=" + fmt(t.a) + ", b=" + fmt(t.b); },
          [](const ExpLeft& e) { return "lambda=" + fmt(e.lambda) + ", cutoff=" + fmt(e.cutoff); },
          [](const TrigGaussian& t) {
            return "seed=" + std::to_string(t.seed) + ", terms=" + std::to_string(t.terms) +
                   ", width=" + fmt(t.width) + ", odd_only=" + (t.odd_only ? "true" : "false");
          },
      },
      d);
  return kind_name(d) + "(" + params + ")";
}

std::vector<NamedDescriptor> named_corpus(std::uint64_t seed) {
  return {
      {"balanced_bump", BalancedBump{-1.5, 1.5, 2.5}},
      {"box", Box{-1.0, 1.0}},
      {"bump", Bump{-1.0, 1.0}},
      {"exp_left", ExpLeft{1.0, 0.0}},
      {"gaussian", Gaussian{0.0, 1.0}},
      {"gaussian_derivative", GaussianDerivative{0.0, 1.0}},
      {"tapered_sine", TaperedSine{1.0, 2.0, 12.0}},
      {"triangle", Triangle{-2.0, 2.0}},
      {"trig_gaussian", TrigGaussian{seed, 4, 2.0, false}},
      {"trig_gaussian_odd", TrigGaussian{seed, 4, 2.0, true}},
  };
}

AnalyticDescriptor find_named(const std::string& name, std::uint64_t seed) {
  for (auto& entry : named_corpus(seed)) {
    if (entry.name == name) return entry.descriptor;
  }
  throw Error(ErrorCode::InvalidParameter, "unknown corpus entry '" + name + "'");
}

UniformGrid refine(const UniformGrid& grid) {
  return UniformGrid(grid.x_min(), 0.5 * grid.dx(), 2 * grid.size() - 1);
}

std::vector<ClosedFormPair> oracle_pairs() {
  // Wide periodic window so the taper plateau covers the validity region with
  // room for the fractional kernel tails to die out.
  const UniformGrid sine_grid = UniformGrid::periodic(-120.0, 120.0, 8192);
  // Ends exactly on x = 0, where the exponential is cut.
  const UniformGrid exp_grid(-20.0, 20.0 / 2048.0, 2049);

  std::vector<ClosedFormPair> pairs;

  ClosedFormPair p;
  p.name = "exp_left_integral";
  p.input = ExpLeft{1.0, 0.0};
  p.order = -0.5;
  p.side = OperatorSide::Left;
  p.output = [](double x) { return std::exp(x); };
  p.formula = "exp(x)";
  p.validity = {-10.0, 0.0};
  p.grid = exp_grid;
  p.spectral_applicable = false;
  pairs.push_back(p);

  p.name = "exp_left_derivative";
  p.order = 0.5;
  pairs.push_back(p);

  p = ClosedFormPair{};
  p.name = "tapered_sine_derivative";
  p.input = TaperedSine{1.0, 6.0, 87.0};
  p.order = 0.5;
  p.side = OperatorSide::Left;
  p.output = [](double x) { return std::sin(x + 0.25 * kPi); };
  p.formula = "sin(x + pi/4)";
  p.validity = {-60.0, 60.0};
  p.grid = sine_grid;
  pairs.push_back(p);

  p.name = "tapered_sine_integral";
  p.input = TaperedSine{2.0, 6.0, 87.0};
  p.order = -0.25;
  p.output = [](double x) { return std::pow(2.0, -0.25) * std::sin(2.0 * x - 0.125 * kPi); };
  p.formula = "2^(-1/4) sin(2x - pi/8)";
  pairs.push_back(p);

  p = ClosedFormPair{};
  p.name = "gaussian_identity";
  p.input = Gaussian{0.0, 1.0};
  p.order = 0.0;
  p.side = OperatorSide::Left;
  p.output = [](double x) { return std::exp(-kPi * x * x); };
  p.formula = "exp(-pi x^2)";
  p.validity = {-20.0, 20.0};
  p.grid = UniformGrid::default_grid();
  p.gl_applicable = false;
  pairs.push_back(p);

  return pairs;
}

}  // namespace rlfrac
