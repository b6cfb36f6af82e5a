#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "rlfrac/corpus.hpp"
#include "rlfrac/decomposition.hpp"
#include "rlfrac/sobolev.hpp"

using namespace rlfrac;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

constexpr double kPi = std::numbers::pi;

// |exp(-pi x^2)|_mu by quadrature of int |2 pi xi|^{2 mu} exp(-2 pi xi^2) d xi.
double gaussian_seminorm_quadrature(double mu) {
  return std::sqrt(oracle::even_integral(
      [mu](double xi) { return std::pow(2.0 * kPi * xi, 2.0 * mu) * std::exp(-2.0 * kPi * xi * xi); }));
}

}  // namespace

TEST_CASE("quadrature reproduces the frozen Gaussian values") {
  CHECK_THAT(gaussian_seminorm_quadrature(0.0), WithinRel(std::pow(2.0, -0.25), 1e-12));
  CHECK_THAT(gaussian_seminorm_quadrature(1.0), WithinRel(oracle::kGaussianSeminormOrder1, 1e-12));
  const double l2sq = oracle::kGaussianSquareIntegral;
  CHECK_THAT(std::sqrt(l2sq + std::pow(gaussian_seminorm_quadrature(0.5), 2)),
             WithinRel(oracle::kGaussianNormOrderHalf, 1e-12));
}

TEST_CASE("Gaussian seminorms and norms") {
  const SampledSignal u = sample(Gaussian{0.0, 1.0}, UniformGrid::default_grid());
  CHECK_THAT(sobolev_seminorm(u, 0.0), WithinAbs(std::pow(2.0, -0.25), 1e-8));
  CHECK_THAT(sobolev_seminorm(u, 1.0), WithinRel(oracle::kGaussianSeminormOrder1, 1e-10));
  CHECK_THAT(sobolev_norm(u, 1.0), WithinRel(oracle::kGaussianNormOrder1, 1e-10));
  CHECK(sobolev_norm(u, 0.5) <= sobolev_norm(u, 1.0));
  CHECK_THAT(sobolev_norm(u, 0.0), WithinRel(std::sqrt(2.0) * l2_norm(u), 1e-10));
}

TEST_CASE("half order converges at second order in the bin width") {
  // |xi| has a kink at 0, so the bin sum carries an O(dxi^2) Euler-Maclaurin term
  const auto err = [](double half_length) {
    const auto n = static_cast<std::size_t>(std::lround(2.0 * half_length / 0.0390625));
    const auto u = sample(Gaussian{0.0, 1.0}, UniformGrid::periodic(-half_length, half_length, n));
    return std::abs(sobolev_norm(u, 0.5) / oracle::kGaussianNormOrderHalf - 1.0);
  };
  const double coarse = err(20.0);
  const double fine = err(40.0);
  CHECK(coarse <= 1e-3);
  CHECK(fine <= 2.5e-4);
  CHECK_THAT(coarse / fine, WithinRel(4.0, 0.05));
}

TEST_CASE("seminorm edge cases and invariances") {
  const UniformGrid g = UniformGrid::default_grid();
  const SampledSignal zero = SampledSignal::zeros(g);
  for (double mu : {0.0, 0.3, 1.0, 2.5}) {
    CHECK(sobolev_seminorm(zero, mu) == 0.0);
    CHECK(sobolev_norm(zero, mu) == 0.0);
  }
  CHECK(code_of([&] { sobolev_seminorm(zero, -0.1); }) == ErrorCode::OrderOutOfRange);

  const SampledSignal u = sample(Bump{-1.0, 2.0}, g);
  for (double mu : {0.25, 0.75}) {
    const double base = sobolev_seminorm(u, mu);
    CHECK_THAT(sobolev_seminorm(translate(u, 321), mu), WithinRel(base, 1e-12));
    CHECK_THAT(sobolev_seminorm(-3.0 * u, mu), WithinRel(3.0 * base, 1e-14));
  }
}

TEST_CASE("left, right and spectral seminorms coincide") {
  const SampledSignal u = sample(TrigGaussian{5, 4, 2.0, false}, UniformGrid::default_grid());
  for (double s : {0.1, 0.25, 0.4}) {
    const double semi = sobolev_seminorm(u, s);
    CHECK_THAT(l2_norm(apply_spectral(u, FracOrder(s), OperatorSide::Left)), WithinRel(semi, 1e-10));
    CHECK_THAT(l2_norm(apply_spectral(u, FracOrder(s), OperatorSide::Right)), WithinRel(semi, 1e-10));
  }
}

TEST_CASE("decay exponents of the finite-regularity profiles") {
  const UniformGrid g = UniformGrid::default_grid();
  const auto [lo, hi] = default_decay_window(g);
  CHECK_THAT(lo, WithinRel(0.1 * 51.2, 1e-12));
  CHECK_THAT(hi, WithinRel(0.5 * 51.2, 1e-12));

  const auto box = decay_exponent(sample(Box{-1.0, 1.0}, g), lo, hi);
  CHECK_THAT(box.exponent, WithinAbs(-1.0, 0.1));
  CHECK_FALSE(box.super_polynomial);
  CHECK(box.rms_fit_error >= 0.0);

  const auto tri = decay_exponent(sample(Triangle{-2.0, 2.0}, g), lo, hi);
  CHECK_THAT(tri.exponent, WithinAbs(-2.0, 0.1));
  CHECK_FALSE(tri.super_polynomial);
}

TEST_CASE("Gaussian decay is flagged super-polynomial") {
  const UniformGrid g = UniformGrid::default_grid();
  const SampledSignal u = sample(Gaussian{0.0, 1.0}, g);
  const auto fit = decay_exponent(u, 0.5, 3.0);
  CHECK(fit.exponent <= -6.0);
  CHECK(fit.super_polynomial);
  const auto [lo, hi] = default_decay_window(g);
  const auto deep = decay_exponent(u, lo, hi);
  CHECK(deep.super_polynomial);
  CHECK(deep.exponent <= -6.0);
}

TEST_CASE("decomposition steepens the decay by about s") {
  const UniformGrid g = UniformGrid::default_grid();
  const auto [lo, hi] = default_decay_window(g);
  for (const AnalyticDescriptor& d : {AnalyticDescriptor(Box{-1, 1}), AnalyticDescriptor(Triangle{-2, 2})}) {
    const SampledSignal f = sample(d, g);
    const double base = decay_exponent(f, lo, hi).exponent;
    for (double s : {0.1, 0.25, 0.4}) {
      const double slope = decay_exponent(decompose(f, VariantSpec(s, VariantKind::Symmetric)).u, lo, hi).exponent;
      CHECK_THAT(base - slope, WithinAbs(s, 0.1));
    }
  }
}

TEST_CASE("decay window validation") {
  const SampledSignal u = sample(Box{-1, 1}, UniformGrid::default_grid());
  CHECK(code_of([&] { decay_exponent(u, 0.0, 10.0); }) == ErrorCode::Window);
  CHECK(code_of([&] { decay_exponent(u, 10.0, 5.0); }) == ErrorCode::Window);
  CHECK(code_of([&] { decay_exponent(u, 10.0, 51.2); }) == ErrorCode::Window);
  CHECK(code_of([&] { decay_exponent(u, 10.0, 10.1); }) == ErrorCode::Window);
}
