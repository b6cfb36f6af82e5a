#include <catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "rlfrac/corpus.hpp"
#include "rlfrac/fourier.hpp"

using namespace rlfrac;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("pointwise values") {
  CHECK(evaluate(Gaussian{0.0, 1.0}, 0.0) == 1.0);
  CHECK(evaluate(Bump{-1.0, 1.0}, 1.0) == 0.0);
  CHECK(evaluate(Bump{-1.0, 1.0}, -1.0) == 0.0);
  CHECK(evaluate(Bump{-1.0, 1.0}, 1.5) == 0.0);
  CHECK_THAT(evaluate(Bump{-1.0, 1.0}, 0.0), WithinRel(std::exp(-1.0), 1e-15));
  CHECK(evaluate(Box{-1.0, 1.0}, 1.0) == 0.5);
  CHECK(evaluate(Box{-1.0, 1.0}, 0.3) == 1.0);
  CHECK(evaluate(Triangle{-2.0, 2.0}, 0.0) == 1.0);
  CHECK(evaluate(Triangle{-2.0, 2.0}, 1.0) == 0.5);
  CHECK(evaluate(ExpLeft{1.0, 0.0}, 0.0) == 1.0);
  CHECK(evaluate(ExpLeft{1.0, 0.0}, 1e-9) == 0.0);
  CHECK_THAT(evaluate(TaperedSine{1.0, 6.0, 87.0}, 0.7), WithinAbs(std::sin(0.7), 1e-15));
}

TEST_CASE("bump sampling has compact support") {
  const SampledSignal b = sample(Bump{-1.0, 1.0}, UniformGrid::default_grid());
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (std::abs(b.grid().x(j)) >= 1.0) REQUIRE(b[j] == 0.0);
  }
}

TEST_CASE("zero-mean corpus members") {
  const UniformGrid g = UniformGrid::symmetric(0.01, 4001);
  CHECK(std::abs(integral(sample(GaussianDerivative{0.0, 1.0}, g))) <= 1e-14);
  CHECK(std::abs(integral(sample(TrigGaussian{9, 4, 2.0, true}, g))) <= 1e-14);
  const SampledSignal bb = sample(BalancedBump{}, UniformGrid::default_grid());
  CHECK(std::abs(integral(bb)) <= 1e-14);
}

TEST_CASE("Gaussian derivative is the exact derivative") {
  const GaussianDerivative d{0.3, 1.7};
  const Gaussian g{0.3, 1.7};
  for (double x : {-1.0, 0.0, 0.25, 2.0}) {
    const double h = 1e-5;
    const double fd = (evaluate(g, x + h) - evaluate(g, x - h)) / (2 * h);
    CHECK_THAT(evaluate(d, x), WithinAbs(fd, 1e-9));
  }
}

TEST_CASE("trigonometric entries are reproducible from the seed") {
  const UniformGrid g = UniformGrid::default_grid();
  const auto a = sample(TrigGaussian{17, 4, 2.0, false}, g);
  const auto b = sample(TrigGaussian{17, 4, 2.0, false}, g);
  const auto c = sample(TrigGaussian{18, 4, 2.0, false}, g);
  CHECK(l2_norm(a - b) == 0.0);
  CHECK(l2_norm(a - c) > 0.0);
  for (std::size_t j = 0; j < g.size(); j += 511) CHECK(a[j] == evaluate(TrigGaussian{17, 4, 2.0, false}, g.x(j)));
}

TEST_CASE("descriptor validation") {
  CHECK(code_of([] { validate(Gaussian{0.0, 0.0}); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { validate(Bump{1.0, 1.0}); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { validate(TaperedSine{-1.0, 1.0, 1.0}); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { validate(ExpLeft{0.0, 0.0}); }) == ErrorCode::InvalidParameter);
  CHECK(code_of([] { sample(Box{2.0, 1.0}, UniformGrid::default_grid()); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("named corpus covers the required classes") {
  const auto entries = named_corpus(3);
  std::set<std::string> kinds;
  std::set<std::string> names;
  for (const auto& e : entries) {
    kinds.insert(kind_name(e.descriptor));
    names.insert(e.name);
  }
  for (const char* k : {"Bump", "Gaussian", "GaussianDerivative", "Box", "Triangle"}) CHECK(kinds.count(k) == 1);
  CHECK(names.size() == entries.size());
  CHECK(describe(find_named("bump")) == "Bump(a=-1, b=1)");
  CHECK(code_of([] { find_named("nope"); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("oracle pairs are well formed") {
  const auto pairs = oracle_pairs();
  REQUIRE(pairs.size() >= 5);
  std::set<std::string> names;
  for (const auto& p : pairs) {
    names.insert(p.name);
    CHECK(p.validity.lo < p.validity.hi);
    CHECK((p.spectral_applicable || p.gl_applicable));
    const SampledSignal a = sample(p.input, p.grid);
    CHECK(a.size() == p.grid.size());
  }
  CHECK(names.size() == pairs.size());

  // The order-0 pair maps its input to itself.
  for (const auto& p : pairs) {
    if (p.order != 0.0) continue;
    for (double x : {-1.0, 0.0, 0.5}) CHECK(p.output(x) == evaluate(p.input, x));
  }
}

TEST_CASE("exponential pair agrees with direct quadrature") {
  for (const auto& p : oracle_pairs()) {
    if (p.name.rfind("exp_left", 0) != 0) continue;
    const ExpLeft e = std::get<ExpLeft>(p.input);
    const auto f = [e](double x) { return evaluate(e, x); };
    for (double x : {-8.0, -3.0, -0.5}) {
      const double q = p.order < 0 ? oracle::rl_left_integral(f, -p.order, x)
                                   : oracle::rl_left_derivative(f, p.order, x);
      CHECK_THAT(q, WithinRel(p.output(x), p.order < 0 ? 1e-10 : 1e-8));
    }
  }
}

TEST_CASE("refined grid keeps both ends") {
  const UniformGrid g(-20.0, 20.0 / 2048.0, 2049);
  const UniformGrid r = refine(g);
  CHECK(r.size() == 4097);
  CHECK(r.x_min() == g.x_min());
  CHECK_THAT(r.x_max(), WithinAbs(0.0, 1e-12));
}
