#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "expect_error.hpp"
#include "oracles.hpp"
#include "rlfrac/corpus.hpp"
#include "rlfrac/operators.hpp"

using namespace rlfrac;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double rel_l2(const SampledSignal& got, const SampledSignal& want) { return l2_norm(got - want) / l2_norm(want); }

// Worst |got - want| on the pair's validity region, relative to max |want| there.
double oracle_error(const SampledSignal& got, const ClosedFormPair& p) {
  double err = 0.0, scale = 0.0;
  for (std::size_t j = 0; j < got.size(); ++j) {
    const double x = got.grid().x(j);
    if (!p.validity.contains(x)) continue;
    err = std::max(err, std::abs(got[j] - p.output(x)));
    scale = std::max(scale, std::abs(p.output(x)));
  }
  return err / scale;
}

const ClosedFormPair& pair_named(const std::string& name) {
  static const auto pairs = oracle_pairs();
  for (const auto& p : pairs) {
    if (p.name == name) return p;
  }
  throw std::runtime_error("no pair " + name);
}

}  // namespace

TEST_CASE("Grünwald weights follow the recurrence") {
  const auto half = gl_weights(0.5, 3).w;
  REQUIRE(half.size() == 4);
  CHECK(half[0] == 1.0);
  CHECK(half[1] == -0.5);
  CHECK(half[2] == -0.125);
  CHECK(half[3] == -0.0625);

  const auto neg = gl_weights(-0.5, 2).w;
  CHECK(neg[1] == 0.5);
  CHECK(neg[2] == 0.375);

  for (double mu : {-0.9, -0.3, 0.2, 0.7}) CHECK(gl_weights(mu, 1).w[0] == 1.0);

  CHECK(code_of([] { gl_weights(0.0, 3); }) == ErrorCode::DegenerateOrder);
  CHECK(code_of([] { gl_weights(1.0, 3); }) == ErrorCode::OrderOutOfRange);
  CHECK(code_of([] { gl_weights(0.5, 0); }) == ErrorCode::InvalidParameter);
}

TEST_CASE("Grünwald weight signs and partial sums for derivative orders") {
  for (double mu : {0.1, 0.5, 0.9}) {
    const auto w = gl_weights(mu, 10000).w;
    double partial = 1.0;
    for (std::size_t k = 1; k < w.size(); ++k) {
      REQUIRE(w[k] < 0.0);
      const double next = partial + w[k];
      REQUIRE(next < partial);
      REQUIRE(next > 0.0);
      partial = next;
    }
  }
}

TEST_CASE("spectral operators reject orders outside (-1, 1)") {
  const SampledSignal a = sample(Bump{-1, 1}, UniformGrid::default_grid());
  CHECK(code_of([&] { apply_spectral(a, FracOrder(1.0), OperatorSide::Left); }) == ErrorCode::OrderOutOfRange);
  CHECK(code_of([&] { apply_spectral(a, FracOrder(-1.3), OperatorSide::Right); }) == ErrorCode::OrderOutOfRange);
  CHECK(code_of([&] { apply_grunwald(a, FracOrder(0.0), OperatorSide::Left); }) == ErrorCode::OrderOutOfRange);
  CHECK_NOTHROW(apply_spectral(a, FracOrder(0.7), OperatorSide::Left));
}

TEST_CASE("order zero is the identity") {
  const SampledSignal a = sample(GaussianDerivative{0.0, 1.0}, UniformGrid::default_grid());
  CHECK(rel_l2(apply_spectral(a, FracOrder(0.0), OperatorSide::Left), a) <= 1e-12);
}

TEST_CASE("derivative undoes integral on zero-mean input") {
  const SampledSignal a = sample(GaussianDerivative{0.0, 1.0}, UniformGrid::default_grid());
  for (auto side : {OperatorSide::Left, OperatorSide::Right}) {
    const auto back = apply_spectral(apply_spectral(a, FracOrder(-0.3), side), FracOrder(0.3), side);
    CHECK(rel_l2(back, a) <= 1e-10);
  }
}

TEST_CASE("right operators are reflected left operators") {
  const UniformGrid g = UniformGrid::symmetric(40.0 / 4096.0, 4096);
  const SampledSignal a = sample(TrigGaussian{11, 4, 2.0, false}, g);
  for (double mu : {-0.4, -0.25, -0.1, 0.1, 0.25, 0.4}) {
    const auto right = apply_spectral(a, FracOrder(mu), OperatorSide::Right);
    const auto mirrored = reflect(apply_spectral(reflect(a), FracOrder(mu), OperatorSide::Left));
    CHECK(rel_l2(right, mirrored) <= 1e-10);
  }
}

TEST_CASE("integrals compose additively") {
  const SampledSignal a = sample(BalancedBump{}, UniformGrid::default_grid());
  for (auto side : {OperatorSide::Left, OperatorSide::Right}) {
    const auto two = apply_spectral(apply_spectral(a, FracOrder(-0.35), side), FracOrder(-0.5), side);
    CHECK(rel_l2(two, apply_spectral(a, FracOrder(-0.85), side)) <= 1e-10);
  }
}

TEST_CASE("translation commutes with spectral operators") {
  const SampledSignal a = sample(Bump{-1.0, 2.0}, UniformGrid::default_grid());
  for (double mu : {-0.4, 0.25}) {
    for (long k : {5L, -123L}) {
      const auto lhs = translate(apply_spectral(a, FracOrder(mu), OperatorSide::Left), k);
      const auto rhs = apply_spectral(translate(a, k), FracOrder(mu), OperatorSide::Left);
      CHECK(rel_l2(lhs, rhs) <= 1e-11);
    }
  }
}

TEST_CASE("quadrature confirms the closed-form oracle values") {
  const auto exp_fn = [](double x) { return std::exp(x); };
  CHECK_THAT(oracle::rl_left_integral(exp_fn, 0.5, 0.3), WithinRel(oracle::kExpIntegralAt03, 1e-10));
  CHECK_THAT(oracle::rl_left_derivative(exp_fn, 0.5, 0.3), WithinRel(oracle::kExpIntegralAt03, 1e-8));
  CHECK_THAT(pair_named("tapered_sine_derivative").output(0.3), WithinAbs(oracle::kSineDerivativeAt03, 1e-15));
  CHECK_THAT(pair_named("tapered_sine_integral").output(0.3), WithinAbs(oracle::kSineIntegralAt03, 1e-15));
  CHECK_THAT(pair_named("exp_left_integral").output(0.3), WithinAbs(oracle::kExpIntegralAt03, 1e-15));
}

TEST_CASE("spectral path reproduces the Liouville sine formulas") {
  for (const char* name : {"tapered_sine_derivative", "tapered_sine_integral"}) {
    const auto& p = pair_named(name);
    const auto got = apply_spectral(sample(p.input, p.grid), FracOrder(p.order), p.side);
    CHECK(oracle_error(got, p) <= 1e-6);
  }
}

TEST_CASE("Grünwald path converges at first order on the exponential pairs") {
  for (const char* name : {"exp_left_integral", "exp_left_derivative"}) {
    const auto& p = pair_named(name);
    const auto coarse = apply_grunwald(sample(p.input, p.grid), FracOrder(p.order), p.side);
    const auto fine_grid = refine(p.grid);
    const auto fine = apply_grunwald(sample(p.input, fine_grid), FracOrder(p.order), p.side);
    const double e1 = oracle_error(coarse, p);
    const double e2 = oracle_error(fine, p);
    INFO(name << " errors " << e1 << " " << e2);
    CHECK(e1 <= 2e-2);
    CHECK(e1 <= 5.0 * p.grid.dx());
    CHECK(e1 / e2 >= 1.8);
  }
}

TEST_CASE("Grünwald and spectral paths agree on a balanced bump") {
  for (double dx : {0.02, 0.01}) {
    const auto g = UniformGrid::periodic(-20.0, 20.0, static_cast<std::size_t>(std::lround(40.0 / dx)));
    const SampledSignal a = sample(BalancedBump{}, g);
    for (double mu : {-0.7, -0.3, 0.3, 0.7}) {
      for (auto side : {OperatorSide::Left, OperatorSide::Right}) {
        const auto gl = apply_grunwald(a, FracOrder(mu), side);
        const auto sp = apply_spectral(a, FracOrder(mu), side);
        CHECK(rel_l2(gl, sp) <= 5.0 * dx);
      }
    }
  }
}

TEST_CASE("adjoint defect") {
  const UniformGrid g = UniformGrid::default_grid();
  const SampledSignal u = sample(Bump{-1.0, 1.0}, g);
  const SampledSignal psi = sample(Bump{-0.5, 1.5}, g);
  const double scale = l2_norm(u) * l2_norm(psi);

  for (auto side : {OperatorSide::Left, OperatorSide::Right}) {
    const SampledSignal w = apply_spectral(u, FracOrder(0.3), side);
    CHECK(adjoint_defect(u, w, psi, 0.3, side) <= 1e-8 * scale);
    const SampledSignal bad = w + 0.1 * psi;
    CHECK(adjoint_defect(u, bad, psi, 0.3, side) >= 0.09 * inner_product(psi, psi));
  }
  const SampledSignal zero = SampledSignal::zeros(g);
  CHECK(adjoint_defect(zero, zero, psi, 0.45, OperatorSide::Left) == 0.0);
  CHECK(code_of([&] { adjoint_defect(u, u, psi, 0.0, OperatorSide::Left); }) == ErrorCode::OrderOutOfRange);
  const SampledSignal other = sample(Bump{-1.0, 1.0}, UniformGrid::periodic(-10.0, 10.0, 4096));
  CHECK(code_of([&] { adjoint_defect(u, other, psi, 0.3, OperatorSide::Left); }) == ErrorCode::GridMismatch);
}
