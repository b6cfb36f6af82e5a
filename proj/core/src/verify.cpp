#include "rlfrac/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include <json.hpp>

#include "rlfrac/corpus.hpp"
#include "rlfrac/decomposition.hpp"
#include "rlfrac/fourier.hpp"
#include "rlfrac/io.hpp"
#include "rlfrac/operators.hpp"
#include "rlfrac/sobolev.hpp"

namespace rlfrac {

namespace {

constexpr double kPi = std::numbers::pi;
// Large enough to break every check, including the O(dx) ones.
constexpr double kFaultSize = 0.25;

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", values[i]);
    out += buf;
  }
  return out;
}

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double rel_l2(const SampledSignal& got, const SampledSignal& want) {
  const double den = l2_norm(want);
  const double num = l2_norm(got - want);
  return den > 0.0 ? num / den : num;
}

// a minus its projection on (-1)^j, i.e. with the Nyquist mode removed (even n).
SampledSignal without_nyquist(const SampledSignal& a) {
  if (a.size() % 2 != 0) return a;
  double c = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) c += (j % 2 ? -a[j] : a[j]);
  c /= static_cast<double>(a.size());
  std::vector<double> v(a.values().begin(), a.values().end());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] -= (j % 2 ? -c : c);
  return SampledSignal(a.grid(), std::move(v));
}

class SuiteContext {
 public:
  SuiteContext(std::string name, const RunConfig& cfg)
      : cfg_(cfg), rng_(cfg.seed ^ name_hash(name)) {
    result_.name = std::move(name);
    faulty_ = cfg.inject_fault && *cfg.inject_fault == result_.name;
  }

  const RunConfig& cfg() const { return cfg_; }
  const UniformGrid& grid() const { return cfg_.grid; }

  void record(const std::string& check, double value, double default_tol, bool at_least = false) {
    auto it = index_.find(check);
    if (it == index_.end()) {
      Check c;
      c.name = check;
      c.tolerance = tolerance(check, default_tol);
      c.at_least = at_least;
      c.worst = value;
      it = index_.emplace(check, result_.checks.size()).first;
      result_.checks.push_back(c);
      if (std::isnan(value)) nan_.insert(check);
      return;
    }
    Check& c = result_.checks[it->second];
    if (std::isnan(value)) nan_.insert(check);
    c.worst = c.at_least ? std::min(c.worst, value) : std::max(c.worst, value);
  }

  void param(const std::string& name, const std::string& values) { result_.parameters.emplace_back(name, values); }

  void table_header(std::vector<std::string> header) { result_.table_header = std::move(header); }
  void row(std::vector<std::string> labels, std::vector<double> values) {
    result_.table.push_back({std::move(labels), std::move(values)});
  }

  bool faulty() const { return faulty_; }

  // Negative-control hook: adds seeded noise of relative L2 size kFaultSize.
  SampledSignal perturb(const SampledSignal& a) {
    if (!faulty_) return a;
    std::vector<double> noise(a.size());
    for (auto& e : noise) e = unit_uniform(rng_) - 0.5;
    SampledSignal n(a.grid(), std::move(noise));
    const double scale = kFaultSize * std::max(l2_norm(a), 1e-300) / l2_norm(n);
    return a + scale * n;
  }
  double perturb(double x) const { return faulty_ ? x * (1.0 + kFaultSize) + kFaultSize : x; }

  SuiteResult finish() {
    result_.passed = true;
    for (auto& c : result_.checks) {
      c.passed = !nan_.count(c.name) && (c.at_least ? c.worst >= c.tolerance : c.worst <= c.tolerance);
      result_.passed = result_.passed && c.passed;
    }
    return std::move(result_);
  }

 private:
  double tolerance(const std::string& check, double fallback) const {
    const auto& o = cfg_.tolerance_overrides;
    if (auto it = o.find(result_.name + "." + check); it != o.end()) return it->second;
    if (auto it = o.find(result_.name); it != o.end()) return it->second;
    return fallback;
  }

  const RunConfig& cfg_;
  std::mt19937_64 rng_;
  bool faulty_ = false;
  SuiteResult result_;
  std::map<std::string, std::size_t> index_;
  std::set<std::string> nan_;
};

// ---- corpus selections ----

std::vector<NamedDescriptor> energy_psis(std::uint64_t seed) {
  return {{"bump", Bump{-1.0, 1.0}},
          {"gaussian_derivative", GaussianDerivative{0.0, 1.0}},
          {"trig_gaussian", TrigGaussian{seed, 4, 2.0, false}}};
}

std::vector<NamedDescriptor> zero_mean_corpus(std::uint64_t seed) {
  return {{"gaussian_derivative", GaussianDerivative{0.0, 1.0}},
          {"gaussian_derivative_shifted", GaussianDerivative{1.5, 0.7}},
          {"balanced_bump", BalancedBump{-1.5, 1.5, 2.5}},
          {"trig_gaussian_odd", TrigGaussian{seed, 4, 2.0, true}}};
}

std::vector<NamedDescriptor> smooth_corpus(std::uint64_t seed) {
  return {{"gaussian", Gaussian{0.0, 1.0}},
          {"gaussian_derivative", GaussianDerivative{0.0, 1.0}},
          {"bump", Bump{-1.0, 1.0}},
          {"balanced_bump", BalancedBump{-1.5, 1.5, 2.5}},
          {"trig_gaussian", TrigGaussian{seed, 4, 2.0, false}}};
}

const std::vector<double> kSweepS = {-0.4, -0.25, -0.1, 0.1, 0.25, 0.4};
const std::vector<std::pair<double, double>> kSweepPQ = {{1.0, 1.0}, {2.0, 0.5}};

std::vector<VariantSpec> variant_sweep() {
  std::vector<VariantSpec> out;
  for (double s : kSweepS) {
    for (auto kind : {VariantKind::Symmetric, VariantKind::OneSided}) {
      for (auto [p, q] : kSweepPQ) out.emplace_back(s, kind, p, q);
    }
  }
  return out;
}

std::vector<double> lemma_s(const RunConfig& cfg) {
  if (cfg.s) return {*cfg.s};
  return {0.1, 0.25, 0.4};
}

// ---- suites ----

SuiteResult suite_adjoint(const RunConfig& cfg) {
  SuiteContext ctx("adjoint", cfg);
  const std::vector<double> mus = {0.1, 0.3, 0.45};
  const std::vector<AnalyticDescriptor> tests = {Bump{-2.0, 0.0}, Bump{-0.5, 1.5}, Bump{0.0, 3.0}, Bump{1.0, 2.0}};
  ctx.param("mu", join(mus));
  ctx.param("pairs", "5 corpus u x 4 shifted bumps psi");
  ctx.param("side", "left, right");
  for (const auto& [name, d] : smooth_corpus(cfg.seed)) {
    const SampledSignal u = sample(d, ctx.grid());
    for (const auto& t : tests) {
      const SampledSignal psi = sample(t, ctx.grid());
      const double scale = l2_norm(u) * l2_norm(psi);
      for (double mu : mus) {
        for (auto side : {OperatorSide::Left, OperatorSide::Right}) {
          const SampledSignal w = ctx.perturb(apply_spectral(u, FracOrder(mu), side));
          ctx.record("weak_derivative", adjoint_defect(u, w, psi, mu, side) / scale, 1e-8);
        }
      }
    }
  }
  return ctx.finish();
}

SuiteResult suite_characterization(const RunConfig& cfg) {
  SuiteContext ctx("characterization", cfg);
  ctx.param("s", join(kSweepS));
  ctx.param("kind", "symmetric, onesided");
  ctx.param("p,q", "(1, 1), (2, 0.5)");
  for (const auto& [name, d] : smooth_corpus(cfg.seed)) {
    const SampledSignal u = sample(d, ctx.grid());
    const Spectrum U = dft_forward(u);
    for (const auto& v : variant_sweep()) {
      const MultiplierSymbol M = decomposition_symbol(v, ctx.grid());
      const Spectrum got = dft_forward(ctx.perturb(reconstruct(u, v)));
      const FrequencyBins bins = U.bins();
      double scale = 0.0;
      double worst = 0.0;
      for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
        if (k == 0 || bins.is_nyquist(k)) continue;
        const cplx want = M.at(k) * U.at(k);
        scale = std::max(scale, std::abs(want));
        worst = std::max(worst, std::abs(got.at(k) - want));
      }
      ctx.record("binwise", worst / scale, 1e-11);
    }
  }
  return ctx.finish();
}

SuiteResult suite_cross(const RunConfig& cfg) {
  SuiteContext ctx("cross", cfg);
  const auto ss = lemma_s(cfg);
  ctx.param("s", join(ss));
  ctx.param("psi", "bump, gaussian_derivative, trig_gaussian");
  for (const auto& [name, d] : energy_psis(cfg.seed)) {
    const SampledSignal psi = sample(d, ctx.grid());
    for (double s : ss) {
      const double energy = visible_energy(psi, s);
      const double sym = ctx.perturb(cross_inner(psi, s, VariantKind::Symmetric)) / energy;
      const double one = ctx.perturb(cross_inner(psi, s, VariantKind::OneSided)) / energy;
      ctx.record("symmetric", std::abs(sym - 1.0), 1e-8);
      ctx.record("onesided", std::abs(one - std::cos(s * kPi)), 1e-8);
    }
  }
  return ctx.finish();
}

SuiteResult suite_energy(const RunConfig& cfg) {
  SuiteContext ctx("energy", cfg);
  const auto ss = lemma_s(cfg);
  ctx.param("s", join(ss));
  ctx.param("psi", "bump, gaussian_derivative, trig_gaussian");
  ctx.table_header({"psi", "kind", "s", "lhs", "rhs", "defect"});
  for (const auto& [name, d] : energy_psis(cfg.seed)) {
    const SampledSignal psi = sample(d, ctx.grid());
    for (auto kind : {VariantKind::Symmetric, VariantKind::OneSided}) {
      for (double s : ss) {
        EnergyIdentity e = energy_identity_defect(psi, s, kind);
        e.lhs = ctx.perturb(e.lhs);
        e.defect = std::abs(e.lhs - e.rhs) / e.lhs;
        ctx.row({name, std::string(to_string(kind))}, {s, e.lhs, e.rhs, e.defect});
        ctx.record(std::string(to_string(kind)), e.defect, 1e-8);
      }
    }
  }
  return ctx.finish();
}

// Relative L2 defect of Pi_2(D u) against 2^{-mu} D(Pi_2 u).
double dilation_defect(const SampledSignal& u, double mu,
                       const std::function<SampledSignal(const SampledSignal&)>& op) {
  const SampledSignal lhs = dilate(op(u), 2);
  const SampledSignal rhs = std::pow(2.0, -mu) * op(dilate(u, 2));
  return rel_l2(lhs, rhs);
}

SuiteResult suite_equivariance(const RunConfig& cfg) {
  SuiteContext ctx("equivariance", cfg);
  const std::vector<double> mus = {-0.4, -0.25, -0.1, 0.1, 0.25, 0.4};
  const std::vector<long> shifts = {1, 37, -250};
  ctx.param("mu", join(mus));
  ctx.param("shift_bins", "1, 37, -250");
  ctx.param("kappa", "2");

  for (const auto& [name, d] : smooth_corpus(cfg.seed)) {
    const SampledSignal a = sample(d, ctx.grid());
    for (double mu : mus) {
      for (auto side : {OperatorSide::Left, OperatorSide::Right}) {
        const SampledSignal Da = apply_spectral(a, FracOrder(mu), side);
        for (long k : shifts) {
          const SampledSignal got = ctx.perturb(apply_spectral(translate(a, k), FracOrder(mu), side));
          ctx.record("translation_operator", rel_l2(got, translate(Da, k)), 1e-11);
        }
      }
    }
  }
  for (const auto& [name, d] : zero_mean_corpus(cfg.seed)) {
    const SampledSignal f = sample(d, ctx.grid());
    for (const auto& v : {VariantSpec(0.25, VariantKind::Symmetric), VariantSpec(-0.4, VariantKind::OneSided, 2.0, 0.5)}) {
      const SampledSignal u = decompose(f, v).u;
      for (long k : shifts) {
        const SampledSignal got = ctx.perturb(decompose(translate(f, k), v).u);
        ctx.record("translation_decompose", rel_l2(got, translate(u, k)), 1e-11);
      }
    }
  }

  // Dilation: the spectral realization maps bins onto bins and is exact up to
  // rounding; the GL realization is first order and must improve with dx.
  const UniformGrid& coarse = ctx.grid();
  const UniformGrid fine(coarse.x_min(), 0.5 * coarse.dx(), 2 * coarse.size());
  for (const AnalyticDescriptor& d : {AnalyticDescriptor(Gaussian{0.0, 1.0}), AnalyticDescriptor(Gaussian{0.5, 1.5})}) {
    const SampledSignal u = sample(d, coarse);
    const SampledSignal u_fine = sample(d, fine);
    for (double mu : mus) {
      const auto spectral = [&](const SampledSignal& x) {
        return ctx.perturb(apply_spectral(x, FracOrder(mu), OperatorSide::Left));
      };
      const double ds = dilation_defect(u, mu, spectral);
      ctx.record("dilation_spectral_over_dx", ds / coarse.dx(), 10.0);
      ctx.record("dilation_spectral", ds, 1e-10);
      const auto gl = [&](const SampledSignal& x) {
        return ctx.perturb(apply_grunwald(x, FracOrder(mu), OperatorSide::Left));
      };
      const double dg = dilation_defect(u, mu, gl);
      const double dg_fine = dilation_defect(u_fine, mu, gl);
      ctx.record("dilation_gl_over_dx", dg / coarse.dx(), 10.0);
      ctx.record("dilation_gl_refinement_ratio", dg / dg_fine, 1.5, true);
    }
  }
  return ctx.finish();
}

SuiteResult suite_mutual(const RunConfig& cfg) {
  SuiteContext ctx("mutual", cfg);
  const std::vector<double> mus = {-0.9, -0.7, -0.5, -0.3, -0.1, 0.1, 0.3, 0.5, 0.7, 0.9};
  const std::vector<double> dxs = {0.02, 0.01, 0.005};
  ctx.param("mu", join(mus));
  ctx.param("dx", join(dxs));
  ctx.param("window", "[-20, 20)");
  ctx.param("signal", "BalancedBump(a=-1.5, b=1.5, h=2.5)");

  struct Job {
    double dx;
    double mu;
    OperatorSide side;
  };
  std::vector<Job> jobs;
  for (double dx : dxs)
    for (double mu : mus)
      for (auto side : {OperatorSide::Left, OperatorSide::Right}) jobs.push_back({dx, mu, side});

  struct Outcome {
    SampledSignal gl;
    SampledSignal spectral;
  };
  std::vector<std::future<Outcome>> futures;
  for (const auto& job : jobs) {
    futures.push_back(std::async(std::launch::async, [job] {
      const auto n = static_cast<std::size_t>(std::lround(40.0 / job.dx));
      const UniformGrid grid = UniformGrid::periodic(-20.0, 20.0, n);
      const SampledSignal a = sample(BalancedBump{-1.5, 1.5, 2.5}, grid);
      return Outcome{apply_grunwald(a, FracOrder(job.mu), job.side), apply_spectral(a, FracOrder(job.mu), job.side)};
    }));
  }
  for (auto& f : futures) {
    const Outcome o = f.get();
    ctx.record("discrepancy_over_dx", rel_l2(ctx.perturb(o.gl), o.spectral) / o.gl.grid().dx(), 5.0);
  }
  return ctx.finish();
}

SuiteResult suite_norms(const RunConfig& cfg) {
  SuiteContext ctx("norms", cfg);
  const std::vector<double> ss = {0.1, 0.25, 0.4, 0.75};
  ctx.param("s", join(ss));
  for (const auto& [name, d] : smooth_corpus(cfg.seed)) {
    const SampledSignal u = sample(d, ctx.grid());
    for (double s : ss) {
      const double semi = sobolev_seminorm(u, s);
      const double left = l2_norm(ctx.perturb(apply_spectral(u, FracOrder(s), OperatorSide::Left)));
      const double right = l2_norm(ctx.perturb(apply_spectral(u, FracOrder(s), OperatorSide::Right)));
      ctx.record("left_vs_spectral", std::abs(left - semi) / semi, 1e-10);
      ctx.record("right_vs_spectral", std::abs(right - semi) / semi, 1e-10);
      ctx.record("translation_invariance", std::abs(sobolev_seminorm(translate(u, 123), s) - semi) / semi, 1e-12);
      ctx.record("homogeneity", std::abs(sobolev_seminorm(-2.5 * u, s) - 2.5 * semi) / (2.5 * semi), 1e-12);
    }
    const double l2 = l2_norm(u);
    ctx.record("order_zero_norm", std::abs(sobolev_norm(u, 0.0) - std::sqrt(2.0) * l2) / l2, 1e-10);
  }
  return ctx.finish();
}

SuiteResult suite_operators(const RunConfig& cfg) {
  SuiteContext ctx("operators", cfg);
  const std::vector<double> mus = {-0.4, -0.25, -0.1, 0.1, 0.25, 0.4};
  ctx.param("mu", join(mus));
  ctx.param("semigroup", "(0.1, 0.3), (0.25, 0.4), (0.4, 0.45)");
  ctx.param("gl_weights", "mu in 0.1, 0.5, 0.9 up to m = 10000");

  const UniformGrid sym = UniformGrid::symmetric(ctx.grid().dx(), ctx.grid().size());
  for (const auto& [name, d] : smooth_corpus(cfg.seed)) {
    const SampledSignal a = sample(d, ctx.grid());
    ctx.record("identity_order_zero",
               rel_l2(ctx.perturb(apply_spectral(a, FracOrder(0.0), OperatorSide::Left)), without_nyquist(a)), 1e-12);
    const SampledSignal b = sample(d, sym);
    for (double mu : mus) {
      const SampledSignal right = ctx.perturb(apply_spectral(b, FracOrder(mu), OperatorSide::Right));
      const SampledSignal mirrored = reflect(apply_spectral(reflect(b), FracOrder(mu), OperatorSide::Left));
      ctx.record("reflection_conjugacy", rel_l2(right, mirrored), 1e-10);
    }
  }
  for (const auto& [name, d] : zero_mean_corpus(cfg.seed)) {
    const SampledSignal a = sample(d, ctx.grid());
    for (auto [s1, s2] : {std::pair{0.1, 0.3}, std::pair{0.25, 0.4}, std::pair{0.4, 0.45}}) {
      for (auto side : {OperatorSide::Left, OperatorSide::Right}) {
        const SampledSignal two_step =
            ctx.perturb(apply_spectral(apply_spectral(a, FracOrder(-s1), side), FracOrder(-s2), side));
        ctx.record("semigroup", rel_l2(two_step, apply_spectral(a, FracOrder(-(s1 + s2)), side)), 1e-10);
      }
    }
    const SampledSignal back = ctx.perturb(
        apply_spectral(apply_spectral(a, FracOrder(-0.3), OperatorSide::Left), FracOrder(0.3), OperatorSide::Left));
    ctx.record("inverse_pair", rel_l2(back, a), 1e-10);
  }
  for (double mu : {0.1, 0.5, 0.9}) {
    const GLWeights w = gl_weights(mu, 10000);
    double violations = 0.0;
    double partial = 1.0;
    for (std::size_t k = 1; k < w.w.size(); ++k) {
      if (!(w.w[k] < 0.0)) violations += 1.0;
      const double next = partial + w.w[k];
      if (!(next < partial) || !(next > 0.0)) violations += 1.0;
      partial = next;
    }
    ctx.record("gl_weight_sign_pattern", ctx.perturb(violations), 0.0);
  }
  return ctx.finish();
}

// max over the validity region of |got - want|, relative to max |want| there.
double oracle_error(const SampledSignal& got, const ClosedFormPair& pair) {
  double err = 0.0;
  double scale = 0.0;
  for (std::size_t j = 0; j < got.size(); ++j) {
    const double x = got.grid().x(j);
    if (!pair.validity.contains(x)) continue;
    const double want = pair.output(x);
    err = std::max(err, std::abs(got[j] - want));
    scale = std::max(scale, std::abs(want));
  }
  return scale > 0.0 ? err / scale : err;
}

SuiteResult suite_oracles(const RunConfig& cfg) {
  SuiteContext ctx("oracles", cfg);
  const auto pairs = oracle_pairs();
  std::string names;
  for (const auto& p : pairs) names += (names.empty() ? "" : ", ") + p.name;
  ctx.param("pairs", names);
  for (const auto& p : pairs) {
    const SampledSignal a = sample(p.input, p.grid);
    if (p.spectral_applicable) {
      const SampledSignal got = ctx.perturb(apply_spectral(a, FracOrder(p.order), p.side));
      ctx.record(p.name + ".spectral", oracle_error(got, p), 1e-6);
    }
    if (p.gl_applicable) {
      const double dx = p.grid.dx();
      const SampledSignal got = ctx.perturb(apply_grunwald(a, FracOrder(p.order), p.side));
      const double err = oracle_error(got, p);
      const SampledSignal a_fine = sample(p.input, refine(p.grid));
      const double err_fine = oracle_error(ctx.perturb(apply_grunwald(a_fine, FracOrder(p.order), p.side)), p);
      ctx.record(p.name + ".gl_over_dx", err / dx, 5.0);
      ctx.record(p.name + ".gl_refinement_ratio", err / err_fine, 1.8, true);
    }
  }
  return ctx.finish();
}

SuiteResult suite_plancherel(const RunConfig& cfg) {
  SuiteContext ctx("plancherel", cfg);
  constexpr int kSignals = 50;
  ctx.param("signals", "50 seeded TrigGaussian");
  ctx.param("shift_bins", "random in [-500, 500]");
  std::mt19937_64 rng(cfg.seed);
  const UniformGrid& grid = ctx.grid();
  std::vector<SampledSignal> signals;
  for (int i = 0; i < kSignals; ++i) {
    TrigGaussian d;
    d.seed = rng();
    d.terms = 1 + static_cast<int>(rng() % 6);
    d.width = 0.5 + 3.5 * unit_uniform(rng);
    signals.push_back(sample(d, grid));
  }
  for (int i = 0; i < kSignals; ++i) {
    const SampledSignal& a = signals[i];
    const SampledSignal& b = signals[(i + 1) % kSignals];
    const Spectrum A = dft_forward(ctx.perturb(a));
    const Spectrum B = dft_forward(b);
    const double na = l2_norm(a);
    ctx.record("plancherel", std::abs(na - spectral_l2(A)) / na, 1e-10);
    ctx.record("parseval", std::abs(inner_product(a, b) - spectral_inner(A, B).real()) / (na * l2_norm(b)), 1e-10);
    ctx.record("round_trip", rel_l2(dft_inverse(A), a), 1e-12);

    const long k = static_cast<long>(rng() % 1001) - 500;
    const Spectrum T = dft_forward(translate(a, k));
    const auto ramp = shift_phase_ramp(grid, k);
    double err = 0.0, scale = 0.0;
    for (std::size_t m = 0; m < ramp.size(); ++m) {
      err = std::max(err, std::abs(T.coeffs()[m] - ramp[m] * A.coeffs()[m]));
      scale = std::max(scale, std::abs(A.coeffs()[m]));
    }
    ctx.record("shift_theorem", err / scale, 1e-12);
  }
  return ctx.finish();
}

SuiteResult suite_regularity(const RunConfig& cfg) {
  SuiteContext ctx("regularity", cfg);
  const std::vector<double> ss = {0.1, 0.25, 0.4};
  const auto [lo, hi] = default_decay_window(ctx.grid());
  ctx.param("s", join(ss));
  ctx.param("window", join({lo, hi}));
  ctx.param("profiles", "Box(-1, 1) slope -1, Triangle(-2, 2) slope -2");
  const std::vector<std::pair<AnalyticDescriptor, double>> profiles = {{Box{-1.0, 1.0}, -1.0},
                                                                       {Triangle{-2.0, 2.0}, -2.0}};
  for (const auto& [d, slope] : profiles) {
    const SampledSignal f = sample(d, ctx.grid());
    const double base = decay_exponent(f, lo, hi).exponent;
    ctx.record("profile_slope", std::abs(base - slope), 0.1);
    for (double s : ss) {
      const SampledSignal u = ctx.perturb(decompose(f, VariantSpec(s, VariantKind::Symmetric)).u);
      const double shift = base - decay_exponent(u, lo, hi).exponent;
      ctx.record("slope_shift", std::abs(shift - s), 0.1);
    }
  }
  const RegularityFit g = decay_exponent(ctx.perturb(sample(Gaussian{0.0, 1.0}, ctx.grid())), lo, hi);
  ctx.record("gaussian_super_polynomial", g.super_polynomial ? 1.0 : 0.0, 1.0, true);
  return ctx.finish();
}

SuiteResult suite_roundtrip(const RunConfig& cfg) {
  SuiteContext ctx("roundtrip", cfg);
  ctx.param("s", join(kSweepS));
  ctx.param("kind", "symmetric, onesided");
  ctx.param("p,q", "(1, 1), (2, 0.5)");
  ctx.param("stability_signals", "50 seeded odd TrigGaussian");

  for (const auto& [name, d] : zero_mean_corpus(cfg.seed)) {
    const SampledSignal f = sample(d, ctx.grid());
    const double nf = l2_norm(f);
    for (const auto& v : variant_sweep()) {
      DecompositionResult r = decompose(f, v);
      const SampledSignal u = ctx.perturb(r.u);
      const Spectrum F = dft_forward(f);
      const Spectrum G = dft_forward(reconstruct(u, v));
      double num = 0.0, den = 0.0;
      const FrequencyBins bins = F.bins();
      for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
        if (k == 0) continue;
        num += std::norm(G.at(k) - F.at(k));
        den += std::norm(F.at(k));
      }
      ctx.record("residual_l2", std::sqrt(num / den), 1e-10);
      ctx.record("norm_bound_ratio", l2_norm(u) * v.symbol_lower_bound() / nf, 1.0);
    }
  }

  // Linearity and sign symmetry on a pair of zero-mean signals.
  const SampledSignal f = sample(GaussianDerivative{0.0, 1.0}, ctx.grid());
  const SampledSignal g = sample(BalancedBump{-1.5, 1.5, 2.5}, ctx.grid());
  const UniformGrid sym = UniformGrid::symmetric(ctx.grid().dx(), ctx.grid().size());
  const SampledSignal u_sym = sample(TrigGaussian{cfg.seed, 4, 2.0, false}, sym);
  for (const auto& v : variant_sweep()) {
    const SampledSignal combo = decompose(2.0 * f - 0.75 * g, v).u;
    const SampledSignal parts = 2.0 * decompose(f, v).u - 0.75 * decompose(g, v).u;
    ctx.record("linearity", rel_l2(ctx.perturb(combo), parts), 1e-11);
    if (v.kind() == VariantKind::Symmetric) {
      // -s with p, q swapped equals the reflected problem at +s.
      const SampledSignal flipped = reconstruct(u_sym, VariantSpec(-v.s(), v.kind(), v.q(), v.p()));
      const SampledSignal mirrored = reflect(reconstruct(reflect(u_sym), v));
      ctx.record("sign_symmetry", rel_l2(ctx.perturb(flipped), mirrored), 1e-11);
    }
  }

  std::mt19937_64 rng(cfg.seed ^ 0x9e3779b97f4a7c15ULL);
  for (int i = 0; i < 50; ++i) {
    const SampledSignal h = sample(TrigGaussian{rng(), 1 + static_cast<int>(rng() % 6), 0.5 + 3.5 * unit_uniform(rng), true},
                                   ctx.grid());
    for (auto [p, q] : kSweepPQ) {
      const VariantSpec v(0.25, VariantKind::Symmetric, p, q);
      const DecompositionResult r = decompose(h, v);
      ctx.record("stability_ratio", l2_norm(ctx.perturb(r.u)) * v.symbol_lower_bound() / l2_norm(h), 1.0);

      // A perturbed solution must leave a residual at least bound * |delta|.
      const SampledSignal delta =
          1e-3 * l2_norm(r.u) * sample(GaussianDerivative{0.3 * static_cast<double>(i % 5), 0.8}, ctx.grid());
      const SampledSignal residual = reconstruct(r.u + delta, v) - h;
      ctx.record("uniqueness_ratio", ctx.perturb(l2_norm(residual) / (v.symbol_lower_bound() * l2_norm(delta))),
                 1.0 - 1e-6, true);
    }
  }
  return ctx.finish();
}

SuiteResult suite_symbols(const RunConfig& cfg) {
  SuiteContext ctx("symbols", cfg);
  const std::vector<double> ss = {-0.4, -0.3, -0.25, -0.1, 0.1, 0.25, 0.4};
  const std::vector<std::pair<double, double>> pqs = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {2, 0.5}};
  ctx.param("s", join(ss));
  ctx.param("p,q", "(1, 1), (1, 2), (2, 1), (2, 2), (2, 0.5)");
  const FrequencyBins bins(ctx.grid());
  for (double s : ss) {
    for (auto kind : {VariantKind::Symmetric, VariantKind::OneSided}) {
      for (auto [p, q] : pqs) {
        const VariantSpec v(s, kind, p, q);
        const MultiplierSymbol M = decomposition_symbol(v, ctx.grid());
        double lo = std::numeric_limits<double>::infinity();
        for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
          if (k != 0) lo = std::min(lo, std::abs(M.at(k)));
        }
        if (ctx.faulty()) lo *= 1.0 - kFaultSize;
        const double bound = v.symbol_lower_bound();
        const double shortfall =
            kind == VariantKind::Symmetric ? 1.0 - lo / bound : 1.0 - (lo * lo) / (bound * bound);
        ctx.record(std::string(to_string(kind)) + "_lower_bound_shortfall", std::max(0.0, shortfall), 1e-12);
      }
    }
  }
  for (auto side : {OperatorSide::Left, OperatorSide::Right}) {
    for (auto [s1, s2] : {std::pair{0.25, 0.4}, std::pair{-0.3, 0.5}, std::pair{-0.45, -0.4}}) {
      const auto a = power_symbol(s1, side, ctx.grid());
      const auto b = power_symbol(s2, side, ctx.grid());
      const auto c = power_symbol(s1 + s2, side, ctx.grid());
      double worst = 0.0;
      double reflect_worst = 0.0;
      for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
        if (k == 0) continue;
        worst = std::max(worst, std::abs(a.at(k) * b.at(k) - c.at(k)) / std::abs(c.at(k)));
        if (-k >= bins.k_min() && !bins.is_nyquist(k)) {
          reflect_worst = std::max(reflect_worst, std::abs(a.at(-k) - std::conj(a.at(k))));
        }
      }
      ctx.record("group_law", worst, 1e-13);
      ctx.record("conjugate_reflection", reflect_worst, 0.0);
    }
  }
  return ctx.finish();
}

using SuiteFn = SuiteResult (*)(const RunConfig&);

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> r = {
      {"adjoint", suite_adjoint},         {"characterization", suite_characterization},
      {"cross", suite_cross},             {"energy", suite_energy},
      {"equivariance", suite_equivariance}, {"mutual", suite_mutual},
      {"norms", suite_norms},             {"operators", suite_operators},
      {"oracles", suite_oracles},         {"plancherel", suite_plancherel},
      {"regularity", suite_regularity},   {"roundtrip", suite_roundtrip},
      {"symbols", suite_symbols},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

void validate(const RunConfig& config) {
  const auto& r = registry();
  for (const auto& s : config.suites) {
    if (!r.count(s)) throw Error(ErrorCode::InvalidParameter, "unknown suite '" + s + "'");
  }
  for (const auto& [key, value] : config.tolerance_overrides) {
    const std::string suite = key.substr(0, key.find('.'));
    if (!r.count(suite)) throw Error(ErrorCode::InvalidParameter, "tolerance override for unknown suite '" + key + "'");
    if (!std::isfinite(value)) throw Error(ErrorCode::InvalidParameter, "tolerance for '" + key + "' must be finite");
  }
  if (config.inject_fault && !r.count(*config.inject_fault)) {
    throw Error(ErrorCode::InvalidParameter, "unknown suite '" + *config.inject_fault + "'");
  }
  if (config.s && !(*config.s >= 0.0 && *config.s < 0.5)) {
    throw Error(ErrorCode::OrderOutOfRange, "verification s must lie in [0, 1/2)");
  }
}

SuiteResult run_suite(const std::string& name, const RunConfig& config) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw Error(ErrorCode::InvalidParameter, "unknown suite '" + name + "'");
  return it->second(config);
}

VerificationReport verify_all(const RunConfig& config) {
  validate(config);
  std::vector<std::string> selected = config.suites.empty() ? suite_names() : config.suites;
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());

  std::vector<std::future<SuiteResult>> futures;
  for (const auto& name : selected) {
    futures.push_back(std::async(std::launch::async, [&config, name] { return run_suite(name, config); }));
  }
  VerificationReport report;
  report.config = config;
  for (auto& f : futures) {
    report.suites.push_back(f.get());
    report.passed = report.passed && report.suites.back().passed;
  }
  return report;
}

std::string to_json(const VerificationReport& report) {
  using json = nlohmann::ordered_json;
  const auto number = [](double v) -> json {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return "nan";
    return v > 0 ? "inf" : "-inf";
  };
  json j;
  j["passed"] = report.passed;
  j["seed"] = report.config.seed;
  const UniformGrid& g = report.config.grid;
  j["grid"] = {{"x_min", g.x_min()}, {"x_max", g.x_min() + g.length()}, {"n", g.size()}};
  j["s"] = report.config.s ? json(*report.config.s) : json(nullptr);
  json overrides = json::object();
  for (const auto& [k, v] : report.config.tolerance_overrides) overrides[k] = v;
  j["tolerance_overrides"] = overrides;
  json suites = json::array();
  for (const auto& s : report.suites) {
    json js;
    js["name"] = s.name;
    js["passed"] = s.passed;
    json params = json::object();
    for (const auto& [k, v] : s.parameters) params[k] = v;
    js["parameters"] = params;
    json checks = json::array();
    for (const auto& c : s.checks) {
      checks.push_back({{"name", c.name},
                        {"worst", number(c.worst)},
                        {"tolerance", number(c.tolerance)},
                        {"comparison", c.at_least ? ">=" : "<="},
                        {"passed", c.passed}});
    }
    js["checks"] = checks;
    if (!s.table_header.empty()) {
      json rows = json::array();
      for (const auto& r : s.table) {
        json row = json::array();
        for (const auto& l : r.labels) row.push_back(l);
        for (double v : r.values) row.push_back(number(v));
        rows.push_back(row);
      }
      js["table"] = {{"header", s.table_header}, {"rows", rows}};
    }
    suites.push_back(js);
  }
  j["suites"] = suites;
  return j.dump(2);
}

}  // namespace rlfrac
