#include "rlfrac/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

namespace rlfrac {

std::string_view to_string(VariantKind kind) noexcept {
  return kind == VariantKind::Symmetric ? "symmetric" : "onesided";
}

VariantKind parse_variant_kind(std::string_view text) {
  if (text == "symmetric") return VariantKind::Symmetric;
  if (text == "onesided" || text == "one-sided") return VariantKind::OneSided;
  throw Error(ErrorCode::InvalidParameter, "unknown variant '" + std::string(text) + "'");
}

VariantSpec::VariantSpec(double s, VariantKind kind, double p, double q)
    : s_(s), kind_(kind), p_(p), q_(q) {
  if (!std::isfinite(s) || !(std::abs(s) < 0.5)) {
    throw Error(ErrorCode::OrderOutOfRange, "decomposition needs |s| < 1/2, got " + std::to_string(s));
  }
  if (!(p > 0.0) || !(q > 0.0) || !std::isfinite(p) || !std::isfinite(q)) {
    throw Error(ErrorCode::InvalidParameter, "decomposition weights p, q must be positive");
  }
}

double VariantSpec::symbol_lower_bound() const noexcept {
  if (kind_ == VariantKind::Symmetric) return 2.0 * std::sqrt(p_ * q_);
  return std::sqrt(2.0 * p_ * q_ * (1.0 + std::cos(s_ * std::numbers::pi)));
}

MultiplierSymbol decomposition_symbol(const VariantSpec& v, const UniformGrid& grid) {
  const auto integral_part = power_symbol(-v.s(), OperatorSide::Left, grid);
  const auto derivative_part = power_symbol(v.s(), v.derivative_side(), grid);
  MultiplierSymbol M;
  M.grid = grid;
  M.order = std::abs(v.s());
  M.descriptor = std::string(to_string(v.kind())) + " decomposition symbol, s=" + std::to_string(v.s());
  M.values.resize(grid.size());
  for (std::size_t i = 0; i < M.values.size(); ++i) {
    M.values[i] = v.p() * integral_part.values[i] + v.q() * derivative_part.values[i];
  }
  if (v.s() != 0.0) {
    M.values[FrequencyBins(grid).index(0)] = 0.0;
    M.singular_zero_bin = true;
  }
  return M;
}

namespace {

double min_nonzero_modulus(const MultiplierSymbol& M) {
  const FrequencyBins bins(M.grid);
  double lo = std::numeric_limits<double>::infinity();
  for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
    if (k == 0) continue;
    lo = std::min(lo, std::abs(M.values[bins.index(k)]));
  }
  return lo;
}

// Relative L2 distance of two spectra over k != 0.
double relative_defect_off_dc(const Spectrum& got, const Spectrum& want) {
  const FrequencyBins bins = want.bins();
  double num = 0.0;
  double den = 0.0;
  for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
    if (k == 0) continue;
    num += std::norm(got.at(k) - want.at(k));
    den += std::norm(want.at(k));
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace

DecompositionResult decompose(const SampledSignal& f, const VariantSpec& v) {
  const Spectrum F = dft_forward(f);
  const MultiplierSymbol M = decomposition_symbol(v, f.grid());
  SampledSignal u = dft_inverse(apply_multiplier(F, reciprocal(M)));

  const Spectrum F_back = dft_forward(reconstruct(u, v));
  DecompositionResult result{std::move(u)};
  result.residual_l2 = relative_defect_off_dc(F_back, F);
  result.dc_defect = M.singular_zero_bin ? std::abs(F.at(0)) * std::sqrt(F.bins().dxi()) : 0.0;
  result.symbol_min_modulus = min_nonzero_modulus(M);
  return result;
}

SampledSignal reconstruct(const SampledSignal& u, const VariantSpec& v) {
  SampledSignal integral_part = apply_spectral(u, FracOrder(-v.s()), OperatorSide::Left);
  SampledSignal derivative_part = apply_spectral(u, FracOrder(v.s()), v.derivative_side());
  return v.p() * std::move(integral_part) + v.q() * derivative_part;
}

namespace {

void require_lemma_range(double s) {
  if (!std::isfinite(s) || s < 0.0 || s >= 0.5) {
    throw Error(ErrorCode::OrderOutOfRange, "identity needs 0 <= s < 1/2, got " + std::to_string(s));
  }
}

OperatorSide second_side(VariantKind kind) {
  return kind == VariantKind::Symmetric ? OperatorSide::Right : OperatorSide::Left;
}

}  // namespace

double cross_inner(const SampledSignal& psi, double s, VariantKind kind) {
  require_lemma_range(s);
  return inner_product(apply_spectral(psi, FracOrder(-s), OperatorSide::Left),
                       apply_spectral(psi, FracOrder(s), second_side(kind)));
}

double visible_energy(const SampledSignal& psi, double s) {
  const Spectrum S = dft_forward(psi);
  const FrequencyBins bins = S.bins();
  double sum = 0.0;
  for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
    if (bins.is_nyquist(k) || (k == 0 && s != 0.0)) continue;
    sum += std::norm(S.at(k));
  }
  return bins.dxi() * sum;
}

EnergyIdentity energy_identity_defect(const SampledSignal& psi, double s, VariantKind kind) {
  require_lemma_range(s);
  const SampledSignal a = apply_spectral(psi, FracOrder(-s), OperatorSide::Left);
  const SampledSignal b = apply_spectral(psi, FracOrder(s), second_side(kind));
  const double cross = kind == VariantKind::Symmetric ? 1.0 : std::cos(s * std::numbers::pi);

  EnergyIdentity e;
  e.lhs = inner_product(a + b, a + b);
  e.rhs = inner_product(a, a) + inner_product(b, b) + 2.0 * cross * visible_energy(psi, s);
  e.defect = e.lhs > 0.0 ? std::abs(e.lhs - e.rhs) / e.lhs : std::abs(e.lhs - e.rhs);
  return e;
}

std::string to_json(const DecompositionResult& result, const VariantSpec& v, const std::string& u_path) {
  nlohmann::ordered_json j;
  j["s"] = v.s();
  j["kind"] = to_string(v.kind());
  j["p"] = v.p();
  j["q"] = v.q();
  j["residual_l2"] = result.residual_l2;
  j["dc_defect"] = result.dc_defect;
  j["symbol_min_modulus"] = result.symbol_min_modulus;
  j["u"] = u_path;
  return j.dump(2);
}

}  // namespace rlfrac
