#pragma once

#include <string>
#include <string_view>

#include "rlfrac/fourier.hpp"
#include "rlfrac/operators.hpp"
#include "rlfrac/signal.hpp"

namespace rlfrac {

/// Symmetric:  f = p D^{-s} u + q D^{s*} u
/// OneSided:   f = p D^{-s} u + q D^{s} u
enum class VariantKind { Symmetric, OneSided };

std::string_view to_string(VariantKind kind) noexcept;
VariantKind parse_variant_kind(std::string_view text);

class VariantSpec {
 public:
  /// Requires |s| < 1/2 strictly and p, q > 0.
  VariantSpec(double s, VariantKind kind, double p = 1.0, double q = 1.0);

  double s() const noexcept { return s_; }
  VariantKind kind() const noexcept { return kind_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return q_; }

  /// Side carrying the order-s term.
  OperatorSide derivative_side() const noexcept {
    return kind_ == VariantKind::Symmetric ? OperatorSide::Right : OperatorSide::Left;
  }

  /// Guaranteed lower bound of |symbol| over nonzero frequencies.
  double symbol_lower_bound() const noexcept;

 private:
  double s_;
  VariantKind kind_;
  double p_;
  double q_;
};

struct DecompositionResult {
  SampledSignal u;
  /// Relative L2 reconstruction defect over the nonzero bins.
  double residual_l2 = 0.0;
  /// |f^(0)| sqrt(dxi): the DC mass the inversion cannot represent.
  double dc_defect = 0.0;
  /// min |symbol| over nonzero bins.
  double symbol_min_modulus = 0.0;
};

MultiplierSymbol decomposition_symbol(const VariantSpec& v, const UniformGrid& grid);

/// The unique u with f = p D^{-s} u + q D^{+-s} u, by division in frequency.
DecompositionResult decompose(const SampledSignal& f, const VariantSpec& v);

SampledSignal reconstruct(const SampledSignal& u, const VariantSpec& v);

/// (D^{-s} psi, D^{s*} psi) for Symmetric, (D^{-s} psi, D^{s} psi) for OneSided.
/// 0 <= s < 1/2.
double cross_inner(const SampledSignal& psi, double s, VariantKind kind);

/// Energy of psi on the frequencies the pair of operators acts on: every
/// bin except Nyquist, and except DC when s != 0.
double visible_energy(const SampledSignal& psi, double s);

struct EnergyIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double defect = 0.0;
};

/// lhs = ||D^{-s} psi + D^{+-s} psi||^2,
/// rhs = ||D^{-s} psi||^2 + ||D^{+-s} psi||^2 + 2 c ||psi||^2 with c = 1
/// (Symmetric) or cos(s pi) (OneSided), ||psi||^2 taken as visible_energy.
EnergyIdentity energy_identity_defect(const SampledSignal& psi, double s, VariantKind kind);

/// JSON object: s, kind, p, q, residual_l2, dc_defect, symbol_min_modulus, u.
std::string to_json(const DecompositionResult& result, const VariantSpec& v, const std::string& u_path);

}  // namespace rlfrac
