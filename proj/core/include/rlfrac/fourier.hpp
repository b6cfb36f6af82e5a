#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "rlfrac/signal.hpp"

namespace rlfrac {

using cplx = std::complex<double>;

/// Centered frequency bins k in {-ceil(n/2)+1, ..., floor(n/2)} with
/// physical frequency xi_k = k / (n dx). Storage is in increasing k.
class FrequencyBins {
 public:
  explicit FrequencyBins(const UniformGrid& grid) noexcept;

  long k_min() const noexcept { return k_min_; }
  long k_max() const noexcept { return k_max_; }
  std::size_t size() const noexcept { return n_; }
  std::size_t index(long k) const noexcept { return static_cast<std::size_t>(k - k_min_); }
  long k(std::size_t index) const noexcept { return static_cast<long>(index) + k_min_; }
  double xi(long k) const noexcept { return static_cast<double>(k) * dxi_; }
  double dxi() const noexcept { return dxi_; }
  /// Even n only: the k = n/2 bin whose sign is ambiguous.
  bool has_nyquist() const noexcept { return n_ % 2 == 0; }
  bool is_nyquist(long k) const noexcept { return has_nyquist() && k == k_max_; }
  double nyquist() const noexcept { return 0.5 / dx_; }

 private:
  std::size_t n_;
  long k_min_;
  long k_max_;
  double dx_;
  double dxi_;
};

/// Frequency-domain coefficients coeffs(k) = dx * sum_j a_j exp(-2 pi i x_j xi_k).
class Spectrum {
 public:
  Spectrum(UniformGrid grid, std::vector<cplx> coeffs, bool from_real_signal);

  const UniformGrid& grid() const noexcept { return grid_; }
  FrequencyBins bins() const noexcept { return FrequencyBins(grid_); }
  std::span<const cplx> coeffs() const noexcept { return coeffs_; }
  cplx at(long k) const noexcept { return coeffs_[bins().index(k)]; }
  bool from_real_signal() const noexcept { return real_; }

 private:
  UniformGrid grid_;
  std::vector<cplx> coeffs_;
  bool real_;
};

/// Complex multiplier per centered bin.
struct MultiplierSymbol {
  UniformGrid grid = UniformGrid::default_grid();
  std::vector<cplx> values;
  double order = 0.0;
  std::string descriptor;
  /// values(-k) == conj(values(k)) for every k != 0 paired bin.
  bool conjugate_reflective = true;
  /// The k = 0 value is a placeholder 0 for a divergent symbol.
  bool singular_zero_bin = false;

  cplx at(long k) const noexcept { return values[FrequencyBins(grid).index(k)]; }
};

Spectrum dft_forward(const SampledSignal& a);
/// Throws NotRealSignal when S is not Hermitian within 1e-9 relative.
SampledSignal dft_inverse(const Spectrum& S);

/// Largest |S(-k) - conj S(k)| relative to max |S|, including the self-paired bins.
double hermitian_defect(const Spectrum& S);

/// Left: (2 pi i xi)^sigma, Right: (-2 pi i xi)^sigma, with the branch
/// |2 pi xi|^sigma exp(+-i sigma pi sign(xi) / 2).
MultiplierSymbol power_symbol(double sigma, OperatorSide side, const UniformGrid& grid);

/// Pointwise product; Hermitian inputs are re-symmetrized and the Nyquist bin is zeroed.
Spectrum apply_multiplier(const Spectrum& S, const MultiplierSymbol& M);

/// Pointwise product of two symbols on the same grid.
MultiplierSymbol multiply(const MultiplierSymbol& a, const MultiplierSymbol& b);
/// 1 / M off the singular bins; singular (or zero) bins map to 0.
MultiplierSymbol reciprocal(const MultiplierSymbol& M);

/// sqrt(dxi * sum_k |S(k)|^2).
double spectral_l2(const Spectrum& S);
/// dxi * sum_k a(k) conj(b(k)).
cplx spectral_inner(const Spectrum& a, const Spectrum& b);

/// exp(-2 pi i xi_k h) for a shift h = shift_bins * dx.
std::vector<cplx> shift_phase_ramp(const UniformGrid& grid, long shift_bins);

}  // namespace rlfrac
