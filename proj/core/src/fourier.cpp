#include "rlfrac/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fft.hpp"

namespace rlfrac {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(-2 pi i x_min xi_k). Computed from the reduced fractional turn so that
// the k and -k values are exact conjugates.
cplx offset_phase(const UniformGrid& grid, long k) {
  const double turns_per_bin = grid.x_min() / grid.length();
  const double t = turns_per_bin * static_cast<double>(k);
  const double frac = t - std::round(t);
  return std::polar(1.0, -kTwoPi * frac);
}

std::size_t fft_slot(long k, std::size_t n) {
  const auto nn = static_cast<long>(n);
  return static_cast<std::size_t>(((k % nn) + nn) % nn);
}

}  // namespace

FrequencyBins::FrequencyBins(const UniformGrid& grid) noexcept
    : n_(grid.size()),
      k_min_(-static_cast<long>((grid.size() + 1) / 2) + 1),
      k_max_(static_cast<long>(grid.size() / 2)),
      dx_(grid.dx()),
      dxi_(1.0 / grid.length()) {}

Spectrum::Spectrum(UniformGrid grid, std::vector<cplx> coeffs, bool from_real_signal)
    : grid_(grid), coeffs_(std::move(coeffs)), real_(from_real_signal) {
  if (coeffs_.size() != grid_.size()) {
    throw Error(ErrorCode::InvalidParameter, "spectrum length does not match grid size");
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::InvalidParameter, "spectrum contains a non-finite coefficient");
    }
  }
}

Spectrum dft_forward(const SampledSignal& a) {
  const auto& grid = a.grid();
  const std::size_t n = grid.size();
  std::vector<cplx> in(a.values().begin(), a.values().end());
  const auto raw = detail::fft(in, detail::FftSign::Forward);

  const FrequencyBins bins(grid);
  std::vector<cplx> coeffs(n);
  for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
    coeffs[bins.index(k)] = grid.dx() * offset_phase(grid, k) * raw[fft_slot(k, n)];
  }
  return Spectrum(grid, std::move(coeffs), true);
}

double hermitian_defect(const Spectrum& S) {
  const FrequencyBins bins = S.bins();
  const auto c = S.coeffs();
  double scale = 0.0;
  for (const auto& v : c) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;

  double worst = std::abs(S.at(0).imag());
  for (long k = 1; k <= bins.k_max(); ++k) {
    if (bins.is_nyquist(k)) {
      // Self-paired: S(N) * exp(+2 pi i x_min xi_N) must be real.
      worst = std::max(worst, std::abs((S.at(k) * std::conj(offset_phase(S.grid(), k))).imag()));
      continue;
    }
    worst = std::max(worst, std::abs(S.at(-k) - std::conj(S.at(k))));
  }
  return worst / scale;
}

SampledSignal dft_inverse(const Spectrum& S) {
  if (const double defect = hermitian_defect(S); defect > 1e-9) {
    throw Error(ErrorCode::NotRealSignal,
                "spectrum is not Hermitian (relative defect " + std::to_string(defect) + ")");
  }
  const auto& grid = S.grid();
  const std::size_t n = grid.size();
  const FrequencyBins bins(grid);
  std::vector<cplx> in(n);
  for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
    in[fft_slot(k, n)] = S.at(k) * std::conj(offset_phase(grid, k));
  }
  const auto raw = detail::fft(in, detail::FftSign::Backward);
  std::vector<double> values(n);
  for (std::size_t j = 0; j < n; ++j) values[j] = bins.dxi() * raw[j].real();
  return SampledSignal(grid, std::move(values));
}

MultiplierSymbol power_symbol(double sigma, OperatorSide side, const UniformGrid& grid) {
  if (!std::isfinite(sigma)) throw Error(ErrorCode::InvalidParameter, "symbol order must be finite");
  const FrequencyBins bins(grid);
  MultiplierSymbol M;
  M.grid = grid;
  M.order = sigma;
  M.descriptor = std::string(side == OperatorSide::Left ? "(2 pi i xi)^" : "(-2 pi i xi)^") +
                 std::to_string(sigma);
  M.values.resize(grid.size());
  const double turn = side == OperatorSide::Left ? 1.0 : -1.0;
  for (long k = 1; k <= bins.k_max(); ++k) {
    const double r = std::abs(kTwoPi * bins.xi(k));
    const double mag = std::pow(r, sigma);
    const double theta = turn * sigma * std::numbers::pi / 2.0;
    const cplx v(mag * std::cos(theta), mag * std::sin(theta));
    M.values[bins.index(k)] = v;
    if (-k >= bins.k_min()) M.values[bins.index(-k)] = std::conj(v);
  }
  if (sigma == 0.0) {
    M.values[bins.index(0)] = 1.0;
  } else {
    M.values[bins.index(0)] = 0.0;
    M.singular_zero_bin = sigma < 0.0;
  }
  return M;
}

Spectrum apply_multiplier(const Spectrum& S, const MultiplierSymbol& M) {
  require_compatible(S.grid(), M.grid);
  const FrequencyBins bins = S.bins();
  std::vector<cplx> out(S.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = M.values[i] * S.coeffs()[i];

  const bool hermitian = S.from_real_signal() && M.conjugate_reflective;
  if (hermitian) {
    for (long k = 1; k <= bins.k_max(); ++k) {
      if (bins.is_nyquist(k)) continue;
      const cplx avg = 0.5 * (out[bins.index(k)] + std::conj(out[bins.index(-k)]));
      out[bins.index(k)] = avg;
      out[bins.index(-k)] = std::conj(avg);
    }
    out[bins.index(0)] = out[bins.index(0)].real();
  }
  if (bins.has_nyquist()) out[bins.index(bins.k_max())] = 0.0;
  return Spectrum(S.grid(), std::move(out), hermitian);
}

MultiplierSymbol multiply(const MultiplierSymbol& a, const MultiplierSymbol& b) {
  require_compatible(a.grid, b.grid);
  MultiplierSymbol M;
  M.grid = a.grid;
  M.order = a.order + b.order;
  M.descriptor = a.descriptor + " * " + b.descriptor;
  M.conjugate_reflective = a.conjugate_reflective && b.conjugate_reflective;
  M.singular_zero_bin = a.singular_zero_bin || b.singular_zero_bin;
  M.values.resize(a.values.size());
  for (std::size_t i = 0; i < M.values.size(); ++i) M.values[i] = a.values[i] * b.values[i];
  if (M.singular_zero_bin) M.values[FrequencyBins(M.grid).index(0)] = 0.0;
  return M;
}

MultiplierSymbol reciprocal(const MultiplierSymbol& M) {
  const FrequencyBins bins(M.grid);
  MultiplierSymbol R;
  R.grid = M.grid;
  R.order = -M.order;
  R.descriptor = "1 / (" + M.descriptor + ")";
  R.conjugate_reflective = M.conjugate_reflective;
  R.values.resize(M.values.size());
  for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
    const cplx v = M.values[bins.index(k)];
    if (k == 0 && (M.singular_zero_bin || v == 0.0)) {
      R.values[bins.index(k)] = 0.0;
      R.singular_zero_bin = !M.singular_zero_bin;
      continue;
    }
    if (v == 0.0) throw Error(ErrorCode::InvalidParameter, "symbol vanishes at a nonzero frequency");
    R.values[bins.index(k)] = 1.0 / v;
  }
  return R;
}

double spectral_l2(const Spectrum& S) {
  double sum = 0.0;
  for (const auto& c : S.coeffs()) sum += std::norm(c);
  return std::sqrt(S.bins().dxi() * sum);
}

cplx spectral_inner(const Spectrum& a, const Spectrum& b) {
  require_compatible(a.grid(), b.grid());
  cplx sum = 0.0;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) sum += a.coeffs()[i] * std::conj(b.coeffs()[i]);
  return a.bins().dxi() * sum;
}

std::vector<cplx> shift_phase_ramp(const UniformGrid& grid, long shift_bins) {
  const FrequencyBins bins(grid);
  const auto n = static_cast<long>(grid.size());
  std::vector<cplx> ramp(grid.size());
  for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
    // xi_k * h = k * shift / n turns, reduced exactly in integers.
    const long m = ((k * (shift_bins % n)) % n + n) % n;
    double frac = static_cast<double>(m) / static_cast<double>(n);
    if (frac > 0.5) frac -= 1.0;
    ramp[bins.index(k)] = std::polar(1.0, -kTwoPi * frac);
  }
  return ramp;
}

}  // namespace rlfrac
