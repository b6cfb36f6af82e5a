#include "rlfrac/signal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace rlfrac {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::GridMismatch: return "grid-mismatch";
    case ErrorCode::DilationIncompatible: return "dilation-incompatible";
    case ErrorCode::Alignment: return "alignment";
    case ErrorCode::NotRealSignal: return "not-real-signal";
    case ErrorCode::OrderOutOfRange: return "order-out-of-range";
    case ErrorCode::DegenerateOrder: return "degenerate-order";
    case ErrorCode::InvalidParameter: return "invalid-parameter";
    case ErrorCode::Window: return "window";
    case ErrorCode::Io: return "io";
    case ErrorCode::Parse: return "parse";
  }
  return "unknown";
}

UniformGrid::UniformGrid(double x_min, double dx, std::size_t n) : x_min_(x_min), dx_(dx), n_(n) {
  if (!(dx > 0.0) || !std::isfinite(dx)) {
    throw Error(ErrorCode::InvalidParameter, "grid spacing must be a positive finite number");
  }
  if (n < 2) {
    throw Error(ErrorCode::InvalidParameter, "grid needs at least 2 samples");
  }
  if (!std::isfinite(x_min) || !std::isfinite(x(n - 1))) {
    throw Error(ErrorCode::InvalidParameter, "grid sample points must be finite");
  }
}

UniformGrid UniformGrid::periodic(double x_min, double x_max, std::size_t n) {
  if (!(x_max > x_min)) {
    throw Error(ErrorCode::InvalidParameter, "window must satisfy x_min < x_max");
  }
  if (n < 2) {
    throw Error(ErrorCode::InvalidParameter, "grid needs at least 2 samples");
  }
  return UniformGrid(x_min, (x_max - x_min) / static_cast<double>(n), n);
}

UniformGrid UniformGrid::symmetric(double dx, std::size_t n) {
  return UniformGrid(-0.5 * static_cast<double>(n - 1) * dx, dx, n);
}

UniformGrid UniformGrid::default_grid() { return periodic(-20.0, 20.0, 4096); }

bool UniformGrid::is_symmetric() const noexcept {
  return std::abs(x_min_ + x_max()) <= 1e-12 * std::max(1.0, std::abs(x_min_));
}

long UniformGrid::zero_index() const noexcept {
  const double j = -x_min_ / dx_;
  const double jr = std::round(j);
  if (jr < 0.0 || jr > static_cast<double>(n_ - 1)) return -1;
  if (std::abs(x_min_ + jr * dx_) > 1e-12 * std::max(1.0, std::abs(x_min_))) return -1;
  return static_cast<long>(jr);
}

void require_compatible(const UniformGrid& a, const UniformGrid& b) {
  if (a == b) return;
  std::ostringstream msg;
  msg.precision(17);
  msg << "incompatible grids (x_min, dx, n): (" << a.x_min() << ", " << a.dx() << ", " << a.size()
      << ") vs (" << b.x_min() << ", " << b.dx() << ", " << b.size() << ")";
  throw Error(ErrorCode::GridMismatch, msg.str());
}

SampledSignal::SampledSignal(UniformGrid grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorCode::InvalidParameter, "sample count does not match grid size");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidParameter, "signal contains a non-finite sample");
  }
}

SampledSignal SampledSignal::zeros(const UniformGrid& grid) {
  return SampledSignal(grid, std::vector<double>(grid.size(), 0.0));
}

SampledSignal& SampledSignal::operator+=(const SampledSignal& other) {
  require_compatible(grid_, other.grid_);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
  return *this;
}

SampledSignal& SampledSignal::operator-=(const SampledSignal& other) {
  require_compatible(grid_, other.grid_);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
  return *this;
}

SampledSignal& SampledSignal::operator*=(double alpha) {
  for (double& v : values_) v *= alpha;
  return *this;
}

SampledSignal operator+(SampledSignal a, const SampledSignal& b) { return a += b; }
SampledSignal operator-(SampledSignal a, const SampledSignal& b) { return a -= b; }
SampledSignal operator*(double alpha, SampledSignal a) { return a *= alpha; }

double inner_product(const SampledSignal& a, const SampledSignal& b) {
  require_compatible(a.grid(), b.grid());
  const auto av = a.values();
  const auto bv = b.values();
  return a.grid().dx() * std::inner_product(av.begin(), av.end(), bv.begin(), 0.0);
}

double l2_norm(const SampledSignal& a) { return std::sqrt(inner_product(a, a)); }

double integral(const SampledSignal& a) {
  const auto v = a.values();
  return a.grid().dx() * std::accumulate(v.begin(), v.end(), 0.0);
}

SampledSignal translate(const SampledSignal& a, long k) {
  const auto n = static_cast<long>(a.size());
  const long shift = ((k % n) + n) % n;
  std::vector<double> out(a.size());
  const auto v = a.values();
  for (long j = 0; j < n; ++j) out[static_cast<std::size_t>((j + shift) % n)] = v[static_cast<std::size_t>(j)];
  return SampledSignal(a.grid(), std::move(out));
}

SampledSignal dilate(const SampledSignal& a, std::size_t kappa) {
  const auto& g = a.grid();
  if (kappa == 0 || g.size() % kappa != 0 || g.size() / kappa < 2) {
    throw Error(ErrorCode::DilationIncompatible, "dilation factor must divide the sample count");
  }
  if (g.zero_index() < 0) {
    throw Error(ErrorCode::Alignment, "dilation needs x = 0 on the grid");
  }
  if (kappa == 1) return a;
  const std::size_t n = g.size() / kappa;
  std::vector<double> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = a[kappa * j];
  return SampledSignal(UniformGrid(g.x_min() / static_cast<double>(kappa), g.dx(), n), std::move(out));
}

SampledSignal reflect(const SampledSignal& a) {
  if (!a.grid().is_symmetric()) {
    throw Error(ErrorCode::Alignment, "reflection needs a grid symmetric about 0");
  }
  const auto v = a.values();
  return SampledSignal(a.grid(), std::vector<double>(v.rbegin(), v.rend()));
}

}  // namespace rlfrac
