#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rlfrac/error.hpp"

namespace rlfrac {

/// Uniform sampling lattice x_j = x_min + j*dx, 0 <= j < n.
class UniformGrid {
 public:
  UniformGrid(double x_min, double dx, std::size_t n);

  /// Periodic window [x_min, x_max) with n samples, dx = (x_max - x_min) / n.
  static UniformGrid periodic(double x_min, double x_max, std::size_t n);
  /// Grid symmetric about 0: x_min = -(n-1)*dx/2.
  static UniformGrid symmetric(double dx, std::size_t n);
  /// [-20, 20) with 4096 samples.
  static UniformGrid default_grid();

  double x_min() const noexcept { return x_min_; }
  double dx() const noexcept { return dx_; }
  std::size_t size() const noexcept { return n_; }
  double x(std::size_t j) const noexcept { return x_min_ + static_cast<double>(j) * dx_; }
  double x_max() const noexcept { return x(n_ - 1); }
  /// Total periodic length n*dx.
  double length() const noexcept { return static_cast<double>(n_) * dx_; }

  bool is_symmetric() const noexcept;
  /// Index of the sample at x = 0, or -1 when 0 is not a grid point.
  long zero_index() const noexcept;

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  double x_min_;
  double dx_;
  std::size_t n_;
};

void require_compatible(const UniformGrid& a, const UniformGrid& b);

enum class OperatorSide { Left, Right };

constexpr OperatorSide opposite(OperatorSide side) noexcept {
  return side == OperatorSide::Left ? OperatorSide::Right : OperatorSide::Left;
}

/// Real samples on a UniformGrid. Immutable; every value is finite.
class SampledSignal {
 public:
  SampledSignal(UniformGrid grid, std::vector<double> values);

  static SampledSignal zeros(const UniformGrid& grid);

  const UniformGrid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t j) const noexcept { return values_[j]; }

  SampledSignal& operator+=(const SampledSignal& other);
  SampledSignal& operator-=(const SampledSignal& other);
  SampledSignal& operator*=(double alpha);

 private:
  UniformGrid grid_;
  std::vector<double> values_;
};

SampledSignal operator+(SampledSignal a, const SampledSignal& b);
SampledSignal operator-(SampledSignal a, const SampledSignal& b);
SampledSignal operator*(double alpha, SampledSignal a);

/// dx * sum_j a_j b_j.
double inner_product(const SampledSignal& a, const SampledSignal& b);
double l2_norm(const SampledSignal& a);
/// Rectangle-rule integral dx * sum_j a_j.
double integral(const SampledSignal& a);

/// Circular shift by k bins: result_j = a_{(j-k) mod n}.
SampledSignal translate(const SampledSignal& a, long k);
/// u(kappa x) by index decimation onto a grid of n/kappa samples, same dx.
SampledSignal dilate(const SampledSignal& a, std::size_t kappa);
/// u(-x) on a grid symmetric about 0.
SampledSignal reflect(const SampledSignal& a);

}  // namespace rlfrac
