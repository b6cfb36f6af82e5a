#pragma once

#include <complex>
#include <vector>

namespace rlfrac::detail {

enum class FftSign { Forward, Backward };

/// Unnormalized DFT: out_k = sum_j in_j exp(-+2 pi i j k / n), standard order.
std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in, FftSign sign);

}  // namespace rlfrac::detail
