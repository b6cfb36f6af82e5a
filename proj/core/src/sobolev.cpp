#include "rlfrac/sobolev.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <json.hpp>

#include "rlfrac/fourier.hpp"

namespace rlfrac {

namespace {

constexpr std::size_t kBands = 16;
constexpr std::size_t kMinBins = 8;
constexpr double kFloor = 1e-13;

void require_order(double mu) {
  if (!std::isfinite(mu) || mu < 0.0) {
    throw Error(ErrorCode::OrderOutOfRange, "Sobolev order must be >= 0, got " + std::to_string(mu));
  }
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxx > 0.0 ? sxy / sxx : 0.0;
  fit.intercept = my - fit.slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.rms = std::sqrt(ss / n);
  return fit;
}

}  // namespace

double sobolev_seminorm(const SampledSignal& u, double mu) {
  require_order(mu);
  const Spectrum S = dft_forward(u);
  const FrequencyBins bins = S.bins();
  double sum = 0.0;
  for (long k = bins.k_min(); k <= bins.k_max(); ++k) {
    const double weight = mu == 0.0 ? 1.0 : std::pow(std::abs(2.0 * std::numbers::pi * bins.xi(k)), mu);
    sum += std::norm(weight * S.at(k));
  }
  return std::sqrt(bins.dxi() * sum);
}

double sobolev_norm(const SampledSignal& u, double mu) {
  const double semi = sobolev_seminorm(u, mu);
  return std::sqrt(inner_product(u, u) + semi * semi);
}

std::pair<double, double> default_decay_window(const UniformGrid& grid) {
  const double nyquist = FrequencyBins(grid).nyquist();
  return {0.1 * nyquist, 0.5 * nyquist};
}

RegularityFit decay_exponent(const SampledSignal& u, double xi_lo, double xi_hi) {
  const Spectrum S = dft_forward(u);
  const FrequencyBins bins = S.bins();
  if (!(xi_lo > 0.0) || !(xi_hi > xi_lo) || !(xi_hi < bins.nyquist())) {
    throw Error(ErrorCode::Window, "decay window must satisfy 0 < xi_lo < xi_hi < Nyquist");
  }

  double peak = 0.0;
  for (const auto& c : S.coeffs()) peak = std::max(peak, std::abs(c));

  struct Sample {
    double xi;
    double power;
  };
  std::vector<Sample> samples;
  std::size_t in_window = 0;
  for (long k = 1; k <= bins.k_max(); ++k) {
    const double xi = bins.xi(k);
    if (xi < xi_lo || xi > xi_hi || bins.is_nyquist(k) || -k < bins.k_min()) continue;
    ++in_window;
    const double power = 0.5 * (std::norm(S.at(k)) + std::norm(S.at(-k)));
    if (std::sqrt(power) <= kFloor * peak) continue;
    samples.push_back({xi, power});
  }
  if (in_window < kMinBins) {
    throw Error(ErrorCode::Window, "decay window holds fewer than 8 frequency bins");
  }

  RegularityFit fit;
  fit.xi_lo = xi_lo;
  fit.xi_hi = xi_hi;
  fit.bins_used = samples.size();
  const bool hit_floor = samples.size() < in_window;
  if (samples.size() < kMinBins) {
    fit.exponent = -std::numeric_limits<double>::infinity();
    fit.super_polynomial = true;
    return fit;
  }

  // Band-RMS in log-spaced bands so spectral zeros do not dominate the fit.
  const double lo = std::log(samples.front().xi);
  const double hi = std::log(samples.back().xi);
  const double width = (hi - lo) / static_cast<double>(kBands);
  std::vector<double> sum(kBands, 0.0);
  std::vector<std::size_t> count(kBands, 0);
  for (const auto& s : samples) {
    auto b = width > 0.0 ? static_cast<std::size_t>((std::log(s.xi) - lo) / width) : 0;
    b = std::min(b, kBands - 1);
    sum[b] += s.power;
    ++count[b];
  }
  std::vector<double> x, y;
  for (std::size_t b = 0; b < kBands; ++b) {
    if (count[b] == 0) continue;
    x.push_back(lo + (static_cast<double>(b) + 0.5) * width);
    y.push_back(0.5 * std::log(sum[b] / static_cast<double>(count[b])));
  }
  if (x.size() < 2) {
    throw Error(ErrorCode::Window, "decay window too narrow to fit a slope");
  }
  const LineFit all = least_squares(x, y);
  fit.exponent = all.slope;
  fit.rms_fit_error = all.rms;

  bool steepening = false;
  if (x.size() >= 4) {
    const std::size_t half = x.size() / 2;
    const LineFit lower = least_squares({x.begin(), x.begin() + half}, {y.begin(), y.begin() + half});
    const LineFit upper = least_squares({x.begin() + half, x.end()}, {y.begin() + half, y.end()});
    steepening = upper.slope < lower.slope - std::max(1.0, 0.5 * std::abs(all.slope));
  }
  fit.super_polynomial = steepening || hit_floor;
  return fit;
}

std::string to_json(const RegularityFit& fit) {
  nlohmann::ordered_json j;
  if (std::isfinite(fit.exponent)) {
    j["exponent"] = fit.exponent;
  } else {
    j["exponent"] = nullptr;
  }
  j["window"] = {fit.xi_lo, fit.xi_hi};
  j["rms_fit_error"] = fit.rms_fit_error;
  j["super_polynomial"] = fit.super_polynomial;
  j["bins_used"] = fit.bins_used;
  return j.dump(2);
}

}  // namespace rlfrac
