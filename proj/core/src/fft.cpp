#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace rlfrac::detail {

namespace {

// Planning is not thread-safe in FFTW; execution with the new-array
// interface is. Plans are created once per (n, sign) and never destroyed.
class PlanCache {
 public:
  fftw_plan get(int n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<std::complex<double>> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
    fftw_plan p = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

}  // namespace

std::vector<std::complex<double>> fft(const std::vector<std::complex<double>>& in, FftSign sign) {
  const int n = static_cast<int>(in.size());
  fftw_plan plan = cache().get(n, sign == FftSign::Forward ? FFTW_FORWARD : FFTW_BACKWARD);
  std::vector<std::complex<double>> src(in);
  std::vector<std::complex<double>> out(in.size());
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(src.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace rlfrac::detail
