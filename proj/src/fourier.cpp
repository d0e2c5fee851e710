#include "leray/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace leray {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

FourierTransform::FourierTransform(int n, int N) : n_(n), N_(N) {
  if (n != 2 && n != 3) throw std::invalid_argument("FourierTransform: n must be 2 or 3");
  if (N < 2) throw std::invalid_argument("FourierTransform: N too small");
  size_ = 1;
  for (int d = 0; d < n; ++d) size_ *= static_cast<std::size_t>(N);

  std::vector<cplx> scratch(size_);
  auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
  int dims[3] = {N, N, N};

  // FFTW planning is not thread-safe; FFTW_UNALIGNED lets us execute the
  // cached plans on arbitrary std::vector storage via the new-array API.
  std::lock_guard<std::mutex> lock(planner_mutex());
  plan_fwd_ = fftw_plan_dft(n, dims, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  plan_bwd_ = fftw_plan_dft(n, dims, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  if (!plan_fwd_ || !plan_bwd_) throw std::runtime_error("FourierTransform: fftw planning failed");
}

void FourierTransform::to_physical(const std::vector<cplx>& spectral, std::vector<cplx>& physical) const {
  if (spectral.size() != size_) throw std::invalid_argument("to_physical: size mismatch");
  physical.resize(size_);
  auto* in = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(spectral.data()));
  auto* out = reinterpret_cast<fftw_complex*>(physical.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), in, out);
}

void FourierTransform::to_spectral(const std::vector<cplx>& physical, std::vector<cplx>& spectral) const {
  if (physical.size() != size_) throw std::invalid_argument("to_spectral: size mismatch");
  spectral.resize(size_);
  auto* in = reinterpret_cast<fftw_complex*>(const_cast<cplx*>(physical.data()));
  auto* out = reinterpret_cast<fftw_complex*>(spectral.data());
  fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), in, out);
  const double scale = 1.0 / static_cast<double>(size_);
  for (auto& c : spectral) c *= scale;
}

const FourierTransform& transform_for(int n, int N) {
  static std::map<std::pair<int, int>, std::unique_ptr<FourierTransform>> cache;
  static std::mutex m;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(n, N);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<FourierTransform>(n, N)).first;
  }
  return *it->second;
}

}  // namespace leray
