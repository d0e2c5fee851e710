#pragma once

#include <complex>
#include <vector>

namespace leray {

using cplx = std::complex<double>;

// Thin cached wrapper around FFTW complex-to-complex transforms on an
// N^n grid (n = 2 or 3, row major, last axis fastest). Plans are created
// once per (n, N) and reused; execution on caller-owned buffers is
// thread-safe, plan creation is serialized internally.
//
// Conventions:
//   to_physical: u(x_j) = sum_k uhat(k) e^{+i 2 pi k.j / N}   (unnormalized backward)
//   to_spectral: uhat(k) = N^{-n} sum_j u(x_j) e^{-i 2 pi k.j / N}
class FourierTransform {
public:
  FourierTransform(int n, int N);

  void to_physical(const std::vector<cplx>& spectral, std::vector<cplx>& physical) const;
  void to_spectral(const std::vector<cplx>& physical, std::vector<cplx>& spectral) const;

  int dim() const { return n_; }
  int extent() const { return N_; }
  std::size_t size() const { return size_; }

private:
  int n_;
  int N_;
  std::size_t size_;
  void* plan_fwd_;  // fftw_plan, type-erased to keep fftw3.h out of the interface
  void* plan_bwd_;
};

// Shared per-(n, N) transform instances.
const FourierTransform& transform_for(int n, int N);

}  // namespace leray
