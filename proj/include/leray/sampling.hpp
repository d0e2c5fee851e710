#pragma once

#include <cstdint>
#include <optional>

#include "leray/field.hpp"

namespace leray {

// Seeded random spectral fields with mode amplitudes (1 + |k|)^{-sigma} and
// uniform random phases, band-limited to |k| <= cutoff (default: the
// filter-bank covered band, which is also dealias-safe), Hermitian-symmetric.
struct RandomFieldSpec {
  double sigma = 2.0;
  double amplitude = 1.0;          // target L2 norm
  std::uint64_t seed = 1;
  double cutoff = 0.0;             // 0: N/4 (covered band)
  int ncomp = 0;                   // 0: grid.n
  bool project_div_free = false;
};

SpectralField random_field(const TorusGrid& grid, const RandomFieldSpec& spec);

// Uniform double in [0, 1) from a seeded 64-bit stream; identical across
// platforms (no distribution library involved).
class UniformStream {
public:
  explicit UniformStream(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  double next();

private:
  std::uint64_t state_;
};

}  // namespace leray
