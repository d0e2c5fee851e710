#include "leray/sampling.hpp"

#include <cmath>

#include "leray/operators.hpp"

namespace leray {

double UniformStream::next() {
  // splitmix64 step, top 53 bits
  state_ += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

SpectralField random_field(const TorusGrid& grid, const RandomFieldSpec& spec) {
  const int ncomp = spec.ncomp > 0 ? spec.ncomp : grid.n;
  const double cutoff = spec.cutoff > 0.0 ? spec.cutoff : grid.N / 4.0;
  SpectralField f(grid, ncomp);
  UniformStream rng(spec.seed);
  const std::size_t M = grid.modes();
  for (int c = 0; c < ncomp; ++c) {
    for (std::size_t m = 1; m < M; ++m) {
      auto k = grid.wavevector(m);
      double k2 = 0.0;
      for (int d = 0; d < grid.n; ++d) k2 += static_cast<double>(k[d]) * k[d];
      const double kn = std::sqrt(k2);
      const double phase = 2.0 * M_PI * rng.next();  // drawn for every mode to keep streams aligned
      if (kn > cutoff) continue;
      const double amp = std::pow(1.0 + kn, -spec.sigma);
      f.at(c, m) = amp * cplx{std::cos(phase), std::sin(phase)};
    }
  }
  f.hermitian_symmetrize();
  if (spec.project_div_free && ncomp == grid.n) f = leray_project(f);
  const double nrm = f.l2_norm();
  if (nrm > 0.0) f *= spec.amplitude / nrm;
  return f;
}

}  // namespace leray
