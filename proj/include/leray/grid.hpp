#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace leray {

// Periodic torus [0, L)^n sampled on N points per axis. Spectral data lives
// on integer lattice frequencies k in [-N/2, N/2)^n; the physical wavevector
// is xi = (2 pi / L) k.
struct TorusGrid {
  int n = 2;       // spatial dimension, 2 or 3
  int N = 32;      // modes per axis, even power of two, >= 8
  double L = 2.0 * M_PI;

  TorusGrid() = default;
  TorusGrid(int n_, int N_, double L_ = 2.0 * M_PI) : n(n_), N(N_), L(L_) { validate(); }

  void validate() const {
    if (n != 2 && n != 3) throw std::invalid_argument("TorusGrid: n must be 2 or 3");
    if (N < 8 || (N & (N - 1)) != 0) throw std::invalid_argument("TorusGrid: N must be a power of two >= 8");
    if (!(L > 0.0)) throw std::invalid_argument("TorusGrid: L must be positive");
  }

  std::size_t modes() const {
    std::size_t m = 1;
    for (int d = 0; d < n; ++d) m *= static_cast<std::size_t>(N);
    return m;
  }

  double dk() const { return 2.0 * M_PI / L; }        // frequency spacing
  double h() const { return L / N; }                  // physical spacing
  double cell_volume() const { return std::pow(h(), n); }
  double nyquist_radius() const { return dk() * (N / 2); }

  // signed lattice frequency of a per-axis index
  int axis_k(int i) const { return i < N / 2 ? i : i - N; }

  std::array<int, 3> axis_indices(std::size_t m) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int d = n - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(m % N);
      m /= N;
    }
    return idx;
  }

  std::size_t flat_index(const std::array<int, 3>& idx) const {
    std::size_t m = 0;
    for (int d = 0; d < n; ++d) m = m * N + static_cast<std::size_t>((idx[d] % N + N) % N);
    return m;
  }

  std::array<int, 3> wavevector(std::size_t m) const {
    auto idx = axis_indices(m);
    std::array<int, 3> k{0, 0, 0};
    for (int d = 0; d < n; ++d) k[d] = axis_k(idx[d]);
    return k;
  }

  double xi_norm(std::size_t m) const {
    auto k = wavevector(m);
    double s = 0.0;
    for (int d = 0; d < n; ++d) s += static_cast<double>(k[d]) * k[d];
    return dk() * std::sqrt(s);
  }

  // index of -k (mod N per axis)
  std::size_t conjugate_index(std::size_t m) const {
    auto idx = axis_indices(m);
    std::array<int, 3> neg{0, 0, 0};
    for (int d = 0; d < n; ++d) neg[d] = (N - idx[d]) % N;
    return flat_index(neg);
  }

  bool operator==(const TorusGrid& o) const { return n == o.n && N == o.N && L == o.L; }
  bool operator!=(const TorusGrid& o) const { return !(*this == o); }
};

}  // namespace leray
