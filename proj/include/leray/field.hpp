#pragma once

#include <vector>

#include "leray/fourier.hpp"
#include "leray/grid.hpp"

namespace leray {

// Complex Fourier coefficients of an ncomp-component field on a torus grid,
// component-major storage. Real-valued physical fields keep Hermitian
// symmetry coeff(-k) = conj(coeff(k)).
struct SpectralField {
  TorusGrid grid;
  int ncomp = 0;
  std::vector<cplx> coeffs;
  bool div_free = false;

  SpectralField() = default;
  SpectralField(const TorusGrid& g, int nc)
      : grid(g), ncomp(nc), coeffs(g.modes() * static_cast<std::size_t>(nc), cplx{0.0, 0.0}) {}

  static SpectralField vector_field(const TorusGrid& g) { return SpectralField(g, g.n); }

  std::size_t modes() const { return grid.modes(); }

  cplx& at(int comp, std::size_t m) { return coeffs[static_cast<std::size_t>(comp) * modes() + m]; }
  const cplx& at(int comp, std::size_t m) const { return coeffs[static_cast<std::size_t>(comp) * modes() + m]; }

  cplx* component(int comp) { return coeffs.data() + static_cast<std::size_t>(comp) * modes(); }
  const cplx* component(int comp) const { return coeffs.data() + static_cast<std::size_t>(comp) * modes(); }

  // sqrt(L^n sum |coeff|^2): the continuum L2 norm of the trig polynomial
  double l2_norm() const;
  // sqrt(sum |coeff|^2), no volume factor
  double coeff_norm() const;
  double max_abs_coeff() const;
  bool finite() const;

  // max_k |k . uhat(k)| / ||uhat||_2, zero for the zero field
  double divergence_residual() const;
  // max_k |coeff(-k) - conj(coeff(k))| / ||uhat||_2
  double hermitian_residual() const;
  void hermitian_symmetrize();

  SpectralField& operator+=(const SpectralField& o);
  SpectralField& operator-=(const SpectralField& o);
  SpectralField& operator*=(double a);
};

SpectralField operator+(SpectralField a, const SpectralField& b);
SpectralField operator-(SpectralField a, const SpectralField& b);
SpectralField operator*(double a, SpectralField f);

using SpectralVectorField = SpectralField;

// n x n component tensor field (entry (i, j) at component index i*n + j).
struct SpectralTensorField {
  TorusGrid grid;
  std::vector<cplx> coeffs;

  SpectralTensorField() = default;
  explicit SpectralTensorField(const TorusGrid& g)
      : grid(g), coeffs(g.modes() * static_cast<std::size_t>(g.n) * g.n, cplx{0.0, 0.0}) {}

  std::size_t modes() const { return grid.modes(); }
  cplx& at(int i, int j, std::size_t m) {
    return coeffs[(static_cast<std::size_t>(i) * grid.n + j) * modes() + m];
  }
  const cplx& at(int i, int j, std::size_t m) const {
    return coeffs[(static_cast<std::size_t>(i) * grid.n + j) * modes() + m];
  }
  double hermitian_residual() const;
};

// Physical-space samples of one component (values on the N^n grid).
void component_to_physical(const SpectralField& f, int comp, std::vector<cplx>& out);

// Discrete Lebesgue norms of the physical-space field: pointwise Euclidean
// magnitude over components, then L^p Riemann sum with cell volume weights
// (max over grid points for p = inf).
double lp_norm_physical(const SpectralField& f, double p);

// Bessel-potential Sobolev norm ||(1 - Laplace)^{s/2} f||_{L^p}.
double sobolev_norm(const SpectralField& f, double s, double p);

}  // namespace leray
