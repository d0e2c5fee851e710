#include "leray/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace leray {

double SpectralField::l2_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return std::sqrt(std::pow(grid.L, grid.n) * s);
}

double SpectralField::coeff_norm() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

double SpectralField::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs) m = std::max(m, std::abs(c));
  return m;
}

bool SpectralField::finite() const {
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

double SpectralField::divergence_residual() const {
  if (ncomp != grid.n) throw std::logic_error("divergence_residual: not a vector field");
  const double nrm = coeff_norm();
  if (nrm == 0.0) return 0.0;
  const std::size_t M = modes();
  double worst = 0.0;
  for (std::size_t m = 0; m < M; ++m) {
    auto k = grid.wavevector(m);
    cplx dot{0.0, 0.0};
    for (int d = 0; d < grid.n; ++d) dot += static_cast<double>(k[d]) * at(d, m);
    worst = std::max(worst, std::abs(dot));
  }
  return worst / nrm;
}

double SpectralField::hermitian_residual() const {
  const double nrm = coeff_norm();
  if (nrm == 0.0) return 0.0;
  const std::size_t M = modes();
  double worst = 0.0;
  for (int c = 0; c < ncomp; ++c) {
    for (std::size_t m = 0; m < M; ++m) {
      const std::size_t mc = grid.conjugate_index(m);
      worst = std::max(worst, std::abs(at(c, mc) - std::conj(at(c, m))));
    }
  }
  return worst / nrm;
}

void SpectralField::hermitian_symmetrize() {
  const std::size_t M = modes();
  for (int c = 0; c < ncomp; ++c) {
    for (std::size_t m = 0; m < M; ++m) {
      const std::size_t mc = grid.conjugate_index(m);
      if (mc < m) continue;
      if (mc == m) {
        at(c, m) = cplx{at(c, m).real(), 0.0};
      } else {
        const cplx avg = 0.5 * (at(c, m) + std::conj(at(c, mc)));
        at(c, m) = avg;
        at(c, mc) = std::conj(avg);
      }
    }
  }
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
  if (grid != o.grid || ncomp != o.ncomp) throw std::invalid_argument("field +=: shape mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
  if (grid != o.grid || ncomp != o.ncomp) throw std::invalid_argument("field -=: shape mismatch");
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
  return *this;
}

SpectralField& SpectralField::operator*=(double a) {
  for (auto& c : coeffs) c *= a;
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(double a, SpectralField f) { return f *= a; }

double SpectralTensorField::hermitian_residual() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  const double nrm = std::sqrt(s);
  if (nrm == 0.0) return 0.0;
  const std::size_t M = modes();
  const int n = grid.n;
  double worst = 0.0;
  for (int c = 0; c < n * n; ++c) {
    const cplx* base = coeffs.data() + static_cast<std::size_t>(c) * M;
    for (std::size_t m = 0; m < M; ++m) {
      const std::size_t mc = grid.conjugate_index(m);
      worst = std::max(worst, std::abs(base[mc] - std::conj(base[m])));
    }
  }
  return worst / nrm;
}

void component_to_physical(const SpectralField& f, int comp, std::vector<cplx>& out) {
  const auto& tr = transform_for(f.grid.n, f.grid.N);
  std::vector<cplx> spec(f.component(comp), f.component(comp) + f.modes());
  tr.to_physical(spec, out);
}

double lp_norm_physical(const SpectralField& f, double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("lp_norm_physical: p must be >= 1 (or inf)");
  const std::size_t M = f.modes();
  std::vector<double> mag2(M, 0.0);
  std::vector<cplx> phys;
  for (int c = 0; c < f.ncomp; ++c) {
    component_to_physical(f, c, phys);
    for (std::size_t j = 0; j < M; ++j) mag2[j] += std::norm(phys[j]);
  }
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : mag2) m = std::max(m, v);
    return std::sqrt(m);
  }
  double s = 0.0;
  for (double v : mag2) s += std::pow(v, 0.5 * p);
  return std::pow(f.grid.cell_volume() * s, 1.0 / p);
}

double sobolev_norm(const SpectralField& f, double s, double p) {
  SpectralField g = f;
  const std::size_t M = f.modes();
  for (std::size_t m = 0; m < M; ++m) {
    const double xi = f.grid.xi_norm(m);
    const double w = std::pow(1.0 + xi * xi, 0.5 * s);
    for (int c = 0; c < f.ncomp; ++c) g.at(c, m) *= w;
  }
  return lp_norm_physical(g, p);
}

}  // namespace leray
