#include "leray/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace leray {

SpectralField apply_multiplier(const SpectralField& f, const SymbolSpec& s) {
  if (s.gamma <= 0.0) {
    for (int c = 0; c < f.ncomp; ++c) {
      if (std::abs(f.at(c, 0)) > 0.0) {
        throw std::invalid_argument("apply_multiplier: gamma <= 0 with nonzero zero mode");
      }
    }
  }
  SpectralField out = f;
  const std::size_t M = f.modes();
  for (std::size_t m = 0; m < M; ++m) {
    const double r = f.grid.xi_norm(m);
    const double factor = (m == 0 && s.gamma <= 0.0) ? 0.0 : s.symbol(r);
    for (int c = 0; c < f.ncomp; ++c) out.at(c, m) *= factor;
  }
  return out;
}

SpectralField semigroup_apply(const SpectralField& f, double t, const SymbolSpec& s) {
  if (t < 0.0) throw std::invalid_argument("semigroup_apply: t must be >= 0");
  if (t == 0.0) return f;
  SpectralField out = f;
  const std::size_t M = f.modes();
  for (std::size_t m = 0; m < M; ++m) {
    const double factor = s.semigroup_factor(t, f.grid.xi_norm(m));
    for (int c = 0; c < f.ncomp; ++c) out.at(c, m) *= factor;
  }
  return out;
}

namespace {
double helmholtz_weight(const SymbolSpec& s2, double alpha, double r) {
  const double w = s2.positive_symbol(r);
  return 1.0 + alpha * alpha * w;  // +inf propagates as intended
}
}  // namespace

SpectralField helmholtz_forward(const SpectralField& f, double alpha, const SymbolSpec& s2) {
  SpectralField out = f;
  const std::size_t M = f.modes();
  for (std::size_t m = 0; m < M; ++m) {
    const double factor = helmholtz_weight(s2, alpha, f.grid.xi_norm(m));
    for (int c = 0; c < f.ncomp; ++c) out.at(c, m) *= factor;
  }
  return out;
}

SpectralField helmholtz_inverse(const SpectralField& f, double alpha, const SymbolSpec& s2) {
  if (alpha < 0.0) throw std::invalid_argument("helmholtz_inverse: alpha must be >= 0");
  SpectralField out = f;
  const std::size_t M = f.modes();
  for (std::size_t m = 0; m < M; ++m) {
    const double factor = 1.0 / helmholtz_weight(s2, alpha, f.grid.xi_norm(m));
    for (int c = 0; c < f.ncomp; ++c) out.at(c, m) *= factor;
  }
  return out;
}

SpectralField leray_project(const SpectralField& f) {
  if (f.ncomp != f.grid.n) throw std::invalid_argument("leray_project: not a vector field");
  SpectralField out = f;
  const std::size_t M = f.modes();
  const int n = f.grid.n;
  for (std::size_t m = 1; m < M; ++m) {
    const auto k = f.grid.wavevector(m);
    double k2 = 0.0;
    for (int d = 0; d < n; ++d) k2 += static_cast<double>(k[d]) * k[d];
    if (k2 == 0.0) continue;
    cplx dot{0.0, 0.0};
    for (int d = 0; d < n; ++d) dot += static_cast<double>(k[d]) * out.at(d, m);
    const cplx scale = dot / k2;
    for (int d = 0; d < n; ++d) out.at(d, m) -= static_cast<double>(k[d]) * scale;
  }
  out.div_free = true;
  return out;
}

std::vector<char> dealias_mask(const TorusGrid& grid) {
  const int kmax = grid.N / 3;
  const std::size_t M = grid.modes();
  std::vector<char> keep(M, 1);
  for (std::size_t m = 0; m < M; ++m) {
    const auto k = grid.wavevector(m);
    for (int d = 0; d < grid.n; ++d) {
      if (std::abs(k[d]) > kmax) {
        keep[m] = 0;
        break;
      }
    }
  }
  return keep;
}

void apply_dealias(SpectralField& f) {
  const auto keep = dealias_mask(f.grid);
  const std::size_t M = f.modes();
  for (int c = 0; c < f.ncomp; ++c) {
    cplx* a = f.component(c);
    for (std::size_t m = 0; m < M; ++m) {
      if (!keep[m]) a[m] = cplx{0.0, 0.0};
    }
  }
}

void apply_dealias(SpectralTensorField& T) {
  const auto keep = dealias_mask(T.grid);
  const std::size_t M = T.modes();
  const int nc = T.grid.n * T.grid.n;
  for (int c = 0; c < nc; ++c) {
    cplx* a = T.coeffs.data() + static_cast<std::size_t>(c) * M;
    for (std::size_t m = 0; m < M; ++m) {
      if (!keep[m]) a[m] = cplx{0.0, 0.0};
    }
  }
}

SpectralTensorField tensor_product(const SpectralField& u, const SpectralField& v) {
  if (u.grid != v.grid) throw std::invalid_argument("tensor_product: grid mismatch");
  if (u.ncomp != u.grid.n || v.ncomp != v.grid.n) {
    throw std::invalid_argument("tensor_product: vector fields required");
  }
  const int n = u.grid.n;
  const std::size_t M = u.modes();
  const auto& tr = transform_for(u.grid.n, u.grid.N);
  const auto keep = dealias_mask(u.grid);

  SpectralField ud = u, vd = v;
  apply_dealias(ud);
  apply_dealias(vd);

  std::vector<std::vector<cplx>> uphys(n), vphys(n);
  for (int c = 0; c < n; ++c) {
    component_to_physical(ud, c, uphys[c]);
    component_to_physical(vd, c, vphys[c]);
  }

  SpectralTensorField T(u.grid);
  std::vector<cplx> prod(M), spec(M);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (std::size_t m = 0; m < M; ++m) prod[m] = uphys[i][m] * vphys[j][m];
      tr.to_spectral(prod, spec);
      for (std::size_t m = 0; m < M; ++m) T.at(i, j, m) = keep[m] ? spec[m] : cplx{0.0, 0.0};
    }
  }
  return T;
}

SpectralField divergence(const SpectralTensorField& T) {
  const int n = T.grid.n;
  const std::size_t M = T.modes();
  const double dk = T.grid.dk();
  SpectralField out(T.grid, n);
  for (std::size_t m = 0; m < M; ++m) {
    const auto k = T.grid.wavevector(m);
    for (int i = 0; i < n; ++i) {
      cplx s{0.0, 0.0};
      for (int j = 0; j < n; ++j) s += (dk * k[j]) * T.at(j, i, m);
      out.at(i, m) = cplx{0.0, 1.0} * s;
    }
  }
  return out;
}

SpectralField nonlinear_W(const SpectralField& u, const SpectralField& v, double alpha,
                          const SymbolSpec& s2, WForm form) {
  if (u.grid != v.grid) throw std::invalid_argument("nonlinear_W: grid mismatch");
  SpectralField w = v;
  const std::size_t M = v.modes();
  const double sgn = (form == WForm::OneMinusAlphaL2) ? 1.0 : -1.0;
  for (std::size_t m = 0; m < M; ++m) {
    const double factor = 1.0 + sgn * alpha * alpha * s2.positive_symbol(v.grid.xi_norm(m));
    for (int c = 0; c < v.ncomp; ++c) w.at(c, m) *= factor;
  }
  SpectralTensorField T = tensor_product(u, w);
  SpectralField d = divergence(T);
  SpectralField h = helmholtz_inverse(d, alpha, s2);
  return leray_project(h);
}

double inner_product_l2(const SpectralField& u, const SpectralField& v) {
  if (u.grid != v.grid || u.ncomp != v.ncomp) throw std::invalid_argument("inner_product_l2: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.coeffs.size(); ++i) {
    s += (std::conj(u.coeffs[i]) * v.coeffs[i]).real();
  }
  return std::pow(u.grid.L, u.grid.n) * s;
}

}  // namespace leray
