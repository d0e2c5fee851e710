#include "leray/besov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "leray/operators.hpp"

namespace leray {

namespace {
double smooth_step(double x) {
  // 0 for x <= 0, 1 for x >= 1, exp(-1/x) glue in between
  auto f = [](double t) { return t > 0.0 ? std::exp(-1.0 / t) : 0.0; };
  const double a = f(x), b = f(1.0 - x);
  return a / (a + b);
}
}  // namespace

double lp_theta(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  return 1.0 - smooth_step(r - 1.0);
}

double lp_psi0(double r) { return lp_theta(r) - lp_theta(2.0 * r); }

BesovParams::BesovParams(double s_, double p_, double q_) : s(s_), p(p_), q(q_) {
  if (!(p >= 1.0) || !(q >= 1.0)) throw std::invalid_argument("BesovParams: p, q must be >= 1 (or inf)");
}

LPFilterBank::LPFilterBank(const TorusGrid& grid) : grid_(grid) {
  grid.validate();
  j_max_ = static_cast<int>(std::lround(std::log2(grid.N / 2))) - 1;
  covered_radius_ = grid.dk() == 0 ? 0.0 : std::ldexp(1.0, j_max_);
  const std::size_t M = grid.modes();
  psi_.assign(j_max_ + 1, std::vector<double>(M, 0.0));
  big_psi_.assign(M, 0.0);
  for (std::size_t m = 0; m < M; ++m) {
    const double r = grid.xi_norm(m);
    big_psi_[m] = lp_theta(2.0 * r);
    for (int j = 0; j <= j_max_; ++j) psi_[j][m] = lp_psi0(std::ldexp(r, -j));
  }
  const double res = partition_residual();
  if (res > 1e-12) {
    throw std::runtime_error("LPFilterBank: partition-of-unity residual " + std::to_string(res));
  }
}

const std::vector<double>& LPFilterBank::psi_hat(int j) const {
  if (j < 0 || j > j_max_) throw std::out_of_range("LPFilterBank: block index out of range");
  return psi_[j];
}

std::pair<double, double> LPFilterBank::annulus(int j) const {
  if (j < 0 || j > j_max_) throw std::out_of_range("LPFilterBank: block index out of range");
  return {std::ldexp(1.0, j - 1), std::ldexp(1.0, j + 1)};
}

double LPFilterBank::partition_residual() const {
  const std::size_t M = grid_.modes();
  double worst = 0.0;
  for (std::size_t m = 0; m < M; ++m) {
    if (grid_.xi_norm(m) > covered_radius_ + 1e-12) continue;
    double s = big_psi_[m];
    for (int j = 0; j <= j_max_; ++j) s += psi_[j][m];
    worst = std::max(worst, std::abs(1.0 - s));
  }
  return worst;
}

LPFilterBank build_filter_bank(const TorusGrid& grid) { return LPFilterBank(grid); }

namespace {
SpectralField apply_real_multiplier(const SpectralField& f, const std::vector<double>& mult) {
  SpectralField out = f;
  const std::size_t M = f.modes();
  for (int c = 0; c < f.ncomp; ++c) {
    cplx* a = out.component(c);
    for (std::size_t m = 0; m < M; ++m) a[m] *= mult[m];
  }
  return out;
}
}  // namespace

SpectralField lp_block(const SpectralField& f, int j, const LPFilterBank& bank) {
  if (f.grid != bank.grid()) throw std::invalid_argument("lp_block: grid mismatch");
  return apply_real_multiplier(f, bank.psi_hat(j));
}

SpectralField lp_low(const SpectralField& f, const LPFilterBank& bank) {
  if (f.grid != bank.grid()) throw std::invalid_argument("lp_low: grid mismatch");
  return apply_real_multiplier(f, bank.big_psi_hat());
}

SpectralField lp_partial_sum(const SpectralField& f, int j, const LPFilterBank& bank) {
  SpectralField acc = lp_low(f, bank);
  const int top = std::min(j, bank.j_max());
  for (int k = 0; k <= top; ++k) acc += lp_block(f, k, bank);
  return acc;
}

double besov_norm(const SpectralField& f, const BesovParams& params, const LPFilterBank& bank) {
  if (f.grid != bank.grid()) throw std::invalid_argument("besov_norm: grid mismatch");
  const double low = lp_norm_physical(lp_low(f, bank), params.p);
  double tail;
  if (std::isinf(params.q)) {
    tail = 0.0;
    for (int j = 0; j <= bank.j_max(); ++j) {
      const double bj = lp_norm_physical(lp_block(f, j, bank), params.p);
      tail = std::max(tail, std::pow(2.0, j * params.s) * bj);
    }
  } else {
    double s = 0.0;
    for (int j = 0; j <= bank.j_max(); ++j) {
      const double bj = lp_norm_physical(lp_block(f, j, bank), params.p);
      s += std::pow(std::pow(2.0, j * params.s) * bj, params.q);
    }
    tail = std::pow(s, 1.0 / params.q);
  }
  return low + tail;
}

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g) {
  if (f.grid != g.grid || f.ncomp != g.ncomp) throw std::invalid_argument("dealiased_product: shape mismatch");
  const auto& tr = transform_for(f.grid.n, f.grid.N);
  const auto keep = dealias_mask(f.grid);
  const std::size_t M = f.modes();
  SpectralField fd = f, gd = g;
  apply_dealias(fd);
  apply_dealias(gd);
  SpectralField out(f.grid, f.ncomp);
  std::vector<cplx> fp, gp, prod(M), spec(M);
  for (int c = 0; c < f.ncomp; ++c) {
    component_to_physical(fd, c, fp);
    component_to_physical(gd, c, gp);
    for (std::size_t m = 0; m < M; ++m) prod[m] = fp[m] * gp[m];
    tr.to_spectral(prod, spec);
    for (std::size_t m = 0; m < M; ++m) out.at(c, m) = keep[m] ? spec[m] : cplx{0.0, 0.0};
  }
  return out;
}

ParaproductParts paraproduct_decompose(const SpectralField& f, const SpectralField& g,
                                       const LPFilterBank& bank) {
  if (f.grid != g.grid || f.ncomp != g.ncomp) throw std::invalid_argument("paraproduct: shape mismatch");
  if (f.grid != bank.grid()) throw std::invalid_argument("paraproduct: bank grid mismatch");
  const int J = bank.j_max();
  const auto& tr = transform_for(f.grid.n, f.grid.N);
  const auto keep = dealias_mask(f.grid);
  const std::size_t M = f.modes();
  const int nblocks = J + 2;  // block index a = -1 (low part) .. J
  const int nc = f.ncomp;

  SpectralField fd = f, gd = g;
  apply_dealias(fd);
  apply_dealias(gd);

  // physical samples of every block of both fields
  auto blocks_physical = [&](const SpectralField& h) {
    std::vector<std::vector<std::vector<cplx>>> blk(nblocks,
        std::vector<std::vector<cplx>>(nc));
    for (int a = -1; a <= J; ++a) {
      SpectralField piece = (a == -1) ? lp_low(h, bank) : lp_block(h, a, bank);
      for (int c = 0; c < nc; ++c) component_to_physical(piece, c, blk[a + 1][c]);
    }
    return blk;
  };
  const auto fb = blocks_physical(fd);
  const auto gb = blocks_physical(gd);

  std::vector<std::vector<cplx>> acc_lh(nc, std::vector<cplx>(M, cplx{0, 0}));
  std::vector<std::vector<cplx>> acc_hl(nc, std::vector<cplx>(M, cplx{0, 0}));
  std::vector<std::vector<cplx>> acc_rs(nc, std::vector<cplx>(M, cplx{0, 0}));

  // running partial sums S_{k-3} in physical space
  std::vector<std::vector<cplx>> Sf(nc, std::vector<cplx>(M, cplx{0, 0}));
  std::vector<std::vector<cplx>> Sg(nc, std::vector<cplx>(M, cplx{0, 0}));
  for (int k = -1; k <= J; ++k) {
    if (k - 3 >= -1) {  // admit block k-3 into the partial sums
      for (int c = 0; c < nc; ++c) {
        for (std::size_t m = 0; m < M; ++m) {
          Sf[c][m] += fb[k - 3 + 1][c][m];
          Sg[c][m] += gb[k - 3 + 1][c][m];
        }
      }
    }
    for (int c = 0; c < nc; ++c) {
      for (std::size_t m = 0; m < M; ++m) {
        acc_lh[c][m] += Sf[c][m] * gb[k + 1][c][m];
        acc_hl[c][m] += Sg[c][m] * fb[k + 1][c][m];
      }
    }
    for (int l = -2; l <= 2; ++l) {
      const int b = k + l;
      if (b < -1 || b > J) continue;
      for (int c = 0; c < nc; ++c) {
        for (std::size_t m = 0; m < M; ++m) acc_rs[c][m] += fb[k + 1][c][m] * gb[b + 1][c][m];
      }
    }
  }

  auto pack = [&](const std::vector<std::vector<cplx>>& acc) {
    SpectralField out(f.grid, nc);
    std::vector<cplx> spec(M);
    for (int c = 0; c < nc; ++c) {
      tr.to_spectral(acc[c], spec);
      for (std::size_t m = 0; m < M; ++m) out.at(c, m) = keep[m] ? spec[m] : cplx{0.0, 0.0};
    }
    return out;
  };
  return ParaproductParts{pack(acc_lh), pack(acc_hl), pack(acc_rs)};
}

}  // namespace leray
