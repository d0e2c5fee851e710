#pragma once

#include <vector>

#include "leray/field.hpp"

namespace leray {

// Smooth cutoff: theta(r) = 1 for r <= 1, 0 for r >= 2, monotone C^inf glue
// in between. psi0(r) = theta(r) - theta(2r) is supported in (1/2, 2) and
// its dyadic dilates telescope to a partition of unity away from 0.
double lp_theta(double r);
double lp_psi0(double r);

// Integrability/summability triple of a Besov norm; infinity allowed.
struct BesovParams {
  double s = 0.0;
  double p = 2.0;
  double q = 2.0;
  BesovParams() = default;
  BesovParams(double s_, double p_, double q_);
};

// Discrete Littlewood-Paley family on a grid: psi_j multipliers for
// j = 0..J_max with J_max = log2(N/2) - 1, plus the low-frequency Psi.
// The retained family is an exact partition of unity on |xi| <= 2^{J_max}
// (the covered band); construction verifies this and throws on residuals
// above 1e-12.
class LPFilterBank {
public:
  explicit LPFilterBank(const TorusGrid& grid);

  const TorusGrid& grid() const { return grid_; }
  int j_max() const { return j_max_; }
  double covered_radius() const { return covered_radius_; }

  const std::vector<double>& psi_hat(int j) const;
  const std::vector<double>& big_psi_hat() const { return big_psi_; }

  // annulus descriptor: support of psi_j is (2^{j-1}, 2^{j+1})
  std::pair<double, double> annulus(int j) const;

  double partition_residual() const;  // max over the covered band

private:
  TorusGrid grid_;
  int j_max_;
  double covered_radius_;
  std::vector<std::vector<double>> psi_;
  std::vector<double> big_psi_;
};

LPFilterBank build_filter_bank(const TorusGrid& grid);

// Frequency-localized block Delta_j f (mode-wise psi_j multiplier),
// 0 <= j <= J_max.
SpectralField lp_block(const SpectralField& f, int j, const LPFilterBank& bank);
// Low-frequency part Psi * f.
SpectralField lp_low(const SpectralField& f, const LPFilterBank& bank);
// S_j f = Psi*f + sum_{0 <= k <= j} Delta_k f (everything at and below
// block j); j = -1 gives the low part alone.
SpectralField lp_partial_sum(const SpectralField& f, int j, const LPFilterBank& bank);

// ||Psi*f||_p + ( sum_j (2^{js} ||Delta_j f||_p)^q )^{1/q}, max over j when
// q = inf. The same block-sum formula is used for every s.
double besov_norm(const SpectralField& f, const BesovParams& params, const LPFilterBank& bank);

struct ParaproductParts {
  SpectralField low_high;   // T_f g: sum_k S_{k-3} f . Delta_k g
  SpectralField high_low;   // T_g f
  SpectralField resonant;   // R(f, g): |block difference| <= 2 pairs
};

// Bony decomposition of the dealiased product f.g; the three parts sum to
// the dealiased product exactly (all pairwise products use the same mask).
ParaproductParts paraproduct_decompose(const SpectralField& f, const SpectralField& g,
                                       const LPFilterBank& bank);

// Dealiased pointwise product of two fields of equal component count.
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g);

}  // namespace leray
