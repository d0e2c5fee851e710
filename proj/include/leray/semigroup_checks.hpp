#pragma once

#include "leray/estimates.hpp"
#include "leray/symbols.hpp"

namespace leray {

struct SemigroupRateOptions {
  std::vector<double> t_grid;   // empty: log-spaced default per gamma
  int N = 0;                    // 0: auto-resolved from t range and gamma
  double slope_tol = 0.1;       // pass iff slope <= predicted + tol
  double log_band = 0.25;       // extra negative slack allowed for log-class g
};

// Empirical L^p -> L^q smoothing rate of exp(t L): the max ratio
// ||e^{tL} f||_q / ||f||_p over a deterministic family of near-extremal
// sample fields (semigroup-kernel snapshots across a geometric time family,
// plus a lowest-mode field), slope-fitted against t. Predicted exponent is
// -(n/p - n/q)/gamma; for log-class g the report also carries the degraded
// band edge -(n/p - n/q)/gamma - log_band.
EstimateReport verify_semigroup_lp_lq(const SymbolSpec& s, int n, double p, double q,
                                      const SemigroupRateOptions& opt = {});

struct SobolevRateOptions {
  std::vector<double> t_grid;
  int N = 0;
  int n = 2;
  double slope_tol = 0.1;
  double log_band = 0.25;
};

// Empirical H^{s1,p} -> H^{s2,p} smoothing rate of exp(t L), measured as the
// max ratio over single-mode fields at quarter-octave radii. Predicted
// exponent is -(s2 - s1)/gamma.
EstimateReport verify_sobolev_smoothing(const SymbolSpec& s, double s1, double s2, double p,
                                        const SobolevRateOptions& opt = {});

}  // namespace leray
