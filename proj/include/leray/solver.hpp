#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "leray/admissibility.hpp"
#include "leray/besov.hpp"
#include "leray/multiplier_checks.hpp"
#include "leray/operators.hpp"
#include "leray/symbols.hpp"

namespace leray {

struct InitialDataSpec {
  std::string kind = "taylor_green_2d";  // taylor_green_2d | random_divfree | single_mode
  double sigma = 2.0;                    // random_divfree spectrum exponent
  double amplitude = 1.0;                // L2 norm (random) or mode amplitude scale
  std::array<int, 3> mode{1, 0, 0};      // single_mode wavevector
  std::array<double, 3> direction{0.0, 1.0, 0.0};  // single_mode amplitude vector
};

struct SolverConfig {
  int n = 2;
  int N = 32;
  double L = 2.0 * M_PI;
  double alpha = 0.0;
  double nu = 1.0;
  double gamma1 = 2.0;
  std::string g1_id = "constant_one";
  std::vector<double> g1_params;
  double gamma2 = 2.0;
  std::string g2_id = "constant_one";
  std::vector<double> g2_params;
  double s1 = 0.0, s2 = 0.5, p = 2.0, q = 2.0;
  double T = 1.0;
  double dt = 1e-3;
  WForm w_variant = WForm::OneMinusAlphaL2;
  std::uint64_t seed = 1;
  int output_cadence = 10;
  InitialDataSpec initial_data;
  bool disable_nonlinear = false;
  double blowup_factor = 1e6;
  double eps_log = 0.05;

  void validate() const;
  TorusGrid grid() const { return TorusGrid(n, N, L); }
  SymbolSpec dissipation() const { return registered_g(g1_id, gamma1, g1_params); }
  SymbolSpec regularization() const { return registered_g(g2_id, gamma2, g2_params); }
  double weight_a() const { return (s2 - s1) / gamma1; }
};

struct TrajectorySample {
  double t = 0.0;
  SpectralField u;
  double l2 = 0.0;
  double hs1 = 0.0;        // H^{s1,2}
  double bs1 = 0.0;        // B^{s1}_{p,q}
  double bs2 = 0.0;        // B^{s2}_{p,q}
  double weighted_bs2 = 0.0;  // t^a ||u||_{B^{s2}_{p,q}}
};

struct Trajectory {
  SolverConfig config;
  std::vector<TrajectorySample> samples;
  bool blown_up = false;
  double blowup_time = 0.0;
  int steps_taken = 0;
};

// kind-dispatching construction of divergence-free initial data;
// taylor_green_2d requires n = 2.
SpectralField make_initial_data(const InitialDataSpec& spec, const TorusGrid& grid,
                                std::uint64_t seed);

// Mild-form time integration by the integrating-factor midpoint scheme:
// exponential predictor to the half step, corrector with the midpoint
// evaluation of W, divergence-free re-projection each step. Blow-up
// (L2 above blowup_factor x initial, or non-finite values) truncates the
// trajectory and flags it.
Trajectory integrate(const SpectralField& u0, const SolverConfig& config);

struct PicardResult {
  std::vector<double> times;
  std::vector<SpectralField> final_iterate;
  std::vector<double> contraction_ratios;   // rho_m, m = 1..n_iter-1
  std::vector<double> x_distances;          // d(u^{m+1}, u^m), m = 0..n_iter-1
  bool blown_up = false;
};

// Trajectory-space fixed-point iteration u^{m+1} = e^{t nu L1} u0 -
// int_0^t e^{(t-s) nu L1} W(u^m, u^m) ds on the fixed step grid, with the
// Duhamel integral evaluated by the midpoint exponential quadrature on the
// stored iterate (linear interpolation at half steps). Distances are taken
// in the weighted trajectory metric sup ||.||_{B^{s1}} + sup t^a ||.||_{B^{s2}}.
PicardResult picard_iterate(const SpectralField& u0, const SolverConfig& config, int n_iter);

struct XNormReport {
  double sup_deviation_bs1 = 0.0;   // sup_t ||u(t) - e^{t nu L1} u0||_{B^{s1}}
  double sup_weighted_bs2 = 0.0;    // sup_t t^a ||u(t)||_{B^{s2}}
  double small_time_weighted = 0.0; // earliest positive-time value of t^a ||u||_{B^{s2}}
  double argmax_t_dev = 0.0;
  double argmax_t_weighted = 0.0;
};

XNormReport monitor_X_norm(const Trajectory& traj, double s1, double s2, double p, double q,
                           double gamma1);

struct SmoothingRow {
  double r = 0.0;
  double supremum = 0.0;       // sup_t t^{(r - s1)/gamma1} ||u||_{B^r_{p,q}}
  double attained_t = 0.0;
  double supremum_half = 0.0;  // same with exponent (r - s1)/2
};

std::vector<SmoothingRow> smoothing_diagnostic(const Trajectory& traj, const std::vector<double>& r_list,
                                               double s1, double gamma1);

enum class GlobalVerdict { GlobalRegime, LocalOnly };

struct GlobalCriterionResult {
  GlobalVerdict verdict = GlobalVerdict::LocalOnly;
  bool rate_condition = false;        // 2 gamma1 + gamma2 >= 5
  IntegralVerdict integral_verdict = IntegralVerdict::Convergent;
  std::vector<std::string> warnings;  // scope advisories (n != 3, p != 2)
  EstimateReport integral_report;
};

GlobalCriterionResult global_criterion_monitor(const SolverConfig& config);

}  // namespace leray
