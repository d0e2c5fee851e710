#pragma once

#include "leray/estimates.hpp"
#include "leray/symbols.hpp"

namespace leray {

// sup over r_grid of |g^{(k)}(r)| r^k for each 1 <= k <= k_max; passes iff
// every supremum is finite and <= c_max.
EstimateReport check_mikhlin(const SymbolSpec& s, int k_max, const std::vector<double>& r_grid,
                             double c_max = 1e3);
EstimateReport check_mikhlin(const SymbolSpec& s, int k_max);  // default grid [1e-3, 1e6], 241 pts

struct KernelConditionOptions {
  double exponent_tol = 0.1;   // pass iff fitted t-exponent >= -tol
  double quad_rel_tol = 1e-6;
  double zero_floor = 1e-8;    // values below this count as exactly t-independent
};

// Bounds the (n+1)-th radial derivative mass of the rescaled semigroup
// kernel profile r^{n-1} exp(-r^gamma / g(r t^{-1/gamma})) over t in (0, 1).
// The headline sup and fitted t-exponent use the termwise quantity
// int |d^{n+1}_r (.)| dr; the literal signed |int d^{n+1}_r (.) dr| is
// reported alongside (params key "literal_signed_sup"). Quadrature
// non-convergence is reported, never silently passed.
EstimateReport check_kernel_condition(const SymbolSpec& s, double gamma, int n,
                                      const std::vector<double>& t_grid,
                                      const KernelConditionOptions& opt = {});
EstimateReport check_kernel_condition(const SymbolSpec& s, double gamma, int n);  // default t grid

enum class IntegralVerdict { Divergent, Convergent };

struct GlobalIntegralResult {
  EstimateReport report;
  IntegralVerdict verdict = IntegralVerdict::Convergent;
  double partial_integral = 0.0;   // I(R_max)
  double last_slope = 0.0;         // dI / dlog R at the top of the ladder
};

// Doubling-ladder classification of int_1^inf ds / (s g1(s)^2 g2(s)):
// DIVERGENT when the per-doubling increments decay slower than any power
// (successive increment ratios stay near 1), CONVERGENT when they collapse
// geometrically.
GlobalIntegralResult check_global_integral(const SymbolSpec& g1, const SymbolSpec& g2,
                                           double r_max = double(1 << 30), double rho_min = 0.85);

}  // namespace leray
