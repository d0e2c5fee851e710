#pragma once

#include <optional>
#include <string>
#include <vector>

namespace leray {

enum class TheoremVariant { A, B };

struct AdmissibilityParams {
  double gamma1 = 2.0;
  double gamma2 = 1.0;
  int n = 3;
  double p = 2.0;
  double s1 = 0.0;
  double s2 = 0.5;
  bool log_variant = false;   // substitute gamma1 - eps in every gamma1 restriction
  double eps_log = 0.05;
};

struct InequalityCheck {
  std::string text;
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct WitnessB {
  double M, r, r1, r2;
};

// Per-inequality evaluation of the local-existence parameter lists.
// Variant A: s2 > gamma2 >= k, k p < n, s2 - s1 < min(gamma1/2, 1),
//            gamma1 >= s2 - s1 + 1 + n/p - k, witnessed by a grid search
//            over k in (0, gamma2].
// Variant B: 0 < s2-s1 < gamma1/2, s1 > gamma2 - n/p - 1,
//            gamma1 >= 2 s2 - s1 - gamma2 + n/p + 1, n/p > gamma2/2,
//            s2 >= gamma2/2; an interior witness M > 0 (with r, r1, r2) is
//            searched and reported when one exists.
struct AdmissibilityResult {
  TheoremVariant variant;
  bool log_variant = false;
  bool admissible = false;                 // conjunction of the checks below
  std::vector<InequalityCheck> checks;
  std::optional<double> witness_k;         // variant A
  std::optional<WitnessB> witness_b;       // variant B
  std::string failed_inequality;           // first failing check, empty if none
};

AdmissibilityResult check_admissibility(const AdmissibilityParams& params, TheoremVariant variant);

}  // namespace leray
