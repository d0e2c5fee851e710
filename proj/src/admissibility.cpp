#include "leray/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace leray {

namespace {

InequalityCheck make_check(const std::string& text, double lhs, double rhs, bool holds) {
  return InequalityCheck{text, holds, lhs, rhs};
}

void finalize(AdmissibilityResult& res) {
  res.admissible = true;
  for (const auto& c : res.checks) {
    if (!c.holds) {
      res.admissible = false;
      if (res.failed_inequality.empty()) res.failed_inequality = c.text;
    }
  }
}

}  // namespace

AdmissibilityResult check_admissibility(const AdmissibilityParams& params, TheoremVariant variant) {
  if (!(params.p >= 1.0)) throw std::invalid_argument("check_admissibility: p must be >= 1");
  const double g1 = params.log_variant ? params.gamma1 - params.eps_log : params.gamma1;
  const double g2 = params.gamma2;
  const double np = params.n / params.p;
  const double s1 = params.s1, s2 = params.s2;

  AdmissibilityResult res;
  res.variant = variant;
  res.log_variant = params.log_variant;

  res.checks.push_back(make_check("gamma1 > 1", g1, 1.0, g1 > 1.0));
  res.checks.push_back(make_check("gamma2 > 0", g2, 0.0, g2 > 0.0));
  res.checks.push_back(make_check("s2 - s1 > 0", s2 - s1, 0.0, s2 - s1 > 0.0));

  if (variant == TheoremVariant::A) {
    res.checks.push_back(make_check("s2 > gamma2", s2, g2, s2 > g2));
    const double cap = std::min(g1 / 2.0, 1.0);
    res.checks.push_back(make_check("s2 - s1 < min(gamma1/2, 1)", s2 - s1, cap, s2 - s1 < cap));

    // witness search: k in (0, gamma2], k p < n, gamma1 >= s2-s1+1+n/p-k
    bool found = false;
    double k_witness = 0.0;
    if (g2 > 0.0) {
      const int steps = 4000;
      for (int i = steps; i >= 1; --i) {
        const double k = g2 * static_cast<double>(i) / steps;
        if (!(k * params.p < params.n)) continue;
        if (g1 >= s2 - s1 + 1.0 + np - k) {
          found = true;
          k_witness = k;
          break;
        }
      }
    }
    const double needed = s2 - s1 + 1.0 + np - (found ? k_witness : std::min(g2, np));
    res.checks.push_back(
        make_check("exists k in (0,gamma2], kp<n: gamma1 >= s2-s1+1+n/p-k", g1, needed, found));
    if (found) res.witness_k = k_witness;
  } else {
    res.checks.push_back(make_check("s2 - s1 < gamma1/2", s2 - s1, g1 / 2.0, s2 - s1 < g1 / 2.0));
    res.checks.push_back(make_check("s1 > gamma2 - n/p - 1", s1, g2 - np - 1.0, s1 > g2 - np - 1.0));
    res.checks.push_back(make_check("gamma1 >= 2 s2 - s1 - gamma2 + n/p + 1", g1,
                                    2.0 * s2 - s1 - g2 + np + 1.0, g1 >= 2.0 * s2 - s1 - g2 + np + 1.0));
    res.checks.push_back(make_check("n/p > gamma2/2", np, g2 / 2.0, np > g2 / 2.0));
    res.checks.push_back(make_check("s2 >= gamma2/2", s2, g2 / 2.0, s2 >= g2 / 2.0));

    // interior witness M > 0 with the pre-elimination list
    const double m_cap = np - g2 / 2.0;
    if (m_cap > 0.0) {
      const int steps = 4000;
      for (int i = steps; i >= 1; --i) {
        const double M = m_cap * static_cast<double>(i) / (steps + 1);
        const bool ok = (s1 >= g2 + M - np - 1.0) && (g1 >= 2.0 * s2 - s1 - g2 - M + np + 1.0) &&
                        (np > g2 / 2.0 + M) && (s2 >= g2 / 2.0 + M);
        if (ok) {
          res.witness_b = WitnessB{M, -1.0 + g2 + M - np, g2 / 2.0 + M, -g2 / 2.0};
          break;
        }
      }
    }
  }

  finalize(res);
  return res;
}

}  // namespace leray
