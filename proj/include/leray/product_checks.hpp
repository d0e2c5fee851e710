#pragma once

#include "leray/besov.hpp"
#include "leray/estimates.hpp"
#include "leray/sampling.hpp"

namespace leray {

struct ProductSampleSpec {
  int count = 100;
  double sigma = 2.0;
  std::uint64_t seed = 7;
  double cutoff = 0.0;  // 0: min(N/6, covered band), resolvable on refinement
};

struct HolderSplit {
  double p1, p2, q1, q2;  // 1/p = 1/p1 + 1/p2 = 1/q1 + 1/q2
};

// ||fg||_{B^s_{p,q}} / (||f||_{L^{p1}} ||g||_{B^s_{p2,q}} +
//                       ||f||_{B^s_{q1,q}} ||g||_{L^{q2}})
// max over seeded random scalar pairs; zero-denominator samples are skipped.
// Throws std::invalid_argument naming the failed hypothesis for s <= 0 or an
// inconsistent Holder split.
EstimateReport verify_product_est_standard(const LPFilterBank& bank, double s, double p, double q,
                                           const HolderSplit& split,
                                           const ProductSampleSpec& samples = {},
                                           double c_max = 100.0);

// ||fg||_{B^s_{p,q}} / (||f||_{B^{s1}_{p1,q}} ||g||_{B^{s2}_{p2,q}}) with
// s = s1 + s2 - n(1/p1 + 1/p2 - 1/p). Hypothesis violations are rejected with
// the specific failed inequality named ("s1 < n/p1", "s2 < n/p2",
// "s1 + s2 > 0", "1/p <= 1/p1 + 1/p2").
EstimateReport verify_product_est_chemin(const LPFilterBank& bank, double s1, double s2, double p1,
                                         double p2, double p, double q,
                                         const ProductSampleSpec& samples = {},
                                         double c_max = 100.0);

enum class EmbeddingKind {
  SummabilityMonotone,   // B^{b2}_{p,q1} -> B^{b1}_{p,q2}: q1 <= q2, b1 <= b2
  IntegrabilityTrade,    // B^{g1}_{p1,q} -> B^{g2}_{p2,q}: p1 <= p2, g1 = g2 + n(1/p1 - 1/p2)
  BesovToSobolev,        // ||f||_{H^{s,p}} <= C ||f||_{B^r_{p,q}}: r > s > 0
  SobolevBesovL2         // ||f||_{H^{s,2}} ~ ||f||_{B^s_{2,2}} <= C ||f||_{B^r_{2,q}}
};

struct EmbeddingCase {
  EmbeddingKind kind;
  double a1 = 0.0, a2 = 0.0;  // smoothness pair (b1,b2), (g1,g2) or (s,r)
  double p1 = 2.0, p2 = 2.0;
  double q1 = 2.0, q2 = 2.0;
};

// Checks one embedding inequality on seeded samples, reporting the fitted
// constant (max ratio). Invalid parameter orderings are rejected by name.
EstimateReport verify_embedding(const LPFilterBank& bank, const EmbeddingCase& c,
                                const ProductSampleSpec& samples = {}, double c_max = 100.0);

}  // namespace leray
