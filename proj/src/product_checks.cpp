#include "leray/product_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace leray {

namespace {

double inv(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

double sample_cutoff(const LPFilterBank& bank, const ProductSampleSpec& spec) {
  if (spec.cutoff > 0.0) return spec.cutoff;
  return std::min(bank.grid().N / 6.0, bank.covered_radius());
}

SpectralField sample_scalar(const LPFilterBank& bank, const ProductSampleSpec& spec, int index) {
  RandomFieldSpec rf;
  rf.sigma = spec.sigma;
  rf.amplitude = 1.0;
  rf.seed = spec.seed + 1000003ull * static_cast<std::uint64_t>(index);
  rf.cutoff = sample_cutoff(bank, spec);
  rf.ncomp = 1;
  return random_field(bank.grid(), rf);
}

std::string grid_desc(const LPFilterBank& bank, const ProductSampleSpec& spec) {
  std::ostringstream os;
  os << "torus n=" << bank.grid().n << " N=" << bank.grid().N << ", spectra (1+|k|)^-" << spec.sigma
     << " cut at " << sample_cutoff(bank, spec);
  return os.str();
}

}  // namespace

EstimateReport verify_product_est_standard(const LPFilterBank& bank, double s, double p, double q,
                                           const HolderSplit& split, const ProductSampleSpec& samples,
                                           double c_max) {
  if (!(s > 0.0)) throw std::invalid_argument("product_est_standard: hypothesis failed: s > 0");
  if (std::abs(inv(p) - inv(split.p1) - inv(split.p2)) > 1e-12 ||
      std::abs(inv(p) - inv(split.q1) - inv(split.q2)) > 1e-12) {
    throw std::invalid_argument("product_est_standard: invalid Holder split: 1/p = 1/p1+1/p2 = 1/q1+1/q2");
  }
  const BesovParams bs_pq{s, p, q};
  const BesovParams bs_p2q{s, split.p2, q};
  const BesovParams bs_q1q{s, split.q1, q};

  double worst = 0.0;
  int used = 0;
  for (int i = 0; i < samples.count; ++i) {
    const SpectralField f = sample_scalar(bank, samples, 2 * i);
    const SpectralField g = sample_scalar(bank, samples, 2 * i + 1);
    const double denom = lp_norm_physical(f, split.p1) * besov_norm(g, bs_p2q, bank) +
                         besov_norm(f, bs_q1q, bank) * lp_norm_physical(g, split.q2);
    if (denom <= 0.0) continue;
    const SpectralField fg = dealiased_product(f, g);
    worst = std::max(worst, besov_norm(fg, bs_pq, bank) / denom);
    ++used;
  }

  EstimateReport rep;
  rep.check = "product_est_standard";
  {
    std::ostringstream os;
    os << "s=" << s << " p=" << p << " q=" << q << " split(" << split.p1 << "," << split.p2 << ","
       << split.q1 << "," << split.q2 << ")";
    rep.case_label = os.str();
  }
  rep.params["s"] = s;
  rep.params["p"] = p;
  rep.params["q"] = q;
  rep.params["p1"] = split.p1;
  rep.params["p2"] = split.p2;
  rep.params["q1"] = split.q1;
  rep.params["q2"] = split.q2;
  rep.grid_desc = grid_desc(bank, samples);
  rep.n_samples = used;
  rep.fitted_constant = worst;
  rep.tolerance = c_max;
  rep.pass = used > 0 && worst <= c_max;
  if (used == 0) rep.note = "all samples skipped (zero denominators)";
  return rep;
}

EstimateReport verify_product_est_chemin(const LPFilterBank& bank, double s1, double s2, double p1,
                                         double p2, double p, double q,
                                         const ProductSampleSpec& samples, double c_max) {
  const int n = bank.grid().n;
  if (!(s1 + s2 > 0.0)) throw std::invalid_argument("product_est_chemin: hypothesis failed: s1+s2>0");
  if (!(s1 < n * inv(p1))) throw std::invalid_argument("product_est_chemin: hypothesis failed: s1<n/p1");
  if (!(s2 < n * inv(p2))) throw std::invalid_argument("product_est_chemin: hypothesis failed: s2<n/p2");
  if (inv(p) > inv(p1) + inv(p2) + 1e-12) {
    throw std::invalid_argument("product_est_chemin: hypothesis failed: 1/p<=1/p1+1/p2");
  }
  const double s = s1 + s2 - n * (inv(p1) + inv(p2) - inv(p));

  const BesovParams out_params{s, p, q};
  const BesovParams f_params{s1, p1, q};
  const BesovParams g_params{s2, p2, q};

  double worst = 0.0;
  int used = 0;
  for (int i = 0; i < samples.count; ++i) {
    const SpectralField f = sample_scalar(bank, samples, 2 * i);
    const SpectralField g = sample_scalar(bank, samples, 2 * i + 1);
    const double denom = besov_norm(f, f_params, bank) * besov_norm(g, g_params, bank);
    if (denom <= 0.0) continue;
    const SpectralField fg = dealiased_product(f, g);
    worst = std::max(worst, besov_norm(fg, out_params, bank) / denom);
    ++used;
  }

  EstimateReport rep;
  rep.check = "product_est_chemin";
  {
    std::ostringstream os;
    os << "s1=" << s1 << " s2=" << s2 << " p1=" << p1 << " p2=" << p2 << " p=" << p << " q=" << q
       << " -> s=" << s;
    rep.case_label = os.str();
  }
  rep.params["s1"] = s1;
  rep.params["s2"] = s2;
  rep.params["p1"] = p1;
  rep.params["p2"] = p2;
  rep.params["p"] = p;
  rep.params["q"] = q;
  rep.params["s"] = s;
  rep.grid_desc = grid_desc(bank, samples);
  rep.n_samples = used;
  rep.fitted_constant = worst;
  rep.tolerance = c_max;
  rep.pass = used > 0 && worst <= c_max;
  if (used == 0) rep.note = "all samples skipped (zero denominators)";
  return rep;
}

EstimateReport verify_embedding(const LPFilterBank& bank, const EmbeddingCase& c,
                                const ProductSampleSpec& samples, double c_max) {
  const int n = bank.grid().n;
  EstimateReport rep;
  rep.check = "besov_embedding";
  rep.grid_desc = grid_desc(bank, samples);
  rep.tolerance = c_max;

  auto run_ratio = [&](auto&& numer, auto&& denom, const std::string& label) {
    double worst = 0.0;
    int used = 0;
    for (int i = 0; i < samples.count; ++i) {
      const SpectralField f = sample_scalar(bank, samples, i);
      const double d = denom(f);
      if (d <= 0.0) continue;
      worst = std::max(worst, numer(f) / d);
      ++used;
    }
    rep.case_label = label;
    rep.n_samples = used;
    rep.fitted_constant = worst;
    rep.pass = used > 0 && worst <= c_max;
  };

  switch (c.kind) {
    case EmbeddingKind::SummabilityMonotone: {
      if (!(c.q1 <= c.q2) || !(c.a1 <= c.a2)) {
        throw std::invalid_argument("embedding: hypothesis failed: q1<=q2 and b1<=b2");
      }
      const BesovParams lhs{c.a1, c.p1, c.q2}, rhs{c.a2, c.p1, c.q1};
      std::ostringstream os;
      os << "B^" << c.a2 << "_{" << c.p1 << "," << c.q1 << "} -> B^" << c.a1 << "_{" << c.p1 << ","
         << c.q2 << "}";
      run_ratio([&](const SpectralField& f) { return besov_norm(f, lhs, bank); },
                [&](const SpectralField& f) { return besov_norm(f, rhs, bank); }, os.str());
      break;
    }
    case EmbeddingKind::IntegrabilityTrade: {
      if (!(c.p1 <= c.p2)) throw std::invalid_argument("embedding: hypothesis failed: p1<=p2");
      const double expect = c.a2 + n * (inv(c.p1) - inv(c.p2));
      if (std::abs(c.a1 - expect) > 1e-12) {
        throw std::invalid_argument("embedding: hypothesis failed: g1=g2+n(1/p1-1/p2)");
      }
      const BesovParams lhs{c.a2, c.p2, c.q1}, rhs{c.a1, c.p1, c.q1};
      std::ostringstream os;
      os << "B^" << c.a1 << "_{" << c.p1 << "," << c.q1 << "} -> B^" << c.a2 << "_{" << c.p2 << ","
         << c.q1 << "}";
      run_ratio([&](const SpectralField& f) { return besov_norm(f, lhs, bank); },
                [&](const SpectralField& f) { return besov_norm(f, rhs, bank); }, os.str());
      break;
    }
    case EmbeddingKind::BesovToSobolev: {
      if (!(c.a2 > c.a1) || !(c.a1 > 0.0)) {
        throw std::invalid_argument("embedding: hypothesis failed: r>s>0");
      }
      const BesovParams rhs{c.a2, c.p1, c.q1};
      std::ostringstream os;
      os << "H^{" << c.a1 << "," << c.p1 << "} <= C B^" << c.a2 << "_{" << c.p1 << "," << c.q1 << "}";
      run_ratio([&](const SpectralField& f) { return sobolev_norm(f, c.a1, c.p1); },
                [&](const SpectralField& f) { return besov_norm(f, rhs, bank); }, os.str());
      break;
    }
    case EmbeddingKind::SobolevBesovL2: {
      const BesovParams b22{c.a1, 2.0, 2.0};
      std::ostringstream os;
      os << "H^{" << c.a1 << ",2} ~ B^" << c.a1 << "_{2,2}";
      double worst = 0.0, best = std::numeric_limits<double>::infinity();
      int used = 0;
      for (int i = 0; i < samples.count; ++i) {
        const SpectralField f = sample_scalar(bank, samples, i);
        const double hs = sobolev_norm(f, c.a1, 2.0);
        if (hs <= 0.0) continue;
        const double ratio = besov_norm(f, b22, bank) / hs;
        worst = std::max(worst, ratio);
        best = std::min(best, ratio);
        ++used;
      }
      rep.case_label = os.str();
      rep.n_samples = used;
      rep.fitted_constant = worst;
      rep.params["min_ratio"] = best;
      rep.pass = used > 0 && worst <= c_max && best >= 1.0 / c_max;
      break;
    }
  }
  return rep;
}

}  // namespace leray
