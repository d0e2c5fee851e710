#include "leray/multiplier_checks.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "leray/detail/jets.hpp"

namespace leray {

using detail::Jet;

EstimateReport check_mikhlin(const SymbolSpec& s, int k_max, const std::vector<double>& r_grid,
                             double c_max) {
  if (k_max < 1 || k_max > 4) throw std::invalid_argument("check_mikhlin: k_max must be in [1,4]");
  EstimateReport rep;
  rep.check = "mikhlin";
  rep.case_label = s.g->describe();
  rep.params["k_max"] = k_max;
  rep.params["c_max"] = c_max;
  rep.n_samples = static_cast<int>(r_grid.size());
  {
    std::ostringstream os;
    os << "r in [" << r_grid.front() << ", " << r_grid.back() << "], " << r_grid.size() << " log-spaced";
    rep.grid_desc = os.str();
  }
  double worst = 0.0;
  int worst_k = 0;
  try {
    for (int k = 1; k <= k_max; ++k) {
      double sup = 0.0;
      for (double r : r_grid) {
        const double v = std::abs(s.g_derivative(k, r)) * std::pow(r, k);
        if (!std::isfinite(v)) throw std::runtime_error("derivative evaluation failure");
        sup = std::max(sup, v);
      }
      std::ostringstream key;
      key << "sup_k" << k;
      rep.params[key.str()] = sup;
      if (sup > worst) {
        worst = sup;
        worst_k = k;
      }
    }
  } catch (const std::exception& e) {
    rep.pass = false;
    rep.note = std::string("derivative evaluation failure: ") + e.what();
    return rep;
  }
  rep.fitted_constant = worst;
  rep.tolerance = c_max;
  rep.pass = worst <= c_max;
  if (!rep.pass) {
    std::ostringstream os;
    os << "sup |g^(" << worst_k << ")| r^" << worst_k << " = " << worst << " exceeds " << c_max;
    rep.note = os.str();
  }
  return rep;
}

EstimateReport check_mikhlin(const SymbolSpec& s, int k_max) {
  return check_mikhlin(s, k_max, log_spaced(1e-3, 1e6, 241));
}

namespace {

// Radial derivative of order `order` of r^{n-1} exp(-r^gamma / g(c r)) with
// c = t^{-1/gamma}, assembled from closed-form jets of each factor.
class KernelProfile {
public:
  KernelProfile(const SymbolSpec& s, double gamma, int n, double t)
      : s_(s), gamma_(gamma), n_(n), c_(std::pow(t, -1.0 / gamma)) {}

  double derivative(double r, int order) const {
    // g(c r) jet
    Jet gj{};
    gj[0] = s_.g_value(c_ * r);
    double cp = c_;
    for (int k = 1; k <= detail::JET_ORDER; ++k) {
      gj[k] = cp * s_.g_derivative(k, c_ * r);
      cp *= c_;
    }
    const Jet psi = detail::jet_mul(detail::jet_rpow(r, gamma_), detail::jet_recip(gj));
    const Jet E = detail::jet_exp_neg(psi);
    const Jet F = detail::jet_mul(detail::jet_rmono(r, n_ - 1), E);
    return F[order];
  }

  // exp(-r^gamma / g(c r)), used for the integration cutoff
  double envelope(double r) const { return std::exp(-std::pow(r, gamma_) / s_.g_value(c_ * r)); }

private:
  const SymbolSpec& s_;
  double gamma_;
  int n_;
  double c_;
};

double find_cutoff(const KernelProfile& prof) {
  double R = 1.0;
  while (prof.envelope(R) > 1e-30 && R < 1e9) R *= 2.0;
  return R;
}

}  // namespace

EstimateReport check_kernel_condition(const SymbolSpec& s, double gamma, int n,
                                      const std::vector<double>& t_grid,
                                      const KernelConditionOptions& opt) {
  if (!(gamma > 0.0)) throw std::invalid_argument("check_kernel_condition: gamma must be positive");
  if (n < 1 || n > 3) throw std::invalid_argument("check_kernel_condition: n must be 1, 2, or 3");
  if (t_grid.size() < 20) throw std::invalid_argument("check_kernel_condition: need >= 20 t samples in (0,1)");
  for (double t : t_grid) {
    if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("check_kernel_condition: t grid must lie in (0,1)");
  }

  EstimateReport rep;
  rep.check = "kernel_condition";
  rep.case_label = s.g->describe();
  rep.params["gamma"] = gamma;
  rep.params["n"] = n;
  {
    std::ostringstream os;
    os << "t in [" << t_grid.front() << ", " << t_grid.back() << "], " << t_grid.size() << " log-spaced";
    rep.grid_desc = os.str();
  }
  rep.n_samples = static_cast<int>(t_grid.size());

  const int order = n + 1;
  std::vector<double> abs_vals, signed_vals;
  bool all_converged = true;
  for (double t : t_grid) {
    KernelProfile prof(s, gamma, n, t);
    const double R = find_cutoff(prof);
    auto abs_integrand = [&](double r) { return std::abs(prof.derivative(r, order)); };
    auto signed_integrand = [&](double r) { return prof.derivative(r, order); };
    const LadderResult la = lower_endpoint_ladder(abs_integrand, std::min(1.0, R / 4.0), R, opt.quad_rel_tol);
    const LadderResult ls = lower_endpoint_ladder(signed_integrand, std::min(1.0, R / 4.0), R, opt.quad_rel_tol);
    if (!la.converged) all_converged = false;
    abs_vals.push_back(la.value);
    signed_vals.push_back(std::abs(ls.value));
  }

  const double sup_abs = *std::max_element(abs_vals.begin(), abs_vals.end());
  const double sup_signed = *std::max_element(signed_vals.begin(), signed_vals.end());
  rep.fitted_constant = sup_abs;
  rep.params["literal_signed_sup"] = sup_signed;
  rep.predicted_exponent = 0.0;
  rep.tolerance = opt.exponent_tol;

  if (!all_converged) {
    rep.pass = false;
    rep.note = "quadrature non-convergent (endpoint mass grows under refinement)";
    rep.fitted_exponent = std::nan("");
    return rep;
  }

  if (sup_abs <= opt.zero_floor) {
    rep.fitted_exponent = 0.0;  // values at the noise floor: exactly bounded
  } else {
    std::vector<double> ts(t_grid.begin(), t_grid.end());
    rep.fitted_exponent = fit_loglog(ts, abs_vals).slope;
  }
  rep.pass = rep.fitted_exponent >= -opt.exponent_tol;
  if (!rep.pass) {
    std::ostringstream os;
    os << "fitted t-exponent " << rep.fitted_exponent << " below -" << opt.exponent_tol;
    rep.note = os.str();
  }
  return rep;
}

EstimateReport check_kernel_condition(const SymbolSpec& s, double gamma, int n) {
  return check_kernel_condition(s, gamma, n, log_spaced(1e-3, 0.9, 24));
}

GlobalIntegralResult check_global_integral(const SymbolSpec& g1, const SymbolSpec& g2, double r_max,
                                           double rho_min) {
  if (!(r_max >= 1e6)) throw std::invalid_argument("check_global_integral: r_max must be >= 1e6");
  GlobalIntegralResult res;
  EstimateReport& rep = res.report;
  rep.check = "global_integral";
  rep.case_label = "g1=" + g1.g->describe() + ", g2=" + g2.g->describe();
  rep.params["r_max"] = r_max;
  rep.params["rho_min"] = rho_min;

  auto integrand = [&](double sv) {
    const double d1 = g1.g_value(sv);
    return 1.0 / (sv * d1 * d1 * g2.g_value(sv));
  };

  const int rungs = static_cast<int>(std::ceil(std::log2(r_max)));
  std::vector<double> increments;
  double total = 0.0;
  double lo = 1.0;
  for (int m = 0; m < rungs; ++m) {
    const double hi = lo * 2.0;
    const double inc = adaptive_simpson(integrand, lo, hi, 1e-12);
    increments.push_back(inc);
    total += inc;
    lo = hi;
  }
  res.partial_integral = total;
  res.last_slope = increments.back() / std::log(2.0);
  rep.params["partial_integral"] = total;
  rep.params["last_slope"] = res.last_slope;
  {
    std::ostringstream os;
    os << "doubling ladder over [1, 2^" << rungs << "]";
    rep.grid_desc = os.str();
  }
  rep.n_samples = rungs;

  // successive increment ratios; geometric collapse marks a convergent tail
  const int window = 6;
  std::vector<double> ratios;
  for (std::size_t m = increments.size() - window; m < increments.size(); ++m) {
    if (increments[m - 1] <= 0.0) {
      ratios.push_back(0.0);
    } else {
      ratios.push_back(increments[m] / increments[m - 1]);
    }
  }
  std::sort(ratios.begin(), ratios.end());
  const double rho = ratios[ratios.size() / 2];
  rep.fitted_constant = rho;
  rep.tolerance = rho_min;
  res.verdict = rho >= rho_min ? IntegralVerdict::Divergent : IntegralVerdict::Convergent;
  rep.pass = true;  // classification, not a bound; suites compare against expectations
  rep.note = res.verdict == IntegralVerdict::Divergent ? "DIVERGENT" : "CONVERGENT";
  return res;
}

}  // namespace leray
