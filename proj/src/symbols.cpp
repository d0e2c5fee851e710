#include "leray/symbols.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "leray/detail/jets.hpp"

namespace leray {

using detail::Jet;

namespace {

// 8th-order central difference coefficients for f', applied repeatedly for
// higher orders with relative step h = r * 1e-3.
double central_diff(const GFamily& g, int k, double r) {
  const double h = (r > 1e-3 ? r : 1e-3) * 1e-3;
  auto eval = [&](auto&& self, int order, double x) -> double {
    if (order == 0) return g.value(x);
    static const double c[4] = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
    double s = 0.0;
    for (int i = 1; i <= 4; ++i) {
      s += c[i - 1] * (self(self, order - 1, x + i * h) - self(self, order - 1, x - i * h)) / h;
    }
    return s;
  };
  return eval(eval, k, r);
}

}  // namespace

double GFamily::derivative(int k, double r) const {
  if (k < 1 || k > 4) throw std::invalid_argument("GFamily::derivative: order must be in [1,4]");
  return central_diff(*this, k, r);
}

namespace {

class ConstantOne final : public GFamily {
public:
  std::string id() const override { return "constant_one"; }
  std::string describe() const override { return "constant_one"; }
  double value(double) const override { return 1.0; }
  double derivative(int, double) const override { return 0.0; }
};

// max(1, log^{1/2}(2 + r^2)); the floor keeps the family bounded below by 1,
// it is inactive for r >= sqrt(e - 2).
class LogHalf final : public GFamily {
public:
  std::string id() const override { return "log_half"; }
  std::string describe() const override { return "log_half"; }
  double value(double r) const override {
    const double v = std::sqrt(std::log(2.0 + r * r));
    return v > 1.0 ? v : 1.0;
  }
  double derivative(int k, double r) const override {
    if (k < 1 || k > 4) throw std::invalid_argument("log_half: derivative order");
    if (value(r) <= 1.0) return 0.0;
    const Jet base{2.0 + r * r, 2.0 * r, 2.0, 0.0, 0.0};
    const Jet L = detail::jet_log(base, std::log(base[0]));
    const Jet g = detail::jet_sqrt(L);
    return g[k];
  }
  bool log_class() const override { return true; }
  bool bounded() const override { return false; }
};

// max(1, r^eps): nondecreasing and >= 1 but with derivatives that do not
// decay like r^{-k}; registered on purpose as a failing example for the
// downstream multiplier checks.
class PowerFamily final : public GFamily {
public:
  explicit PowerFamily(double eps) : eps_(eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("power: eps must be positive");
  }
  std::string id() const override { return "power"; }
  std::string describe() const override {
    std::ostringstream os;
    os << "power(" << eps_ << ")";
    return os.str();
  }
  double value(double r) const override { return r > 1.0 ? std::pow(r, eps_) : 1.0; }
  double derivative(int k, double r) const override {
    if (k < 1 || k > 4) throw std::invalid_argument("power: derivative order");
    if (r <= 1.0) return 0.0;
    double coef = 1.0;
    for (int i = 0; i < k; ++i) coef *= (eps_ - i);
    return coef * std::pow(r, eps_ - k);
  }
  bool bounded() const override { return false; }

private:
  double eps_;
};

// c0 + sum_i c_i sigma(r)^i with sigma = r^2/(1+r^2): bounded, smooth,
// nondecreasing for c_i >= 0, derivatives decay like r^{-k-2}.
class MikhlinCustom final : public GFamily {
public:
  explicit MikhlinCustom(std::vector<double> c) : c_(std::move(c)) {
    if (c_.empty()) throw std::invalid_argument("mikhlin_custom: empty coefficient table");
    if (c_[0] < 1.0) throw std::invalid_argument("mikhlin_custom: c0 must be >= 1 (g >= 1)");
    for (std::size_t i = 1; i < c_.size(); ++i) {
      if (c_[i] < 0.0) throw std::invalid_argument("mikhlin_custom: c_i must be >= 0 (monotone g)");
    }
  }
  std::string id() const override { return "mikhlin_custom"; }
  std::string describe() const override {
    std::ostringstream os;
    os << "mikhlin_custom(";
    for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
    os << ")";
    return os.str();
  }
  double value(double r) const override { return jet(r)[0]; }
  double derivative(int k, double r) const override {
    if (k < 1 || k > 4) throw std::invalid_argument("mikhlin_custom: derivative order");
    return jet(r)[k];
  }

private:
  Jet jet(double r) const {
    const Jet num{r * r, 2.0 * r, 2.0, 0.0, 0.0};
    const Jet den{1.0 + r * r, 2.0 * r, 2.0, 0.0, 0.0};
    const Jet sigma = detail::jet_mul(num, detail::jet_recip(den));
    Jet acc = detail::jet_const(c_[0]);
    Jet pw = detail::jet_const(1.0);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      pw = detail::jet_mul(pw, sigma);
      acc = detail::jet_add(acc, detail::jet_scale(pw, c_[i]));
    }
    return acc;
  }
  std::vector<double> c_;
};

}  // namespace

std::shared_ptr<const GFamily> make_constant_one() { return std::make_shared<ConstantOne>(); }
std::shared_ptr<const GFamily> make_log_half() { return std::make_shared<LogHalf>(); }
std::shared_ptr<const GFamily> make_power(double eps) { return std::make_shared<PowerFamily>(eps); }
std::shared_ptr<const GFamily> make_mikhlin_custom(const std::vector<double>& coeffs) {
  return std::make_shared<MikhlinCustom>(coeffs);
}

void validate_g_family(const GFamily& g) {
  const int samples = 241;
  const double lo = 1e-3, hi = 1e6;
  double prev = g.value(0.0);
  if (!(prev >= 1.0 - 1e-12)) throw std::invalid_argument(g.describe() + ": g(0) < 1");
  for (int i = 0; i < samples; ++i) {
    const double r = lo * std::pow(hi / lo, static_cast<double>(i) / (samples - 1));
    const double v = g.value(r);
    if (!std::isfinite(v)) throw std::invalid_argument(g.describe() + ": non-finite value");
    if (!(v >= 1.0 - 1e-12)) throw std::invalid_argument(g.describe() + ": g < 1 on sample grid");
    if (v < prev - 1e-12 * std::max(1.0, prev)) {
      throw std::invalid_argument(g.describe() + ": g not nondecreasing on sample grid");
    }
    prev = v;
  }
}

double SymbolSpec::positive_symbol(double r) const {
  if (r > 0.0) return std::pow(r, gamma) / g->value(r);
  if (gamma > 0.0) return 0.0;
  if (gamma == 0.0) return 1.0 / g->value(0.0);
  return std::numeric_limits<double>::infinity();
}

double SymbolSpec::semigroup_factor(double t, double r) const {
  if (t < 0.0) throw std::invalid_argument("semigroup_factor: t must be >= 0");
  if (t == 0.0) return 1.0;
  const double s = positive_symbol(r);
  if (std::isinf(s)) return 0.0;
  return std::exp(-t * s);
}

std::string SymbolSpec::describe() const {
  std::ostringstream os;
  os << "gamma=" << gamma << ", g=" << g->describe();
  return os.str();
}

SymbolSpec registered_g(const std::string& id, double gamma, const std::vector<double>& params) {
  std::shared_ptr<const GFamily> fam;
  if (id == "constant_one") {
    fam = make_constant_one();
  } else if (id == "log_half") {
    fam = make_log_half();
  } else if (id == "power") {
    if (params.size() != 1) throw std::invalid_argument("power: expects one parameter eps");
    fam = make_power(params[0]);
  } else if (id == "mikhlin_custom") {
    fam = make_mikhlin_custom(params);
  } else {
    throw std::invalid_argument("registered_g: unknown id '" + id + "'");
  }
  validate_g_family(*fam);
  return SymbolSpec(gamma, fam);
}

}  // namespace leray
