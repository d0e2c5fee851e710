#pragma once

#include <memory>
#include <string>
#include <vector>

namespace leray {

// Radial modulation g of a dissipation symbol -|xi|^gamma / g(|xi|).
// Registered families must be nondecreasing and bounded below by 1;
// registration runs sampled checks and rejects violators. Derivatives up to
// order 4 come from closed forms where the family provides them and from
// 8th-order central differences otherwise.
class GFamily {
public:
  virtual ~GFamily() = default;
  virtual std::string id() const = 0;
  virtual std::string describe() const = 0;
  virtual double value(double r) const = 0;
  // k-th derivative, 1 <= k <= 4; default falls back to finite differences
  virtual double derivative(int k, double r) const;
  // grows at most like r^eps for every eps > 0 (log-type families)
  virtual bool log_class() const { return false; }
  // bounded with Mikhlin-type derivative decay
  virtual bool bounded() const { return true; }
};

std::shared_ptr<const GFamily> make_constant_one();
std::shared_ptr<const GFamily> make_log_half();                       // max(1, log^{1/2}(2 + r^2))
std::shared_ptr<const GFamily> make_power(double eps);                // max(1, r^eps), a designed failing example
std::shared_ptr<const GFamily> make_mikhlin_custom(const std::vector<double>& coeffs);  // c0 + sum c_i (r^2/(1+r^2))^i

// Dissipation symbol (gamma, g): evaluates -|xi|^gamma / g(|xi|) and the
// semigroup factor exp(-t |xi|^gamma / g(|xi|)).
struct SymbolSpec {
  double gamma = 2.0;
  std::shared_ptr<const GFamily> g;

  SymbolSpec() = default;
  SymbolSpec(double gamma_, std::shared_ptr<const GFamily> g_) : gamma(gamma_), g(std::move(g_)) {}

  double g_value(double r) const { return g->value(r); }
  double g_derivative(int k, double r) const { return g->derivative(k, r); }

  // |xi|^gamma / g(|xi|) >= 0; at r = 0 this is 0 for gamma > 0, 1/g(0) for
  // gamma = 0 and +inf for gamma < 0.
  double positive_symbol(double r) const;
  // multiplier value -positive_symbol
  double symbol(double r) const { return -positive_symbol(r); }
  // exp(t * symbol(r)) for t >= 0, with exp(-inf) -> 0
  double semigroup_factor(double t, double r) const;

  std::string describe() const;
};

// Factory with registration-time validation (id in {constant_one, log_half,
// power, mikhlin_custom}). Throws std::invalid_argument for unknown ids or
// parameters that break g >= 1 / monotonicity on the sampled grid.
SymbolSpec registered_g(const std::string& id, double gamma, const std::vector<double>& params = {});

// Sampled validation used at registration (log-spaced r in [1e-3, 1e6]).
void validate_g_family(const GFamily& g);

}  // namespace leray
