#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace leray {

// Structured record of one empirical inequality check. The pass flag is a
// deterministic function of the fitted-vs-predicted comparison and the
// tolerance; `note` carries rejection/non-convergence details.
struct EstimateReport {
  std::string check;
  std::string case_label;
  std::map<std::string, double> params;  // ordered, deterministic echo
  std::string grid_desc;
  int n_samples = 0;
  double fitted_constant = std::nan("");
  double fitted_exponent = std::nan("");
  double predicted_exponent = std::nan("");
  double tolerance = std::nan("");
  bool pass = false;
  std::string note;
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  int n_used = 0;
};

// Least-squares line through (log x_i, log y_i); entries with y <= 0 are
// dropped. Throws std::runtime_error when fewer than min_points survive.
LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y, int min_points = 5);

std::vector<double> log_spaced(double lo, double hi, int count);

// Adaptive Simpson on [a, b].
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-10, int max_depth = 40);

struct LadderResult {
  double value = 0.0;     // integral over (0, b], lower-endpoint limit
  bool converged = false;
  int rungs = 0;
};

// Integral over (0, b] of a possibly endpoint-singular integrand: evaluates
// on [a_m, b] with a_m = a0 2^{-m} and watches the increments. Divergent
// endpoints are reported, not silently passed.
LadderResult lower_endpoint_ladder(const std::function<double(double)>& f, double a0, double b,
                                   double rel_tol = 1e-6, int max_rungs = 48);

}  // namespace leray
