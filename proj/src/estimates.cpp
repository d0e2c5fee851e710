#include "leray/estimates.hpp"

#include <cmath>
#include <stdexcept>

namespace leray {

LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y, int min_points) {
  if (x.size() != y.size()) throw std::invalid_argument("fit_loglog: size mismatch");
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 0.0 && y[i] > 0.0 && std::isfinite(y[i])) {
      lx.push_back(std::log(x[i]));
      ly.push_back(std::log(y[i]));
    }
  }
  const int n = static_cast<int>(lx.size());
  if (n < min_points) throw std::runtime_error("fit_loglog: degenerate fit (fewer than required usable points)");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sx += lx[i];
    sy += ly[i];
    sxx += lx[i] * lx[i];
    sxy += lx[i] * ly[i];
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::runtime_error("fit_loglog: degenerate abscissa");
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.n_used = n;
  return fit;
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (!(lo > 0.0) || !(hi > lo) || count < 2) throw std::invalid_argument("log_spaced: bad range");
  std::vector<double> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1));
  }
  return out;
}

namespace {
double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_rec(const std::function<double(double)>& f, double a, double fa, double b, double fb,
                   double m, double fm, double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_rec(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}
}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  if (!(b > a)) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a), fb = f(b), fm = f(m);
  const double whole = simpson(f, a, fa, b, fb, m, fm);
  const double scale = std::max(1e-300, std::abs(whole));
  return simpson_rec(f, a, fa, b, fb, m, fm, whole, tol * scale, max_depth);
}

LadderResult lower_endpoint_ladder(const std::function<double(double)>& f, double a0, double b,
                                   double rel_tol, int max_rungs) {
  LadderResult res;
  double a = a0;
  double total = adaptive_simpson(f, a, b);
  int grow_streak = 0;
  double prev_inc = -1.0;
  for (int m = 1; m <= max_rungs; ++m) {
    const double a_next = 0.5 * a;
    const double inc = adaptive_simpson(f, a_next, a);
    total += inc;
    a = a_next;
    res.rungs = m;
    const double scale = std::max(std::abs(total), 1e-300);
    if (!std::isfinite(inc) || !std::isfinite(total)) {
      res.value = total;
      res.converged = false;
      return res;
    }
    if (prev_inc >= 0.0 && std::abs(inc) > std::abs(prev_inc) * 1.05) {
      if (++grow_streak >= 4) {  // increments growing toward the endpoint
        res.value = total;
        res.converged = false;
        return res;
      }
    } else {
      grow_streak = 0;
    }
    if (std::abs(inc) <= rel_tol * scale && std::abs(prev_inc) <= rel_tol * scale && prev_inc >= 0.0) {
      res.value = total;
      res.converged = true;
      return res;
    }
    prev_inc = std::abs(inc);
  }
  res.value = total;
  res.converged = false;  // ladder exhausted without settling
  return res;
}

}  // namespace leray
