#pragma once

#include <array>
#include <cmath>

namespace leray::detail {

// Value-and-derivatives bundle f(r), f'(r), ..., f^(JET_ORDER)(r) used to
// assemble closed-form radial derivatives of composite symbols.
inline constexpr int JET_ORDER = 4;
using Jet = std::array<double, JET_ORDER + 1>;

inline constexpr double binom_table[JET_ORDER + 1][JET_ORDER + 1] = {
    {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};

inline Jet jet_const(double v) { return Jet{v, 0.0, 0.0, 0.0, 0.0}; }

// Leibniz product
inline Jet jet_mul(const Jet& a, const Jet& b) {
  Jet r{};
  for (int m = 0; m <= JET_ORDER; ++m) {
    double s = 0.0;
    for (int j = 0; j <= m; ++j) s += binom_table[m][j] * a[j] * b[m - j];
    r[m] = s;
  }
  return r;
}

inline Jet jet_add(const Jet& a, const Jet& b) {
  Jet r{};
  for (int m = 0; m <= JET_ORDER; ++m) r[m] = a[m] + b[m];
  return r;
}

inline Jet jet_scale(const Jet& a, double c) {
  Jet r{};
  for (int m = 0; m <= JET_ORDER; ++m) r[m] = c * a[m];
  return r;
}

// h = 1/a from a*h = 1 (a[0] != 0)
inline Jet jet_recip(const Jet& a) {
  Jet h{};
  h[0] = 1.0 / a[0];
  for (int m = 1; m <= JET_ORDER; ++m) {
    double s = 0.0;
    for (int j = 1; j <= m; ++j) s += binom_table[m][j] * a[j] * h[m - j];
    h[m] = -s / a[0];
  }
  return h;
}

// derivatives of r^alpha at r > 0
inline Jet jet_rpow(double r, double alpha) {
  Jet j{};
  double coef = 1.0;
  for (int m = 0; m <= JET_ORDER; ++m) {
    j[m] = coef * std::pow(r, alpha - m);
    coef *= (alpha - m);
  }
  return j;
}

// derivatives of the monomial r^k for integer k >= 0 (exact, no pow at 0)
inline Jet jet_rmono(double r, int k) {
  Jet j{};
  for (int m = 0; m <= JET_ORDER; ++m) {
    if (m > k) break;
    double coef = 1.0;
    for (int i = 0; i < m; ++i) coef *= (k - i);
    j[m] = coef * std::pow(r, k - m);
  }
  return j;
}

// E = exp(-psi) via E' = -psi' E
inline Jet jet_exp_neg(const Jet& psi) {
  Jet e{};
  e[0] = std::exp(-psi[0]);
  for (int m = 1; m <= JET_ORDER; ++m) {
    double s = 0.0;
    for (int j = 1; j <= m; ++j) s += binom_table[m - 1][j - 1] * psi[j] * e[m - j];
    e[m] = -s;
  }
  return e;
}

// g = sqrt(a) from g*g = a (a[0] > 0)
inline Jet jet_sqrt(const Jet& a) {
  Jet g{};
  g[0] = std::sqrt(a[0]);
  for (int m = 1; m <= JET_ORDER; ++m) {
    double s = 0.0;
    for (int j = 1; j < m; ++j) s += binom_table[m][j] * g[j] * g[m - j];
    g[m] = (a[m] - s) / (2.0 * g[0]);
  }
  return g;
}

// L = log(a): L' = a'/a, differentiated as a jet of order JET_ORDER-1 and
// re-packed; a must stay positive.
inline Jet jet_log(const Jet& a, double value) {
  Jet ap{};  // derivatives of a shifted by one: ap[m] = a^{(m+1)}
  for (int m = 0; m < JET_ORDER; ++m) ap[m] = a[m + 1];
  Jet inv = jet_recip(a);
  Jet lp = jet_mul(ap, inv);  // derivatives of L' up to order JET_ORDER (top entries unused)
  Jet L{};
  L[0] = value;
  for (int m = 1; m <= JET_ORDER; ++m) L[m] = lp[m - 1];
  return L;
}

}  // namespace leray::detail
