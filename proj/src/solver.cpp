#include "leray/solver.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "leray/sampling.hpp"

namespace leray {

void SolverConfig::validate() const {
  grid().validate();
  if (!(dt > 0.0)) throw std::invalid_argument("SolverConfig: dt must be positive");
  if (!(T > 0.0)) throw std::invalid_argument("SolverConfig: T must be positive");
  if (!(nu > 0.0)) throw std::invalid_argument("SolverConfig: nu must be positive");
  if (alpha < 0.0) throw std::invalid_argument("SolverConfig: alpha must be >= 0");
  if (!(p >= 1.0) || !(q >= 1.0)) throw std::invalid_argument("SolverConfig: p, q must be >= 1");
  if (output_cadence < 1) throw std::invalid_argument("SolverConfig: output_cadence must be >= 1");
  if (!(blowup_factor > 1.0)) throw std::invalid_argument("SolverConfig: blowup_factor must exceed 1");
  dissipation();      // registration-time validation of (gamma1, g1)
  regularization();   // and (gamma2, g2)
}

SpectralField make_initial_data(const InitialDataSpec& spec, const TorusGrid& grid,
                                std::uint64_t seed) {
  if (spec.kind == "taylor_green_2d") {
    if (grid.n != 2) throw std::invalid_argument("taylor_green_2d requires n = 2");
    // u = A (sin x cos y, -cos x sin y); four exact modes
    const auto& tr = transform_for(grid.n, grid.N);
    const std::size_t M = grid.modes();
    std::vector<cplx> u1(M), u2(M);
    for (std::size_t m = 0; m < M; ++m) {
      const auto idx = grid.axis_indices(m);
      const double x = idx[0] * grid.h();
      const double y = idx[1] * grid.h();
      u1[m] = spec.amplitude * std::sin(x) * std::cos(y);
      u2[m] = -spec.amplitude * std::cos(x) * std::sin(y);
    }
    SpectralField f(grid, 2);
    std::vector<cplx> spec1(M), spec2(M);
    tr.to_spectral(u1, spec1);
    tr.to_spectral(u2, spec2);
    for (std::size_t m = 0; m < M; ++m) {
      f.at(0, m) = spec1[m];
      f.at(1, m) = spec2[m];
    }
    f.hermitian_symmetrize();
    f = leray_project(f);
    return f;
  }
  if (spec.kind == "random_divfree") {
    RandomFieldSpec rf;
    rf.sigma = spec.sigma;
    rf.amplitude = spec.amplitude;
    rf.seed = seed;
    rf.project_div_free = true;
    return random_field(grid, rf);
  }
  if (spec.kind == "single_mode") {
    SpectralField f(grid, grid.n);
    std::array<int, 3> kpos{0, 0, 0};
    for (int d = 0; d < grid.n; ++d) kpos[d] = spec.mode[d];
    const std::size_t mp = grid.flat_index(kpos);
    for (int d = 0; d < grid.n; ++d) f.at(d, mp) = 0.5 * spec.amplitude * spec.direction[d];
    f.hermitian_symmetrize();
    return leray_project(f);
  }
  throw std::invalid_argument("make_initial_data: unknown kind '" + spec.kind + "'");
}

namespace {

struct StepperTables {
  std::vector<double> e_full;   // exp(dt nu sym1)
  std::vector<double> e_half;   // exp(dt/2 nu sym1)
};

StepperTables make_tables(const TorusGrid& grid, const SymbolSpec& diss, double nu, double dt) {
  StepperTables tab;
  const std::size_t M = grid.modes();
  tab.e_full.resize(M);
  tab.e_half.resize(M);
  for (std::size_t m = 0; m < M; ++m) {
    const double r = grid.xi_norm(m);
    tab.e_full[m] = diss.semigroup_factor(nu * dt, r);
    tab.e_half[m] = diss.semigroup_factor(nu * dt / 2.0, r);
  }
  return tab;
}

void scale_modes(SpectralField& f, const std::vector<double>& factors) {
  const std::size_t M = f.modes();
  for (int c = 0; c < f.ncomp; ++c) {
    cplx* a = f.component(c);
    for (std::size_t m = 0; m < M; ++m) a[m] *= factors[m];
  }
}

std::set<int> sample_steps(int total_steps, int cadence) {
  std::set<int> steps{0, total_steps};
  for (int s = 1; s < total_steps; s *= 2) steps.insert(s);  // geometric refinement near t = 0
  for (int s = cadence; s < total_steps; s += cadence) steps.insert(s);
  return steps;
}

TrajectorySample make_sample(double t, const SpectralField& u, const SolverConfig& cfg,
                             const LPFilterBank& bank) {
  TrajectorySample s;
  s.t = t;
  s.u = u;
  s.l2 = u.l2_norm();
  s.hs1 = sobolev_norm(u, cfg.s1, 2.0);
  s.bs1 = besov_norm(u, BesovParams{cfg.s1, cfg.p, cfg.q}, bank);
  s.bs2 = besov_norm(u, BesovParams{cfg.s2, cfg.p, cfg.q}, bank);
  s.weighted_bs2 = std::pow(t, cfg.weight_a()) * s.bs2;
  return s;
}

}  // namespace

Trajectory integrate(const SpectralField& u0, const SolverConfig& cfg) {
  cfg.validate();
  const TorusGrid grid = cfg.grid();
  if (u0.grid != grid) throw std::invalid_argument("integrate: initial data grid does not match config");
  const SymbolSpec diss = cfg.dissipation();
  const SymbolSpec reg = cfg.regularization();
  const StepperTables tab = make_tables(grid, diss, cfg.nu, cfg.dt);
  const LPFilterBank bank(grid);

  const int total_steps = static_cast<int>(std::llround(cfg.T / cfg.dt));
  const auto samples_at = sample_steps(total_steps, cfg.output_cadence);

  Trajectory traj;
  traj.config = cfg;

  SpectralField u = leray_project(u0);
  const double l2_0 = u.l2_norm();
  traj.samples.push_back(make_sample(0.0, u, cfg, bank));

  for (int step = 1; step <= total_steps; ++step) {
    if (cfg.disable_nonlinear) {
      scale_modes(u, tab.e_full);
    } else {
      // predictor to the half step
      SpectralField w_n = nonlinear_W(u, u, cfg.alpha, reg, cfg.w_variant);
      SpectralField u_star = u;
      u_star -= (cfg.dt / 2.0) * w_n;
      scale_modes(u_star, tab.e_half);
      // corrector with the midpoint evaluation of W
      SpectralField w_mid = nonlinear_W(u_star, u_star, cfg.alpha, reg, cfg.w_variant);
      scale_modes(u, tab.e_full);
      scale_modes(w_mid, tab.e_half);
      u -= cfg.dt * w_mid;
      u = leray_project(u);
    }

    const double t = step * cfg.dt;
    const double l2 = u.l2_norm();
    if (!u.finite() || l2 > cfg.blowup_factor * std::max(l2_0, 1e-300)) {
      traj.blown_up = true;
      traj.blowup_time = t;
      traj.steps_taken = step;
      traj.samples.push_back(make_sample(t, u, cfg, bank));
      return traj;
    }
    if (samples_at.count(step)) traj.samples.push_back(make_sample(t, u, cfg, bank));
  }
  traj.steps_taken = total_steps;
  return traj;
}

namespace {

double x_metric_distance(const std::vector<double>& times, const std::vector<SpectralField>& a,
                         const std::vector<SpectralField>& b, const SolverConfig& cfg,
                         const LPFilterBank& bank) {
  const BesovParams low{cfg.s1, cfg.p, cfg.q};
  const BesovParams high{cfg.s2, cfg.p, cfg.q};
  const double wa = cfg.weight_a();
  double sup1 = 0.0, sup2 = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    SpectralField diff = a[i];
    diff -= b[i];
    sup1 = std::max(sup1, besov_norm(diff, low, bank));
    sup2 = std::max(sup2, std::pow(times[i], wa) * besov_norm(diff, high, bank));
  }
  return sup1 + sup2;
}

}  // namespace

PicardResult picard_iterate(const SpectralField& u0, const SolverConfig& cfg, int n_iter) {
  cfg.validate();
  if (n_iter < 2) throw std::invalid_argument("picard_iterate: n_iter must be >= 2");
  const TorusGrid grid = cfg.grid();
  if (u0.grid != grid) throw std::invalid_argument("picard_iterate: initial data grid mismatch");
  const SymbolSpec diss = cfg.dissipation();
  const SymbolSpec reg = cfg.regularization();
  const StepperTables tab = make_tables(grid, diss, cfg.nu, cfg.dt);
  const LPFilterBank bank(grid);

  const int S = static_cast<int>(std::llround(cfg.T / cfg.dt));
  PicardResult res;
  res.times.resize(S + 1);
  for (int i = 0; i <= S; ++i) res.times[i] = i * cfg.dt;

  // linear trajectory e^{t nu L1} u0, also the zeroth iterate
  std::vector<SpectralField> linear(S + 1);
  linear[0] = leray_project(u0);
  for (int i = 1; i <= S; ++i) {
    linear[i] = linear[i - 1];
    scale_modes(linear[i], tab.e_full);
  }

  std::vector<SpectralField> cur = linear;
  std::vector<SpectralField> next(S + 1);
  const double l2_0 = linear[0].l2_norm();

  for (int m = 0; m < n_iter; ++m) {
    // Duhamel accumulation: D_{i+1} = E_full D_i + dt E_half W(u(t_{i+1/2}))
    SpectralField duh(grid, grid.n);
    next[0] = linear[0];
    for (int i = 0; i < S; ++i) {
      SpectralField mid = cur[i];
      mid += cur[i + 1];
      mid *= 0.5;
      SpectralField w = nonlinear_W(mid, mid, cfg.alpha, reg, cfg.w_variant);
      scale_modes(duh, tab.e_full);
      scale_modes(w, tab.e_half);
      w *= cfg.dt;
      duh += w;
      next[i + 1] = linear[i + 1];
      next[i + 1] -= duh;
      const double l2 = next[i + 1].l2_norm();
      if (!next[i + 1].finite() || l2 > cfg.blowup_factor * std::max(l2_0, 1e-300)) {
        res.blown_up = true;
        res.final_iterate = next;
        return res;
      }
    }
    res.x_distances.push_back(x_metric_distance(res.times, next, cur, cfg, bank));
    if (m >= 1) {
      const double prev = res.x_distances[m - 1];
      res.contraction_ratios.push_back(prev > 0.0 ? res.x_distances[m] / prev : 0.0);
    }
    cur.swap(next);
  }
  res.final_iterate = cur;
  return res;
}

XNormReport monitor_X_norm(const Trajectory& traj, double s1, double s2, double p, double q,
                           double gamma1) {
  if (traj.samples.empty()) throw std::invalid_argument("monitor_X_norm: empty trajectory");
  const SolverConfig& cfg = traj.config;
  const TorusGrid grid = cfg.grid();
  const SymbolSpec diss = cfg.dissipation();
  const LPFilterBank bank(grid);
  const BesovParams low{s1, p, q};
  const BesovParams high{s2, p, q};
  const double a = (s2 - s1) / gamma1;

  XNormReport rep;
  const SpectralField& u0 = traj.samples.front().u;
  bool have_small = false;
  for (const auto& smp : traj.samples) {
    SpectralField lin = semigroup_apply(u0, cfg.nu * smp.t, diss);
    SpectralField dev = smp.u;
    dev -= lin;
    const double d1 = besov_norm(dev, low, bank);
    if (d1 > rep.sup_deviation_bs1) {
      rep.sup_deviation_bs1 = d1;
      rep.argmax_t_dev = smp.t;
    }
    if (smp.t > 0.0) {
      const double w = std::pow(smp.t, a) * besov_norm(smp.u, high, bank);
      if (w > rep.sup_weighted_bs2) {
        rep.sup_weighted_bs2 = w;
        rep.argmax_t_weighted = smp.t;
      }
      if (!have_small) {
        rep.small_time_weighted = w;
        have_small = true;
      }
    }
  }
  return rep;
}

std::vector<SmoothingRow> smoothing_diagnostic(const Trajectory& traj, const std::vector<double>& r_list,
                                               double s1, double gamma1) {
  if (traj.samples.empty()) throw std::invalid_argument("smoothing_diagnostic: empty trajectory");
  const SolverConfig& cfg = traj.config;
  const LPFilterBank bank(cfg.grid());
  std::vector<SmoothingRow> rows;
  for (double r : r_list) {
    if (r < s1) throw std::invalid_argument("smoothing_diagnostic: every r must satisfy r >= s1");
    SmoothingRow row;
    row.r = r;
    const BesovParams params{r, cfg.p, cfg.q};
    const double expo = (r - s1) / gamma1;
    const double expo_half = (r - s1) / 2.0;
    for (const auto& smp : traj.samples) {
      const double br = besov_norm(smp.u, params, bank);
      const double w = (smp.t == 0.0 && expo == 0.0) ? br : std::pow(smp.t, expo) * br;
      if (w > row.supremum) {
        row.supremum = w;
        row.attained_t = smp.t;
      }
      const double wh = (smp.t == 0.0 && expo_half == 0.0) ? br : std::pow(smp.t, expo_half) * br;
      row.supremum_half = std::max(row.supremum_half, wh);
    }
    rows.push_back(row);
  }
  return rows;
}

GlobalCriterionResult global_criterion_monitor(const SolverConfig& cfg) {
  GlobalCriterionResult res;
  res.rate_condition = 2.0 * cfg.gamma1 + cfg.gamma2 >= 5.0;
  const auto integral = check_global_integral(cfg.dissipation(), cfg.regularization());
  res.integral_verdict = integral.verdict;
  res.integral_report = integral.report;
  res.verdict = (res.rate_condition && res.integral_verdict == IntegralVerdict::Divergent)
                    ? GlobalVerdict::GlobalRegime
                    : GlobalVerdict::LocalOnly;
  if (cfg.n != 3) res.warnings.push_back("criterion stated for n = 3; config has n = " + std::to_string(cfg.n));
  if (cfg.p != 2.0) res.warnings.push_back("criterion stated for p = 2");
  return res;
}

}  // namespace leray
