#include "leray/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <thread>

#include "leray/product_checks.hpp"
#include "leray/semigroup_checks.hpp"

namespace leray {

int sweep_threads() {
  if (const char* env = std::getenv("LERAY_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(hw == 0 ? 1u : hw, 4u));
}

void parallel_for_indexed(int count, const std::function<void(int)>& fn) {
  const int workers = std::min(sweep_threads(), count);
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      int i;
      while ((i = next.fetch_add(1)) < count) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

namespace {

std::vector<EstimateReport> run_indexed(int count,
                                        const std::function<EstimateReport(int)>& job) {
  std::vector<EstimateReport> out(count);
  parallel_for_indexed(count, [&](int i) { out[i] = job(i); });
  return out;
}

EstimateReport rejected_row(const std::string& check, const std::string& label,
                            const std::string& why) {
  EstimateReport rep;
  rep.check = check;
  rep.case_label = label;
  rep.pass = true;  // hypothesis rejections report, they do not fail the suite
  rep.note = "rejected: " + why;
  return rep;
}

SuiteResult suite_semigroup(const std::optional<SolverConfig>& config) {
  struct Tuple {
    double gamma;
    std::string gid;
    double p, q;
  };
  std::vector<Tuple> tuples = {
      {1.5, "constant_one", 2.0, std::numeric_limits<double>::infinity()},
      {2.0, "constant_one", 2.0, std::numeric_limits<double>::infinity()},
      {3.0, "constant_one", 2.0, std::numeric_limits<double>::infinity()},
      {2.0, "constant_one", 2.0, 2.0},
      {2.0, "log_half", 2.0, std::numeric_limits<double>::infinity()},
  };
  const int n = config ? config->n : 2;
  SuiteResult res;
  res.reports = run_indexed(static_cast<int>(tuples.size()), [&](int i) {
    const auto& t = tuples[i];
    return verify_semigroup_lp_lq(registered_g(t.gid, t.gamma), n, t.p, t.q);
  });
  return res;
}

SuiteResult suite_sobolev(const std::optional<SolverConfig>&) {
  struct Tuple {
    double s1, s2, gamma;
    std::string gid;
  };
  std::vector<Tuple> tuples = {
      {0.0, 1.0, 2.0, "constant_one"},  {0.0, 1.5, 1.5, "constant_one"},
      {0.5, 1.5, 2.0, "constant_one"},  {0.0, 2.0, 2.0, "constant_one"},
      {0.0, 1.0, 3.0, "constant_one"},  {0.0, 1.0, 2.0, "log_half"},
  };
  SuiteResult res;
  res.reports = run_indexed(static_cast<int>(tuples.size()), [&](int i) {
    const auto& t = tuples[i];
    return verify_sobolev_smoothing(registered_g(t.gid, t.gamma), t.s1, t.s2, 2.0);
  });
  return res;
}

SuiteResult suite_kernel(const std::optional<SolverConfig>&) {
  struct Tuple {
    std::string gid;
    double gamma;
    int n;
  };
  std::vector<Tuple> tuples = {
      {"constant_one", 1.5, 1}, {"constant_one", 1.5, 2}, {"constant_one", 1.5, 3},
      {"constant_one", 2.0, 1}, {"constant_one", 2.0, 2}, {"constant_one", 2.0, 3},
      {"constant_one", 3.0, 2}, {"log_half", 2.0, 2},     {"log_half", 2.0, 3},
  };
  SuiteResult res;
  res.reports = run_indexed(static_cast<int>(tuples.size()), [&](int i) {
    const auto& t = tuples[i];
    return check_kernel_condition(registered_g(t.gid, t.gamma), t.gamma, t.n);
  });
  return res;
}

SuiteResult suite_mikhlin(const std::optional<SolverConfig>&) {
  SuiteResult res;
  res.reports.push_back(check_mikhlin(registered_g("constant_one", 2.0), 4));
  res.reports.push_back(check_mikhlin(registered_g("log_half", 2.0), 2));
  res.reports.push_back(check_mikhlin(registered_g("mikhlin_custom", 2.0, {1.0, 0.5, 0.25}), 4));
  return res;
}

SuiteResult suite_products(const std::optional<SolverConfig>& config) {
  const int n = config ? config->n : 2;
  const int N = config ? config->N : 32;
  TorusGrid grid(n, N);
  LPFilterBank bank(grid);
  SuiteResult res;
  res.reports.push_back(
      verify_product_est_standard(bank, 1.0, 2.0, 2.0, HolderSplit{4.0, 4.0, 4.0, 4.0}));
  res.reports.push_back(verify_product_est_chemin(bank, 0.4, 0.4, 2.0, 2.0, 2.0, 2.0));
  // a hypothesis-violating tuple, surfaced as a rejected row
  try {
    res.reports.push_back(verify_product_est_chemin(bank, -0.5, 0.2, 2.0, 2.0, 2.0, 2.0));
  } catch (const std::invalid_argument& e) {
    res.reports.push_back(rejected_row("product_est_chemin", "s1=-0.5 s2=0.2", e.what()));
  }
  return res;
}

SuiteResult suite_embeddings(const std::optional<SolverConfig>& config) {
  const int n = config ? config->n : 2;
  const int N = config ? config->N : 32;
  TorusGrid grid(n, N);
  LPFilterBank bank(grid);
  SuiteResult res;
  {
    EmbeddingCase c;
    c.kind = EmbeddingKind::SummabilityMonotone;
    c.a1 = 0.5;
    c.a2 = 1.0;
    c.p1 = 2.0;
    c.q1 = 1.0;
    c.q2 = 4.0;
    res.reports.push_back(verify_embedding(bank, c));
  }
  {
    EmbeddingCase c;
    c.kind = EmbeddingKind::IntegrabilityTrade;
    c.p1 = 2.0;
    c.p2 = 4.0;
    c.q1 = 2.0;
    c.a2 = 0.5;
    c.a1 = 0.5 + n * (1.0 / 2.0 - 1.0 / 4.0);
    res.reports.push_back(verify_embedding(bank, c));
  }
  {
    EmbeddingCase c;
    c.kind = EmbeddingKind::BesovToSobolev;
    c.a1 = 0.5;
    c.a2 = 1.0;
    c.p1 = 2.0;
    c.q1 = 4.0;
    res.reports.push_back(verify_embedding(bank, c));
  }
  {
    EmbeddingCase c;
    c.kind = EmbeddingKind::SobolevBesovL2;
    c.a1 = 1.0;
    res.reports.push_back(verify_embedding(bank, c, {}, 4.0));
  }
  return res;
}

SuiteResult suite_global(const std::optional<SolverConfig>&) {
  struct Tuple {
    std::string g1, g2;
    std::vector<double> params1;
    IntegralVerdict expected;
  };
  std::vector<Tuple> tuples = {
      {"constant_one", "constant_one", {}, IntegralVerdict::Divergent},
      {"log_half", "log_half", {}, IntegralVerdict::Divergent},
      {"power", "constant_one", {0.5}, IntegralVerdict::Convergent},
  };
  SuiteResult res;
  for (const auto& t : tuples) {
    auto r = check_global_integral(registered_g(t.g1, 2.0, t.params1), registered_g(t.g2, 2.0));
    r.report.pass = r.verdict == t.expected;
    if (!r.report.pass) r.report.note += " (expected the opposite classification)";
    res.reports.push_back(r.report);
  }
  return res;
}

SuiteResult suite_smoothing(const std::optional<SolverConfig>& config) {
  SolverConfig cfg;
  if (config) {
    cfg = *config;
  } else {
    cfg.n = 2;
    cfg.N = 32;
    cfg.nu = 0.5;
    cfg.gamma1 = 2.0;
    cfg.gamma2 = 1.0;
    cfg.alpha = 1.0;
    cfg.s1 = 0.5;
    cfg.s2 = 1.0;
    cfg.T = 0.5;
    cfg.dt = 5e-3;
    cfg.output_cadence = 10;
    cfg.initial_data.kind = "random_divfree";
    cfg.initial_data.amplitude = 0.1;
    cfg.initial_data.sigma = 2.5;
    cfg.seed = 11;
  }
  const SpectralField u0 = make_initial_data(cfg.initial_data, cfg.grid(), cfg.seed);
  const Trajectory traj = integrate(u0, cfg);
  const std::vector<double> r_list = {cfg.s1, cfg.s2, cfg.s1 + 1.0, cfg.s1 + 2.0};
  const auto rows = smoothing_diagnostic(traj, r_list, cfg.s1, cfg.gamma1);
  SuiteResult res;
  for (const auto& row : rows) {
    EstimateReport rep;
    rep.check = "smoothing";
    std::ostringstream label;
    label << "r=" << row.r;
    rep.case_label = label.str();
    rep.params["r"] = row.r;
    rep.params["attained_t"] = row.attained_t;
    rep.params["sup_half_exponent"] = row.supremum_half;
    rep.fitted_constant = row.supremum;
    rep.pass = std::isfinite(row.supremum) && !traj.blown_up;
    res.reports.push_back(rep);
  }
  return res;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"semigroup", "sobolev", "kernel", "mikhlin", "products", "embeddings", "global", "smoothing"};
}

SuiteResult run_suite(const std::string& name, const std::optional<SolverConfig>& config) {
  SuiteResult res;
  if (name == "semigroup") res = suite_semigroup(config);
  else if (name == "sobolev") res = suite_sobolev(config);
  else if (name == "kernel") res = suite_kernel(config);
  else if (name == "mikhlin") res = suite_mikhlin(config);
  else if (name == "products") res = suite_products(config);
  else if (name == "embeddings") res = suite_embeddings(config);
  else if (name == "global") res = suite_global(config);
  else if (name == "smoothing") res = suite_smoothing(config);
  else throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
  res.all_pass = std::all_of(res.reports.begin(), res.reports.end(),
                             [](const EstimateReport& r) { return r.pass; });
  return res;
}

}  // namespace leray
