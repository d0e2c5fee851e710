// Command-line front door: run simulations, parameter admissibility checks
// and estimate-verification sweeps; emit CSV/JSON reports, checkpoints and a
// run manifest. Exit codes: 0 success, 1 config error, 2 blow-up flagged,
// 3 parameters not admissible.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "leray/io.hpp"
#include "leray/suites.hpp"

namespace fs = std::filesystem;
using namespace leray;

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

int cmd_simulate(const std::string& config_path, const std::string& out_dir,
                 std::optional<std::uint64_t> seed) {
  Timer timer;
  SolverConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  if (seed) cfg.seed = *seed;
  fs::create_directories(out_dir);

  SpectralField u0;
  try {
    u0 = make_initial_data(cfg.initial_data, cfg.grid(), cfg.seed);
  } catch (const std::exception& e) {
    std::cerr << "config: " << e.what() << "\n";
    return 1;
  }

  const Trajectory traj = integrate(u0, cfg);

  RunManifest man;
  man.command = "simulate";
  man.config_path = config_path;
  man.out_dir = out_dir;
  man.version = version_string();

  const fs::path traj_csv = fs::path(out_dir) / "trajectory.csv";
  write_trajectory_csv(traj_csv, traj);
  man.outputs.push_back(traj_csv.string());

  const fs::path cp0 = fs::path(out_dir) / "initial.lrsf";
  write_checkpoint(cp0, traj.samples.front().u);
  man.outputs.push_back(cp0.string());
  const fs::path cpT = fs::path(out_dir) / "final.lrsf";
  write_checkpoint(cpT, traj.samples.back().u);
  man.outputs.push_back(cpT.string());

  const fs::path cfg_echo = fs::path(out_dir) / "config_echo.json";
  {
    std::ofstream os(cfg_echo);
    os << config_to_json_text(cfg) << "\n";
  }
  man.outputs.push_back(cfg_echo.string());

  man.wall_ms = timer.ms();
  write_manifest(fs::path(out_dir) / "manifest.json", man);

  if (traj.blown_up) {
    std::cerr << "blow-up detected at t = " << format_double(traj.blowup_time)
              << "; trajectory truncated and flagged\n";
    return 2;
  }
  std::cout << "simulate: " << traj.steps_taken << " steps, final L2 = "
            << format_double(traj.samples.back().l2) << "\n";
  return 0;
}

int cmd_check_params(const std::string& config_path, const std::string& variant_name) {
  SolverConfig cfg;
  try {
    cfg = load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  AdmissibilityParams params;
  params.gamma1 = cfg.gamma1;
  params.gamma2 = cfg.gamma2;
  params.n = cfg.n;
  params.p = cfg.p;
  params.s1 = cfg.s1;
  params.s2 = cfg.s2;
  params.log_variant = cfg.g1_id == "log_half" || cfg.g2_id == "log_half";
  params.eps_log = cfg.eps_log;
  const TheoremVariant variant = variant_name == "B" ? TheoremVariant::B : TheoremVariant::A;

  const AdmissibilityResult res = check_admissibility(params, variant);
  std::cout << "variant " << (variant == TheoremVariant::A ? "A" : "B")
            << (res.log_variant ? " (log: gamma1 -> gamma1 - eps)" : "") << "\n";
  for (const auto& c : res.checks) {
    std::cout << (c.holds ? "  [ok]   " : "  [FAIL] ") << c.text << "   (lhs="
              << format_double(c.lhs) << ", rhs=" << format_double(c.rhs) << ")\n";
  }
  if (res.witness_k) std::cout << "  witness k = " << format_double(*res.witness_k) << "\n";
  if (res.witness_b) {
    std::cout << "  witness M = " << format_double(res.witness_b->M)
              << ", r = " << format_double(res.witness_b->r)
              << ", r1 = " << format_double(res.witness_b->r1)
              << ", r2 = " << format_double(res.witness_b->r2) << "\n";
  }
  std::cout << (res.admissible ? "ADMISSIBLE" : "REJECTED: " + res.failed_inequality) << "\n";
  return res.admissible ? 0 : 3;
}

int cmd_verify(const std::string& suite, const std::string& config_path, const std::string& out_dir) {
  Timer timer;
  std::optional<SolverConfig> cfg;
  if (!config_path.empty()) {
    try {
      cfg = load_config(config_path);
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
  }
  SuiteResult result;
  try {
    result = run_suite(suite, cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  fs::create_directories(out_dir);
  RunManifest man;
  man.command = "verify " + suite;
  man.config_path = config_path;
  man.out_dir = out_dir;
  man.version = version_string();
  const fs::path csv = fs::path(out_dir) / (suite + "_reports.csv");
  const fs::path jsn = fs::path(out_dir) / (suite + "_reports.json");
  write_reports_csv(csv, result.reports);
  write_reports_json(jsn, result.reports);
  man.outputs = {csv.string(), jsn.string()};
  man.wall_ms = timer.ms();
  write_manifest(fs::path(out_dir) / "manifest.json", man);

  for (const auto& r : result.reports) {
    std::cout << (r.pass ? "[pass] " : "[FAIL] ") << r.check << "  " << r.case_label;
    if (std::isfinite(r.fitted_exponent)) {
      std::cout << "  slope=" << format_double(r.fitted_exponent);
      if (std::isfinite(r.predicted_exponent))
        std::cout << " (predicted " << format_double(r.predicted_exponent) << ")";
    } else if (std::isfinite(r.fitted_constant)) {
      std::cout << "  C=" << format_double(r.fitted_constant);
    }
    if (!r.note.empty()) std::cout << "  [" << r.note << "]";
    std::cout << "\n";
  }
  return result.all_pass ? 0 : 1;
}

int cmd_besov_norm(const std::string& config_path, const std::string& checkpoint_path,
                   const std::string& out_dir, std::vector<double> s_list, double p, double q) {
  SpectralField f;
  SolverConfig cfg;
  try {
    if (!checkpoint_path.empty()) {
      f = read_checkpoint(checkpoint_path);
    } else if (!config_path.empty()) {
      cfg = load_config(config_path);
      f = make_initial_data(cfg.initial_data, cfg.grid(), cfg.seed);
    } else {
      std::cerr << "besov-norm: need --config or --checkpoint\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  if (s_list.empty()) s_list = {0.0, 0.5, 1.0};
  const LPFilterBank bank(f.grid);
  fs::create_directories(out_dir);
  const fs::path csv = fs::path(out_dir) / "besov_norms.csv";
  std::ofstream os(csv);
  os << kDomainNote << "\n";
  os << "s,p,q,norm\n";
  for (double s : s_list) {
    const double nrm = besov_norm(f, BesovParams{s, p, q}, bank);
    os << format_double(s) << "," << format_double(p) << "," << format_double(q) << ","
       << format_double(nrm) << "\n";
    std::cout << "B^" << s << "_{" << p << "," << q << "} = " << format_double(nrm) << "\n";
  }
  RunManifest man;
  man.command = "besov-norm";
  man.config_path = config_path.empty() ? checkpoint_path : config_path;
  man.out_dir = out_dir;
  man.version = version_string();
  man.outputs = {csv.string()};
  write_manifest(fs::path(out_dir) / "manifest.json", man);
  return 0;
}

int cmd_info() {
  std::cout << "leray " << version_string() << "\n";
  std::cout << "registered g families: constant_one, log_half, power(eps), mikhlin_custom(c0,c1,...)\n";
  std::cout << "verify suites:";
  for (const auto& s : suite_names()) std::cout << " " << s;
  std::cout << "\n";
  std::cout << "sweep threads: " << sweep_threads() << " (cap with LERAY_THREADS)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pseudo-spectral generalized Leray-alpha solver and estimate verification toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", variant = "A", suite, checkpoint_path;
  std::optional<std::uint64_t> seed;
  std::vector<double> s_list;
  double p = 2.0, q = 2.0;

  auto* sim = app.add_subcommand("simulate", "integrate a configured run, write trajectory CSV and checkpoints");
  sim->add_option("--config", config_path, "JSON run configuration")->required();
  sim->add_option("--out", out_dir, "output directory");
  sim->add_option("--seed", seed, "override the config seed");

  auto* chk = app.add_subcommand("check-params", "evaluate the local-existence parameter inequalities");
  chk->add_option("--config", config_path, "JSON run configuration")->required();
  chk->add_option("--variant", variant, "A or B")->check(CLI::IsMember({"A", "B"}));

  auto* ver = app.add_subcommand("verify", "run an estimate-verification suite");
  ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  ver->add_option("--config", config_path, "optional JSON run configuration");
  ver->add_option("--out", out_dir, "output directory");

  auto* bnorm = app.add_subcommand("besov-norm", "Besov norms of a configured field or checkpoint");
  bnorm->add_option("--config", config_path, "JSON run configuration (field from initial_data)");
  bnorm->add_option("--checkpoint", checkpoint_path, "spectral checkpoint file");
  bnorm->add_option("--out", out_dir, "output directory");
  bnorm->add_option("-s", s_list, "regularity values");
  bnorm->add_option("-p", p, "integrability exponent");
  bnorm->add_option("-q", q, "summability exponent");

  app.add_subcommand("info", "print version and registry information");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return cmd_simulate(config_path, out_dir, seed);
    if (chk->parsed()) return cmd_check_params(config_path, variant);
    if (ver->parsed()) return cmd_verify(suite, config_path, out_dir);
    if (bnorm->parsed()) return cmd_besov_norm(config_path, checkpoint_path, out_dir, s_list, p, q);
    return cmd_info();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
