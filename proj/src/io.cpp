#include "leray/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#ifndef LERAY_VERSION
#define LERAY_VERSION "0.1.0"
#endif

namespace leray {

using nlohmann::json;

const char* kDomainNote =
    "# domain: periodic torus [0,L)^n; operators applied as exact Fourier symbols per mode";

namespace {

void put_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

void put_f64(std::ostream& os, double d) {
  std::uint64_t v;
  std::memcpy(&v, &d, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double d;
  std::memcpy(&d, &v, 8);
  return d;
}

constexpr char kMagic[4] = {'L', 'R', 'S', 'F'};
constexpr std::uint32_t kCheckpointVersion = 1;

}  // namespace

void write_checkpoint(const std::filesystem::path& path, const SpectralField& f) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("write_checkpoint: cannot open " + path.string());
  os.write(kMagic, 4);
  put_u32(os, kCheckpointVersion);
  put_u32(os, static_cast<std::uint32_t>(f.grid.n));
  put_u32(os, static_cast<std::uint32_t>(f.grid.N));
  put_f64(os, f.grid.L);
  put_u32(os, static_cast<std::uint32_t>(f.ncomp));
  for (const auto& c : f.coeffs) {
    put_f64(os, c.real());
    put_f64(os, c.imag());
  }
  if (!os) throw std::runtime_error("write_checkpoint: write failed for " + path.string());
}

SpectralField read_checkpoint(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("read_checkpoint: cannot open " + path.string());
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) {
    throw std::runtime_error("read_checkpoint: bad magic in " + path.string());
  }
  const std::uint32_t version = get_u32(is);
  if (version != kCheckpointVersion) throw std::runtime_error("read_checkpoint: unsupported version");
  const int n = static_cast<int>(get_u32(is));
  const int N = static_cast<int>(get_u32(is));
  const double L = get_f64(is);
  const int ncomp = static_cast<int>(get_u32(is));
  TorusGrid grid(n, N, L);
  SpectralField f(grid, ncomp);
  for (auto& c : f.coeffs) {
    const double re = get_f64(is);
    const double im = get_f64(is);
    c = cplx{re, im};
  }
  if (!is) throw std::runtime_error("read_checkpoint: truncated file " + path.string());
  f.div_free = f.ncomp == grid.n && f.divergence_residual() <= 1e-12;
  return f;
}

namespace {

template <typename T>
T require(const json& j, const std::string& key, const char* type_name) {
  if (!j.contains(key)) throw std::invalid_argument("config: missing $." + key);
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument("config: $." + key + " must be " + type_name);
  }
}

template <typename T>
T optional_field(const json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument("config: bad value at $." + key);
  }
}

double exponent_field(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (v.is_string() && v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  if (v.is_number()) return v.get<double>();
  throw std::invalid_argument("config: $." + key + " must be a number or \"inf\"");
}

}  // namespace

SolverConfig config_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  SolverConfig cfg;
  cfg.n = require<int>(j, "n", "an integer");
  cfg.N = require<int>(j, "N", "an integer");
  cfg.L = optional_field<double>(j, "L", 2.0 * M_PI);
  cfg.alpha = optional_field<double>(j, "alpha", 0.0);
  cfg.nu = optional_field<double>(j, "nu", 1.0);
  cfg.gamma1 = require<double>(j, "gamma1", "a number");
  cfg.gamma2 = require<double>(j, "gamma2", "a number");
  if (j.contains("g1")) {
    cfg.g1_id = require<std::string>(j.at("g1"), "id", "a string");
    cfg.g1_params = optional_field<std::vector<double>>(j.at("g1"), "params", {});
  }
  if (j.contains("g2")) {
    cfg.g2_id = require<std::string>(j.at("g2"), "id", "a string");
    cfg.g2_params = optional_field<std::vector<double>>(j.at("g2"), "params", {});
  }
  cfg.s1 = optional_field<double>(j, "s1", 0.0);
  cfg.s2 = optional_field<double>(j, "s2", 0.5);
  cfg.p = exponent_field(j, "p", 2.0);
  cfg.q = exponent_field(j, "q", 2.0);
  cfg.T = require<double>(j, "T", "a number");
  cfg.dt = require<double>(j, "dt", "a number");
  const std::string form = optional_field<std::string>(j, "w_variant", "leray2");
  if (form == "leray2") {
    cfg.w_variant = WForm::OneMinusAlphaL2;
  } else if (form == "section3") {
    cfg.w_variant = WForm::OnePlusAlphaL2;
  } else {
    throw std::invalid_argument("config: $.w_variant must be \"leray2\" or \"section3\"");
  }
  cfg.seed = optional_field<std::uint64_t>(j, "seed", 1);
  cfg.output_cadence = optional_field<int>(j, "output_cadence", 10);
  cfg.disable_nonlinear = optional_field<bool>(j, "disable_nonlinear", false);
  cfg.blowup_factor = optional_field<double>(j, "blowup_factor", 1e6);
  cfg.eps_log = optional_field<double>(j, "eps_log", 0.05);
  if (j.contains("initial_data")) {
    const json& id = j.at("initial_data");
    cfg.initial_data.kind = require<std::string>(id, "kind", "a string");
    cfg.initial_data.sigma = optional_field<double>(id, "sigma", 2.0);
    cfg.initial_data.amplitude = optional_field<double>(id, "amplitude", 1.0);
    const auto mode = optional_field<std::vector<int>>(id, "mode", {1, 0, 0});
    const auto dir = optional_field<std::vector<double>>(id, "direction", {0.0, 1.0, 0.0});
    for (std::size_t d = 0; d < 3 && d < mode.size(); ++d) cfg.initial_data.mode[d] = mode[d];
    for (std::size_t d = 0; d < 3 && d < dir.size(); ++d) cfg.initial_data.direction[d] = dir[d];
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    // strip the struct prefix so the message leads with the offending field
    std::string msg = e.what();
    const auto pos = msg.find(": ");
    if (pos != std::string::npos) msg = msg.substr(pos + 2);
    throw std::invalid_argument("config: invalid value: " + msg);
  }
  return cfg;
}

SolverConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("config: cannot open " + path.string());
  std::stringstream ss;
  ss << is.rdbuf();
  return config_from_json_text(ss.str());
}

namespace {
json exponent_json(double v) {
  if (std::isinf(v)) return json("inf");
  return json(v);
}
}  // namespace

std::string config_to_json_text(const SolverConfig& cfg) {
  json j;
  j["n"] = cfg.n;
  j["N"] = cfg.N;
  j["L"] = cfg.L;
  j["alpha"] = cfg.alpha;
  j["nu"] = cfg.nu;
  j["gamma1"] = cfg.gamma1;
  j["g1"] = {{"id", cfg.g1_id}, {"params", cfg.g1_params}};
  j["gamma2"] = cfg.gamma2;
  j["g2"] = {{"id", cfg.g2_id}, {"params", cfg.g2_params}};
  j["s1"] = cfg.s1;
  j["s2"] = cfg.s2;
  j["p"] = exponent_json(cfg.p);
  j["q"] = exponent_json(cfg.q);
  j["T"] = cfg.T;
  j["dt"] = cfg.dt;
  j["w_variant"] = cfg.w_variant == WForm::OneMinusAlphaL2 ? "leray2" : "section3";
  j["seed"] = cfg.seed;
  j["output_cadence"] = cfg.output_cadence;
  j["disable_nonlinear"] = cfg.disable_nonlinear;
  j["blowup_factor"] = cfg.blowup_factor;
  j["eps_log"] = cfg.eps_log;
  j["initial_data"] = {{"kind", cfg.initial_data.kind},
                       {"sigma", cfg.initial_data.sigma},
                       {"amplitude", cfg.initial_data.amplitude},
                       {"mode", cfg.initial_data.mode},
                       {"direction", cfg.initial_data.direction}};
  return j.dump(2);
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {
std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string params_to_string(const std::map<std::string, double>& params) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ";";
    os << k << "=" << format_double(v);
    first = false;
  }
  return os.str();
}
}  // namespace

void write_reports_csv(const std::filesystem::path& path, const std::vector<EstimateReport>& reports) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_reports_csv: cannot open " + path.string());
  os << kDomainNote << "\n";
  os << "check,case,params,grid,n_samples,fitted_constant,fitted_exponent,predicted_exponent,"
        "tolerance,pass,note\n";
  for (const auto& r : reports) {
    os << csv_escape(r.check) << "," << csv_escape(r.case_label) << ","
       << csv_escape(params_to_string(r.params)) << "," << csv_escape(r.grid_desc) << ","
       << r.n_samples << "," << format_double(r.fitted_constant) << ","
       << format_double(r.fitted_exponent) << "," << format_double(r.predicted_exponent) << ","
       << format_double(r.tolerance) << "," << (r.pass ? "1" : "0") << "," << csv_escape(r.note)
       << "\n";
  }
}

namespace {
json report_to_json(const EstimateReport& r) {
  json j;
  j["check"] = r.check;
  j["case"] = r.case_label;
  j["params"] = r.params;
  j["grid"] = r.grid_desc;
  j["n_samples"] = r.n_samples;
  j["fitted_constant"] = r.fitted_constant;
  j["fitted_exponent"] = r.fitted_exponent;
  j["predicted_exponent"] = r.predicted_exponent;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["note"] = r.note;
  return j;
}
}  // namespace

void write_reports_json(const std::filesystem::path& path, const std::vector<EstimateReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(report_to_json(r));
  json doc;
  doc["domain_note"] = kDomainNote + 2;  // without the "# " comment marker
  doc["reports"] = arr;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_reports_json: cannot open " + path.string());
  os << doc.dump(2) << "\n";
}

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_trajectory_csv: cannot open " + path.string());
  os << kDomainNote << "\n";
  os << "t,l2,hs1,bs1_pq,bs2_pq,weighted_bs2\n";
  for (const auto& s : traj.samples) {
    os << format_double(s.t) << "," << format_double(s.l2) << "," << format_double(s.hs1) << ","
       << format_double(s.bs1) << "," << format_double(s.bs2) << ","
       << format_double(s.weighted_bs2) << "\n";
  }
}

void write_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  json j;
  j["command"] = manifest.command;
  j["config"] = manifest.config_path;
  j["out_dir"] = manifest.out_dir;
  j["version"] = manifest.version;
  j["wall_ms"] = manifest.wall_ms;
  j["outputs"] = manifest.outputs;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("write_manifest: cannot open " + path.string());
  os << j.dump(2) << "\n";
}

std::string version_string() { return LERAY_VERSION; }

}  // namespace leray
