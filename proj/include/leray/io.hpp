#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "leray/estimates.hpp"
#include "leray/field.hpp"
#include "leray/solver.hpp"

namespace leray {

// Fixed provenance line prepended to every CSV report (the discretization
// note all reports carry).
extern const char* kDomainNote;

// Spectral checkpoint: little-endian binary with header
//   magic "LRSF" | u32 version | u32 n | u32 N | f64 L | u32 ncomp
// followed by interleaved (re, im) f64 pairs, components outer, modes inner
// in row-major order. See docs/formats.md.
void write_checkpoint(const std::filesystem::path& path, const SpectralField& f);
SpectralField read_checkpoint(const std::filesystem::path& path);

// Run configuration: a single JSON document. Parse errors name the failing
// JSON path (e.g. "$.dt").
SolverConfig config_from_json_text(const std::string& text);
SolverConfig load_config(const std::filesystem::path& path);
std::string config_to_json_text(const SolverConfig& cfg);

// 17-significant-digit float formatting shared by every writer, so reruns
// are diffable.
std::string format_double(double v);

void write_reports_csv(const std::filesystem::path& path, const std::vector<EstimateReport>& reports);
void write_reports_json(const std::filesystem::path& path, const std::vector<EstimateReport>& reports);

void write_trajectory_csv(const std::filesystem::path& path, const Trajectory& traj);

struct RunManifest {
  std::string command;
  std::string config_path;
  std::string out_dir;
  std::string version;
  double wall_ms = 0.0;
  std::vector<std::string> outputs;
};

// Written last: completing the manifest marks the run as done.
void write_manifest(const std::filesystem::path& path, const RunManifest& manifest);

std::string version_string();

}  // namespace leray
