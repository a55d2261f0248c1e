#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rydephase/config.hpp"
#include "rydephase/correlation.hpp"
#include "rydephase/interference.hpp"
#include "rydephase/output.hpp"
#include "rydephase/parallel.hpp"

namespace rydephase {

struct RunOptions {
  std::filesystem::path out_dir = ".";
  Parallelism par;
  std::optional<std::uint64_t> seed_override;
};

// g² against principal quantum number at a fixed storage time.
struct LevelScanResult {
  std::vector<int> levels;
  std::vector<double> coefficients;  // rad·μm^α/μs
  std::vector<Complex> p;
  std::vector<StandardError> p_errors;
  std::vector<double> g2;
  std::vector<double> g2_double_only;
  std::vector<double> g2_bg;
  std::vector<double> g2_double_only_bg;
};

// Evaluates the fig1 pipeline; m_max overrides the configured truncation of
// the excitation sums (the distribution itself keeps the configured m_max).
LevelScanResult run_level_scan(const ExperimentConfig& config, Parallelism par,
                               std::optional<int> m_max = std::nullopt);

// One (potential, geometry) combination of an interference scenario.
struct CaseResult {
  std::string name;
  int alpha = 0;
  double dimension = 0.0;  // NaN for an anisotropic cloud
  double sigma_um = 0.0;
  double omega = 0.0;      // rad/μs
  std::vector<ComplexSeries> series;  // one per method, on the τ grid
  Table table;
  nlohmann::json timing;
};

std::vector<CaseResult> run_interference_cases(const ExperimentConfig& config, Parallelism par);

struct RunResult {
  std::vector<std::filesystem::path> files;
  nlohmann::json summary;
  nlohmann::json timing;
};

// Runs the scenario and writes the selected outputs into options.out_dir.
RunResult run(ExperimentConfig config, const RunOptions& options);

}  // namespace rydephase
