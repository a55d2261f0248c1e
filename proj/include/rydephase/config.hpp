#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rydephase/cloud.hpp"
#include "rydephase/interaction.hpp"
#include "rydephase/interference.hpp"

namespace rydephase {

enum class Scenario { fig1, decay, shorttime, ramsey, custom };
enum class Method { pair_sum, distance_mc, quadrature, asymptote_leading, asymptote_corrected, short_time };
enum class Spacing { linear, log };
enum class OutputFormat { csv, json, svg };
enum class Transform { none, ramsey };

std::string_view to_string(Scenario s);
std::string_view to_string(Method m);
std::optional<Scenario> parse_scenario(std::string_view name);
std::optional<Method> parse_method(std::string_view name);

struct TimeGrid {
  double start = 0.1;
  double stop = 1e4;
  int points = 60;
  Spacing spacing = Spacing::log;
  GridUnit unit = GridUnit::tau;

  std::vector<double> values() const;
};

/// Either an explicit (possibly anisotropic) cloud given by per-axis widths,
/// or a list of isotropic dimensions sharing one width. Non-integer
/// dimensions are allowed for the analytic methods only.
struct Geometry {
  std::optional<Vec3> axis_sigmas_um;
  std::vector<double> dimensions;
  std::optional<double> sigma_um;
};

struct PotentialEntry {
  int alpha = 6;
  double c_over_hbar_2pi_mhz = 0.0;  // 2π×MHz·μm^α as written in the config

  PotentialSpec spec() const { return PotentialSpec(alpha, two_pi_mhz(c_over_hbar_2pi_mhz)); }
};

// Principal-quantum-number scan at a fixed storage time.
struct LevelScan {
  CoefficientModel model;
  int n_min = 50;
  int n_max = 102;
  double storage_time_us = 0.3;
  std::optional<std::filesystem::path> table_csv;
  std::optional<std::filesystem::path> overlay_csv;
};

struct ExcitationSettings {
  double mean = 1.0;
  int m_max = 13;
};

struct MonteCarloSettings {
  std::size_t atom_count = 1000;
  std::size_t distance_samples = 100000;
  std::uint64_t seed = 1;
};

struct ExperimentConfig {
  Scenario scenario = Scenario::custom;
  Geometry geometry;
  std::vector<PotentialEntry> potentials;
  std::optional<LevelScan> level_scan;
  ExcitationSettings excitation;
  TimeGrid time_grid;
  MonteCarloSettings mc;
  double g2_bg = 0.0;
  std::vector<OutputFormat> outputs;
  std::vector<Method> methods;
  Transform transform = Transform::none;
  bool correlation = false;  // add g² columns to interference tables

  // Throws ValidationError listing every violated field.
  void validate() const;
};

// Built-in defaults for a scenario as a JSON document.
nlohmann::json scenario_defaults(Scenario scenario);

// Parses a config document; the scenario's defaults are merged underneath,
// so a config may override only what it changes. Relative paths resolve
// against `base_dir`. Throws ValidationError.
ExperimentConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

// Resolved configuration, written into the run summary.
nlohmann::json to_json(const ExperimentConfig& config);

}  // namespace rydephase
