#include "rydephase/config.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <utility>

#include "rydephase/correlation.hpp"
#include "rydephase/errors.hpp"

namespace rydephase {

using nlohmann::json;

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 5> kScenarioNames{{
    {Scenario::fig1, "fig1"},
    {Scenario::decay, "decay"},
    {Scenario::shorttime, "shorttime"},
    {Scenario::ramsey, "ramsey"},
    {Scenario::custom, "custom"},
}};

constexpr std::array<std::pair<Method, std::string_view>, 6> kMethodNames{{
    {Method::pair_sum, "pair_sum"},
    {Method::distance_mc, "distance_mc"},
    {Method::quadrature, "quadrature"},
    {Method::asymptote_leading, "asymptote_leading"},
    {Method::asymptote_corrected, "asymptote_corrected"},
    {Method::short_time, "short_time"},
}};

std::string coefficient_key(int alpha) { return "c_over_hbar_2pi_MHz_um" + std::to_string(alpha); }
std::string anchor_key(int alpha) { return "anchor_value_2pi_MHz_um" + std::to_string(alpha); }

bool is_integer_dimension(double d) { return d >= 1.0 && d <= 3.0 && d == std::floor(d); }

// Objects merge key by key, except these, which a config replaces wholesale.
bool replaced_wholesale(const std::string& key) { return key == "geometry" || key == "model"; }

void merge_into(json& base, const json& patch) {
  for (auto it = patch.begin(); it != patch.end(); ++it) {
    if (it->is_null()) {
      base.erase(it.key());
    } else if (it->is_object() && base.contains(it.key()) && base[it.key()].is_object() &&
               !replaced_wholesale(it.key())) {
      merge_into(base[it.key()], *it);
    } else {
      base[it.key()] = *it;
    }
  }
}

// Collects parse problems instead of failing on the first one.
class Reader {
 public:
  explicit Reader(std::vector<std::string>& problems) : problems_(problems) {}

  template <class T>
  std::optional<T> get(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) return std::nullopt;
    try {
      return obj.at(key).get<T>();
    } catch (const json::exception&) {
      problems_.push_back(where + "." + key + ": wrong type");
      return std::nullopt;
    }
  }

  template <class T>
  T get_or(const json& obj, const std::string& key, const std::string& where, T fallback) {
    return get<T>(obj, key, where).value_or(fallback);
  }

  void problem(std::string text) { problems_.push_back(std::move(text)); }

 private:
  std::vector<std::string>& problems_;
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? path : base / path;
}

}  // namespace

std::string_view to_string(Scenario s) {
  for (auto [value, name] : kScenarioNames)
    if (value == s) return name;
  return "unknown";
}

std::string_view to_string(Method m) {
  for (auto [value, name] : kMethodNames)
    if (value == m) return name;
  return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) {
  for (auto [value, n] : kScenarioNames)
    if (n == name) return value;
  return std::nullopt;
}

std::optional<Method> parse_method(std::string_view name) {
  for (auto [value, n] : kMethodNames)
    if (n == name) return value;
  return std::nullopt;
}

std::vector<double> TimeGrid::values() const {
  std::vector<double> out(static_cast<std::size_t>(std::max(points, 0)));
  if (points == 1) {
    out[0] = start;
    return out;
  }
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    out[static_cast<std::size_t>(i)] =
        spacing == Spacing::linear ? start + (stop - start) * f
                                   : std::pow(10.0, std::log10(start) + (std::log10(stop) - std::log10(start)) * f);
  }
  out.front() = start;
  out.back() = stop;
  return out;
}

json scenario_defaults(Scenario scenario) {
  json common = {
      {"excitation", {{"mean", 1.0}, {"m_max", 13}}},
      {"mc", {{"atom_count", 1000}, {"distance_samples", 100000}, {"seed", 1}}},
      {"background", {{"g2_bg", 0.0}}},
      {"outputs", {"csv", "json", "svg"}},
      {"transform", "none"},
      {"correlation", false},
  };
  const json dd = {{"alpha", 3}, {"c_over_hbar_2pi_MHz_um3", 1e5}};
  const json vdw = {{"alpha", 6}, {"c_over_hbar_2pi_MHz_um6", 5.3e7}};
  json doc = common;
  doc["scenario"] = std::string(to_string(scenario));
  switch (scenario) {
    case Scenario::fig1:
      doc["geometry"] = {{"axis_sigmas_um", {7.5, 3.2, 3.2}}};
      doc["potentials"] = json::array();
      doc["level_scan"] = {
          {"model",
           {{"kind", "scaling_law"},
            {"alpha", 6},
            {"anchor_n", 100},
            {"anchor_value_2pi_MHz_um6", 5.3e7},
            {"exponent", 11.0},
            {"quantum_defect", 3.13}}},
          {"n_min", 50},
          {"n_max", 102},
          {"storage_time_us", 0.3},
      };
      doc["time_grid"] = {{"start", 0.3}, {"stop", 0.3}, {"points", 1}, {"spacing", "linear"}, {"unit", "us"}};
      doc["methods"] = {"pair_sum"};
      break;
    case Scenario::decay:
      doc["geometry"] = {{"dimensions", {1, 2, 3}}, {"sigma_um", 15.0}};
      doc["potentials"] = {dd, vdw};
      doc["time_grid"] = {{"start", 0.1}, {"stop", 1e4}, {"points", 61}, {"spacing", "log"}, {"unit", "tau"}};
      doc["methods"] = {"pair_sum", "asymptote_leading", "asymptote_corrected"};
      break;
    case Scenario::shorttime:
      doc["geometry"] = {{"dimensions", {3}}, {"sigma_um", 15.0}};
      doc["potentials"] = {dd};
      doc["time_grid"] = {{"start", 1e-3}, {"stop", 1e3}, {"points", 121}, {"spacing", "log"}, {"unit", "tau"}};
      doc["methods"] = {"quadrature", "short_time", "asymptote_leading", "asymptote_corrected"};
      break;
    case Scenario::ramsey:
      doc["geometry"] = {{"dimensions", {3}}, {"sigma_um", 30.0}};
      doc["potentials"] = {dd};
      doc["time_grid"] = {{"start", 1e-2}, {"stop", 1e3}, {"points", 101}, {"spacing", "log"}, {"unit", "tau"}};
      doc["methods"] = {"quadrature", "asymptote_leading", "asymptote_corrected"};
      doc["transform"] = "ramsey";
      doc["correlation"] = true;
      break;
    case Scenario::custom:
      doc["geometry"] = {{"dimensions", {3}}, {"sigma_um", 15.0}};
      doc["potentials"] = {vdw};
      doc["time_grid"] = {{"start", 0.1}, {"stop", 1e3}, {"points", 41}, {"spacing", "log"}, {"unit", "tau"}};
      doc["methods"] = {"quadrature"};
      break;
  }
  return doc;
}

ExperimentConfig parse_config(const json& user, const std::filesystem::path& base_dir) {
  std::vector<std::string> problems;
  Reader rd(problems);
  if (!user.is_object()) throw ValidationError({"config root must be a JSON object"});

  ExperimentConfig cfg;
  const std::string scenario_name = rd.get_or<std::string>(user, "scenario", "config", "custom");
  const auto scenario = parse_scenario(scenario_name);
  if (!scenario) throw ValidationError({"scenario: unknown value '" + scenario_name + "'"});
  cfg.scenario = *scenario;

  json doc = scenario_defaults(cfg.scenario);
  merge_into(doc, user);

  // geometry
  const json& geo = doc["geometry"];
  if (auto sig = rd.get<std::vector<double>>(geo, "axis_sigmas_um", "geometry")) {
    if (sig->size() != 3) {
      rd.problem("geometry.axis_sigmas_um: expected 3 values");
    } else {
      cfg.geometry.axis_sigmas_um = Vec3{(*sig)[0], (*sig)[1], (*sig)[2]};
    }
  }
  cfg.geometry.dimensions = rd.get_or<std::vector<double>>(geo, "dimensions", "geometry", {});
  cfg.geometry.sigma_um = rd.get<double>(geo, "sigma_um", "geometry");

  // potentials
  if (doc.contains("potentials") && doc["potentials"].is_array()) {
    int k = 0;
    for (const auto& p : doc["potentials"]) {
      const std::string where = "potentials[" + std::to_string(k++) + "]";
      PotentialEntry entry;
      entry.alpha = rd.get_or<int>(p, "alpha", where, 0);
      if (entry.alpha != 3 && entry.alpha != 6) {
        rd.problem(where + ".alpha: must be 3 or 6");
        continue;
      }
      const auto c = rd.get<double>(p, coefficient_key(entry.alpha), where);
      if (!c) {
        rd.problem(where + ": missing " + coefficient_key(entry.alpha));
        continue;
      }
      entry.c_over_hbar_2pi_mhz = *c;
      cfg.potentials.push_back(entry);
    }
  } else if (doc.contains("potentials")) {
    rd.problem("potentials: expected an array");
  }

  // level scan
  if (doc.contains("level_scan") && doc["level_scan"].is_object()) {
    const json& ls = doc["level_scan"];
    LevelScan scan;
    scan.n_min = rd.get_or<int>(ls, "n_min", "level_scan", scan.n_min);
    scan.n_max = rd.get_or<int>(ls, "n_max", "level_scan", scan.n_max);
    scan.storage_time_us = rd.get_or<double>(ls, "storage_time_us", "level_scan", scan.storage_time_us);
    if (auto overlay = rd.get<std::string>(ls, "overlay_csv", "level_scan"))
      scan.overlay_csv = resolve(base_dir, *overlay);
    const json model = ls.value("model", json::object());
    CoefficientModel& m = scan.model;
    const std::string kind = rd.get_or<std::string>(model, "kind", "level_scan.model", "scaling_law");
    m.alpha = rd.get_or<int>(model, "alpha", "level_scan.model", 6);
    m.quantum_defect = rd.get_or<double>(model, "quantum_defect", "level_scan.model", 3.13);
    if (m.alpha != 3 && m.alpha != 6) rd.problem("level_scan.model.alpha: must be 3 or 6");
    if (kind == "scaling_law") {
      m.kind = CoefficientKind::scaling_law;
      m.anchor_n = rd.get_or<int>(model, "anchor_n", "level_scan.model", 100);
      const auto anchor = rd.get<double>(model, anchor_key(m.alpha), "level_scan.model");
      if (!anchor) rd.problem("level_scan.model: missing " + anchor_key(m.alpha));
      m.anchor_value = two_pi_mhz(anchor.value_or(0.0));
      m.exponent = rd.get_or<double>(model, "exponent", "level_scan.model",
                                     m.alpha == 3 || m.alpha == 6 ? default_scaling_exponent(m.alpha) : 0.0);
    } else if (kind == "table") {
      m.kind = CoefficientKind::table;
      const auto path = rd.get<std::string>(model, "table_csv", "level_scan.model");
      if (!path) {
        rd.problem("level_scan.model.table_csv: required for kind 'table'");
      } else {
        scan.table_csv = resolve(base_dir, *path);
        try {
          m.table = load_coefficient_table(*scan.table_csv);
        } catch (const std::exception& e) {
          rd.problem(std::string("level_scan.model.table_csv: ") + e.what());
        }
      }
    } else {
      rd.problem("level_scan.model.kind: must be 'scaling_law' or 'table'");
    }
    cfg.level_scan = std::move(scan);
  }

  // excitation, grid, MC, background
  const json& ex = doc["excitation"];
  cfg.excitation.mean = rd.get_or<double>(ex, "mean", "excitation", 1.0);
  cfg.excitation.m_max = rd.get_or<int>(ex, "m_max", "excitation", 13);

  const json& tg = doc["time_grid"];
  cfg.time_grid.start = rd.get_or<double>(tg, "start", "time_grid", cfg.time_grid.start);
  cfg.time_grid.stop = rd.get_or<double>(tg, "stop", "time_grid", cfg.time_grid.stop);
  cfg.time_grid.points = rd.get_or<int>(tg, "points", "time_grid", cfg.time_grid.points);
  const std::string spacing = rd.get_or<std::string>(tg, "spacing", "time_grid", "log");
  if (spacing == "log") cfg.time_grid.spacing = Spacing::log;
  else if (spacing == "linear") cfg.time_grid.spacing = Spacing::linear;
  else rd.problem("time_grid.spacing: must be 'linear' or 'log'");
  const std::string unit = rd.get_or<std::string>(tg, "unit", "time_grid", "tau");
  if (unit == "tau") cfg.time_grid.unit = GridUnit::tau;
  else if (unit == "us") cfg.time_grid.unit = GridUnit::microseconds;
  else rd.problem("time_grid.unit: must be 'tau' or 'us'");

  const json& mc = doc["mc"];
  const auto atoms = rd.get<long long>(mc, "atom_count", "mc");
  const auto draws = rd.get<long long>(mc, "distance_samples", "mc");
  if (atoms && *atoms < 0) rd.problem("mc.atom_count: must be non-negative");
  if (draws && *draws < 0) rd.problem("mc.distance_samples: must be non-negative");
  cfg.mc.atom_count = static_cast<std::size_t>(std::max(0LL, atoms.value_or(1000)));
  cfg.mc.distance_samples = static_cast<std::size_t>(std::max(0LL, draws.value_or(100000)));
  cfg.mc.seed = rd.get_or<std::uint64_t>(mc, "seed", "mc", 1);

  cfg.g2_bg = rd.get_or<double>(doc["background"], "g2_bg", "background", 0.0);

  for (const auto& name : rd.get_or<std::vector<std::string>>(doc, "methods", "config", {})) {
    if (auto m = parse_method(name)) cfg.methods.push_back(*m);
    else rd.problem("methods: unknown method '" + name + "'");
  }
  for (const auto& name : rd.get_or<std::vector<std::string>>(doc, "outputs", "config", {})) {
    if (name == "csv") cfg.outputs.push_back(OutputFormat::csv);
    else if (name == "json") cfg.outputs.push_back(OutputFormat::json);
    else if (name == "svg") cfg.outputs.push_back(OutputFormat::svg);
    else rd.problem("outputs: unknown format '" + name + "'");
  }
  const std::string transform = rd.get_or<std::string>(doc, "transform", "config", "none");
  if (transform == "none") cfg.transform = Transform::none;
  else if (transform == "ramsey") cfg.transform = Transform::ramsey;
  else rd.problem("transform: must be 'none' or 'ramsey'");
  cfg.correlation = rd.get_or<bool>(doc, "correlation", "config", false);

  if (!problems.empty()) throw ValidationError(std::move(problems));
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("config is not valid JSON: ") + e.what()});
  }
  return parse_config(doc, path.parent_path());
}

void ExperimentConfig::validate() const {
  std::vector<std::string> p;
  auto has = [&](Method m) { return std::find(methods.begin(), methods.end(), m) != methods.end(); };

  if (methods.empty()) p.push_back("methods: at least one method is required");
  if (outputs.empty()) p.push_back("outputs: at least one output format is required");

  // geometry
  const bool explicit_cloud = geometry.axis_sigmas_um.has_value();
  std::optional<double> cloud_dimension;  // isotropic dimension of the explicit cloud, if any
  if (explicit_cloud == !geometry.dimensions.empty())
    p.push_back("geometry: give exactly one of axis_sigmas_um or dimensions");
  if (explicit_cloud) {
    const Vec3& s = *geometry.axis_sigmas_um;
    double width = 0.0;
    bool isotropic = true;
    int axes = 0;
    for (double v : s) {
      if (!(v >= 0.0) || !std::isfinite(v)) p.push_back("geometry.axis_sigmas_um: widths must be >= 0");
      if (v > 0.0) {
        if (axes > 0 && v != width) isotropic = false;
        width = v;
        ++axes;
      }
    }
    if (axes == 0) p.push_back("geometry.axis_sigmas_um: at least one width must be positive");
    if (isotropic && axes > 0) cloud_dimension = axes;
  } else {
    if (!geometry.sigma_um || !(*geometry.sigma_um > 0.0))
      p.push_back("geometry.sigma_um: required and positive with dimensions");
    for (double d : geometry.dimensions)
      if (!(d > 0.0)) p.push_back("geometry.dimensions: every dimension must be positive");
  }
  if (geometry.sigma_um && !(*geometry.sigma_um > 0.0)) p.push_back("geometry.sigma_um: must be positive");

  std::vector<double> dims = explicit_cloud ? std::vector<double>{} : geometry.dimensions;
  if (explicit_cloud && cloud_dimension) dims.push_back(*cloud_dimension);
  const bool integer_dims = std::all_of(dims.begin(), dims.end(), is_integer_dimension);

  const bool analytic = has(Method::quadrature) || has(Method::asymptote_leading) ||
                        has(Method::asymptote_corrected) || has(Method::short_time);
  if (analytic && explicit_cloud && !cloud_dimension)
    p.push_back("methods: analytic methods need an isotropic geometry");
  if (has(Method::pair_sum) && !explicit_cloud && !integer_dims)
    p.push_back("methods: pair_sum needs axis_sigmas_um or integer dimensions 1..3");
  if (has(Method::distance_mc) && (!integer_dims || (explicit_cloud && !cloud_dimension)))
    p.push_back("methods: distance_mc needs an isotropic geometry of integer dimension 1..3");
  if (has(Method::short_time)) {
    for (double d : dims)
      if (d != 3.0) p.push_back("methods: short_time is only defined for dimension 3");
    for (const auto& pot : potentials)
      if (pot.alpha != 3) p.push_back("methods: short_time is only defined for alpha = 3");
  }

  // time grid
  if (time_grid.points < 1) p.push_back("time_grid.points: must be at least 1");
  if (time_grid.points > 1 && !(time_grid.stop > time_grid.start))
    p.push_back("time_grid: stop must exceed start (grid strictly increasing)");
  if (time_grid.points == 1 && time_grid.stop != time_grid.start)
    p.push_back("time_grid: a single point needs start == stop");
  if (time_grid.spacing == Spacing::log && !(time_grid.start > 0.0))
    p.push_back("time_grid.start: log spacing needs start > 0");
  if (!(time_grid.start >= 0.0)) p.push_back("time_grid.start: must be >= 0");
  if ((has(Method::asymptote_leading) || has(Method::asymptote_corrected) || has(Method::short_time)) &&
      !(time_grid.start > 0.0))
    p.push_back("time_grid.start: asymptotic and short-time forms need start > 0");

  // monte carlo
  if (has(Method::pair_sum) && mc.atom_count < 2) p.push_back("mc.atom_count: must be at least 2");
  if (has(Method::distance_mc) && mc.distance_samples < 100)
    p.push_back("mc.distance_samples: must be at least 100");

  // excitation and background
  if (!(excitation.mean > 0.0)) p.push_back("excitation.mean: must be positive");
  if (excitation.m_max < 2) p.push_back("excitation.m_max: must be at least 2");
  if (excitation.mean > 0.0 && excitation.m_max >= 0) {
    try {
      (void)poisson_amplitudes(excitation.mean, excitation.m_max);
    } catch (const TruncationError& e) {
      p.push_back("excitation.m_max: " + std::string(e.what()));
    }
  }
  if (!(g2_bg >= 0.0 && g2_bg <= 1.0)) p.push_back("background.g2_bg: must lie in [0, 1]");

  // scenario-specific
  if (scenario == Scenario::fig1) {
    if (!level_scan) {
      p.push_back("level_scan: required for fig1");
    } else {
      if (level_scan->n_min > level_scan->n_max) p.push_back("level_scan: n_min must not exceed n_max");
      if (!(level_scan->storage_time_us > 0.0)) p.push_back("level_scan.storage_time_us: must be positive");
      if (!(level_scan->n_min > level_scan->model.quantum_defect))
        p.push_back("level_scan.n_min: must exceed the quantum defect");
      try {
        level_scan->model.validate();
      } catch (const std::exception& e) {
        p.push_back(std::string("level_scan.model: ") + e.what());
      }
    }
    if (!has(Method::pair_sum)) p.push_back("methods: fig1 evaluates pair_sum");
  } else {
    if (potentials.empty()) p.push_back("potentials: at least one potential is required");
    for (const auto& pot : potentials)
      if (!(pot.c_over_hbar_2pi_mhz > 0.0)) p.push_back("potentials: coefficients must be positive");
  }

  if (!p.empty()) throw ValidationError(std::move(p));
}

json to_json(const ExperimentConfig& c) {
  json doc;
  doc["scenario"] = std::string(to_string(c.scenario));
  if (c.geometry.axis_sigmas_um) {
    const Vec3& s = *c.geometry.axis_sigmas_um;
    doc["geometry"]["axis_sigmas_um"] = {s[0], s[1], s[2]};
  } else {
    doc["geometry"]["dimensions"] = c.geometry.dimensions;
  }
  if (c.geometry.sigma_um) doc["geometry"]["sigma_um"] = *c.geometry.sigma_um;
  doc["potentials"] = json::array();
  for (const auto& p : c.potentials)
    doc["potentials"].push_back({{"alpha", p.alpha}, {coefficient_key(p.alpha), p.c_over_hbar_2pi_mhz}});
  if (c.level_scan) {
    const auto& ls = *c.level_scan;
    json model;
    model["alpha"] = ls.model.alpha;
    model["quantum_defect"] = ls.model.quantum_defect;
    if (ls.model.kind == CoefficientKind::scaling_law) {
      model["kind"] = "scaling_law";
      model["anchor_n"] = ls.model.anchor_n;
      model[anchor_key(ls.model.alpha)] = ls.model.anchor_value / two_pi_mhz(1.0);
      model["exponent"] = ls.model.exponent;
    } else {
      model["kind"] = "table";
      model["table_csv"] = ls.table_csv ? ls.table_csv->string() : "";
    }
    doc["level_scan"] = {{"model", model},
                         {"n_min", ls.n_min},
                         {"n_max", ls.n_max},
                         {"storage_time_us", ls.storage_time_us}};
    if (ls.overlay_csv) doc["level_scan"]["overlay_csv"] = ls.overlay_csv->string();
  }
  doc["excitation"] = {{"mean", c.excitation.mean}, {"m_max", c.excitation.m_max}};
  doc["time_grid"] = {{"start", c.time_grid.start},
                      {"stop", c.time_grid.stop},
                      {"points", c.time_grid.points},
                      {"spacing", c.time_grid.spacing == Spacing::log ? "log" : "linear"},
                      {"unit", c.time_grid.unit == GridUnit::tau ? "tau" : "us"}};
  doc["mc"] = {{"atom_count", c.mc.atom_count}, {"distance_samples", c.mc.distance_samples}, {"seed", c.mc.seed}};
  doc["background"] = {{"g2_bg", c.g2_bg}};
  doc["methods"] = json::array();
  for (Method m : c.methods) doc["methods"].push_back(std::string(to_string(m)));
  doc["outputs"] = json::array();
  for (OutputFormat f : c.outputs)
    doc["outputs"].push_back(f == OutputFormat::csv ? "csv" : f == OutputFormat::json ? "json" : "svg");
  doc["transform"] = c.transform == Transform::ramsey ? "ramsey" : "none";
  doc["correlation"] = c.correlation;
  return doc;
}

}  // namespace rydephase
