#include "rydephase/runner.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "rydephase/asymptotics.hpp"
#include "rydephase/errors.hpp"

namespace rydephase {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool wants(const ExperimentConfig& c, OutputFormat f) {
  return std::find(c.outputs.begin(), c.outputs.end(), f) != c.outputs.end();
}

std::string potential_name(int alpha) { return alpha == 3 ? "dd" : "vdw"; }

struct CaseSpec {
  PotentialSpec pot;
  double dimension;  // NaN when the cloud is anisotropic
  double sigma;
  std::optional<Vec3> axis_sigmas;
  std::string name;
};

std::vector<CaseSpec> enumerate_cases(const ExperimentConfig& c) {
  std::vector<CaseSpec> out;
  for (const auto& entry : c.potentials) {
    const PotentialSpec pot = entry.spec();
    const std::string prefix = std::string(to_string(c.scenario)) + "_" + potential_name(entry.alpha);
    if (c.geometry.axis_sigmas_um) {
      const Vec3& s = *c.geometry.axis_sigmas_um;
      double width = 0.0;
      int axes = 0;
      bool isotropic = true;
      for (double v : s)
        if (v > 0.0) {
          if (axes && v != width) isotropic = false;
          width = std::max(width, v);
          ++axes;
        }
      const double dim = isotropic ? axes : std::numeric_limits<double>::quiet_NaN();
      out.push_back({pot, dim, c.geometry.sigma_um.value_or(width), s, prefix + "_cloud"});
    } else {
      for (double d : c.geometry.dimensions)
        out.push_back({pot, d, *c.geometry.sigma_um, std::nullopt, prefix + "_D" + format_number(d)});
    }
  }
  return out;
}

ComplexSeries from_values(std::span<const double> taus, std::vector<Complex> values, std::string method) {
  ComplexSeries s;
  s.unit = GridUnit::tau;
  s.grid.assign(taus.begin(), taus.end());
  s.values = std::move(values);
  s.meta.method = std::move(method);
  return s;
}

class CaseEvaluator {
 public:
  CaseEvaluator(const CaseSpec& spec, const ExperimentConfig& cfg, Parallelism par)
      : spec_(spec), cfg_(cfg), par_(par), omega_(characteristic_frequency(spec.pot, spec.sigma)) {}

  double omega() const { return omega_; }

  ComplexSeries operator()(Method m, std::span<const double> taus) {
    const int alpha = spec_.pot.alpha();
    const double d = spec_.dimension;
    switch (m) {
      case Method::pair_sum: {
        const PairShiftTable& table = shift_table();
        std::vector<double> times(taus.begin(), taus.end());
        for (double& t : times) t /= omega_;
        ComplexSeries s = table.evaluate(spec_.pot.c_over_hbar(), times, par_);
        s.unit = GridUnit::tau;
        s.grid.assign(taus.begin(), taus.end());
        s.meta.seed = cfg_.mc.seed;
        return s;
      }
      case Method::distance_mc:
        return distance_mc(static_cast<int>(d), alpha, taus, cfg_.mc.distance_samples, cfg_.mc.seed, par_);
      case Method::quadrature:
        return quadrature(d, alpha, taus, par_);
      case Method::asymptote_leading:
      case Method::asymptote_corrected: {
        const AsymptoteSpec a{alpha, d,
                              m == Method::asymptote_leading ? AsymptoticOrder::leading : AsymptoticOrder::corrected};
        std::vector<Complex> v;
        for (double t : taus) v.push_back(asymptote(a, t));
        return from_values(taus, std::move(v), std::string(to_string(m)));
      }
      case Method::short_time: {
        std::vector<Complex> v;
        for (double t : taus) v.push_back(short_time_dd3(t));
        return from_values(taus, std::move(v), "short_time");
      }
    }
    throw InvalidArgumentError("unknown method");
  }

 private:
  const PairShiftTable& shift_table() {
    if (!table_) {
      const AtomCloud cloud =
          spec_.axis_sigmas ? sample_gaussian_cloud(*spec_.axis_sigmas, cfg_.mc.atom_count, cfg_.mc.seed)
                            : sample_isotropic_cloud(static_cast<int>(spec_.dimension), spec_.sigma,
                                                     cfg_.mc.atom_count, cfg_.mc.seed);
      table_.emplace(cloud, spec_.pot.alpha());
    }
    return *table_;
  }

  const CaseSpec& spec_;
  const ExperimentConfig& cfg_;
  Parallelism par_;
  double omega_;
  std::optional<PairShiftTable> table_;
};

json error_stats(const ComplexSeries& s) {
  json j = {{"method", s.meta.method}, {"points", s.size()}, {"samples", s.meta.samples}};
  if (s.meta.seed) j["seed"] = *s.meta.seed;
  if (s.errors && !s.errors->empty()) {
    double max_err = 0.0, mean_err = 0.0;
    for (const auto& e : *s.errors) {
      const double v = std::hypot(e.re, e.im);
      max_err = std::max(max_err, v);
      mean_err += v;
    }
    j["stderr_max"] = max_err;
    j["stderr_mean"] = mean_err / static_cast<double>(s.errors->size());
  }
  return j;
}

}  // namespace

LevelScanResult run_level_scan(const ExperimentConfig& cfg, Parallelism par, std::optional<int> m_max) {
  if (!cfg.level_scan) throw ValidationError({"level_scan: required"});
  const LevelScan& scan = *cfg.level_scan;
  const ExcitationDistribution dist = poisson_amplitudes(cfg.excitation.mean, cfg.excitation.m_max);
  const int sum_limit = m_max.value_or(cfg.excitation.m_max);

  const AtomCloud cloud =
      cfg.geometry.axis_sigmas_um
          ? sample_gaussian_cloud(*cfg.geometry.axis_sigmas_um, cfg.mc.atom_count, cfg.mc.seed)
          : sample_isotropic_cloud(static_cast<int>(cfg.geometry.dimensions.at(0)), *cfg.geometry.sigma_um,
                                   cfg.mc.atom_count, cfg.mc.seed);
  const PairShiftTable table(cloud, scan.model.alpha);

  LevelScanResult r;
  for (int n = scan.n_min; n <= scan.n_max; ++n) {
    r.levels.push_back(n);
    r.coefficients.push_back(coefficient_for_level(n, scan.model));
  }
  const std::size_t count = r.levels.size();
  r.p.resize(count);
  r.p_errors.resize(count);
  const double ts = scan.storage_time_us;
  parallel_for(count, par, [&](std::size_t k) {
    const ComplexSeries s = table.evaluate(r.coefficients[k], std::span<const double>(&ts, 1));
    r.p[k] = s.values[0];
    r.p_errors[k] = (*s.errors)[0];
  });

  std::vector<double> p_abs(count);
  for (std::size_t k = 0; k < count; ++k) p_abs[k] = std::abs(r.p[k]);
  r.g2 = g2_series(dist, p_abs, sum_limit).g2;
  r.g2_double_only = g2_double_only(dist, p_abs).g2;
  for (std::size_t k = 0; k < count; ++k) {
    r.g2_bg.push_back(apply_background(r.g2[k], cfg.g2_bg));
    r.g2_double_only_bg.push_back(apply_background(r.g2_double_only[k], cfg.g2_bg));
  }
  return r;
}

std::vector<CaseResult> run_interference_cases(const ExperimentConfig& cfg, Parallelism par) {
  std::vector<CaseResult> results;
  const std::vector<double> grid = cfg.time_grid.values();
  const ExcitationDistribution dist = poisson_amplitudes(cfg.excitation.mean, cfg.excitation.m_max);

  for (const CaseSpec& spec : enumerate_cases(cfg)) {
    CaseEvaluator evaluate(spec, cfg, par);
    CaseResult cr;
    cr.name = spec.name;
    cr.alpha = spec.pot.alpha();
    cr.dimension = spec.dimension;
    cr.sigma_um = spec.sigma;
    cr.omega = evaluate.omega();
    cr.timing = json::object();

    // grid in τ and in μs, whichever the config used
    std::vector<double> taus = grid, times = grid;
    if (cfg.time_grid.unit == GridUnit::microseconds)
      for (double& t : taus) t *= cr.omega;
    else
      for (double& t : times) t /= cr.omega;
    cr.table.columns.push_back({"tau", taus});
    cr.table.columns.push_back({"t_us", times});

    for (Method m : cfg.methods) {
      const auto start = Clock::now();
      ComplexSeries s = cfg.transform == Transform::ramsey
                            ? ramsey_transform(taus, [&](std::span<const double> doubled) { return evaluate(m, doubled); })
                            : evaluate(m, taus);
      cr.timing[std::string(to_string(m))] = seconds_since(start);

      const std::string name(to_string(m));
      std::vector<double> re, im;
      for (const Complex& v : s.values) {
        re.push_back(v.real());
        im.push_back(v.imag());
      }
      cr.table.columns.push_back({name + "_re", re});
      cr.table.columns.push_back({name + "_im", im});
      cr.table.columns.push_back({name + "_abs2", s.abs2()});
      if (s.errors) {
        std::vector<double> er, ei;
        for (const auto& e : *s.errors) {
          er.push_back(e.re);
          ei.push_back(e.im);
        }
        cr.table.columns.push_back({name + "_err_re", er});
        cr.table.columns.push_back({name + "_err_im", ei});
        cr.table.columns.push_back({name + "_abs2_debiased", s.abs2_bias_corrected()});
      }
      if (cfg.correlation) {
        std::vector<double> g2, g2_bg;
        for (const Complex& v : s.values) {
          const double a = std::abs(v);
          double g = std::numeric_limits<double>::quiet_NaN();
          if (cfg.transform == Transform::ramsey) g = g2_longtime(dist, a);
          else if (a <= 1.0) g = g2_series(dist, std::span<const double>(&a, 1), cfg.excitation.m_max).g2[0];
          g2.push_back(g);
          g2_bg.push_back(std::isnan(g) ? g : apply_background(g, cfg.g2_bg));
        }
        cr.table.columns.push_back({name + "_g2", g2});
        cr.table.columns.push_back({name + "_g2_bg", g2_bg});
      }
      cr.series.push_back(std::move(s));
    }
    results.push_back(std::move(cr));
  }
  return results;
}

namespace {

std::vector<std::pair<double, double>> load_overlay(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open overlay data " + path.string());
  std::string line;
  std::getline(in, line);  // header n,g2
  std::vector<std::pair<double, double>> points;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string a, b;
    if (std::getline(fields, a, ',') && std::getline(fields, b, ',')) {
      try {
        points.emplace_back(std::stod(a), std::stod(b));
      } catch (const std::logic_error&) {
        throw IoError("overlay data " + path.string() + ": cannot parse '" + line + "'");
      }
    }
  }
  return points;
}

}  // namespace

RunResult run(ExperimentConfig cfg, const RunOptions& options) {
  if (options.seed_override) cfg.mc.seed = *options.seed_override;
  cfg.validate();

  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + options.out_dir.string() + ": " + ec.message());

  RunResult result;
  result.summary = {{"scenario", std::string(to_string(cfg.scenario))}, {"config", to_json(cfg)}};
  result.timing = json::object();
  const std::string scenario(to_string(cfg.scenario));

  if (cfg.scenario == Scenario::fig1) {
    const auto start = Clock::now();
    const LevelScanResult r = run_level_scan(cfg, options.par);
    result.timing[scenario] = {{"pair_sum", seconds_since(start)}};

    std::vector<double> n, c, re, im, abs2, er, ei;
    for (std::size_t k = 0; k < r.levels.size(); ++k) {
      n.push_back(r.levels[k]);
      c.push_back(r.coefficients[k] / two_pi_mhz(1.0));
      re.push_back(r.p[k].real());
      im.push_back(r.p[k].imag());
      abs2.push_back(std::norm(r.p[k]));
      er.push_back(r.p_errors[k].re);
      ei.push_back(r.p_errors[k].im);
    }
    const std::string c_name = "c_over_hbar_2pi_MHz_um" + std::to_string(cfg.level_scan->model.alpha);
    Table table{{{"n", n}, {c_name, c}, {"p_re", re}, {"p_im", im}, {"p_abs2", abs2}, {"p_err_re", er},
                 {"p_err_im", ei}, {"g2", r.g2}, {"g2_double_only", r.g2_double_only}, {"g2_bg", r.g2_bg},
                 {"g2_double_only_bg", r.g2_double_only_bg}}};
    if (wants(cfg, OutputFormat::csv)) {
      const auto path = options.out_dir / "fig1.csv";
      emit_csv(path, table);
      result.files.push_back(path);
    }
    if (wants(cfg, OutputFormat::svg)) {
      PlotSpec plot{"g2 vs principal quantum number", "n", "g2", false, false,
                    {{"multi-excitation", n, r.g2_bg, false}, {"double excitation", n, r.g2_double_only_bg, false}}};
      if (cfg.level_scan->overlay_csv) {
        PlotSeries dots{"data", {}, {}, true};
        for (auto [x, y] : load_overlay(*cfg.level_scan->overlay_csv)) {
          dots.x.push_back(x);
          dots.y.push_back(y);
        }
        plot.series.push_back(std::move(dots));
      }
      const auto path = options.out_dir / "fig1.svg";
      emit_svg(path, plot);
      result.files.push_back(path);
    }
    double max_err = 0.0;
    for (const auto& e : r.p_errors) max_err = std::max(max_err, std::hypot(e.re, e.im));
    result.summary["cases"] = json::array({{{"name", "fig1"},
                                            {"file", "fig1.csv"},
                                            {"levels", r.levels.size()},
                                            {"atoms", cfg.mc.atom_count},
                                            {"seed", cfg.mc.seed},
                                            {"p_stderr_max", max_err}}});
  } else {
    const auto cases = run_interference_cases(cfg, options.par);
    result.summary["cases"] = json::array();
    for (const auto& cr : cases) {
      json entry = {{"name", cr.name},
                    {"alpha", cr.alpha},
                    {"sigma_um", cr.sigma_um},
                    {"omega_rad_per_us", cr.omega},
                    {"methods", json::array()}};
      entry["dimension"] = std::isnan(cr.dimension) ? json(nullptr) : json(cr.dimension);
      for (const auto& s : cr.series) entry["methods"].push_back(error_stats(s));
      if (wants(cfg, OutputFormat::csv)) {
        const auto path = options.out_dir / (cr.name + ".csv");
        emit_csv(path, cr.table);
        result.files.push_back(path);
        entry["file"] = path.filename().string();
      }
      if (wants(cfg, OutputFormat::svg)) {
        const bool g2_plot = cfg.correlation;
        PlotSpec plot{cr.name, "tau", g2_plot ? "g2" : "|P|^2", true, !g2_plot, {}};
        const auto& taus = cr.table.columns[0].values;
        for (std::size_t i = 0; i < cr.series.size(); ++i) {
          const ComplexSeries& s = cr.series[i];
          const std::string g2_name = std::string(to_string(cfg.methods[i])) + "_g2";
          std::vector<double> y;
          if (g2_plot) {
            for (const auto& col : cr.table.columns)
              if (col.name == g2_name) y = col.values;
          } else {
            y = s.abs2();
          }
          plot.series.push_back({s.meta.method, taus, y, false});
        }
        const auto path = options.out_dir / (cr.name + ".svg");
        emit_svg(path, plot);
        result.files.push_back(path);
      }
      result.summary["cases"].push_back(entry);
      result.timing[cr.name] = cr.timing;
    }
  }

  if (wants(cfg, OutputFormat::json)) {
    auto files = json::array();
    for (const auto& f : result.files) files.push_back(f.filename().string());
    result.summary["files"] = files;
    const auto summary_path = options.out_dir / "summary.json";
    emit_json(summary_path, result.summary);
    const auto timing_path = options.out_dir / "timing.json";
    emit_json(timing_path, {{"threads", options.par.threads}, {"seconds", result.timing}});
    result.files.push_back(summary_path);
    result.files.push_back(timing_path);
  }
  return result;
}

}  // namespace rydephase
