#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rydephase/config.hpp"
#include "rydephase/errors.hpp"
#include "rydephase/output.hpp"
#include "rydephase/runner.hpp"

using namespace rydephase;
using nlohmann::json;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path fresh_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("rydephase_runner_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

ExperimentConfig small_custom() {
  return parse_config({{"scenario", "custom"},
                       {"geometry", {{"dimensions", {2, 3}}, {"sigma_um", 15.0}}},
                       {"methods", {"quadrature", "distance_mc", "pair_sum"}},
                       {"mc", {{"atom_count", 200}, {"distance_samples", 2000}, {"seed", 3}}},
                       {"time_grid", {{"start", 0.1}, {"stop", 10.0}, {"points", 4}}}});
}

}  // namespace

TEST(Output, NumberFormatting) {
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(format_number(1e-300), "1e-300");
  EXPECT_EQ(format_number(3.0), "3");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(-INFINITY), "-inf");
}

TEST(Output, CsvLayout) {
  const Table t{{{"tau", {0.5, 1.0}}, {"p_re", {0.25, -1.5}}}};
  EXPECT_EQ(render_csv(t), "tau,p_re\n0.5,0.25\n1,-1.5\n");
  EXPECT_THROW(emit_csv("/nonexistent_dir/x.csv", t), IoError);
}

TEST(Output, SvgIsWellFormed) {
  const PlotSpec plot{"t", "x", "y", true, true, {{"a", {1, 10, 100}, {1, 0.1, 0.01}, false}, {"b", {2}, {0.5}, true}}};
  const std::string svg = render_svg(plot);
  EXPECT_EQ(svg.rfind("<svg", 0) == 0 || svg.rfind("<?xml", 0) == 0, true);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_NE(svg.find("polyline"), std::string::npos);
  EXPECT_NE(svg.find("circle"), std::string::npos);
}

TEST(Runner, WritesOneCsvPerCase) {
  const auto dir = fresh_dir("cases");
  const auto r = run(small_custom(), {dir, {2}, std::nullopt});
  EXPECT_TRUE(std::filesystem::exists(dir / "custom_vdw_D2.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "custom_vdw_D3.csv"));
  EXPECT_TRUE(std::filesystem::exists(dir / "summary.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "timing.json"));
  const std::string csv = slurp(dir / "custom_vdw_D3.csv");
  const std::string header = csv.substr(0, csv.find('\n'));
  for (const char* col : {"tau", "t_us", "quadrature_re", "distance_mc_err_re", "pair_sum_abs2_debiased"})
    EXPECT_NE(header.find(col), std::string::npos) << col;
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(r.summary["cases"].size(), 2u);
  EXPECT_TRUE(r.summary["cases"][0]["methods"][1].contains("stderr_max"));
}

TEST(Runner, SummaryIsDeterministicAndSeedSensitive) {
  const auto a = fresh_dir("det_a"), b = fresh_dir("det_b"), c = fresh_dir("det_c");
  run(small_custom(), {a, {1}, std::nullopt});
  run(small_custom(), {b, {3}, std::nullopt});
  run(small_custom(), {c, {1}, 99});
  EXPECT_EQ(slurp(a / "summary.json"), slurp(b / "summary.json"));
  EXPECT_EQ(slurp(a / "custom_vdw_D3.csv"), slurp(b / "custom_vdw_D3.csv"));
  EXPECT_NE(slurp(a / "custom_vdw_D3.csv"), slurp(c / "custom_vdw_D3.csv"));
}

TEST(Runner, InvalidConfigWritesNothing) {
  auto cfg = small_custom();
  cfg.methods.clear();
  const auto dir = fresh_dir("invalid");
  EXPECT_THROW(run(cfg, {dir, {1}, std::nullopt}), ValidationError);
  EXPECT_FALSE(std::filesystem::exists(dir));
}

TEST(Runner, MicrosecondGridIsConverted) {
  auto cfg = small_custom();
  cfg.time_grid = {0.0, 1.0, 3, Spacing::linear, GridUnit::microseconds};
  cfg.methods = {Method::quadrature};
  const auto cases = run_interference_cases(cfg, {1});
  ASSERT_EQ(cases.size(), 2u);
  const auto& tau = cases[0].table.columns[0].values;
  EXPECT_EQ(tau[0], 0.0);
  EXPECT_NEAR(tau[2], cases[0].omega, 1e-12);
  EXPECT_EQ(cases[0].table.columns[1].values[1], 0.5);
}

TEST(Runner, RamseyCorrelationColumns) {
  auto cfg = parse_config({{"scenario", "ramsey"}, {"time_grid", {{"stop", 1e5}, {"points", 5}}}, {"methods", {"quadrature"}}});
  const auto cases = run_interference_cases(cfg, {1});
  ASSERT_EQ(cases.size(), 1u);
  bool found = false;
  for (const auto& col : cases[0].table.columns)
    if (col.name == "quadrature_g2") {
      found = true;
      EXPECT_NEAR(col.values.back(), 4.0 * std::exp(1.0) / 25.0, 1e-6);
    }
  EXPECT_TRUE(found);
}

TEST(Runner, LevelScanShape) {
  auto cfg = parse_config({{"scenario", "fig1"}, {"mc", {{"atom_count", 300}}}, {"background", {{"g2_bg", 0.1}}}});
  const auto r = run_level_scan(cfg, {2});
  ASSERT_EQ(r.levels.size(), 53u);
  for (std::size_t k = 0; k < r.levels.size(); ++k) {
    EXPECT_LE(r.g2[k], 1.0);
    EXPECT_GE(r.g2[k], 0.0);
    EXPECT_NEAR(r.g2_bg[k], 0.9 * r.g2[k] + 0.1, 1e-15);
    if (k > 0) EXPECT_LE(r.g2[k], r.g2[k - 1] + 0.02);
  }
  EXPECT_GT(r.g2.front(), r.g2.back());
}

TEST(Runner, Fig1OutputsAndOverlay) {
  const auto dir = fresh_dir("fig1");
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "dots.csv") << "n,g2\n60,0.5\n80,0.2\n";
  auto cfg = parse_config({{"scenario", "fig1"},
                           {"mc", {{"atom_count", 200}}},
                           {"level_scan", {{"n_min", 60}, {"n_max", 70}, {"overlay_csv", (dir / "dots.csv").string()}}}});
  run(cfg, {dir, {1}, std::nullopt});
  const std::string csv = slurp(dir / "fig1.csv");
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,c_over_hbar_2pi_MHz_um6,p_re,p_im,p_abs2,p_err_re,p_err_im,g2,g2_double_only,g2_bg,g2_double_only_bg");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 12);
  EXPECT_NE(slurp(dir / "fig1.svg").find("circle"), std::string::npos);

  std::ofstream(dir / "bad.csv") << "n,g2\n60,x\n";
  cfg.level_scan->overlay_csv = dir / "bad.csv";
  EXPECT_THROW(run(cfg, {dir, {1}, std::nullopt}), IoError);
}
