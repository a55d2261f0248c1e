// Command-line driver: run a scenario config, list built-in scenarios.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rydephase/config.hpp"
#include "rydephase/errors.hpp"
#include "rydephase/runner.hpp"

namespace {

constexpr int kExitError = 1;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interference and photon correlations of Rydberg-blockaded atom clouds"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  unsigned threads = 1;
  std::optional<std::uint64_t> seed;

  auto* run = app.add_subcommand("run", "Run the scenario described by a JSON config");
  run->add_option("config", config_path, "Config file")->required()->check(CLI::ExistingFile);
  run->add_option("--out", out_dir, "Output directory (default: $RYDEPHASE_OUT_DIR or .)");
  run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  run->add_option("--seed", seed, "Override the Monte Carlo seed");

  auto* list = app.add_subcommand("scenarios", "Print the built-in scenario defaults");

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) {
      for (auto s : {rydephase::Scenario::fig1, rydephase::Scenario::decay, rydephase::Scenario::shorttime,
                     rydephase::Scenario::ramsey, rydephase::Scenario::custom})
        std::cout << rydephase::to_string(s) << '\n' << rydephase::scenario_defaults(s).dump(2) << "\n\n";
      return 0;
    }

    if (out_dir.empty()) {
      const char* env = std::getenv("RYDEPHASE_OUT_DIR");
      out_dir = env && *env ? env : ".";
    }
    rydephase::RunOptions options;
    options.out_dir = out_dir;
    options.par.threads = threads;
    options.seed_override = seed;

    const auto result = rydephase::run(rydephase::load_config(config_path), options);
    for (const auto& f : result.files) std::cout << f.string() << '\n';
    return 0;
  } catch (const rydephase::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitValidation;
  } catch (const rydephase::NumericalFailureError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const rydephase::TruncationError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
}
