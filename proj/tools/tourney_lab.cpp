// tourney-lab: seeded Monte Carlo sweeps over the planted ranking model.
//
//   tourney-lab run --config sweep.json [--seed S] [--threads K] [--out PATH]
//   tourney-lab summarize --in sweep.csv --out summary.csv
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tourney/errors.hpp"
#include "tourney/summarize.hpp"
#include "tourney/sweep.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr const char* kThreadsEnv = "TOURNEY_LAB_THREADS";

std::optional<std::size_t> threads_from_env() {
  const char* raw = std::getenv(kThreadsEnv);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    const long v = std::stol(raw);
    if (v >= 1) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw tourney::ConfigError(std::string(kThreadsEnv) + " must be a positive integer");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planted ranking model experiment harness"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  auto* run = app.add_subcommand("run", "Run a sweep described by a JSON config and write CSV");
  run->add_option("--config", config_path, "Sweep config (JSON)")->required();
  run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--threads", threads, "Worker threads (output does not depend on this)")
      ->check(CLI::PositiveNumber);
  run->add_option("--out", out_path, "Override the config output_path");

  std::string in_path, summary_path;
  auto* summarize = app.add_subcommand("summarize", "Aggregate a sweep CSV per (n, gamma, statistic)");
  summarize->add_option("--in", in_path, "Sweep CSV produced by run")->required();
  summarize->add_option("--out", summary_path, "Summary CSV to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*run) {
      tourney::SweepConfig config = tourney::load_sweep_config(config_path);
      if (seed) config.seed = *seed;
      if (threads) {
        config.threads = *threads;
      } else if (auto env = threads_from_env()) {
        config.threads = *env;
      }
      if (!out_path.empty()) config.output_path = out_path;
      if (config.output_path.empty()) throw tourney::ConfigError("no output path (set output_path or --out)");

      const auto result = tourney::run_sweep(config);
      tourney::write_sweep_outputs(config, result, config.output_path);
      std::cerr << "wrote " << result.rows.size() << " rows to " << config.output_path << '\n';
    } else if (*summarize) {
      const auto rows = tourney::summarize_file(in_path);
      tourney::write_summary_file(rows, summary_path);
      std::cerr << "wrote " << rows.size() << " summary rows to " << summary_path << '\n';
    }
  } catch (const tourney::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const tourney::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
