#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tourney/errors.hpp"

namespace tourney {

enum class Experiment {
  detect_wedge,
  detect_spectral,
  recover,
  mle_compare,
  chi2_table,
  spectrum_verify,
};

/// Hyphenated name as used in config files and CSV ("detect-wedge", ...).
std::string_view to_string(Experiment e);
/// Throws ConfigError on an unknown name.
Experiment parse_experiment(std::string_view name);

/// Statistic names emitted per trial, in CSV order.
const std::vector<std::string>& statistics_for(Experiment e);

/// Signal strengths: an explicit list, or c * n^{-alpha} for each listed c.
struct GammaSpec {
  std::vector<double> values;
  std::vector<double> scale;
  double alpha = 0.0;

  bool is_scaling() const noexcept { return !scale.empty(); }
  std::vector<double> gammas_for(std::size_t n) const;
  std::size_t count() const noexcept { return is_scaling() ? scale.size() : values.size(); }

  static GammaSpec list(std::vector<double> values);
  static GammaSpec scaling(double c, double alpha);
  static GammaSpec scaling(std::vector<double> c, double alpha);
};

struct SweepConfig {
  Experiment experiment = Experiment::detect_wedge;
  std::vector<std::size_t> n_values;
  GammaSpec gamma_spec;
  /// detect-wedge only: the alternative whose planted mean sets the
  /// threshold. Defaults to the sampling gamma, which must then be > 0.
  std::optional<GammaSpec> test_gamma;
  /// detect-spectral margin above the null edge 2.
  double epsilon = 0.1;
  /// mle-compare envelope constants.
  double opt_c_low = 2.0;
  double opt_c_up = 2.0;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string output_path;

  /// Throws ConfigError describing the first violated constraint.
  void validate() const;
};

/// Parses a JSON document whose keys mirror SweepConfig. Unknown keys are
/// rejected. Throws ConfigError.
SweepConfig parse_sweep_config(std::string_view json_text);

/// Reads and parses a config file. Throws IoError / ConfigError.
SweepConfig load_sweep_config(const std::string& path);

struct SweepRow {
  Experiment experiment = Experiment::detect_wedge;
  std::size_t n = 0;
  double gamma = 0.0;
  std::size_t trial = 0;
  std::string statistic;
  double value = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  ///< sorted by (n, gamma, trial, statistic)
};

/// Runs every (n, gamma, trial) of the config on config.threads workers.
/// Trial k of the sweep draws from RngStream(seed, k) with k counted over
/// (n, gamma, trial) in config order, so the result does not depend on the
/// thread count.
SweepResult run_sweep(const SweepConfig& config);

inline constexpr std::string_view kCsvHeader = "experiment,n,gamma,trial,statistic,value";

/// Writes header plus one line per row; reals use 17 significant digits.
void write_csv(const SweepResult& result, std::ostream& out);

/// Writes the CSV to `path` and a `<path>.meta.json` sidecar describing the
/// run. Throws IoError.
void write_sweep_outputs(const SweepConfig& config, const SweepResult& result, const std::string& path);

/// Formats a real with 17 significant digits ("%.17g").
std::string format_real(double v);

}  // namespace tourney
