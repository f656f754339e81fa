#include "tourney/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "tourney/detection.hpp"
#include "tourney/divergence.hpp"
#include "tourney/fourier.hpp"
#include "tourney/model.hpp"
#include "tourney/ranking.hpp"
#include "tourney/recovery.hpp"
#include "tourney/spectral_theory.hpp"

namespace tourney {

namespace {

using json = nlohmann::json;

constexpr std::pair<Experiment, std::string_view> kExperimentNames[] = {
    {Experiment::detect_wedge, "detect-wedge"},   {Experiment::detect_spectral, "detect-spectral"},
    {Experiment::recover, "recover"},             {Experiment::mle_compare, "mle-compare"},
    {Experiment::chi2_table, "chi2-table"},       {Experiment::spectrum_verify, "spectrum-verify"},
};

// Values for one (n, gamma) point that do not depend on the trial.
struct PointCache {
  double chi2_exact = 0.0;
  double chi2_fourier = 0.0;
  double tv_exact = 0.0;
  SpectrumCheck spectrum;
  double test_gamma = 0.0;
};

struct Point {
  std::size_t n = 0;
  double gamma = 0.0;
  PointCache cache;
};

double as_real(std::int64_t v) { return static_cast<double>(v); }
double as_real(std::uint64_t v) { return static_cast<double>(v); }

// Values in statistics_for(e) order.
std::vector<double> run_trial(const SweepConfig& config, const Point& point, RngStream& rng) {
  const ModelParams params{point.n, point.gamma};
  auto draw = [&]() {
    return point.gamma == 0.0 ? std::pair{Ranking::identity(point.n), sample_null(point.n, rng)}
                              : sample_planted_uniform(params, rng);
  };

  switch (config.experiment) {
    case Experiment::detect_wedge: {
      const auto [hidden, t] = draw();
      const auto verdict = wedge_test(t, ModelParams{point.n, point.cache.test_gamma});
      return {verdict.statistic_value, verdict.verdict == Verdict::planted ? 1.0 : 0.0};
    }
    case Experiment::detect_spectral: {
      const auto [hidden, t] = draw();
      const auto verdict = spectral_test(t, config.epsilon);
      return {verdict.statistic_value, verdict.verdict == Verdict::planted ? 1.0 : 0.0};
    }
    case Experiment::recover: {
      const auto [hidden, t] = sample_planted_uniform(params, rng);
      const Ranking estimate = ranking_by_wins(t);
      return {expected_error_bound(params), as_real(spearman_footrule(hidden, estimate)),
              as_real(kendall_tau(hidden, estimate)),
              as_real(pessimistic_error_statistic(t, hidden))};
    }
    case Experiment::mle_compare: {
      const auto [hidden, t] = sample_planted_uniform(params, rng);
      const auto rbw = alignment(ranking_by_wins(t), t);
      const auto mle = brute_force_mle(t).best_alignment;
      const auto envelope = opt_bounds(params, config.opt_c_low, config.opt_c_up);
      const double m = as_real(mle);
      const bool inside = m >= envelope.lower && m <= envelope.upper;
      // The maximum alignment is positive for n >= 2; guard the ratio anyway.
      const double ratio = mle > 0 ? as_real(rbw) / m : 1.0;
      return {ratio, m, inside ? 1.0 : 0.0, as_real(rbw),
              as_real(rbw_alignment_lower_bound_statistic(t))};
    }
    case Experiment::chi2_table:
      return {point.cache.chi2_exact, point.cache.chi2_fourier, point.cache.tv_exact};
    case Experiment::spectrum_verify: {
      const auto [hidden, t] = draw();
      const double gap = std::fabs(spectral_statistic(t) - hermitian_lambda_max(t)) /
                         std::sqrt(static_cast<double>(point.n));
      return {point.cache.spectrum.max_inner_product, point.cache.spectrum.max_reconstruction,
              point.cache.spectrum.max_residual, gap,
              closed_form_eigenvalue(point.n, 1) / static_cast<double>(point.n)};
    }
  }
  throw std::logic_error("unhandled experiment");
}

PointCache prepare_point(const SweepConfig& config, std::size_t n, double gamma) {
  PointCache cache;
  switch (config.experiment) {
    case Experiment::chi2_table: {
      const ModelParams params{n, gamma};
      cache.chi2_exact = chi2_exact(params);
      cache.chi2_fourier = chi2_fourier(params);
      cache.tv_exact = tv_exact(params);
      break;
    }
    case Experiment::spectrum_verify:
      cache.spectrum = verify_closed_form_spectrum(n);
      break;
    case Experiment::detect_wedge:
      cache.test_gamma = config.test_gamma ? config.test_gamma->gammas_for(n).front() : gamma;
      break;
    default:
      break;
  }
  return cache;
}

std::vector<double> read_reals(const json& j, const char* key) {
  if (j.is_number()) return {j.get<double>()};
  if (!j.is_array()) throw ConfigError(std::string(key) + " must be a number or an array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw ConfigError(std::string(key) + " entries must be numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

GammaSpec read_gamma_spec(const json& j, const char* key) {
  if (j.is_array()) return GammaSpec::list(read_reals(j, key));
  if (j.is_object()) {
    if (!j.contains("c") || !j.contains("alpha"))
      throw ConfigError(std::string(key) + " scaling form needs both \"c\" and \"alpha\"");
    for (const auto& item : j.items())
      if (item.key() != "c" && item.key() != "alpha")
        throw ConfigError(std::string(key) + ": unknown field \"" + item.key() + "\"");
    if (!j["alpha"].is_number()) throw ConfigError(std::string(key) + ".alpha must be a number");
    return GammaSpec::scaling(read_reals(j["c"], key), j["alpha"].get<double>());
  }
  if (j.is_number()) return GammaSpec::list({j.get<double>()});
  throw ConfigError(std::string(key) + " must be a list of gammas or {\"c\": ..., \"alpha\": ...}");
}

std::size_t read_count(const json& j, const char* key) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ConfigError(std::string(key) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

std::string_view to_string(Experiment e) {
  for (auto [value, name] : kExperimentNames)
    if (value == e) return name;
  return "unknown";
}

Experiment parse_experiment(std::string_view name) {
  for (auto [value, known] : kExperimentNames)
    if (known == name) return value;
  throw ConfigError("unknown experiment \"" + std::string(name) + "\"");
}

const std::vector<std::string>& statistics_for(Experiment e) {
  // Alphabetical, matching the CSV row order within a trial.
  static const std::map<Experiment, std::vector<std::string>> names = {
      {Experiment::detect_wedge, {"wedge_statistic", "wedge_verdict"}},
      {Experiment::detect_spectral, {"spectral_ratio", "spectral_verdict"}},
      {Experiment::recover,
       {"expected_error_bound", "footrule_error", "kendall_error", "pessimistic_error"}},
      {Experiment::mle_compare,
       {"alignment_ratio", "mle_alignment", "opt_in_envelope", "rbw_alignment", "rbw_lower_bound"}},
      {Experiment::chi2_table, {"chi2_exact", "chi2_fourier", "tv_exact"}},
      {Experiment::spectrum_verify,
       {"max_inner_product", "max_reconstruction", "max_residual", "route_gap",
        "top_eigenvalue_over_n"}},
  };
  return names.at(e);
}

GammaSpec GammaSpec::list(std::vector<double> values) {
  GammaSpec g;
  g.values = std::move(values);
  return g;
}

GammaSpec GammaSpec::scaling(double c, double alpha) { return scaling(std::vector<double>{c}, alpha); }

GammaSpec GammaSpec::scaling(std::vector<double> c, double alpha) {
  GammaSpec g;
  g.scale = std::move(c);
  g.alpha = alpha;
  return g;
}

std::vector<double> GammaSpec::gammas_for(std::size_t n) const {
  if (!is_scaling()) return values;
  std::vector<double> out;
  out.reserve(scale.size());
  for (double c : scale) out.push_back(c * std::pow(static_cast<double>(n), -alpha));
  return out;
}

void SweepConfig::validate() const {
  if (n_values.empty()) throw ConfigError("n_values must not be empty");
  if (gamma_spec.count() == 0) throw ConfigError("gamma_spec must yield at least one gamma");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (threads < 1) throw ConfigError("threads must be at least 1");

  auto check_spec = [](const GammaSpec& spec, const char* what) {
    if (spec.is_scaling()) {
      if (!(spec.alpha >= 0.0 && spec.alpha <= 1.0))
        throw ConfigError(std::string(what) + ": alpha must lie in [0, 1]");
      for (double c : spec.scale)
        if (!(c > 0.0) || !std::isfinite(c)) throw ConfigError(std::string(what) + ": c must be positive");
    }
  };
  check_spec(gamma_spec, "gamma_spec");
  if (test_gamma) {
    check_spec(*test_gamma, "test_gamma");
    if (test_gamma->count() != 1) throw ConfigError("test_gamma must give exactly one gamma per n");
  }

  for (std::size_t n : n_values) {
    if (n < 2) throw ConfigError("every n must be at least 2");
    for (double g : gamma_spec.gammas_for(n)) {
      if (!(g >= 0.0 && g <= 0.5))
        throw ConfigError("gamma " + format_real(g) + " at n = " + std::to_string(n) +
                          " is outside [0, 1/2]");
      switch (experiment) {
        case Experiment::recover:
          if (g > 0.25) throw ConfigError("recover reports the error bound, which needs gamma <= 1/4");
          break;
        case Experiment::mle_compare:
          if (g <= 0.0) throw ConfigError("mle-compare needs gamma > 0");
          break;
        case Experiment::detect_wedge:
          if (g <= 0.0 && !test_gamma)
            throw ConfigError("detect-wedge with gamma = 0 needs test_gamma to place the threshold");
          break;
        default:
          break;
      }
    }
    if (test_gamma) {
      const double tg = test_gamma->gammas_for(n).front();
      if (!(tg > 0.0 && tg <= 0.5)) throw ConfigError("test_gamma must lie in (0, 1/2]");
    }
    if (experiment == Experiment::mle_compare && n > kMaxMleSize)
      throw ConfigError("mle-compare enumerates n! rankings; n must be at most " +
                        std::to_string(kMaxMleSize));
    if (experiment == Experiment::chi2_table && n > kMaxEnumerationSize)
      throw ConfigError("chi2-table enumerates all tournaments; n must be at most " +
                        std::to_string(kMaxEnumerationSize));
    if (experiment == Experiment::spectrum_verify && n > kMaxDenseSpectrumSize)
      throw ConfigError("spectrum-verify builds dense matrices; n must be at most " +
                        std::to_string(kMaxDenseSpectrumSize));
  }
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be positive");
  if (!(opt_c_low >= 0.0) || !(opt_c_up >= 0.0)) throw ConfigError("opt constants must be non-negative");
}

SweepConfig parse_sweep_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  SweepConfig config;
  bool has_experiment = false, has_n = false, has_gamma = false;
  try {
    for (const auto& item : doc.items()) {
      const auto& key = item.key();
      const auto& value = item.value();
      if (key == "experiment") {
        if (!value.is_string()) throw ConfigError("experiment must be a string");
        config.experiment = parse_experiment(value.get<std::string>());
        has_experiment = true;
      } else if (key == "n_values") {
        if (!value.is_array()) throw ConfigError("n_values must be an array");
        for (const auto& n : value) config.n_values.push_back(read_count(n, "n_values"));
        has_n = true;
      } else if (key == "gamma_spec") {
        config.gamma_spec = read_gamma_spec(value, "gamma_spec");
        has_gamma = true;
      } else if (key == "test_gamma") {
        config.test_gamma = read_gamma_spec(value, "test_gamma");
      } else if (key == "epsilon") {
        if (!value.is_number()) throw ConfigError("epsilon must be a number");
        config.epsilon = value.get<double>();
      } else if (key == "opt_c_low" || key == "opt_c_up") {
        if (!value.is_number()) throw ConfigError(key + " must be a number");
        (key == "opt_c_low" ? config.opt_c_low : config.opt_c_up) = value.get<double>();
      } else if (key == "trials") {
        config.trials = read_count(value, "trials");
      } else if (key == "seed") {
        if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0))
          throw ConfigError("seed must be a non-negative 64-bit integer");
        config.seed = value.get<std::uint64_t>();
      } else if (key == "threads") {
        config.threads = read_count(value, "threads");
      } else if (key == "output_path") {
        if (!value.is_string()) throw ConfigError("output_path must be a string");
        config.output_path = value.get<std::string>();
      } else {
        throw ConfigError("unknown config field \"" + key + "\"");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  }
  if (!has_experiment) throw ConfigError("config is missing \"experiment\"");
  if (!has_n) throw ConfigError("config is missing \"n_values\"");
  if (!has_gamma) throw ConfigError("config is missing \"gamma_spec\"");
  return config;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_sweep_config(buffer.str());
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();

  std::vector<Point> points;
  for (std::size_t n : config.n_values)
    for (double g : config.gamma_spec.gammas_for(n)) points.push_back({n, g, {}});
  for (auto& p : points) p.cache = prepare_point(config, p.n, p.gamma);

  const auto& names = statistics_for(config.experiment);
  const std::size_t jobs = points.size() * config.trials;
  std::vector<std::vector<double>> values(jobs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t job = next.fetch_add(1);
      if (job >= jobs) return;
      try {
        RngStream rng(config.seed, job);
        values[job] = run_trial(config, points[job / config.trials], rng);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(jobs);
        return;
      }
    }
  };

  const std::size_t workers = std::min(config.threads, std::max<std::size_t>(jobs, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  result.rows.reserve(jobs * names.size());
  for (std::size_t job = 0; job < jobs; ++job) {
    const Point& p = points[job / config.trials];
    for (std::size_t s = 0; s < names.size(); ++s) {
      const double v = values[job][s];
      if (!std::isfinite(v))
        throw std::runtime_error("non-finite " + names[s] + " at n = " + std::to_string(p.n));
      result.rows.push_back({config.experiment, p.n, p.gamma, job % config.trials, names[s], v});
    }
  }
  std::stable_sort(result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.gamma != b.gamma) return a.gamma < b.gamma;
    if (a.trial != b.trial) return a.trial < b.trial;
    return a.statistic < b.statistic;
  });
  return result;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& row : result.rows) {
    out << to_string(row.experiment) << ',' << row.n << ',' << format_real(row.gamma) << ','
        << row.trial << ',' << row.statistic << ',' << format_real(row.value) << '\n';
  }
}

void write_sweep_outputs(const SweepConfig& config, const SweepResult& result, const std::string& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    write_csv(result, out);
    if (!out) throw IoError("write failed for " + path);
  }

  json meta;
  meta["experiment"] = std::string(to_string(config.experiment));
  meta["n_values"] = config.n_values;
  if (config.gamma_spec.is_scaling())
    meta["gamma_spec"] = {{"c", config.gamma_spec.scale}, {"alpha", config.gamma_spec.alpha}};
  else
    meta["gamma_spec"] = config.gamma_spec.values;
  meta["trials"] = config.trials;
  meta["seed"] = config.seed;
  meta["statistics"] = statistics_for(config.experiment);
  meta["rows"] = result.rows.size();
  meta["rank_convention"] = "rank 1 is the top vertex";
  meta["tie_rule"] =
      "ranking_by_wins: equal scores rank the larger vertex index higher (i below j when i < j)";
  meta["rng"] = "mt19937_64 seeded by seed_seq(seed, trial index)";

  const std::string meta_path = path + ".meta.json";
  std::ofstream out(meta_path, std::ios::binary);
  if (!out) throw IoError("cannot write " + meta_path);
  out << meta.dump(2) << '\n';
  if (!out) throw IoError("write failed for " + meta_path);
}

}  // namespace tourney
