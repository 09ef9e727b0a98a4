#pragma once

#include "rao/core/generators.hpp"
#include "rao/core/instance_json.hpp"
#include "rao/harness/estimate.hpp"
#include "rao/online/readers.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace rao {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require_keys(const nlohmann::json& j, const std::set<std::string>& allowed, const std::string& what) {
  if (!j.is_object()) throw ConfigError(what + " must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw ConfigError("unknown key '" + key + "' in " + what);
}

inline Rational json_rational(const nlohmann::json& j, const std::string& what) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number()) return parse_rational(j.dump());
  } catch (const std::invalid_argument&) {
  }
  throw ConfigError(what + " must be a number or a rational string, got " + j.dump());
}

inline std::string param_text(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

}  // namespace detail

/// Builds a reader from its registry name and parameter map.
/// Known readers: secretary, threshold{g}, reduction{okp}, direct{okp}, prefix{articles, steps}.
inline ReaderSpec make_reader_spec(const std::string& name, const nlohmann::json& params = nlohmann::json::object()) {
  const nlohmann::json p = params.is_null() ? nlohmann::json::object() : params;
  std::string text;
  for (const auto& [key, value] : p.items()) text += (text.empty() ? "" : ";") + key + "=" + detail::param_text(value);

  auto okp_factory = [&]() -> KnapsackFactory {
    detail::require_keys(p, {"okp"}, name + " parameters");
    const std::string okp = p.value("okp", std::string("knapsack_secretary"));
    if (okp != "knapsack_secretary") throw ConfigError("unknown knapsack box '" + okp + "'");
    return knapsack_secretary_factory();
  };

  if (name == "secretary") {
    detail::require_keys(p, {}, "secretary parameters");
    return {name, text, [] { return std::make_unique<SecretaryReader>(); }};
  }
  if (name == "threshold") {
    detail::require_keys(p, {"g"}, "threshold parameters");
    Rational g = p.contains("g") ? detail::json_rational(p["g"], "g") : parse_rational("0.0215");
    if (g <= 0 || g > 1) throw ConfigError("threshold g must lie in (0, 1]");
    if (text.empty()) text = "g=0.0215";
    return {name, text, [g] { return std::make_unique<ThresholdReader>(g); }};
  }
  if (name == "reduction") {
    auto box = okp_factory();
    return {name, text, [box] { return std::make_unique<ReductionReader>(box()); }};
  }
  if (name == "direct") {
    auto box = okp_factory();
    return {name, text, [box] { return std::make_unique<DirectKnapsackReader>(box()); }};
  }
  if (name == "prefix") {
    detail::require_keys(p, {"articles", "steps"}, "prefix parameters");
    std::optional<std::int64_t> articles, steps;
    if (p.contains("articles")) articles = p["articles"].get<std::int64_t>();
    if (p.contains("steps")) steps = p["steps"].get<std::int64_t>();
    return {name, text, [articles, steps] { return std::make_unique<PrefixReader>(articles, steps); }};
  }
  throw ConfigError("unknown reader '" + name + "'");
}

/// Expands array-valued parameters into one parameter map per combination.
inline std::vector<nlohmann::json> expand_sweep(const nlohmann::json& params) {
  std::vector<nlohmann::json> out{nlohmann::json::object()};
  if (params.is_null()) return out;
  for (const auto& [key, value] : params.items()) {
    std::vector<nlohmann::json> next;
    const auto choices = value.is_array() ? value : nlohmann::json::array({value});
    if (choices.empty()) throw ConfigError("empty sweep for parameter '" + key + "'");
    for (const auto& base : out)
      for (const auto& c : choices) {
        auto m = base;
        m[key] = c;
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  return out;
}

inline RandomParams random_params_from_json(const nlohmann::json& j) {
  detail::require_keys(j, {"n", "budget", "hint_min", "hint_max", "length_min", "length_max", "shape", "accuracy_min",
                           "accuracy_max"},
                       "random generator parameters");
  RandomParams p;
  p.n = j.value("n", p.n);
  p.budget = j.value("budget", p.budget);
  p.hint_min = j.value("hint_min", p.hint_min);
  p.hint_max = j.value("hint_max", p.hint_max);
  p.length_min = j.value("length_min", p.length_min);
  p.length_max = j.value("length_max", p.length_max);
  if (j.contains("shape")) p.shape = parse_shape(j["shape"].get<std::string>());
  p.accuracy_min = j.value("accuracy_min", p.accuracy_min);
  p.accuracy_max = j.value("accuracy_max", p.accuracy_max);
  return p;
}

/// One instance from a generator name, parameter object and seed.
inline Instance generate_instance(const std::string& generator, const nlohmann::json& params, std::uint64_t seed) {
  const nlohmann::json p = params.is_null() ? nlohmann::json::object() : params;
  if (generator == "random") return gen_random(random_params_from_json(p), seed);
  if (generator == "lemma3") {
    detail::require_keys(p, {"l"}, "lemma3 parameters");
    return gen_lemma3(p.at("l").get<std::int64_t>(), seed);
  }
  if (generator == "lemma4") {
    detail::require_keys(p, {"n"}, "lemma4 parameters");
    return gen_lemma4(p.at("n").get<std::int64_t>(), seed);
  }
  if (generator == "lemma5") {
    detail::require_keys(p, {"n", "c"}, "lemma5 parameters");
    return gen_lemma5(p.at("n").get<std::int64_t>(), p.at("c").get<std::int64_t>(), seed);
  }
  throw ConfigError("unknown generator '" + generator + "'");
}

enum class ExperimentMetric { Value, SelectMax };

struct ExperimentConfig {
  std::vector<Instance> instances;
  std::vector<ReaderSpec> readers;
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  OptSource opt_source = OptSource::Auto;
  Metric metric = Metric::Value;
  std::string output;
};

/// Parses and validates an experiment configuration; unknown keys are
/// rejected at every level. Instance files are resolved relative to `base_dir`.
inline ExperimentConfig parse_experiment(const nlohmann::json& j, const std::string& base_dir = ".") {
  detail::require_keys(j, {"instances", "readers", "trials", "seed", "opt_source", "metric", "output"},
                       "experiment config");
  ExperimentConfig cfg;
  try {
    if (!j.contains("instances") || !j["instances"].is_array() || j["instances"].empty())
      throw ConfigError("config needs a non-empty 'instances' array");
    if (!j.contains("readers") || !j["readers"].is_array() || j["readers"].empty())
      throw ConfigError("config needs a non-empty 'readers' array");
    for (const auto& src : j["instances"]) {
      detail::require_keys(src, {"generator", "params", "seed", "count", "file"}, "instance source");
      if (src.contains("file")) {
        if (src.contains("generator")) throw ConfigError("instance source has both 'file' and 'generator'");
        std::string path = src["file"].get<std::string>();
        if (!path.empty() && path.front() != '/') path = base_dir + "/" + path;
        cfg.instances.push_back(load_instance(path));
        continue;
      }
      if (!src.contains("generator")) throw ConfigError("instance source needs 'generator' or 'file'");
      const auto count = src.value("count", std::int64_t{1});
      if (count < 1) throw ConfigError("instance count must be positive");
      const auto seed = src.value("seed", std::uint64_t{0});
      for (std::int64_t k = 0; k < count; ++k)
        cfg.instances.push_back(generate_instance(src["generator"].get<std::string>(),
                                                  src.value("params", nlohmann::json::object()),
                                                  seed + static_cast<std::uint64_t>(k)));
    }
    for (const auto& r : j["readers"]) {
      detail::require_keys(r, {"name", "params"}, "reader entry");
      for (const auto& params : expand_sweep(r.value("params", nlohmann::json::object())))
        cfg.readers.push_back(make_reader_spec(r.at("name").get<std::string>(), params));
    }
    const auto trials = j.value("trials", std::int64_t{1000});
    if (trials < 1) throw ConfigError("trials must be positive");
    cfg.trials = static_cast<std::size_t>(trials);
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.opt_source = parse_opt_source(j.value("opt_source", std::string("auto")));
    const std::string metric = j.value("metric", std::string("value"));
    if (metric == "value")
      cfg.metric = Metric::Value;
    else if (metric == "select_max")
      cfg.metric = Metric::SelectMax;
    else
      throw ConfigError("unknown metric '" + metric + "'");
    cfg.output = j.value("output", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  return cfg;
}

inline ExperimentConfig load_experiment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  auto slash = path.find_last_of('/');
  return parse_experiment(j, slash == std::string::npos ? "." : path.substr(0, slash));
}

struct ResultRow {
  std::string instance_id;
  std::string reader;
  std::string params;
  std::size_t trials = 0;
  double mean = 0;
  double ci95 = 0;
  double opt = 0;
  OptSource opt_source = OptSource::Dp;
  double ratio = 0;
};

/// Runs every (instance, reader) pair. Instance j uses the trial seeds of
/// Rng(seed).split(j), shared by all readers, so results do not depend on
/// the worker count.
inline std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, unsigned workers) {
  std::vector<ResultRow> rows;
  const Rng master(cfg.seed);
  for (std::size_t j = 0; j < cfg.instances.size(); ++j) {
    const auto& inst = cfg.instances[j];
    require_valid(inst);
    const auto reference = offline_reference(inst, cfg.opt_source);
    EstimateOptions opt{cfg.trials, master.split(j).seed(), workers, cfg.metric};
    for (const auto& reader : cfg.readers) {
      auto est = estimate_value(inst, reader, opt);
      ResultRow row{inst.id.empty() ? "instance-" + std::to_string(j) : inst.id,
                    reader.name,
                    reader.params,
                    cfg.trials,
                    est.mean,
                    est.ci95,
                    to_double(reference.value),
                    reference.source,
                    0};
      if (cfg.metric == Metric::Value) row.ratio = ratio_from(est, reference).empirical_ratio;
      else row.ratio = std::numeric_limits<double>::quiet_NaN();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

inline void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "instance_id,reader,params,trials,mean,ci95,opt,opt_source,ratio\n";
  for (const auto& r : rows)
    out << r.instance_id << ',' << r.reader << ',' << r.params << ',' << r.trials << ',' << format_number(r.mean) << ','
        << format_number(r.ci95) << ',' << format_number(r.opt) << ',' << to_string(r.opt_source) << ','
        << format_number(r.ratio) << '\n';
}

}  // namespace rao
