#pragma once

#include "rao/bound/optimize.hpp"
#include "rao/cli/experiment.hpp"
#include "rao/oracles/oracle_json.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace rao::cli {

enum ExitCode : int {
  kOk = 0,
  kIoError = 1,
  kValidationFailure = 2,
  kContractBreach = 3,
  kOracleLimit = 4,
};

/// Maps the library's exception types onto exit codes and reports on `err`.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ContractBreach& e) {
    err << "contract breach: " << e.what() << '\n';
    return kContractBreach;
  } catch (const OracleLimitError& e) {
    err << "oracle limit: " << e.what() << '\n';
    return kOracleLimit;
  } catch (const ValidationError& e) {
    err << "validation failure: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const nlohmann::json::exception& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
}

struct GenerateArgs {
  std::string generator = "random";
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  std::string out;
};

/// Writes the generated instance as JSON and prints its accuracy and validation report.
inline int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = generate_instance(args.generator, args.params, args.seed);
    if (!args.out.empty())
      save_instance(inst, args.out);
    else
      out << to_json(inst).dump(2) << '\n';
    auto acc = accuracy(inst);
    auto report = validate_instance(inst, !inst.adversarial);
    std::ostream& log = args.out.empty() ? err : out;
    log << "instance " << inst.id << ": n=" << inst.size() << " T=" << to_string(inst.budget) << '\n';
    log << "accuracy C = " << to_string(acc.c_value) << " (" << format_number(to_double(acc.c_value))
        << "), attained by article " << acc.argmax_article << '\n';
    if (inst.adversarial) log << "adversarial family: instance restrictions not enforced\n";
    if (report.ok())
      log << "validation: ok\n";
    for (const auto& v : report.violations) log << "validation: " << v.message << '\n';
    return int(kOk);
  });
}

struct RunArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string out;
  std::optional<unsigned> workers;
};

inline unsigned resolve_workers(std::optional<unsigned> flag) {
  if (flag) return std::max(1u, *flag);
  if (const char* env = std::getenv("RAO_LAB_WORKERS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw ConfigError(std::string("RAO_LAB_WORKERS is not a number: ") + env);
    }
  }
  return 1;
}

inline int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ExperimentConfig cfg = load_experiment(args.config);
    if (args.seed) cfg.seed = *args.seed;
    if (args.trials) {
      if (*args.trials < 1) throw ConfigError("trials must be positive");
      cfg.trials = *args.trials;
    }
    const std::string path = args.out.empty() ? cfg.output : args.out;
    auto rows = run_experiment(cfg, resolve_workers(args.workers));
    if (path.empty()) {
      write_results_csv(out, rows);
    } else {
      std::ofstream file(path);
      if (!file) throw std::runtime_error("cannot write " + path);
      write_results_csv(file, rows);
      err << "wrote " << rows.size() << " rows to " << path << '\n';
    }
    return int(kOk);
  });
}

struct OracleArgs {
  std::string instance;
  std::string source = "kph";  // kph | dp | waterfill
  std::optional<std::string> cut;
};

/// Prints the oracle result for an instance file as JSON.
inline int cmd_oracle(const OracleArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load_instance(args.instance);
    if (args.cut) inst = cut_instance(inst, parse_rational(*args.cut));
    nlohmann::json j;
    if (args.source == "kph")
      j = to_json(solve_kph(inst), inst.size());
    else if (args.source == "dp")
      j = to_json(opt_rao_dp(inst));
    else if (args.source == "waterfill")
      j = to_json(opt_rao_waterfill(inst));
    else
      throw std::invalid_argument("unknown oracle '" + args.source + "' (kph, dp, waterfill)");
    out << j.dump(2) << '\n';
    return int(kOk);
  });
}

inline nlohmann::json bound_record(const bound::BoundParams& p, const bound::BoundEvaluation& e) {
  nlohmann::json j = {{"g", p.g},
                      {"beta", p.beta},
                      {"gamma", p.gamma},
                      {"tail1", e.tail1},
                      {"tail2", e.tail2},
                      {"p_prime", e.p_prime_lb},
                      {"p", e.p},
                      {"objective", e.objective}};
  if (e.bounded)
    j["ratio"] = e.ratio_multiplier;
  else
    j["ratio"] = nullptr;  // unbounded
  return j;
}

struct BoundArgs {
  std::string mode;  // eval | maximize | grid
  std::string g, beta, gamma;
  std::optional<std::string> fixed_g;
  double g_step = 1e-3;
  double beta_step = 1e-2;
  std::string out;
};

inline int cmd_bound(const BoundArgs& args, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    auto number = [](const std::string& s, const char* what) {
      if (s.empty()) throw std::invalid_argument(std::string("--") + what + " is required");
      return to_double(parse_rational(s));
    };
    auto emit = [&](const std::string& text) {
      if (args.out.empty()) {
        out << text;
      } else {
        std::ofstream file(args.out);
        if (!file) throw std::runtime_error("cannot write " + args.out);
        file << text;
      }
    };
    if (args.mode == "eval") {
      bound::BoundParams p{number(args.g, "g"), number(args.beta, "beta"), number(args.gamma, "gamma")};
      emit(bound_record(p, bound::evaluate_bound(p)).dump(2) + "\n");
      return int(kOk);
    }
    bound::SearchConfig cfg;
    if (args.fixed_g) cfg.fixed_g = number(*args.fixed_g, "fixed-g");
    if (args.mode == "maximize") {
      auto r = bound::maximize_bound(cfg);
      emit(bound_record(r.params, r.evaluation).dump(2) + "\n");
      return int(kOk);
    }
    if (args.mode == "grid") {
      if (!(args.g_step > 0) || !(args.beta_step > 0)) throw std::invalid_argument("grid steps must be positive");
      cfg.g_step = args.g_step;
      cfg.beta_step = args.beta_step;
      std::optional<double> gamma;
      if (!args.gamma.empty()) gamma = number(args.gamma, "gamma");
      std::string csv = "g,beta,gamma,objective,ratio\n";
      for (const auto& s : bound::objective_grid(cfg, gamma))
        csv += format_number(s.params.g) + ',' + format_number(s.params.beta) + ',' + format_number(s.params.gamma) +
               ',' + format_number(s.objective) + ',' + format_number(s.ratio_multiplier) + '\n';
      emit(csv);
      return int(kOk);
    }
    throw std::invalid_argument("unknown bound mode '" + args.mode + "' (eval, maximize, grid)");
  });
}

}  // namespace rao::cli
