// rao_lab: generate instances, run reading experiments, solve instances offline,
// evaluate the threshold bound.

#include "rao/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Reading-articles-online laboratory"};
  app.require_subcommand(1);

  rao::cli::GenerateArgs gen;
  std::optional<std::int64_t> n, l, c, budget, hint_min, hint_max, length_min, length_max;
  std::optional<double> acc_min, acc_max;
  std::optional<std::string> shape;
  auto* generate = app.add_subcommand("generate", "Generate an instance file");
  generate->add_option("--generator", gen.generator, "random | lemma3 | lemma4 | lemma5")->capture_default_str();
  generate->add_option("--n", n, "number of articles");
  generate->add_option("--l", l, "lemma3 parameter (n = l^2)");
  generate->add_option("--c", c, "lemma5 accuracy C");
  generate->add_option("--budget", budget, "time budget T (random)");
  generate->add_option("--hint-min", hint_min);
  generate->add_option("--hint-max", hint_max);
  generate->add_option("--length-min", length_min);
  generate->add_option("--length-max", length_max);
  generate->add_option("--shape", shape, "constant | steps | geometric");
  generate->add_option("--acc-min", acc_min, "per-article accuracy target range (random)");
  generate->add_option("--acc-max", acc_max);
  generate->add_option("--seed", gen.seed)->capture_default_str();
  generate->add_option("--out", gen.out, "output path (stdout when omitted)");

  rao::cli::RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment sweep and write the results CSV");
  run_cmd->add_option("--config", run.config, "experiment config (JSON)")->required();
  run_cmd->add_option("--seed", run.seed, "master seed (overrides config)");
  run_cmd->add_option("--trials", run.trials, "trials per (instance, reader) (overrides config)");
  run_cmd->add_option("--out", run.out, "results CSV path (overrides config)");
  run_cmd->add_option("--workers", run.workers, "worker threads (default: RAO_LAB_WORKERS or 1)");

  rao::cli::OracleArgs oracle;
  std::string cut;
  auto* oracle_cmd = app.add_subcommand("oracle", "Solve an instance file offline and print the result as JSON");
  oracle_cmd->add_option("--instance", oracle.instance, "instance file (JSON)")->required();
  oracle_cmd->add_option("--source", oracle.source, "kph | dp | waterfill")->capture_default_str();
  oracle_cmd->add_option("--cut", cut, "solve the cut instance with fraction g instead");

  rao::cli::BoundArgs bound;
  std::string fixed_g;
  auto* bound_cmd = app.add_subcommand("bound", "Evaluate or maximize the threshold-reader bound");
  bound_cmd->add_option("mode", bound.mode, "eval | maximize | grid")->required();
  bound_cmd->add_option("--g", bound.g);
  bound_cmd->add_option("--beta", bound.beta);
  bound_cmd->add_option("--gamma", bound.gamma, "gamma (grid: fixed gamma instead of the best per point)");
  bound_cmd->add_option("--fixed-g", fixed_g, "maximize over beta, gamma only");
  bound_cmd->add_option("--g-step", bound.g_step)->capture_default_str();
  bound_cmd->add_option("--beta-step", bound.beta_step)->capture_default_str();
  bound_cmd->add_option("--out", bound.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : rao::cli::kValidationFailure;
  }

  if (*generate) {
    auto put = [&](const char* key, const auto& v) {
      if (v) gen.params[key] = *v;
    };
    if (gen.generator == "lemma5") {
      put("n", n);
      put("c", c);
    } else if (gen.generator == "lemma4") {
      put("n", n);
    } else if (gen.generator == "lemma3") {
      put("l", l);
    } else {
      put("n", n);
      put("budget", budget);
      put("hint_min", hint_min);
      put("hint_max", hint_max);
      put("length_min", length_min);
      put("length_max", length_max);
      put("shape", shape);
      put("accuracy_min", acc_min);
      put("accuracy_max", acc_max);
    }
    return rao::cli::cmd_generate(gen, std::cout, std::cerr);
  }
  if (*run_cmd) return rao::cli::cmd_run(run, std::cout, std::cerr);
  if (*oracle_cmd) {
    if (!cut.empty()) oracle.cut = cut;
    return rao::cli::cmd_oracle(oracle, std::cout, std::cerr);
  }
  if (!fixed_g.empty()) bound.fixed_g = fixed_g;
  return rao::cli::cmd_bound(bound, std::cout, std::cerr);
}
