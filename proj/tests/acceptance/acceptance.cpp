// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.
// Usage: acceptance [csv-output-dir]

#include "../kph_oracle.hpp"
#include "../test_support.hpp"
#include "rao/bound/optimize.hpp"
#include "rao/cli/experiment.hpp"
#include "rao/core/generators.hpp"
#include "rao/harness/trial.hpp"
#include "rao/online/readers.hpp"
#include "rao/oracles/offline_opt.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace rao;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string output_dir;

void save(const std::string& name, const std::string& text) {
  if (output_dir.empty()) return;
  std::ofstream(output_dir + "/" + name) << text;
}

std::string csv_of(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  write_results_csv(out, rows);
  return out.str();
}

constexpr std::uint64_t kMasterSeed = 20240601;

// ---- bound constants -------------------------------------------------------

Verdict bound_constants() {
  const auto start = std::chrono::steady_clock::now();
  auto r = bound::maximize_bound();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const auto& p = r.params;
  const double ratio = r.evaluation.ratio_multiplier;
  const bool ok = std::abs(p.g - 0.021425) <= 0.002 && std::abs(p.beta - 0.565728) <= 0.002 &&
                  std::abs(p.gamma - 1.478575) <= 0.002 && ratio <= 246 && ratio > 240 && secs < 60;
  return {ok, fmt("g=%.6f beta=%.6f gamma=%.6f ratio=%.4f in %.2fs", p.g, p.beta, p.gamma, ratio, secs)};
}

Verdict bound_cross_check() {
  auto e = bound::evaluate_bound({1.0 / 81, 0.75, 1.5});
  const double target = 341.87;
  return {std::abs(e.ratio_multiplier - target) <= 0.01 * target,
          fmt("ratio=%.4f (125.77e=%.4f)", e.ratio_multiplier, 125.77 * std::numbers::e)};
}

// ---- oracles ---------------------------------------------------------------

Verdict kph_equivalence() {
  Rng rng(Rng(kMasterSeed).split(3));
  int mismatches = 0, y_checked = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto n = static_cast<std::size_t>(rng.between(1, 12));
    const bool distinct = trial % 4 != 0;
    std::vector<std::int64_t> pool(40);
    std::iota(pool.begin(), pool.end(), 1);
    rng.shuffle(std::span<std::int64_t>(pool));
    std::vector<KphItem> items;
    for (std::size_t i = 0; i < n; ++i)
      items.push_back({i, distinct ? pool[i] : rng.between(1, 5), Rational(rng.between(1, 30), rng.between(1, 4)),
                       rng.next()});
    Rational budget(rng.between(0, 120), rng.between(1, 4));
    auto sol = solve_kph(items, budget);
    auto oracle = fixtures::exhaustive_kph(items, budget);
    bool same = sol.value == oracle.value;
    if (distinct) {
      ++y_checked;
      for (std::size_t i = 0; i < n; ++i) same = same && sol.y(i) == oracle.y[i];
    }
    mismatches += !same;
  }
  return {mismatches == 0, fmt("10000 instances, %d with y-maps compared, %d mismatches", y_checked, mismatches)};
}

Verdict kph_dominates_optimum() {
  Rng rng(Rng(kMasterSeed).split(4));
  int violations = 0, inaccurate = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto inst = fixtures::small_instance(rng, {.max_n = 8, .max_budget = 20, .max_hint = 9,
                                               .non_increasing = trial % 2 == 0});
    inaccurate += accuracy(inst).c_value > 1;
    violations += !(solve_kph(inst).value >= opt_rao_dp(inst).value);
  }
  return {violations == 0 && inaccurate > 0,
          fmt("1000 instances (%d with C>1), %d violations", inaccurate, violations)};
}

Verdict cut_keeps_fraction() {
  Rng rng(Rng(kMasterSeed).split(5));
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    auto inst = fixtures::small_instance(rng, {.max_n = 10, .max_budget = 40, .max_hint = 20,
                                               .non_increasing = trial % 2 == 0});
    Rational g(rng.between(1, 1000), 1000);
    violations += !(g * solve_kph(inst).value <= solve_kph(cut_instance(inst, g)).value);
  }
  return {violations == 0, fmt("1000 (I, g) pairs, %d violations", violations)};
}

// ---- experiments (also replayed for determinism) ---------------------------

std::vector<ResultRow> secretary_rows(unsigned workers) {
  ExperimentConfig cfg;
  RandomParams p;
  p.n = 100;
  p.budget = 100;
  p.hint_max = 1000;
  p.length_min = p.length_max = 1;
  p.shape = ProfileShape::Constant;
  cfg.instances.push_back(gen_random(p, 6));
  cfg.readers.push_back(make_reader_spec("secretary"));
  cfg.trials = 100000;
  cfg.seed = Rng(kMasterSeed).split(6).seed();
  cfg.metric = Metric::SelectMax;
  return run_experiment(cfg, workers);
}

std::vector<ResultRow> lemma3_rows(unsigned workers) {
  ExperimentConfig cfg;
  cfg.instances = {gen_lemma3(4, 7), gen_lemma3(8, 7)};
  cfg.readers.push_back(make_reader_spec("prefix"));
  cfg.trials = 10000;
  cfg.seed = Rng(kMasterSeed).split(7).seed();
  cfg.opt_source = OptSource::Dp;
  return run_experiment(cfg, workers);
}

std::vector<ResultRow> corpus_rows(unsigned workers) {
  ExperimentConfig cfg;
  RandomParams p;
  p.shape = ProfileShape::Constant;
  for (std::uint64_t s = 1; s <= 20; ++s) cfg.instances.push_back(gen_random(p, 900 + s));
  cfg.readers.push_back(make_reader_spec("threshold", {{"g", 0.0215}}));
  cfg.readers.push_back(make_reader_spec("reduction", {{"okp", "knapsack_secretary"}}));
  cfg.trials = 10000;
  cfg.seed = Rng(kMasterSeed).split(9).seed();
  return run_experiment(cfg, workers);
}

// Feasibility fuzz. Each case k gets its own generator draw, reader and
// trial seeds; per-case outcomes land in slot k so the CSV does not depend on
// the worker count.
struct FuzzCase {
  std::string generator;
  std::string reader;
  double value = 0;
  int violations = 0;
  int breaches = 0;
};

constexpr int kFuzzCases = 10000;
constexpr int kFuzzTrialsPerCase = 10;

Instance fuzz_instance(int k, Rng& rng, std::string& name) {
  switch (k % 6) {
    case 0:
    case 1:
    case 2: {
      RandomParams p;
      p.n = rng.between(1, 40);
      p.budget = rng.between(10, 200);
      p.length_max = std::min<std::int64_t>(p.budget, rng.between(5, 40));
      p.hint_max = 60 + p.n * 3;
      p.shape = static_cast<ProfileShape>(k % 3);
      p.accuracy_max = 1 + rng.uniform(0, 4);
      name = std::string("random-") + to_string(p.shape);
      return gen_random(p, rng.next());
    }
    case 3:
      name = "lemma3";
      return gen_lemma3(rng.between(2, 5), rng.next());
    case 4:
      name = "lemma4";
      return gen_lemma4(rng.between(2, 30), rng.next());
    default:
      name = "lemma5";
      return gen_lemma5(rng.between(2, 30), rng.between(1, 20), rng.next());
  }
}

std::unique_ptr<Reader> fuzz_reader(int k, Rng& rng, std::string& name) {
  switch ((k / 6) % 5) {
    case 0:
      name = "secretary";
      return std::make_unique<SecretaryReader>();
    case 1:
      name = "threshold";
      return std::make_unique<ThresholdReader>(Rational(rng.between(1, 500), 1000));
    case 2:
      name = "reduction";
      return std::make_unique<ReductionReader>(std::make_unique<KnapsackSecretary>());
    case 3:
      name = "direct";
      return std::make_unique<DirectKnapsackReader>(std::make_unique<KnapsackSecretary>());
    default:
      name = "prefix";
      return std::make_unique<PrefixReader>();
  }
}

FuzzCase run_fuzz_case(int k) {
  Rng rng(Rng(kMasterSeed).split(8).split(static_cast<std::uint64_t>(k)));
  FuzzCase c;
  Instance inst = fuzz_instance(k, rng, c.generator);
  for (int t = 0; t < kFuzzTrialsPerCase; ++t) {
    auto reader = fuzz_reader(k, rng, c.reader);
    try {
      auto tr = run_trial(inst, *reader, rng.next()).transcript;
      Rational used = 0;
      for (std::size_t i = 0; i < inst.size(); ++i) {
        used += tr.read[i];
        c.violations += tr.read[i] < 0 || tr.read[i] > inst.articles[i].length();
      }
      c.violations += used > inst.budget;
      c.value += to_double(tr.total);
    } catch (const ContractBreach&) {
      ++c.breaches;
    }
  }
  return c;
}

std::vector<FuzzCase> fuzz_cases(unsigned workers) {
  std::vector<FuzzCase> cases(kFuzzCases);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      for (int k = static_cast<int>(w); k < kFuzzCases; k += static_cast<int>(workers)) cases[k] = run_fuzz_case(k);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return cases;
}

std::string fuzz_csv(const std::vector<FuzzCase>& cases) {
  std::ostringstream out;
  out << "case,generator,reader,trials,value_sum,violations,breaches\n";
  for (std::size_t k = 0; k < cases.size(); ++k)
    out << k << ',' << cases[k].generator << ',' << cases[k].reader << ',' << kFuzzTrialsPerCase << ','
        << format_number(cases[k].value) << ',' << cases[k].violations << ',' << cases[k].breaches << '\n';
  return out.str();
}

struct Experiments {
  std::string secretary, lemma3, fuzz, corpus;
};

Experiments first_run;

Verdict secretary_statistics() {
  auto rows = secretary_rows(1);
  first_run.secretary = csv_of(rows);
  save("secretary.csv", first_run.secretary);
  const double f = rows.front().mean;
  return {f >= 0.358 && f <= 0.378, fmt("select-max frequency %.5f over %zu trials", f, rows.front().trials)};
}

Verdict lower_bound_scaling() {
  const auto start = std::chrono::steady_clock::now();
  auto rows = lemma3_rows(1);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  first_run.lemma3 = csv_of(rows);
  save("lemma3.csv", first_run.lemma3);
  const double factor = rows[1].ratio / rows[0].ratio;
  return {factor >= 1.6 && factor <= 2.4 && secs < 300,
          fmt("ratio l=4 %.4f, l=8 %.4f, factor %.4f in %.1fs", rows[0].ratio, rows[1].ratio, factor, secs)};
}

Verdict feasibility_fuzz() {
  auto cases = fuzz_cases(1);
  first_run.fuzz = fuzz_csv(cases);
  save("fuzz.csv", first_run.fuzz);
  long violations = 0, breaches = 0;
  std::set<std::string> generators, readers;
  for (const auto& c : cases) {
    violations += c.violations;
    breaches += c.breaches;
    generators.insert(c.generator);
    readers.insert(c.reader);
  }
  const long trials = static_cast<long>(kFuzzCases) * kFuzzTrialsPerCase;
  return {violations == 0 && breaches == 0 && generators.size() == 6 && readers.size() == 5,
          fmt("%ld trials over %zu generators x %zu readers: %ld violations, %ld breaches", trials, generators.size(),
              readers.size(), violations, breaches)};
}

Verdict ratio_sanity() {
  auto rows = corpus_rows(1);
  first_run.corpus = csv_of(rows);
  save("corpus.csv", first_run.corpus);
  double worst_threshold = 0, worst_reduction = 0;
  for (const auto& r : rows) {
    if (r.opt_source == OptSource::KphUpper) return {false, "corpus fell back to the KPH upper bound"};
    (r.reader == "threshold" ? worst_threshold : worst_reduction) =
        std::max(r.reader == "threshold" ? worst_threshold : worst_reduction, r.ratio);
  }
  return {worst_threshold <= 246 && worst_reduction <= 29.90 && rows.size() == 40,
          fmt("worst ratio threshold %.4f (<= 246), reduction %.4f (<= 29.90)", worst_threshold, worst_reduction)};
}

Verdict determinism() {
  const unsigned workers = 4;
  std::vector<std::string> differing;
  if (csv_of(secretary_rows(workers)) != first_run.secretary) differing.push_back("secretary");
  if (csv_of(lemma3_rows(workers)) != first_run.lemma3) differing.push_back("lemma3");
  if (fuzz_csv(fuzz_cases(workers)) != first_run.fuzz) differing.push_back("fuzz");
  if (csv_of(corpus_rows(workers)) != first_run.corpus) differing.push_back("corpus");
  std::string which;
  for (const auto& d : differing) which += " " + d;
  const bool ran = !first_run.secretary.empty() && !first_run.lemma3.empty() && !first_run.fuzz.empty() &&
                   !first_run.corpus.empty();
  return {ran && differing.empty(),
          differing.empty() ? "4 CSVs identical with 1 and 4 workers" : "differing:" + which};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) output_dir = argv[1];
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"bound constants", bound_constants},
      {"bound cross-check", bound_cross_check},
      {"KPH oracle equivalence", kph_equivalence},
      {"KPH dominates the offline optimum", kph_dominates_optimum},
      {"cut instance keeps a g fraction", cut_keeps_fraction},
      {"secretary statistics", secretary_statistics},
      {"lower-bound scaling", lower_bound_scaling},
      {"feasibility fuzz", feasibility_fuzz},
      {"empirical ratio sanity", ratio_sanity},
      {"determinism across worker counts", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !v.pass;
    std::printf("%s %2zu %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
