#pragma once

#include "rao/core/validation.hpp"
#include "rao/harness/trial.hpp"
#include "rao/oracles/offline_opt.hpp"

#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rao {

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What a trial contributes to the estimate.
enum class Metric {
  Value,      // information gained
  SelectMax,  // 1 if the article with the largest t_i*h_i was read completely
};

struct ValueEstimate {
  double mean = 0;
  double ci95 = 0;  // normal-approximation half-width
  std::size_t trials = 0;
};

enum class OptSource { Auto, Dp, Waterfill, KphUpper };

inline const char* to_string(OptSource s) {
  switch (s) {
    case OptSource::Auto: return "auto";
    case OptSource::Dp: return "dp";
    case OptSource::Waterfill: return "waterfill";
    case OptSource::KphUpper: return "kph-upper";
  }
  return "?";
}

inline OptSource parse_opt_source(const std::string& s) {
  if (s == "auto") return OptSource::Auto;
  if (s == "dp") return OptSource::Dp;
  if (s == "waterfill") return OptSource::Waterfill;
  if (s == "kph-upper" || s == "kph") return OptSource::KphUpper;
  throw std::invalid_argument("unknown opt_source '" + s + "'");
}

struct RatioEstimate {
  ValueEstimate alg;
  Rational opt_value;
  OptSource opt_source = OptSource::Dp;  // never Auto once resolved
  double empirical_ratio = 0;            // opt / mean; +inf when the mean is 0
};

struct EstimateOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 0;
  unsigned workers = 1;
  Metric metric = Metric::Value;
};

/// Rejects instances that break the standing model unless they are marked adversarial.
inline void require_valid(const Instance& inst) {
  if (inst.adversarial) return;
  auto report = validate_instance(inst, true);
  if (!report.ok()) throw ValidationError("instance '" + inst.id + "' invalid: " + report.violations.front().message);
}

inline std::size_t top_hint_value_article(const Instance& inst) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < inst.size(); ++i) {
    auto v = inst.articles[i].hint_value();
    auto b = inst.articles[best].hint_value();
    if (v > b || (v == b && inst.priority(i) > inst.priority(best))) best = i;
  }
  return best;
}

/// Per-trial metric values for trials 0..count-1 of `base_seed`. Trial k uses
/// Rng(base_seed).split(k) regardless of how trials are spread over workers.
inline std::vector<double> trial_values(const Instance& inst, const ReaderSpec& reader, const EstimateOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("at least one trial required");
  require_valid(inst);
  const Rng base(opt.seed);
  const std::size_t best_article = inst.size() ? top_hint_value_article(inst) : 0;
  std::vector<double> values(opt.trials, 0.0);
  std::vector<std::exception_ptr> errors(opt.trials);

  auto work = [&](unsigned worker, unsigned stride) {
    for (std::size_t k = worker; k < opt.trials; k += stride) {
      try {
        auto r = reader.make();
        auto result = run_trial(inst, *r, base.split(k).seed(), reader.name);
        if (opt.metric == Metric::Value)
          values[k] = to_double(result.transcript.total);
        else
          values[k] = result.transcript.read[best_article] == inst.articles[best_article].length() ? 1.0 : 0.0;
      } catch (...) {
        errors[k] = std::current_exception();
        return;
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opt.workers, static_cast<unsigned>(opt.trials)));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return values;
}

inline ValueEstimate summarize(const std::vector<double>& values) {
  ValueEstimate est;
  est.trials = values.size();
  if (values.empty()) return est;
  double sum = 0;
  for (double v : values) sum += v;
  est.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0;
    for (double v : values) ss += (v - est.mean) * (v - est.mean);
    const double var = ss / static_cast<double>(values.size() - 1);
    est.ci95 = 1.959963984540054 * std::sqrt(var / static_cast<double>(values.size()));
  }
  return est;
}

/// Mean of the metric over independent seeded trials with a 95% normal CI.
inline ValueEstimate estimate_value(const Instance& inst, const ReaderSpec& reader, const EstimateOptions& opt) {
  return summarize(trial_values(inst, reader, opt));
}

struct ResolvedOpt {
  Rational value;
  OptSource source;
};

/// Offline reference value. Auto uses water-filling when every profile is
/// non-increasing, the DP for other integral instances within its limits, and
/// otherwise the KPH value, which only upper-bounds the optimum.
inline ResolvedOpt offline_reference(const Instance& inst, OptSource source) {
  switch (source) {
    case OptSource::Dp: return {opt_rao_dp(inst).value, OptSource::Dp};
    case OptSource::Waterfill: return {opt_rao_waterfill(inst).value, OptSource::Waterfill};
    case OptSource::KphUpper: return {solve_kph(inst).value, OptSource::KphUpper};
    case OptSource::Auto: break;
  }
  bool integral = is_integral(inst.budget);
  bool monotone = true;
  for (const auto& a : inst.articles) {
    integral = integral && is_integral(a.length());
    monotone = monotone && a.non_increasing();
  }
  if (monotone) return {opt_rao_waterfill(inst).value, OptSource::Waterfill};
  if (integral) {
    try {
      return {opt_rao_dp(inst).value, OptSource::Dp};
    } catch (const OracleLimitError&) {
    }
  }
  return {solve_kph(inst).value, OptSource::KphUpper};
}

inline RatioEstimate ratio_from(const ValueEstimate& alg, ResolvedOpt opt) {
  RatioEstimate r;
  r.alg = alg;
  r.opt_value = std::move(opt.value);
  r.opt_source = opt.source;
  r.empirical_ratio = alg.mean > 0 ? to_double(r.opt_value) / alg.mean : std::numeric_limits<double>::infinity();
  return r;
}

/// Empirical competitive ratio Opt / E[Alg] on one instance.
inline RatioEstimate estimate_ratio(const Instance& inst, const ReaderSpec& reader, const EstimateOptions& opt,
                                    OptSource source) {
  auto reference = offline_reference(inst, source);
  return ratio_from(estimate_value(inst, reader, opt), std::move(reference));
}

}  // namespace rao
