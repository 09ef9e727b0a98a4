#pragma once

#include "rao/online/okp.hpp"
#include "rao/online/reader.hpp"
#include "rao/oracles/kph.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

namespace rao {

/// Classical secretary on hint values t_i*h_i: observe floor(n/e) arrivals,
/// then read fully the first article whose hint value beats all of them.
/// Selects at most one article.
class SecretaryReader final : public Reader {
 public:
  void begin(const TrialSetup& setup, Rng) override {
    cutoff_ = secretary_cutoff(setup.n);
    best_.reset();
    chosen_ = false;
  }

  ReadDecision on_arrival(const Arrival& a, const StreamView&) override {
    Rational value = a.hint_value();
    if (a.round < cutoff_) {
      if (!best_ || value > *best_) best_ = std::move(value);
      return ReadDecision::stop();
    }
    if (chosen_ || (best_ && value <= *best_)) return ReadDecision::stop();
    chosen_ = true;
    Rational s = std::min(a.length, a.remaining_budget);
    return s > 0 ? ReadDecision::until(std::move(s)) : ReadDecision::stop();
  }

  std::size_t cutoff() const { return cutoff_; }

 private:
  std::size_t cutoff_ = 0;
  std::optional<Rational> best_;
  bool chosen_ = false;
};

/// Feeds every article to an online knapsack box as (t_i*h_i, t_i) and reads
/// the accepted ones completely.
class DirectKnapsackReader final : public Reader {
 public:
  explicit DirectKnapsackReader(std::unique_ptr<OnlineKnapsack> box) : box_(std::move(box)) {
    if (!box_) throw std::invalid_argument("knapsack box required");
  }

  void begin(const TrialSetup& setup, Rng rng) override { box_->begin(setup.n, setup.budget, std::move(rng)); }

  ReadDecision on_arrival(const Arrival& a, const StreamView&) override {
    if (!box_->offer({a.round, a.hint_value(), a.length}, a.remaining_budget)) return ReadDecision::stop();
    if (a.length > a.remaining_budget)
      throw ContractBreach("knapsack box accepted an item of weight " + to_string(a.length) +
                           " with only " + to_string(a.remaining_budget) + " capacity left");
    return ReadDecision::until(a.length);
  }

  const OnlineKnapsack& box() const { return *box_; }

 private:
  std::unique_ptr<OnlineKnapsack> box_;
};

/// With probability delta = alpha/(e+alpha) behave as the direct knapsack
/// reader, otherwise as the secretary reader. The coin is drawn from a split
/// stream so that each branch sees exactly the randomness it would see when
/// run on its own.
class ReductionReader final : public Reader {
 public:
  static constexpr std::uint64_t kCoinStream = 0xC0111;

  explicit ReductionReader(std::unique_ptr<OnlineKnapsack> box)
      : alpha_(box ? box->declared_alpha() : 0.0), knapsack_(std::move(box)) {
    if (!(alpha_ >= 1.0)) throw std::invalid_argument("declared alpha must be at least 1");
  }

  static double delta_for(double alpha) { return alpha / (std::numbers::e + alpha); }
  double delta() const { return delta_for(alpha_); }

  void begin(const TrialSetup& setup, Rng rng) override {
    use_knapsack_ = rng.split(kCoinStream).bernoulli(delta());
    if (use_knapsack_)
      knapsack_.begin(setup, std::move(rng));
    else
      secretary_.begin(setup, std::move(rng));
  }

  ReadDecision on_arrival(const Arrival& a, const StreamView& view) override {
    return use_knapsack_ ? knapsack_.on_arrival(a, view) : secretary_.on_arrival(a, view);
  }

  /// true when the knapsack branch was drawn for this trial
  bool knapsack_branch() const { return use_knapsack_; }

 private:
  double alpha_;
  bool use_knapsack_ = false;
  DirectKnapsackReader knapsack_;
  SecretaryReader secretary_;
};

/// Single-threshold reader for non-increasing information rates.
///
/// Samples r ~ Bin(n, 1/2) and only observes the first r arrivals. The
/// threshold is the KPH threshold hint of the sample with budget T/2 and
/// lengths cut to g*T (0 when the sample is empty or does not fill T/2).
/// Every later article with h_i >= threshold is read for
/// min{t_i, g*T, remaining budget}.
class ThresholdReader final : public Reader {
 public:
  explicit ThresholdReader(Rational g, std::optional<std::size_t> forced_sample = std::nullopt)
      : g_(std::move(g)), forced_sample_(forced_sample) {
    if (g_ <= 0 || g_ > 1) throw std::invalid_argument("cut fraction g must lie in (0, 1]");
  }

  void begin(const TrialSetup& setup, Rng rng) override {
    budget_ = setup.budget;
    cap_ = g_ * setup.budget;
    sample_size_ = forced_sample_ ? std::min(*forced_sample_, setup.n) : static_cast<std::size_t>(rng.binomial_half(setup.n));
    sample_.clear();
    sample_.reserve(sample_size_);
    threshold_.reset();
  }

  ReadDecision on_arrival(const Arrival& a, const StreamView&) override {
    if (a.round < sample_size_) {
      sample_.push_back({a.round, a.hint, std::min(a.length, cap_), a.tie_key});
      return ReadDecision::stop();
    }
    if (!threshold_) threshold_ = compute_threshold();
    if (a.hint < *threshold_) return ReadDecision::stop();
    Rational s = std::min({a.length, cap_, a.remaining_budget});
    return s > 0 ? ReadDecision::until(std::move(s)) : ReadDecision::stop();
  }

  std::size_t sample_size() const { return sample_size_; }
  const std::optional<std::int64_t>& threshold() const { return threshold_; }

 private:
  std::int64_t compute_threshold() const {
    if (sample_.empty()) return 0;
    auto sol = solve_kph(sample_, budget_ / 2);
    return sol.full() ? *sol.rho : 0;
  }

  Rational g_;
  std::optional<std::size_t> forced_sample_;
  Rational budget_;
  Rational cap_;
  std::size_t sample_size_ = 0;
  std::vector<KphItem> sample_;
  std::optional<std::int64_t> threshold_;
};

/// Reference reader for the rate-above-hint family: reads the first `steps`
/// time steps of each of the first `articles` arrivals, one step at a time.
/// Both default to floor(sqrt(n)).
class PrefixReader final : public Reader {
 public:
  PrefixReader(std::optional<std::int64_t> articles = std::nullopt, std::optional<std::int64_t> steps = std::nullopt)
      : articles_param_(articles), steps_param_(steps) {}

  void begin(const TrialSetup& setup, Rng) override {
    auto root = static_cast<std::int64_t>(std::sqrt(static_cast<double>(setup.n)));
    while ((root + 1) * (root + 1) <= static_cast<std::int64_t>(setup.n)) ++root;
    while (root * root > static_cast<std::int64_t>(setup.n)) --root;
    articles_ = articles_param_.value_or(root);
    steps_ = steps_param_.value_or(root);
    started_ = 0;
  }

  ReadDecision on_arrival(const Arrival& a, const StreamView&) override {
    if (started_ >= articles_ || steps_ <= 0) return ReadDecision::stop();
    ++started_;
    return next(0, a.length, a.remaining_budget);
  }

  ReadDecision on_step(const StepObservation& obs) override { return next(obs.position, length_, obs.remaining_budget); }

 private:
  ReadDecision next(const Rational& position, const Rational& length, const Rational& remaining) {
    length_ = length;
    if (position >= steps_ || position >= length || remaining <= 0) return ReadDecision::stop();
    if (remaining < 1 && remaining < length - position) return ReadDecision::fraction(remaining);
    return ReadDecision::step();
  }

  std::optional<std::int64_t> articles_param_;
  std::optional<std::int64_t> steps_param_;
  std::int64_t articles_ = 0;
  std::int64_t steps_ = 0;
  std::int64_t started_ = 0;
  Rational length_;
};

}  // namespace rao
