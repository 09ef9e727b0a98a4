#pragma once

#include "rao/rational.hpp"
#include "rao/rng.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <optional>
#include <vector>

namespace rao {

struct KnapsackOffer {
  std::size_t round = 0;
  Rational value;
  Rational weight;
};

/// Online 0/1 knapsack algorithm in the random order model, used as a black
/// box. `declared_alpha` is trusted metadata: the competitive ratio the box
/// claims.
class OnlineKnapsack {
 public:
  virtual ~OnlineKnapsack() = default;

  virtual double declared_alpha() const = 0;
  virtual void begin(std::size_t n, const Rational& capacity, Rng rng) = 0;
  virtual bool offer(const KnapsackOffer& item, const Rational& remaining_capacity) = 0;
};

using KnapsackFactory = std::function<std::unique_ptr<OnlineKnapsack>()>;

/// Length of the observation phase of the classical secretary algorithm.
inline std::size_t secretary_cutoff(std::size_t n) {
  return static_cast<std::size_t>(std::floor(static_cast<double>(n) / std::numbers::e));
}

/// Baseline knapsack-secretary box (declared alpha 10e). A fair coin picks
///  - a value secretary: observe floor(n/e) items, then take the first item
///    worth more than all of them, or
///  - a density threshold: observe floor(n/2) items, solve the fractional
///    knapsack on them with the full capacity and accept every later item
///    whose density reaches the threshold density while it fits.
class KnapsackSecretary final : public OnlineKnapsack {
 public:
  enum class Branch { ValueSecretary, DensityThreshold };

  double declared_alpha() const override { return 10.0 * std::numbers::e; }

  void begin(std::size_t n, const Rational& capacity, Rng rng) override {
    n_ = n;
    capacity_ = capacity;
    branch_ = rng.bernoulli(0.5) ? Branch::ValueSecretary : Branch::DensityThreshold;
    seen_ = 0;
    best_.reset();
    taken_ = false;
    sample_.clear();
    threshold_.reset();
  }

  bool offer(const KnapsackOffer& item, const Rational& remaining_capacity) override {
    const std::size_t k = seen_++;
    if (branch_ == Branch::ValueSecretary) {
      if (k < secretary_cutoff(n_)) {
        if (!best_ || item.value > *best_) best_ = item.value;
        return false;
      }
      if (taken_ || (best_ && item.value <= *best_) || item.weight > remaining_capacity) return false;
      taken_ = true;
      return true;
    }
    if (k < n_ / 2) {
      sample_.push_back(item);
      return false;
    }
    if (!threshold_) threshold_ = sample_threshold();
    return item.value >= *threshold_ * item.weight && item.weight <= remaining_capacity;
  }

  Branch branch() const { return branch_; }
  const std::optional<Rational>& threshold() const { return threshold_; }

 private:
  // Density at which the optimal fractional packing of the sample runs out
  // of capacity; 0 when the whole sample fits.
  Rational sample_threshold() {
    std::vector<std::pair<Rational, Rational>> items;  // (density, weight)
    items.reserve(sample_.size());
    for (const auto& s : sample_) items.emplace_back(s.value / s.weight, s.weight);
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    Rational left = capacity_;
    for (const auto& [density, weight] : items) {
      if (weight >= left) return density;
      left -= weight;
    }
    return 0;
  }

  std::size_t n_ = 0;
  Rational capacity_;
  Branch branch_ = Branch::ValueSecretary;
  std::size_t seen_ = 0;
  std::optional<Rational> best_;
  bool taken_ = false;
  std::vector<KnapsackOffer> sample_;
  std::optional<Rational> threshold_;
};

inline KnapsackFactory knapsack_secretary_factory() {
  return [] { return std::make_unique<KnapsackSecretary>(); };
}

}  // namespace rao
