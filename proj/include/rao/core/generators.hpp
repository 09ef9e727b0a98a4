#pragma once

#include "rao/core/instance.hpp"
#include "rao/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rao {

namespace detail {

inline std::vector<std::uint32_t> random_priority(std::size_t n, Rng& rng) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  rng.shuffle(std::span<std::uint32_t>(p));
  return p;
}

}  // namespace detail

/// Family whose rates may exceed the hint: n = l^2 articles with T = t_i = h_i = n.
/// The l type-A articles spike to n^2 at step l, the others only at step T.
inline Instance gen_lemma3(std::int64_t ell, std::uint64_t seed = 0) {
  if (ell < 2) throw std::invalid_argument("lemma3 family requires l >= 2");
  const std::int64_t n = ell * ell;
  Rng rng(seed);
  std::vector<std::uint32_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0u);
  rng.split(1).shuffle(std::span<std::uint32_t>(order));
  std::vector<bool> type_a(static_cast<std::size_t>(n), false);
  for (std::int64_t k = 0; k < ell; ++k) type_a[order[static_cast<std::size_t>(k)]] = true;

  Instance inst;
  inst.budget = n;
  inst.id = "lemma3-l" + std::to_string(ell);
  inst.seed = seed;
  inst.adversarial = true;
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<Segment> segs;
    const std::int64_t spike = type_a[static_cast<std::size_t>(i)] ? ell : n;
    if (spike > 1) segs.push_back({spike - 1, 1});
    segs.push_back({1, n * n});
    if (spike < n) segs.push_back({n - spike, 1});
    inst.articles.emplace_back(n, InformationProfile(std::move(segs)));
  }
  Rng prio = rng.split(2);
  inst.tie_priority = detail::random_priority(inst.size(), prio);
  return inst;
}

/// Family with articles longer than the budget: T = 2, t_i = 3, h_i = n.
/// One article (seeded index) has c = [1, n, 1]; the rest have c = [1, 1, n].
inline Instance gen_lemma4(std::int64_t n, std::uint64_t seed = 0) {
  if (n < 2) throw std::invalid_argument("lemma4 family requires n >= 2");
  Rng rng(seed);
  const auto special = static_cast<std::int64_t>(rng.split(1).below(static_cast<std::uint64_t>(n)));
  Instance inst;
  inst.budget = 2;
  inst.id = "lemma4-n" + std::to_string(n);
  inst.seed = seed;
  inst.adversarial = true;
  for (std::int64_t i = 0; i < n; ++i) {
    if (i == special)
      inst.articles.emplace_back(n, std::vector<std::int64_t>{1, n, 1});
    else
      inst.articles.emplace_back(n, std::vector<std::int64_t>{1, 1, n});
  }
  Rng prio = rng.split(2);
  inst.tie_priority = detail::random_priority(inst.size(), prio);
  return inst;
}

/// C-accurate family: T = t_i = 2, h_i = C. One article (seeded index) has
/// c = [1, C]; the rest have c = [1, 1].
inline Instance gen_lemma5(std::int64_t n, std::int64_t c_acc, std::uint64_t seed = 0) {
  if (n < 2) throw std::invalid_argument("lemma5 family requires n >= 2");
  if (c_acc < 1) throw std::invalid_argument("accuracy C must be at least 1");
  Rng rng(seed);
  const auto special = static_cast<std::int64_t>(rng.split(1).below(static_cast<std::uint64_t>(n)));
  Instance inst;
  inst.budget = 2;
  inst.id = "lemma5-n" + std::to_string(n) + "-c" + std::to_string(c_acc);
  inst.seed = seed;
  for (std::int64_t i = 0; i < n; ++i) {
    if (i == special)
      inst.articles.emplace_back(c_acc, std::vector<std::int64_t>{1, c_acc});
    else
      inst.articles.emplace_back(c_acc, std::vector<std::int64_t>{1, 1});
  }
  Rng prio = rng.split(2);
  inst.tie_priority = detail::random_priority(inst.size(), prio);
  return inst;
}

enum class ProfileShape { Constant, NonIncreasingSteps, NonIncreasingGeometric };

inline const char* to_string(ProfileShape s) {
  switch (s) {
    case ProfileShape::Constant: return "constant";
    case ProfileShape::NonIncreasingSteps: return "steps";
    case ProfileShape::NonIncreasingGeometric: return "geometric";
  }
  return "?";
}

inline ProfileShape parse_shape(const std::string& s) {
  if (s == "constant") return ProfileShape::Constant;
  if (s == "steps") return ProfileShape::NonIncreasingSteps;
  if (s == "geometric") return ProfileShape::NonIncreasingGeometric;
  throw std::invalid_argument("unknown profile shape '" + s + "'");
}

struct RandomParams {
  std::int64_t n = 20;
  std::int64_t budget = 100;
  std::int64_t hint_min = 1;
  std::int64_t hint_max = 100;
  std::int64_t length_min = 1;
  std::int64_t length_max = 25;  // lengths are uniform in [length_min, length_max]
  ProfileShape shape = ProfileShape::Constant;
  // per-article accuracy target, drawn uniformly; ignored for constant profiles
  double accuracy_min = 1.0;
  double accuracy_max = 2.0;
};

namespace detail {

inline std::vector<double> shape_weights(ProfileShape shape, std::int64_t t, Rng& rng) {
  std::vector<double> w(static_cast<std::size_t>(t), 1.0);
  if (shape == ProfileShape::NonIncreasingGeometric) {
    // total decay over the article between e^-0.5 and e^-4
    const double q = std::exp(-rng.uniform(0.5, 4.0) / static_cast<double>(t));
    double v = 1.0;
    for (auto& x : w) {
      x = v;
      v *= q;
    }
  } else if (shape == ProfileShape::NonIncreasingSteps) {
    const auto levels = rng.between(1, std::min<std::int64_t>(4, t));
    std::set<std::int64_t> cuts;
    while (static_cast<std::int64_t>(cuts.size()) < levels - 1) cuts.insert(rng.between(1, t - 1));
    double level = 1.0;
    std::int64_t j = 0;
    for (auto& x : w) {
      if (cuts.count(j)) level *= rng.uniform(0.2, 0.9);
      x = level;
      ++j;
    }
  }
  return w;
}

/// Non-increasing integer rates in [1, h] whose sum is as close as possible to `target_sum`.
inline std::vector<std::int64_t> fit_rates(const std::vector<double>& w, std::int64_t h, double target_sum) {
  auto rates_for = [&](double scale) {
    std::vector<std::int64_t> r(w.size());
    std::int64_t sum = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
      r[j] = std::clamp<std::int64_t>(std::llround(scale * w[j]), 1, h);
      sum += r[j];
    }
    return std::pair{r, sum};
  };
  double lo = 0.0;
  double hi = static_cast<double>(h) / w.back() + 1.0;
  for (int it = 0; it < 100; ++it) {
    double mid = 0.5 * (lo + hi);
    if (static_cast<double>(rates_for(mid).second) < target_sum)
      lo = mid;
    else
      hi = mid;
  }
  auto [r_lo, s_lo] = rates_for(lo);
  auto [r_hi, s_hi] = rates_for(hi);
  return std::abs(static_cast<double>(s_lo) - target_sum) <= std::abs(static_cast<double>(s_hi) - target_sum) ? r_lo
                                                                                                                : r_hi;
}

}  // namespace detail

/// Seeded random instance satisfying the instance restrictions: t_i <= T,
/// distinct hints and hint values, rates in [1, h_i]. A random tie priority
/// is stored as well.
inline Instance gen_random(const RandomParams& p, std::uint64_t seed) {
  if (p.n < 1) throw std::invalid_argument("n must be positive");
  if (p.budget < 1) throw std::invalid_argument("budget must be positive");
  if (p.hint_min < 1 || p.hint_max < p.hint_min) throw std::invalid_argument("hint range must satisfy 1 <= min <= max");
  if (p.hint_max - p.hint_min + 1 < p.n)
    throw std::invalid_argument("hint range too small for " + std::to_string(p.n) + " distinct hints");
  if (p.length_min < 1 || p.length_max < p.length_min) throw std::invalid_argument("length range must satisfy 1 <= min <= max");
  if (p.length_max > p.budget) throw std::invalid_argument("length_max exceeds the budget");
  if (!(p.accuracy_min >= 1.0) || p.accuracy_max < p.accuracy_min)
    throw std::invalid_argument("accuracy range must satisfy 1 <= min <= max");

  Rng root(seed);
  Rng hint_rng = root.split(1);
  Rng length_rng = root.split(2);
  Rng profile_rng = root.split(3);
  Rng prio_rng = root.split(4);

  // Floyd's sampling of distinct hints, then a random order
  std::vector<std::int64_t> hints;
  {
    std::set<std::int64_t> chosen;
    const std::int64_t range = p.hint_max - p.hint_min + 1;
    for (std::int64_t j = range - p.n; j < range; ++j) {
      std::int64_t v = hint_rng.between(0, j);
      if (!chosen.insert(v).second) {
        chosen.insert(j);
        v = j;
      }
      hints.push_back(p.hint_min + v);
    }
    hint_rng.shuffle(std::span<std::int64_t>(hints));
  }

  Instance inst;
  inst.budget = p.budget;
  inst.id = std::string("random-") + to_string(p.shape) + "-n" + std::to_string(p.n) + "-s" + std::to_string(seed);
  inst.seed = seed;
  std::set<std::int64_t> products;
  for (std::int64_t i = 0; i < p.n; ++i) {
    const std::int64_t h = hints[static_cast<std::size_t>(i)];
    std::int64_t t = 0;
    for (int attempt = 0;; ++attempt) {
      if (attempt == 1000)
        throw std::invalid_argument("cannot draw lengths with distinct hint values; widen the length range");
      t = length_rng.between(p.length_min, p.length_max);
      if (products.insert(t * h).second) break;
    }
    if (p.shape == ProfileShape::Constant) {
      inst.articles.emplace_back(h, InformationProfile::constant(t, h));
      continue;
    }
    const double target_acc = profile_rng.uniform(p.accuracy_min, p.accuracy_max);
    const double target_sum = std::max(static_cast<double>(t), static_cast<double>(h * t) / target_acc);
    auto w = detail::shape_weights(p.shape, t, profile_rng);
    auto rates = detail::fit_rates(w, h, target_sum);
    inst.articles.emplace_back(h, InformationProfile::from_steps(rates));
  }
  inst.tie_priority = detail::random_priority(inst.size(), prio_rng);
  return inst;
}

}  // namespace rao
