#pragma once

#include "rao/core/instance.hpp"
#include "rao/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace rao {

/// One candidate of the knapsack over hints: value length*hint, weight length.
struct KphItem {
  std::size_t article;
  std::int64_t hint;
  Rational length;
  std::uint64_t priority = 0;  // breaks hint ties, larger ranks first
};

/// True if a precedes b in the hint order used by every comparator.
inline bool ranks_before(const KphItem& a, const KphItem& b) {
  if (a.hint != b.hint) return a.hint > b.hint;
  return a.priority > b.priority;
}

struct KphEntry {
  KphItem item;
  Rational y;  // fraction taken, in [0, 1]
};

/// Optimal fractional knapsack with values t_i*h_i, weights t_i.
struct KphSolution {
  std::vector<KphEntry> entries;   // items in scope, in hint rank order
  std::optional<std::int64_t> rho; // threshold hint, empty iff no items
  std::optional<std::size_t> fractional_item;
  Rational value = 0;
  Rational weight = 0;
  Rational budget = 0;

  Rational y(std::size_t article) const {
    for (const auto& e : entries)
      if (e.item.article == article) return e.y;
    return 0;
  }

  std::vector<std::size_t> integral_set() const {
    std::vector<std::size_t> out;
    for (const auto& e : entries)
      if (e.y == 1) out.push_back(e.item.article);
    return out;
  }

  bool full() const { return weight == budget; }

  /// Value the articles of R contribute to this solution.
  Rational value_of(std::span<const std::size_t> subset) const {
    Rational v = 0;
    for (const auto& e : entries)
      if (std::find(subset.begin(), subset.end(), e.item.article) != subset.end()) v += e.item.length * e.item.hint * e.y;
    return v;
  }

  /// Weight the articles of R contribute to this solution.
  Rational weight_of(std::span<const std::size_t> subset) const {
    Rational w = 0;
    for (const auto& e : entries)
      if (std::find(subset.begin(), subset.end(), e.item.article) != subset.end()) w += e.item.length * e.y;
    return w;
  }
};

/// Greedy by hint (the density of every item is its hint), at most one
/// fractional item. rho is the hint of the first item not fully packed, or
/// the smallest packed hint when everything fits.
inline KphSolution solve_kph(std::span<const KphItem> items, const Rational& budget) {
  if (budget < 0) throw std::invalid_argument("knapsack budget must be non-negative");
  KphSolution sol;
  sol.budget = budget;
  sol.entries.reserve(items.size());
  for (const auto& it : items) {
    if (it.length <= 0) throw std::invalid_argument("knapsack item length must be positive");
    sol.entries.push_back({it, 0});
  }
  std::sort(sol.entries.begin(), sol.entries.end(),
            [](const KphEntry& a, const KphEntry& b) { return ranks_before(a.item, b.item); });

  Rational remaining = budget;
  for (auto& e : sol.entries) {
    if (remaining == 0) break;
    if (e.item.length <= remaining) {
      e.y = 1;
      remaining -= e.item.length;
      sol.weight += e.item.length;
      sol.value += e.item.length * e.item.hint;
    } else {
      e.y = remaining / e.item.length;
      sol.fractional_item = e.item.article;
      sol.weight += remaining;
      sol.value += remaining * e.item.hint;
      remaining = 0;
    }
  }
  for (const auto& e : sol.entries) {
    if (e.y < 1) {
      sol.rho = e.item.hint;
      break;
    }
  }
  if (!sol.rho && !sol.entries.empty()) sol.rho = sol.entries.back().item.hint;
  return sol;
}

inline std::vector<KphItem> kph_items(const Instance& inst) {
  std::vector<KphItem> items;
  items.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i)
    items.push_back({i, inst.articles[i].hint(), inst.articles[i].length(), inst.priority(i)});
  return items;
}

/// KPH over all articles of an instance with the instance budget.
inline KphSolution solve_kph(const Instance& inst) { return solve_kph(kph_items(inst), inst.budget); }

class OracleLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct IntegralKphSolution {
  Rational value = 0;
  std::vector<std::size_t> chosen;  // article indices, ascending
};

/// Exact 0/1 knapsack on values t_i*h_i, weights t_i; lengths must be
/// integral. Dynamic program over the budget, bounded by `cell_limit`.
inline IntegralKphSolution solve_kph_integral(std::span<const KphItem> items, const Rational& budget,
                                              std::size_t cell_limit = 50'000'000) {
  if (budget < 0) throw std::invalid_argument("knapsack budget must be non-negative");
  const auto cap = static_cast<std::size_t>(to_int64(floor_of(budget)));
  if ((cap + 1) * (items.size() + 1) > cell_limit)
    throw OracleLimitError("integral knapsack table exceeds oracle limit");
  std::vector<std::int64_t> weight(items.size());
  std::vector<std::int64_t> value(items.size());
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (!is_integral(items[k].length)) throw std::invalid_argument("integral knapsack needs integral lengths");
    weight[k] = to_int64(numerator(items[k].length));
    value[k] = weight[k] * items[k].hint;
  }
  // best[k][b]: best value using the first k items with capacity b
  std::vector<std::vector<std::int64_t>> best(items.size() + 1, std::vector<std::int64_t>(cap + 1, 0));
  for (std::size_t k = 1; k <= items.size(); ++k) {
    const auto w = static_cast<std::size_t>(weight[k - 1]);
    for (std::size_t b = 0; b <= cap; ++b) {
      best[k][b] = best[k - 1][b];
      if (w <= b) best[k][b] = std::max(best[k][b], best[k - 1][b - w] + value[k - 1]);
    }
  }
  IntegralKphSolution sol;
  sol.value = best[items.size()][cap];
  std::size_t b = cap;
  for (std::size_t k = items.size(); k > 0; --k) {
    if (best[k][b] != best[k - 1][b]) {
      sol.chosen.push_back(items[k - 1].article);
      b -= static_cast<std::size_t>(weight[k - 1]);
    }
  }
  std::sort(sol.chosen.begin(), sol.chosen.end());
  return sol;
}

inline IntegralKphSolution solve_kph_integral(const Instance& inst) {
  return solve_kph_integral(kph_items(inst), inst.budget);
}

}  // namespace rao
