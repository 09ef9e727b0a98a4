#pragma once

// Independent oracle for the fractional knapsack over hints: enumerate every
// set of fully packed items and top it up with the best single remaining item.
// An optimal vertex has at most one fractional variable, so this is exact.
// Works in integers after scaling all lengths and the budget to a common
// denominator.

#include "rao/oracles/kph.hpp"

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

namespace rao::fixtures {

struct OracleKph {
  Rational value;
  std::vector<Rational> y;  // aligned with the input items
};

inline OracleKph exhaustive_kph(std::span<const KphItem> items, const Rational& budget) {
  const std::size_t n = items.size();
  if (n > 20) throw std::invalid_argument("exhaustive oracle limited to 20 items");
  std::int64_t scale = to_int64(denominator(budget));
  for (const auto& it : items) scale = std::lcm(scale, to_int64(denominator(it.length)));
  std::vector<std::int64_t> w(n);
  std::vector<std::int64_t> h(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = to_int64(numerator(items[i].length * scale));
    h[i] = items[i].hint;
  }
  const std::int64_t cap = to_int64(numerator(budget * scale));

  __int128 best = -1;
  std::uint32_t best_mask = 0;
  std::size_t best_f = n;
  std::int64_t best_fill = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t weight = 0;
    __int128 value = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) {
        weight += w[i];
        value += static_cast<__int128>(w[i]) * h[i];
      }
    if (weight > cap) continue;
    const std::int64_t left = cap - weight;
    __int128 top = 0;
    std::size_t f = n;
    std::int64_t fill = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) continue;
      const std::int64_t amount = std::min(w[i], left);
      const __int128 v = static_cast<__int128>(amount) * h[i];
      if (v > top) {
        top = v;
        f = i;
        fill = amount;
      }
    }
    if (value + top > best) {
      best = value + top;
      best_mask = mask;
      best_f = f;
      best_fill = fill;
    }
  }
  OracleKph out;
  out.value = Rational(BigInt(static_cast<std::int64_t>(best)), BigInt(scale));
  out.y.assign(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    if (best_mask >> i & 1u) out.y[i] = 1;
  if (best_f < n) out.y[best_f] = Rational(best_fill, w[best_f]);
  return out;
}

}  // namespace rao::fixtures
