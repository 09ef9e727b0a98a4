#pragma once

#include "rao/core/transcript.hpp"
#include "rao/oracles/kph.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rao {

struct OfflineOptimum {
  Rational value = 0;
  ReadingTranscript witness;
};

/// Exact offline optimum over integer prefix lengths with sum <= T.
/// Knapsack-style DP over (article, remaining budget); each article
/// contributes one prefix. Deliberately plain: this is the reference oracle.
inline OfflineOptimum opt_rao_dp(const Instance& inst, std::size_t work_limit = 200'000'000) {
  if (!is_integral(inst.budget)) throw std::invalid_argument("DP oracle needs an integral budget");
  const auto cap = to_int64(numerator(inst.budget));
  if (cap < 0) throw std::invalid_argument("negative budget");
  const std::size_t n = inst.size();

  std::vector<std::vector<std::int64_t>> prefix(n);
  std::size_t work = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = inst.articles[i];
    if (!is_integral(a.length())) throw std::invalid_argument("DP oracle needs integral article lengths");
    const auto t = std::min<std::int64_t>(to_int64(numerator(a.length())), cap);
    prefix[i].assign(static_cast<std::size_t>(t) + 1, 0);
    for (std::int64_t j = 1; j <= t; ++j) prefix[i][static_cast<std::size_t>(j)] = prefix[i][static_cast<std::size_t>(j - 1)] + a.profile().rate_at_step(j);
    work += static_cast<std::size_t>(t + 1) * static_cast<std::size_t>(cap + 1);
    if (work > work_limit) throw OracleLimitError("DP oracle work exceeds limit");
  }

  const auto width = static_cast<std::size_t>(cap) + 1;
  std::vector<std::int64_t> best(width, 0);
  std::vector<std::vector<std::int32_t>> choice(n, std::vector<std::int32_t>(width, 0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> next(width, 0);
    const auto t = prefix[i].size() - 1;
    for (std::size_t b = 0; b < width; ++b) {
      std::int64_t top = -1;
      std::int32_t arg = 0;
      for (std::size_t tau = 0; tau <= std::min(t, b); ++tau) {
        std::int64_t v = best[b - tau] + prefix[i][tau];
        if (v > top) {
          top = v;
          arg = static_cast<std::int32_t>(tau);
        }
      }
      next[b] = top;
      choice[i][b] = arg;
    }
    best = std::move(next);
  }

  OfflineOptimum opt;
  opt.value = best[width - 1];
  opt.witness = ReadingTranscript(n);
  std::size_t b = width - 1;
  for (std::size_t i = n; i > 0; --i) {
    const auto tau = static_cast<std::size_t>(choice[i - 1][b]);
    opt.witness.read[i - 1] = static_cast<std::int64_t>(tau);
    opt.witness.gained[i - 1] = prefix[i - 1][tau];
    b -= tau;
  }
  opt.witness.total = opt.value;
  return opt;
}

/// Offline optimum for non-increasing profiles: take time globally in order
/// of decreasing marginal rate. Non-increasing rates make every such choice
/// a prefix of each article; the budget may be fractional.
inline OfflineOptimum opt_rao_waterfill(const Instance& inst) {
  struct Piece {
    std::int64_t rate;
    std::size_t article;
    const Rational* length;
  };
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& a = inst.articles[i];
    if (!a.non_increasing()) throw std::invalid_argument("water-filling requires non-increasing profiles");
    for (const auto& seg : a.profile().segments()) pieces.push_back({seg.rate, i, &seg.length});
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) { return x.rate > y.rate; });

  OfflineOptimum opt;
  opt.witness = ReadingTranscript(inst.size());
  Rational remaining = inst.budget;
  for (const auto& p : pieces) {
    if (remaining <= 0) break;
    Rational take = std::min(*p.length, remaining);
    opt.witness.read[p.article] += take;
    opt.witness.gained[p.article] += take * p.rate;
    remaining -= take;
  }
  for (const auto& g : opt.witness.gained) opt.value += g;
  opt.witness.total = opt.value;
  return opt;
}

}  // namespace rao
