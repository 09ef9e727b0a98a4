#pragma once

#include "rao/core/transcript.hpp"
#include "rao/online/reader.hpp"

#include <chrono>
#include <numeric>
#include <string>
#include <vector>

namespace rao {

struct TrialResult {
  ReadingTranscript transcript;
  std::uint64_t seed = 0;
  std::string reader;
  std::chrono::nanoseconds wall_time{0};
};

/// Stream keys of a trial's generator: one for the arrival order, one
/// handed to the reader.
inline constexpr std::uint64_t kOrderStream = 0;
inline constexpr std::uint64_t kReaderStream = 1;

namespace detail {

inline void read_amount(const Article& a, std::size_t i, const Rational& from, const Rational& to,
                        ReadingTranscript& tr, Rational& remaining) {
  Rational gain = a.profile().prefix_sum(to) - a.profile().prefix_sum(from);
  remaining -= to - from;
  tr.read[i] = to;
  tr.gained[i] = gain + tr.gained[i];
  tr.total += gain;
}

}  // namespace detail

/// Plays one random-order trial: arrival order is a uniform permutation from
/// the seed, each article's hint and length are revealed on arrival and its
/// rates only as they are read. Any attempt to read past the budget or the
/// article raises ContractBreach, as does a post-hoc feasibility failure.
inline TrialResult run_trial(const Instance& inst, Reader& reader, std::uint64_t seed, std::string reader_name = {}) {
  const auto started = std::chrono::steady_clock::now();
  const Rng trial_rng(seed);
  const std::size_t n = inst.size();

  ReadingTranscript tr(n);
  tr.order.resize(n);
  std::iota(tr.order.begin(), tr.order.end(), 0u);
  Rng order_rng = trial_rng.split(kOrderStream);
  order_rng.shuffle(std::span<std::uint32_t>(tr.order));

  reader.begin({n, inst.budget}, trial_rng.split(kReaderStream));

  Rational remaining = inst.budget;
  std::vector<Arrival> revealed;
  revealed.reserve(n);
  for (std::size_t round = 0; round < n; ++round) {
    const std::size_t i = tr.order[round];
    const Article& a = inst.articles[i];
    const Rational length = a.length();
    revealed.push_back({round, a.hint(), length, inst.priority(i), remaining});
    StreamView view(revealed);

    Rational position = 0;
    ReadDecision d = reader.on_arrival(revealed.back(), view);
    auto breach = [&](const std::string& what) {
      throw ContractBreach("round " + std::to_string(round) + " (article " + std::to_string(i) + "): " + what);
    };
    while (d.kind != ReadDecision::Kind::Stop) {
      if (position >= length) breach("reading past the end of the article");
      if (d.kind == ReadDecision::Kind::Until) {
        if (d.amount <= position || d.amount > length)
          breach("target position " + to_string(d.amount) + " outside (" + to_string(position) + ", " +
                 to_string(length) + "]");
        if (d.amount - position > remaining) breach("reading past the time budget");
        detail::read_amount(a, i, position, d.amount, tr, remaining);
        break;
      }
      Rational step_size = std::min(Rational(1), length - position);
      Rational amount = step_size;
      if (d.kind == ReadDecision::Kind::Fraction) {
        if (d.amount <= 0 || d.amount >= 1) breach("fraction " + to_string(d.amount) + " outside (0, 1)");
        if (d.amount > step_size) breach("reading past the end of the article");
        amount = d.amount;
      }
      if (amount > remaining) breach("reading past the time budget");
      const Rational from = position;
      position += amount;
      detail::read_amount(a, i, from, position, tr, remaining);
      if (d.kind == ReadDecision::Kind::Fraction) break;
      const auto step = to_int64(ceil_of(position));
      d = reader.on_step({step, (tr.gained[i] - a.profile().prefix_sum(from)) / amount, position, remaining});
    }
  }

  if (auto fault = check_transcript(inst, tr); !fault.empty()) throw ContractBreach("post-hoc check failed: " + fault);
  return {std::move(tr), seed, std::move(reader_name), std::chrono::steady_clock::now() - started};
}

}  // namespace rao
