#pragma once

#include "rao/core/instance.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rao {

/// Outcome of one reading pass over an instance, indexed by article.
struct ReadingTranscript {
  std::vector<Rational> read;          // s_i, time units read from article i
  std::vector<Rational> gained;        // information obtained from article i
  std::vector<std::uint32_t> order;    // order[k] is the article arriving in round k
  Rational total = 0;

  explicit ReadingTranscript(std::size_t n = 0) : read(n, Rational(0)), gained(n, Rational(0)) {}

  Rational time_used() const {
    Rational sum = 0;
    for (const auto& s : read) sum += s;
    return sum;
  }

  friend bool operator==(const ReadingTranscript&, const ReadingTranscript&) = default;
};

/// Returns an empty string when the transcript is budget- and length-feasible
/// and its gains agree with the profiles; otherwise a description of the fault.
inline std::string check_transcript(const Instance& inst, const ReadingTranscript& tr) {
  if (tr.read.size() != inst.size() || tr.gained.size() != inst.size()) return "transcript size mismatch";
  Rational used = 0;
  Rational total = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& a = inst.articles[i];
    if (tr.read[i].is_zero()) {
      if (!tr.gained[i].is_zero()) return "gain mismatch for article " + std::to_string(i);
      continue;
    }
    if (tr.read[i] < 0) return "negative reading length for article " + std::to_string(i);
    if (tr.read[i] > a.length())
      return "article " + std::to_string(i) + " read " + to_string(tr.read[i]) + " > length " + to_string(a.length());
    if (tr.gained[i] != info_gain(a, tr.read[i])) return "gain mismatch for article " + std::to_string(i);
    used += tr.read[i];
    total += tr.gained[i];
  }
  if (used > inst.budget) return "time used " + to_string(used) + " exceeds budget " + to_string(inst.budget);
  if (total != tr.total) return "total does not equal the sum of gains";
  return {};
}

}  // namespace rao
