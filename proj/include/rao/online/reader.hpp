#pragma once

#include "rao/rational.hpp"
#include "rao/rng.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rao {

/// Raised when a reader or a plugged-in knapsack box violates the reading
/// rules: reading past the budget or the article, or peeking at the future.
class ContractBreach : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// What the reader does next with the current article.
///
/// Step reads the next unit step and reports its rate through on_step.
/// Fraction reads phi in (0,1) of the next step and ends the article.
/// Until reads without interruption up to absolute position s and ends the
/// article; the rates in between are not reported.
struct ReadDecision {
  enum class Kind { Stop, Step, Fraction, Until };
  Kind kind = Kind::Stop;
  Rational amount = 0;

  static ReadDecision stop() { return {Kind::Stop, 0}; }
  static ReadDecision step() { return {Kind::Step, 0}; }
  static ReadDecision fraction(Rational phi) { return {Kind::Fraction, std::move(phi)}; }
  static ReadDecision until(Rational position) { return {Kind::Until, std::move(position)}; }
};

/// Data revealed when an article arrives.
struct Arrival {
  std::size_t round = 0;  // 0-based
  std::int64_t hint = 0;
  Rational length;
  std::uint64_t tie_key = 0;  // consistent tie-breaking among equal hints
  Rational remaining_budget;

  Rational hint_value() const { return length * hint; }
};

struct StepObservation {
  std::int64_t step = 0;  // 1-based index of the step just read
  Rational rate;          // information per time unit in that step
  Rational position;      // time read from the current article so far
  Rational remaining_budget;
};

/// Read-only window onto the arrivals revealed so far.
class StreamView {
 public:
  explicit StreamView(const std::vector<Arrival>& revealed) : revealed_(revealed) {}

  std::size_t current_round() const { return revealed_.size() - 1; }

  const Arrival& revealed(std::size_t round) const {
    if (round >= revealed_.size())
      throw ContractBreach("look-ahead: round " + std::to_string(round) + " has not been revealed (current round " +
                           std::to_string(current_round()) + ")");
    return revealed_[round];
  }

 private:
  const std::vector<Arrival>& revealed_;
};

struct TrialSetup {
  std::size_t n = 0;
  Rational budget;
};

/// Online reading strategy. One instance serves exactly one trial.
class Reader {
 public:
  virtual ~Reader() = default;

  virtual void begin(const TrialSetup& setup, Rng rng) = 0;
  virtual ReadDecision on_arrival(const Arrival& arrival, const StreamView& view) = 0;
  virtual ReadDecision on_step(const StepObservation&) { return ReadDecision::stop(); }
};

/// Named reader configuration able to produce fresh readers for each trial.
struct ReaderSpec {
  std::string name;
  std::string params;
  std::function<std::unique_ptr<Reader>()> make;
};

}  // namespace rao
