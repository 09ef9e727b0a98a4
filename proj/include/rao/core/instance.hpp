#pragma once

#include "rao/core/profile.hpp"
#include "rao/rational.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rao {

class Article {
 public:
  Article(std::int64_t hint, InformationProfile profile) : hint_(hint), profile_(std::move(profile)) {
    if (hint_ < 1) throw std::invalid_argument("article hint must be a positive integer");
    if (profile_.empty()) throw std::invalid_argument("article profile must not be empty");
    non_increasing_ = profile_.is_non_increasing();
  }

  /// Convenience for unit-step profiles: c = {c(1), ..., c(t)}.
  Article(std::int64_t hint, std::vector<std::int64_t> step_rates)
      : Article(hint, InformationProfile::from_steps(step_rates)) {}

  std::int64_t hint() const { return hint_; }
  Rational length() const { return profile_.length(); }
  const InformationProfile& profile() const { return profile_; }
  bool non_increasing() const { return non_increasing_; }

  /// Upper bound t_i * h_i on the information in this article.
  Rational hint_value() const { return length() * hint_; }

  friend bool operator==(const Article& a, const Article& b) {
    return a.hint_ == b.hint_ && a.profile_ == b.profile_;
  }

 private:
  std::int64_t hint_;
  InformationProfile profile_;
  bool non_increasing_ = true;
};

/// Information gained by reading the first s time units of an article.
inline Rational info_gain(const Article& a, const Rational& s) {
  if (s < 0) throw std::invalid_argument("reading length must be non-negative");
  if (s > a.length()) throw std::invalid_argument("reading length exceeds article length");
  return a.profile().prefix_sum(s);
}

struct Instance {
  Rational budget;
  std::vector<Article> articles;
  std::string id;
  std::uint64_t seed = 0;
  /// Seeded strict priority used to break hint ties; absent means ties are
  /// unresolved (validation reports them) and index order is used.
  std::optional<std::vector<std::uint32_t>> tie_priority;
  /// Set by generators whose instances deliberately break the standing model.
  bool adversarial = false;

  std::size_t size() const { return articles.size(); }

  /// Tie key of article i: larger wins among equal hints.
  std::uint64_t priority(std::size_t i) const {
    if (tie_priority && i < tie_priority->size()) return (*tie_priority)[i];
    return articles.size() - i;
  }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.budget == b.budget && a.articles == b.articles && a.id == b.id && a.seed == b.seed &&
           a.tie_priority == b.tie_priority && a.adversarial == b.adversarial;
  }
};

struct AccuracyReport {
  Rational c_value;
  std::size_t argmax_article = 0;
};

/// Smallest C with h_i <= C * (average rate of article i) for every article.
inline AccuracyReport accuracy(const Instance& inst) {
  if (inst.articles.empty()) throw std::invalid_argument("accuracy of an empty instance");
  AccuracyReport report{0, 0};
  for (std::size_t i = 0; i < inst.articles.size(); ++i) {
    const auto& a = inst.articles[i];
    Rational c = a.hint_value() / a.profile().total();
    if (i == 0 || c > report.c_value) report = {c, i};
  }
  return report;
}

/// Instance with every article truncated to min{t_i, g*T}; budget and hints unchanged.
inline Instance cut_instance(const Instance& inst, const Rational& g) {
  if (g <= 0 || g > 1) throw std::invalid_argument("cut fraction must lie in (0, 1]");
  Instance out = inst;
  const Rational cap = g * inst.budget;
  out.articles.clear();
  out.articles.reserve(inst.articles.size());
  for (const auto& a : inst.articles) {
    if (a.length() <= cap)
      out.articles.push_back(a);
    else
      out.articles.emplace_back(a.hint(), a.profile().truncated(cap));
  }
  return out;
}

}  // namespace rao
