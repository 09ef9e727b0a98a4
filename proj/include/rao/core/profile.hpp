#pragma once

#include "rao/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace rao {

struct Segment {
  Rational length;     // time steps covered, > 0
  std::int64_t rate;   // information units per step, >= 1

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Piecewise-constant information rate of one article, run-length encoded.
///
/// Step j (1-based) covers the time interval (j-1, j]. Reading up to a
/// fractional position s gains the integral of the rate over (0, s], which
/// for integer segment boundaries is sum_{j<=floor(s)} c(j) + c(ceil(s)) * frac(s).
class InformationProfile {
 public:
  InformationProfile() = default;

  explicit InformationProfile(std::vector<Segment> segments) : segments_(std::move(segments)) {
    std::vector<Segment> merged;
    merged.reserve(segments_.size());
    for (auto& seg : segments_) {
      if (seg.length <= 0) throw std::invalid_argument("profile segment length must be positive");
      if (seg.rate < 1) throw std::invalid_argument("profile rates must be at least 1");
      if (!merged.empty() && merged.back().rate == seg.rate)
        merged.back().length += seg.length;
      else
        merged.push_back(std::move(seg));
    }
    segments_ = std::move(merged);
    starts_.reserve(segments_.size() + 1);
    cumulative_.reserve(segments_.size() + 1);
    Rational at = 0;
    Rational sum = 0;
    for (const auto& seg : segments_) {
      starts_.push_back(at);
      cumulative_.push_back(sum);
      at += seg.length;
      sum += seg.length * seg.rate;
    }
    starts_.push_back(at);
    cumulative_.push_back(sum);
  }

  /// One entry per unit step; consecutive equal rates are merged.
  static InformationProfile from_steps(std::span<const std::int64_t> rates) {
    std::vector<Segment> segs;
    for (auto r : rates) {
      if (!segs.empty() && segs.back().rate == r)
        segs.back().length += 1;
      else
        segs.push_back({1, r});
    }
    return InformationProfile(std::move(segs));
  }

  static InformationProfile constant(const Rational& length, std::int64_t rate) {
    return InformationProfile({{length, rate}});
  }

  const std::vector<Segment>& segments() const { return segments_; }
  bool empty() const { return segments_.empty(); }

  Rational length() const { return starts_.empty() ? Rational(0) : starts_.back(); }
  Rational total() const { return cumulative_.empty() ? Rational(0) : cumulative_.back(); }

  /// Information gained by reading the prefix (0, s]; requires 0 <= s <= length().
  Rational prefix_sum(const Rational& s) const {
    if (s < 0 || s > length()) throw std::out_of_range("prefix position outside the article");
    if (s == 0) return 0;
    // last segment whose start is < s
    auto it = std::lower_bound(starts_.begin(), starts_.end() - 1, s);
    std::size_t k = static_cast<std::size_t>(it - starts_.begin()) - 1;
    return cumulative_[k] + (s - starts_[k]) * segments_[k].rate;
  }

  /// Rate c(j) of the 1-based step j, i.e. the rate just after position j-1.
  std::int64_t rate_at_step(std::int64_t step) const {
    Rational pos = step - 1;
    if (step < 1 || pos >= length()) throw std::out_of_range("step outside the article");
    auto it = std::upper_bound(starts_.begin(), starts_.end() - 1, pos);
    return segments_[static_cast<std::size_t>(it - starts_.begin()) - 1].rate;
  }

  std::int64_t max_rate() const {
    std::int64_t m = 0;
    for (const auto& s : segments_) m = std::max(m, s.rate);
    return m;
  }

  std::int64_t min_rate() const {
    if (segments_.empty()) return 0;
    std::int64_t m = segments_.front().rate;
    for (const auto& s : segments_) m = std::min(m, s.rate);
    return m;
  }

  bool is_non_increasing() const {
    for (std::size_t k = 1; k < segments_.size(); ++k)
      if (segments_[k].rate > segments_[k - 1].rate) return false;
    return true;
  }

  /// Profile restricted to (0, len]; the cut point may be fractional.
  InformationProfile truncated(const Rational& len) const {
    if (len <= 0) throw std::invalid_argument("truncation length must be positive");
    if (len >= length()) return *this;
    std::vector<Segment> out;
    for (std::size_t k = 0; k < segments_.size() && starts_[k] < len; ++k) {
      Rational end = std::min(starts_[k + 1], len);
      out.push_back({end - starts_[k], segments_[k].rate});
    }
    return InformationProfile(std::move(out));
  }

  friend bool operator==(const InformationProfile& a, const InformationProfile& b) {
    return a.segments_ == b.segments_;
  }

 private:
  std::vector<Segment> segments_;
  std::vector<Rational> starts_;
  std::vector<Rational> cumulative_;
};

}  // namespace rao
