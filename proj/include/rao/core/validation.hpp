#pragma once

#include "rao/core/instance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace rao {

enum class ViolationKind {
  NonPositiveBudget,
  RateExceedsHint,
  LengthExceedsBudget,
  DuplicateHint,
  DuplicateHintValue,
  InvalidTiePriority,
};

inline const char* describe(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NonPositiveBudget: return "budget must be positive";
    case ViolationKind::RateExceedsHint: return "rate exceeds hint";
    case ViolationKind::LengthExceedsBudget: return "length exceeds budget";
    case ViolationKind::DuplicateHint: return "duplicate hint";
    case ViolationKind::DuplicateHintValue: return "duplicate hint value t*h";
    case ViolationKind::InvalidTiePriority: return "tie priority is not a permutation of article indices";
  }
  return "unknown violation";
}

struct Violation {
  ViolationKind kind;
  std::size_t article;  // meaningless for instance-level violations
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
  }
};

/// Lists every violated model invariant. With `restricted` the instance must
/// also have t_i <= T and pairwise distinct hints and hint values; duplicates
/// are accepted when a valid tie priority resolves them.
inline ValidationReport validate_instance(const Instance& inst, bool restricted) {
  ValidationReport report;
  auto flag = [&](ViolationKind kind, std::size_t i, std::string detail) {
    std::string msg = describe(kind);
    if (!detail.empty()) msg += ": " + detail;
    report.violations.push_back({kind, i, std::move(msg)});
  };

  if (inst.budget <= 0) flag(ViolationKind::NonPositiveBudget, 0, "T=" + to_string(inst.budget));

  bool priority_valid = false;
  if (inst.tie_priority) {
    const auto& p = *inst.tie_priority;
    std::set<std::uint32_t> seen(p.begin(), p.end());
    priority_valid = p.size() == inst.size() && seen.size() == p.size() &&
                     (p.empty() || *seen.rbegin() < p.size());
    if (!priority_valid) flag(ViolationKind::InvalidTiePriority, 0, "");
  }

  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& a = inst.articles[i];
    if (a.profile().max_rate() > a.hint())
      flag(ViolationKind::RateExceedsHint, i,
           "article " + std::to_string(i) + " rate " + std::to_string(a.profile().max_rate()) + " > hint " +
               std::to_string(a.hint()));
    if (restricted && a.length() > inst.budget)
      flag(ViolationKind::LengthExceedsBudget, i,
           "article " + std::to_string(i) + " t=" + to_string(a.length()) + " > T=" + to_string(inst.budget));
  }

  if (restricted && !priority_valid) {
    std::map<std::int64_t, std::size_t> hints;
    std::map<Rational, std::size_t> values;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      const auto& a = inst.articles[i];
      if (auto [it, fresh] = hints.emplace(a.hint(), i); !fresh)
        flag(ViolationKind::DuplicateHint, i,
             "articles " + std::to_string(it->second) + " and " + std::to_string(i));
      if (auto [it, fresh] = values.emplace(a.hint_value(), i); !fresh)
        flag(ViolationKind::DuplicateHintValue, i,
             "articles " + std::to_string(it->second) + " and " + std::to_string(i));
    }
  }
  return report;
}

}  // namespace rao
