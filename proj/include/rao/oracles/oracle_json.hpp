#pragma once

#include "rao/core/instance_json.hpp"
#include "rao/oracles/kph.hpp"
#include "rao/oracles/offline_opt.hpp"

#include <json.hpp>

namespace rao {

/// {value, weight, rho, fractional_item, y}; y is indexed by article and
/// lists every article in scope.
inline nlohmann::json to_json(const KphSolution& sol, std::size_t n_articles) {
  nlohmann::json y = nlohmann::json::array();
  for (std::size_t i = 0; i < n_articles; ++i) y.push_back(rational_to_json(sol.y(i)));
  nlohmann::json j = {{"value", rational_to_json(sol.value)}, {"weight", rational_to_json(sol.weight)}, {"y", y}};
  j["rho"] = sol.rho ? nlohmann::json(*sol.rho) : nlohmann::json(nullptr);
  j["fractional_item"] = sol.fractional_item ? nlohmann::json(*sol.fractional_item) : nlohmann::json(nullptr);
  return j;
}

/// {value, read, gained}: the witness reading lengths and gains per article.
inline nlohmann::json to_json(const OfflineOptimum& opt) {
  nlohmann::json read = nlohmann::json::array();
  nlohmann::json gained = nlohmann::json::array();
  for (const auto& s : opt.witness.read) read.push_back(rational_to_json(s));
  for (const auto& g : opt.witness.gained) gained.push_back(rational_to_json(g));
  return {{"value", rational_to_json(opt.value)}, {"read", read}, {"gained", gained}};
}

}  // namespace rao
