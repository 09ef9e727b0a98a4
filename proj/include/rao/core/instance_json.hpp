#pragma once

#include "rao/core/instance.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

namespace rao {

/// Integral quantities are written as JSON integers; fractional ones (cut
/// instances) as "p/q" strings.
inline nlohmann::json rational_to_json(const Rational& x) {
  if (is_integral(x) && boost::multiprecision::abs(numerator(x)) < BigInt(1) << 62)
    return to_int64(numerator(x));
  return to_string(x);
}

inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline nlohmann::json to_json(const Instance& inst) {
  nlohmann::json articles = nlohmann::json::array();
  for (const auto& a : inst.articles) {
    nlohmann::json segs = nlohmann::json::array();
    for (const auto& s : a.profile().segments()) segs.push_back({rational_to_json(s.length), s.rate});
    articles.push_back({{"hint", a.hint()}, {"length", rational_to_json(a.length())}, {"segments", segs}});
  }
  nlohmann::json j = {{"budget", rational_to_json(inst.budget)}, {"articles", articles}};
  if (inst.tie_priority) j["tie_priority"] = *inst.tie_priority;
  j["adversarial"] = inst.adversarial;
  if (!inst.id.empty()) j["id"] = inst.id;
  j["seed"] = inst.seed;
  return j;
}

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& allowed, const char* what) {
  for (const auto& [key, _] : j.items())
    if (!allowed.count(key)) throw std::invalid_argument(std::string("unknown key '") + key + "' in " + what);
}

}  // namespace detail

inline Instance instance_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
  detail::reject_unknown_keys(j, {"budget", "articles", "tie_priority", "adversarial", "id", "seed"}, "instance");
  Instance inst;
  inst.budget = rational_from_json(j.at("budget"));
  for (const auto& ja : j.at("articles")) {
    detail::reject_unknown_keys(ja, {"hint", "length", "segments"}, "article");
    std::vector<Segment> segs;
    for (const auto& js : ja.at("segments")) {
      if (!js.is_array() || js.size() != 2) throw std::invalid_argument("segment must be [length, rate]");
      segs.push_back({rational_from_json(js[0]), js[1].get<std::int64_t>()});
    }
    Article a(ja.at("hint").get<std::int64_t>(), InformationProfile(std::move(segs)));
    if (a.length() != rational_from_json(ja.at("length")))
      throw std::invalid_argument("article length does not match its segments");
    inst.articles.push_back(std::move(a));
  }
  if (j.contains("tie_priority")) inst.tie_priority = j.at("tie_priority").get<std::vector<std::uint32_t>>();
  inst.adversarial = j.value("adversarial", false);
  inst.id = j.value("id", std::string{});
  inst.seed = j.value("seed", std::uint64_t{0});
  return inst;
}

inline Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file " + path);
  return instance_from_json(nlohmann::json::parse(in));
}

inline void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write instance file " + path);
  out << to_json(inst).dump(2) << '\n';
}

}  // namespace rao
