#include "wvg/gamedoc.hpp"

#include <json.hpp>

namespace wvg {

namespace {

using nlohmann::ordered_json;

Rat parse_number_field(const ordered_json& v, const char* what) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
  throw std::invalid_argument(std::string(what) +
                              " must be a fraction/decimal string or an integer");
}

}  // namespace

WeightedGame GameDocument::to_game() const {
  if (weights.has_value() == classes.has_value())
    throw std::invalid_argument("game document needs exactly one of weights/classes");
  if (weights) return WeightedGame::from_weights(quota, *weights);
  return WeightedGame::make(quota, *classes);
}

GameDocument GameDocument::from_game(const WeightedGame& g) {
  GameDocument doc;
  doc.quota = g.quota_scaled();
  std::vector<RatClass> cls;
  cls.reserve(g.classes().size());
  for (const auto& c : g.classes()) cls.push_back({Rat(c.weight), c.count});
  doc.classes = std::move(cls);
  return doc;
}

GameDocument GameDocument::parse(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("game document must be an object");
  if (!j.contains("quota")) throw std::invalid_argument("game document needs a quota");

  GameDocument doc;
  doc.quota = parse_number_field(j.at("quota"), "quota");
  const bool has_weights = j.contains("weights");
  const bool has_classes = j.contains("classes");
  if (has_weights == has_classes)
    throw std::invalid_argument("game document needs exactly one of weights/classes");
  if (has_weights) {
    const auto& arr = j.at("weights");
    if (!arr.is_array() || arr.empty())
      throw std::invalid_argument("weights must be a non-empty array");
    std::vector<Rat> w;
    w.reserve(arr.size());
    for (const auto& v : arr) w.push_back(parse_number_field(v, "weight"));
    doc.weights = std::move(w);
  } else {
    const auto& arr = j.at("classes");
    if (!arr.is_array() || arr.empty())
      throw std::invalid_argument("classes must be a non-empty array");
    std::vector<RatClass> cls;
    cls.reserve(arr.size());
    for (const auto& v : arr) {
      if (!v.is_array() || v.size() != 2)
        throw std::invalid_argument("each class must be a [weight, count] pair");
      RatClass c;
      c.weight = parse_number_field(v.at(0), "class weight");
      if (!v.at(1).is_number_integer())
        throw std::invalid_argument("class count must be an integer");
      c.count = static_cast<long>(v.at(1).get<long long>());
      cls.push_back(std::move(c));
    }
    doc.classes = std::move(cls);
  }
  return doc;
}

std::string GameDocument::serialize() const {
  ordered_json j;
  j["quota"] = fraction_string(quota);
  if (weights) {
    ordered_json arr = ordered_json::array();
    for (const Rat& w : *weights) arr.push_back(fraction_string(w));
    j["weights"] = std::move(arr);
  } else if (classes) {
    ordered_json arr = ordered_json::array();
    for (const RatClass& c : *classes)
      arr.push_back(ordered_json::array({fraction_string(c.weight), c.count}));
    j["classes"] = std::move(arr);
  }
  return j.dump(2);
}

}  // namespace wvg
