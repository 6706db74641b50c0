#include "resvplan/catalog_io.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace resvplan {

namespace {

Money money_field(const nlohmann::json& obj, const char* key) {
  if (!obj.contains(key)) {
    throw std::invalid_argument(std::string("catalog: missing field '") + key + "'");
  }
  const nlohmann::json& v = obj.at(key);
  if (v.is_string()) return Money::parse(v.get<std::string>());
  if (v.is_number_integer()) return Money::from_millis(v.get<std::int64_t>()) * 1000;
  if (v.is_number_float()) return Money::from_double(v.get<double>());
  throw std::invalid_argument(std::string("catalog: field '") + key +
                              "' must be a decimal string or number");
}

}  // namespace

MarketConfig parse_catalog(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("catalog: invalid JSON: ") + e.what());
  }

  if (!doc.is_object() || !doc.contains("contracts") || !doc.at("contracts").is_array()) {
    throw std::invalid_argument("catalog: expected an object with a 'contracts' array");
  }

  std::vector<PricingContract> contracts;
  for (const nlohmann::json& entry : doc.at("contracts")) {
    PricingContract c;
    if (!entry.contains("id") || !entry.at("id").is_number_integer()) {
      throw std::invalid_argument("catalog: every contract needs an integer 'id'");
    }
    c.id = entry.at("id").get<int>();
    c.upfront = money_field(entry, "upfront");
    if (!entry.contains("duration_stages") || !entry.at("duration_stages").is_number_integer()) {
      throw std::invalid_argument("catalog: every contract needs integer 'duration_stages'");
    }
    c.duration_stages = entry.at("duration_stages").get<std::int64_t>();
    c.usage_rate = money_field(entry, "usage_rate");
    contracts.push_back(c);
  }

  const Money ondemand = money_field(doc, "ondemand_rate");
  std::int64_t stage_hours = 1;
  if (doc.contains("stage_hours")) {
    if (!doc.at("stage_hours").is_number_integer()) {
      throw std::invalid_argument("catalog: 'stage_hours' must be an integer");
    }
    stage_hours = doc.at("stage_hours").get<std::int64_t>();
  }
  return MarketConfig(std::move(contracts), ondemand, stage_hours);
}

MarketConfig load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_catalog(text);
}

}  // namespace resvplan
