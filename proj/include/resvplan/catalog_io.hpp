#pragma once

#include <filesystem>
#include <string_view>

#include "resvplan/model.hpp"

namespace resvplan {

// Catalog config, JSON:
//   {
//     "ondemand_rate": "0.24",
//     "stage_hours": 730,
//     "contracts": [
//       {"id": 1, "upfront": "20.25", "duration_stages": 3, "usage_rate": "0.108"},
//       ...
//     ]
//   }
// Currency fields should be decimal strings so they land in exact millis;
// plain JSON numbers are accepted and rounded to the nearest milli.
MarketConfig parse_catalog(std::string_view json_text);

MarketConfig load_catalog(const std::filesystem::path& path);

}  // namespace resvplan
