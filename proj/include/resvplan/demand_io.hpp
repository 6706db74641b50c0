#pragma once

#include <iosfwd>

#include "resvplan/model.hpp"

namespace resvplan {

// CSV form: a "stage,demand" header then one row per stage.
void write_demand_csv(std::ostream& out, const DemandVector& demand);
DemandVector read_demand_csv(std::istream& in);

// Compact binary cache: magic "RVPD", one version byte (1), u32 stage count,
// then one u32 per stage, all little-endian.
void write_demand_binary(std::ostream& out, const DemandVector& demand);
DemandVector read_demand_binary(std::istream& in);

}  // namespace resvplan
