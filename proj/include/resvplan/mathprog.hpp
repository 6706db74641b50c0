#pragma once

#include <iosfwd>
#include <string>

#include "resvplan/model.hpp"

namespace resvplan {

// Renders the reservation problem as a GNU MathProg integer program:
// variables xR_t_k (reservations), xr_t_k (reserved launches), xo_t
// (on-demand launches); objective sum of per-stage costs; capacity and
// demand-coverage constraints. Variable naming and formatting are fixed so
// exports of the same instance are byte-identical. Demand coverage is kept
// as ">=": over-provisioning only adds cost, so the optimum is unchanged.
std::string export_model(const DemandVector& demand, const MarketConfig& market);

void write_model(std::ostream& out, const DemandVector& demand, const MarketConfig& market);

}  // namespace resvplan
