#include "resvplan/mathprog.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace resvplan {

namespace {

std::string var_xr_res(std::int64_t t, int k) {
  return "xR_" + std::to_string(t) + "_" + std::to_string(k);
}
std::string var_xr_use(std::int64_t t, int k) {
  return "xr_" + std::to_string(t) + "_" + std::to_string(k);
}
std::string var_xo(std::int64_t t) { return "xo_" + std::to_string(t); }

}  // namespace

std::string export_model(const DemandVector& demand, const MarketConfig& market) {
  const std::int64_t horizon = demand.horizon();
  const auto& contracts = market.contracts();
  const std::int64_t h = market.stage_hours();

  std::string out;
  out += "/* capacity reservation IPP: T=" + std::to_string(horizon) +
         " K=" + std::to_string(contracts.size()) + " h=" + std::to_string(h) + " */\n";

  for (std::int64_t t = 1; t <= horizon; ++t) {
    for (const PricingContract& c : contracts) {
      out += "var " + var_xr_res(t, c.id) + ", integer, >= 0;\n";
      out += "var " + var_xr_use(t, c.id) + ", integer, >= 0;\n";
    }
    out += "var " + var_xo(t) + ", integer, >= 0;\n";
  }

  out += "\nminimize total_cost:\n";
  bool first_term = true;
  auto add_term = [&](const Money& coeff, const std::string& var) {
    out += first_term ? "    " : "  + ";
    first_term = false;
    out += coeff.to_string() + "*" + var + "\n";
  };
  for (std::int64_t t = 1; t <= horizon; ++t) {
    for (const PricingContract& c : contracts) {
      add_term(c.upfront, var_xr_res(t, c.id));
      add_term(c.usage_rate * h, var_xr_use(t, c.id));
    }
    add_term(market.ondemand_rate() * h, var_xo(t));
  }
  out += ";\n\n";

  // Launches under contract k draw on reservations still inside their window.
  for (std::int64_t t = 1; t <= horizon; ++t) {
    for (const PricingContract& c : contracts) {
      out += "s.t. cap_" + std::to_string(t) + "_" + std::to_string(c.id) + ": " +
             var_xr_use(t, c.id) + " <=";
      const std::int64_t from = std::max<std::int64_t>(t - c.duration_stages + 1, 1);
      for (std::int64_t i = from; i <= t; ++i) {
        out += i == from ? " " : " + ";
        out += var_xr_res(i, c.id);
      }
      out += ";\n";
    }
  }

  for (std::int64_t t = 1; t <= horizon; ++t) {
    out += "s.t. dem_" + std::to_string(t) + ": " + var_xo(t);
    for (const PricingContract& c : contracts) {
      out += " + " + var_xr_use(t, c.id);
    }
    out += " >= " + std::to_string(demand.at_stage(t)) + ";\n";
  }

  out += "\nsolve;\nprintf \"objective %.3f\\n\", total_cost;\nend;\n";
  return out;
}

void write_model(std::ostream& out, const DemandVector& demand, const MarketConfig& market) {
  out << export_model(demand, market);
}

}  // namespace resvplan
