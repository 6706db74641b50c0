#include "resvplan/costs.hpp"

#include <algorithm>
#include <stdexcept>

namespace resvplan {

Money stage_usage_cost(std::int64_t reserved_capacity, std::int64_t demand, Money reserved_rate,
                       Money ondemand_rate, std::int64_t stage_hours) {
  if (reserved_capacity < 0 || demand < 0) {
    throw std::invalid_argument("capacity and demand must be non-negative");
  }
  if (reserved_rate.is_negative() || reserved_rate >= ondemand_rate) {
    throw std::invalid_argument("need 0 <= reserved rate < on-demand rate");
  }
  if (stage_hours < 1) throw std::invalid_argument("stage_hours must be >= 1");

  const std::int64_t reserved_used = std::min(reserved_capacity, demand);
  const std::int64_t ondemand_used = std::max<std::int64_t>(demand - reserved_capacity, 0);
  return (reserved_rate * reserved_used + ondemand_rate * ondemand_used) * stage_hours;
}

Money segment_cost(std::span<const std::int64_t> segment_demand, std::int64_t amount,
                   const PricingContract& contract, const MarketConfig& market) {
  if (amount < 0) throw std::invalid_argument("reservation amount must be >= 0");
  if (static_cast<std::int64_t>(segment_demand.size()) > contract.duration_stages) {
    throw std::invalid_argument("segment longer than the contract duration");
  }
  Money total = contract.upfront * amount;
  for (std::int64_t d : segment_demand) {
    total += stage_usage_cost(amount, d, contract.usage_rate, market.ondemand_rate(),
                              market.stage_hours());
  }
  return total;
}

Money delta_cost(std::span<const std::int64_t> sorted_demand, std::int64_t j,
                 const PricingContract& contract, const MarketConfig& market) {
  const std::int64_t t_d = static_cast<std::int64_t>(sorted_demand.size());
  if (j < 1 || j >= t_d) throw std::invalid_argument("delta_cost index must satisfy 1 <= j < t_d");
  if (!std::is_sorted(sorted_demand.begin(), sorted_demand.end())) {
    throw std::invalid_argument("delta_cost expects an ascending demand sequence");
  }
  const Money alpha = market.discount_per_stage(contract);
  const std::int64_t step =
      sorted_demand[static_cast<std::size_t>(j)] - sorted_demand[static_cast<std::size_t>(j - 1)];
  return (contract.upfront - alpha * t_d + alpha * j) * step;
}

}  // namespace resvplan
