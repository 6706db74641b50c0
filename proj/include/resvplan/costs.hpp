#pragma once

#include <cstdint>
#include <span>

#include "resvplan/model.hpp"
#include "resvplan/money.hpp"

namespace resvplan {

// Usage cost of one stage with x instances of reserved capacity available
// and demand d: h * (r*min(x,d) + o*max(d-x, 0)).
Money stage_usage_cost(std::int64_t reserved_capacity, std::int64_t demand, Money reserved_rate,
                       Money ondemand_rate, std::int64_t stage_hours);

// Total cost of covering one segment of demand with a single reservation of
// `amount` instances under `contract`, made at the segment start:
// amount*R_k + per-stage usage costs. The segment must fit inside one
// contract window.
Money segment_cost(std::span<const std::int64_t> segment_demand, std::int64_t amount,
                   const PricingContract& contract, const MarketConfig& market);

// Change in segment cost when the reservation is raised from the j-th to
// the (j+1)-th order statistic of the segment's demand:
//   (D^s_{j+1} - D^s_j) * (R_k - t_d*alpha_k + j*alpha_k)
// with alpha_k the per-stage discount and t_d the segment length. j is
// 1-based and must satisfy 1 <= j < t_d; the input must be ascending.
Money delta_cost(std::span<const std::int64_t> sorted_demand, std::int64_t j,
                 const PricingContract& contract, const MarketConfig& market);

}  // namespace resvplan
