#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "resvplan/model.hpp"

namespace resvplan {

// A window of consecutive stages covered by one reservation decision; at
// most one contract duration long.
struct Segment {
  std::int64_t start_stage = 1;
  std::int64_t length_stages = 1;
};

struct SegmentDecision {
  int contract_id = 0;
  Segment segment;
  std::int64_t amount = 0;
};

// Plan plus the per-segment amounts that produced it, in decision order
// (one entry per segment per contract pass).
struct HorizonPlanResult {
  ReservationPlan plan;
  std::vector<SegmentDecision> decisions;
};

// Cost-minimizing single reservation for one segment:
//   j = t_d - floor(R_k / alpha_k)   (alpha_k = per-stage discount)
// reserve the j-th smallest demand if j >= 1, otherwise nothing. The index
// depends only on the contract economics, never on the demand values, so
// the amount is found in expected O(t_d) time without sorting.
std::int64_t optimal_segment_reservation(std::span<const std::int64_t> segment_demand,
                                         const PricingContract& contract,
                                         const MarketConfig& market);

// Partitions 1..T into consecutive non-overlapping segments of the contract
// duration (the last may be shorter) and reserves each segment's optimum at
// its start stage. Expected O(T) overall.
HorizonPlanResult plan_single_contract(const DemandVector& demand, const PricingContract& contract,
                                       const MarketConfig& market);

// Longest contract first: plan each contract over the residual demand left
// by the previous passes, clamping residuals at zero. Whatever remains after
// all passes is served on-demand by dispatch.
HorizonPlanResult plan_multi_contract(const DemandVector& demand, const MarketConfig& market);

}  // namespace resvplan
