#include "resvplan/planner.hpp"

#include <algorithm>
#include <stdexcept>

#include "resvplan/selection.hpp"

namespace resvplan {

namespace {

// The planner's math needs alpha_k > 0 and R_k < t_k*alpha_k; both hold for
// any contract a MarketConfig accepted, but single-contract planning also
// admits contracts supplied directly.
void require_admissible(const PricingContract& contract, const MarketConfig& market) {
  contract.validate();
  if (contract.usage_rate >= market.ondemand_rate()) {
    throw std::invalid_argument("contract usage rate must be below the on-demand rate");
  }
  const Money alpha = market.discount_per_stage(contract);
  if (contract.upfront >= alpha * contract.duration_stages) {
    throw std::invalid_argument("contract upfront must be below duration * per-stage discount");
  }
}

std::int64_t segment_amount(std::span<std::int64_t> scratch, const PricingContract& contract,
                            const MarketConfig& market) {
  const std::int64_t t_d = static_cast<std::int64_t>(scratch.size());
  const std::int64_t j = t_d - floor_ratio(contract.upfront, market.discount_per_stage(contract));
  if (j < 1) return 0;
  return kth_smallest_inplace(scratch, j);
}

}  // namespace

std::int64_t optimal_segment_reservation(std::span<const std::int64_t> segment_demand,
                                         const PricingContract& contract,
                                         const MarketConfig& market) {
  require_admissible(contract, market);
  if (segment_demand.empty() ||
      static_cast<std::int64_t>(segment_demand.size()) > contract.duration_stages) {
    throw std::invalid_argument("segment length must be within 1..contract duration");
  }
  std::vector<std::int64_t> scratch(segment_demand.begin(), segment_demand.end());
  return segment_amount(scratch, contract, market);
}

HorizonPlanResult plan_single_contract(const DemandVector& demand, const PricingContract& contract,
                                       const MarketConfig& market) {
  require_admissible(contract, market);

  HorizonPlanResult result;
  const std::int64_t horizon = demand.horizon();
  const std::span<const std::int64_t> values = demand.values();
  std::vector<std::int64_t> scratch;
  scratch.reserve(static_cast<std::size_t>(
      std::min<std::int64_t>(contract.duration_stages, horizon)));

  std::int64_t start = 1;
  while (start <= horizon) {
    const std::int64_t t_d = std::min(contract.duration_stages, horizon - start + 1);
    scratch.assign(values.begin() + (start - 1), values.begin() + (start - 1 + t_d));
    const std::int64_t amount = segment_amount(scratch, contract, market);
    result.plan.add(start, contract.id, amount);
    result.decisions.push_back({contract.id, Segment{start, t_d}, amount});
    start += t_d;
  }
  return result;
}

HorizonPlanResult plan_multi_contract(const DemandVector& demand, const MarketConfig& market) {
  HorizonPlanResult result;
  std::vector<std::int64_t> residual(demand.values().begin(), demand.values().end());

  for (const PricingContract& contract : market.contracts()) {
    const HorizonPlanResult pass = plan_single_contract(DemandVector(residual), contract, market);
    for (const SegmentDecision& decision : pass.decisions) {
      result.plan.add(decision.segment.start_stage, decision.contract_id, decision.amount);
      result.decisions.push_back(decision);
      if (decision.amount == 0) continue;
      const std::int64_t end = decision.segment.start_stage + decision.segment.length_stages - 1;
      for (std::int64_t t = decision.segment.start_stage; t <= end; ++t) {
        std::int64_t& d = residual[static_cast<std::size_t>(t - 1)];
        d = std::max<std::int64_t>(d - decision.amount, 0);
      }
    }
  }
  return result;
}

}  // namespace resvplan
