#include "resvplan/dispatch.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace resvplan {

namespace {

// Contract indices ordered cheapest usage rate first (id breaks ties).
std::vector<std::size_t> fill_order(const MarketConfig& market) {
  std::vector<std::size_t> order(market.contracts().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const PricingContract& ca = market.contracts()[a];
    const PricingContract& cb = market.contracts()[b];
    if (ca.usage_rate != cb.usage_rate) return ca.usage_rate < cb.usage_rate;
    return ca.id < cb.id;
  });
  return order;
}

std::vector<int> catalog_ids(const MarketConfig& market) {
  std::vector<int> ids;
  ids.reserve(market.contracts().size());
  for (const PricingContract& c : market.contracts()) ids.push_back(c.id);
  return ids;
}

}  // namespace

DispatchSchedule dispatch(const ReservationPlan& plan, const DemandVector& demand,
                          const MarketConfig& market) {
  const std::int64_t horizon = demand.horizon();
  const auto capacity = active_capacity(plan, market, horizon);
  const auto order = fill_order(market);

  DispatchSchedule schedule(horizon, catalog_ids(market));
  for (std::int64_t t = 1; t <= horizon; ++t) {
    std::int64_t remaining = demand.at_stage(t);
    for (std::size_t k : order) {
      const std::int64_t launched =
          std::min(remaining, capacity[k][static_cast<std::size_t>(t - 1)]);
      if (launched > 0) {
        schedule.set_reserved_launch(t, market.contracts()[k].id, launched);
        remaining -= launched;
      }
    }
    schedule.set_ondemand_launch(t, remaining);
  }
  return schedule;
}

CostBreakdown evaluate_schedule(const ReservationPlan& plan, const DispatchSchedule& schedule,
                                const DemandVector& demand, const MarketConfig& market) {
  const std::int64_t horizon = demand.horizon();
  if (schedule.horizon() != horizon) {
    throw std::invalid_argument("schedule horizon does not match the demand vector");
  }
  const std::int64_t h = market.stage_hours();

  CostBreakdown cost;
  cost.per_stage.assign(static_cast<std::size_t>(horizon), Money{});

  for (const auto& [key, amount] : plan.entries()) {
    const auto& [stage, contract_id] = key;
    if (stage > horizon) {
      throw std::invalid_argument("plan reserves beyond the demand horizon");
    }
    const Money charge = market.contract_by_id(contract_id).upfront * amount;
    cost.per_stage[static_cast<std::size_t>(stage - 1)] += charge;
    cost.reservation_total += charge;
  }

  for (std::int64_t t = 1; t <= horizon; ++t) {
    Money stage_usage;
    for (const PricingContract& c : market.contracts()) {
      stage_usage += c.usage_rate * schedule.reserved_launch(t, c.id) * h;
    }
    cost.reserved_usage_total += stage_usage;
    const Money ondemand = market.ondemand_rate() * schedule.ondemand_launch(t) * h;
    cost.ondemand_total += ondemand;
    cost.per_stage[static_cast<std::size_t>(t - 1)] += stage_usage + ondemand;
  }

  cost.grand_total = cost.reservation_total + cost.reserved_usage_total + cost.ondemand_total;
  return cost;
}

CostBreakdown evaluate(const ReservationPlan& plan, const DemandVector& demand,
                       const MarketConfig& market) {
  return evaluate_schedule(plan, dispatch(plan, demand, market), demand, market);
}

std::string to_string(ConstraintId id) {
  switch (id) {
    case ConstraintId::non_negativity: return "non-negativity";
    case ConstraintId::launch_capacity: return "launch-capacity";
    case ConstraintId::demand_satisfaction: return "demand-satisfaction";
  }
  return "unknown";
}

std::vector<ConstraintViolation> check_feasible(const ReservationPlan& plan,
                                                const DispatchSchedule& schedule,
                                                const DemandVector& demand,
                                                const MarketConfig& market) {
  const std::int64_t horizon = demand.horizon();
  if (schedule.horizon() != horizon) {
    throw std::invalid_argument("schedule horizon does not match the demand vector");
  }
  for (int id : schedule.contract_ids()) {
    market.contract_by_id(id);  // throws on unknown id
  }
  const auto capacity = active_capacity(plan, market, horizon);

  std::vector<ConstraintViolation> violations;
  for (std::int64_t t = 1; t <= horizon; ++t) {
    std::int64_t launched_total = 0;
    for (std::size_t k = 0; k < market.contracts().size(); ++k) {
      const PricingContract& c = market.contracts()[k];
      const std::int64_t launched = schedule.reserved_launch(t, c.id);
      if (launched < 0) {
        violations.push_back({ConstraintId::non_negativity, t, c.id,
                              "negative reserved launch count"});
      }
      launched_total += launched;
      const std::int64_t cap = capacity[k][static_cast<std::size_t>(t - 1)];
      if (launched > cap) {
        violations.push_back({ConstraintId::launch_capacity, t, c.id,
                              "launches " + std::to_string(launched) + " exceed active capacity " +
                                  std::to_string(cap)});
      }
    }
    const std::int64_t ondemand = schedule.ondemand_launch(t);
    if (ondemand < 0) {
      violations.push_back({ConstraintId::non_negativity, t, 0, "negative on-demand launch count"});
    }
    if (launched_total + ondemand < demand.at_stage(t)) {
      violations.push_back({ConstraintId::demand_satisfaction, t, 0,
                            "covered " + std::to_string(launched_total + ondemand) + " of demand " +
                                std::to_string(demand.at_stage(t))});
    }
  }
  return violations;
}

}  // namespace resvplan
