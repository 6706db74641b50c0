#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resvplan/model.hpp"

namespace resvplan {

// Realizes the launch decisions for a fixed reservation plan: at each stage
// the demand is filled from active reserved capacity in ascending usage-rate
// order, the remainder goes on-demand. Launches sum to exactly the demand
// (no overshoot), which is optimal with reservations fixed since usage costs
// are linear and reserved rates are below on-demand.
DispatchSchedule dispatch(const ReservationPlan& plan, const DemandVector& demand,
                          const MarketConfig& market);

// Dispatches and prices a plan: per-stage cost
//   C_t = sum_k (x_t^{R_k}*R_k + x_t^{r_k}*r_k*h) + x_t^o*o*h
// plus the bucket totals.
CostBreakdown evaluate(const ReservationPlan& plan, const DemandVector& demand,
                       const MarketConfig& market);

CostBreakdown evaluate_schedule(const ReservationPlan& plan, const DispatchSchedule& schedule,
                                const DemandVector& demand, const MarketConfig& market);

enum class ConstraintId {
  non_negativity,       // counts are non-negative integers
  launch_capacity,      // launches never exceed active reservations
  demand_satisfaction,  // launches plus on-demand cover the demand
};

std::string to_string(ConstraintId id);

struct ConstraintViolation {
  ConstraintId constraint;
  std::int64_t stage = 0;
  int contract_id = 0;  // 0 when the constraint is not contract-specific
  std::string detail;
};

// Empty result iff (plan, schedule) satisfies all three feasibility
// constraints against the demand. Malformed inputs (unknown contract ids,
// horizon mismatch) throw instead of reporting violations.
std::vector<ConstraintViolation> check_feasible(const ReservationPlan& plan,
                                                const DispatchSchedule& schedule,
                                                const DemandVector& demand,
                                                const MarketConfig& market);

}  // namespace resvplan
