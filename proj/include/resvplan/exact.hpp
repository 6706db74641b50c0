#pragma once

#include <cstdint>

#include "resvplan/dispatch.hpp"
#include "resvplan/model.hpp"

namespace resvplan {

struct ExactSolution {
  ReservationPlan plan;
  DispatchSchedule schedule;
  CostBreakdown cost;
  bool optimal = false;           // search finished within the node budget
  std::uint64_t nodes_explored = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Minimum-cost reservation schedule by branch-and-bound over the per-stage,
// per-contract reservation amounts. Unlike the heuristic planner this search
// places reservations at any stage, overlapping ones included. Launch
// variables are never branched on: with reservations fixed, the cheapest-
// rate-first dispatch is optimal, so every node prices its stage exactly.
//
// Pruning bound: cost committed so far plus all remaining demand served at
// the cheapest usage rate in the market with no further upfronts — an
// admissible underestimate. Candidate amounts are capped so a contract's
// active capacity never exceeds the peak demand of the window it covers:
// excess units can always be deferred to a later stage (same upfront, no
// lost coverage), so the cap never changes the optimal cost. When the
// catalog has one contract whose window covers the whole horizon, candidate
// amounts are further restricted to residual demand values, lossless there
// because segment cost is piecewise linear between consecutive demand
// values.
//
// Ties break deterministically: lower cost, then fewer total reserved
// instances, then reservations placed at the earliest stages (greatest
// amounts vector in (stage, contract) order). If the node budget runs out
// the best solution found so far is returned with optimal=false; a feasible
// solution always exists since on-demand capacity is unlimited.
ExactSolution solve_exact(const DemandVector& demand, const MarketConfig& market,
                          std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace resvplan
