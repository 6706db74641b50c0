#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "resvplan/money.hpp"

namespace resvplan {

// One reservation contract: pay `upfront` once per instance, the instance
// is then usable for `duration_stages` consecutive stages at `usage_rate`
// per hour instead of the market's on-demand rate.
struct PricingContract {
  int id = 0;
  Money upfront;                    // one-time charge per reserved instance
  std::int64_t duration_stages = 1; // contract lifetime in stages
  Money usage_rate;                 // discounted hourly rate while launched

  // Checks the market-independent invariants: upfront > 0,
  // duration_stages >= 1, usage_rate >= 0. Throws std::invalid_argument.
  void validate() const;
};

// The contract catalog plus the on-demand rate and stage granularity.
//
// Construction enforces everything the planning algorithms assume:
//  - each contract's usage rate is strictly below the on-demand rate,
//  - upfront < duration * per-stage discount (otherwise on-demand dominates
//    the contract outright and it would never be worth offering),
//  - contracts ordered by strictly decreasing duration,
//  - strictly increasing upfront-per-stage along that order.
class MarketConfig {
 public:
  MarketConfig(std::vector<PricingContract> contracts, Money ondemand_rate,
               std::int64_t stage_hours);

  const std::vector<PricingContract>& contracts() const { return contracts_; }
  Money ondemand_rate() const { return ondemand_rate_; }
  std::int64_t stage_hours() const { return stage_hours_; }

  // Per-stage discount of a contract over on-demand: (o - r_k) * h.
  Money discount_per_stage(const PricingContract& contract) const;

  const PricingContract& contract_by_id(int id) const;  // throws if unknown
  const PricingContract* find(int id) const;            // nullptr if unknown

 private:
  std::vector<PricingContract> contracts_;
  Money ondemand_rate_;
  std::int64_t stage_hours_ = 1;
};

// Per-stage instance demand over the planning horizon. Stages are 1-based
// in every public interface; storage is the usual 0-based vector.
class DemandVector {
 public:
  explicit DemandVector(std::vector<std::int64_t> demands);

  std::int64_t horizon() const { return static_cast<std::int64_t>(demands_.size()); }
  std::int64_t at_stage(std::int64_t stage) const;  // 1-based, bounds-checked
  std::span<const std::int64_t> values() const { return demands_; }

  std::int64_t max_demand() const;
  std::int64_t total_demand() const;

  // Ascending copy; the canonical order is never the sorted one.
  std::vector<std::int64_t> sorted() const;

  DemandVector prefix(std::int64_t stages) const;  // first `stages` entries

 private:
  std::vector<std::int64_t> demands_;
};

// Reservation decisions: (stage, contract id) -> instances reserved at that
// stage under that contract. Zero-amount entries are not stored.
class ReservationPlan {
 public:
  ReservationPlan() = default;

  // Accumulates into any existing entry. amount must be >= 0.
  void add(std::int64_t stage, int contract_id, std::int64_t amount);

  std::int64_t at(std::int64_t stage, int contract_id) const;
  bool empty() const { return entries_.empty(); }
  std::int64_t total_reserved() const;

  // Ordered by stage, then contract id; deterministic iteration.
  const std::map<std::pair<std::int64_t, int>, std::int64_t>& entries() const {
    return entries_;
  }

 private:
  std::map<std::pair<std::int64_t, int>, std::int64_t> entries_;
};

// Launch decisions per stage: how many instances run from each contract's
// reserved pool and how many run on-demand.
class DispatchSchedule {
 public:
  DispatchSchedule(std::int64_t horizon, std::vector<int> contract_ids);

  std::int64_t horizon() const { return horizon_; }
  const std::vector<int>& contract_ids() const { return contract_ids_; }

  std::int64_t reserved_launch(std::int64_t stage, int contract_id) const;
  std::int64_t ondemand_launch(std::int64_t stage) const;

  void set_reserved_launch(std::int64_t stage, int contract_id, std::int64_t count);
  void set_ondemand_launch(std::int64_t stage, std::int64_t count);

 private:
  std::size_t contract_index(int contract_id) const;
  std::size_t stage_index(std::int64_t stage) const;

  std::int64_t horizon_;
  std::vector<int> contract_ids_;
  std::vector<std::vector<std::int64_t>> reserved_;  // [contract][stage-1]
  std::vector<std::int64_t> ondemand_;               // [stage-1]
};

// Cost of a (plan, schedule) pair split by origin. grand_total always equals
// both the sum of the three buckets and the sum of per_stage, exactly.
struct CostBreakdown {
  std::vector<Money> per_stage;
  Money reservation_total;
  Money reserved_usage_total;
  Money ondemand_total;
  Money grand_total;
};

// Active reserved capacity per contract per stage implied by a plan:
// capacity[k][t-1] = sum of reservations under contract k whose window
// covers stage t. Contracts indexed in catalog order.
std::vector<std::vector<std::int64_t>> active_capacity(const ReservationPlan& plan,
                                                       const MarketConfig& market,
                                                       std::int64_t horizon);

}  // namespace resvplan
