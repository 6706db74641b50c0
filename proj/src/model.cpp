#include "resvplan/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace resvplan {

void PricingContract::validate() const {
  if (upfront.millis() <= 0) {
    throw std::invalid_argument("contract " + std::to_string(id) + ": upfront must be > 0");
  }
  if (duration_stages < 1) {
    throw std::invalid_argument("contract " + std::to_string(id) + ": duration must be >= 1 stage");
  }
  if (usage_rate.is_negative()) {
    throw std::invalid_argument("contract " + std::to_string(id) + ": usage rate must be >= 0");
  }
}

MarketConfig::MarketConfig(std::vector<PricingContract> contracts, Money ondemand_rate,
                           std::int64_t stage_hours)
    : contracts_(std::move(contracts)), ondemand_rate_(ondemand_rate), stage_hours_(stage_hours) {
  if (stage_hours_ < 1) throw std::invalid_argument("stage_hours must be >= 1");
  if (ondemand_rate_.millis() <= 0) throw std::invalid_argument("on-demand rate must be > 0");

  std::set<int> seen_ids;
  for (const PricingContract& c : contracts_) {
    c.validate();
    if (!seen_ids.insert(c.id).second) {
      throw std::invalid_argument("duplicate contract id " + std::to_string(c.id));
    }
    if (c.usage_rate >= ondemand_rate_) {
      throw std::invalid_argument("contract " + std::to_string(c.id) +
                                  ": usage rate must be below the on-demand rate");
    }
    // A contract whose total upfront reaches duration * discount can never
    // beat pure on-demand, whatever the demand looks like.
    const Money window_discount = discount_per_stage(c) * c.duration_stages;
    if (c.upfront >= window_discount) {
      throw std::invalid_argument("contract " + std::to_string(c.id) +
                                  ": upfront " + c.upfront.to_string() +
                                  " not below duration*discount " + window_discount.to_string());
    }
  }
  for (std::size_t i = 1; i < contracts_.size(); ++i) {
    const PricingContract& longer = contracts_[i - 1];
    const PricingContract& shorter = contracts_[i];
    if (longer.duration_stages <= shorter.duration_stages) {
      throw std::invalid_argument("contracts must be ordered by strictly decreasing duration");
    }
    // R_i/t_i strictly increasing; compared exactly via cross-multiplication.
    const __int128 lhs = static_cast<__int128>(longer.upfront.millis()) * shorter.duration_stages;
    const __int128 rhs = static_cast<__int128>(shorter.upfront.millis()) * longer.duration_stages;
    if (lhs >= rhs) {
      throw std::invalid_argument(
          "contracts must have strictly increasing upfront-per-stage as duration shrinks");
    }
  }
}

Money MarketConfig::discount_per_stage(const PricingContract& contract) const {
  return (ondemand_rate_ - contract.usage_rate) * stage_hours_;
}

const PricingContract& MarketConfig::contract_by_id(int id) const {
  if (const PricingContract* c = find(id)) return *c;
  throw std::invalid_argument("unknown contract id " + std::to_string(id));
}

const PricingContract* MarketConfig::find(int id) const {
  for (const PricingContract& c : contracts_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

DemandVector::DemandVector(std::vector<std::int64_t> demands) : demands_(std::move(demands)) {
  if (demands_.empty()) throw std::invalid_argument("demand vector must have at least one stage");
  for (std::int64_t d : demands_) {
    if (d < 0) throw std::invalid_argument("demand entries must be non-negative");
  }
}

std::int64_t DemandVector::at_stage(std::int64_t stage) const {
  if (stage < 1 || stage > horizon()) {
    throw std::invalid_argument("stage " + std::to_string(stage) + " outside 1.." +
                                std::to_string(horizon()));
  }
  return demands_[static_cast<std::size_t>(stage - 1)];
}

std::int64_t DemandVector::max_demand() const {
  return *std::max_element(demands_.begin(), demands_.end());
}

std::int64_t DemandVector::total_demand() const {
  return std::accumulate(demands_.begin(), demands_.end(), std::int64_t{0});
}

std::vector<std::int64_t> DemandVector::sorted() const {
  std::vector<std::int64_t> copy = demands_;
  std::sort(copy.begin(), copy.end());
  return copy;
}

DemandVector DemandVector::prefix(std::int64_t stages) const {
  if (stages < 1 || stages > horizon()) {
    throw std::invalid_argument("prefix length outside 1..horizon");
  }
  return DemandVector(std::vector<std::int64_t>(demands_.begin(), demands_.begin() + stages));
}

void ReservationPlan::add(std::int64_t stage, int contract_id, std::int64_t amount) {
  if (stage < 1) throw std::invalid_argument("reservation stage must be >= 1");
  if (amount < 0) throw std::invalid_argument("reservation amount must be >= 0");
  if (amount == 0) return;
  entries_[{stage, contract_id}] += amount;
}

std::int64_t ReservationPlan::at(std::int64_t stage, int contract_id) const {
  auto it = entries_.find({stage, contract_id});
  return it == entries_.end() ? 0 : it->second;
}

std::int64_t ReservationPlan::total_reserved() const {
  std::int64_t total = 0;
  for (const auto& [key, amount] : entries_) total += amount;
  return total;
}

DispatchSchedule::DispatchSchedule(std::int64_t horizon, std::vector<int> contract_ids)
    : horizon_(horizon), contract_ids_(std::move(contract_ids)) {
  if (horizon_ < 1) throw std::invalid_argument("schedule horizon must be >= 1");
  reserved_.assign(contract_ids_.size(), std::vector<std::int64_t>(horizon_, 0));
  ondemand_.assign(horizon_, 0);
}

std::size_t DispatchSchedule::contract_index(int contract_id) const {
  for (std::size_t i = 0; i < contract_ids_.size(); ++i) {
    if (contract_ids_[i] == contract_id) return i;
  }
  throw std::invalid_argument("schedule has no contract id " + std::to_string(contract_id));
}

std::size_t DispatchSchedule::stage_index(std::int64_t stage) const {
  if (stage < 1 || stage > horizon_) {
    throw std::invalid_argument("stage " + std::to_string(stage) + " outside schedule horizon");
  }
  return static_cast<std::size_t>(stage - 1);
}

std::int64_t DispatchSchedule::reserved_launch(std::int64_t stage, int contract_id) const {
  return reserved_[contract_index(contract_id)][stage_index(stage)];
}

std::int64_t DispatchSchedule::ondemand_launch(std::int64_t stage) const {
  return ondemand_[stage_index(stage)];
}

void DispatchSchedule::set_reserved_launch(std::int64_t stage, int contract_id, std::int64_t count) {
  reserved_[contract_index(contract_id)][stage_index(stage)] = count;
}

void DispatchSchedule::set_ondemand_launch(std::int64_t stage, std::int64_t count) {
  ondemand_[stage_index(stage)] = count;
}

std::vector<std::vector<std::int64_t>> active_capacity(const ReservationPlan& plan,
                                                       const MarketConfig& market,
                                                       std::int64_t horizon) {
  const auto& contracts = market.contracts();
  std::vector<std::vector<std::int64_t>> reserved_at(contracts.size(),
                                                     std::vector<std::int64_t>(horizon + 1, 0));
  for (const auto& [key, amount] : plan.entries()) {
    const auto& [stage, contract_id] = key;
    if (stage > horizon) {
      throw std::invalid_argument("plan reserves at stage " + std::to_string(stage) +
                                  " beyond horizon " + std::to_string(horizon));
    }
    bool known = false;
    for (std::size_t k = 0; k < contracts.size(); ++k) {
      if (contracts[k].id == contract_id) {
        reserved_at[k][static_cast<std::size_t>(stage)] += amount;
        known = true;
        break;
      }
    }
    if (!known) {
      throw std::invalid_argument("plan references contract id " + std::to_string(contract_id) +
                                  " absent from the catalog");
    }
  }

  // Rolling window: add the reservation entering at t, drop the one whose
  // contract window ended at t-1.
  std::vector<std::vector<std::int64_t>> capacity(contracts.size(),
                                                  std::vector<std::int64_t>(horizon, 0));
  for (std::size_t k = 0; k < contracts.size(); ++k) {
    const std::int64_t t_k = contracts[k].duration_stages;
    std::int64_t window = 0;
    for (std::int64_t t = 1; t <= horizon; ++t) {
      window += reserved_at[k][static_cast<std::size_t>(t)];
      if (t - t_k >= 1) window -= reserved_at[k][static_cast<std::size_t>(t - t_k)];
      capacity[k][static_cast<std::size_t>(t - 1)] = window;
    }
  }
  return capacity;
}

}  // namespace resvplan
