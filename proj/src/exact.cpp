#include "resvplan/exact.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace resvplan {

namespace {

class ReservationSearch {
 public:
  ReservationSearch(const DemandVector& demand, const MarketConfig& market,
                    std::uint64_t node_budget)
      : demand_(demand),
        market_(market),
        budget_(node_budget),
        horizon_(demand.horizon()),
        contract_count_(static_cast<std::int64_t>(market.contracts().size())) {
    if (budget_ == 0) throw std::invalid_argument("node budget must be positive");

    const auto& contracts = market_.contracts();
    fill_order_.resize(contracts.size());
    std::iota(fill_order_.begin(), fill_order_.end(), std::size_t{0});
    std::sort(fill_order_.begin(), fill_order_.end(), [&](std::size_t a, std::size_t b) {
      if (contracts[a].usage_rate != contracts[b].usage_rate) {
        return contracts[a].usage_rate < contracts[b].usage_rate;
      }
      return contracts[a].id < contracts[b].id;
    });

    cheapest_rate_ = market_.ondemand_rate();
    for (const PricingContract& c : contracts) {
      cheapest_rate_ = std::min(cheapest_rate_, c.usage_rate);
    }

    // suffix_bound_[t] underestimates the cost of serving stages t..T.
    suffix_bound_.assign(static_cast<std::size_t>(horizon_) + 2, Money{});
    for (std::int64_t t = horizon_; t >= 1; --t) {
      suffix_bound_[static_cast<std::size_t>(t)] =
          suffix_bound_[static_cast<std::size_t>(t + 1)] +
          cheapest_rate_ * demand_.at_stage(t) * market_.stage_hours();
    }

    // Peak demand over each contract's coverage window starting at t;
    // reserving past it can never be dispatched. Sliding-window maximum via
    // a monotonic index deque, O(T) per contract.
    window_peak_.assign(contracts.size(), std::vector<std::int64_t>(horizon_ + 1, 0));
    for (std::size_t k = 0; k < contracts.size(); ++k) {
      const std::int64_t width = contracts[k].duration_stages;
      std::deque<std::int64_t> maxima;  // stages, demand non-increasing
      for (std::int64_t t = horizon_; t >= 1; --t) {
        while (!maxima.empty() && demand_.at_stage(maxima.back()) <= demand_.at_stage(t)) {
          maxima.pop_back();
        }
        maxima.push_back(t);
        if (maxima.front() > std::min(horizon_, t + width - 1)) maxima.pop_front();
        window_peak_[k][static_cast<std::size_t>(t)] = demand_.at_stage(maxima.front());
      }
    }

    single_window_ = contract_count_ == 1 &&
                     horizon_ <= market_.contracts().front().duration_stages;

    amounts_.assign(static_cast<std::size_t>(horizon_ * std::max<std::int64_t>(contract_count_, 1)), 0);
    prefix_.assign(contracts.size(), std::vector<std::int64_t>(horizon_ + 1, 0));
    partial_cost_.assign(static_cast<std::size_t>(horizon_) + 1, Money{});
  }

  ExactSolution run() {
    // Incumbent: the always-feasible pure on-demand solution.
    best_amounts_.assign(amounts_.size(), 0);
    best_cost_ = Money{};
    for (std::int64_t t = 1; t <= horizon_; ++t) {
      best_cost_ += market_.ondemand_rate() * demand_.at_stage(t) * market_.stage_hours();
    }
    best_reserved_ = 0;

    if (contract_count_ > 0) descend(1);

    ReservationPlan plan;
    for (std::int64_t t = 1; t <= horizon_; ++t) {
      for (std::int64_t k = 0; k < contract_count_; ++k) {
        const std::int64_t amount = best_amounts_[flat_index(t, k)];
        if (amount > 0) plan.add(t, market_.contracts()[static_cast<std::size_t>(k)].id, amount);
      }
    }

    ExactSolution solution{plan, dispatch(plan, demand_, market_),
                           CostBreakdown{}, !exhausted_, nodes_};
    solution.cost = evaluate_schedule(plan, solution.schedule, demand_, market_);
    if (solution.cost.grand_total != best_cost_) {
      throw std::logic_error("search cost bookkeeping disagrees with evaluate()");
    }
    return solution;
  }

 private:
  std::size_t flat_index(std::int64_t stage, std::int64_t k) const {
    return static_cast<std::size_t>((stage - 1) * contract_count_ + k);
  }

  // Ascending candidate amounts for x_t^{R_k}.
  std::vector<std::int64_t> candidates(std::int64_t stage, std::int64_t k) const {
    const PricingContract& contract = market_.contracts()[static_cast<std::size_t>(k)];
    if (single_window_) {
      // Every earlier reservation is still active, so only the residual
      // demand values above the covered level matter.
      const std::int64_t covered = prefix_[0][static_cast<std::size_t>(stage - 1)];
      std::vector<std::int64_t> values{0};
      for (std::int64_t t = stage; t <= horizon_; ++t) {
        const std::int64_t residual = demand_.at_stage(t) - covered;
        if (residual > 0) values.push_back(residual);
      }
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      return values;
    }
    const std::int64_t from = std::max<std::int64_t>(stage - contract.duration_stages, 0);
    const std::int64_t active_before = prefix_[static_cast<std::size_t>(k)][static_cast<std::size_t>(stage - 1)] -
                                       prefix_[static_cast<std::size_t>(k)][static_cast<std::size_t>(from)];
    const std::int64_t cap =
        std::max<std::int64_t>(window_peak_[static_cast<std::size_t>(k)][static_cast<std::size_t>(stage)] - active_before, 0);
    std::vector<std::int64_t> values(static_cast<std::size_t>(cap) + 1);
    std::iota(values.begin(), values.end(), std::int64_t{0});
    return values;
  }

  Money stage_cost(std::int64_t stage, Money upfronts) const {
    std::int64_t remaining = demand_.at_stage(stage);
    Money usage;
    for (std::size_t k : fill_order_) {
      const PricingContract& contract = market_.contracts()[k];
      const std::int64_t from = std::max<std::int64_t>(stage - contract.duration_stages, 0);
      const std::int64_t active =
          prefix_[k][static_cast<std::size_t>(stage)] - prefix_[k][static_cast<std::size_t>(from)];
      const std::int64_t launched = std::min(remaining, active);
      if (launched > 0) {
        usage += contract.usage_rate * launched * market_.stage_hours();
        remaining -= launched;
      }
    }
    usage += market_.ondemand_rate() * remaining * market_.stage_hours();
    return upfronts + usage;
  }

  void record_leaf() {
    const Money cost = partial_cost_[static_cast<std::size_t>(horizon_)];
    std::int64_t reserved = 0;
    for (std::int64_t v : amounts_) reserved += v;

    if (cost > best_cost_) return;
    if (cost == best_cost_) {
      if (reserved > best_reserved_) return;
      // Same cost and same amount reserved: keep reservations front-loaded
      // (greatest amounts vector in stage-major order).
      if (reserved == best_reserved_ &&
          !std::lexicographical_compare(best_amounts_.begin(), best_amounts_.end(),
                                        amounts_.begin(), amounts_.end())) {
        return;
      }
    }
    best_cost_ = cost;
    best_reserved_ = reserved;
    best_amounts_ = amounts_;
  }

  void descend(std::int64_t stage) {
    if (exhausted_) return;
    if (stage > horizon_) {
      record_leaf();
      return;
    }
    assign_contract(stage, 0, Money{});
  }

  void assign_contract(std::int64_t stage, std::int64_t k, Money stage_upfronts) {
    if (exhausted_) return;
    const Money committed = partial_cost_[static_cast<std::size_t>(stage - 1)];

    if (k == contract_count_) {
      const Money cum = committed + stage_cost(stage, stage_upfronts);
      if (cum + suffix_bound_[static_cast<std::size_t>(stage + 1)] > best_cost_) return;
      partial_cost_[static_cast<std::size_t>(stage)] = cum;
      descend(stage + 1);
      return;
    }

    const PricingContract& contract = market_.contracts()[static_cast<std::size_t>(k)];
    auto& prefix = prefix_[static_cast<std::size_t>(k)];
    for (std::int64_t amount : candidates(stage, k)) {
      if (nodes_ >= budget_) {
        exhausted_ = true;
        return;
      }
      ++nodes_;

      const Money upfronts = stage_upfronts + contract.upfront * amount;
      // suffix_bound_[stage] already covers this stage's demand at the
      // cheapest rate; candidates are ascending, so once upfronts alone
      // break the bound no larger amount can help.
      if (committed + upfronts + suffix_bound_[static_cast<std::size_t>(stage)] > best_cost_) break;

      amounts_[flat_index(stage, k)] = amount;
      prefix[static_cast<std::size_t>(stage)] = prefix[static_cast<std::size_t>(stage - 1)] + amount;
      assign_contract(stage, k + 1, upfronts);
      amounts_[flat_index(stage, k)] = 0;
      if (exhausted_) return;
    }
    prefix[static_cast<std::size_t>(stage)] = prefix[static_cast<std::size_t>(stage - 1)];
  }

  const DemandVector& demand_;
  const MarketConfig& market_;
  const std::uint64_t budget_;
  const std::int64_t horizon_;
  const std::int64_t contract_count_;

  std::vector<std::size_t> fill_order_;
  Money cheapest_rate_;
  std::vector<Money> suffix_bound_;
  std::vector<std::vector<std::int64_t>> window_peak_;
  bool single_window_ = false;

  std::vector<std::int64_t> amounts_;
  std::vector<std::vector<std::int64_t>> prefix_;
  std::vector<Money> partial_cost_;

  std::vector<std::int64_t> best_amounts_;
  Money best_cost_;
  std::int64_t best_reserved_ = 0;

  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ExactSolution solve_exact(const DemandVector& demand, const MarketConfig& market,
                          std::uint64_t node_budget) {
  return ReservationSearch(demand, market, node_budget).run();
}

}  // namespace resvplan
