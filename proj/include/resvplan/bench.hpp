#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resvplan/exact.hpp"
#include "resvplan/model.hpp"

namespace resvplan {

// Shrinks a contract by an integer factor: duration and upfront divide,
// the hourly usage rate (and therefore the hourly discount) is unchanged.
// The factor must divide the duration into whole stages.
PricingContract scale_contract(const PricingContract& contract, std::int64_t factor);

// One planning strategy to benchmark. Text forms: "none", "multi",
// "single:<contract-id>", "exact".
struct StrategySpec {
  enum class Kind { none, single_contract, multi_contract, exact };

  Kind kind = Kind::multi_contract;
  int contract_id = 0;  // single_contract only

  static StrategySpec parse(std::string_view text);
  std::string name() const;
};

struct BenchRow {
  std::string strategy;
  std::int64_t horizon_stages = 0;
  Money grand_total;
  double cost_increase_pct = 0.0;
  double overhead_us = 0.0;
  bool budget_exceeded = false;  // exact strategy ran out of node budget
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by strategy name, then horizon
  std::string baseline;        // strategy the percentages compare against
};

struct BenchOptions {
  std::vector<std::int64_t> horizons;      // empty -> full horizon only
  int repetitions = 5;                     // timing runs per cell (median)
  std::uint64_t exact_node_budget = kDefaultNodeBudget;
  std::optional<std::string> baseline;     // default: exact if present, else cheapest
};

// Plans and prices every (strategy, horizon-prefix) cell. Timing covers the
// planning call only; cost columns are deterministic for fixed inputs.
// Every plan is feasibility-checked before it is reported.
BenchReport run_bench(const DemandVector& demand, const MarketConfig& market,
                      const std::vector<StrategySpec>& strategies, const BenchOptions& options);

void write_bench_csv(std::ostream& out, const BenchReport& report);

// Plot-ready matrix: one row per horizon, one total-cost column per strategy.
void write_bench_gnuplot(std::ostream& out, const BenchReport& report);

}  // namespace resvplan
