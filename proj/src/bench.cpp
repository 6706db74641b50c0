#include "resvplan/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#include "resvplan/dispatch.hpp"
#include "resvplan/planner.hpp"

namespace resvplan {

PricingContract scale_contract(const PricingContract& contract, std::int64_t factor) {
  contract.validate();
  if (factor < 1) throw std::invalid_argument("scale factor must be >= 1");
  if (contract.duration_stages % factor != 0) {
    throw std::invalid_argument("scale factor must divide the contract duration into whole stages");
  }
  PricingContract scaled = contract;
  scaled.duration_stages = contract.duration_stages / factor;
  const std::int64_t millis = contract.upfront.millis();
  // Upfront divides with the duration; round to the nearest milli when the
  // division is inexact (ties away from zero).
  scaled.upfront = Money::from_millis((millis + factor / 2) / factor);
  scaled.validate();  // an upfront rounded down to zero is not a contract
  return scaled;
}

StrategySpec StrategySpec::parse(std::string_view text) {
  if (text == "none") return {Kind::none, 0};
  if (text == "multi") return {Kind::multi_contract, 0};
  if (text == "exact") return {Kind::exact, 0};
  if (text.rfind("single:", 0) == 0) {
    const std::string id_text(text.substr(7));
    try {
      return {Kind::single_contract, std::stoi(id_text)};
    } catch (const std::exception&) {
      throw std::invalid_argument("bad contract id in strategy '" + std::string(text) + "'");
    }
  }
  throw std::invalid_argument("unknown strategy '" + std::string(text) +
                              "' (expect none|single:<id>|multi|exact)");
}

std::string StrategySpec::name() const {
  switch (kind) {
    case Kind::none: return "none";
    case Kind::single_contract: return "single:" + std::to_string(contract_id);
    case Kind::multi_contract: return "multi";
    case Kind::exact: return "exact";
  }
  return "?";
}

namespace {

struct CellResult {
  ReservationPlan plan;
  Money total;
  double overhead_us = 0.0;
  bool budget_exceeded = false;
};

CellResult run_cell(const StrategySpec& strategy, const DemandVector& demand,
                    const MarketConfig& market, const BenchOptions& options) {
  using clock = std::chrono::steady_clock;

  CellResult cell;
  std::vector<double> samples;
  const int reps = std::max(options.repetitions, 1);
  samples.reserve(static_cast<std::size_t>(reps));

  for (int rep = 0; rep < reps; ++rep) {
    const auto begin = clock::now();
    switch (strategy.kind) {
      case StrategySpec::Kind::none:
        cell.plan = ReservationPlan{};
        break;
      case StrategySpec::Kind::single_contract:
        cell.plan =
            plan_single_contract(demand, market.contract_by_id(strategy.contract_id), market).plan;
        break;
      case StrategySpec::Kind::multi_contract:
        cell.plan = plan_multi_contract(demand, market).plan;
        break;
      case StrategySpec::Kind::exact: {
        ExactSolution solution = solve_exact(demand, market, options.exact_node_budget);
        cell.plan = solution.plan;
        cell.budget_exceeded = !solution.optimal;
        break;
      }
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - begin);
    samples.push_back(std::max<double>(static_cast<double>(elapsed.count()), 1.0) / 1000.0);
  }

  std::sort(samples.begin(), samples.end());
  cell.overhead_us = samples[samples.size() / 2];

  const DispatchSchedule schedule = dispatch(cell.plan, demand, market);
  if (!check_feasible(cell.plan, schedule, demand, market).empty()) {
    throw std::logic_error("strategy '" + strategy.name() + "' produced an infeasible plan");
  }
  cell.total = evaluate_schedule(cell.plan, schedule, demand, market).grand_total;
  return cell;
}

}  // namespace

BenchReport run_bench(const DemandVector& demand, const MarketConfig& market,
                      const std::vector<StrategySpec>& strategies, const BenchOptions& options) {
  if (strategies.empty()) throw std::invalid_argument("no strategies to benchmark");

  std::vector<std::int64_t> horizons = options.horizons;
  if (horizons.empty()) horizons.push_back(demand.horizon());
  for (std::int64_t h : horizons) {
    if (h < 1 || h > demand.horizon()) {
      throw std::invalid_argument("benchmark horizon " + std::to_string(h) +
                                  " outside 1.." + std::to_string(demand.horizon()));
    }
  }

  std::set<std::string> names;
  for (const StrategySpec& s : strategies) {
    if (!names.insert(s.name()).second) {
      throw std::invalid_argument("duplicate strategy '" + s.name() + "'");
    }
  }

  BenchReport report;
  std::map<std::int64_t, std::map<std::string, Money>> totals_by_horizon;

  for (const StrategySpec& strategy : strategies) {
    for (std::int64_t horizon : horizons) {
      const DemandVector prefix = horizon == demand.horizon() ? demand : demand.prefix(horizon);
      CellResult cell = run_cell(strategy, prefix, market, options);
      totals_by_horizon[horizon][strategy.name()] = cell.total;
      report.rows.push_back({strategy.name(), horizon, cell.total, 0.0, cell.overhead_us,
                             cell.budget_exceeded});
    }
  }

  if (options.baseline) {
    report.baseline = *options.baseline;
    if (!names.count(report.baseline)) {
      throw std::invalid_argument("baseline '" + report.baseline + "' is not among the strategies");
    }
  } else if (names.count("exact")) {
    report.baseline = "exact";
  } else {
    // No optimum available: compare against the cheapest strategy per run.
    report.baseline = "cheapest";
  }

  for (BenchRow& row : report.rows) {
    const auto& totals = totals_by_horizon[row.horizon_stages];
    Money base;
    if (report.baseline == "cheapest") {
      base = totals.begin()->second;
      for (const auto& [name, total] : totals) base = std::min(base, total);
    } else {
      base = totals.at(report.baseline);
    }
    row.cost_increase_pct =
        base.is_zero() ? 0.0
                       : 100.0 * static_cast<double>((row.grand_total - base).millis()) /
                             static_cast<double>(base.millis());
  }

  std::sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    if (a.strategy != b.strategy) return a.strategy < b.strategy;
    return a.horizon_stages < b.horizon_stages;
  });
  return report;
}

void write_bench_csv(std::ostream& out, const BenchReport& report) {
  out << "strategy,horizon_stages,grand_total,cost_increase_pct,overhead_us,note\n";
  char buffer[64];
  for (const BenchRow& row : report.rows) {
    std::snprintf(buffer, sizeof(buffer), "%.3f", row.cost_increase_pct);
    out << row.strategy << ',' << row.horizon_stages << ',' << row.grand_total.to_string() << ','
        << buffer << ',';
    std::snprintf(buffer, sizeof(buffer), "%.3f", row.overhead_us);
    out << buffer << ',' << (row.budget_exceeded ? "budget-exceeded" : "") << '\n';
  }
}

void write_bench_gnuplot(std::ostream& out, const BenchReport& report) {
  std::set<std::string> strategies;
  std::set<std::int64_t> horizons;
  std::map<std::pair<std::int64_t, std::string>, Money> totals;
  for (const BenchRow& row : report.rows) {
    strategies.insert(row.strategy);
    horizons.insert(row.horizon_stages);
    totals[{row.horizon_stages, row.strategy}] = row.grand_total;
  }

  out << "# horizon";
  for (const std::string& s : strategies) out << ' ' << s;
  out << '\n';
  for (std::int64_t h : horizons) {
    out << h;
    for (const std::string& s : strategies) {
      const auto it = totals.find({h, s});
      out << ' ' << (it == totals.end() ? "nan" : it->second.to_string());
    }
    out << '\n';
  }
}

}  // namespace resvplan
