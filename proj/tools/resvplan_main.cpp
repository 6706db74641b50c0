// resvplan: reservation planning over demand forecasts.
//
//   resvplan plan         compute and price a reservation plan
//   resvplan bench        compare strategies, emit a CSV report
//   resvplan export-model write the instance as a GNU MathProg program
//   resvplan ingest       turn an SWF trace into a demand vector
//
// Exit codes: 0 ok, 1 invalid input, 2 exact search hit its node budget
// (results are partial).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resvplan/bench.hpp"
#include "resvplan/catalog_io.hpp"
#include "resvplan/demand_io.hpp"
#include "resvplan/dispatch.hpp"
#include "resvplan/exact.hpp"
#include "resvplan/mathprog.hpp"
#include "resvplan/planner.hpp"
#include "resvplan/synth.hpp"
#include "resvplan/trace.hpp"

namespace {

using namespace resvplan;

struct DemandSourceOptions {
  std::string trace_path;
  std::string synth_kind;
  std::int64_t horizon = 0;
  std::uint64_t seed = 1;
  SynthParams synth;
  std::string csv_path;
  std::string binary_path;
  DemandDerivationConfig derivation;
};

void add_demand_source_flags(CLI::App* cmd, DemandSourceOptions& opts) {
  cmd->add_option("--trace", opts.trace_path, "SWF trace file to derive demand from");
  cmd->add_option("--synth", opts.synth_kind, "synthetic demand kind: uniform|bursty");
  cmd->add_option("--T", opts.horizon, "synthetic horizon in stages");
  cmd->add_option("--seed", opts.seed, "synthetic generator seed");
  cmd->add_option("--lo", opts.synth.uniform_lo, "uniform demand lower bound");
  cmd->add_option("--hi", opts.synth.uniform_hi, "uniform demand upper bound");
  cmd->add_option("--base-lo", opts.synth.base_lo, "bursty baseline lower bound");
  cmd->add_option("--base-hi", opts.synth.base_hi, "bursty baseline upper bound");
  cmd->add_option("--spike-prob", opts.synth.spike_start_prob, "bursty spike start probability");
  cmd->add_option("--spike-cont", opts.synth.spike_continue_prob,
                  "bursty spike continuation probability");
  cmd->add_option("--amp-lo", opts.synth.amp_lo, "bursty amplification lower bound");
  cmd->add_option("--amp-hi", opts.synth.amp_hi, "bursty amplification upper bound");
  cmd->add_option("--demand-csv", opts.csv_path, "demand vector from a stage,demand CSV");
  cmd->add_option("--demand-bin", opts.binary_path, "demand vector from a binary cache");
  cmd->add_option("--stage-hours", opts.derivation.stage_hours, "hours per stage (trace input)");
  cmd->add_option("--procs-per-vm", opts.derivation.processors_per_vm,
                  "processors per VM (trace input)");
}

DemandVector load_trace_demand(const DemandSourceOptions& opts, std::ostream* report_to) {
  std::ifstream in(opts.trace_path);
  if (!in) throw std::runtime_error("cannot open trace file: " + opts.trace_path);
  const SwfParseResult parsed = parse_swf(in);
  if (report_to) {
    *report_to << "trace: " << parsed.report.parsed_jobs << " jobs, "
               << parsed.report.dropped_jobs << " dropped (sentinel fields), "
               << parsed.report.malformed_lines << " malformed lines, "
               << parsed.report.comment_lines << " comment lines\n";
  }
  return derive_demand(parsed.jobs, opts.derivation);
}

DemandVector resolve_demand(const DemandSourceOptions& opts, std::ostream* report_to = nullptr) {
  int sources = 0;
  sources += !opts.trace_path.empty();
  sources += !opts.synth_kind.empty();
  sources += !opts.csv_path.empty();
  sources += !opts.binary_path.empty();
  if (sources != 1) {
    throw std::invalid_argument(
        "exactly one demand source required: --trace, --synth, --demand-csv or --demand-bin");
  }

  if (!opts.trace_path.empty()) return load_trace_demand(opts, report_to);
  if (!opts.csv_path.empty()) {
    std::ifstream in(opts.csv_path);
    if (!in) throw std::runtime_error("cannot open demand CSV: " + opts.csv_path);
    return read_demand_csv(in);
  }
  if (!opts.binary_path.empty()) {
    std::ifstream in(opts.binary_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open demand cache: " + opts.binary_path);
    return read_demand_binary(in);
  }

  SynthKind kind;
  if (opts.synth_kind == "uniform") {
    kind = SynthKind::uniform;
  } else if (opts.synth_kind == "bursty") {
    kind = SynthKind::bursty;
  } else {
    throw std::invalid_argument("--synth must be uniform or bursty");
  }
  if (opts.horizon < 1) throw std::invalid_argument("--synth needs --T >= 1");
  return synth_demand(kind, opts.horizon, opts.seed, opts.synth);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  return out;
}

int run_plan(const DemandSourceOptions& source, const std::string& catalog_path,
             const std::string& strategy_text, std::uint64_t exact_budget,
             const std::string& out_path) {
  const MarketConfig market = load_catalog(catalog_path);
  const DemandVector demand = resolve_demand(source, &std::cerr);
  const StrategySpec strategy = StrategySpec::parse(strategy_text);

  ReservationPlan plan;
  bool budget_exceeded = false;
  switch (strategy.kind) {
    case StrategySpec::Kind::none:
      break;
    case StrategySpec::Kind::single_contract:
      plan = plan_single_contract(demand, market.contract_by_id(strategy.contract_id), market).plan;
      break;
    case StrategySpec::Kind::multi_contract:
      plan = plan_multi_contract(demand, market).plan;
      break;
    case StrategySpec::Kind::exact: {
      const ExactSolution solution = solve_exact(demand, market, exact_budget);
      plan = solution.plan;
      budget_exceeded = !solution.optimal;
      break;
    }
  }

  const CostBreakdown cost = evaluate(plan, demand, market);
  std::cout << "strategy: " << strategy.name() << '\n'
            << "horizon: " << demand.horizon() << " stages, total demand "
            << demand.total_demand() << '\n';
  if (plan.empty()) {
    std::cout << "reservations: none\n";
  } else {
    std::cout << "reservations:\n";
    for (const auto& [key, amount] : plan.entries()) {
      std::cout << "  stage " << key.first << ": contract " << key.second << " x " << amount
                << '\n';
    }
  }
  std::cout << "cost: reservation " << cost.reservation_total.to_string() << " + reserved-usage "
            << cost.reserved_usage_total.to_string() << " + on-demand "
            << cost.ondemand_total.to_string() << " = " << cost.grand_total.to_string() << '\n';
  if (budget_exceeded) {
    std::cout << "note: node budget exhausted; best solution found, optimality not proven\n";
  }

  if (!out_path.empty()) {
    std::ofstream out = open_output(out_path);
    out << "stage,contract,amount\n";
    for (const auto& [key, amount] : plan.entries()) {
      out << key.first << ',' << key.second << ',' << amount << '\n';
    }
  }
  return budget_exceeded ? 2 : 0;
}

int run_bench_cmd(const DemandSourceOptions& source, const std::string& catalog_path,
                  const std::string& strategies_text, const std::string& horizons_text,
                  int repetitions, std::uint64_t exact_budget, const std::string& baseline,
                  const std::string& out_path, const std::string& gnuplot_path) {
  const MarketConfig market = load_catalog(catalog_path);
  const DemandVector demand = resolve_demand(source, &std::cerr);

  std::vector<StrategySpec> strategies;
  std::istringstream strategy_stream(strategies_text);
  for (std::string token; std::getline(strategy_stream, token, ',');) {
    if (!token.empty()) strategies.push_back(StrategySpec::parse(token));
  }

  BenchOptions options;
  options.repetitions = repetitions;
  options.exact_node_budget = exact_budget;
  if (!baseline.empty()) options.baseline = baseline;
  if (!horizons_text.empty()) {
    std::istringstream horizon_stream(horizons_text);
    for (std::string token; std::getline(horizon_stream, token, ',');) {
      if (!token.empty()) options.horizons.push_back(std::stoll(token));
    }
  }

  const BenchReport report = run_bench(demand, market, strategies, options);

  if (out_path.empty()) {
    write_bench_csv(std::cout, report);
  } else {
    std::ofstream out = open_output(out_path);
    write_bench_csv(out, report);
  }
  if (!gnuplot_path.empty()) {
    std::ofstream out = open_output(gnuplot_path);
    write_bench_gnuplot(out, report);
  }

  for (const BenchRow& row : report.rows) {
    if (row.budget_exceeded) return 2;
  }
  return 0;
}

int run_export(const DemandSourceOptions& source, const std::string& catalog_path,
               const std::string& out_path) {
  const MarketConfig market = load_catalog(catalog_path);
  const DemandVector demand = resolve_demand(source, &std::cerr);
  if (out_path.empty()) {
    write_model(std::cout, demand, market);
  } else {
    std::ofstream out = open_output(out_path);
    write_model(out, demand, market);
  }
  return 0;
}

int run_ingest(const DemandSourceOptions& source, const std::string& aggregation,
               std::int64_t horizon, const std::string& out_path, const std::string& bin_path) {
  DemandSourceOptions opts = source;
  if (opts.trace_path.empty()) throw std::invalid_argument("ingest requires --trace");
  if (aggregation == "mean") {
    opts.derivation.aggregation = StageAggregation::mean_ceiling;
  } else if (aggregation != "peak") {
    throw std::invalid_argument("--aggregation must be peak or mean");
  }
  if (horizon > 0) opts.derivation.horizon_stages = horizon;

  const DemandVector demand = load_trace_demand(opts, &std::cerr);
  std::cerr << "demand: " << demand.horizon() << " stages, peak " << demand.max_demand()
            << ", total " << demand.total_demand() << '\n';

  if (out_path.empty() && bin_path.empty()) {
    write_demand_csv(std::cout, demand);
    return 0;
  }
  if (!out_path.empty()) {
    std::ofstream out = open_output(out_path);
    write_demand_csv(out, demand);
  }
  if (!bin_path.empty()) {
    std::ofstream out(bin_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + bin_path);
    write_demand_binary(out, demand);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"capacity reservation planning toolkit"};
  app.require_subcommand(1);

  DemandSourceOptions source;
  std::string catalog_path;
  std::string out_path;

  // plan
  auto* plan_cmd = app.add_subcommand("plan", "compute and price a reservation plan");
  std::string strategy_text = "multi";
  std::uint64_t exact_budget = kDefaultNodeBudget;
  add_demand_source_flags(plan_cmd, source);
  plan_cmd->add_option("--catalog", catalog_path, "catalog config (JSON)")->required();
  plan_cmd->add_option("--strategy", strategy_text, "none|single:<id>|multi|exact");
  plan_cmd->add_option("--exact-budget", exact_budget, "node budget for the exact strategy");
  plan_cmd->add_option("--out", out_path, "write the plan as stage,contract,amount CSV");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "compare strategies, emit a CSV report");
  std::string strategies_text = "none,multi";
  std::string horizons_text;
  std::string baseline;
  std::string gnuplot_path;
  int repetitions = 5;
  add_demand_source_flags(bench_cmd, source);
  bench_cmd->add_option("--catalog", catalog_path, "catalog config (JSON)")->required();
  bench_cmd->add_option("--strategies", strategies_text, "comma list: none,single:<id>,multi,exact");
  bench_cmd->add_option("--horizons", horizons_text, "comma list of horizon prefixes");
  bench_cmd->add_option("--repetitions", repetitions, "timing repetitions per cell");
  bench_cmd->add_option("--exact-budget", exact_budget, "node budget for the exact strategy");
  bench_cmd->add_option("--baseline", baseline, "strategy the cost increase compares against");
  bench_cmd->add_option("--out", out_path, "CSV report path (default stdout)");
  bench_cmd->add_option("--gnuplot", gnuplot_path, "also write a plot-ready data file");

  // export-model
  auto* export_cmd = app.add_subcommand("export-model", "write the GNU MathProg program");
  add_demand_source_flags(export_cmd, source);
  export_cmd->add_option("--catalog", catalog_path, "catalog config (JSON)")->required();
  export_cmd->add_option("--out", out_path, "model file path (default stdout)");

  // ingest
  auto* ingest_cmd = app.add_subcommand("ingest", "turn an SWF trace into a demand vector");
  std::string aggregation = "peak";
  std::int64_t ingest_horizon = 0;
  std::string bin_path;
  add_demand_source_flags(ingest_cmd, source);
  ingest_cmd->add_option("--aggregation", aggregation, "peak|mean occupancy per stage");
  ingest_cmd->add_option("--horizon", ingest_horizon, "truncate/pad to this many stages");
  ingest_cmd->add_option("--out", out_path, "demand CSV path (default stdout)");
  ingest_cmd->add_option("--bin", bin_path, "also write the binary demand cache");

  CLI11_PARSE(app, argc, argv);

  try {
    if (plan_cmd->parsed()) {
      return run_plan(source, catalog_path, strategy_text, exact_budget, out_path);
    }
    if (bench_cmd->parsed()) {
      return run_bench_cmd(source, catalog_path, strategies_text, horizons_text, repetitions,
                           exact_budget, baseline, out_path, gnuplot_path);
    }
    if (export_cmd->parsed()) {
      return run_export(source, catalog_path, out_path);
    }
    if (ingest_cmd->parsed()) {
      return run_ingest(source, aggregation, ingest_horizon, out_path, bin_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
