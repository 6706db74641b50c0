#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "resvplan/bench.hpp"
#include "support/test_support.hpp"

using namespace resvplan;

TEST_CASE("scale_contract: yearly contracts shrink to Table-2 monthly terms") {
  // 1-year at $384 upfront scales by 12 to a $32 month; usage rate fixed.
  const PricingContract one_year{1, Money::parse("384"), 8760, Money::parse("0.136")};
  const PricingContract month = scale_contract(one_year, 12);
  CHECK(month.upfront == Money::parse("32"));
  CHECK(month.duration_stages == 730);
  CHECK(month.usage_rate == Money::parse("0.136"));

  const PricingContract three_year{2, Money::parse("243"), 26280, Money::parse("0.108")};
  const PricingContract quarter = scale_contract(three_year, 12);
  CHECK(quarter.upfront == Money::parse("20.25"));
  CHECK(quarter.duration_stages == 2190);

  CHECK(scale_contract(one_year, 1).upfront == one_year.upfront);  // identity
}

TEST_CASE("scale_contract: factor must divide the duration") {
  const PricingContract contract{1, Money::parse("10"), 10, Money::parse("1")};
  CHECK_THROWS_AS(scale_contract(contract, 3), std::invalid_argument);
  CHECK_THROWS_AS(scale_contract(contract, 0), std::invalid_argument);
  CHECK_NOTHROW(scale_contract(contract, 5));

  // An upfront that rounds to zero is rejected, not returned.
  const PricingContract tiny{1, Money::from_millis(1), 10, Money::parse("1")};
  CHECK_THROWS_AS(scale_contract(tiny, 5), std::invalid_argument);
}

TEST_CASE("StrategySpec: parse and round-trip names") {
  CHECK(StrategySpec::parse("none").kind == StrategySpec::Kind::none);
  CHECK(StrategySpec::parse("multi").kind == StrategySpec::Kind::multi_contract);
  CHECK(StrategySpec::parse("exact").kind == StrategySpec::Kind::exact);
  const StrategySpec single = StrategySpec::parse("single:2");
  CHECK(single.kind == StrategySpec::Kind::single_contract);
  CHECK(single.contract_id == 2);
  CHECK(single.name() == "single:2");
  CHECK_THROWS_AS(StrategySpec::parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(StrategySpec::parse("single:x"), std::invalid_argument);
}

TEST_CASE("run_bench: toy instance totals and cost increase vs exact") {
  const MarketConfig market = testsupport::toy_market_single();
  const DemandVector demand({1, 2, 3, 4});
  const std::vector<StrategySpec> strategies{
      StrategySpec::parse("none"), StrategySpec::parse("single:1"), StrategySpec::parse("exact")};

  BenchOptions options;
  options.repetitions = 1;
  const BenchReport report = run_bench(demand, market, strategies, options);

  REQUIRE(report.rows.size() == 3);
  CHECK(report.baseline == "exact");

  for (const BenchRow& row : report.rows) {
    CHECK(row.horizon_stages == 4);
    CHECK(row.overhead_us > 0.0);
    CHECK_FALSE(row.budget_exceeded);
    if (row.strategy == "none") {
      CHECK(row.grand_total == Money::parse("20"));
      CHECK(row.cost_increase_pct == doctest::Approx(100.0 * 3 / 17).epsilon(1e-9));
    } else if (row.strategy == "single:1") {
      CHECK(row.grand_total == Money::parse("17"));
      CHECK(row.cost_increase_pct == doctest::Approx(0.0));
    } else {
      CHECK(row.strategy == "exact");
      CHECK(row.grand_total == Money::parse("17"));
    }
  }
}

TEST_CASE("run_bench: horizon prefixes and deterministic cost columns") {
  const MarketConfig market = testsupport::toy_market_multi();
  const DemandVector demand({4, 1, 5, 2, 3, 4, 0, 2});
  const std::vector<StrategySpec> strategies{StrategySpec::parse("none"),
                                             StrategySpec::parse("multi")};
  BenchOptions options;
  options.repetitions = 1;
  options.horizons = {2, 4, 8};

  const BenchReport a = run_bench(demand, market, strategies, options);
  const BenchReport b = run_bench(demand, market, strategies, options);
  REQUIRE(a.rows.size() == 6);
  CHECK(a.baseline == "cheapest");
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].strategy == b.rows[i].strategy);
    CHECK(a.rows[i].horizon_stages == b.rows[i].horizon_stages);
    CHECK(a.rows[i].grand_total == b.rows[i].grand_total);
    CHECK(a.rows[i].cost_increase_pct == b.rows[i].cost_increase_pct);
  }

  // Rows sorted by strategy then horizon.
  CHECK(a.rows[0].strategy == "multi");
  CHECK(a.rows[0].horizon_stages == 2);
  CHECK(a.rows[5].strategy == "none");
  CHECK(a.rows[5].horizon_stages == 8);

  // The "none" strategy total is exactly sum(D)*o*h on every prefix.
  for (const BenchRow& row : a.rows) {
    if (row.strategy != "none") continue;
    const DemandVector prefix = demand.prefix(row.horizon_stages);
    CHECK(row.grand_total == market.ondemand_rate() * prefix.total_demand());
    CHECK(row.cost_increase_pct >= 0.0);  // baseline "cheapest" can only be below
  }
}

TEST_CASE("run_bench: input validation") {
  const MarketConfig market = testsupport::toy_market_single();
  const DemandVector demand({1, 2});
  BenchOptions options;
  CHECK_THROWS_AS(run_bench(demand, market, {}, options), std::invalid_argument);

  options.horizons = {9};
  CHECK_THROWS_AS(run_bench(demand, market, {StrategySpec::parse("none")}, options),
                  std::invalid_argument);

  options.horizons = {};
  options.baseline = "exact";
  CHECK_THROWS_AS(run_bench(demand, market, {StrategySpec::parse("none")}, options),
                  std::invalid_argument);

  options.baseline.reset();
  CHECK_THROWS_AS(
      run_bench(demand, market, {StrategySpec::parse("none"), StrategySpec::parse("none")},
                options),
      std::invalid_argument);
}

TEST_CASE("write_bench_csv: stable header and formatting") {
  const MarketConfig market = testsupport::toy_market_single();
  const std::vector<StrategySpec> strategies{StrategySpec::parse("none"),
                                             StrategySpec::parse("exact")};
  BenchOptions options;
  options.repetitions = 1;
  const BenchReport report = run_bench(DemandVector({1, 2, 3, 4}), market, strategies, options);

  std::ostringstream out;
  write_bench_csv(out, report);
  const std::string csv = out.str();
  CHECK(csv.rfind("strategy,horizon_stages,grand_total,cost_increase_pct,overhead_us,note\n", 0) ==
        0);
  CHECK(csv.find("none,4,20.000,17.647,") != std::string::npos);
  CHECK(csv.find("exact,4,17.000,0.000,") != std::string::npos);
}

TEST_CASE("write_bench_gnuplot: one row per horizon, one column per strategy") {
  const MarketConfig market = testsupport::toy_market_single();
  const std::vector<StrategySpec> strategies{StrategySpec::parse("none"),
                                             StrategySpec::parse("single:1")};
  BenchOptions options;
  options.repetitions = 1;
  options.horizons = {2, 4};
  const BenchReport report = run_bench(DemandVector({1, 2, 3, 4}), market, strategies, options);

  std::ostringstream out;
  write_bench_gnuplot(out, report);
  const std::string text = out.str();
  CHECK(text.rfind("# horizon none single:1\n", 0) == 0);
  CHECK(text.find("\n2 ") != std::string::npos);
  CHECK(text.find("\n4 ") != std::string::npos);
}
