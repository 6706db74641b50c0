#include <doctest.h>

#include <vector>

#include "resvplan/dispatch.hpp"
#include "support/test_support.hpp"

using namespace resvplan;
using testsupport::Rng;

TEST_CASE("dispatch: reservations fill first, remainder goes on-demand") {
  const MarketConfig market = testsupport::toy_market_single();
  const DemandVector demand({1, 2, 3, 4});
  ReservationPlan plan;
  plan.add(1, 1, 2);

  const DispatchSchedule schedule = dispatch(plan, demand, market);
  const std::vector<std::int64_t> expected_reserved{1, 2, 2, 2};
  const std::vector<std::int64_t> expected_ondemand{0, 0, 1, 2};
  for (std::int64_t t = 1; t <= 4; ++t) {
    CHECK(schedule.reserved_launch(t, 1) == expected_reserved[static_cast<std::size_t>(t - 1)]);
    CHECK(schedule.ondemand_launch(t) == expected_ondemand[static_cast<std::size_t>(t - 1)]);
  }
}

TEST_CASE("dispatch: empty plan is pure on-demand") {
  const MarketConfig market = testsupport::toy_market_single();
  const DemandVector demand({5, 0});
  const DispatchSchedule schedule = dispatch(ReservationPlan{}, demand, market);
  CHECK(schedule.ondemand_launch(1) == 5);
  CHECK(schedule.ondemand_launch(2) == 0);
  CHECK(schedule.reserved_launch(1, 1) == 0);
}

TEST_CASE("dispatch: cheapest usage rate drains before pricier contracts") {
  const MarketConfig market({{1, Money::parse("60"), 3, Money::parse("0.136")},
                             {2, Money::parse("50"), 2, Money::parse("0.108")}},
                            Money::parse("0.24"), 730);
  ReservationPlan plan;
  plan.add(1, 1, 1);
  plan.add(1, 2, 1);
  const DispatchSchedule schedule = dispatch(plan, DemandVector({1, 0}), market);
  CHECK(schedule.reserved_launch(1, 2) == 1);  // 0.108 beats 0.136
  CHECK(schedule.reserved_launch(1, 1) == 0);
  CHECK(schedule.ondemand_launch(1) == 0);
}

TEST_CASE("evaluate: toy plan totals 17, empty plan 20") {
  const MarketConfig market = testsupport::toy_market_single();
  const DemandVector demand({1, 2, 3, 4});
  ReservationPlan plan;
  plan.add(1, 1, 2);

  const CostBreakdown cost = evaluate(plan, demand, market);
  CHECK(cost.grand_total == Money::parse("17"));
  CHECK(cost.reservation_total == Money::parse("4"));
  CHECK(cost.reserved_usage_total == Money::parse("7"));
  CHECK(cost.ondemand_total == Money::parse("6"));

  Money stage_sum;
  for (const Money& c : cost.per_stage) stage_sum += c;
  CHECK(stage_sum == cost.grand_total);

  CHECK(evaluate(ReservationPlan{}, demand, market).grand_total == Money::parse("20"));
}

TEST_CASE("check_feasible: dispatch output is always clean") {
  const MarketConfig market = testsupport::toy_market_multi();
  Rng rng{4242};
  for (int iteration = 0; iteration < 200; ++iteration) {
    const std::int64_t horizon = rng.range(1, 12);
    std::vector<std::int64_t> demands(static_cast<std::size_t>(horizon));
    for (auto& d : demands) d = rng.range(0, 15);
    const DemandVector demand(std::move(demands));

    ReservationPlan plan;
    const int entries = static_cast<int>(rng.range(0, 4));
    for (int e = 0; e < entries; ++e) {
      plan.add(rng.range(1, horizon), static_cast<int>(rng.range(1, 2)), rng.range(0, 10));
    }

    const DispatchSchedule schedule = dispatch(plan, demand, market);
    REQUIRE(check_feasible(plan, schedule, demand, market).empty());

    // No overshoot: launches exactly meet demand.
    for (std::int64_t t = 1; t <= horizon; ++t) {
      const std::int64_t launched = schedule.reserved_launch(t, 1) +
                                    schedule.reserved_launch(t, 2) + schedule.ondemand_launch(t);
      REQUIRE(launched == demand.at_stage(t));
    }
  }
}

TEST_CASE("check_feasible: constructed violations are reported by constraint") {
  const MarketConfig market = testsupport::toy_market_single();
  const DemandVector demand({5, 2, 0, 0});
  ReservationPlan plan;
  plan.add(1, 1, 2);

  DispatchSchedule schedule = dispatch(plan, demand, market);

  SUBCASE("launching more than reserved") {
    schedule.set_reserved_launch(2, 1, 3);
    const auto violations = check_feasible(plan, schedule, demand, market);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].constraint == ConstraintId::launch_capacity);
    CHECK(violations[0].stage == 2);
    CHECK(violations[0].contract_id == 1);
  }

  SUBCASE("covering only part of the demand") {
    schedule.set_ondemand_launch(1, 2);  // 2 reserved + 2 on-demand < 5
    const auto violations = check_feasible(plan, schedule, demand, market);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].constraint == ConstraintId::demand_satisfaction);
    CHECK(violations[0].stage == 1);
  }

  SUBCASE("negative launch counts") {
    schedule.set_ondemand_launch(1, -1);
    const auto violations = check_feasible(plan, schedule, demand, market);
    REQUIRE(violations.size() == 2);  // non-negativity, and stage 1 now undercovered
    CHECK(violations[0].constraint == ConstraintId::non_negativity);
  }
}

TEST_CASE("evaluate: raising one stage's demand never lowers the total (property)") {
  const MarketConfig market = testsupport::toy_market_multi();
  Rng rng{7171};
  for (int iteration = 0; iteration < 200; ++iteration) {
    const std::int64_t horizon = rng.range(1, 10);
    std::vector<std::int64_t> demands(static_cast<std::size_t>(horizon));
    for (auto& d : demands) d = rng.range(0, 12);

    ReservationPlan plan;
    const int entries = static_cast<int>(rng.range(0, 3));
    for (int e = 0; e < entries; ++e) {
      plan.add(rng.range(1, horizon), static_cast<int>(rng.range(1, 2)), rng.range(0, 8));
    }

    const Money before = evaluate(plan, DemandVector(demands), market).grand_total;
    auto raised = demands;
    raised[static_cast<std::size_t>(rng.range(0, horizon - 1))] += rng.range(1, 5);
    const Money after = evaluate(plan, DemandVector(raised), market).grand_total;
    REQUIRE(after >= before);
  }
}
