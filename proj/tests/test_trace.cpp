#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <vector>

#include "resvplan/trace.hpp"
#include "support/test_support.hpp"

using namespace resvplan;
using testsupport::Rng;

TEST_CASE("parse_swf: comments, job fields, sentinels, malformed lines") {
  std::istringstream in(
      "; Computer: test cluster\n"
      "; UnixStartTime: 0\n"
      "1 0 0 3600 8 -1 -1 8 -1 -1 1 1 1 1 1 -1 -1 -1\n"
      "2 1800 10 7200 4 -1 -1 4 -1 -1 1 1 1 1 1 -1 -1 -1\n"
      "3 3600 0 1800 -1 -1 -1 2 -1 -1 1 1 1 1 1 -1 -1 -1\n"
      "4 4000 0 -1 2 -1 -1 2 -1 -1 1 1 1 1 1 -1 -1 -1\n"
      "garbage line\n"
      "5 not_a_number 0 60 1 -1 -1 1 -1 -1 1 1 1 1 1 -1 -1 -1\n"
      "\n"
      "6 7200 0 60 2 -1 -1 2 -1 -1 1 1 1 1 1 -1 -1 -1\n");

  const SwfParseResult result = parse_swf(in);
  REQUIRE(result.jobs.size() == 3);
  CHECK(result.report.parsed_jobs == 3);
  CHECK(result.report.comment_lines == 2);
  CHECK(result.report.malformed_lines == 2);  // "garbage line" and job 5
  CHECK(result.report.dropped_jobs == 2);     // procs -1 and run -1

  CHECK(result.jobs[0].submit_time == 0);
  CHECK(result.jobs[0].run_time == 3600);
  CHECK(result.jobs[0].processors == 8);
  CHECK(result.jobs[1].submit_time == 1800);
}

TEST_CASE("parse_swf: empty input is fine") {
  std::istringstream in("");
  const SwfParseResult result = parse_swf(in);
  CHECK(result.jobs.empty());
  CHECK(result.report.dropped_jobs == 0);
  CHECK(result.report.malformed_lines == 0);
}

TEST_CASE("parse_swf: absurd magnitudes are malformed, fractional seconds truncate") {
  std::istringstream in(
      "1 1e30 0 60 1 x\n"
      "2 10.9 0 30.2 2 x\n");
  const SwfParseResult result = parse_swf(in);
  REQUIRE(result.jobs.size() == 1);
  CHECK(result.report.malformed_lines == 1);
  CHECK(result.jobs[0].submit_time == 10);
  CHECK(result.jobs[0].run_time == 30);
}

TEST_CASE("derive_demand: one job spanning two stages") {
  const std::vector<TraceJob> jobs{{0, 7200, 8}};
  DemandDerivationConfig config;
  config.stage_hours = 1;
  config.processors_per_vm = 4;
  const DemandVector demand = derive_demand(jobs, config);
  REQUIRE(demand.horizon() == 2);
  CHECK(demand.at_stage(1) == 2);
  CHECK(demand.at_stage(2) == 2);
}

TEST_CASE("derive_demand: overlapping jobs peak together") {
  // Both jobs inside the same hour, 4 processors each -> peak 8 -> 2 VMs.
  const std::vector<TraceJob> jobs{{0, 3600, 4}, {600, 1200, 4}};
  DemandDerivationConfig config;
  config.stage_hours = 1;
  config.processors_per_vm = 4;
  const DemandVector demand = derive_demand(jobs, config);
  REQUIRE(demand.horizon() == 1);
  CHECK(demand.at_stage(1) == 2);
}

TEST_CASE("derive_demand: no jobs gives zeros over the requested horizon") {
  DemandDerivationConfig config;
  config.horizon_stages = 4;
  const DemandVector demand = derive_demand({}, config);
  REQUIRE(demand.horizon() == 4);
  for (std::int64_t t = 1; t <= 4; ++t) CHECK(demand.at_stage(t) == 0);
}

TEST_CASE("derive_demand: horizon truncates and pads") {
  const std::vector<TraceJob> jobs{{0, 7200, 2}};
  DemandDerivationConfig config;
  config.processors_per_vm = 1;

  config.horizon_stages = 1;
  CHECK(derive_demand(jobs, config).horizon() == 1);

  config.horizon_stages = 5;
  const DemandVector padded = derive_demand(jobs, config);
  REQUIRE(padded.horizon() == 5);
  CHECK(padded.at_stage(3) == 0);
  CHECK(padded.at_stage(5) == 0);
}

TEST_CASE("derive_demand: mean aggregation rounds occupancy up") {
  // Half an hour at 4 processors: mean 2 -> 2 VMs at 1 proc per VM;
  // peak would give 4.
  const std::vector<TraceJob> jobs{{0, 1800, 4}};
  DemandDerivationConfig config;
  config.processors_per_vm = 1;
  config.aggregation = StageAggregation::mean_ceiling;
  CHECK(derive_demand(jobs, config).at_stage(1) == 2);

  config.aggregation = StageAggregation::peak;
  CHECK(derive_demand(jobs, config).at_stage(1) == 4);
}

TEST_CASE("derive_demand: invariant under job reordering (property)") {
  Rng rng{11};
  for (int iteration = 0; iteration < 50; ++iteration) {
    std::vector<TraceJob> jobs;
    const int n = static_cast<int>(rng.range(1, 20));
    for (int i = 0; i < n; ++i) {
      jobs.push_back({rng.range(0, 20000), rng.range(0, 15000), rng.range(1, 16)});
    }
    DemandDerivationConfig config;
    config.stage_hours = 1;
    config.processors_per_vm = 2;

    const DemandVector base = derive_demand(jobs, config);
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      for (std::size_t i = jobs.size() - 1; i > 0; --i) {
        std::swap(jobs[i], jobs[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(i)))]);
      }
      const DemandVector again = derive_demand(jobs, config);
      REQUIRE(std::equal(base.values().begin(), base.values().end(), again.values().begin(),
                         again.values().end()));
    }
  }
}

TEST_CASE("derive_demand: peak aggregation never undercounts processor-hours (property)") {
  Rng rng{77};
  for (int iteration = 0; iteration < 50; ++iteration) {
    std::vector<TraceJob> jobs;
    const int n = static_cast<int>(rng.range(1, 15));
    for (int i = 0; i < n; ++i) {
      jobs.push_back({rng.range(0, 30000), rng.range(0, 20000), rng.range(1, 8)});
    }
    DemandDerivationConfig config;
    config.stage_hours = rng.range(1, 3);
    config.processors_per_vm = rng.range(1, 4);

    const DemandVector demand = derive_demand(jobs, config);
    // sum(D_t) * stage_seconds * ppv >= sum of job processor-seconds
    __int128 lhs = 0;
    for (std::int64_t d : demand.values()) lhs += d;
    lhs *= config.stage_hours * 3600;
    lhs *= config.processors_per_vm;
    __int128 rhs = 0;
    for (const TraceJob& job : jobs) {
      rhs += static_cast<__int128>(job.run_time) * job.processors;
    }
    REQUIRE(lhs >= rhs);
  }
}
