#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "resvplan/model.hpp"

namespace resvplan {

// One accepted job from a Standard Workload Format trace. Only the fields
// the demand derivation needs are kept.
struct TraceJob {
  std::int64_t submit_time = 0;  // seconds
  std::int64_t run_time = 0;     // seconds
  std::int64_t processors = 1;   // allocated processors
};

struct SwfParseReport {
  std::uint64_t parsed_jobs = 0;
  std::uint64_t comment_lines = 0;
  std::uint64_t malformed_lines = 0;  // too few fields / non-numeric
  std::uint64_t dropped_jobs = 0;     // negative or sentinel (-1) fields
};

struct SwfParseResult {
  std::vector<TraceJob> jobs;
  SwfParseReport report;
};

// Reads SWF text: ';'-prefixed header comments, whitespace-separated job
// lines with submit time in field 2, run time in field 4, allocated
// processors in field 5. Bad job lines never throw; they are dropped and
// counted. An unreadable stream throws std::runtime_error.
SwfParseResult parse_swf(std::istream& in);

enum class StageAggregation {
  peak,          // worst concurrent occupancy inside the stage
  mean_ceiling,  // time-averaged occupancy, rounded up
};

struct DemandDerivationConfig {
  std::int64_t stage_hours = 1;
  std::int64_t processors_per_vm = 2;
  StageAggregation aggregation = StageAggregation::peak;
  std::optional<std::int64_t> horizon_stages;  // truncate/pad when set
};

// Turns jobs into a per-stage VM demand vector: each job occupies
// [submit, submit+run) seconds; per stage the processor occupancy is
// aggregated and then ceiling-divided by processors_per_vm. The stage clock
// starts at the first submit time floored to the hour.
DemandVector derive_demand(const std::vector<TraceJob>& jobs,
                           const DemandDerivationConfig& config);

}  // namespace resvplan
