#include "resvplan/trace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace resvplan {

namespace {

bool parse_seconds(const std::string& field, std::int64_t& out) {
  // SWF times may carry decimals; truncate toward zero like the archives'
  // own tooling does. Values beyond ~31M years are junk, not data.
  char* end = nullptr;
  const double value = std::strtod(field.c_str(), &end);
  if (end == field.c_str() || *end != '\0' || !std::isfinite(value)) return false;
  if (value > 1e15 || value < -1e15) return false;
  out = static_cast<std::int64_t>(value);
  return true;
}

}  // namespace

SwfParseResult parse_swf(std::istream& in) {
  if (!in.good()) throw std::runtime_error("cannot read SWF stream");

  SwfParseResult result;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == ';') {
      ++result.report.comment_lines;
      continue;
    }

    std::istringstream fields(line);
    std::string f1, f_submit, f3, f_run, f_procs;
    if (!(fields >> f1 >> f_submit >> f3 >> f_run >> f_procs)) {
      ++result.report.malformed_lines;
      continue;
    }

    TraceJob job;
    if (!parse_seconds(f_submit, job.submit_time) || !parse_seconds(f_run, job.run_time) ||
        !parse_seconds(f_procs, job.processors)) {
      ++result.report.malformed_lines;
      continue;
    }
    if (job.submit_time < 0 || job.run_time < 0 || job.processors < 1) {
      ++result.report.dropped_jobs;
      continue;
    }
    result.jobs.push_back(job);
    ++result.report.parsed_jobs;
  }
  if (in.bad()) throw std::runtime_error("I/O error while reading SWF stream");
  return result;
}

DemandVector derive_demand(const std::vector<TraceJob>& jobs,
                           const DemandDerivationConfig& config) {
  if (config.stage_hours < 1) throw std::invalid_argument("stage_hours must be >= 1");
  if (config.processors_per_vm < 1) throw std::invalid_argument("processors_per_vm must be >= 1");
  if (config.horizon_stages && *config.horizon_stages < 1) {
    throw std::invalid_argument("horizon_stages must be >= 1 when set");
  }

  if (jobs.empty()) {
    return DemandVector(
        std::vector<std::int64_t>(static_cast<std::size_t>(config.horizon_stages.value_or(1)), 0));
  }

  std::int64_t epoch = jobs.front().submit_time;
  std::int64_t last_end = 0;
  for (const TraceJob& job : jobs) {
    epoch = std::min(epoch, job.submit_time);
    last_end = std::max(last_end, job.submit_time + job.run_time);
  }
  epoch = (epoch / 3600) * 3600;  // trace epochs are arbitrary; align to the hour

  const std::int64_t stage_seconds = config.stage_hours * 3600;
  std::int64_t natural_stages = (last_end - epoch + stage_seconds - 1) / stage_seconds;
  natural_stages = std::max<std::int64_t>(natural_stages, 1);
  const std::int64_t stages = config.horizon_stages.value_or(natural_stages);

  // Occupancy event sweep: +procs when a job starts, -procs when it ends.
  struct Event {
    std::int64_t time;
    std::int64_t delta;
  };
  std::vector<Event> events;
  events.reserve(jobs.size() * 2);
  for (const TraceJob& job : jobs) {
    if (job.run_time == 0) continue;  // empty interval occupies nothing
    events.push_back({job.submit_time, job.processors});
    events.push_back({job.submit_time + job.run_time, -job.processors});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.time != b.time) return a.time < b.time;
    return a.delta < b.delta;  // releases before acquisitions at the same instant
  });

  std::vector<std::int64_t> demand(static_cast<std::size_t>(stages), 0);
  std::size_t next_event = 0;
  std::int64_t occupancy = 0;
  for (std::int64_t s = 0; s < stages; ++s) {
    const std::int64_t start = epoch + s * stage_seconds;
    const std::int64_t end = start + stage_seconds;

    // Events at or before the stage start take effect before it is observed.
    while (next_event < events.size() && events[next_event].time <= start) {
      occupancy += events[next_event].delta;
      ++next_event;
    }

    std::int64_t procs = 0;
    if (config.aggregation == StageAggregation::peak) {
      std::int64_t peak = occupancy;
      while (next_event < events.size() && events[next_event].time < end) {
        occupancy += events[next_event].delta;
        peak = std::max(peak, occupancy);
        ++next_event;
      }
      procs = peak;
    } else {
      __int128 area = 0;
      std::int64_t cursor = start;
      while (next_event < events.size() && events[next_event].time < end) {
        area += static_cast<__int128>(occupancy) * (events[next_event].time - cursor);
        cursor = events[next_event].time;
        occupancy += events[next_event].delta;
        ++next_event;
      }
      area += static_cast<__int128>(occupancy) * (end - cursor);
      procs = static_cast<std::int64_t>((area + stage_seconds - 1) / stage_seconds);
    }
    demand[static_cast<std::size_t>(s)] =
        (procs + config.processors_per_vm - 1) / config.processors_per_vm;
  }
  return DemandVector(std::move(demand));
}

}  // namespace resvplan
