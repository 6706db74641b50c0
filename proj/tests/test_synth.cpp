#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "resvplan/synth.hpp"

using namespace resvplan;

TEST_CASE("synth_demand: degenerate uniform range is constant") {
  SynthParams params;
  params.uniform_lo = params.uniform_hi = 3;
  const DemandVector d = synth_demand(SynthKind::uniform, 4, 1, params);
  for (std::int64_t t = 1; t <= 4; ++t) CHECK(d.at_stage(t) == 3);
}

TEST_CASE("synth_demand: same seed, same vector; different seed, different vector") {
  const DemandVector a = synth_demand(SynthKind::bursty, 200, 42);
  const DemandVector b = synth_demand(SynthKind::bursty, 200, 42);
  const DemandVector c = synth_demand(SynthKind::bursty, 200, 43);
  CHECK(std::equal(a.values().begin(), a.values().end(), b.values().begin(), b.values().end()));
  CHECK_FALSE(std::equal(a.values().begin(), a.values().end(), c.values().begin(), c.values().end()));

  const DemandVector u1 = synth_demand(SynthKind::uniform, 200, 7);
  const DemandVector u2 = synth_demand(SynthKind::uniform, 200, 7);
  CHECK(std::equal(u1.values().begin(), u1.values().end(), u2.values().begin(), u2.values().end()));
}

TEST_CASE("synth_demand: parameter validation") {
  SynthParams params;
  params.uniform_lo = 5;
  params.uniform_hi = 2;
  CHECK_THROWS_AS(synth_demand(SynthKind::uniform, 4, 1, params), std::invalid_argument);
  CHECK_THROWS_AS(synth_demand(SynthKind::uniform, 0, 1), std::invalid_argument);

  SynthParams bad_prob;
  bad_prob.spike_start_prob = 1.0;
  CHECK_THROWS_AS(synth_demand(SynthKind::bursty, 4, 1, bad_prob), std::invalid_argument);

  SynthParams bad_amp;
  bad_amp.amp_lo = 0;
  CHECK_THROWS_AS(synth_demand(SynthKind::bursty, 4, 1, bad_amp), std::invalid_argument);
}

TEST_CASE("synth_demand: bursty spikes push peak-to-mean above uniform (statistical)") {
  // Matched baseline scale: uniform on [0,8] has mean 4; bursty base [0,4]
  // spikes multiply by up to 8. Compare averaged peak/mean ratios.
  SynthParams uniform_params;
  uniform_params.uniform_lo = 0;
  uniform_params.uniform_hi = 8;

  double uniform_ratio = 0.0;
  double bursty_ratio = 0.0;
  const int seeds = 20;
  for (int seed = 0; seed < seeds; ++seed) {
    const DemandVector u =
        synth_demand(SynthKind::uniform, 400, static_cast<std::uint64_t>(seed), uniform_params);
    const DemandVector b = synth_demand(SynthKind::bursty, 400, static_cast<std::uint64_t>(seed));
    const auto ratio = [](const DemandVector& d) {
      const double mean = static_cast<double>(d.total_demand()) / static_cast<double>(d.horizon());
      return mean == 0.0 ? 0.0 : static_cast<double>(d.max_demand()) / mean;
    };
    uniform_ratio += ratio(u);
    bursty_ratio += ratio(b);
  }
  CHECK(bursty_ratio / seeds > uniform_ratio / seeds);
}
