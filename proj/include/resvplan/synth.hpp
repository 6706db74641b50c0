#pragma once

#include <cstdint>

#include "resvplan/model.hpp"

namespace resvplan {

enum class SynthKind {
  uniform,  // i.i.d. integer demand in [uniform_lo, uniform_hi]
  bursty,   // baseline demand with geometric spike episodes
};

struct SynthParams {
  // uniform
  std::int64_t uniform_lo = 0;
  std::int64_t uniform_hi = 20;

  // bursty: per-stage baseline in [base_lo, base_hi]; a spike episode starts
  // with probability spike_start_prob, persists each stage with probability
  // spike_continue_prob, and multiplies the baseline by a factor drawn once
  // per episode from [amp_lo, amp_hi].
  std::int64_t base_lo = 0;
  std::int64_t base_hi = 4;
  double spike_start_prob = 0.05;
  double spike_continue_prob = 0.7;
  std::int64_t amp_lo = 3;
  std::int64_t amp_hi = 8;
};

// Deterministic under a fixed seed; the generator is self-contained so the
// same seed gives the same vector on every platform.
DemandVector synth_demand(SynthKind kind, std::int64_t horizon, std::uint64_t seed,
                          const SynthParams& params = {});

}  // namespace resvplan
