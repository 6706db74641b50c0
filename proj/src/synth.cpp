#include "resvplan/synth.hpp"

#include <stdexcept>
#include <vector>

namespace resvplan {

namespace {

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // inclusive bounds
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

void validate(SynthKind kind, std::int64_t horizon, const SynthParams& p) {
  if (horizon < 1) throw std::invalid_argument("horizon must be >= 1");
  if (kind == SynthKind::uniform) {
    if (p.uniform_lo < 0 || p.uniform_lo > p.uniform_hi) {
      throw std::invalid_argument("uniform bounds must satisfy 0 <= lo <= hi");
    }
    return;
  }
  if (p.base_lo < 0 || p.base_lo > p.base_hi) {
    throw std::invalid_argument("baseline bounds must satisfy 0 <= lo <= hi");
  }
  if (p.spike_start_prob < 0.0 || p.spike_start_prob >= 1.0 || p.spike_continue_prob < 0.0 ||
      p.spike_continue_prob >= 1.0) {
    throw std::invalid_argument("spike probabilities must lie in [0, 1)");
  }
  if (p.amp_lo < 1 || p.amp_lo > p.amp_hi) {
    throw std::invalid_argument("amplification bounds must satisfy 1 <= lo <= hi");
  }
}

}  // namespace

DemandVector synth_demand(SynthKind kind, std::int64_t horizon, std::uint64_t seed,
                          const SynthParams& params) {
  validate(kind, horizon, params);
  SplitMix64 rng{seed};
  std::vector<std::int64_t> demand(static_cast<std::size_t>(horizon), 0);

  if (kind == SynthKind::uniform) {
    for (auto& d : demand) d = rng.range(params.uniform_lo, params.uniform_hi);
    return DemandVector(std::move(demand));
  }

  bool in_spike = false;
  std::int64_t amplification = 1;
  for (auto& d : demand) {
    if (in_spike) {
      in_spike = rng.unit() < params.spike_continue_prob;
    }
    if (!in_spike && rng.unit() < params.spike_start_prob) {
      in_spike = true;
      amplification = rng.range(params.amp_lo, params.amp_hi);
    }
    const std::int64_t base = rng.range(params.base_lo, params.base_hi);
    d = in_spike ? base * amplification : base;
  }
  return DemandVector(std::move(demand));
}

}  // namespace resvplan
