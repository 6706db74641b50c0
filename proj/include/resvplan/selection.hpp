#pragma once

#include <cstdint>
#include <span>

namespace resvplan {

inline constexpr std::uint64_t kDefaultSelectSeed = 0x9e3779b97f4a7c15ULL;

// j-th smallest value (1-based) in expected linear time via randomized
// quickselect. Pivot choices come from a seeded generator so repeated runs
// are identical; the result itself never depends on the seed.

// Copies the input to scratch; input order is preserved.
std::int64_t kth_smallest(std::span<const std::int64_t> values, std::int64_t rank,
                          std::uint64_t seed = kDefaultSelectSeed);

// Partitions `values` in place; for callers that manage their own scratch.
std::int64_t kth_smallest_inplace(std::span<std::int64_t> values, std::int64_t rank,
                                  std::uint64_t seed = kDefaultSelectSeed);

}  // namespace resvplan
