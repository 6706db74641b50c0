#include "resvplan/selection.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace resvplan {

namespace {

// splitmix64: tiny seedable generator, much cheaper to set up per call
// than a mersenne twister.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }
};

}  // namespace

std::int64_t kth_smallest_inplace(std::span<std::int64_t> values, std::int64_t rank,
                                  std::uint64_t seed) {
  const std::int64_t n = static_cast<std::int64_t>(values.size());
  if (rank < 1 || rank > n) {
    throw std::invalid_argument("selection rank outside 1.." + std::to_string(n));
  }

  SplitMix64 rng{seed ^ static_cast<std::uint64_t>(n)};
  std::size_t lo = 0;
  std::size_t hi = static_cast<std::size_t>(n) - 1;
  std::size_t target = static_cast<std::size_t>(rank - 1);

  while (lo < hi) {
    const std::size_t pivot_at = lo + rng.below(hi - lo + 1);
    const std::int64_t pivot = values[pivot_at];
    std::swap(values[pivot_at], values[hi]);
    std::size_t store = lo;
    for (std::size_t i = lo; i < hi; ++i) {
      if (values[i] < pivot) std::swap(values[i], values[store++]);
    }
    std::swap(values[store], values[hi]);

    if (store == target) return values[store];
    if (store > target) {
      hi = store - 1;
    } else {
      lo = store + 1;
    }
  }
  return values[target];
}

std::int64_t kth_smallest(std::span<const std::int64_t> values, std::int64_t rank,
                          std::uint64_t seed) {
  std::vector<std::int64_t> scratch(values.begin(), values.end());
  return kth_smallest_inplace(scratch, rank, seed);
}

}  // namespace resvplan
