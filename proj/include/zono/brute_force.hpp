#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "zono/primitives.hpp"

namespace zono {

/// Exhaustive tallies for one endpoint, produced by depth-first enumeration
/// of multisets of signed primitive generators. Small instances only.
struct BruteForceTally {
  std::uint64_t count = 0;
  std::uint64_t direction_sum = 0;     // sum over zonotopes of #directions
  std::uint64_t direction_sq_sum = 0;  // sum of #directions squared
  // Signed class (first nonzero coordinate positive) -> (sum omega, sum omega^2).
  std::map<IntVec, std::pair<std::uint64_t, std::uint64_t>> occurrences;
};

/// Default cap on visited multisets.
inline constexpr std::uint64_t kBruteForceNodeLimit = 10'000'000;

/// Every signed primitive class whose fold is <= bound, canonical sign
/// (first nonzero coordinate positive), in lexicographic order of the fold.
std::vector<IntVec> signed_classes(int dim, std::span<const std::int64_t> bound);

/// Tallies for every endpoint e <= bound, row-major (last coordinate fastest).
/// Throws GuardExceeded when more than `node_limit` multisets would be visited.
std::vector<BruteForceTally> brute_force_table(int dim, std::span<const std::int64_t> bound,
                                               std::uint64_t node_limit = kBruteForceNodeLimit);

/// Tallies at the single endpoint n.
BruteForceTally brute_force_count(int dim, std::span<const std::int64_t> n,
                                  std::uint64_t node_limit = kBruteForceNodeLimit);

}  // namespace zono
