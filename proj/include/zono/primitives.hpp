#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace zono {

using IntVec = std::vector<std::int64_t>;

/// A primitive lattice direction in the closed positive orthant.
///
/// `weight` is the number of sign classes the direction stands for: the
/// 2^(nonzero_count - 1) sign patterns modulo a global sign flip.
struct PrimVec {
  IntVec coords;
  int nonzero_count = 0;
  std::int64_t weight = 0;

  friend bool operator==(const PrimVec&, const PrimVec&) = default;
};

/// Builds a PrimVec from coordinates; throws ArgumentError unless the
/// vector is nonnegative and primitive.
PrimVec make_primvec(std::span<const std::int64_t> coords);

/// True iff v is nonzero with coprime entries. v must have `dim` nonnegative
/// entries.
bool is_primitive(std::span<const std::int64_t> v, int dim);

/// Streams every primitive vector v <= bound (componentwise) in strictly
/// increasing lexicographic order.
void for_each_primitive(int dim, std::span<const std::int64_t> bound,
                        const std::function<void(const PrimVec&)>& visit);

/// As above, restricted to vectors with coordinate sum at most `max_l1`.
void for_each_primitive_l1(int dim, std::int64_t max_l1,
                           const std::function<void(const PrimVec&)>& visit);

/// Materialized version of for_each_primitive.
std::vector<PrimVec> enumerate_primitive(int dim, std::span<const std::int64_t> bound);

/// Number of primitive vectors <= bound computed with a Moebius sieve over
/// the common divisor; independent of the enumeration.
mpz_class count_primitive_moebius(int dim, std::span<const std::int64_t> bound);

/// The weight-many sign classes of p: coordinates after the first nonzero
/// one are negated according to the bits of the pattern index, so the first
/// nonzero coordinate stays positive. Ordered by pattern index.
std::vector<IntVec> sign_classes(const PrimVec& p);

/// Moebius function for 1 <= k <= limit.
std::vector<int> moebius_table(std::int64_t limit);

}  // namespace zono
