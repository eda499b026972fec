#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "zono/coeff_table.hpp"
#include "zono/primitives.hpp"

namespace zono {

/// Sums needed for the mean and variance of a zonotope parameter over the
/// zonotopes counted by one coefficient.
struct MomentPair {
  mpz_class count;      // number of zonotopes
  mpz_class weighted;   // sum of the parameter
  mpz_class weighted2;  // sum of the squared parameter (u d/du u d/du marking)

  mpq_class mean() const;
  mpq_class variance() const;
};

/// Memory budget for the dense DP, in bytes. Defaults to 2 GiB; the
/// ZONOTOPES_MEMORY_BUDGET_MB environment variable overrides it.
std::size_t memory_budget_bytes();

/// Rough footprint of `tables` dense tables over the box `bound`.
std::size_t estimate_table_bytes(int dim, std::span<const std::int64_t> bound, int tables);

/// Coefficient table of Zon_d truncated to the box `bound`.
CoeffTable zon_table(int dim, std::span<const std::int64_t> bound);

/// [x^n] Zon_d(x), the number of lattice zonotopes whose bounding box is n.
mpz_class zon_coefficient(int dim, std::span<const std::int64_t> n);

/// Sum of [x^m] Zon_d over all m <= n*1.
mpz_class zon_cumulative(int dim, std::int64_t n);

/// Number of generator directions (the graph diameter) over the zonotopes
/// at n*1.
MomentPair diameter_moments(int dim, std::int64_t n);
mpq_class diameter_moment(int dim, std::int64_t n);

/// Multiplicity of one sign class. `v0_class` is a signed primitive vector
/// (any sign pattern); its fold |v0_class| must be <= n*1.
MomentPair occurrence_moments(int dim, std::int64_t n, std::span<const std::int64_t> v0_class);

/// Natural log of a positive big integer.
double log_big(const mpz_class& z);

}  // namespace zono
