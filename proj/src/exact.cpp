#include "zono/exact.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "zono/error.hpp"

namespace zono {

namespace {

IntVec cube(int dim, std::int64_t n) {
  if (dim < 1) throw ArgumentError("dimension must be >= 1");
  if (n < 0) throw ArgumentError("n must be >= 0");
  return IntVec(dim, n);
}

void guard_memory(int dim, std::span<const std::int64_t> bound, int tables) {
  const auto need = estimate_table_bytes(dim, bound, tables);
  const auto budget = memory_budget_bytes();
  if (need > budget)
    throw ResourceError("exact table needs about " + std::to_string(need >> 20) +
                        " MiB, over the " + std::to_string(budget >> 20) +
                        " MiB budget (set ZONOTOPES_MEMORY_BUDGET_MB to raise it)");
}

// Visits every sign class of every primitive vector <= bound, once per class.
template <typename F>
void for_each_class(int dim, std::span<const std::int64_t> bound, F&& f) {
  for_each_primitive(dim, bound, [&](const PrimVec& p) {
    for (std::int64_t c = 0; c < p.weight; ++c) f(p.coords);
  });
}

}  // namespace

mpq_class MomentPair::mean() const {
  if (count == 0) throw DomainError("moment of an empty class");
  mpq_class q(weighted, count);
  q.canonicalize();
  return q;
}

mpq_class MomentPair::variance() const {
  if (count == 0) throw DomainError("moment of an empty class");
  mpq_class second(weighted2, count);
  second.canonicalize();
  const mpq_class m = mean();
  return second - m * m;
}

std::size_t memory_budget_bytes() {
  if (const char* env = std::getenv("ZONOTOPES_MEMORY_BUDGET_MB")) {
    char* end = nullptr;
    const unsigned long long mb = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && mb > 0) return static_cast<std::size_t>(mb) << 20;
  }
  return std::size_t{2} << 30;
}

std::size_t estimate_table_bytes(int dim, std::span<const std::int64_t> bound, int tables) {
  double cells = 1;
  std::int64_t top = 0;
  for (auto b : bound) {
    cells *= static_cast<double>(b + 1);
    top = std::max(top, b);
  }
  // ln z_d(n) < 2 (d+1) n^{d/(d+1)} since kappa_d^{1/(d+1)} < 2.
  const double bits =
      2.0 * (dim + 1) * std::pow(static_cast<double>(top), dim / (dim + 1.0)) / std::log(2.0) + 64;
  const double per_cell = sizeof(mpz_class) + 16 + 8 * std::ceil(bits / 64);
  const double total = cells * per_cell * tables;
  if (total > 1e18) return static_cast<std::size_t>(1e18);
  return static_cast<std::size_t>(total);
}

CoeffTable zon_table(int dim, std::span<const std::int64_t> bound) {
  IntVec b(bound.begin(), bound.end());
  guard_memory(dim, bound, 1);
  CoeffTable t = CoeffTable::unit(dim, b);
  for_each_class(dim, bound, [&](const IntVec& v) { t.cumulative_pass(v); });
  return t;
}

mpz_class zon_coefficient(int dim, std::span<const std::int64_t> n) {
  if (n.size() != static_cast<std::size_t>(dim))
    throw ArgumentError("n has " + std::to_string(n.size()) + " entries, expected " +
                        std::to_string(dim));
  return zon_table(dim, n).at(n);
}

mpz_class zon_cumulative(int dim, std::int64_t n) {
  const auto bound = cube(dim, n);
  return zon_table(dim, bound).total();
}

MomentPair diameter_moments(int dim, std::int64_t n) {
  const auto bound = cube(dim, n);
  guard_memory(dim, bound, 3);
  // z: Zon_d, u: d/du Zon_gen at u=1, w: d/du u d/du Zon_gen at u=1.
  // Each sign class contributes the factor 1 + u x^v / (1 - x^v).
  CoeffTable z = CoeffTable::unit(dim, bound);
  CoeffTable u(dim, bound);
  CoeffTable w(dim, bound);
  for_each_class(dim, bound, [&](const IntVec& v) {
    z.cumulative_pass(v);
    u.cumulative_pass(v);
    w.cumulative_pass(v);
    w.add_shifted(z, v);
    w.add_shifted(u, v, 2);
    u.add_shifted(z, v);
  });
  return {z.at(bound), u.at(bound), w.at(bound)};
}

mpq_class diameter_moment(int dim, std::int64_t n) { return diameter_moments(dim, n).mean(); }

MomentPair occurrence_moments(int dim, std::int64_t n, std::span<const std::int64_t> v0_class) {
  const auto bound = cube(dim, n);
  if (v0_class.size() != static_cast<std::size_t>(dim))
    throw ArgumentError("v0 has " + std::to_string(v0_class.size()) + " entries, expected " +
                        std::to_string(dim));
  IntVec fold(dim);
  for (int i = 0; i < dim; ++i) fold[i] = std::abs(v0_class[i]);
  if (!is_primitive(fold, dim)) throw ArgumentError("v0 is not primitive");
  for (int i = 0; i < dim; ++i)
    if (fold[i] > n) throw ArgumentError("v0 exceeds the box");
  guard_memory(dim, bound, 3);

  CoeffTable z = zon_table(dim, bound);
  // first:  Zon * x^v / (1 - x^v)            -> sum of omega
  // second: Zon * x^v (1 + x^v) / (1 - x^v)^2 -> sum of omega^2
  CoeffTable first(dim, bound);
  first.add_shifted(z, fold);
  CoeffTable second = first;
  second.add_shifted(first, fold);
  first.cumulative_pass(fold);
  second.cumulative_pass(fold);
  second.cumulative_pass(fold);
  return {z.at(bound), first.at(bound), second.at(bound)};
}

double log_big(const mpz_class& z) {
  if (sgn(z) <= 0) throw DomainError("log of a nonpositive integer");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace zono
