#include "zono/primitives.hpp"

#include <numeric>
#include <string>

#include "zono/error.hpp"

namespace zono {

namespace {

void check_dim(int dim) {
  if (dim < 1) throw ArgumentError("dimension must be >= 1, got " + std::to_string(dim));
}

void check_bound(int dim, std::span<const std::int64_t> bound) {
  check_dim(dim);
  if (bound.size() != static_cast<std::size_t>(dim))
    throw ArgumentError("bound has " + std::to_string(bound.size()) + " entries, expected " +
                        std::to_string(dim));
  for (auto b : bound)
    if (b < 0) throw ArgumentError("bound entries must be >= 0");
}

PrimVec classify(const IntVec& coords) {
  PrimVec p;
  p.coords = coords;
  for (auto c : coords)
    if (c != 0) ++p.nonzero_count;
  p.weight = std::int64_t{1} << (p.nonzero_count - 1);
  return p;
}

std::int64_t gcd_of(std::span<const std::int64_t> v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g;
}

// Lexicographic odometer over 0..limit(i, prefix) with coordinate 0 most
// significant. `limit` returns the inclusive upper value of coordinate i
// given the coordinates before it.
template <typename Limit, typename Visit>
void odometer(int dim, Limit&& limit, Visit&& visit) {
  IntVec v(dim, 0);
  std::vector<std::int64_t> hi(dim);
  for (int i = 0; i < dim; ++i) hi[i] = limit(i, v);
  while (true) {
    visit(v);
    int i = dim - 1;
    while (i >= 0 && v[i] == hi[i]) --i;
    if (i < 0) return;
    ++v[i];
    for (int j = i + 1; j < dim; ++j) {
      v[j] = 0;
      hi[j] = limit(j, v);
    }
  }
}

}  // namespace

bool is_primitive(std::span<const std::int64_t> v, int dim) {
  check_dim(dim);
  if (v.size() != static_cast<std::size_t>(dim))
    throw ArgumentError("vector has " + std::to_string(v.size()) + " entries, expected " +
                        std::to_string(dim));
  for (auto x : v)
    if (x < 0) throw ArgumentError("vector entries must be >= 0");
  return gcd_of(v) == 1;
}

PrimVec make_primvec(std::span<const std::int64_t> coords) {
  if (!is_primitive(coords, static_cast<int>(coords.size())))
    throw ArgumentError("vector is not primitive");
  return classify(IntVec(coords.begin(), coords.end()));
}

void for_each_primitive(int dim, std::span<const std::int64_t> bound,
                        const std::function<void(const PrimVec&)>& visit) {
  check_bound(dim, bound);
  odometer(
      dim, [&](int i, const IntVec&) { return bound[i]; },
      [&](const IntVec& v) {
        if (gcd_of(v) == 1) visit(classify(v));
      });
}

void for_each_primitive_l1(int dim, std::int64_t max_l1,
                           const std::function<void(const PrimVec&)>& visit) {
  check_dim(dim);
  if (max_l1 < 0) throw ArgumentError("l1 cap must be >= 0");
  odometer(
      dim,
      [&](int i, const IntVec& v) {
        std::int64_t used = 0;
        for (int j = 0; j < i; ++j) used += v[j];
        return max_l1 - used;
      },
      [&](const IntVec& v) {
        if (gcd_of(v) == 1) visit(classify(v));
      });
}

std::vector<PrimVec> enumerate_primitive(int dim, std::span<const std::int64_t> bound) {
  std::vector<PrimVec> out;
  for_each_primitive(dim, bound, [&](const PrimVec& p) { out.push_back(p); });
  return out;
}

std::vector<int> moebius_table(std::int64_t limit) {
  std::vector<int> mu(static_cast<std::size_t>(std::max<std::int64_t>(limit, 1)) + 1, 1);
  std::vector<bool> composite(mu.size(), false);
  mu[0] = 0;
  for (std::int64_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    for (std::int64_t m = p; m <= limit; m += p) {
      if (m > p) composite[m] = true;
      mu[m] = -mu[m];
    }
    for (std::int64_t m = p * p; m <= limit; m += p * p) mu[m] = 0;
  }
  return mu;
}

mpz_class count_primitive_moebius(int dim, std::span<const std::int64_t> bound) {
  check_bound(dim, bound);
  std::int64_t top = 0;
  for (auto b : bound) top = std::max(top, b);
  const auto mu = moebius_table(top);
  mpz_class total = 0;
  for (std::int64_t k = 1; k <= top; ++k) {
    if (mu[k] == 0) continue;
    // nonzero vectors all of whose entries are multiples of k
    mpz_class cells = 1;
    for (auto b : bound) cells *= static_cast<unsigned long>(b / k + 1);
    cells -= 1;
    if (mu[k] > 0)
      total += cells;
    else
      total -= cells;
  }
  return total;
}

std::vector<IntVec> sign_classes(const PrimVec& p) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < p.coords.size(); ++i)
    if (p.coords[i] != 0) nz.push_back(i);
  std::vector<IntVec> out;
  out.reserve(static_cast<std::size_t>(p.weight));
  for (std::int64_t pattern = 0; pattern < p.weight; ++pattern) {
    IntVec s = p.coords;
    for (std::size_t j = 1; j < nz.size(); ++j)
      if (pattern >> (j - 1) & 1) s[nz[j]] = -s[nz[j]];
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace zono
