#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zono/primitives.hpp"

namespace zono {

/// Dense d-dimensional table of big integers indexed by exponent vectors
/// e <= bound, stored row-major (last coordinate fastest).
///
/// Multiplying the represented series by 1/(1 - x^v) is a cumulative pass
/// along v; multiplying by x^v is a shift. Both are in place.
class CoeffTable {
 public:
  CoeffTable(int dim, IntVec bound);

  /// Delta series: 1 at the origin, 0 elsewhere.
  static CoeffTable unit(int dim, IntVec bound);

  int dim() const { return dim_; }
  const IntVec& bound() const { return bound_; }
  std::size_t size() const { return cells_.size(); }

  const mpz_class& at(std::span<const std::int64_t> e) const { return cells_[index(e)]; }
  mpz_class& at(std::span<const std::int64_t> e) { return cells_[index(e)]; }
  const std::vector<mpz_class>& cells() const { return cells_; }
  std::vector<mpz_class>& cells() { return cells_; }

  std::size_t index(std::span<const std::int64_t> e) const;

  /// T[e] += T[e - v] in increasing index order: T <- T / (1 - x^v).
  void cumulative_pass(std::span<const std::int64_t> v);

  /// T[e] <- T[e - v] (zero when e - v leaves the box): T <- x^v T.
  void shift(std::span<const std::int64_t> v);

  /// T[e] += other[e - v]: T <- T + x^v * other.
  void add_shifted(const CoeffTable& other, std::span<const std::int64_t> v,
                   unsigned long factor = 1);

  mpz_class total() const;

  friend bool operator==(const CoeffTable& a, const CoeffTable& b);

  /// Checkpoint format: {"format": "zonotopes.coeff_table", "version": 1,
  /// "dim", "bound", "cells": [decimal strings, row-major]}.
  std::string to_json() const;
  static CoeffTable from_json(const std::string& text);

 private:
  // Calls f(linear index of e) for every e >= v in increasing order.
  template <typename F>
  void for_each_at_least(std::span<const std::int64_t> v, F&& f) const;

  int dim_;
  IntVec bound_;
  std::vector<std::size_t> strides_;
  std::vector<mpz_class> cells_;
};

}  // namespace zono
