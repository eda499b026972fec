#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace zono {

/// Polynomial with exact rational coefficients; coeffs()[k] multiplies X^k.
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has no coefficients and degree -1.
class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<mpq_class> coeffs);

  static RationalPoly constant(const mpq_class& c);
  static RationalPoly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }
  /// Coefficient of X^k, zero beyond the degree.
  mpq_class coeff(int k) const;

  mpq_class operator()(const mpq_class& x) const;
  double operator()(double x) const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const mpq_class& c);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const mpq_class& c) { return a *= c; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// e.g. "4/3*X^3 + 8/3*X"
  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> coeffs_;
};

}  // namespace zono
