#pragma once

#include <complex>
#include <istream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace zono {

using cplx = std::complex<double>;

/// Largest index served by bernoulli().
inline constexpr int kBernoulliMax = 64;

/// Exact Bernoulli number B_m with B_1 = -1/2. Requires 0 <= m <= 64.
mpq_class bernoulli(int m);

/// zeta(s) for real s > 1 (Euler-Maclaurin, N = 20, ten correction terms).
double zeta_real(double s);

/// zeta'(s) for real s > 1.
double zeta_deriv_real(double s);

/// zeta(-k) = -B_{k+1}/(k+1), zeta(0) = -1/2. Requires 0 <= k < 64.
mpq_class zeta_neg_int(int k);

/// zeta'(-k) from the differentiated functional equation.
double zeta_deriv_neg_int(int k);

/// Largest |Im s| accepted by the complex routines.
inline constexpr double kMaxZetaHeight = 100.0;

/// zeta(s) for complex s != 1 with |Im s| <= 100. Euler-Maclaurin with
/// N = max(20, ceil(1.3 |Im s|)); the functional equation takes over for
/// Re s < -4.
cplx zeta_complex(cplx s);

/// zeta'(s) from the term-differentiated Euler-Maclaurin series, for
/// s != 1, Re s >= -4, |Im s| <= 100.
cplx zeta_deriv_complex(cplx s);

/// Gamma(s) by the Lanczos approximation (g = 7, nine coefficients) with
/// reflection for Re s < 1/2. Throws DomainError at 0, -1, -2, ...
cplx gamma_complex(cplx s);

/// A non-trivial zero 1/2 + i*imag together with zeta' there.
struct ZetaZero {
  double imag = 0;
  cplx zeta_deriv;
};

/// Newton iteration for zeta from 1/2 + i*t0. The result is checked to
/// satisfy |zeta(1/2 + i t)| < 1e-8, otherwise DomainError.
ZetaZero refine_zero(double t0);

/// The first zero (t ~ 14.1347), located on first use and cached.
const ZetaZero& first_zero();

/// Zeros file: one positive imaginary part per line, '#' starts a comment.
/// Each entry must satisfy |zeta(1/2 + i t)| < 1e-6 and is then refined.
/// Throws ZerosFileError naming the offending line.
std::vector<ZetaZero> parse_zeros(std::istream& in);
std::vector<ZetaZero> load_zeros(const std::string& path);

}  // namespace zono
