#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zono/primitives.hpp"
#include "zono/rational_poly.hpp"
#include "zono/special.hpp"

namespace zono {

/// P_d(X) = sum_{delta=1}^{d} C(d,delta) 2^{delta-1} prod_{k=1}^{delta-1} (X-k) / (delta-1)!
RationalPoly pd_poly(int d);

/// Pi_d[f](s) = sum_delta p_{d,delta} f(s - delta).
cplx pi_d_apply(int d, const std::function<cplx(cplx)>& f, cplx s);

/// Exact variant for integer arguments: sum_delta p_{d,delta} f(s - delta).
mpq_class pi_d_apply_exact(int d, const std::function<mpq_class(int)>& f, int s);

/// Pi_d[zeta](0), exact.
mpq_class pi_d_zeta_at_zero(int d);

/// kappa_d = 2^{d-1} zeta(d+1) / zeta(d).
double kappa(int d);

/// Saddle point of the coefficient integral and the leading forms of the
/// mean vector a and the covariance matrix B there.
struct SaddleData {
  std::vector<double> theta;
  std::vector<double> a_leading;  // kappa / (theta_i prod theta)
  double det_b_leading = 0;       // (d+1) kappa^d (prod theta)^{-(d+2)}
};

SaddleData saddle_theta(int d, std::span<const double> n);

/// theta~_n = (kappa_d / n)^{1/(d+1)} for the cube.
double saddle_theta_cube(int d, double n);

/// One monomial of Q_d with a readable factorization of its coefficient.
struct QTerm {
  int degree = 0;
  double coeff = 0;
  std::string symbolic;
};

/// Terms of Q_d, degrees strictly decreasing (d, then d-1 .. 2).
std::vector<QTerm> q_poly(int d);

/// Q_d evaluated at X.
double q_value(int d, double x);

/// beta_d = -(d(d+2) + 4 Pi_d[zeta](0)) / (2(d+1)).
mpq_class beta_exact(int d);

/// ln alpha_d.
double ln_alpha(int d);

/// Residue sum over the first m zeros, folded into twice the real part:
/// 2 Re sum_j Pi_d[zeta](rho_j) zeta(rho_j+1) Gamma(rho_j) / zeta'(rho_j) (n/kappa_d)^{rho_j/(d+1)}.
double icrit(int d, double n, std::span<const ZetaZero> zeros, int m = 1);
double icrit(int d, double n);  // first zero only

/// Residue factor c_j = Pi_d[zeta](rho) zeta(rho+1) Gamma(rho) / zeta'(rho).
cplx icrit_residue(int d, const ZetaZero& zero);

/// I_crit written as n^{1/(2(d+1))} (A cos(f ln(s n)) + B sin(f ln(s n))).
struct IcritForm {
  double a = 0;
  double b = 0;
  double frequency = 0;
  double scale = 0;
};

/// Reads the oscillation off icrit(d, ., first zero): the frequency from
/// successive sign changes of icrit(n) n^{-1/(2(d+1))} in ln n, the scale
/// from the saddle parametrization (1/kappa_d), then A and B from the values
/// at phases 0 and pi/2.
IcritForm icrit_form(int d);

/// The decomposed estimate of ln z_d(n 1).
struct AsympEstimate {
  int dim = 0;
  double n = 0;
  double ln_alpha = 0;
  mpq_class beta;
  double beta_ln_n = 0;
  double q_value = 0;
  double icrit = 0;
  double ln_z_hat = 0;  // ln_alpha + beta_ln_n + q_value + icrit
};

AsympEstimate estimate(int d, double n, std::span<const ZetaZero> zeros, int m = 1);
AsympEstimate estimate(int d, double n);

/// ln of the saddle-point form Zon_d(e^{-theta}) e^{d n theta} / sqrt((2pi)^d det B)
/// at theta = theta~_n, with ln Zon_d taken from its expansion in 1/theta.
double saddle_form_estimate(int d, double n, std::span<const ZetaZero> zeros, int m = 1);
double saddle_form_estimate(int d, double n);

/// Expansion of ln Zon_d(e^{-theta}) in 1/theta, with I_crit over m zeros.
double ln_zon_expansion(int d, double theta, std::span<const ZetaZero> zeros, int m = 1);

/// Leading mean number of generator directions, kappa^{1/(d+1)}/zeta(d+1) n^{d/(d+1)}.
double mean_diameter_asympt(int d, double n);

struct OccurrenceAsympt {
  double mean = 0;
  double variance = 0;
};

/// Leading mean 1/(theta~_n |v0|_1) and variance (its square).
OccurrenceAsympt mean_occurrence_asympt(int d, double n, std::span<const std::int64_t> v0);

}  // namespace zono
