#include "zono/asympt.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include <fmt/format.h>

#include "zono/error.hpp"

namespace zono {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dim(int d, int lo) {
  if (d < lo) throw ArgumentError("dimension must be >= " + std::to_string(lo));
}

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return f;
}

// I_crit as a function of theta: 2 Re sum_j c_j theta^{-rho_j}.
double icrit_theta(int d, double theta, std::span<const ZetaZero> zeros, int m) {
  if (zeros.empty()) throw ArgumentError("icrit needs at least one zero");
  if (m < 1 || static_cast<std::size_t>(m) > zeros.size())
    throw ArgumentError("zero count m must lie in [1, " + std::to_string(zeros.size()) + "]");
  double sum = 0;
  for (int j = 0; j < m; ++j) {
    const cplx rho(0.5, zeros[j].imag);
    sum += 2 * std::real(icrit_residue(d, zeros[j]) * std::exp(-rho * std::log(theta)));
  }
  return sum;
}

std::span<const ZetaZero> first_zero_span() { return {&first_zero(), 1}; }

}  // namespace

RationalPoly pd_poly(int d) {
  require_dim(d, 1);
  // Integer numerators over the common denominator (d-1)!.
  std::vector<mpz_class> num(d, 0);
  std::vector<mpz_class> falling{1};  // coefficients of prod_{k=1}^{delta-1} (X - k)
  mpz_class binom, scale;
  for (int delta = 1; delta <= d; ++delta) {
    if (delta > 1) {
      falling.emplace_back(0);
      for (std::size_t i = falling.size() - 1; i > 0; --i)
        falling[i] = falling[i - 1] - (delta - 1) * falling[i];
      falling[0] *= -(delta - 1);
    }
    mpz_bin_uiui(binom.get_mpz_t(), d, delta);
    scale = binom * (mpz_class(1) << (delta - 1)) * (factorial(d - 1) / factorial(delta - 1));
    for (std::size_t i = 0; i < falling.size(); ++i) num[i] += scale * falling[i];
  }
  const mpz_class denom = factorial(d - 1);
  std::vector<mpq_class> coeffs;
  coeffs.reserve(d);
  for (auto& c : num) {
    mpq_class q(c, denom);
    q.canonicalize();
    coeffs.push_back(std::move(q));
  }
  return RationalPoly(std::move(coeffs));
}

cplx pi_d_apply(int d, const std::function<cplx(cplx)>& f, cplx s) {
  const auto p = pd_poly(d);
  cplx acc = 0;
  for (int delta = 0; delta <= p.degree(); ++delta)
    if (sgn(p.coeff(delta)) != 0) acc += p.coeff(delta).get_d() * f(s - static_cast<double>(delta));
  return acc;
}

mpq_class pi_d_apply_exact(int d, const std::function<mpq_class(int)>& f, int s) {
  const auto p = pd_poly(d);
  mpq_class acc = 0;
  for (int delta = 0; delta <= p.degree(); ++delta)
    if (sgn(p.coeff(delta)) != 0) acc += p.coeff(delta) * f(s - delta);
  return acc;
}

mpq_class pi_d_zeta_at_zero(int d) {
  return pi_d_apply_exact(d, [](int s) { return zeta_neg_int(-s); }, 0);
}

double kappa(int d) {
  require_dim(d, 2);
  return std::ldexp(zeta_real(d + 1.0) / zeta_real(d), d - 1);
}

SaddleData saddle_theta(int d, std::span<const double> n) {
  require_dim(d, 2);
  if (n.size() != static_cast<std::size_t>(d)) throw ArgumentError("n must have d entries");
  double log_prod = 0;
  for (double x : n) {
    if (!(x > 0)) throw ArgumentError("box sides must be positive");
    log_prod += std::log(x);
  }
  const double k = kappa(d);
  SaddleData out;
  double theta_prod = 1;
  for (double x : n) {
    out.theta.push_back(std::exp((std::log(k) + log_prod) / (d + 1)) / x);
    theta_prod *= out.theta.back();
  }
  for (double t : out.theta) out.a_leading.push_back(k / (t * theta_prod));
  out.det_b_leading = (d + 1) * std::pow(k, d) * std::pow(theta_prod, -(d + 2));
  return out;
}

double saddle_theta_cube(int d, double n) {
  if (!(n > 0)) throw ArgumentError("n must be positive");
  return std::pow(kappa(d) / n, 1.0 / (d + 1));
}

std::vector<QTerm> q_poly(int d) {
  require_dim(d, 2);
  const double k = kappa(d);
  std::vector<QTerm> terms;
  terms.push_back({d, (d + 1) * std::pow(k, 1.0 / (d + 1)),
                   fmt::format("{} * kappa_{}^(1/{})", d + 1, d, d + 1)});
  const auto p = pd_poly(d);
  for (int delta = d - 1; delta >= 2; --delta) {
    const mpq_class& pc = p.coeff(delta - 1);
    if (sgn(pc) == 0) continue;
    const double c = pc.get_d() * zeta_real(delta + 1.0) * factorial(delta - 1).get_d() /
                     zeta_real(delta) * std::pow(k, -static_cast<double>(delta) / (d + 1));
    terms.push_back({delta, c,
                     fmt::format("{} * zeta({}) * {}! / zeta({}) * kappa_{}^(-{}/{})", pc.get_str(),
                                 delta + 1, delta - 1, delta, d, delta, d + 1)});
  }
  return terms;
}

double q_value(int d, double x) {
  double acc = 0;
  for (const auto& t : q_poly(d)) acc += t.coeff * std::pow(x, t.degree);
  return acc;
}

mpq_class beta_exact(int d) {
  require_dim(d, 2);
  mpq_class b = -(mpq_class(d * (d + 2)) + 4 * pi_d_zeta_at_zero(d)) / (2 * (d + 1));
  b.canonicalize();
  return b;
}

double ln_alpha(int d) {
  require_dim(d, 2);
  const double pi0 = pi_d_zeta_at_zero(d).get_d();
  const double ln2pi = std::log(2 * kPi);
  const auto p = pd_poly(d);
  double pi_log = 0;  // Pi_d[ln(2pi) zeta - zeta'](0)
  for (int delta = 0; delta <= p.degree(); ++delta) {
    if (sgn(p.coeff(delta)) == 0) continue;
    pi_log += p.coeff(delta).get_d() *
              (ln2pi * zeta_neg_int(delta).get_d() - zeta_deriv_neg_int(delta));
  }
  return (d / (2.0 * (d + 1)) + 2 * pi0 / (d + 1)) * std::log(kappa(d)) + 2 * pi_log -
         0.5 * d * ln2pi - 0.5 * std::log(d + 1.0);
}

cplx icrit_residue(int d, const ZetaZero& zero) {
  require_dim(d, 2);
  const cplx rho(0.5, zero.imag);
  const cplx pi_zeta = pi_d_apply(d, [](cplx s) { return zeta_complex(s); }, rho);
  return pi_zeta * zeta_complex(rho + 1.0) * gamma_complex(rho) / zero.zeta_deriv;
}

double icrit(int d, double n, std::span<const ZetaZero> zeros, int m) {
  return icrit_theta(d, saddle_theta_cube(d, n), zeros, m);
}

double icrit(int d, double n) { return icrit(d, n, first_zero_span(), 1); }

IcritForm icrit_form(int d) {
  require_dim(d, 2);
  const double k = kappa(d);
  const double envelope = 1.0 / (2.0 * (d + 1));
  auto g = [&](double u) { return icrit(d, std::exp(u)) * std::exp(-envelope * u); };
  auto crossing = [&](double lo, double hi) {
    double glo = g(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double gm = g(mid);
      if ((gm < 0) == (glo < 0)) {
        lo = mid;
        glo = gm;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  };
  std::vector<double> zeros;
  const double step = 0.01;
  double u = std::log(k), prev = g(u);
  while (zeros.size() < 2) {
    const double cur = g(u + step);
    if ((cur < 0) != (prev < 0)) zeros.push_back(crossing(u, u + step));
    u += step;
    prev = cur;
  }
  IcritForm out;
  out.frequency = kPi / (zeros[1] - zeros[0]);
  out.scale = 1.0 / k;
  // Phase f ln(scale n) = 2 pi gives A, phase 2 pi + pi/2 gives B.
  const double n_cos = std::exp(2 * kPi / out.frequency) / out.scale;
  const double n_sin = std::exp(2.5 * kPi / out.frequency) / out.scale;
  out.a = icrit(d, n_cos) * std::pow(n_cos, -envelope);
  out.b = icrit(d, n_sin) * std::pow(n_sin, -envelope);
  return out;
}

AsympEstimate estimate(int d, double n, std::span<const ZetaZero> zeros, int m) {
  require_dim(d, 2);
  if (!(n >= 1)) throw ArgumentError("n must be >= 1");
  AsympEstimate e;
  e.dim = d;
  e.n = n;
  e.ln_alpha = ln_alpha(d);
  e.beta = beta_exact(d);
  e.beta_ln_n = e.beta.get_d() * std::log(n);
  e.q_value = q_value(d, std::pow(n, 1.0 / (d + 1)));
  e.icrit = icrit(d, n, zeros, m);
  e.ln_z_hat = e.ln_alpha + e.beta_ln_n + e.q_value + e.icrit;
  return e;
}

AsympEstimate estimate(int d, double n) { return estimate(d, n, first_zero_span(), 1); }

double ln_zon_expansion(int d, double theta, std::span<const ZetaZero> zeros, int m) {
  require_dim(d, 2);
  if (!(theta > 0)) throw ArgumentError("theta must be positive");
  const auto p = pd_poly(d);
  double sum = 0;
  for (int delta = 1; delta <= d - 1; ++delta) {
    if (sgn(p.coeff(delta)) == 0) continue;
    sum += p.coeff(delta).get_d() * zeta_real(delta + 2.0) * factorial(delta).get_d() /
           (zeta_real(delta + 1.0) * std::pow(theta, delta + 1));
  }
  const double ln2pi = std::log(2 * kPi);
  double pi_log = 0;
  for (int delta = 0; delta <= p.degree(); ++delta) {
    if (sgn(p.coeff(delta)) == 0) continue;
    pi_log += p.coeff(delta).get_d() *
              (ln2pi * zeta_neg_int(delta).get_d() - zeta_deriv_neg_int(delta));
  }
  const double c = 2 * pi_log + 2 * pi_d_zeta_at_zero(d).get_d() * std::log(theta);
  return sum + icrit_theta(d, theta, zeros, m) + c;
}

double saddle_form_estimate(int d, double n, std::span<const ZetaZero> zeros, int m) {
  const std::vector<double> box(d, n);
  const auto saddle = saddle_theta(d, box);
  const double theta = saddle.theta[0];
  return ln_zon_expansion(d, theta, zeros, m) + d * n * theta -
         0.5 * (d * std::log(2 * kPi) + std::log(saddle.det_b_leading));
}

double saddle_form_estimate(int d, double n) {
  return saddle_form_estimate(d, n, first_zero_span(), 1);
}

double mean_diameter_asympt(int d, double n) {
  require_dim(d, 2);
  return std::pow(kappa(d), 1.0 / (d + 1)) / zeta_real(d + 1.0) * std::pow(n, d / (d + 1.0));
}

OccurrenceAsympt mean_occurrence_asympt(int d, double n, std::span<const std::int64_t> v0) {
  require_dim(d, 2);
  if (v0.size() != static_cast<std::size_t>(d)) throw ArgumentError("v0 must have d entries");
  std::int64_t l1 = 0;
  IntVec fold(d);
  for (int i = 0; i < d; ++i) {
    fold[i] = std::abs(v0[i]);
    l1 += fold[i];
  }
  if (!is_primitive(fold, d)) throw ArgumentError("v0 is not primitive");
  const double mean = 1.0 / (saddle_theta_cube(d, n) * static_cast<double>(l1));
  return {mean, mean * mean};
}

}  // namespace zono
