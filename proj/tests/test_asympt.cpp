#include "doctest.h"

#include <cmath>
#include <numbers>

#include "zono/asympt.hpp"
#include "zono/error.hpp"
#include "zono/sampler.hpp"

using namespace zono;

// Reference values: tests/oracles/reference_values.py (mpmath, 40 digits).

namespace {

constexpr double kPi = std::numbers::pi;

struct DimRef {
  int d;
  double kappa, ln_alpha, q_lead, a, b, icrit_1e4, icrit_1e6;
};

constexpr DimRef kRefs[] = {
    {2, 1.4615259388028769975, -2.2537952017490025773, 3.40452685214907111,
     1.1309576364528524994e-10, -1.799467858397527761e-9, 5.4155620506053855335e-9,
     -7.1909888361527036009e-9},
    {3, 3.6015707105587518615, -3.1679976945909235983, 5.5103981265062217991,
     -4.4774622966805425397e-10, -5.3495308116833610215e-9, -2.9117642979277609928e-9,
     -1.1556978057016202991e-8},
    {4, 7.6644589922578793095, -3.7459038702643126338, 7.5139154749985163745,
     -2.3568039726055420474e-9, -1.0668557115658555037e-8, -2.7363304464034646566e-8,
     -3.7549876897888784189e-8},
    {5, 15.697804317621523388, -4.6098475563001580017, 9.4941859968561950814,
     -6.1641737878061476963e-9, -1.7483952576958120813e-8, -6.2888470211764497351e-9,
     -5.5921023112290380623e-8},
};

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

double determinant(std::vector<std::vector<double>> m) {
  const std::size_t n = m.size();
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const double f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace

TEST_CASE("P_d from the definition") {
  CHECK(pd_poly(1) == RationalPoly::constant(1));
  CHECK(pd_poly(2) == RationalPoly({0, 2}));
  // The defining sum gives 2X^2 + 1 for d = 3 (leading coefficient 2^{d-1}/(d-1)! = 2).
  CHECK(pd_poly(3) == RationalPoly({1, 0, 2}));
  CHECK(pd_poly(4) == RationalPoly({0, mpq_class(8, 3), 0, mpq_class(4, 3)}));
  CHECK(pd_poly(5) == RationalPoly({1, 0, mpq_class(10, 3), 0, mpq_class(2, 3)}));
}

TEST_CASE("P_d recursion, leading coefficient and parity") {
  for (int d = 1; d <= 12; ++d) {
    const RationalPoly step = RationalPoly::x() * (mpq_class(2) / (d + 1));
    CHECK(pd_poly(d + 2) == step * pd_poly(d + 1) + pd_poly(d));
  }
  mpz_class fact = 1;
  for (int d = 1; d <= 14; ++d) {
    if (d > 1) fact *= d - 1;
    const auto p = pd_poly(d);
    CHECK(p.degree() == d - 1);
    CHECK(p.coeff(d - 1) == mpq_class(mpz_class(1) << (d - 1)) / fact);
    for (int k = 0; k < d; ++k)
      if ((k - (d - 1)) % 2 != 0) CHECK(p.coeff(k) == 0);
  }
  CHECK(pd_poly(2).coeff(0) == 0);
  CHECK(pd_poly(4).coeff(0) == 0);
  CHECK(pd_poly(1).coeff(0) == 1);
  CHECK(pd_poly(3).coeff(0) == 1);
}

TEST_CASE("RationalPoly basics") {
  const RationalPoly p({mpq_class(1, 2), 0, 3});
  CHECK(p.degree() == 2);
  CHECK(p(mpq_class(2)) == mpq_class(25, 2));
  CHECK(p(2.0) == doctest::Approx(12.5));
  CHECK((p + p * mpq_class(-1)).degree() == -1);
  CHECK(p.to_string() == "3*X^2 + 1/2");
  CHECK(RationalPoly({0, -1, 1}).to_string() == "X^2 - X");
}

TEST_CASE("Pi_d operator") {
  auto zeta_q = [](int s) { return zeta_neg_int(-s); };
  CHECK(pi_d_apply_exact(2, zeta_q, 0) == mpq_class(-1, 6));
  CHECK(pi_d_apply_exact(3, zeta_q, 0) == mpq_class(-1, 2));
  auto zc = [](cplx s) { return zeta_complex(s); };
  CHECK(std::abs(pi_d_apply(2, zc, 0.0) + 1.0 / 6) < 1e-11);
  CHECK(std::abs(pi_d_apply(3, zc, 0.0) + 0.5) < 1e-11);
  const cplx s(0.3, 4.0);
  CHECK(std::abs(pi_d_apply(1, zc, s) - zeta_complex(s)) < 1e-15);
}

TEST_CASE("kappa") {
  for (const auto& r : kRefs) CHECK(rel(kappa(r.d), r.kappa) < 1e-14);
  double prev = 0;
  for (int d = 2; d <= 30; ++d) {
    const double root = std::pow(kappa(d), 1.0 / (d + 1));
    CHECK(root > prev);
    CHECK(root < 2);
    prev = root;
  }
  CHECK(prev > 1.9);
}

TEST_CASE("saddle point") {
  const std::vector<double> cube{1000, 1000};
  const auto s = saddle_theta(2, cube);
  CHECK(rel(s.theta[0], 0.113484228404969037) < 1e-13);
  CHECK(s.theta[0] == s.theta[1]);

  const std::vector<double> big{1e6, 1e6};
  const auto sb = saddle_theta(2, big);
  for (int i = 0; i < 2; ++i) CHECK(std::abs(sb.a_leading[i] / 1e6 - 1) < 1e-3);

  const std::vector<double> rect{100, 400};
  const auto sr = saddle_theta(2, rect);
  CHECK(rel(sr.theta[0] / sr.theta[1], 4.0) < 1e-14);
  for (int i = 0; i < 2; ++i) CHECK(rel(sr.a_leading[i], rect[i]) < 1e-12);

  // det B against the determinant of the leading covariance matrix.
  const std::vector<double> box{50, 80, 120};
  const auto s3 = saddle_theta(3, box);
  const double k = kappa(3);
  const double prod = s3.theta[0] * s3.theta[1] * s3.theta[2];
  std::vector<std::vector<double>> m(3, std::vector<double>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = (i == j ? 2.0 : 1.0) * k / (s3.theta[i] * s3.theta[j] * prod);
  CHECK(rel(s3.det_b_leading, determinant(m)) < 1e-12);

  CHECK_THROWS_AS(saddle_theta(2, std::vector<double>{0, 5}), ArgumentError);
  CHECK_THROWS_AS(saddle_theta(2, std::vector<double>{5}), ArgumentError);
}

TEST_CASE("Q_d") {
  const double z3 = zeta_real(3);
  const auto q2 = q_poly(2);
  REQUIRE(q2.size() == 1);
  CHECK(q2[0].degree == 2);
  CHECK(rel(q2[0].coeff, std::cbrt(4.0) * std::pow(3.0, 4.0 / 3) * std::cbrt(z3) /
                             std::pow(kPi, 2.0 / 3)) < 1e-12);
  for (const auto& r : kRefs) CHECK(rel(q_poly(r.d)[0].coeff, r.q_lead) < 1e-13);
  CHECK(q_poly(3).size() == 1);
  const auto q4 = q_poly(4);
  REQUIRE(q4.size() == 2);
  CHECK(q4[1].degree == 2);
  CHECK(rel(q4[1].coeff, 0.86288448873155673504) < 1e-13);
  CHECK(q4[1].symbolic == "8/3 * zeta(3) * 1! / zeta(2) * kappa_4^(-2/5)");
  const auto q5 = q_poly(5);
  REQUIRE(q5.size() == 2);
  CHECK(q5[1].degree == 3);
  CHECK(rel(q5[1].coeff, 1.5150300253307652555) < 1e-13);
  for (int d = 2; d <= 8; ++d) {
    const auto q = q_poly(d);
    for (std::size_t i = 1; i < q.size(); ++i) CHECK(q[i].degree < q[i - 1].degree);
    for (const auto& t : q) CHECK(t.coeff > 0);
  }
}

TEST_CASE("beta and alpha") {
  CHECK(beta_exact(2) == mpq_class(-11, 9));
  CHECK(beta_exact(3) == mpq_class(-13, 8));
  CHECK(beta_exact(4) == mpq_class(-521, 225));
  for (const auto& r : kRefs) CHECK(rel(ln_alpha(r.d), r.ln_alpha) < 1e-12);
  CHECK_THROWS_AS(beta_exact(1), ArgumentError);
}

TEST_CASE("I_crit against the residue sum") {
  for (const auto& r : kRefs) {
    INFO("d = " << r.d);
    CHECK(rel(icrit(r.d, 1e4), r.icrit_1e4) < 1e-8);
    CHECK(rel(icrit(r.d, 1e6), r.icrit_1e6) < 1e-8);
  }
}

TEST_CASE("I_crit oscillation read off the function") {
  const double t1 = first_zero().imag;
  for (const auto& r : kRefs) {
    INFO("d = " << r.d);
    const auto f = icrit_form(r.d);
    CHECK(rel(f.frequency, t1 / (r.d + 1)) < 1e-9);
    CHECK(rel(f.scale, 1 / r.kappa) < 1e-13);
    CHECK(rel(f.a, r.a) < 1e-6);
    CHECK(rel(f.b, r.b) < 1e-6);
    // The form reproduces icrit away from the sampling points.
    for (double n : {3.0, 77.0, 1e5, 4.2e9}) {
      const double phase = f.frequency * std::log(f.scale * n);
      const double form =
          std::pow(n, 1.0 / (2 * (r.d + 1))) * (f.a * std::cos(phase) + f.b * std::sin(phase));
      CHECK(std::abs(form - icrit(r.d, n)) < 1e-6 * std::hypot(f.a, f.b) * std::pow(n, 0.25));
    }
  }
}

TEST_CASE("I_crit envelope is bounded on a log grid") {
  for (int d = 2; d <= 5; ++d) {
    const auto f = icrit_form(d);
    const double amp = std::hypot(f.a, f.b);
    for (double u = 0; u <= 60; u += 0.7) {
      const double n = std::exp(u);
      CHECK(std::abs(icrit(d, n)) * std::pow(n, -1.0 / (2 * (d + 1))) <= amp * (1 + 1e-6));
    }
  }
}

TEST_CASE("I_crit argument checks") {
  const std::vector<ZetaZero> none;
  CHECK_THROWS_AS(icrit(2, 1e4, none, 1), ArgumentError);
  const std::vector<ZetaZero> one{first_zero()};
  CHECK_THROWS_AS(icrit(2, 1e4, one, 2), ArgumentError);
  const std::vector<ZetaZero> two{first_zero(), refine_zero(21.02)};
  // The second zero contributes orders of magnitude less than the first.
  const double d1 = icrit(2, 1e8, two, 1), d2 = icrit(2, 1e8, two, 2);
  CHECK(std::abs(d2 - d1) < 1e-2 * std::abs(d1));
}

TEST_CASE("estimate") {
  const auto e = estimate(2, 1e6);
  CHECK(e.ln_z_hat == e.ln_alpha + e.beta_ln_n + e.q_value + e.icrit);
  CHECK(rel(e.q_value, 3.40452685214907111e4) < 1e-12);
  CHECK(e.beta == mpq_class(-11, 9));
  for (int d = 2; d <= 5; ++d) {
    double sum = 0;
    for (const auto& t : q_poly(d)) sum += t.coeff;
    CHECK(rel(estimate(d, 1).q_value, sum) < 1e-15);
    CHECK(estimate(d, 10).q_value > 0);
  }
  CHECK_THROWS_AS(estimate(2, 0.5), ArgumentError);
}

TEST_CASE("closed-form and saddle-form assemblies agree") {
  for (int d = 2; d <= 5; ++d) {
    for (double n : {1e2, 1e4, 1e6}) {
      INFO("d = " << d << ", n = " << n);
      CHECK(std::abs(estimate(d, n).ln_z_hat - saddle_form_estimate(d, n)) < 1e-6);
    }
  }
}

TEST_CASE("expansion of ln Zon against the direct sum") {
  const std::vector<ZetaZero> one{first_zero()};
  // Direct sums from mpmath.
  CHECK(std::abs(ln_zon_expansion(2, 0.02, one) - 3655.1679718275285772) < 1e-4);
  CHECK(std::abs(ln_zon_expansion(2, 0.05, one) - 585.65832366595773412) < 1e-3);
  CHECK(std::abs(log_partition_truncated(2, 0.02, 1e-17) - 3655.1679718275285772) < 1e-7);
  // d = 3: the expansion stops at s = 0. The next pole, s = -1, adds
  // Pi_3[zeta](-1) / zeta(-1) * zeta(0) * Res Gamma(-1) * theta = 0.4 theta.
  for (double theta : {0.04, 0.08}) {
    const double direct = log_partition_truncated(3, theta, 1e-17);
    CHECK(std::abs(direct - ln_zon_expansion(3, theta, one) - 0.4 * theta) < 2e-3);
  }
}

TEST_CASE("moment asymptotics") {
  CHECK(rel(mean_diameter_asympt(2, 1e6), 9440.8366281726682324) < 1e-13);
  CHECK(rel(mean_diameter_asympt(3, 1e4), 1272.8171111165702855) < 1e-13);
  for (int d = 2; d <= 6; ++d) {
    for (double n : {10.0, 1e4, 1e9}) {
      const double theta = saddle_theta_cube(d, n);
      CHECK(rel(mean_diameter_asympt(d, n),
                std::ldexp(1.0, d - 1) / (zeta_real(d) * std::pow(theta, d))) < 1e-13);
    }
  }
  const auto occ = mean_occurrence_asympt(2, 1e4, IntVec{1, 1});
  CHECK(rel(occ.mean, 9.4922207266712549184) < 1e-13);
  CHECK(occ.variance == occ.mean * occ.mean);
  CHECK(rel(mean_occurrence_asympt(2, 1e4, IntVec{1, -1}).mean, occ.mean) < 1e-15);
  CHECK(rel(mean_occurrence_asympt(2, 1e4, IntVec{1, 3}).mean, occ.mean / 2) < 1e-15);
  CHECK_THROWS_AS(mean_occurrence_asympt(2, 1e4, IntVec{2, 2}), ArgumentError);
}
