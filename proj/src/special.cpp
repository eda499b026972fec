#include "zono/special.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <mutex>
#include <numbers>

#include "zono/error.hpp"

namespace zono {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kEmTerms = 10;
constexpr int kEmMinN = 20;

// Grown on demand: B_m from sum_{j<m} C(m+1, j) B_j = -(m+1) B_m, with the
// odd terms past B_1 skipped since they vanish.
mpq_class bernoulli_cached(int m) {
  static std::mutex mu;
  static std::vector<mpq_class> b{1, mpq_class(-1, 2)};
  std::lock_guard lock(mu);
  mpz_class binom;
  while (static_cast<int>(b.size()) <= m) {
    const int k = static_cast<int>(b.size());
    if (k % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    mpq_class acc = 0;
    for (int j = 0; j < k; ++j) {
      if (j > 1 && j % 2 == 1) continue;
      mpz_bin_uiui(binom.get_mpz_t(), k + 1, j);
      acc += mpq_class(binom) * b[j];
    }
    b.push_back(-acc / (k + 1));
  }
  return b[m];
}

// B_{2k} / (2k)! for k = 1..kEmTerms.
const std::array<double, kEmTerms + 1>& em_coefficients() {
  static const std::array<double, kEmTerms + 1> c = [] {
    std::array<double, kEmTerms + 1> out{};
    mpz_class fact;
    for (int k = 1; k <= kEmTerms; ++k) {
      mpz_fac_ui(fact.get_mpz_t(), 2 * k);
      out[k] = mpq_class(bernoulli(2 * k) / mpq_class(fact)).get_d();
    }
    return out;
  }();
  return c;
}

template <typename T>
struct EmValue {
  T value;
  T deriv;
};

template <typename T>
T power(double base, T s) {
  if constexpr (std::is_same_v<T, double>)
    return std::pow(base, s);
  else
    return std::exp(s * std::log(base));
}

// Euler-Maclaurin for zeta(s) and its s-derivative with cutoff N:
//   sum_{n<N} n^-s + N^{1-s}/(s-1) + N^-s/2 + sum_k B_2k/(2k)! (s)_{2k-1} N^{-s-2k+1}
template <typename T>
EmValue<T> euler_maclaurin(T s, int N) {
  T z = 0, dz = 0;
  for (int n = 1; n < N; ++n) {
    const T t = power(static_cast<double>(n), -s);
    z += t;
    dz -= std::log(static_cast<double>(n)) * t;
  }
  const double lnN = std::log(static_cast<double>(N));
  const T nps = power(static_cast<double>(N), -s);
  const T sm1 = s - 1.0;
  const T head = static_cast<double>(N) * nps / sm1;
  z += head + 0.5 * nps;
  dz += -lnN * head - head / sm1 - 0.5 * lnN * nps;

  const auto& c = em_coefficients();
  // Rising product p = s (s+1) ... (s+2k-2) and its derivative dp.
  T p = s, dp = 1.0;
  T npow = nps / static_cast<double>(N);  // N^{-s-1}
  for (int k = 1; k <= kEmTerms; ++k) {
    z += c[k] * p * npow;
    dz += c[k] * (dp - lnN * p) * npow;
    for (int j = 2 * k - 1; j <= 2 * k; ++j) {
      dp = dp * (s + static_cast<double>(j)) + p;
      p = p * (s + static_cast<double>(j));
    }
    npow /= static_cast<double>(N) * N;
  }
  return {z, dz};
}

void check_height(cplx s) {
  if (std::abs(s.imag()) > kMaxZetaHeight)
    throw DomainError("|Im s| exceeds the supported height " + std::to_string(kMaxZetaHeight));
  if (s == cplx(1.0, 0.0)) throw DomainError("zeta has a pole at s = 1");
}

int em_cutoff(cplx s) {
  return std::max(kEmMinN, static_cast<int>(std::ceil(1.3 * std::abs(s.imag()))));
}

double digamma_int(int m) {
  // psi(m) = -gamma + H_{m-1}
  double h = 0;
  for (int j = 1; j < m; ++j) h += 1.0 / j;
  return h - std::numbers::egamma;
}

}  // namespace

mpq_class bernoulli(int m) {
  if (m < 0 || m > kBernoulliMax)
    throw ArgumentError("Bernoulli index must lie in [0, " + std::to_string(kBernoulliMax) + "]");
  return bernoulli_cached(m);
}

double zeta_real(double s) {
  if (!(s > 1)) throw DomainError("zeta_real requires s > 1");
  return euler_maclaurin<double>(s, kEmMinN).value;
}

double zeta_deriv_real(double s) {
  if (!(s > 1)) throw DomainError("zeta_deriv_real requires s > 1");
  return euler_maclaurin<double>(s, kEmMinN).deriv;
}

mpq_class zeta_neg_int(int k) {
  if (k < 0 || k + 1 > kBernoulliMax) throw ArgumentError("zeta_neg_int index out of range");
  if (k == 0) return mpq_class(-1, 2);
  return -bernoulli(k + 1) / (k + 1);
}

double zeta_deriv_neg_int(int k) {
  if (k < 0) throw ArgumentError("zeta_deriv_neg_int requires k >= 0");
  if (k == 0) return -0.5 * std::log(2 * kPi);
  // zeta(s) = g(s) sin(pi s/2) zeta(1-s), g(s) = 2^s pi^{s-1} Gamma(1-s), and
  // g'(s) = g(s) (ln 2pi - psi(1-s)). Evaluate the derivative at s = -k.
  static constexpr int kSin[4] = {0, -1, 0, 1};  // sin(-pi k/2)
  static constexpr int kCos[4] = {1, 0, -1, 0};  // cos(-pi k/2)
  const double sn = kSin[k % 4], cs = kCos[k % 4];
  const double g = std::exp(-k * std::log(2.0) - (k + 1) * std::log(kPi) + std::lgamma(k + 1.0));
  const double z = zeta_real(1.0 + k);
  const double dz = zeta_deriv_real(1.0 + k);
  return g * ((std::log(2 * kPi) - digamma_int(k + 1)) * sn * z + 0.5 * kPi * cs * z - sn * dz);
}

cplx zeta_complex(cplx s) {
  check_height(s);
  if (s.real() < -4) {
    const cplx one_minus = 1.0 - s;
    const cplx chi = std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi)) *
                     std::sin(0.5 * kPi * s) * gamma_complex(one_minus);
    return chi * zeta_complex(one_minus);
  }
  return euler_maclaurin<cplx>(s, em_cutoff(s)).value;
}

cplx zeta_deriv_complex(cplx s) {
  check_height(s);
  if (s.real() < -4) throw DomainError("zeta_deriv_complex requires Re s >= -4");
  return euler_maclaurin<cplx>(s, em_cutoff(s)).deriv;
}

cplx gamma_complex(cplx s) {
  if (s.imag() == 0 && s.real() <= 0 && s.real() == std::floor(s.real()))
    throw DomainError("Gamma has a pole at a nonpositive integer");
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma_complex(1.0 - s));
  static constexpr double g = 7;
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  const cplx z = s - 1.0;
  cplx x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (z + static_cast<double>(i));
  const cplx t = z + g + 0.5;
  return std::sqrt(2 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

ZetaZero refine_zero(double t0) {
  cplx s(0.5, t0);
  for (int it = 0; it < 60; ++it) {
    const cplx step = zeta_complex(s) / zeta_deriv_complex(s);
    s -= step;
    if (std::abs(step) < 1e-15 * std::abs(s)) break;
  }
  const double t = s.imag();
  const cplx on_line(0.5, t);
  if (std::abs(s.real() - 0.5) > 1e-9 || std::abs(zeta_complex(on_line)) >= 1e-8)
    throw DomainError("no zeta zero on the critical line near t = " + std::to_string(t0));
  return {t, zeta_deriv_complex(on_line)};
}

const ZetaZero& first_zero() {
  static const ZetaZero z = refine_zero(14.1347);
  return z;
}

std::vector<ZetaZero> parse_zeros(std::istream& in) {
  std::vector<ZetaZero> out;
  std::string line;
  for (int lineno = 1; std::getline(in, line); ++lineno) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string field = line.substr(first, last - first + 1);
    const auto where = "zeros file line " + std::to_string(lineno) + ": ";

    double t = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), t);
    if (ec != std::errc() || ptr != field.data() + field.size())
      throw ZerosFileError(where + "'" + field + "' is not a number");
    if (!(t > 0) || t > kMaxZetaHeight)
      throw ZerosFileError(where + "imaginary part must lie in (0, " +
                           std::to_string(kMaxZetaHeight) + "]");
    const double residual = std::abs(zeta_complex(cplx(0.5, t)));
    if (!(residual < 1e-6))
      throw ZerosFileError(where + "|zeta(1/2 + i*" + field + ")| = " + std::to_string(residual) +
                           " is not below 1e-6");
    try {
      out.push_back(refine_zero(t));
    } catch (const DomainError& e) {
      throw ZerosFileError(where + e.what());
    }
  }
  if (out.empty()) throw ZerosFileError("zeros file contains no zeros");
  return out;
}

std::vector<ZetaZero> load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ZerosFileError("cannot open zeros file '" + path + "'");
  return parse_zeros(in);
}

}  // namespace zono
