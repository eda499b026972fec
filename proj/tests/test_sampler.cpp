#include "doctest.h"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>
#include <set>

#include "zono/asympt.hpp"
#include "zono/error.hpp"
#include "zono/sampler.hpp"

using namespace zono;

namespace {

const double kTheta = saddle_theta_cube(2, 1e4);

void check_invariants(const ZonotopeSample& z, int dim) {
  IntVec endpoint(dim, 0);
  std::set<IntVec> seen;
  for (const auto& e : z.entries) {
    CHECK(e.omega >= 1);
    CHECK(seen.insert(e.cls).second);
    CHECK(canonical_class(e.cls) == e.cls);
    for (int i = 0; i < dim; ++i) endpoint[i] += e.omega * std::abs(e.cls[i]);
  }
  CHECK(endpoint == z.endpoint);
  CHECK(z.direction_count == static_cast<std::int64_t>(z.entries.size()));
}

}  // namespace

TEST_CASE("seed determinism") {
  const BoltzmannSampler s(2, kTheta);
  CHECK(s.sample(5) == s.sample(5));
  CHECK(boltzmann_sample(2, kTheta, kDefaultCutoff, 5) == s.sample(5));
  CHECK_FALSE(s.sample(5) == s.sample(6));
  check_invariants(s.sample(5), 2);
  check_invariants(boltzmann_sample(3, 0.3, 1e-9, 11), 3);
}

TEST_CASE("golden sample: d=2, theta at n=1e4, seed 42") {
  const auto z = boltzmann_sample(2, kTheta, kDefaultCutoff, 42);
  CHECK(z.direction_count == 447);
  CHECK(z.endpoint == IntVec{9600, 10140});
  REQUIRE(z.entries.size() >= 5);
  CHECK(z.entries[0] == SampleEntry{{0, 1}, 14});
  CHECK(z.entries[1] == SampleEntry{{1, 0}, 26});
  CHECK(z.entries[2] == SampleEntry{{1, 1}, 1});
  CHECK(z.entries[3] == SampleEntry{{1, -1}, 11});
  CHECK(z.entries[4] == SampleEntry{{1, 2}, 4});
  CHECK(z.entries.back() == SampleEntry{{123, -47}, 1});
}

TEST_CASE("class visit order: vector, then sign pattern") {
  const BoltzmannSampler s(3, 1.0, 0.05);
  const auto& c = s.classes();
  REQUIRE(c.size() >= 8);
  CHECK(c[0] == IntVec{0, 0, 1});
  CHECK(c[1] == IntVec{0, 1, 0});
  CHECK(c[2] == IntVec{0, 1, 1});
  CHECK(c[3] == IntVec{0, 1, -1});
}

TEST_CASE("degenerate limits") {
  CHECK(boltzmann_sample(2, 1e3, kDefaultCutoff, 1).entries.empty());
  CHECK(expected_directions_truncated(2, 0.05, 0.999999) == 0);
  CHECK_THROWS_AS(boltzmann_sample(2, 0, kDefaultCutoff, 1), ArgumentError);
  CHECK_THROWS_AS(boltzmann_sample(2, 0.1, 1.0, 1), ArgumentError);
  CHECK_THROWS_AS(boltzmann_sample(2, 0.1, 0.0, 1), ArgumentError);
}

TEST_CASE("d=1 at theta = ln 2 is empty half the time") {
  const BoltzmannSampler s(1, std::log(2.0));
  const int draws = 100000;
  int empty = 0;
  for (int i = 0; i < draws; ++i) empty += s.sample(i).entries.empty();
  const double p = static_cast<double>(empty) / draws;
  CHECK(std::abs(p - 0.5) < 3 * std::sqrt(0.25 / draws));
}

TEST_CASE("expected directions") {
  const double ed = expected_directions_truncated(2, kTheta);
  CHECK(std::abs(ed / mean_diameter_asympt(2, 1e4) - 1) < 0.02);
  double prev = 1e300;
  for (double theta = 0.05; theta < 0.5; theta += 0.05) {
    const double v = expected_directions_truncated(2, theta);
    CHECK(v <= prev);
    prev = v;
  }
  CHECK(discarded_mass(2, kTheta) < 1e-3 * ed);
}

TEST_CASE("empirical means over 400 samples") {
  const auto st = sample_stats(2, kTheta, kDefaultCutoff, 400, 1000, {{1, 1}});
  const double ed = expected_directions_truncated(2, kTheta);
  CHECK(std::abs(st.directions.mean - ed) < 4 * st.directions.std_error);
  const auto ep = expected_endpoint_truncated(2, kTheta);
  for (int i = 0; i < 2; ++i) {
    CHECK(std::abs(ep[i] / 1e4 - 1) < 0.01);
    CHECK(std::abs(st.endpoint[i].mean - ep[i]) < 3.5 * st.endpoint[i].std_error);
  }
  REQUIRE(st.tracked.size() == 1);
  const double q = std::exp(-2 * kTheta);
  CHECK(std::abs(st.tracked[0].omega.mean - q / (1 - q)) < 4 * st.tracked[0].omega.std_error);
}

TEST_CASE("per-class multiplicity is geometric") {
  const IntVec v0{1, 1};
  const double q = std::exp(-2 * kTheta);
  const std::size_t draws = 100000;
  std::vector<double> hist(60, 0);
  for (std::size_t s = 0; s < draws; ++s) {
    const auto k = class_multiplicity(kTheta, s, v0);
    hist[std::min<std::size_t>(static_cast<std::size_t>(k), hist.size() - 1)] += 1;
  }
  double chi2 = 0;
  for (std::size_t k = 0; k < hist.size(); ++k) {
    const double p = k + 1 < hist.size() ? (1 - q) * std::pow(q, k) : std::pow(q, k);
    const double expect = p * draws;
    chi2 += (hist[k] - expect) * (hist[k] - expect) / expect;
  }
  const boost::math::chi_squared dist(static_cast<double>(hist.size() - 1));
  const double p_value = boost::math::cdf(boost::math::complement(dist, chi2));
  INFO("chi2 = " << chi2 << ", p = " << p_value);
  CHECK(p_value > 1e-3);

  const auto m = class_multiplicity_stats(kTheta, v0, draws, 0);
  const double mean = q / (1 - q), var = q / ((1 - q) * (1 - q));
  CHECK(std::abs(m.mean - mean) < 3 * std::sqrt(var / draws));
  // Geometric excess kurtosis is 6 + (1-q)^2/q, so mu4 = var^2 (9 + (1-q)^2/q).
  const double mu4 = var * var * (9 + (1 - q) * (1 - q) / q);
  CHECK(std::abs(m.variance - var) < 3 * std::sqrt((mu4 - var * var) / draws));
  CHECK(class_multiplicity(kTheta, 9, IntVec{1, 1}) == class_multiplicity(kTheta, 9, IntVec{1, 1}));
}

TEST_CASE("class draws match the sample contents") {
  const BoltzmannSampler s(2, kTheta);
  const auto z = s.sample(77);
  for (const auto& e : z.entries) CHECK(class_multiplicity(kTheta, 77, e.cls) == e.omega);
}

TEST_CASE("polygon") {
  ZonotopeSample square;
  square.entries = {{{1, 0}, 1}, {{0, 1}, 1}};
  square.endpoint = {1, 1};
  square.direction_count = 2;
  using P = std::pair<std::int64_t, std::int64_t>;
  CHECK(to_polygon(square) == std::vector<P>{{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(to_polygon(ZonotopeSample{}) == std::vector<P>{{0, 0}});

  const BoltzmannSampler s(2, 0.2);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const auto z = s.sample(seed);
    const auto poly = to_polygon(z);
    if (z.entries.empty()) continue;
    REQUIRE(poly.size() == 2 * z.entries.size());
    std::multiset<P> edges, want;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& a = poly[i];
      const auto& b = poly[(i + 1) % poly.size()];
      edges.insert({b.first - a.first, b.second - a.second});
    }
    for (const auto& e : z.entries) {
      want.insert({e.omega * e.cls[0], e.omega * e.cls[1]});
      want.insert({-e.omega * e.cls[0], -e.omega * e.cls[1]});
    }
    CHECK(edges == want);
    if (poly.size() < 3) continue;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& a = poly[i];
      const auto& b = poly[(i + 1) % poly.size()];
      const auto& c = poly[(i + 2) % poly.size()];
      const auto cross = (b.first - a.first) * (c.second - b.second) -
                         (b.second - a.second) * (c.first - b.first);
      CHECK(cross > 0);
    }
  }
  ZonotopeSample three;
  three.entries = {{{1, 0, 0}, 1}};
  CHECK_THROWS_AS(to_polygon(three), ArgumentError);
}
