#include "zono/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "zono/error.hpp"

namespace zono {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in (0, 1] for the class stream keyed by (seed, coordinates).
double class_uniform(std::uint64_t seed, std::span<const std::int64_t> cls) {
  std::uint64_t key = splitmix64(seed);
  for (auto c : cls) key = splitmix64(key ^ static_cast<std::uint64_t>(c));
  return static_cast<double>((splitmix64(key) >> 11) + 1) * 0x1.0p-53;
}

std::int64_t l1_norm(std::span<const std::int64_t> v) {
  std::int64_t s = 0;
  for (auto x : v) s += std::abs(x);
  return s;
}

void check_params(int dim, double theta, double cutoff) {
  if (dim < 1) throw ArgumentError("dimension must be >= 1");
  if (!(theta > 0) || !std::isfinite(theta)) throw ArgumentError("theta must be positive");
  if (!(cutoff > 0 && cutoff < 1)) throw ArgumentError("cutoff must lie in (0, 1)");
}

// Visits (primitive vector, q_v) for every kept primitive vector; the
// caller multiplies by the weight.
template <typename F>
void for_each_kept(int dim, double theta, std::int64_t lo, std::int64_t hi, F&& f) {
  for_each_primitive_l1(dim, hi, [&](const PrimVec& p) {
    const std::int64_t l1 = l1_norm(p.coords);
    if (l1 <= lo) return;
    f(p, std::exp(-theta * static_cast<double>(l1)));
  });
}

class Welford {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }
  MomentEstimate result() const {
    MomentEstimate m;
    m.mean = mean_;
    if (n_ > 1) {
      m.variance = m2_ / static_cast<double>(n_ - 1);
      m.std_error = std::sqrt(m.variance / static_cast<double>(n_));
    }
    return m;
  }

 private:
  std::size_t n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

}  // namespace

std::int64_t l1_cap(double theta, double cutoff) {
  check_params(1, theta, cutoff);
  const double cap = std::floor(-std::log(cutoff) / theta);
  if (cap > 1e9) throw ResourceError("theta too small for the class enumeration at this cutoff");
  return static_cast<std::int64_t>(cap);
}

std::int64_t class_multiplicity(double theta, std::uint64_t seed,
                                std::span<const std::int64_t> cls) {
  if (!(theta > 0)) throw ArgumentError("theta must be positive");
  const double rate = theta * static_cast<double>(l1_norm(cls));
  if (rate == 0) throw ArgumentError("class vector must be nonzero");
  // P(K >= k) = P(U <= q^k) = q^k.
  return static_cast<std::int64_t>(std::floor(-std::log(class_uniform(seed, cls)) / rate));
}

BoltzmannSampler::BoltzmannSampler(int dim, double theta, double cutoff)
    : dim_(dim), theta_(theta) {
  check_params(dim, theta, cutoff);
  for_each_primitive_l1(dim, l1_cap(theta, cutoff), [&](const PrimVec& p) {
    for (auto& s : sign_classes(p)) {
      folds_.push_back(p.coords);
      classes_.push_back(std::move(s));
    }
  });
}

ZonotopeSample BoltzmannSampler::sample(std::uint64_t seed) const {
  ZonotopeSample out;
  out.endpoint.assign(dim_, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    const std::int64_t k = class_multiplicity(theta_, seed, classes_[c]);
    if (k == 0) continue;
    out.entries.push_back({classes_[c], k});
    for (int i = 0; i < dim_; ++i) out.endpoint[i] += k * folds_[c][i];
  }
  out.direction_count = static_cast<std::int64_t>(out.entries.size());
  return out;
}

ZonotopeSample boltzmann_sample(int dim, double theta, double cutoff, std::uint64_t seed) {
  return BoltzmannSampler(dim, theta, cutoff).sample(seed);
}

double expected_directions_truncated(int dim, double theta, double cutoff) {
  const auto cap = l1_cap(theta, cutoff);
  check_params(dim, theta, cutoff);
  double sum = 0;
  for_each_kept(dim, theta, 0, cap, [&](const PrimVec& p, double q) {
    sum += static_cast<double>(p.weight) * q;
  });
  return sum;
}

std::vector<double> expected_endpoint_truncated(int dim, double theta, double cutoff) {
  const auto cap = l1_cap(theta, cutoff);
  check_params(dim, theta, cutoff);
  std::vector<double> sum(dim, 0.0);
  for_each_kept(dim, theta, 0, cap, [&](const PrimVec& p, double q) {
    const double mean = static_cast<double>(p.weight) * q / -std::expm1(std::log(q));
    for (int i = 0; i < dim; ++i) sum[i] += static_cast<double>(p.coords[i]) * mean;
  });
  return sum;
}

double discarded_mass(int dim, double theta, double cutoff) {
  const auto cap = l1_cap(theta, cutoff);
  check_params(dim, theta, cutoff);
  double sum = 0;
  for_each_kept(dim, theta, cap, 2 * cap, [&](const PrimVec& p, double q) {
    sum += static_cast<double>(p.weight) * q;
  });
  return sum;
}

double log_partition_truncated(int dim, double theta, double cutoff) {
  const auto cap = l1_cap(theta, cutoff);
  check_params(dim, theta, cutoff);
  double sum = 0;
  for_each_kept(dim, theta, 0, cap, [&](const PrimVec& p, double q) {
    sum -= static_cast<double>(p.weight) * std::log1p(-q);
  });
  return sum;
}

SampleStats sample_stats(int dim, double theta, double cutoff, std::size_t samples,
                         std::uint64_t base_seed, const std::vector<IntVec>& tracked) {
  if (samples < 1) throw ArgumentError("sample count must be >= 1");
  std::vector<IntVec> keys;
  for (const auto& t : tracked) {
    if (t.size() != static_cast<std::size_t>(dim))
      throw ArgumentError("tracked class has the wrong dimension");
    keys.push_back(canonical_class(t));
  }
  const BoltzmannSampler sampler(dim, theta, cutoff);
  Welford directions;
  std::vector<Welford> endpoint(dim), omega(keys.size());
  for (std::size_t s = 0; s < samples; ++s) {
    const auto z = sampler.sample(base_seed + s);
    directions.add(static_cast<double>(z.direction_count));
    for (int i = 0; i < dim; ++i) endpoint[i].add(static_cast<double>(z.endpoint[i]));
    for (std::size_t t = 0; t < keys.size(); ++t) {
      std::int64_t w = 0;
      for (const auto& e : z.entries)
        if (e.cls == keys[t]) w = e.omega;
      omega[t].add(static_cast<double>(w));
    }
  }
  SampleStats out;
  out.samples = samples;
  out.directions = directions.result();
  for (const auto& e : endpoint) out.endpoint.push_back(e.result());
  for (std::size_t t = 0; t < keys.size(); ++t) out.tracked.push_back({keys[t], omega[t].result()});
  return out;
}

MomentEstimate class_multiplicity_stats(double theta, std::span<const std::int64_t> cls,
                                        std::size_t draws, std::uint64_t base_seed) {
  if (draws < 1) throw ArgumentError("draw count must be >= 1");
  const IntVec key = canonical_class(cls);
  Welford w;
  for (std::size_t s = 0; s < draws; ++s)
    w.add(static_cast<double>(class_multiplicity(theta, base_seed + s, key)));
  return w.result();
}

IntVec canonical_class(std::span<const std::int64_t> v) {
  IntVec out(v.begin(), v.end());
  const auto first = std::find_if(out.begin(), out.end(), [](auto x) { return x != 0; });
  if (first == out.end()) throw ArgumentError("class vector must be nonzero");
  if (*first < 0)
    for (auto& x : out) x = -x;
  return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> to_polygon(const ZonotopeSample& sample) {
  std::vector<std::pair<std::int64_t, std::int64_t>> edges;
  for (const auto& e : sample.entries) {
    if (e.cls.size() != 2) throw ArgumentError("to_polygon needs a two-dimensional sample");
    const auto c = canonical_class(e.cls);
    edges.emplace_back(e.omega * c[0], e.omega * c[1]);
  }
  // All edges lie in the half-plane x > 0 or (x = 0, y > 0), angles in
  // (-pi/2, pi/2], so the cross product orders them by angle.
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return a.first * b.second - a.second * b.first > 0;
  });
  std::vector<std::pair<std::int64_t, std::int64_t>> out{{0, 0}};
  std::int64_t x = 0, y = 0;
  for (int pass = 0; pass < 2; ++pass) {
    const std::int64_t sign = pass == 0 ? 1 : -1;
    for (const auto& [ex, ey] : edges) {
      x += sign * ex;
      y += sign * ey;
      out.emplace_back(x, y);
    }
  }
  if (!edges.empty()) out.pop_back();  // back at the origin
  return out;
}

}  // namespace zono
