#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zono/primitives.hpp"

namespace zono {

inline constexpr double kDefaultCutoff = 1e-12;

/// One generator direction of a sampled zonotope.
struct SampleEntry {
  IntVec cls;  // signed primitive vector, first nonzero coordinate positive
  std::int64_t omega = 0;

  friend bool operator==(const SampleEntry&, const SampleEntry&) = default;
};

struct ZonotopeSample {
  std::vector<SampleEntry> entries;  // class-visit order
  IntVec endpoint;                   // sum of omega * |cls|
  std::int64_t direction_count = 0;

  friend bool operator==(const ZonotopeSample&, const ZonotopeSample&) = default;
};

/// Multiplicity of one sign class in the sample drawn with `seed`.
///
/// Every class owns one uniform U, taken from a SplitMix64 stream keyed by
/// the seed and the class coordinates, and K = floor(ln U / ln q) with
/// q = exp(-theta |cls|_1). Draws for different classes are independent and
/// can be read in any order.
std::int64_t class_multiplicity(double theta, std::uint64_t seed, std::span<const std::int64_t> cls);

/// Free (grand-canonical) Boltzmann sampler. The class list is built once:
/// every sign class with theta |v|_1 <= ln(1/cutoff), ordered by the
/// primitive vector lexicographically, then by sign-pattern index.
class BoltzmannSampler {
 public:
  BoltzmannSampler(int dim, double theta, double cutoff = kDefaultCutoff);

  int dim() const { return dim_; }
  double theta() const { return theta_; }
  std::size_t class_count() const { return classes_.size(); }
  const std::vector<IntVec>& classes() const { return classes_; }

  ZonotopeSample sample(std::uint64_t seed) const;

 private:
  int dim_;
  double theta_;
  std::vector<IntVec> classes_;
  std::vector<IntVec> folds_;
};

ZonotopeSample boltzmann_sample(int dim, double theta, double cutoff, std::uint64_t seed);

/// Largest |v|_1 kept at this cutoff.
std::int64_t l1_cap(double theta, double cutoff);

/// Sum of q_v over the kept classes: the expected number of directions.
double expected_directions_truncated(int dim, double theta, double cutoff = kDefaultCutoff);

/// Sum of v_i q_v / (1 - q_v) over the kept classes.
std::vector<double> expected_endpoint_truncated(int dim, double theta,
                                                double cutoff = kDefaultCutoff);

/// Sum of q_v over the dropped classes in the shell cap < |v|_1 <= 2 cap.
double discarded_mass(int dim, double theta, double cutoff = kDefaultCutoff);

/// ln Zon_d(e^{-theta 1}) summed directly over the kept classes.
double log_partition_truncated(int dim, double theta, double cutoff);

struct MomentEstimate {
  double mean = 0;
  double variance = 0;  // unbiased
  double std_error = 0;  // of the mean
};

struct TrackedClass {
  IntVec cls;
  MomentEstimate omega;
};

struct SampleStats {
  std::size_t samples = 0;
  MomentEstimate directions;
  std::vector<MomentEstimate> endpoint;
  std::vector<TrackedClass> tracked;
};

/// Empirical moments over `samples` draws with seeds base_seed + i.
SampleStats sample_stats(int dim, double theta, double cutoff, std::size_t samples,
                         std::uint64_t base_seed, const std::vector<IntVec>& tracked = {});

/// Moments of one class multiplicity over `draws` seeds base_seed + i,
/// without drawing the rest of the sample.
MomentEstimate class_multiplicity_stats(double theta, std::span<const std::int64_t> cls,
                                        std::size_t draws, std::uint64_t base_seed);

/// d = 2 only: vertices of the zonotope, starting at the origin and running
/// counterclockwise along edges omega * cls sorted by angle, then their
/// negatives. An empty sample gives the single vertex (0, 0).
std::vector<std::pair<std::int64_t, std::int64_t>> to_polygon(const ZonotopeSample& sample);

/// Canonical sign class of a signed primitive vector (first nonzero
/// coordinate made positive).
IntVec canonical_class(std::span<const std::int64_t> v);

}  // namespace zono
