#include "zono/brute_force.hpp"

#include <cstdlib>
#include <string>

#include "zono/error.hpp"

namespace zono {

std::vector<IntVec> signed_classes(int dim, std::span<const std::int64_t> bound) {
  std::vector<IntVec> out;
  for_each_primitive(dim, bound, [&](const PrimVec& p) {
    for (auto& s : sign_classes(p)) out.push_back(std::move(s));
  });
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(int dim, std::span<const std::int64_t> bound, std::uint64_t limit)
      : dim_(dim), bound_(bound.begin(), bound.end()), limit_(limit) {
    classes_ = signed_classes(dim, bound);
    for (const auto& c : classes_) {
      IntVec f(dim);
      for (int i = 0; i < dim; ++i) f[i] = std::abs(c[i]);
      folds_.push_back(std::move(f));
    }
    strides_.assign(dim, 1);
    std::size_t cells = 1;
    for (int i = dim - 1; i >= 0; --i) {
      strides_[i] = cells;
      cells *= static_cast<std::size_t>(bound_[i] + 1);
    }
    count_.assign(cells, 0);
    dsum_.assign(cells, 0);
    dsq_.assign(cells, 0);
    occ_.assign(cells * classes_.size(), {0, 0});
  }

  std::vector<BruteForceTally> run() {
    IntVec sum(dim_, 0);
    visit(0, sum);
    std::vector<BruteForceTally> out(count_.size());
    for (std::size_t e = 0; e < out.size(); ++e) {
      out[e].count = count_[e];
      out[e].direction_sum = dsum_[e];
      out[e].direction_sq_sum = dsq_[e];
      for (std::size_t c = 0; c < classes_.size(); ++c) {
        const auto& o = occ_[e * classes_.size() + c];
        if (o.first != 0) out[e].occurrences[classes_[c]] = o;
      }
    }
    return out;
  }

 private:
  void visit(std::size_t start, IntVec& sum) {
    if (++nodes_ > limit_)
      throw GuardExceeded("brute-force enumeration exceeded " + std::to_string(limit_) +
                          " nodes");
    std::size_t e = 0;
    for (int i = 0; i < dim_; ++i) e += static_cast<std::size_t>(sum[i]) * strides_[i];
    const std::uint64_t directions = stack_.size();
    ++count_[e];
    dsum_[e] += directions;
    dsq_[e] += directions * directions;
    for (const auto& [cls, k] : stack_) {
      auto& o = occ_[e * classes_.size() + cls];
      o.first += k;
      o.second += k * k;
    }

    for (std::size_t j = start; j < classes_.size(); ++j) {
      const auto& f = folds_[j];
      std::int64_t kmax = -1;
      for (int i = 0; i < dim_; ++i) {
        if (f[i] == 0) continue;
        const std::int64_t room = (bound_[i] - sum[i]) / f[i];
        kmax = kmax < 0 ? room : std::min(kmax, room);
      }
      for (std::int64_t k = 1; k <= kmax; ++k) {
        for (int i = 0; i < dim_; ++i) sum[i] += f[i];
        stack_.emplace_back(j, static_cast<std::uint64_t>(k));
        visit(j + 1, sum);
        stack_.pop_back();
      }
      for (int i = 0; i < dim_; ++i) sum[i] -= kmax > 0 ? kmax * f[i] : 0;
    }
  }

  int dim_;
  IntVec bound_;
  std::uint64_t limit_;
  std::uint64_t nodes_ = 0;
  std::vector<IntVec> classes_;
  std::vector<IntVec> folds_;
  std::vector<std::size_t> strides_;
  std::vector<std::uint64_t> count_, dsum_, dsq_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> occ_;
  std::vector<std::pair<std::size_t, std::uint64_t>> stack_;
};

}  // namespace

std::vector<BruteForceTally> brute_force_table(int dim, std::span<const std::int64_t> bound,
                                               std::uint64_t node_limit) {
  if (dim < 1) throw ArgumentError("dimension must be >= 1");
  if (bound.size() != static_cast<std::size_t>(dim)) throw ArgumentError("bound dimension mismatch");
  for (auto b : bound)
    if (b < 0) throw ArgumentError("bound entries must be >= 0");
  return Enumerator(dim, bound, node_limit).run();
}

BruteForceTally brute_force_count(int dim, std::span<const std::int64_t> n,
                                  std::uint64_t node_limit) {
  auto table = brute_force_table(dim, n, node_limit);
  return std::move(table.back());
}

}  // namespace zono
