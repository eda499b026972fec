#include "zono/coeff_table.hpp"

#include "json.hpp"

#include "zono/error.hpp"

namespace zono {

namespace {
constexpr const char* kCheckpointFormat = "zonotopes.coeff_table";
constexpr int kCheckpointVersion = 1;
}  // namespace

CoeffTable::CoeffTable(int dim, IntVec bound) : dim_(dim), bound_(std::move(bound)) {
  if (dim_ < 1) throw ArgumentError("dimension must be >= 1");
  if (bound_.size() != static_cast<std::size_t>(dim_))
    throw ArgumentError("bound size does not match dimension");
  strides_.assign(dim_, 1);
  std::size_t cells = 1;
  for (int i = dim_ - 1; i >= 0; --i) {
    if (bound_[i] < 0) throw ArgumentError("bound entries must be >= 0");
    strides_[i] = cells;
    cells *= static_cast<std::size_t>(bound_[i] + 1);
  }
  cells_.assign(cells, mpz_class(0));
}

CoeffTable CoeffTable::unit(int dim, IntVec bound) {
  CoeffTable t(dim, std::move(bound));
  t.cells_[0] = 1;
  return t;
}

std::size_t CoeffTable::index(std::span<const std::int64_t> e) const {
  if (e.size() != static_cast<std::size_t>(dim_)) throw ArgumentError("index dimension mismatch");
  std::size_t idx = 0;
  for (int i = 0; i < dim_; ++i) {
    if (e[i] < 0 || e[i] > bound_[i]) throw ArgumentError("index outside table bound");
    idx += static_cast<std::size_t>(e[i]) * strides_[i];
  }
  return idx;
}

template <typename F>
void CoeffTable::for_each_at_least(std::span<const std::int64_t> v, F&& f) const {
  for (int i = 0; i < dim_; ++i)
    if (v[i] > bound_[i]) return;
  // Odometer over the outer coordinates, contiguous run over the last one.
  const int last = dim_ - 1;
  IntVec e(v.begin(), v.end());
  while (true) {
    std::size_t base = 0;
    for (int i = 0; i < last; ++i) base += static_cast<std::size_t>(e[i]) * strides_[i];
    for (std::int64_t x = v[last]; x <= bound_[last]; ++x) f(base + static_cast<std::size_t>(x));
    int i = last - 1;
    while (i >= 0 && e[i] == bound_[i]) {
      e[i] = v[i];
      --i;
    }
    if (i < 0) return;
    ++e[i];
  }
}

void CoeffTable::cumulative_pass(std::span<const std::int64_t> v) {
  if (v.size() != static_cast<std::size_t>(dim_)) throw ArgumentError("vector dimension mismatch");
  std::size_t offset = 0;
  for (int i = 0; i < dim_; ++i) offset += static_cast<std::size_t>(v[i]) * strides_[i];
  if (offset == 0) throw ArgumentError("cumulative pass along the zero vector");
  for_each_at_least(v, [&](std::size_t idx) { cells_[idx] += cells_[idx - offset]; });
}

void CoeffTable::shift(std::span<const std::int64_t> v) {
  if (v.size() != static_cast<std::size_t>(dim_)) throw ArgumentError("vector dimension mismatch");
  std::vector<mpz_class> out(cells_.size(), mpz_class(0));
  std::size_t offset = 0;
  for (int i = 0; i < dim_; ++i) offset += static_cast<std::size_t>(v[i]) * strides_[i];
  for_each_at_least(v, [&](std::size_t idx) { out[idx] = cells_[idx - offset]; });
  cells_.swap(out);
}

void CoeffTable::add_shifted(const CoeffTable& other, std::span<const std::int64_t> v,
                             unsigned long factor) {
  if (other.bound_ != bound_) throw ArgumentError("table bounds differ");
  std::size_t offset = 0;
  for (int i = 0; i < dim_; ++i) offset += static_cast<std::size_t>(v[i]) * strides_[i];
  if (factor == 1) {
    for_each_at_least(v, [&](std::size_t idx) { cells_[idx] += other.cells_[idx - offset]; });
  } else {
    for_each_at_least(v, [&](std::size_t idx) {
      mpz_addmul_ui(cells_[idx].get_mpz_t(), other.cells_[idx - offset].get_mpz_t(), factor);
    });
  }
}

mpz_class CoeffTable::total() const {
  mpz_class s = 0;
  for (const auto& c : cells_) s += c;
  return s;
}

bool operator==(const CoeffTable& a, const CoeffTable& b) {
  return a.dim_ == b.dim_ && a.bound_ == b.bound_ && a.cells_ == b.cells_;
}

std::string CoeffTable::to_json() const {
  nlohmann::json j;
  j["format"] = kCheckpointFormat;
  j["version"] = kCheckpointVersion;
  j["dim"] = dim_;
  j["bound"] = bound_;
  auto& cells = j["cells"] = nlohmann::json::array();
  for (const auto& c : cells_) cells.push_back(c.get_str());
  return j.dump();
}

CoeffTable CoeffTable::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("checkpoint is not valid JSON: ") + e.what());
  }
  if (j.value("format", "") != kCheckpointFormat)
    throw ArgumentError("not a coefficient table checkpoint");
  if (j.value("version", 0) != kCheckpointVersion)
    throw ArgumentError("unsupported checkpoint version");
  CoeffTable t(j.at("dim").get<int>(), j.at("bound").get<IntVec>());
  const auto& cells = j.at("cells");
  if (cells.size() != t.cells_.size()) throw ArgumentError("checkpoint cell count mismatch");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (t.cells_[i].set_str(cells[i].get<std::string>(), 10) != 0)
      throw ArgumentError("checkpoint cell is not a decimal integer");
  }
  return t;
}

}  // namespace zono
