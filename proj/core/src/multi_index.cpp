#include "veronese/multi_index.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "veronese/errors.hpp"

namespace veronese {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e < 0) throw domain_error("multi-index entries must be non-negative");
  }
}

MultiIndex::MultiIndex(std::initializer_list<int> entries)
    : MultiIndex(std::vector<int>(entries)) {}

MultiIndex MultiIndex::zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

MultiIndex MultiIndex::unit(int n, int i) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e.at(static_cast<std::size_t>(i)) = 1;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::pivot(int n, int kappa) {
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[0] = kappa;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::pivot(int n, int kappa, int j) {
  if (j < 1 || j >= n) throw domain_error("pivot slot j must satisfy 1 <= j < n");
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[0] = kappa - 1;
  e[static_cast<std::size_t>(j)] = 1;
  return MultiIndex(std::move(e));
}

int MultiIndex::weight() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0); }

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (size() != other.size()) throw domain_error("multi-index length mismatch");
  std::vector<int> e(entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.entries_[i];
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (size() != other.size()) throw domain_error("multi-index length mismatch");
  std::vector<int> e(entries_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= other.entries_[i];
  return MultiIndex(std::move(e));
}

bool MultiIndex::divides(const MultiIndex& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] > other.entries_[i]) return false;
  }
  return true;
}

std::string MultiIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

bool graded_less(const MultiIndex& a, const MultiIndex& b) {
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa < wb;
  // Same weight: the lexicographically larger exponent comes first.
  return b.entries() < a.entries();
}

std::int64_t binomial(int a, int b) {
  if (b < 0 || a < 0 || b > a) return 0;
  b = std::min(b, a - b);
  std::int64_t r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

int ambient_dimension(int n, int q) { return static_cast<int>(binomial(n + q, n)) - 1; }

namespace {

// Number of exponents in n variables with weight exactly d.
std::int64_t count_weight(int n, int d) {
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(d + n - 1, n - 1);
}

// Slot of alpha among all monomials (constant included) in graded order.
std::int64_t graded_slot(const MultiIndex& alpha) {
  const int n = alpha.size();
  const int d = alpha.weight();
  std::int64_t slot = d == 0 ? 0 : binomial(n + d - 1, n);
  int rem = d;
  for (int i = 0; i + 1 < n; ++i) {
    // Exponents agreeing on slots < i and larger at slot i precede alpha.
    for (int v = alpha[i] + 1; v <= rem; ++v) slot += count_weight(n - i - 1, rem - v);
    rem -= alpha[i];
  }
  return slot;
}

void enumerate_weight(int n, int d, std::vector<int>& cur, int pos, std::vector<MultiIndex>& out) {
  if (pos == n - 1) {
    cur[static_cast<std::size_t>(pos)] = d;
    out.emplace_back(cur);
    return;
  }
  for (int v = d; v >= 0; --v) {
    cur[static_cast<std::size_t>(pos)] = v;
    enumerate_weight(n, d - v, cur, pos + 1, out);
  }
}

}  // namespace

int canonical_index(const MultiIndex& alpha, int n, int q) {
  if (alpha.size() != n) throw domain_error("multi-index has " + std::to_string(alpha.size()) +
                                            " entries, expected " + std::to_string(n));
  const int w = alpha.weight();
  if (w < 1 || w > q) {
    throw domain_error("weight " + std::to_string(w) + " of (" + alpha.to_string() +
                       ") outside 1.." + std::to_string(q));
  }
  return static_cast<int>(graded_slot(alpha)) - 1;
}

std::vector<MultiIndex> indices_of_weight(int n, int d) {
  std::vector<MultiIndex> out;
  if (n <= 0 || d < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  enumerate_weight(n, d, cur, 0, out);
  return out;
}

std::vector<MultiIndex> coordinate_indices(int n, int q) {
  std::vector<MultiIndex> out;
  for (int d = 1; d <= q; ++d) {
    auto layer = indices_of_weight(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

MonomialTable::MonomialTable(int n, int trunc) : n_(n), trunc_(trunc) {
  if (n < 1) throw domain_error("monomial table needs at least one variable");
  if (trunc < 0) throw domain_error("truncation order must be non-negative");
  for (int d = 0; d <= trunc; ++d) {
    offsets_.push_back(static_cast<int>(exps_.size()));
    for (auto& a : indices_of_weight(n, d)) {
      exps_.push_back(std::move(a));
      degrees_.push_back(d);
    }
  }
  offsets_.push_back(static_cast<int>(exps_.size()));
  const std::size_t m = exps_.size();
  products_.assign(m * m, -1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (degrees_[i] + degrees_[j] > trunc) continue;
      products_[i * m + j] = static_cast<std::int32_t>(graded_slot(exps_[i] + exps_[j]));
    }
  }
}

int MonomialTable::index_of(const MultiIndex& alpha) const {
  if (alpha.size() != n_) throw domain_error("multi-index length does not match jet variables");
  if (alpha.weight() > trunc_) return -1;
  return static_cast<int>(graded_slot(alpha));
}

std::shared_ptr<const MonomialTable> MonomialTable::get(int n, int trunc) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, trunc}];
  if (!slot) slot = std::make_shared<const MonomialTable>(n, trunc);
  return slot;
}

}  // namespace veronese
