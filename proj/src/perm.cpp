#include "schurkit/perm.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>

namespace schurkit {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n < 1) throw std::invalid_argument("Permutation: empty word");
  std::vector<bool> seen(n, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v - 1])
      throw std::invalid_argument("Permutation: word is not a bijection of [n]");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("Permutation::identity: n must be positive");
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w), Unchecked{});
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(word_.size());
  for (int i = 1; i <= size(); ++i) inv[word_[i - 1] - 1] = i;
  return Permutation(std::move(inv), Unchecked{});
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (word_[i - 1] != i) return false;
  return true;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  if (f.size() != g.size()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(f.size());
  for (int i = 1; i <= f.size(); ++i) w[i - 1] = f(g(i));
  return Permutation(std::move(w), Permutation::Unchecked{});
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition::part: index is 1-based");
  return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > part(i)) return false;
  return true;
}

SubsetOfRange des_set(const Permutation& pi) {
  const int n = pi.size();
  SubsetOfRange d = SubsetOfRange::empty(n - 1);
  for (int i = 1; i < n; ++i)
    if (pi(i) > pi(i + 1)) d = d.with(i);
  return d;
}

SubsetOfRange cdes_cellini(const Permutation& pi) {
  const int n = pi.size();
  if (n < 2)
    throw std::invalid_argument("cdes_cellini: needs n >= 2 (non-Escher fails on S_1)");
  SubsetOfRange d = SubsetOfRange::empty(n);
  for (int i = 1; i < n; ++i)
    if (pi(i) > pi(i + 1)) d = d.with(i);
  if (pi(n) > pi(1)) d = d.with(n);
  return d;
}

Permutation rotate(const Permutation& pi) {
  std::vector<int> w;
  w.reserve(pi.size());
  w.push_back(pi(pi.size()));
  for (int i = 1; i < pi.size(); ++i) w.push_back(pi(i));
  return Permutation(std::move(w), Permutation::Unchecked{});
}

long long inv_count(const Permutation& pi) {
  long long inv = 0;
  const int n = pi.size();
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (pi(i) > pi(j)) ++inv;
  return inv;
}

long long maj(const Permutation& pi) {
  long long m = 0;
  for (int i = 1; i < pi.size(); ++i)
    if (pi(i) > pi(i + 1)) m += i;
  return m;
}

long long imaj(const Permutation& pi) { return maj(pi.inverse()); }

Partition cycle_type(const Permutation& pi) {
  const int n = pi.size();
  std::vector<bool> seen(n + 1, false);
  std::vector<int> lengths;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (int v = s; !seen[v]; v = pi(v)) {
      seen[v] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

long long perm_order(const Permutation& pi) { return partition_lcm(cycle_type(pi)); }

long long partition_lcm(const Partition& lambda) {
  long long l = 1;
  for (int p : lambda.parts()) l = std::lcm(l, static_cast<long long>(p));
  return l;
}

namespace {
bool is_squarefree(int r) {
  for (int p = 2; p * p <= r; ++p)
    if (r % (p * p) == 0) return false;
  return true;
}
}  // namespace

bool is_rect_squarefree(const Partition& lambda) {
  if (lambda.empty()) return false;
  const int r = lambda.part(1);
  for (int p : lambda.parts())
    if (p != r) return false;
  return is_squarefree(r);
}

namespace {
std::atomic<int> g_sn_bound{9};
}

int sn_enumeration_bound() { return g_sn_bound.load(); }

void set_sn_enumeration_bound(int n) {
  if (n < 1) throw std::invalid_argument("set_sn_enumeration_bound: n must be positive");
  g_sn_bound.store(n);
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("all_permutations: n must be positive");
  if (n > sn_enumeration_bound())
    throw std::invalid_argument("all_permutations: n exceeds the enumeration bound");
  std::vector<Permutation> out;
  long long count = 1;
  for (int i = 2; i <= n; ++i) count *= i;
  out.reserve(count);
  for_each_permutation(n, [&](const std::vector<int>& w) { out.emplace_back(w); });
  return out;
}

std::vector<Permutation> conjugacy_class(const Partition& lambda) {
  const int n = lambda.sum();
  if (n < 1) throw std::invalid_argument("conjugacy_class: empty cycle type");
  if (n > sn_enumeration_bound())
    throw std::invalid_argument("conjugacy_class: n exceeds the enumeration bound");
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    Permutation pi(w);
    if (cycle_type(pi) == lambda) out.push_back(std::move(pi));
  });
  return out;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  // Parts chosen weakly decreasing, largest first.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace schurkit
