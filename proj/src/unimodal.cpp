#include "schurkit/unimodal.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace schurkit {

bool is_unimodal(const Permutation& pi) {
  const int m = unimodal_max(pi);
  for (int i = 1; i < m; ++i)
    if (pi(i) > pi(i + 1)) return false;
  for (int i = m; i < pi.size(); ++i)
    if (pi(i) < pi(i + 1)) return false;
  return true;
}

int unimodal_max(const Permutation& pi) {
  for (int i = 1; i <= pi.size(); ++i)
    if (pi(i) == pi.size()) return i;
  throw std::logic_error("unimodal_max: value n not found");
}

IntPolynomial unimodal_maxima_poly(const std::vector<Permutation>& set) {
  IntPolynomial u;
  for (const Permutation& pi : set)
    if (is_unimodal(pi)) u.add_term(unimodal_max(pi), 1);
  return u;
}

std::vector<Permutation> enumerate_unimodal(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("enumerate_unimodal: requires 1 <= n <= 16");
  std::vector<Permutation> out;
  out.reserve(std::size_t{1} << (n - 1));
  // The ascending prefix is any subset of [n-1]; the rest descends after n.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
    std::vector<int> w;
    w.reserve(n);
    for (int v = 1; v < n; ++v)
      if ((mask >> (v - 1)) & 1) w.push_back(v);
    w.push_back(n);
    for (int v = n - 1; v >= 1; --v)
      if (!((mask >> (v - 1)) & 1)) w.push_back(v);
    out.emplace_back(std::move(w));
  }
  return out;
}

std::vector<Permutation> enumerate_unimodal_cycles(int n) {
  std::vector<Permutation> out;
  for (Permutation& pi : enumerate_unimodal(n))
    if (cycle_type(pi).length() == 1) out.push_back(std::move(pi));
  return out;
}

long long brute_delta_count(int n, int m) {
  if (m < 1 || m > n) throw std::invalid_argument("brute_delta_count: m out of range");
  long long count = 0;
  for (const Permutation& pi : enumerate_unimodal_cycles(n))
    if (unimodal_max(pi) == m) ++count;
  return count;
}

int mobius(long long n) {
  if (n < 1) throw std::invalid_argument("mobius: n must be positive");
  int mu = 1;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long gannon_variant1(int n, int m) {
  long long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || d > n - m) continue;
    long long inner = 0;
    for (int j = 1; j <= (n - m) / d; ++j) {
      long long term = binom(n / d, j);
      inner += (j % 2 == 0) ? term : -term;
    }
    s += mobius(d) * inner;
  }
  if ((n - m) % 2 != 0) s = -s;
  if (s % n != 0) throw std::logic_error("gannon_count: variant 1 sum not divisible by n");
  return (n == 1 && m == 1 ? 1 : 0) + s / n;
}

long long gannon_variant2(int n, int m) {
  long long s = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || d >= m) continue;
    long long inner = 0;
    const int top = (m + d - 1) / d - 1;  // ceil(m/d) - 1
    for (int j = 1; j <= top; ++j) {
      long long term = binom(n / d, j);
      inner += ((j + n / d) % 2 == 0) ? term : -term;
    }
    s += mobius(d) * inner;
  }
  if ((n - m + 1) % 2 != 0) s = -s;
  if (s % n != 0) throw std::logic_error("gannon_count: variant 2 sum not divisible by n");
  long long v = s / n;
  if (n == 1 && m == 1) v += 1;
  if (n == 2) v += (m % 2 == 0) ? -1 : 1;  // (-1)^{m+1} delta_{n,2}
  return v;
}

}  // namespace

long long gannon_count(int n, int m) {
  if (n < 1) throw std::invalid_argument("gannon_count: n must be positive");
  if (m < 1 || m > n) throw std::invalid_argument("gannon_count: requires 1 <= m <= n");
  const long long v1 = gannon_variant1(n, m);
  const long long v2 = gannon_variant2(n, m);
  if (v1 != v2) throw std::logic_error("gannon_count: the two displayed variants disagree");
  return v1;
}

Permutation unimodal_sum(const std::vector<Permutation>& parts,
                         const std::vector<SubsetOfRange>& js) {
  if (parts.empty() || parts.size() != js.size())
    throw std::invalid_argument("unimodal_sum: need as many index sets as parts");
  int total = 0;
  for (const Permutation& p : parts) {
    if (!is_unimodal(p)) throw std::invalid_argument("unimodal_sum: parts must be unimodal");
    total += p.size();
  }
  std::vector<int> word(total, 0);
  std::vector<bool> covered(total + 1, false);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (js[i].universe() != total)
      throw std::invalid_argument("unimodal_sum: index set universe must be the total size");
    const std::vector<int> omega = js[i].members();
    if (static_cast<int>(omega.size()) != parts[i].size())
      throw std::invalid_argument("unimodal_sum: index set size must match the part size");
    for (int x : omega) {
      if (covered[x]) throw std::invalid_argument("unimodal_sum: index sets overlap");
      covered[x] = true;
    }
    for (int x = 1; x <= parts[i].size(); ++x) word[omega[x - 1] - 1] = omega[parts[i](x) - 1];
  }
  for (int x = 1; x <= total; ++x)
    if (!covered[x]) throw std::invalid_argument("unimodal_sum: index sets do not cover [n]");
  return Permutation(std::move(word));
}

SubsetOfRange find_unique_j(const Permutation& sigma1, const Permutation& sigma2) {
  if (cycle_type(sigma1).length() != 1 || cycle_type(sigma2).length() != 1)
    throw std::invalid_argument("find_unique_j: parts must be full cycles");
  if (!is_unimodal(sigma1) || !is_unimodal(sigma2))
    throw std::invalid_argument("find_unique_j: parts must be unimodal");
  const int n1 = sigma1.size();
  const int n2 = sigma2.size();
  const int total = n1 + n2;
  if (total > 16) throw std::invalid_argument("find_unique_j: total size exceeds 16");
  const int m1 = unimodal_max(sigma1);
  const int m2 = unimodal_max(sigma2);
  std::vector<SubsetOfRange> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << total); ++mask) {
    if (std::popcount(mask) != n1) continue;
    SubsetOfRange j(total, mask);
    SubsetOfRange jbar(total, ~mask & ((std::uint64_t{1} << total) - 1));
    if (j.members()[m1 - 1] > jbar.members()[m2 - 1]) continue;  // maxima-order convention
    if (is_unimodal(unimodal_sum({sigma1, sigma2}, {j, jbar}))) found.push_back(j);
  }
  if (found.size() != 1)
    throw std::logic_error("find_unique_j: expected exactly one J, found " +
                           std::to_string(found.size()));
  return found.front();
}

CycleFlavor acute_or_grave(const Permutation& sigma) {
  if (cycle_type(sigma).length() != 1)
    throw std::invalid_argument("acute_or_grave: needs a full cycle");
  if (!is_unimodal(sigma)) throw std::invalid_argument("acute_or_grave: needs a unimodal cycle");
  return (unimodal_max(sigma) % 2 == sigma.size() % 2) ? CycleFlavor::Acute : CycleFlavor::Grave;
}

KFoldSum k_fold_sum(const Permutation& sigma, int k) {
  if (k < 1) throw std::invalid_argument("k_fold_sum: k must be positive");
  if (k * sigma.size() > 16) throw std::invalid_argument("k_fold_sum: total size exceeds 16");
  CycleShapeMultiset ms({{sigma, k}});
  std::vector<Permutation> span = span_enumerate(ms);
  if (span.size() != 1)
    throw std::logic_error("k_fold_sum: self-sum is not unique");
  const int m = unimodal_max(sigma);
  const int expected =
      acute_or_grave(sigma) == CycleFlavor::Acute ? k * m : k * (m - 1) + 1;
  KFoldSum out{std::move(span.front()), 0};
  out.max_pos = unimodal_max(out.perm);
  if (out.max_pos != expected)
    throw std::logic_error("k_fold_sum: maximum disagrees with the closed form");
  return out;
}

std::vector<Permutation> cycle_shapes(const Permutation& pi) {
  const int n = pi.size();
  std::vector<bool> seen(n + 1, false);
  std::vector<Permutation> shapes;
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<int> block;
    for (int v = s; !seen[v]; v = pi(v)) {
      seen[v] = true;
      block.push_back(v);
    }
    std::sort(block.begin(), block.end());
    std::vector<int> shape(block.size());
    for (std::size_t x = 0; x < block.size(); ++x) {
      const int image = pi(block[x]);
      const auto it = std::lower_bound(block.begin(), block.end(), image);
      shape[x] = static_cast<int>(it - block.begin()) + 1;
    }
    shapes.emplace_back(std::move(shape));
  }
  return shapes;
}

CycleShapeMultiset::CycleShapeMultiset(std::vector<std::pair<Permutation, int>> items)
    : items_(std::move(items)) {
  for (auto& [shape, mult] : items_) {
    if (mult < 1) throw std::invalid_argument("CycleShapeMultiset: multiplicity must be positive");
    if (cycle_type(shape).length() != 1)
      throw std::invalid_argument("CycleShapeMultiset: shapes must be full cycles");
    if (!is_unimodal(shape))
      throw std::invalid_argument("CycleShapeMultiset: shapes must be unimodal");
  }
  auto key = [](const std::pair<Permutation, int>& it) {
    return std::make_pair(it.first.size(), it.first.word());
  };
  std::sort(items_.begin(), items_.end(),
            [&](const auto& x, const auto& y) { return key(x) < key(y); });
  for (std::size_t i = 1; i < items_.size(); ++i)
    if (items_[i].first == items_[i - 1].first)
      throw std::invalid_argument("CycleShapeMultiset: shapes must be pairwise distinct");
}

CycleShapeMultiset CycleShapeMultiset::of(const Permutation& unimodal_pi) {
  std::vector<Permutation> shapes = cycle_shapes(unimodal_pi);
  std::sort(shapes.begin(), shapes.end(), [](const Permutation& a, const Permutation& b) {
    return std::make_pair(a.size(), a.word()) < std::make_pair(b.size(), b.word());
  });
  std::vector<std::pair<Permutation, int>> items;
  for (Permutation& s : shapes) {
    if (!items.empty() && items.back().first == s) ++items.back().second;
    else items.emplace_back(std::move(s), 1);
  }
  return CycleShapeMultiset(std::move(items));
}

int CycleShapeMultiset::total_size() const {
  int total = 0;
  for (const auto& [shape, mult] : items_) total += shape.size() * mult;
  return total;
}

std::vector<Permutation> span_enumerate(const CycleShapeMultiset& ms) {
  const int total = ms.total_size();
  if (total > 16) throw std::invalid_argument("span_enumerate: total size exceeds 16");
  std::vector<Permutation> out;
  for (Permutation& pi : enumerate_unimodal(total))
    if (CycleShapeMultiset::of(pi) == ms) out.push_back(std::move(pi));
  return out;
}

}  // namespace schurkit
