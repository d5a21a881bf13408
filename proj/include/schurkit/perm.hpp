#ifndef SCHURKIT_PERM_HPP
#define SCHURKIT_PERM_HPP

#include <algorithm>
#include <compare>
#include <vector>

#include "schurkit/subset.hpp"

namespace schurkit {

// A permutation of [n] in one-line notation. Positions and values are 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  Permutation inverse() const;
  bool is_identity() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
  std::vector<int> word_;
  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation rotate(const Permutation&);
};

// (f * g)(i) = f(g(i)); the right factor acts first.
Permutation compose(const Permutation& f, const Permutation& g);

// A partition: weakly decreasing positive parts. The empty partition has sum 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int sum() const;
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  // 1-based; zero beyond the last part.
  int part(int i) const;
  bool contains(const Partition& inner) const;
  bool empty() const { return parts_.empty(); }

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// Des(pi) = { i in [n-1] : pi_i > pi_{i+1} }.
SubsetOfRange des_set(const Permutation& pi);

// Cellini's cyclic descent set over [n], with pi_{n+1} := pi_1. Requires n >= 2.
SubsetOfRange cdes_cellini(const Permutation& pi);

// rho(pi) = [pi_n, pi_1, ..., pi_{n-1}].
Permutation rotate(const Permutation& pi);

long long inv_count(const Permutation& pi);
long long maj(const Permutation& pi);
long long imaj(const Permutation& pi);

Partition cycle_type(const Permutation& pi);
long long perm_order(const Permutation& pi);

long long partition_lcm(const Partition& lambda);
// True iff lambda = (r^s) with r square-free.
bool is_rect_squarefree(const Partition& lambda);

// Upper bound on n for full S_n sweeps; default 9.
int sn_enumeration_bound();
void set_sn_enumeration_bound(int n);

// Calls f(word) for every permutation word of [n] in lexicographic order.
// The buffer is reused between calls.
template <class F>
void for_each_permutation(int n, F&& f) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  do {
    f(static_cast<const std::vector<int>&>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> all_permutations(int n);
std::vector<Permutation> conjugacy_class(const Partition& lambda);
std::vector<Partition> partitions_of(int n);

}  // namespace schurkit

#endif
