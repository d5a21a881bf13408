#ifndef SCHURKIT_UNIMODAL_HPP
#define SCHURKIT_UNIMODAL_HPP

#include <utility>
#include <vector>

#include "schurkit/perm.hpp"
#include "schurkit/poly.hpp"
#include "schurkit/subset.hpp"

namespace schurkit {

// A word is unimodal when it rises to the value n and then falls.
bool is_unimodal(const Permutation& pi);
// Position of the value n.
int unimodal_max(const Permutation& pi);

// Coefficient of x^k counts the unimodal members with maximum at position k.
IntPolynomial unimodal_maxima_poly(const std::vector<Permutation>& set);

// All 2^(n-1) unimodal permutations of [n], in a fixed order. Requires n <= 16.
std::vector<Permutation> enumerate_unimodal(int n);
// The unimodal full n-cycles. Requires n <= 16.
std::vector<Permutation> enumerate_unimodal_cycles(int n);
// |{unimodal full n-cycles with maximum at m}| by direct scan.
long long brute_delta_count(int n, int m);

// The same count by Gannon's Moebius-sum formula, in exact integer
// arithmetic. Both displayed variants are evaluated and must agree.
long long gannon_count(int n, int m);

int mobius(long long n);

// pi_1 (+)_{J_1} ... (+)_{J_k} pi_k: conjugate each part onto its index set by
// the order preserving bijection. The J_i must partition [sum of sizes].
Permutation unimodal_sum(const std::vector<Permutation>& parts,
                         const std::vector<SubsetOfRange>& js);

// The unique J making sigma1 (+)_J sigma2 unimodal with the maxima-order
// convention Omega(m_1) < Omega-bar(m_2). Exhaustive scan; sizes sum <= 16.
// Throws std::logic_error if zero or several J are found.
SubsetOfRange find_unique_j(const Permutation& sigma1, const Permutation& sigma2);

enum class CycleFlavor { Acute, Grave };
// Acute iff the maximum position has the same parity as the cycle length.
CycleFlavor acute_or_grave(const Permutation& sigma);

struct KFoldSum {
  Permutation perm;
  int max_pos;
};

// The unique unimodal k-fold self-sum of a unimodal full cycle; the maximum
// is k*m for acute shapes and k(m-1)+1 for grave ones. Requires k*n <= 16.
KFoldSum k_fold_sum(const Permutation& sigma, int k);

// Shapes of the cycles of pi (invariant blocks relabeled to [block size]).
std::vector<Permutation> cycle_shapes(const Permutation& pi);

// A multiset of distinct unimodal full-cycle shapes with multiplicities.
class CycleShapeMultiset {
 public:
  explicit CycleShapeMultiset(std::vector<std::pair<Permutation, int>> items);
  static CycleShapeMultiset of(const Permutation& unimodal_pi);

  const std::vector<std::pair<Permutation, int>>& items() const { return items_; }
  int total_size() const;
  int distinct_shapes() const { return static_cast<int>(items_.size()); }

  friend bool operator==(const CycleShapeMultiset&, const CycleShapeMultiset&) = default;

 private:
  std::vector<std::pair<Permutation, int>> items_;
};

// All unimodal permutations whose subcycle shape multiset equals ms, by
// filtered scan of the unimodal permutations of the total size (<= 16).
std::vector<Permutation> span_enumerate(const CycleShapeMultiset& ms);

}  // namespace schurkit

#endif
