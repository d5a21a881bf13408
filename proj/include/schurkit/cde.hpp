#ifndef SCHURKIT_CDE_HPP
#define SCHURKIT_CDE_HPP

#include <string>
#include <vector>

#include "schurkit/perm.hpp"
#include "schurkit/poly.hpp"
#include "schurkit/subset.hpp"

namespace schurkit {

// Outcome of the hook-polynomial criterion: a cyclic descent extension exists
// iff 1+x divides H exactly and the quotient has non-negative coefficients.
struct CdeVerdict {
  bool exists = false;
  IntPolynomial quotient;  // meaningful when exists
  std::string reason;      // which condition failed, when !exists
};

CdeVerdict cde_exists(const IntPolynomial& hook_poly);

// The suffix interval {n-k, ..., n-1} as a subset of [n-1]; empty for k = 0.
SubsetOfRange suffix_interval(int n, int k);

// Coefficient of x^k counts the members whose descent set is the suffix
// interval of size k. Valid as the hook polynomial for Schur-positive sets.
IntPolynomial hook_poly_of_set(int degree, const std::vector<SubsetOfRange>& descent_sets);

// Specification of a generalized inverse descent class D^{-1}_{J,n}.
class DescentClassSpec {
 public:
  enum class Family { Single, PowerSet, Interval, Chain, Explicit };

  static DescentClassSpec single(int n, const SubsetOfRange& j);
  static DescentClassSpec power_set(int n, const SubsetOfRange& j);
  static DescentClassSpec interval(int n, const SubsetOfRange& i, const SubsetOfRange& j);
  // The maximal chain from I to J adding the elements of J\I in increasing order.
  static DescentClassSpec chain(int n, const SubsetOfRange& i, const SubsetOfRange& j);
  static DescentClassSpec explicit_list(int n, std::vector<SubsetOfRange> sets);

  Family family() const { return family_; }
  int n() const { return n_; }
  const SubsetOfRange& lower() const { return lower_; }
  const SubsetOfRange& upper() const { return upper_; }
  // The realized family of inverse descent sets, deduplicated and sorted.
  std::vector<SubsetOfRange> member_sets() const;

 private:
  DescentClassSpec(Family f, int n) : family_(f), n_(n) {}
  Family family_;
  int n_;
  SubsetOfRange lower_;
  SubsetOfRange upper_;
  std::vector<SubsetOfRange> explicit_;
};

// All pi in S_n with Des(pi^{-1}) in the family. Requires n <= 8.
std::vector<Permutation> generalized_inv_des_class(const DescentClassSpec& spec);

// Closed-form hook polynomial: sum over the family of x^{|J|}.
IntPolynomial hook_poly(const DescentClassSpec& spec);

std::vector<Permutation> inv_class(long long k, int n);   // n <= 8
std::vector<Permutation> imaj_class(long long k, int n);  // n <= 8

// Partitions of k into distinct parts, and their length generating polynomial
// Pd_k(x). Requires 0 <= k <= 60.
std::vector<Partition> distinct_partitions(long long k);
IntPolynomial pd_poly(long long k);

struct PentagonalWitness {
  bool pentagonal = false;
  long long m = 0;  // witness with k = m(3m+sign)/2, m >= 1
  int sign = 0;
};

// True iff k = m(3m+/-1)/2 for some m >= 1. k = 0 reports false (the m = 0
// edge; the Euler coefficient a_0 = 1 is handled by callers).
PentagonalWitness is_generalized_pentagonal(long long k);

struct FranklinResult {
  bool fixed = false;   // the exceptional staircase
  Partition image;      // meaningful when !fixed
};

// Franklin's cell move on a distinct-part partition; an involution away from
// the staircases (2m,...,m+1) and (2m-1,...,m), changing the length by one.
FranklinResult franklin_involution(const Partition& lambda);

// CDE existence for permutations of S_n with k inversions; requires k < n.
// Cross-checked against cde_exists(pd_poly(k)).
bool cde_for_inv_k(long long k, int n);

// All pi in S_n with pi^d = e. Requires n <= 8.
std::vector<Permutation> roots_of_unity(int d, int n);

// CDE existence for the conjugacy class C_lambda.
bool cde_for_conjugacy_class(const Partition& lambda);

enum class UrootCdeStatus { Yes, No, Conjectural };

struct UrootCdeResult {
  UrootCdeStatus status = UrootCdeStatus::Conjectural;
  std::string basis;        // short explanation of the verdict
  bool has_brute = false;   // a direct computation is attached
  CdeVerdict brute;
};

// Proved verdicts where available: "no" when gcd(d,n) = 1, "yes" when d is a
// prime power sharing a factor with n; otherwise conjectural, with a direct
// hook-polynomial computation attached for n <= 8.
UrootCdeResult cde_for_roots_of_unity(int d, int n);

// Coefficients of prod_{m=1}^{max_degree} (1 - x^m), truncated to max_degree.
IntPolynomial euler_product_coeffs(int max_degree);

}  // namespace schurkit

#endif
