#ifndef SCHURKIT_QSYM_HPP
#define SCHURKIT_QSYM_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "schurkit/perm.hpp"
#include "schurkit/poly.hpp"
#include "schurkit/subset.hpp"
#include "schurkit/tableaux.hpp"

namespace schurkit {

// Integer vector in the fundamental basis F_{n,D}, D a subset of [n-1].
// Keys are subset bitmasks; absent keys mean coefficient zero.
class QSymVector {
 public:
  explicit QSymVector(int degree);
  static QSymVector fundamental(int degree, const SubsetOfRange& d);

  int degree() const { return degree_; }
  long long coeff(const SubsetOfRange& d) const;
  long long coeff_mask(std::uint64_t mask) const;
  void add(const SubsetOfRange& d, long long c);
  void add_mask(std::uint64_t mask, long long c);
  const std::map<std::uint64_t, long long>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  QSymVector& operator+=(const QSymVector& rhs);
  QSymVector& operator-=(const QSymVector& rhs);
  friend QSymVector operator+(QSymVector a, const QSymVector& b) { return a += b; }
  friend QSymVector operator-(QSymVector a, const QSymVector& b) { return a -= b; }

  friend bool operator==(const QSymVector&, const QSymVector&) = default;

 private:
  int degree_;
  std::map<std::uint64_t, long long> coeffs_;
};

// Integer vector in the monomial basis M_alpha. Compositions of n are encoded
// by their boundary subsets: comp(S) = (s_1, s_2-s_1, ..., n-s_k) for
// S = {s_1 < ... < s_k} in [n-1].
class MonomialVector {
 public:
  explicit MonomialVector(int degree);

  int degree() const { return degree_; }
  long long coeff_mask(std::uint64_t boundary) const;
  void add_mask(std::uint64_t boundary, long long c);
  const std::map<std::uint64_t, long long>& coeffs() const { return coeffs_; }

  friend bool operator==(const MonomialVector&, const MonomialVector&) = default;

 private:
  int degree_;
  std::map<std::uint64_t, long long> coeffs_;
};

// The composition of n with boundary set S, and the partition obtained by
// sorting its parts.
std::vector<int> composition_of_boundary(int n, std::uint64_t boundary);
Partition partition_of_composition(const std::vector<int>& comp);

// Q(B) = sum of F_{n,Des(b)} over the stream of descent sets.
QSymVector qsym_of_set(int degree, const std::vector<SubsetOfRange>& descent_sets);
// Q over the descent sets of all SYT of the given (possibly skew) shape.
QSymVector qsym_of_syt(const SkewShape& shape);

// F_{n,D} = sum over S containing D of M_{comp(S)}.
MonomialVector fundamental_to_monomial(const QSymVector& v);

// True iff the monomial coefficients are constant on rearrangement classes.
bool is_symmetric(const QSymVector& v);

// Q(SYT(lambda)); equals the Schur function s_lambda in the fundamental basis.
QSymVector schur_in_fundamental(const Partition& lambda);

struct SchurExpandResult {
  bool in_span = false;                    // false: no exact integer expansion
  std::map<Partition, long long> coeffs;   // zero coefficients omitted
  bool schur_positive = false;
};

// Expand v as an exact integer combination of s_lambda, lambda a partition of
// the degree. Solved against the SYT descent-distribution vectors.
SchurExpandResult schur_expand(const QSymVector& v);

// Coefficient of x^k is the multiplicity of the hook (n-k, 1^k).
IntPolynomial hook_coeffs(int degree, const std::map<Partition, long long>& expansion);

}  // namespace schurkit

#endif
