#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "schurkit/cde.hpp"
#include "schurkit/perm.hpp"
#include "schurkit/unimodal.hpp"

using namespace schurkit;

namespace {

IntPolynomial uroot_maxima_poly(int d, int n) {
  IntPolynomial u;
  for (const Permutation& pi : enumerate_unimodal(n))
    if (d % perm_order(pi) == 0) u.add_term(unimodal_max(pi), 1);
  return u;
}

}  // namespace

TEST_CASE("unimodality and maxima") {
  CHECK(is_unimodal(Permutation({1, 2, 3})));
  CHECK(unimodal_max(Permutation({1, 2, 3})) == 3);
  CHECK(is_unimodal(Permutation({2, 3, 1})));
  CHECK(unimodal_max(Permutation({2, 3, 1})) == 2);
  CHECK_FALSE(is_unimodal(Permutation({3, 1, 2})));
  CHECK_FALSE(is_unimodal(Permutation({3, 4, 1, 2})));
  CHECK(is_unimodal(Permutation({4, 3, 2, 1})));
}

TEST_CASE("unimodal enumeration") {
  for (int n = 1; n <= 10; ++n) {
    const auto all = enumerate_unimodal(n);
    CHECK(all.size() == (std::size_t{1} << (n - 1)));
    std::set<Permutation> dedup(all.begin(), all.end());
    CHECK(dedup.size() == all.size());
    for (const Permutation& pi : all) CHECK(is_unimodal(pi));
  }
  // Exhaustive cross-check against a full sweep of S_n.
  for (int n = 1; n <= 7; ++n) {
    long long direct = 0;
    for_each_permutation(n, [&](const std::vector<int>& w) {
      if (is_unimodal(Permutation(w))) ++direct;
    });
    CHECK(direct == static_cast<long long>(enumerate_unimodal(n).size()));
  }
}

TEST_CASE("unimodal full cycles") {
  const auto d3 = enumerate_unimodal_cycles(3);
  REQUIRE(d3.size() == 1);
  CHECK(d3[0] == Permutation({2, 3, 1}));
  CHECK(brute_delta_count(3, 2) == 1);
  CHECK(brute_delta_count(3, 1) == 0);
  CHECK(brute_delta_count(3, 3) == 0);

  CHECK(enumerate_unimodal_cycles(1).size() == 1);  // the delta_{n,1} case
  const auto d2 = enumerate_unimodal_cycles(2);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0] == Permutation({2, 1}));
  CHECK(unimodal_max(d2[0]) == 1);
}

TEST_CASE("unimodal maxima polynomial") {
  CHECK(unimodal_maxima_poly({Permutation::identity(5)}) == IntPolynomial::monomial(5));
  CHECK(uroot_maxima_poly(3, 3) == IntPolynomial({0, 0, 1, 1}));  // x^2 + x^3

  // Reversal identity U_A(x) = x^n H_A(1/x) on Schur-positive families.
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::vector<Permutation>> families = {roots_of_unity(2, n)};
    for (int k = 0; k < n; ++k) families.push_back(inv_class(k, n));
    for (const auto& family : families) {
      std::vector<SubsetOfRange> des;
      for (const Permutation& pi : family) des.push_back(des_set(pi));
      const IntPolynomial h = hook_poly_of_set(n, des);
      CHECK(unimodal_maxima_poly(family) == reversed(h, n));
    }
  }
}

TEST_CASE("Gannon formula") {
  CHECK(gannon_count(3, 2) == 1);
  for (int p : {3, 5, 7, 11}) CHECK(gannon_count(p, p) == 0);
  for (int p : {3, 5, 7}) {
    for (int m = 1; m <= p - 1; ++m) {
      long long binom = 1;
      for (int i = 1; i <= m - 1; ++i) binom = binom * (p - 1 - (m - 1) + i) / i;
      const long long expected = (binom + (m % 2 == 0 ? 1 : -1)) / p;
      CHECK(gannon_count(p, m) == expected);
    }
  }
  for (int n = 1; n <= 10; ++n)
    for (int m = 1; m <= n; ++m) CHECK(gannon_count(n, m) == brute_delta_count(n, m));
  CHECK_THROWS_AS(gannon_count(4, 5), std::invalid_argument);
}

TEST_CASE("unimodal sums") {
  const Permutation two({2, 1});
  CHECK(unimodal_sum({two}, {SubsetOfRange::full(2)}) == two);

  const Permutation glued =
      unimodal_sum({two, two}, {SubsetOfRange(4, {1, 3}), SubsetOfRange(4, {2, 4})});
  CHECK(glued == Permutation({3, 4, 1, 2}));

  CHECK_THROWS_AS(unimodal_sum({two, two}, {SubsetOfRange(4, {1, 2}), SubsetOfRange(4, {2, 4})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(unimodal_sum({two}, {SubsetOfRange(3, {1, 2})}), std::invalid_argument);

  // Cycle shapes of the result equal the multiset of part shapes.
  const Permutation c3({2, 3, 1});
  const Permutation sum = unimodal_sum({two, c3}, {SubsetOfRange(5, {2, 4}), SubsetOfRange(5, {1, 3, 5})});
  auto shapes = cycle_shapes(sum);
  std::multiset<std::vector<int>> got;
  for (const Permutation& s : shapes) got.insert(s.word());
  CHECK(got == std::multiset<std::vector<int>>{{2, 1}, {2, 3, 1}});
}

TEST_CASE("find_unique_j") {
  const Permutation two({2, 1});
  const SubsetOfRange j = find_unique_j(two, two);
  // Exactly one element of {2k-1, 2k} for each k.
  for (int k = 1; k <= 2; ++k) CHECK((j.contains(2 * k - 1) ^ j.contains(2 * k)));

  const Permutation c3({2, 3, 1});
  const SubsetOfRange j2 = find_unique_j(two, c3);
  SubsetOfRange j2bar(5, ~j2.bits() & 0b11111);
  const Permutation s = unimodal_sum({two, c3}, {j2, j2bar});
  CHECK(is_unimodal(s));
  const int m = unimodal_max(s);
  CHECK((m == unimodal_max(two) + unimodal_max(c3) ||
         m == unimodal_max(two) + unimodal_max(c3) - 1));
}

TEST_CASE("acute and grave") {
  CHECK(acute_or_grave(Permutation({2, 3, 1})) == CycleFlavor::Grave);
  CHECK(acute_or_grave(Permutation({2, 1})) == CycleFlavor::Grave);
  CHECK(acute_or_grave(Permutation::identity(1)) == CycleFlavor::Acute);
  CHECK(acute_or_grave(Permutation({2, 3, 4, 1})) == CycleFlavor::Grave);   // m=3, n=4
  CHECK(acute_or_grave(Permutation({3, 4, 2, 1})) == CycleFlavor::Acute);   // m=2, n=4
  CHECK_THROWS_AS(acute_or_grave(Permutation({2, 1, 4, 3})), std::invalid_argument);
}

TEST_CASE("k-fold self sums") {
  const Permutation c3({2, 3, 1});
  CHECK(k_fold_sum(c3, 1).perm == c3);
  CHECK(k_fold_sum(c3, 2).max_pos == 3);  // grave: k(m-1)+1
  CHECK(k_fold_sum(Permutation::identity(1), 3).max_pos == 3);  // acute: km
  CHECK(k_fold_sum(Permutation({2, 1}), 2).perm == Permutation({4, 3, 2, 1}));

  // Closed form across the catalog of small cycles.
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& sigma : enumerate_unimodal_cycles(n)) {
      for (int k = 1; k * n <= 12; ++k) {
        const KFoldSum s = k_fold_sum(sigma, k);
        const int m = unimodal_max(sigma);
        const int want =
            acute_or_grave(sigma) == CycleFlavor::Acute ? k * m : k * (m - 1) + 1;
        CHECK(s.max_pos == want);
      }
    }
  }
}

TEST_CASE("restriction of a unimodal permutation to invariant sets is unimodal") {
  for (int n = 1; n <= 8; ++n) {
    for (const Permutation& pi : enumerate_unimodal(n)) {
      // Invariant sets are unions of cycles; their shapes must be unimodal.
      std::vector<std::vector<int>> blocks;
      std::vector<bool> seen(n + 1, false);
      for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<int> block;
        for (int v = s; !seen[v]; v = pi(v)) {
          seen[v] = true;
          block.push_back(v);
        }
        blocks.push_back(std::move(block));
      }
      const std::size_t m = blocks.size();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> members;
        for (std::size_t b = 0; b < m; ++b)
          if ((mask >> b) & 1) members.insert(members.end(), blocks[b].begin(), blocks[b].end());
        std::sort(members.begin(), members.end());
        std::vector<int> shape(members.size());
        for (std::size_t x = 0; x < members.size(); ++x) {
          const auto it = std::lower_bound(members.begin(), members.end(), pi(members[x]));
          shape[x] = static_cast<int>(it - members.begin()) + 1;
        }
        CHECK(is_unimodal(Permutation(shape)));
      }
    }
  }
}

TEST_CASE("spanboxes") {
  const Permutation one = Permutation::identity(1);
  const Permutation two({2, 1});
  const Permutation c3({2, 3, 1});

  CHECK(span_enumerate(CycleShapeMultiset({{two, 2}})).size() == 1);
  CHECK(span_enumerate(CycleShapeMultiset({{c3, 3}})).size() == 1);

  const auto pair_span = span_enumerate(CycleShapeMultiset({{two, 1}, {c3, 1}}));
  CHECK(pair_span.size() == 2);
  const int m = unimodal_max(two) + unimodal_max(c3);
  CHECK(unimodal_maxima_poly(pair_span) ==
        IntPolynomial::monomial(m - 1) * IntPolynomial::one_plus_x_power(1));

  const auto triple = span_enumerate(CycleShapeMultiset({{one, 1}, {two, 1}, {c3, 1}}));
  CHECK(triple.size() == 4);
  const int m3 = 1 + 1 + 2;  // block maxima of sizes 1, 2, 3
  CHECK(unimodal_maxima_poly(triple) ==
        IntPolynomial::monomial(m3 - 2) * IntPolynomial::one_plus_x_power(2));
}

TEST_CASE("maxima polynomial over unimodal p-cycles with identity is (1+x)-divisible") {
  for (int p : {3, 5, 7}) {
    const IntPolynomial u = uroot_maxima_poly(p, p);
    const auto q = divide_exact_one_plus_x(u);
    REQUIRE(q.has_value());
    CHECK(q->has_nonnegative_coeffs());
  }
}
