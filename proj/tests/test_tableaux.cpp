#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "schurkit/perm.hpp"
#include "schurkit/tableaux.hpp"

using namespace schurkit;

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Oracle: hook length formula f^lambda = n! / prod of hook lengths.
long long hook_length_count(const Partition& lambda) {
  const int n = lambda.sum();
  long long denom = 1;
  std::vector<int> conj(lambda.part(1) + 1, 0);
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) ++conj[c];
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c)
      denom *= (lambda.part(r) - c) + (conj[c] - r) + 1;
  return factorial(n) / denom;
}

}  // namespace

TEST_CASE("SYT enumeration counts") {
  CHECK(count_syt(SkewShape(Partition({5}))) == 1);
  CHECK(count_syt(SkewShape(Partition({2, 2}))) == 2);
  CHECK(count_syt(SkewShape(Partition({3, 1, 1}))) == 6);
  CHECK(hook_length_count(Partition({3, 1, 1})) == 6);

  for (int n = 1; n <= 7; ++n) {
    long long sum_squares = 0;
    for (const Partition& lambda : partitions_of(n)) {
      const long long f = count_syt(SkewShape(lambda));
      CHECK(f == hook_length_count(lambda));
      sum_squares += f * f;
    }
    CHECK(sum_squares == factorial(n));
  }
}

TEST_CASE("skew SYT enumeration") {
  // (2,2)/(1): three cells, two fillings.
  CHECK(count_syt(SkewShape(Partition({2, 2}), Partition({1}))) == 2);
  // Disconnected skew shape: independent cells multiply by binomials.
  CHECK(count_syt(SkewShape(Partition({2, 1}), Partition({1}))) == 2);
  CHECK_THROWS_AS(SkewShape(Partition({2}), Partition({3})), std::invalid_argument);
}

TEST_CASE("tableau descents") {
  const Tableau row(SkewShape(Partition({4})), {{1, 2, 3, 4}});
  CHECK(syt_descent(row) == SubsetOfRange::empty(3));

  const Tableau col(SkewShape(Partition({1, 1, 1})), {{1}, {2}, {3}});
  CHECK(syt_descent(col) == SubsetOfRange(2, {1, 2}));

  // Hook with first row 1..n-k has the suffix interval as its descent set.
  const Tableau hook(SkewShape(Partition({3, 1, 1})), {{1, 2, 3}, {4}, {5}});
  CHECK(syt_descent(hook) == SubsetOfRange(4, {3, 4}));
}

TEST_CASE("RSK basics") {
  auto [p, q] = rsk(Permutation::identity(4));
  CHECK(p.shape().outer() == Partition({4}));
  CHECK(p == q);

  // Involutions of S_4 are exactly the permutations with P = Q.
  int count = 0;
  for_each_permutation(4, [&](const std::vector<int>& w) {
    Permutation pi(w);
    auto [pp, qq] = rsk(pi);
    const bool symmetric_pair = pp == qq;
    CHECK(symmetric_pair == (compose(pi, pi).is_identity()));
    if (symmetric_pair) ++count;
  });
  CHECK(count == 10);
}

TEST_CASE("RSK properties on small symmetric groups") {
  for (int n = 1; n <= 6; ++n) {
    std::multiset<std::uint64_t> des_pi, des_q;
    for_each_permutation(n, [&](const std::vector<int>& w) {
      const Permutation pi(w);
      auto [p, q] = rsk(pi);
      CHECK(p.shape() == q.shape());
      CHECK(syt_descent(q) == des_set(pi));
      des_pi.insert(des_set(pi).bits());
      des_q.insert(syt_descent(q).bits());
      auto [pi_p, pi_q] = rsk(pi.inverse());
      CHECK(pi_p == q);
      CHECK(pi_q == p);
      CHECK(inverse_rsk(p, q) == pi);
    });
    CHECK(des_pi == des_q);
  }
}

TEST_CASE("connected ribbons") {
  CHECK(is_connected_ribbon(SkewShape(Partition({5}))));
  CHECK(is_connected_ribbon(SkewShape(Partition({1, 1, 1}))));
  CHECK_FALSE(is_connected_ribbon(SkewShape(Partition({2, 2}))));
  CHECK(is_connected_ribbon(SkewShape(Partition({3, 1, 1}))));
  CHECK_FALSE(is_connected_ribbon(SkewShape(Partition({3, 3}), Partition({1}))));
  // (3,3,1)/(2): the cells (1,3),(2,1),(2,2),(2,3),(3,1) hold no 2x2 block and
  // are edge-connected, so this is a connected ribbon.
  CHECK(is_connected_ribbon(SkewShape(Partition({3, 3, 1}), Partition({2}))));
  // (3,3,1)/(2,2): (2,3)-(3,1) are not adjacent, so the shape disconnects.
  CHECK_FALSE(is_connected_ribbon(SkewShape(Partition({3, 3, 1}), Partition({2, 2}))));
}

TEST_CASE("hooks with a prescribed descent set") {
  const int n = 4;
  CHECK(hook_with_descent(SubsetOfRange::empty(n - 1)).shape().outer() == Partition({4}));
  CHECK(hook_with_descent(SubsetOfRange::full(n - 1)).shape().outer() == Partition({1, 1, 1, 1}));

  // Over all J in [3], the map is a bijection onto the hook SYT of size 4.
  std::set<Tableau> images;
  for (std::uint64_t m = 0; m < 8; ++m) {
    const SubsetOfRange j(n - 1, m);
    const Tableau t = hook_with_descent(j);
    CHECK(syt_descent(t) == j);
    CHECK(t.shape().outer() == Partition([&] {
            std::vector<int> parts = {n - j.size()};
            for (int i = 0; i < j.size(); ++i) parts.push_back(1);
            return parts;
          }()));
    images.insert(t);
  }
  std::size_t hook_count = 0;
  for (int k = 0; k <= n - 1; ++k) {
    std::vector<int> parts = {n - k};
    for (int i = 0; i < k; ++i) parts.push_back(1);
    hook_count += enumerate_syt(SkewShape(Partition(parts))).size();
  }
  CHECK(images.size() == hook_count);
}

TEST_CASE("hook descent sets exhaust the k-subsets exactly once") {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 0; k <= n - 1; ++k) {
      std::vector<int> parts = {n - k};
      for (int i = 0; i < k; ++i) parts.push_back(1);
      std::set<std::uint64_t> seen;
      for (const Tableau& t : enumerate_syt(SkewShape(Partition(parts)))) {
        const SubsetOfRange d = syt_descent(t);
        CHECK(d.size() == k);
        CHECK(seen.insert(d.bits()).second);  // each subset at most once
      }
      long long binom = 1;
      for (int i = 1; i <= k; ++i) binom = binom * (n - 1 - k + i) / i;
      CHECK(static_cast<long long>(seen.size()) == binom);  // and all of them
    }
  }
}
