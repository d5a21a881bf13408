#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "schurkit/cde.hpp"
#include "schurkit/perm.hpp"
#include "schurkit/qsym.hpp"
#include "schurkit/tableaux.hpp"

using namespace schurkit;

namespace {

// Oracle: the q-factorial counts permutations by inversion number.
IntPolynomial q_factorial(int n) {
  IntPolynomial out = IntPolynomial::one();
  for (int i = 1; i <= n; ++i) out = out * IntPolynomial(std::vector<long long>(i, 1));
  return out;
}

std::vector<SubsetOfRange> descent_sets_of(const std::vector<Permutation>& perms) {
  std::vector<SubsetOfRange> out;
  for (const Permutation& pi : perms) out.push_back(des_set(pi));
  return out;
}

}  // namespace

TEST_CASE("cde_exists on polynomials") {
  for (int k = 0; k <= 5; ++k) {
    const CdeVerdict v = cde_exists(IntPolynomial::monomial(k));
    CHECK_FALSE(v.exists);
    CHECK(v.reason.find("not divisible") != std::string::npos);
  }
  const CdeVerdict yes = cde_exists(IntPolynomial({1, 1, 1, 1}));
  CHECK(yes.exists);
  CHECK(yes.quotient == IntPolynomial({1, 0, 1}));

  const CdeVerdict no = cde_exists(IntPolynomial({0, 1, -1, 1}));
  CHECK_FALSE(no.exists);

  // Divisible but with a negative quotient coefficient.
  const CdeVerdict neg = cde_exists(IntPolynomial({1, 0, 0, 1}));  // (1+x)(1-x+x^2)
  CHECK_FALSE(neg.exists);
  CHECK(neg.reason.find("negative") != std::string::npos);

  CHECK(cde_exists(IntPolynomial::zero()).exists);
}

TEST_CASE("hook_poly_of_set") {
  for (int n = 2; n <= 5; ++n) {
    for (std::uint64_t jm = 0; jm < (std::uint64_t{1} << (n - 1)); ++jm) {
      const SubsetOfRange j(n - 1, jm);
      const auto cls = generalized_inv_des_class(DescentClassSpec::single(n, j));
      CHECK(hook_poly_of_set(n, descent_sets_of(cls)) == IntPolynomial::monomial(j.size()));
    }
  }
  std::vector<SubsetOfRange> inv_des;
  for_each_permutation(5, [&](const std::vector<int>& w) {
    Permutation pi(w);
    if (compose(pi, pi).is_identity()) inv_des.push_back(des_set(pi));
  });
  CHECK(hook_poly_of_set(5, inv_des) == IntPolynomial({1, 1, 1, 1, 1}));

  std::vector<SubsetOfRange> syt22;
  for (const Tableau& t : enumerate_syt(SkewShape(Partition({2, 2})))) syt22.push_back(syt_descent(t));
  CHECK(hook_poly_of_set(4, syt22).is_zero());
}

TEST_CASE("generalized inverse descent classes") {
  const int n = 4;
  const SubsetOfRange j3 = SubsetOfRange::full(n - 1);

  const DescentClassSpec power = DescentClassSpec::power_set(n, j3);
  CHECK(hook_poly(power) == IntPolynomial({1, 3, 3, 1}));
  CHECK(generalized_inv_des_class(power).size() == 24);  // all of S_4
  CHECK(cde_exists(hook_poly(power)).exists);

  const DescentClassSpec empty_power = DescentClassSpec::power_set(n, SubsetOfRange::empty(n - 1));
  CHECK(hook_poly(empty_power) == IntPolynomial::one());
  CHECK_FALSE(cde_exists(hook_poly(empty_power)).exists);

  const DescentClassSpec mid =
      DescentClassSpec::interval(n, SubsetOfRange(n - 1, {1}), SubsetOfRange(n - 1, {1, 3}));
  CHECK(hook_poly(mid) == IntPolynomial({0, 1, 1}));  // x(1+x)
  CHECK(cde_exists(hook_poly(mid)).exists);

  const DescentClassSpec chain =
      DescentClassSpec::chain(n, SubsetOfRange::empty(n - 1), SubsetOfRange::full(n - 1));
  CHECK(hook_poly(chain) == IntPolynomial({1, 1, 1, 1}));
  CHECK(cde_exists(hook_poly(chain)).exists);  // |J| - |I| = 3 odd

  // Member sets of the canonical chain.
  const auto members = chain.member_sets();
  CHECK(members.size() == 4);
  CHECK(members[0] == SubsetOfRange::empty(3));
  CHECK(members[3] == SubsetOfRange::full(3));

  // Closed forms match the brute hook polynomials for every I <= J, n <= 5.
  for (int m = 2; m <= 5; ++m) {
    for (std::uint64_t jm = 0; jm < (std::uint64_t{1} << (m - 1)); ++jm) {
      const SubsetOfRange jj(m - 1, jm);
      std::uint64_t im = jm;
      while (true) {
        const SubsetOfRange ii(m - 1, im);
        for (const DescentClassSpec& spec :
             {DescentClassSpec::power_set(m, jj), DescentClassSpec::interval(m, ii, jj),
              DescentClassSpec::chain(m, ii, jj)}) {
          CHECK(hook_poly_of_set(m, descent_sets_of(generalized_inv_des_class(spec))) ==
                hook_poly(spec));
        }
        if (im == 0) break;
        im = (im - 1) & jm;
      }
    }
  }
}

TEST_CASE("inv and imaj classes") {
  CHECK(inv_class(0, 4).size() == 1);
  CHECK(inv_class(0, 4)[0].is_identity());

  for (int n = 2; n <= 6; ++n) {
    const IntPolynomial qfact = q_factorial(n);
    for (int k = 0; k <= n * (n - 1) / 2; ++k)
      CHECK(static_cast<long long>(inv_class(k, n).size()) == qfact.coeff(k));
  }

  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k <= n * (n - 1) / 2; ++k) {
      std::multiset<std::uint64_t> a, b;
      for (const Permutation& pi : inv_class(k, n)) a.insert(des_set(pi).bits());
      for (const Permutation& pi : imaj_class(k, n)) b.insert(des_set(pi).bits());
      CHECK(a == b);
    }
  }
}

TEST_CASE("distinct partitions and Pd_k") {
  const auto q6 = distinct_partitions(6);
  CHECK(q6.size() == 4);
  CHECK(std::set<Partition>(q6.begin(), q6.end()) ==
        std::set<Partition>{Partition({6}), Partition({5, 1}), Partition({4, 2}),
                            Partition({3, 2, 1})});
  CHECK(pd_poly(6) == IntPolynomial({0, 1, 2, 1}));
  CHECK(pd_poly(0) == IntPolynomial::one());

  // For n > k the hook polynomial of imaj_k(S_n) is Pd_k.
  for (int n = 3; n <= 6; ++n)
    for (int k = 0; k < n; ++k)
      CHECK(hook_poly_of_set(n, descent_sets_of(imaj_class(k, n))) == pd_poly(k));
}

TEST_CASE("generalized pentagonal numbers") {
  for (long long k : {1, 2, 5, 7, 12, 15, 22, 26, 35, 40}) {
    const PentagonalWitness w = is_generalized_pentagonal(k);
    CHECK(w.pentagonal);
    CHECK(w.m * (3 * w.m + w.sign) / 2 == k);
  }
  for (long long k : {3, 4, 6, 8, 9, 10, 11, 13, 14, 16})
    CHECK_FALSE(is_generalized_pentagonal(k).pentagonal);
  CHECK_FALSE(is_generalized_pentagonal(0).pentagonal);
}

TEST_CASE("Franklin involution") {
  const FranklinResult a = franklin_involution(Partition({7, 6, 5, 3, 2}));
  REQUIRE_FALSE(a.fixed);
  CHECK(a.image == Partition({8, 7, 5, 3}));
  CHECK(a.image.sum() == 23);

  const FranklinResult b = franklin_involution(Partition({3, 2, 1}));
  REQUIRE_FALSE(b.fixed);
  CHECK(b.image.length() == 2);
  CHECK(b.image == Partition({4, 2}));

  CHECK(franklin_involution(Partition({3, 2})).fixed);  // k = 5 = (3*2-1)*2/2
  CHECK(franklin_involution(Partition({2})).fixed);     // k = 2 = (3*1+1)*1/2
  CHECK(franklin_involution(Partition({1})).fixed);     // k = 1 = (3*1-1)*1/2
  CHECK_THROWS_AS(franklin_involution(Partition({2, 2})), std::invalid_argument);
}

TEST_CASE("Franklin pairing properties up to 40") {
  for (int k = 1; k <= 40; ++k) {
    const auto q = distinct_partitions(k);
    int fixed_count = 0;
    std::map<int, long long> grow_by_length;  // b_m of the proof
    for (const Partition& lambda : q) {
      const FranklinResult r = franklin_involution(lambda);
      if (r.fixed) {
        ++fixed_count;
        continue;
      }
      CHECK(r.image.sum() == k);
      const int dl = r.image.length() - lambda.length();
      CHECK((dl == 1 || dl == -1));
      const FranklinResult back = franklin_involution(r.image);
      REQUIRE_FALSE(back.fixed);
      CHECK(back.image == lambda);
      if (dl == 1) ++grow_by_length[lambda.length()];
    }
    const bool pent = is_generalized_pentagonal(k).pentagonal;
    CHECK(fixed_count == (pent ? 1 : 0));
    if (!pent) {
      // Quotient positivity: Pd_k / (1+x) has coefficients b_m >= 0.
      const auto quotient = divide_exact_one_plus_x(pd_poly(k));
      REQUIRE(quotient.has_value());
      for (int m = 0; m <= quotient->degree(); ++m)
        CHECK(quotient->coeff(m) == grow_by_length[m]);
    }
  }
}

TEST_CASE("Euler product matches the pentagonal signature") {
  const IntPolynomial euler = euler_product_coeffs(40);
  CHECK(euler.coeff(0) == 1);
  for (int k = 0; k <= 40; ++k) {
    CHECK(pd_poly(k).eval(-1) == euler.coeff(k));
    const PentagonalWitness w = is_generalized_pentagonal(k);
    long long expected = 0;
    if (k == 0) expected = 1;
    else if (w.pentagonal) expected = w.m % 2 == 0 ? 1 : -1;
    CHECK(euler.coeff(k) == expected);
  }
}

TEST_CASE("CDE for fixed inversion number") {
  CHECK(cde_for_inv_k(3, 5));
  CHECK_FALSE(cde_for_inv_k(5, 7));
  CHECK_FALSE(cde_for_inv_k(2, 4));
  CHECK_FALSE(cde_for_inv_k(0, 3));
  CHECK_THROWS_AS(cde_for_inv_k(4, 4), std::invalid_argument);

  // Criterion against the brute hook polynomial of the actual class.
  for (int n = 2; n <= 6; ++n)
    for (int k = 0; k < n; ++k)
      CHECK(cde_for_inv_k(k, n) ==
            cde_exists(hook_poly_of_set(n, descent_sets_of(inv_class(k, n)))).exists);
}

TEST_CASE("roots of unity") {
  CHECK(roots_of_unity(1, 4).size() == 1);
  CHECK(roots_of_unity(2, 4).size() == 10);
  CHECK(roots_of_unity(3, 3).size() == 3);

  // Union over cycle types with lcm dividing d.
  for (int n = 2; n <= 6; ++n) {
    for (int d = 1; d <= 6; ++d) {
      const auto roots = roots_of_unity(d, n);
      std::set<Permutation> direct(roots.begin(), roots.end());
      std::set<Permutation> by_type;
      for (const Partition& lambda : partitions_of(n))
        if (d % partition_lcm(lambda) == 0)
          for (const Permutation& pi : conjugacy_class(lambda)) by_type.insert(pi);
      CHECK(direct == by_type);
    }
  }
}

TEST_CASE("CDE for conjugacy classes and roots of unity") {
  CHECK_FALSE(cde_for_conjugacy_class(Partition({2, 2, 2})));
  CHECK(cde_for_conjugacy_class(Partition({4, 4})));
  CHECK(cde_for_conjugacy_class(Partition({3, 1})));

  const UrootCdeResult r33 = cde_for_roots_of_unity(3, 3);
  CHECK(r33.status == UrootCdeStatus::Yes);
  REQUIRE(r33.has_brute);
  CHECK(r33.brute.exists);

  const UrootCdeResult r25 = cde_for_roots_of_unity(2, 5);
  CHECK(r25.status == UrootCdeStatus::No);
  REQUIRE(r25.has_brute);
  CHECK_FALSE(r25.brute.exists);

  const UrootCdeResult r64 = cde_for_roots_of_unity(6, 4);
  CHECK(r64.status == UrootCdeStatus::Conjectural);
  REQUIRE(r64.has_brute);

  // Conjugacy-class criterion against brute hook polynomials, n <= 6.
  for (int n = 2; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      CHECK(cde_for_conjugacy_class(lambda) ==
            cde_exists(hook_poly_of_set(n, descent_sets_of(conjugacy_class(lambda)))).exists);
}

TEST_CASE("conjugacy class expansion pins the rectangle rule") {
  // C_{(2,2)} = {[2,1,4,3],[3,4,1,2],[4,3,2,1]}: Q = s_{(2,2)} + s_{(1^4)}.
  const auto cls = conjugacy_class(Partition({2, 2}));
  const SchurExpandResult r = schur_expand(qsym_of_set(4, descent_sets_of(cls)));
  REQUIRE(r.in_span);
  CHECK(r.coeffs == std::map<Partition, long long>{{Partition({2, 2}), 1},
                                                   {Partition({1, 1, 1, 1}), 1}});
  // The only hook is (1^4), so H = x^3 and no cyclic descent extension exists,
  // in line with (2,2) being a square-free rectangle.
  CHECK(hook_coeffs(4, r.coeffs) == IntPolynomial::monomial(3));
  CHECK_FALSE(cde_for_conjugacy_class(Partition({2, 2})));
}

TEST_CASE("hook polynomial via counting agrees with the Schur expansion route") {
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::vector<SubsetOfRange>> families;
    for (int d = 1; d <= 6; ++d) families.push_back(descent_sets_of(roots_of_unity(d, n)));
    for (int k = 0; k < n; ++k) families.push_back(descent_sets_of(inv_class(k, n)));
    for (const Partition& lambda : partitions_of(n))
      families.push_back(descent_sets_of(conjugacy_class(lambda)));
    for (const auto& family : families) {
      const SchurExpandResult r = schur_expand(qsym_of_set(n, family));
      REQUIRE(r.in_span);
      CHECK(r.schur_positive);
      CHECK(hook_coeffs(n, r.coeffs) == hook_poly_of_set(n, family));
    }
  }
}

TEST_CASE("CDE is closed under disjoint union") {
  std::mt19937 rng(7261);
  std::uniform_int_distribution<int> coeff(0, 4);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 200; ++trial) {
    // Random sets that pass, built from non-negative quotients.
    std::vector<long long> q1(deg(rng) + 1), q2(deg(rng) + 1);
    for (auto& c : q1) c = coeff(rng);
    for (auto& c : q2) c = coeff(rng);
    const IntPolynomial one_plus_x({1, 1});
    const IntPolynomial h1 = IntPolynomial(q1) * one_plus_x;
    const IntPolynomial h2 = IntPolynomial(q2) * one_plus_x;
    CHECK(cde_exists(h1).exists);
    CHECK(cde_exists(h2).exists);
    CHECK(cde_exists(h1 + h2).exists);
  }
}
