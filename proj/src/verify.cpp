#include "schurkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "schurkit/cde.hpp"
#include "schurkit/ncpl.hpp"
#include "schurkit/perm.hpp"
#include "schurkit/poly.hpp"
#include "schurkit/qsym.hpp"
#include "schurkit/subset.hpp"
#include "schurkit/tableaux.hpp"
#include "schurkit/unimodal.hpp"

namespace schurkit {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
  std::string failure;
  long long cases = 0;

  template <class T>
  void expect_eq(const T& got, const T& want, const std::string& where) {
    ++cases;
    if (failure.empty() && !(got == want)) {
      std::ostringstream os;
      os << where << ": mismatch";
      failure = os.str();
    }
  }
  void expect(bool ok, const std::string& where) {
    ++cases;
    if (failure.empty() && !ok) failure = where;
  }
};

int capped(int stated, int max_n) { return max_n > 0 ? std::min(stated, max_n) : stated; }

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

Partition hook_partition(int n, int k) {
  std::vector<int> parts = {n - k};
  for (int i = 0; i < k; ++i) parts.push_back(1);
  return Partition(std::move(parts));
}

// Criterion 1: |Ct_n| = n 2^{n-3} for n = 3..12.
CheckResult check_caterpillar_count(const VerifyOptions& o) {
  Checker c;
  const int top = capped(12, o.max_n);
  for (int n = 3; n <= top; ++n)
    c.expect_eq<long long>(static_cast<long long>(enumerate_caterpillars(n).size()),
                           static_cast<long long>(n) << (n - 3),
                           "caterpillar count n=" + std::to_string(n));
  return {"caterpillar-count", c.failure.empty(), c.failure.empty() ? "n=3.." + std::to_string(top) : c.failure, 0};
}

// Criterion 2: Q(Ct_n) expands as sum over hooks of n-1 cells with
// multiplicity k+1 on the hook with leg k.
CheckResult check_main_theorem(const VerifyOptions& o) {
  Checker c;
  const int top = capped(7, o.max_n);
  for (int n = 3; n <= top; ++n) {
    std::vector<SubsetOfRange> des;
    for (const Caterpillar& cat : enumerate_caterpillars(n)) des.push_back(caterpillar_descent(cat));
    const QSymVector q = qsym_of_set(n - 1, des);
    c.expect(is_symmetric(q), "Q(Ct_n) symmetric n=" + std::to_string(n));
    const SchurExpandResult e = schur_expand(q);
    c.expect(e.in_span && e.schur_positive, "Q(Ct_n) Schur-positive n=" + std::to_string(n));
    std::map<Partition, long long> want;
    for (int k = 0; k <= n - 2; ++k) want[hook_partition(n - 1, k)] = k + 1;
    c.expect_eq(e.coeffs, want, "Q(Ct_n) hook expansion n=" + std::to_string(n));
  }
  return {"caterpillar-main-theorem", c.failure.empty(), c.failure.empty() ? "n=3.." + std::to_string(top) : c.failure, 0};
}

// Criterion 3: |{c : Des(c) = J}| = |J| + 1 for every J in [n-2].
CheckResult check_descent_fibers(const VerifyOptions& o) {
  Checker c;
  const int top = capped(8, o.max_n);
  for (int n = 3; n <= top; ++n) {
    std::map<std::uint64_t, long long> fibers;
    for (const Caterpillar& cat : enumerate_caterpillars(n))
      ++fibers[caterpillar_descent(cat).bits()];
    for (std::uint64_t j = 0; j < (std::uint64_t{1} << (n - 2)); ++j)
      c.expect_eq(fibers[j], static_cast<long long>(std::popcount(j)) + 1,
                  "fiber size n=" + std::to_string(n));
  }
  return {"caterpillar-descent-fibers", c.failure.empty(), c.failure.empty() ? "n=3.." + std::to_string(top) : c.failure, 0};
}

// Criterion 4: Des(phi(c)) = Des(c) on caterpillars.
CheckResult check_phi_descents(const VerifyOptions& o) {
  Checker c;
  const int top = capped(8, o.max_n);
  for (int n = 3; n <= top; ++n) {
    for (const Caterpillar& cat : enumerate_caterpillars(n)) {
      const SubsetOfRange lhs = des_set(phi_map(cat.factorization()));
      const SubsetOfRange rhs = caterpillar_descent(cat);
      c.expect(lhs.bits() == rhs.bits() && lhs.universe() == rhs.universe(),
               "phi descents n=" + std::to_string(n));
    }
  }
  return {"caterpillar-phi", c.failure.empty(), c.failure.empty() ? "n=3.." + std::to_string(top) : c.failure, 0};
}

std::vector<Edge> prufer_decode(int n, const std::vector<int>& seq) {
  std::vector<int> degree(n + 1, 1);
  for (int v : seq) ++degree[v];
  std::set<int> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (int v : seq) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.insert(v);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return edges;
}

// Criterion 5: over all non-crossing trees, Goulden-Yong linearity is
// equivalent to the convex caterpillar shape test.
CheckResult check_linearity(const VerifyOptions& o) {
  Checker c;
  const int top = capped(6, o.max_n);
  for (int n = 3; n <= top; ++n) {
    long long linear_count = 0;
    std::vector<int> seq(n - 2, 1);
    while (true) {
      const std::vector<Edge> edges = prufer_decode(n, seq);
      if (edges_noncrossing(n, edges)) {
        GeometricTree t(n, edges);
        const bool linear = is_gy_linear(t);
        const bool shape = is_convex_caterpillar_tree(t);
        c.expect(linear == shape, "linearity vs shape n=" + std::to_string(n));
        if (linear) ++linear_count;
      }
      int i = n - 3;
      while (i >= 0 && seq[i] == n) seq[i--] = 1;
      if (i < 0) break;
      ++seq[i];
    }
    // Each convex caterpillar tree carries a unique linear factorization.
    c.expect_eq(linear_count, static_cast<long long>(n) << (n - 3),
                "linear tree count n=" + std::to_string(n));
  }
  return {"caterpillar-linearity", c.failure.empty(), c.failure.empty() ? "n=3.." + std::to_string(top) : c.failure, 0};
}

// Criterion 6: |F_n| = n^{n-2}.
CheckResult check_hurwitz(const VerifyOptions& o) {
  Checker c;
  const int top = capped(6, o.max_n);
  for (int n = 2; n <= top; ++n)
    c.expect_eq<long long>(static_cast<long long>(enumerate_factorizations(n).size()),
                           ipow(n, n - 2), "Hurwitz count n=" + std::to_string(n));
  return {"hurwitz-count", c.failure.empty(), c.failure.empty() ? "n=2.." + std::to_string(top) : c.failure, 0};
}

// Criterion 7: Q(involutions) = sum of all s_lambda; CDE iff n even.
CheckResult check_involutions(const VerifyOptions& o) {
  Checker c;
  const int top = capped(7, o.max_n);
  for (int n = 2; n <= top; ++n) {
    const std::vector<Permutation> inv = roots_of_unity(2, n);
    std::vector<SubsetOfRange> des;
    for (const Permutation& pi : inv) des.push_back(des_set(pi));
    const SchurExpandResult e = schur_expand(qsym_of_set(n, des));
    c.expect(e.in_span && e.schur_positive, "Q(involutions) positive n=" + std::to_string(n));
    std::map<Partition, long long> want;
    for (const Partition& lambda : partitions_of(n)) want[lambda] = 1;
    c.expect_eq(e.coeffs, want, "Q(involutions) multiplicity-one n=" + std::to_string(n));
    const CdeVerdict v = cde_exists(hook_poly_of_set(n, des));
    c.expect(v.exists == (n % 2 == 0), "involutions CDE parity n=" + std::to_string(n));
  }
  return {"involutions", c.failure.empty(), c.failure.empty() ? "n=2.." + std::to_string(top) : c.failure, 0};
}

// Criterion 8: inverse descent classes and their power-set / interval / chain
// generalizations: closed forms, brute-force hook polynomials, predicates.
CheckResult check_inverse_descent_classes(const VerifyOptions& o) {
  Checker c;
  const int top = capped(6, o.max_n);
  for (int n = 2; n <= top; ++n) {
    const std::uint64_t all = (std::uint64_t{1} << (n - 1)) - 1;
    for (std::uint64_t jm = 0; jm <= all; ++jm) {
      const SubsetOfRange j(n - 1, jm);
      const DescentClassSpec single = DescentClassSpec::single(n, j);
      std::vector<SubsetOfRange> des;
      for (const Permutation& pi : generalized_inv_des_class(single)) des.push_back(des_set(pi));
      const IntPolynomial brute = hook_poly_of_set(n, des);
      c.expect_eq(brute, IntPolynomial::monomial(j.size()), "H(D^-1_J) n=" + std::to_string(n));
      c.expect(!cde_exists(brute).exists, "single class never CDE n=" + std::to_string(n));
      // Submasks of J as lower bounds I.
      std::uint64_t im = jm;
      while (true) {
        const SubsetOfRange i(n - 1, im);
        for (auto family : {DescentClassSpec::Family::PowerSet, DescentClassSpec::Family::Interval,
                            DescentClassSpec::Family::Chain}) {
          DescentClassSpec spec = family == DescentClassSpec::Family::PowerSet
                                      ? DescentClassSpec::power_set(n, j)
                                      : family == DescentClassSpec::Family::Interval
                                            ? DescentClassSpec::interval(n, i, j)
                                            : DescentClassSpec::chain(n, i, j);
          std::vector<SubsetOfRange> members;
          for (const Permutation& pi : generalized_inv_des_class(spec))
            members.push_back(des_set(pi));
          const IntPolynomial closed = hook_poly(spec);
          c.expect_eq(hook_poly_of_set(n, members), closed, "closed-form hook polynomial");
          bool predicted = false;
          switch (family) {
            case DescentClassSpec::Family::PowerSet:
              predicted = !j.is_empty();
              break;
            case DescentClassSpec::Family::Interval:
              predicted = i.bits() != j.bits();
              break;
            default:
              predicted = i.bits() != j.bits() && (j.size() - i.size()) % 2 == 1;
              break;
          }
          c.expect(cde_exists(closed).exists == predicted, "CDE predicate vs brute");
          if (family == DescentClassSpec::Family::PowerSet) break;  // independent of I
        }
        if (im == 0) break;
        im = (im - 1) & jm;
      }
    }
  }
  return {"inverse-descent-classes", c.failure.empty(), c.failure.empty() ? "n=2.." + std::to_string(top) : c.failure, 0};
}

// Criterion 9: CDE for inv_k(S_n) iff k is not generalized pentagonal (k < n),
// and Pd_k(-1) matches the Euler product coefficient up to max_k.
CheckResult check_pentagonal(const VerifyOptions& o) {
  Checker c;
  const int top = capped(7, o.max_n);
  for (int n = 2; n <= top; ++n) {
    for (int k = 0; k < n; ++k) {
      std::vector<SubsetOfRange> des;
      for (const Permutation& pi : inv_class(k, n)) des.push_back(des_set(pi));
      const bool brute = cde_exists(hook_poly_of_set(n, des)).exists;
      c.expect(brute == cde_for_inv_k(k, n),
               "pentagonal criterion k=" + std::to_string(k) + " n=" + std::to_string(n));
    }
  }
  const int kmax = std::max(o.max_k, 1);
  const IntPolynomial euler = euler_product_coeffs(kmax);
  for (int k = 0; k <= kmax; ++k) {
    const long long pdk = pd_poly(k).eval(-1);
    c.expect_eq(pdk, euler.coeff(k), "Euler coefficient k=" + std::to_string(k));
    const PentagonalWitness w = is_generalized_pentagonal(k);
    const long long sign = k == 0 ? 1 : (w.pentagonal ? (w.m % 2 == 0 ? 1 : -1) : 0);
    c.expect_eq(pdk, sign, "pentagonal signature k=" + std::to_string(k));
  }
  return {"pentagonal-criterion", c.failure.empty(),
          c.failure.empty() ? "n<=" + std::to_string(top) + ", k<=" + std::to_string(kmax) : c.failure, 0};
}

// Criterion 10: Des multisets of inv_k and imaj_k coincide.
CheckResult check_equidistribution(const VerifyOptions& o) {
  Checker c;
  const int top = capped(6, o.max_n);
  for (int n = 2; n <= top; ++n) {
    std::map<long long, std::map<std::uint64_t, long long>> by_inv, by_imaj;
    for_each_permutation(n, [&](const std::vector<int>& w) {
      Permutation pi(w);
      const std::uint64_t d = des_set(pi).bits();
      ++by_inv[inv_count(pi)][d];
      ++by_imaj[imaj(pi)][d];
    });
    c.expect_eq(by_inv, by_imaj, "inv/imaj descent multisets n=" + std::to_string(n));
  }
  return {"inv-imaj-equidistribution", c.failure.empty(), c.failure.empty() ? "n=2.." + std::to_string(top) : c.failure, 0};
}

// Criterion 11: Gannon's formula equals the brute count.
CheckResult check_gannon(const VerifyOptions& o) {
  Checker c;
  const int top = capped(12, o.max_n);
  for (int n = 1; n <= top; ++n)
    for (int m = 1; m <= n; ++m)
      c.expect_eq(gannon_count(n, m), brute_delta_count(n, m),
                  "Gannon count n=" + std::to_string(n) + " m=" + std::to_string(m));
  return {"gannon-formula", c.failure.empty(), c.failure.empty() ? "n<=" + std::to_string(top) : c.failure, 0};
}

// Criterion 12: prime-power roots of unity, fixed witness pairs.
CheckResult check_uroot_prime_power(const VerifyOptions&) {
  Checker c;
  const std::vector<std::pair<int, int>> yes = {{3, 3}, {3, 6}, {5, 5}, {2, 4}, {2, 6}, {7, 7}};
  const std::vector<std::pair<int, int>> no = {{3, 4}, {5, 6}, {2, 5}};
  auto umax_poly = [](int d, int n) {
    IntPolynomial u;
    for (const Permutation& pi : enumerate_unimodal(n))
      if (d % perm_order(pi) == 0) u.add_term(unimodal_max(pi), 1);
    return u;
  };
  for (auto [d, n] : yes)
    c.expect(cde_exists(umax_poly(d, n)).exists,
             "uroot CDE d=" + std::to_string(d) + " n=" + std::to_string(n));
  for (auto [d, n] : no)
    c.expect(!cde_exists(umax_poly(d, n)).exists,
             "uroot no-CDE d=" + std::to_string(d) + " n=" + std::to_string(n));
  return {"uroot-prime-power", c.failure.empty(), c.failure.empty() ? "9 witness pairs" : c.failure, 0};
}

// All shape multisets with the given total size, assembled from the catalogs
// of unimodal full cycles.
void all_shape_multisets(const std::vector<Permutation>& catalog, std::size_t from, int remaining,
                         std::vector<std::pair<Permutation, int>>& cur,
                         std::vector<CycleShapeMultiset>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t i = from; i < catalog.size(); ++i) {
    const int size = catalog[i].size();
    if (size > remaining) continue;
    for (int mult = 1; mult * size <= remaining; ++mult) {
      cur.emplace_back(catalog[i], mult);
      all_shape_multisets(catalog, i + 1, remaining - mult * size, cur, out);
      cur.pop_back();
    }
  }
}

// Criterion 13: the spanbox maxima polynomial is x^{m-l+1}(1+x)^{l-1}.
CheckResult check_span_structure(const VerifyOptions& o) {
  Checker c;
  const int top = capped(10, o.max_n);
  std::vector<Permutation> catalog;
  for (int k = 1; k <= top; ++k)
    for (const Permutation& s : enumerate_unimodal_cycles(k)) catalog.push_back(s);
  for (int total = 1; total <= top; ++total) {
    std::vector<CycleShapeMultiset> multisets;
    std::vector<std::pair<Permutation, int>> cur;
    all_shape_multisets(catalog, 0, total, cur, multisets);
    std::map<std::vector<std::pair<Permutation, int>>, std::vector<Permutation>> groups;
    for (const Permutation& pi : enumerate_unimodal(total))
      groups[CycleShapeMultiset::of(pi).items()].push_back(pi);
    c.expect_eq(groups.size(), multisets.size(), "every multiset realized, total=" + std::to_string(total));
    for (const CycleShapeMultiset& ms : multisets) {
      auto it = groups.find(ms.items());
      c.expect(it != groups.end(), "missing spanbox, total=" + std::to_string(total));
      if (it == groups.end()) continue;
      const int l = ms.distinct_shapes();
      c.expect_eq<long long>(static_cast<long long>(it->second.size()), 1LL << (l - 1),
                             "spanbox size 2^{l-1}, total=" + std::to_string(total));
      int m = 0;
      for (const auto& [shape, mult] : ms.items()) {
        const int ms_max = unimodal_max(shape);
        m += acute_or_grave(shape) == CycleFlavor::Acute ? mult * ms_max
                                                         : mult * (ms_max - 1) + 1;
      }
      const IntPolynomial want =
          IntPolynomial::monomial(m - l + 1) * IntPolynomial::one_plus_x_power(l - 1);
      c.expect_eq(unimodal_maxima_poly(it->second), want,
                  "spanbox maxima polynomial, total=" + std::to_string(total));
    }
  }
  return {"span-structure", c.failure.empty(), c.failure.empty() ? "total size <= " + std::to_string(top) : c.failure, 0};
}

// Criterion 14: unique J for every ordered pair of unimodal full cycles.
CheckResult check_unique_j(const VerifyOptions& o) {
  Checker c;
  const int top = capped(12, o.max_n);
  std::vector<Permutation> catalog;
  for (int k = 1; k + 1 <= top; ++k)
    for (const Permutation& s : enumerate_unimodal_cycles(k)) catalog.push_back(s);
  for (const Permutation& s1 : catalog) {
    for (const Permutation& s2 : catalog) {
      if (s1.size() + s2.size() > top) continue;
      try {
        const SubsetOfRange j = find_unique_j(s1, s2);
        const int total = s1.size() + s2.size();
        SubsetOfRange jbar(total, ~j.bits() & ((std::uint64_t{1} << total) - 1));
        const Permutation sum = unimodal_sum({s1, s2}, {j, jbar});
        const int m = unimodal_max(sum);
        const int m1 = unimodal_max(s1);
        const int m2 = unimodal_max(s2);
        c.expect(m == m1 + m2 || m == m1 + m2 - 1, "sum maximum location");
      } catch (const std::exception& e) {
        c.expect(false, std::string("unique J: ") + e.what());
      }
    }
  }
  return {"unique-j", c.failure.empty(), c.failure.empty() ? "total size <= " + std::to_string(top) : c.failure, 0};
}

using CheckFn = CheckResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, std::vector<CheckFn>>>& suite_table() {
  static const std::vector<std::pair<std::string, std::vector<CheckFn>>> table = {
      {"caterpillar",
       {check_caterpillar_count, check_descent_fibers, check_phi_descents, check_linearity,
        check_hurwitz}},
      {"qsym", {check_main_theorem, check_involutions}},
      {"cde", {check_inverse_descent_classes, check_uroot_prime_power}},
      {"pentagonal", {check_pentagonal, check_equidistribution}},
      {"unimodal", {check_gannon, check_span_structure, check_unique_j}},
  };
  return table;
}

}  // namespace

std::vector<std::string> verify_suites() {
  std::vector<std::string> names;
  for (const auto& [name, fns] : suite_table()) names.push_back(name);
  names.push_back("all");
  return names;
}

bool is_verify_suite(const std::string& name) {
  const auto names = verify_suites();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_verify_suite(const std::string& suite, const VerifyOptions& opts) {
  if (!is_verify_suite(suite)) throw std::invalid_argument("unknown verify suite: " + suite);
  std::vector<CheckResult> results;
  for (const auto& [name, fns] : suite_table()) {
    if (suite != "all" && suite != name) continue;
    for (CheckFn fn : fns) {
      const auto start = Clock::now();
      CheckResult r = fn(opts);
      r.elapsed_ms =
          std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count() /
          1000.0;
      results.push_back(std::move(r));
    }
  }
  return results;
}

}  // namespace schurkit
