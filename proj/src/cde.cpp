#include "schurkit/cde.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schurkit {

CdeVerdict cde_exists(const IntPolynomial& hook_poly) {
  CdeVerdict v;
  auto q = divide_exact_one_plus_x(hook_poly);
  if (!q) {
    std::ostringstream os;
    os << "hook polynomial not divisible by 1+x (H(-1) = " << hook_poly.eval(-1) << ")";
    v.reason = os.str();
    return v;
  }
  if (!q->has_nonnegative_coeffs()) {
    v.reason = "quotient by 1+x has a negative coefficient";
    return v;
  }
  v.exists = true;
  v.quotient = *q;
  return v;
}

SubsetOfRange suffix_interval(int n, int k) {
  if (k < 0 || k > n - 1) throw std::invalid_argument("suffix_interval: k out of range");
  SubsetOfRange s = SubsetOfRange::empty(n - 1);
  for (int i = n - k; i <= n - 1; ++i) s = s.with(i);
  return s;
}

IntPolynomial hook_poly_of_set(int degree, const std::vector<SubsetOfRange>& descent_sets) {
  IntPolynomial h;
  for (const SubsetOfRange& d : descent_sets) {
    if (d.universe() != degree - 1)
      throw std::invalid_argument("hook_poly_of_set: descent set universe mismatch");
    const int k = d.size();
    if (d == suffix_interval(degree, k)) h.add_term(k, 1);
  }
  return h;
}

namespace {
void check_universe(int n, const SubsetOfRange& s, const char* what) {
  if (s.universe() != n - 1) {
    std::ostringstream os;
    os << what << ": subset universe must be [n-1]";
    throw std::invalid_argument(os.str());
  }
}
}  // namespace

DescentClassSpec DescentClassSpec::single(int n, const SubsetOfRange& j) {
  check_universe(n, j, "DescentClassSpec::single");
  DescentClassSpec s(Family::Single, n);
  s.lower_ = j;
  s.upper_ = j;
  return s;
}

DescentClassSpec DescentClassSpec::power_set(int n, const SubsetOfRange& j) {
  check_universe(n, j, "DescentClassSpec::power_set");
  DescentClassSpec s(Family::PowerSet, n);
  s.lower_ = SubsetOfRange::empty(n - 1);
  s.upper_ = j;
  return s;
}

DescentClassSpec DescentClassSpec::interval(int n, const SubsetOfRange& i,
                                            const SubsetOfRange& j) {
  check_universe(n, i, "DescentClassSpec::interval");
  check_universe(n, j, "DescentClassSpec::interval");
  if (!i.subset_of(j)) throw std::invalid_argument("DescentClassSpec::interval: requires I <= J");
  DescentClassSpec s(Family::Interval, n);
  s.lower_ = i;
  s.upper_ = j;
  return s;
}

DescentClassSpec DescentClassSpec::chain(int n, const SubsetOfRange& i, const SubsetOfRange& j) {
  check_universe(n, i, "DescentClassSpec::chain");
  check_universe(n, j, "DescentClassSpec::chain");
  if (!i.subset_of(j)) throw std::invalid_argument("DescentClassSpec::chain: requires I <= J");
  DescentClassSpec s(Family::Chain, n);
  s.lower_ = i;
  s.upper_ = j;
  return s;
}

DescentClassSpec DescentClassSpec::explicit_list(int n, std::vector<SubsetOfRange> sets) {
  for (const auto& s : sets) check_universe(n, s, "DescentClassSpec::explicit_list");
  DescentClassSpec s(Family::Explicit, n);
  s.explicit_ = std::move(sets);
  return s;
}

std::vector<SubsetOfRange> DescentClassSpec::member_sets() const {
  std::set<SubsetOfRange> out;
  switch (family_) {
    case Family::Single:
      out.insert(upper_);
      break;
    case Family::PowerSet: {
      // Submasks of J.
      const std::uint64_t jm = upper_.bits();
      std::uint64_t t = jm;
      while (true) {
        out.insert(SubsetOfRange(n_ - 1, t));
        if (t == 0) break;
        t = (t - 1) & jm;
      }
      break;
    }
    case Family::Interval: {
      const std::uint64_t im = lower_.bits();
      const std::uint64_t add = upper_.bits() & ~im;
      std::uint64_t t = add;
      while (true) {
        out.insert(SubsetOfRange(n_ - 1, im | t));
        if (t == 0) break;
        t = (t - 1) & add;
      }
      break;
    }
    case Family::Chain: {
      SubsetOfRange cur = lower_;
      out.insert(cur);
      for (int i = 1; i <= n_ - 1; ++i) {
        if (upper_.contains(i) && !lower_.contains(i)) {
          cur = cur.with(i);
          out.insert(cur);
        }
      }
      break;
    }
    case Family::Explicit:
      out.insert(explicit_.begin(), explicit_.end());
      break;
  }
  return {out.begin(), out.end()};
}

std::vector<Permutation> generalized_inv_des_class(const DescentClassSpec& spec) {
  const int n = spec.n();
  if (n < 1 || n > 8)
    throw std::invalid_argument("generalized_inv_des_class: requires n <= 8");
  std::set<std::uint64_t> masks;
  for (const auto& s : spec.member_sets()) masks.insert(s.bits());
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    Permutation pi(w);
    if (masks.count(des_set(pi.inverse()).bits())) out.push_back(std::move(pi));
  });
  return out;
}

IntPolynomial hook_poly(const DescentClassSpec& spec) {
  IntPolynomial h;
  switch (spec.family()) {
    case DescentClassSpec::Family::Single:
      return IntPolynomial::monomial(spec.upper().size());
    case DescentClassSpec::Family::PowerSet:
      return IntPolynomial::one_plus_x_power(spec.upper().size());
    case DescentClassSpec::Family::Interval:
      return IntPolynomial::monomial(spec.lower().size()) *
             IntPolynomial::one_plus_x_power(spec.upper().size() - spec.lower().size());
    case DescentClassSpec::Family::Chain:
      for (int k = spec.lower().size(); k <= spec.upper().size(); ++k) h.add_term(k, 1);
      return h;
    case DescentClassSpec::Family::Explicit:
      for (const auto& s : spec.member_sets()) h.add_term(s.size(), 1);
      return h;
  }
  return h;
}

std::vector<Permutation> inv_class(long long k, int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("inv_class: requires n <= 8");
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    Permutation pi(w);
    if (inv_count(pi) == k) out.push_back(std::move(pi));
  });
  return out;
}

std::vector<Permutation> imaj_class(long long k, int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("imaj_class: requires n <= 8");
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    Permutation pi(w);
    if (imaj(pi) == k) out.push_back(std::move(pi));
  });
  return out;
}

namespace {
void distinct_partitions_rec(long long remaining, int max_part, std::vector<int>& cur,
                             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = static_cast<int>(std::min<long long>(remaining, max_part)); p >= 1; --p) {
    cur.push_back(p);
    distinct_partitions_rec(remaining - p, p - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<Partition> distinct_partitions(long long k) {
  if (k < 0 || k > 60) throw std::invalid_argument("distinct_partitions: requires 0 <= k <= 60");
  std::vector<Partition> out;
  std::vector<int> cur;
  distinct_partitions_rec(k, static_cast<int>(k), cur, out);
  return out;
}

IntPolynomial pd_poly(long long k) {
  IntPolynomial p;
  for (const Partition& lambda : distinct_partitions(k)) p.add_term(lambda.length(), 1);
  return p;
}

PentagonalWitness is_generalized_pentagonal(long long k) {
  if (k < 0) throw std::invalid_argument("is_generalized_pentagonal: k must be non-negative");
  PentagonalWitness w;
  for (long long m = 1; m * (3 * m - 1) / 2 <= k; ++m) {
    if (m * (3 * m - 1) / 2 == k) {
      w = {true, m, -1};
      return w;
    }
    if (m * (3 * m + 1) / 2 == k) {
      w = {true, m, +1};
      return w;
    }
  }
  return w;
}

FranklinResult franklin_involution(const Partition& lambda) {
  const int l = lambda.length();
  if (l == 0) throw std::invalid_argument("franklin_involution: empty partition");
  for (int i = 2; i <= l; ++i)
    if (lambda.part(i) >= lambda.part(i - 1))
      throw std::invalid_argument("franklin_involution: parts must be distinct");

  // D = length of the staircase run from the top, L = last part.
  int d = 1;
  while (d < l && lambda.part(d + 1) == lambda.part(1) - d) ++d;
  const int last = lambda.part(l);

  FranklinResult res;
  if (d < last) {
    if (d == l && last == d + 1) {  // staircase (2m, ..., m+1)
      res.fixed = true;
      return res;
    }
    // Remove the rightmost cell of the first d rows, append a row of length d.
    std::vector<int> parts = lambda.parts();
    for (int i = 0; i < d; ++i) --parts[i];
    parts.push_back(d);
    res.image = Partition(std::move(parts));
  } else {
    if (d == l && last == l) {  // staircase (2m-1, ..., m)
      res.fixed = true;
      return res;
    }
    // Remove the last row, add one cell to each of the first `last` rows.
    std::vector<int> parts = lambda.parts();
    parts.pop_back();
    for (int i = 0; i < last; ++i) ++parts[i];
    res.image = Partition(std::move(parts));
  }
  return res;
}

bool cde_for_inv_k(long long k, int n) {
  if (k < 0) throw std::invalid_argument("cde_for_inv_k: k must be non-negative");
  if (k >= n)
    throw std::invalid_argument("cde_for_inv_k: the criterion is proved only for k < n");
  const bool result = k == 0 ? false : !is_generalized_pentagonal(k).pentagonal;
  if (k <= 60 && cde_exists(pd_poly(k)).exists != result)
    throw std::logic_error("cde_for_inv_k: pentagonal criterion disagrees with pd_poly");
  return result;
}

std::vector<Permutation> roots_of_unity(int d, int n) {
  if (d < 1) throw std::invalid_argument("roots_of_unity: d must be positive");
  if (n < 1 || n > 8) throw std::invalid_argument("roots_of_unity: requires n <= 8");
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const std::vector<int>& w) {
    Permutation pi(w);
    if (d % perm_order(pi) == 0) out.push_back(std::move(pi));
  });
  return out;
}

bool cde_for_conjugacy_class(const Partition& lambda) {
  if (lambda.sum() < 1) throw std::invalid_argument("cde_for_conjugacy_class: empty cycle type");
  return !is_rect_squarefree(lambda);
}

namespace {
bool is_prime_power(int d) {
  if (d < 2) return false;
  for (int p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      while (d % p == 0) d /= p;
      return d == 1;
    }
  }
  return true;  // prime
}
}  // namespace

UrootCdeResult cde_for_roots_of_unity(int d, int n) {
  if (d < 1 || n < 1) throw std::invalid_argument("cde_for_roots_of_unity: d, n must be positive");
  UrootCdeResult res;
  if (std::gcd(d, n) == 1) {
    res.status = UrootCdeStatus::No;
    res.basis = "d and n are coprime";
  } else if (is_prime_power(d)) {
    res.status = UrootCdeStatus::Yes;
    res.basis = "d is a prime power sharing a factor with n";
  } else {
    res.status = UrootCdeStatus::Conjectural;
    res.basis = "open case: d not a prime power, gcd(d,n) > 1";
  }
  if (n <= 8) {
    std::vector<SubsetOfRange> des;
    for (const Permutation& pi : roots_of_unity(d, n)) des.push_back(des_set(pi));
    res.brute = cde_exists(hook_poly_of_set(n, des));
    res.has_brute = true;
    if (res.status == UrootCdeStatus::Yes && !res.brute.exists)
      throw std::logic_error("cde_for_roots_of_unity: proved case contradicted by computation");
    if (res.status == UrootCdeStatus::No && res.brute.exists)
      throw std::logic_error("cde_for_roots_of_unity: proved case contradicted by computation");
  }
  return res;
}

IntPolynomial euler_product_coeffs(int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("euler_product_coeffs: negative degree");
  std::vector<long long> c(max_degree + 1, 0);
  c[0] = 1;
  for (int m = 1; m <= max_degree; ++m)
    for (int i = max_degree; i >= m; --i) c[i] -= c[i - m];
  return IntPolynomial(std::move(c));
}

}  // namespace schurkit
