#include "schurkit/qsym.hpp"

#include <numeric>
#include <stdexcept>

namespace schurkit {

namespace {
std::uint64_t degree_mask(int n) { return (std::uint64_t{1} << (n - 1)) - 1; }
}  // namespace

QSymVector::QSymVector(int degree) : degree_(degree) {
  if (degree < 1 || degree > 20) throw std::invalid_argument("QSymVector: degree out of range");
}

QSymVector QSymVector::fundamental(int degree, const SubsetOfRange& d) {
  QSymVector v(degree);
  v.add(d, 1);
  return v;
}

long long QSymVector::coeff(const SubsetOfRange& d) const {
  if (d.universe() != degree_ - 1)
    throw std::invalid_argument("QSymVector::coeff: subset universe mismatch");
  return coeff_mask(d.bits());
}

long long QSymVector::coeff_mask(std::uint64_t mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? 0 : it->second;
}

void QSymVector::add(const SubsetOfRange& d, long long c) {
  if (d.universe() != degree_ - 1)
    throw std::invalid_argument("QSymVector::add: subset universe mismatch");
  add_mask(d.bits(), c);
}

void QSymVector::add_mask(std::uint64_t mask, long long c) {
  if (mask & ~degree_mask(degree_))
    throw std::invalid_argument("QSymVector::add_mask: mask outside [n-1]");
  auto [it, inserted] = coeffs_.try_emplace(mask, 0);
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

QSymVector& QSymVector::operator+=(const QSymVector& rhs) {
  if (rhs.degree_ != degree_) throw std::invalid_argument("QSymVector: degree mismatch");
  for (auto [m, c] : rhs.coeffs_) add_mask(m, c);
  return *this;
}

QSymVector& QSymVector::operator-=(const QSymVector& rhs) {
  if (rhs.degree_ != degree_) throw std::invalid_argument("QSymVector: degree mismatch");
  for (auto [m, c] : rhs.coeffs_) add_mask(m, -c);
  return *this;
}

MonomialVector::MonomialVector(int degree) : degree_(degree) {
  if (degree < 1 || degree > 20) throw std::invalid_argument("MonomialVector: degree out of range");
}

long long MonomialVector::coeff_mask(std::uint64_t boundary) const {
  auto it = coeffs_.find(boundary);
  return it == coeffs_.end() ? 0 : it->second;
}

void MonomialVector::add_mask(std::uint64_t boundary, long long c) {
  if (boundary & ~degree_mask(degree_))
    throw std::invalid_argument("MonomialVector::add_mask: mask outside [n-1]");
  auto [it, inserted] = coeffs_.try_emplace(boundary, 0);
  it->second += c;
  if (it->second == 0) coeffs_.erase(it);
}

std::vector<int> composition_of_boundary(int n, std::uint64_t boundary) {
  std::vector<int> parts;
  int prev = 0;
  for (int i = 1; i < n; ++i) {
    if ((boundary >> (i - 1)) & 1) {
      parts.push_back(i - prev);
      prev = i;
    }
  }
  parts.push_back(n - prev);
  return parts;
}

Partition partition_of_composition(const std::vector<int>& comp) {
  std::vector<int> parts = comp;
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

QSymVector qsym_of_set(int degree, const std::vector<SubsetOfRange>& descent_sets) {
  QSymVector q(degree);
  for (const auto& d : descent_sets) q.add(d, 1);
  return q;
}

QSymVector qsym_of_syt(const SkewShape& shape) {
  QSymVector q(shape.cell_count());
  for (const Tableau& t : enumerate_syt(shape)) q.add(syt_descent(t), 1);
  return q;
}

MonomialVector fundamental_to_monomial(const QSymVector& v) {
  const int n = v.degree();
  MonomialVector m(n);
  const std::uint64_t full = degree_mask(n);
  for (auto [d, c] : v.coeffs()) {
    // Supersets of d: d | t for every submask t of full & ~d.
    const std::uint64_t comp = full & ~d;
    std::uint64_t t = comp;
    while (true) {
      m.add_mask(d | t, c);
      if (t == 0) break;
      t = (t - 1) & comp;
    }
  }
  return m;
}

bool is_symmetric(const QSymVector& v) {
  const int n = v.degree();
  const MonomialVector m = fundamental_to_monomial(v);
  std::map<Partition, long long> cls;
  for (std::uint64_t s = 0; s <= degree_mask(n); ++s) {
    Partition lambda = partition_of_composition(composition_of_boundary(n, s));
    long long c = m.coeff_mask(s);
    auto [it, inserted] = cls.try_emplace(lambda, c);
    if (!inserted && it->second != c) return false;
  }
  return true;
}

QSymVector schur_in_fundamental(const Partition& lambda) {
  if (lambda.sum() < 1) throw std::invalid_argument("schur_in_fundamental: empty partition");
  return qsym_of_syt(SkewShape(lambda));
}

namespace {

// Exact rational arithmetic for the linear solve; desk-scale values only.
struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n) {}
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::overflow_error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
};

Rat make_rat(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n;
  __int128 g = d;
  while (a != 0) {
    __int128 t = g % a;
    g = a;
    a = t;
  }
  if (g > 1) {
    n /= g;
    d /= g;
  }
  const __int128 lim = __int128{1} << 62;
  if (n >= lim || n <= -lim || d >= lim)
    throw std::overflow_error("Rat: value exceeds 64-bit range");
  Rat r;
  r.num = static_cast<long long>(n);
  r.den = static_cast<long long>(d);
  return r;
}

Rat operator*(const Rat& a, const Rat& b) {
  return make_rat(__int128{a.num} * b.num, __int128{a.den} * b.den);
}
Rat operator/(const Rat& a, const Rat& b) {
  if (b.num == 0) throw std::overflow_error("Rat: division by zero");
  return make_rat(__int128{a.num} * b.den, __int128{a.den} * b.num);
}
Rat operator-(const Rat& a, const Rat& b) {
  return make_rat(__int128{a.num} * b.den - __int128{b.num} * a.den, __int128{a.den} * b.den);
}

}  // namespace

SchurExpandResult schur_expand(const QSymVector& v) {
  const int n = v.degree();
  if (n > 12) throw std::invalid_argument("schur_expand: degree exceeds the desk-scale bound");
  const std::vector<Partition> lambdas = partitions_of(n);
  const int cols = static_cast<int>(lambdas.size());
  const std::uint64_t nmasks = degree_mask(n) + 1;
  const int rows = static_cast<int>(nmasks);

  // Augmented system [A | v]; column j is the SYT descent distribution of
  // lambdas[j].
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols + 1));
  for (int j = 0; j < cols; ++j) {
    const QSymVector col = schur_in_fundamental(lambdas[j]);
    for (auto [mask, c] : col.coeffs()) a[static_cast<int>(mask)][j] = Rat(c);
  }
  for (auto [mask, c] : v.coeffs()) a[static_cast<int>(mask)][cols] = Rat(c);

  std::vector<int> pivot_row_of_col(cols, -1);
  int rank = 0;
  for (int j = 0; j < cols && rank < rows; ++j) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (!a[r][j].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    const Rat inv = Rat(1) / a[rank][j];
    for (int jj = j; jj <= cols; ++jj) a[rank][jj] = a[rank][jj] * inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][j].is_zero()) continue;
      const Rat f = a[r][j];
      for (int jj = j; jj <= cols; ++jj) a[r][jj] = a[r][jj] - f * a[rank][jj];
    }
    pivot_row_of_col[j] = rank;
    ++rank;
  }
  // The SYT distribution vectors are linearly independent at desk scale.
  if (rank != cols) throw std::logic_error("schur_expand: SYT distribution vectors degenerate");

  SchurExpandResult res;
  for (int r = rank; r < rows; ++r)
    if (!a[r][cols].is_zero()) return res;  // inconsistent: not in the span

  bool positive = true;
  std::map<Partition, long long> coeffs;
  for (int j = 0; j < cols; ++j) {
    const Rat x = a[pivot_row_of_col[j]][cols];
    if (!x.is_integer()) return res;  // rational but non-integer solution
    if (x.num != 0) {
      coeffs[lambdas[j]] = x.num;
      if (x.num < 0) positive = false;
    }
  }
  res.in_span = true;
  res.coeffs = std::move(coeffs);
  res.schur_positive = positive;
  return res;
}

IntPolynomial hook_coeffs(int degree, const std::map<Partition, long long>& expansion) {
  IntPolynomial h;
  for (int k = 0; k <= degree - 1; ++k) {
    std::vector<int> parts = {degree - k};
    for (int i = 0; i < k; ++i) parts.push_back(1);
    auto it = expansion.find(Partition(parts));
    if (it != expansion.end()) h.add_term(k, it->second);
  }
  return h;
}

}  // namespace schurkit
