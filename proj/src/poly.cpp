#include "schurkit/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace schurkit {

IntPolynomial::IntPolynomial(std::vector<long long> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(int degree, long long coeff) {
  if (degree < 0) throw std::invalid_argument("IntPolynomial::monomial: negative degree");
  if (coeff == 0) return {};
  IntPolynomial p;
  p.c_.assign(degree + 1, 0);
  p.c_[degree] = coeff;
  return p;
}

IntPolynomial IntPolynomial::one_plus_x_power(int k) {
  if (k < 0) throw std::invalid_argument("one_plus_x_power: negative exponent");
  std::vector<long long> c(k + 1);
  c[0] = 1;
  for (int i = 1; i <= k; ++i) c[i] = c[i - 1] * (k - i + 1) / i;
  return IntPolynomial(std::move(c));
}

long long IntPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

long long IntPolynomial::eval(long long x) const {
  long long v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

bool IntPolynomial::has_nonnegative_coeffs() const {
  for (long long c : c_)
    if (c < 0) return false;
  return true;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.c_.size() > c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<long long> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

void IntPolynomial::add_term(int k, long long c) {
  if (k < 0) throw std::invalid_argument("IntPolynomial::add_term: negative degree");
  if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, 0);
  c_[k] += c;
  trim();
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) os << (c_[k] > 0 ? " + " : " - ");
    else if (c_[k] < 0) os << "-";
    long long a = c_[k] > 0 ? c_[k] : -c_[k];
    if (k == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "x";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::optional<IntPolynomial> divide_exact_one_plus_x(const IntPolynomial& p) {
  if (p.is_zero()) return IntPolynomial::zero();
  // p = (1+x) q, so q_k = p_k - q_{k-1} from the bottom up.
  const int d = p.degree();
  std::vector<long long> q(d, 0);
  long long carry = 0;  // q_{k-1}
  for (int k = 0; k < d; ++k) {
    long long qk = p.coeff(k) - carry;
    q[k] = qk;
    carry = qk;
  }
  if (p.coeff(d) != carry) return std::nullopt;
  return IntPolynomial(std::move(q));
}

IntPolynomial reversed(const IntPolynomial& p, int top_degree) {
  if (p.degree() > top_degree)
    throw std::invalid_argument("reversed: degree exceeds top_degree");
  std::vector<long long> c(top_degree + 1, 0);
  for (int k = 0; k <= p.degree(); ++k) c[top_degree - k] = p.coeff(k);
  return IntPolynomial(std::move(c));
}

}  // namespace schurkit
