#ifndef SCHURKIT_POLY_HPP
#define SCHURKIT_POLY_HPP

#include <optional>
#include <string>
#include <vector>

namespace schurkit {

// Univariate polynomial with integer coefficients, dense from degree 0.
// The zero polynomial has an empty coefficient vector and degree() == -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<long long> coeffs);

  static IntPolynomial zero() { return {}; }
  static IntPolynomial one() { return monomial(0); }
  static IntPolynomial monomial(int degree, long long coeff = 1);
  // (1+x)^k, k >= 0.
  static IntPolynomial one_plus_x_power(int k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  long long coeff(int k) const;
  const std::vector<long long>& coeffs() const { return c_; }
  long long eval(long long x) const;
  bool has_nonnegative_coeffs() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  // Add c to the coefficient of x^k.
  void add_term(int k, long long c);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<long long> c_;
};

// Exact quotient p / (1+x), or nullopt when 1+x does not divide p.
std::optional<IntPolynomial> divide_exact_one_plus_x(const IntPolynomial& p);

// x^top_degree * p(1/x); requires degree(p) <= top_degree.
IntPolynomial reversed(const IntPolynomial& p, int top_degree);

}  // namespace schurkit

#endif
