#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace dbgf {

using BigInt = mpz_class;

/// Dense univariate polynomial in y with arbitrary-precision integer
/// coefficients; coeffs()[k] is the coefficient of y^k. Trailing zeros are
/// trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const BigInt& c);
  /// c * y^k
  static IntPolynomial monomial(const BigInt& c, std::size_t k);

  const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of y^k, zero past the degree.
  BigInt coeff(std::size_t k) const;

  BigInt evaluate(const BigInt& y) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Throws inexact_division unless every coefficient is divisible by `d`.
  IntPolynomial divide_exact(const BigInt& d) const;
  /// Exact polynomial quotient by a divisor with leading coefficient +-1;
  /// throws inexact_division when the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  /// "c0 + c1*y + c2*y^2", zero terms omitted; "0" for the zero polynomial.
  std::string to_string() const;
  /// Terse "y + y^3" form with unit coefficients dropped.
  std::string to_pretty_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, std::size_t e);

/// (1+y)^k - (1-y)^k for k > 0, and 1 for k = 0.
IntPolynomial p_poly(std::size_t k);

/// y^m * P(1/y); requires deg P <= m.
IntPolynomial reciprocal_transform(const IntPolynomial& p, std::size_t m);

/// Exact 2^e as a big integer.
BigInt pow2(std::size_t e);

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace dbgf
