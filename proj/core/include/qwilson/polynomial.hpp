#ifndef QWILSON_POLYNOMIAL_HPP
#define QWILSON_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwilson/errors.hpp"

namespace qwilson {

// Arbitrary-precision integer.  The coefficients of [n]_q! leave the 64-bit
// range around n = 21, so nothing narrower is safe here.
using BigInt = mpz_class;

// Dense univariate polynomial over Z in the formal variable q.
//
// Canonical form: coeffs[i] is the coefficient of q^i, the highest stored
// coefficient is nonzero, and the zero polynomial stores nothing.  Every
// constructor and operation re-canonicalizes, so equality of values is
// equality of representations.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigInt> coeffs);

  static Polynomial constant(BigInt c);
  // c * q^k
  static Polynomial monomial(BigInt c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is minus infinity, reported as nullopt so
  // it can never collide with a real degree.
  std::optional<std::size_t> degree() const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  // Coefficient of q^k; zero beyond the degree.
  BigInt coefficient(std::size_t k) const;
  const BigInt& leading_coefficient() const;  // pre: !is_zero()
  bool is_monic() const;

  // Sum of the coefficients, i.e. the limit value at q = 1.
  BigInt eval_at_one() const;

  // p(q^k): the coefficient of q^i moves to q^{ik}.  pre: k >= 1
  Polynomial substitute_power(unsigned k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  bool operator==(const Polynomial& rhs) const { return coeffs_ == rhs.coeffs_; }

  // Canonical rendering: ascending powers, explicit signs, constant first,
  // zero terms omitted, unit coefficients bare, e.g.
  //   3 + 3*q - 4*q^3 - 6*q^4 - 4*q^5
  // The zero polynomial renders as "0".
  std::string to_string() const;
  // Parses the same grammar.  Throws ParseError on malformed input.
  static Polynomial parse(std::string_view text);

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

struct DivModResult {
  Polynomial quotient;
  Polynomial remainder;
};

// Euclidean division by a monic modulus: a = quotient * m + remainder with
// deg remainder < deg m, exact over the integers.  Throws ZeroModulus if
// m = 0 and NonMonicModulus if the leading coefficient of m is not 1.
DivModResult divmod(const Polynomial& a, const Polynomial& m);

// Remainder part of divmod.
Polynomial mod(const Polynomial& a, const Polynomial& m);

// The n-th cyclotomic polynomial Phi_n(q): monic, degree euler_phi(n),
// computed by exact division of q^n - 1 by the product of Phi_d over the
// proper divisors d of n.  Results are memoized; safe to call concurrently.
// pre: n >= 1
Polynomial cyclotomic(unsigned n);

}  // namespace qwilson

#endif  // QWILSON_POLYNOMIAL_HPP
