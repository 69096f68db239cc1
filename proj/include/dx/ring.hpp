/**
 * @file ring.hpp
 * @brief Exact coefficient arithmetic.
 *
 * Two layers:
 *  - QuarterLaurent: Laurent polynomials in t = q^{1/4} with rational
 *    coefficients. Exponents are stored as integers counting quarter powers
 *    of q, so the fractional Cartan exponents of the R-matrix stay exact.
 *  - RatFunc: reduced fractions num/den of QuarterLaurent values.
 *
 * IntLaurent is the boundary type: a Laurent polynomial in q with integer
 * coefficients, the form every link invariant must finally take.
 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dx {

using Rational = mpq_class;
using Integer = mpz_class;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

class QuarterLaurent {
 public:
  using Terms = std::map<int, Rational>;

  QuarterLaurent() = default;
  QuarterLaurent(long c);  // NOLINT(google-explicit-constructor)
  QuarterLaurent(const Rational& c);  // NOLINT(google-explicit-constructor)

  /// c * t^e
  static QuarterLaurent monomial(const Rational& c, int t_exponent);
  /// c * q^e, i.e. t^{4e}
  static QuarterLaurent q_power(int q_exponent, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Lowest / highest t-exponent. Undefined on zero.
  int low() const { return terms_.begin()->first; }
  int high() const { return terms_.rbegin()->first; }
  const Rational& leading() const { return terms_.rbegin()->second; }
  Rational coefficient(int t_exponent) const;

  /// Multiply by t^k.
  QuarterLaurent shifted(int k) const;
  /// Substitute t -> t^{-1}.
  QuarterLaurent inverted_variable() const;
  /// Value at t = 1.
  Rational at_one() const;

  QuarterLaurent& operator+=(const QuarterLaurent& o);
  QuarterLaurent& operator-=(const QuarterLaurent& o);
  QuarterLaurent& operator*=(const QuarterLaurent& o);
  QuarterLaurent& operator*=(const Rational& c);

  friend QuarterLaurent operator+(QuarterLaurent a, const QuarterLaurent& b) { return a += b; }
  friend QuarterLaurent operator-(QuarterLaurent a, const QuarterLaurent& b) { return a -= b; }
  friend QuarterLaurent operator*(const QuarterLaurent& a, const QuarterLaurent& b);
  QuarterLaurent operator-() const;

  friend bool operator==(const QuarterLaurent& a, const QuarterLaurent& b) {
    return a.terms_ == b.terms_;
  }

  /// Add c * t^e, dropping the term if it cancels.
  void add_term(int t_exponent, const Rational& c);

 private:
  Terms terms_;
};

/// Polynomial division with remainder over the rationals. Both operands must
/// be genuine polynomials (lowest exponent >= 0); divisor nonzero.
void poly_divmod(const QuarterLaurent& a, const QuarterLaurent& b,
                 QuarterLaurent& quotient, QuarterLaurent& remainder);

/// Monic gcd of two polynomials (lowest exponents >= 0), up to units t^k.
QuarterLaurent poly_gcd(QuarterLaurent a, QuarterLaurent b);

class RatFunc {
 public:
  RatFunc() : num_(), den_(1) {}
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(QuarterLaurent p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Builds num/den and brings it to canonical form. Throws DivisionByZero.
  RatFunc(QuarterLaurent num, QuarterLaurent den);

  static RatFunc q_power(int q_exponent) { return QuarterLaurent::q_power(q_exponent); }
  /// q - q^{-1}
  static RatFunc lambda();

  const QuarterLaurent& num() const { return num_; }
  const QuarterLaurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  RatFunc inverse() const;
  RatFunc pow(int e) const;
  /// Substitute q -> q^{-1}.
  RatFunc inverted_variable() const;
  /// Value at q = 1. Throws DivisionByZero if the denominator vanishes there.
  Rational at_one() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void canonicalize();

  QuarterLaurent num_;
  QuarterLaurent den_;
};

enum class ArithKind { add, sub, mul, div, neg, pow };

/// Uniform entry point over the RatFunc operators. For `neg` rhs is ignored;
/// for `pow` the exponent is `power`.
RatFunc poly_arith(const RatFunc& lhs, const RatFunc& rhs, ArithKind kind, int power = 0);

/// (n)_c = (q^{nc} - 1)/(q^c - 1) when c != 0, else 1.
RatFunc q_integer(int n, int c);
/// (n)_c! = (n)_c (n-1)_c ... (1)_c
RatFunc q_factorial(int n, int c);

/// Laurent polynomial in q with integer coefficients.
class IntLaurent {
 public:
  using Terms = std::map<int, Integer>;

  IntLaurent() = default;
  IntLaurent(long c);  // NOLINT(google-explicit-constructor)
  static IntLaurent monomial(long c, int q_exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int q_exponent, const Integer& c);

  IntLaurent& operator+=(const IntLaurent& o);
  IntLaurent& operator-=(const IntLaurent& o);
  friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { return a += b; }
  friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { return a -= b; }
  friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);
  IntLaurent operator-() const;
  /// q -> q^{-1}
  IntLaurent inverted_variable() const;
  /// Exact division by an integer; throws std::domain_error if inexact.
  IntLaurent divided_by(const Integer& d) const;

  QuarterLaurent to_quarter() const;

  friend bool operator==(const IntLaurent& a, const IntLaurent& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

class NotLaurentInQ : public std::domain_error {
 public:
  NotLaurentInQ(const std::string& what, std::string offending)
      : std::domain_error(what + ": " + offending), offending_(std::move(offending)) {}
  const std::string& offending() const { return offending_; }

 private:
  std::string offending_;
};

/// Accepts p iff it is a polynomial in q^{+-1} with integer coefficients.
IntLaurent to_integer_laurent(const RatFunc& p);

/// Canonical text form: ascending exponents, e.g. `-2*q^-1 + 3 + q^2`, `0`
/// for zero. This is the only polynomial format the CLI prints.
std::string to_string(const IntLaurent& p);
/// Parses the canonical form (and tolerates missing spaces).
IntLaurent parse_int_laurent(const std::string& text);

/// Human-readable rendering of quarter powers: exponents that are multiples
/// of 4 print as powers of q, others as q^(k/4).
std::string to_string(const QuarterLaurent& p);
/// `num` or `(num)/(den)`.
std::string to_string(const RatFunc& f);

std::ostream& operator<<(std::ostream& os, const QuarterLaurent& p);
std::ostream& operator<<(std::ostream& os, const RatFunc& f);
std::ostream& operator<<(std::ostream& os, const IntLaurent& p);

}  // namespace dx
