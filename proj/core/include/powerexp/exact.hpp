#pragma once

// Arbitrary-precision integers and rationals. Every quantity in the library
// is exact; there is no floating point anywhere in the public API.

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace powerexp {

/// Raised when an argument lies outside an operation's mathematical domain
/// (negative binomial row, zero base with negative exponent, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ExactInt {
 public:
  ExactInt() = default;

  template <std::signed_integral T>
  ExactInt(T v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral T>
  ExactInt(T v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

  explicit ExactInt(mpz_class v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal integer. Throws std::invalid_argument.
  static ExactInt parse(std::string_view text);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_even() const { return mpz_even_p(v_.get_mpz_t()) != 0; }
  bool fits_long() const { return v_.fits_slong_p(); }
  /// Throws std::overflow_error when the value does not fit.
  long to_long() const;
  std::string str() const { return v_.get_str(); }
  const mpz_class& raw() const { return v_; }

  ExactInt& operator+=(const ExactInt& o) { v_ += o.v_; return *this; }
  ExactInt& operator-=(const ExactInt& o) { v_ -= o.v_; return *this; }
  ExactInt& operator*=(const ExactInt& o) { v_ *= o.v_; return *this; }

  friend ExactInt operator+(ExactInt a, const ExactInt& b) { return a += b; }
  friend ExactInt operator-(ExactInt a, const ExactInt& b) { return a -= b; }
  friend ExactInt operator*(ExactInt a, const ExactInt& b) { return a *= b; }
  ExactInt operator-() const { return ExactInt(mpz_class(-v_)); }

  friend bool operator==(const ExactInt& a, const ExactInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactInt& a, const ExactInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

/// Rational in canonical form: positive denominator, gcd(|num|, den) = 1.
class ExactRat {
 public:
  ExactRat() = default;

  template <std::integral T>
  ExactRat(T v) : ExactRat(ExactInt(v)) {}  // NOLINT(google-explicit-constructor)

  ExactRat(const ExactInt& v) : v_(v.raw()) {}  // NOLINT(google-explicit-constructor)

  /// num/den, normalized. Throws DomainError when den is zero.
  ExactRat(const ExactInt& num, const ExactInt& den);

  explicit ExactRat(mpq_class v);

  /// Accepts "p", "-p" or "p/q".
  static ExactRat parse(std::string_view text);

  ExactInt num() const { return ExactInt(mpz_class(v_.get_num())); }
  ExactInt den() const { return ExactInt(mpz_class(v_.get_den())); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  /// Throws DomainError when the value is not integral.
  ExactInt to_integer() const;
  /// "p" for integers, "p/q" otherwise.
  std::string str() const;
  const mpq_class& raw() const { return v_; }

  ExactRat& operator+=(const ExactRat& o) { v_ += o.v_; return *this; }
  ExactRat& operator-=(const ExactRat& o) { v_ -= o.v_; return *this; }
  ExactRat& operator*=(const ExactRat& o) { v_ *= o.v_; return *this; }
  ExactRat& operator/=(const ExactRat& o);

  friend ExactRat operator+(ExactRat a, const ExactRat& b) { return a += b; }
  friend ExactRat operator-(ExactRat a, const ExactRat& b) { return a -= b; }
  friend ExactRat operator*(ExactRat a, const ExactRat& b) { return a *= b; }
  friend ExactRat operator/(ExactRat a, const ExactRat& b) { return a /= b; }
  ExactRat operator-() const { return ExactRat(mpq_class(-v_)); }

  friend bool operator==(const ExactRat& a, const ExactRat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpq_class v_;
};

ExactInt abs(const ExactInt& v);
ExactRat abs(const ExactRat& v);

/// a / b, requiring b to divide a. Throws DomainError otherwise.
ExactInt exact_div(const ExactInt& a, const ExactInt& b);

/// C(n, k); zero when k < 0 or k > n. Throws DomainError for n < 0.
ExactInt binomial(const ExactInt& n, const ExactInt& k);

/// x^n for n >= 0, with 0^0 = 1. Throws DomainError for n < 0.
ExactInt int_pow(const ExactInt& x, long n);

/// x^n for any integer n. Throws DomainError for 0 raised to a negative power.
ExactRat rat_pow(const ExactRat& x, long n);

ExactInt factorial(long n);

struct TruncatedDecimal {
  std::string text;
  /// 0 when `text` is exact; +1 when the true value is larger than `text`;
  /// -1 when it is smaller. Truncation is toward zero.
  int direction = 0;
};

/// Decimal expansion with `digits` digits after the point, truncated toward
/// zero (never rounded).
TruncatedDecimal truncate_decimal(const ExactRat& v, int digits);

std::ostream& operator<<(std::ostream& os, const ExactInt& v);
std::ostream& operator<<(std::ostream& os, const ExactRat& v);

}  // namespace powerexp
