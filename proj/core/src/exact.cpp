#include "powerexp/exact.hpp"

#include <algorithm>
#include <ostream>

namespace powerexp {

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

ExactInt ExactInt::parse(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return ExactInt(mpz_class(std::string(text), 10));
}

long ExactInt::to_long() const {
  if (!fits_long()) throw std::overflow_error("integer does not fit in long: " + str());
  return v_.get_si();
}

ExactRat::ExactRat(const ExactInt& num, const ExactInt& den) {
  if (den.is_zero()) throw DomainError("rational with zero denominator");
  v_ = mpq_class(num.raw(), den.raw());
  v_.canonicalize();
}

ExactRat::ExactRat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

ExactRat ExactRat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRat(ExactInt::parse(text));
  return ExactRat(ExactInt::parse(text.substr(0, slash)), ExactInt::parse(text.substr(slash + 1)));
}

ExactInt ExactRat::to_integer() const {
  if (!is_integer()) throw DomainError("value is not an integer: " + str());
  return num();
}

std::string ExactRat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

ExactRat& ExactRat::operator/=(const ExactRat& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

ExactInt abs(const ExactInt& v) { return v.sign() < 0 ? -v : v; }
ExactRat abs(const ExactRat& v) { return v.sign() < 0 ? -v : v; }

ExactInt exact_div(const ExactInt& a, const ExactInt& b) {
  if (b.is_zero()) throw DomainError("division by zero");
  if (mpz_divisible_p(a.raw().get_mpz_t(), b.raw().get_mpz_t()) == 0) {
    throw DomainError(b.str() + " does not divide " + a.str());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return ExactInt(std::move(q));
}

ExactInt binomial(const ExactInt& n, const ExactInt& k) {
  if (n.sign() < 0) throw DomainError("binomial: negative row " + n.str());
  if (k.sign() < 0 || k > n) return 0;
  ExactInt kk = std::min(k, n - k);
  if (!kk.raw().fits_ulong_p()) throw std::overflow_error("binomial: index too large");
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.raw().get_mpz_t(), kk.raw().get_ui());
  return ExactInt(std::move(r));
}

ExactInt int_pow(const ExactInt& x, long n) {
  if (n < 0) throw DomainError("int_pow: negative exponent " + std::to_string(n));
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), x.raw().get_mpz_t(), static_cast<unsigned long>(n));
  return ExactInt(std::move(r));
}

ExactRat rat_pow(const ExactRat& x, long n) {
  if (n >= 0) {
    return ExactRat(int_pow(x.num(), n), int_pow(x.den(), n));
  }
  if (x.is_zero()) throw DomainError("rat_pow: zero to a negative power");
  return ExactRat(int_pow(x.den(), -n), int_pow(x.num(), -n));
}

ExactInt factorial(long n) {
  if (n < 0) throw DomainError("factorial of negative " + std::to_string(n));
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return ExactInt(std::move(r));
}

TruncatedDecimal truncate_decimal(const ExactRat& v, int digits) {
  if (digits < 0) throw DomainError("negative digit count");
  const mpz_class& num = v.raw().get_num();
  const mpz_class& den = v.raw().get_den();
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class mag = abs(num) * scale;
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mag.get_mpz_t(), den.get_mpz_t());

  std::string body = q.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits)) {
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    }
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  TruncatedDecimal out;
  bool negative = sgn(num) < 0;
  out.text = negative ? "-" + body : body;
  if (r != 0) out.direction = negative ? -1 : 1;
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactInt& v) { return os << v.str(); }
std::ostream& operator<<(std::ostream& os, const ExactRat& v) { return os << v.str(); }

}  // namespace powerexp
