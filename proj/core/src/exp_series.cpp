#include "powerexp/exp_series.hpp"

#include "powerexp/triangle.hpp"

namespace powerexp {

ExactRat exp_tail_bound(const ExactInt& x, long n_terms) {
  if (x.sign() < 0) throw DomainError("exp tail bound requires x >= 0");
  if (n_terms < 0) throw DomainError("exp tail bound requires N >= 0");
  ExactRat lead(int_pow(x, n_terms + 1), factorial(n_terms + 1));
  ExactInt slack = ExactInt(n_terms + 2) - x;
  if (slack.sign() > 0) return lead * ExactRat(ExactInt(n_terms + 2), slack);
  return lead * ExactRat(int_pow(3, x.to_long()));
}

ExpPartial exp_partial(const ExactInt& x, long n_terms, const Strategy& strategy) {
  if (x.sign() < 0) throw DomainError("exp_partial requires x >= 0");
  if (n_terms < 0) throw DomainError("exp_partial requires N >= 0");
  ExactRat sum = 0;
  ExactInt fact = 1;
  for (long n = 0; n <= n_terms; ++n) {
    if (n > 0) fact *= n;
    sum += ExactRat(expand_power(x, n, strategy).value, fact);
  }
  return ExpPartial{x, n_terms, strategy, sum, exp_tail_bound(x, n_terms)};
}

ExactRat exp_minus_e_inner(const ExactInt& x, long n) {
  if (x < 2) throw DomainError("e^x - e expansion requires x >= 2");
  if (n < 0) throw DomainError("e^x - e expansion requires n >= 0");
  if (n < 3) return ExactRat(int_pow(x, n) - 1);
  ExactInt scale = int_pow(x, n - 3);
  ExactInt sum = 0;
  for (ExactInt m = 1; m < x; m += 1) sum += u_coeff(x, m) * scale;
  // x^{n-4} + ... + x + 1, i.e. sum_{t=4}^{n} x^{n-t}
  for (long t = 4; t <= n; ++t) sum += int_pow(x, n - t);
  return ExactRat(sum);
}

ExactRat exp_minus_e_partial(const ExactInt& x, long n_terms, long offset) {
  if (x < 2) throw DomainError("exp_minus_e_partial requires x >= 2");
  if (n_terms < 3) throw DomainError("exp_minus_e_partial requires N >= 3");
  if (offset != 0 && offset != 1) throw DomainError("outer sum offset must be 0 or 1");
  ExactRat sum = 0;
  for (long n = offset; n <= n_terms; ++n) sum += exp_minus_e_inner(x, n) / ExactRat(factorial(n));
  return sum;
}

ExactRat exp_minus_e_reference(const ExactInt& x, long n_terms) {
  ExactRat sum = 0;
  ExactInt fact = 1;
  ExactInt power = 1;
  for (long n = 0; n <= n_terms; ++n) {
    if (n > 0) {
      fact *= n;
      power *= x;
    }
    sum += ExactRat(power - 1, fact);
  }
  return sum;
}

long exp_convergence_report(const ExactInt& x, long decimal_digits) {
  if (decimal_digits < 1) throw DomainError("decimal digit count must be >= 1");
  const ExactRat target(ExactInt(1), int_pow(10, decimal_digits));
  long n = 0;
  while (!(exp_tail_bound(x, n) < target)) ++n;
  return n;
}

}  // namespace powerexp
