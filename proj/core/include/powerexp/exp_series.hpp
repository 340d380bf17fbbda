#pragma once

// Exact partial sums of e^x = sum x^n / n! for natural x, with rigorous
// rational tail bounds.

#include <string>

#include "powerexp/exact.hpp"
#include "powerexp/expand.hpp"

namespace powerexp {

struct ExpPartial {
  ExactInt x;
  long terms_used = 0;  ///< N: the sum runs over n = 0..N
  Strategy strategy;
  ExactRat value;
  ExactRat tail_bound;  ///< >= sum_{n>N} x^n / n!
};

/// Upper bound on sum_{n>N} x^n/n!:
///   x^{N+1}/(N+1)! * (N+2)/(N+2-x)   when N + 2 > x,
///   3^x * x^{N+1}/(N+1)!             otherwise (Lagrange remainder, e < 3).
ExactRat exp_tail_bound(const ExactInt& x, long n_terms);

/// Partial sum with every x^n produced by `strategy`. Throws DomainError when
/// the strategy is undefined at x (U-family and generalized binomial need
/// x >= 1) or when x < 0 or N < 0.
ExpPartial exp_partial(const ExactInt& x, long n_terms, const Strategy& strategy);

/// Inner term of the e^x - e series: for n >= 3,
///   sum_{m=1}^{x-1} U(x,m) x^{n-3} + x^{n-4} + ... + x + 1;
/// for n in {0,1,2} it is x^n - 1 (the inner form needs negative powers there).
ExactRat exp_minus_e_inner(const ExactInt& x, long n);

/// sum_{n=offset}^{N} exp_minus_e_inner(x, n) / n!. Throws DomainError unless
/// x >= 2, N >= 3 and offset in {0, 1}.
ExactRat exp_minus_e_partial(const ExactInt& x, long n_terms, long offset = 0);

/// Independent reference: sum_{n=0}^{N} (x^n - 1)/n!.
ExactRat exp_minus_e_reference(const ExactInt& x, long n_terms);

/// Smallest N whose tail bound is below 10^-digits.
long exp_convergence_report(const ExactInt& x, long decimal_digits);

std::string render_text(const ExpPartial& partial, int digits);
std::string render_json(const ExpPartial& partial, int digits);

}  // namespace powerexp
