#pragma once

// Forward-difference calculus with step h = 1 unless stated otherwise.

#include <span>
#include <string>
#include <vector>

#include "powerexp/exact.hpp"

namespace powerexp {

/// Difference table of f(x) = x^n on x = 0..x_max. columns[0] holds f,
/// columns[d] the d-th forward difference (length x_max + 1 - d).
struct DifferenceTable {
  long n = 0;
  long x_max = 0;
  long depth = 0;
  std::vector<std::vector<ExactInt>> columns;
};

/// Result of telescoping x^n into its first differences (k+1)^n - k^n.
struct Telescoped {
  ExactInt value;
  std::vector<ExactInt> terms;
};

/// The order-th iterated forward difference. Throws DomainError unless
/// 1 <= order < values.size().
std::vector<ExactRat> forward_diff_seq(std::span<const ExactRat> values, long order);

/// Throws DomainError for n < 1, depth < 1 or depth > x_max.
DifferenceTable difference_table(long n, long x_max, long depth);

/// sum_{k=1}^{n} C(n,k) x^{n-k} h^k, checked against (x+h)^n - x^n.
ExactRat binomial_diff(const ExactRat& x, long n, const ExactRat& h);

/// sum_{k=0}^{x-1} ((k+1)^n - k^n). Throws DomainError for x < 0 or n < 1.
Telescoped telescope_power(long x, long n);

/// Geometric sum x^0 + x^1 + ... + x^{n-1}; zero for n = 0.
ExactRat gsum(const ExactRat& x, long n);
ExactInt gsum(const ExactInt& x, long n);

/// x * (gsum(x+1,n) - gsum(x,n)) + gsum(x,n), checked against (x+1)^n - x^n.
ExactInt v_first_diff(long x, long n);

/// 1 + sum_{j=0}^{n} 6j, checked against (n+1)^3 - n^3.
ExactInt hex_footnote_check(long n);

std::string render_text(const DifferenceTable& table);
std::string render_csv(const DifferenceTable& table);
std::string render_json(const DifferenceTable& table);

}  // namespace powerexp
