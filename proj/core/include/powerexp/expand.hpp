#pragma once

// Interchangeable expansions of x^n. Every strategy returns its summands in
// iteration order; the total is checked against direct exponentiation.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powerexp/exact.hpp"

namespace powerexp {

enum class StrategyTag {
  kVRow,             ///< sum_{k=0}^{x-1} V_{n-1}(x,k)
  kTelescopeGeom,    ///< 1 + sum_{k=0}^{n-1} (x^{k+1} - x^k)
  kURow,             ///< sum_{k=0}^{x-1} U(x,k) x^{n-3}
  kURecurrenceN,     ///< sum (U(x+1,k) + U(x-1,k))/2 * x^{n-3}
  kUReflect,         ///< sum (U(2x-k,k) + U(2x-k,0))/2 * x^{n-3}
  kUCentral,         ///< sum U((k^2+k+2)/2, 1) * x^{n-3}
  kGenBinomial,      ///< sum_k (-1)^k C(j,k) A^{j-k} B^k x^{n-2j-k}
  kDoubleBinomial,   ///< sum_k sum_j C(n,k) C(k,j) (-1)^{k-j} x^j
  kBinomialDiffSum,  ///< sum_{j=0}^{x-1} sum_{k=1}^{n} C(n,k) j^{n-k}
};

/// Which (A, B) pair feeds the generalized binomial strategy.
enum class ABPair { kZero, kOne };

struct Strategy {
  StrategyTag tag = StrategyTag::kTelescopeGeom;
  long depth = 1;             ///< recursion depth j, kGenBinomial only
  ABPair pair = ABPair::kZero;

  static Strategy gen_binomial(long depth, ABPair pair = ABPair::kZero);
  /// v-row, telescope-geom, u-row, u-recurrence-n, u-reflect, u-central,
  /// double-binomial, binomial-diff-sum, gen-binomial[:J[:a1b1]].
  /// Throws std::invalid_argument for unknown names.
  static Strategy parse(std::string_view name);
  std::string name() const;

  friend bool operator==(const Strategy&, const Strategy&) = default;
};

/// The eight strategies that need no extra parameter.
std::vector<Strategy> evaluable_strategies();

struct ExpansionResult {
  ExactInt x;
  long n = 0;
  Strategy strategy;
  ExactInt value;
  std::vector<ExactRat> terms;
};

/// Throws DomainError when the strategy is not defined at (x, n): U-family
/// and generalized binomial need x >= 1, the rest need x >= 0, and V-row
/// additionally excludes x = 0 with n = 0.
ExpansionResult expand_power(const ExactInt& x, long n, const Strategy& strategy);

/// Raw summands of the double binomial sum in (k, j) lexicographic order;
/// (n+1)(n+2)/2 of them.
std::vector<ExactRat> double_binomial_summands(const ExactInt& m, long n);

/// (x+y)^n = 1 + (x+y-1) * gsum(x+y, n), together with the regrouping
/// 1 + x*G + y*G - G where G = gsum(x+y, n).
struct BinomialPairExpansion {
  ExactInt value;
  ExactInt x_total;
  ExactInt y_total;
  ExactInt unit_total;
};

/// Throws DomainError when x + y < 1.
BinomialPairExpansion expand_binomial_pair(const ExactInt& x, const ExactInt& y, long n);

/// (sum xs)^n via 1 + (s-1) * gsum(s, n). Throws DomainError when sum xs < 1.
ExactInt expand_multinomial(std::span<const ExactInt> xs, long n);

/// (x^n - 1)/(x - 1), checked against gsum(x, n). Throws DomainError for x < 2.
ExactRat geom_ratio_identity(const ExactInt& x, long n);

std::string render_text(const ExpansionResult& result, bool with_terms);
std::string render_json(const ExpansionResult& result, bool with_terms);

}  // namespace powerexp
