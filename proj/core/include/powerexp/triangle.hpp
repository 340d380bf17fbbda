#pragma once

// Triangle families built around the cube-difference coefficient
// U(n,k) = 6nk - 6k^2 + 1 (OEIS A287326) and its relatives.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "powerexp/exact.hpp"

namespace powerexp {

enum class TriangleTag {
  kUTriangle,      ///< 6nk - 6k^2 + 1
  kPascal,         ///< C(n,k)
  kRascal,         ///< (U + 5) / 6 = nk - k^2 + 1
  kScaledPascal2k, ///< C(n,k) * 2^k
  kVTriangle,      ///< V_M(n,k); uses TriangleKind::m
  kReduced1,       ///< U - n^2 in the interior, 1 on the boundary
  kReduced2,       ///< U - n^2 - n in the interior, 1 on the boundary
  kOnes,
};

struct TriangleKind {
  TriangleTag tag = TriangleTag::kUTriangle;
  long m = 0;  ///< only meaningful for kVTriangle

  static TriangleKind v(long m);
  /// CLI spelling: u, pascal, rascal, scaled-pascal, v:M, reduced-1,
  /// reduced-2, ones. Throws std::invalid_argument.
  static TriangleKind parse(std::string_view name);
  std::string name() const;

  friend bool operator==(const TriangleKind&, const TriangleKind&) = default;
};

struct TriangleRow {
  TriangleKind kind;
  long n = 0;
  std::vector<ExactInt> entries;  ///< n + 1 entries, k = 0..n
};

/// Coefficients of the two-term forms A0*x - B0 = x^3 (sum over k = 0..x-1)
/// and A1*x - B1 = x^3 (sum over k = 1..x).
struct ABCoefficients {
  ExactInt x, a0, b0, a1, b1;
};

enum class RowRange { kExclLast, kInclLast, kExclFirst };
enum class IterationSet { kA, kB, kC };  ///< {1..x}, {0..x}, {0..x-1}
enum class SumForm { kTForm, kUForm };

/// 6nk - 6k^2 + 1 for any integers n, k (the triangle bounds only matter
/// for rendering).
ExactInt u_coeff(const ExactInt& n, const ExactInt& k);

/// V_M(n,k): sum_{i=0}^{M} n^i for 0 < k < n, and 1 for k in {0, n}.
/// Throws DomainError unless 0 <= k <= n and M >= 0.
ExactInt v_coeff(long m, const ExactInt& n, const ExactInt& k);

/// Rascal entry, derived from U = 6 * rascal - 5 with a divisibility check.
ExactInt rascal_coeff(const ExactInt& n, const ExactInt& k);

ExactInt triangle_entry(const TriangleKind& kind, long n, long k);
TriangleRow triangle_row(const TriangleKind& kind, long n);

/// Rows 0..last. Rows may be computed on `parallelism` threads; the result is
/// ordered by n either way.
std::vector<TriangleRow> triangle_rows(const TriangleKind& kind, long last, unsigned parallelism = 1);

/// Row sum of U(n, .) by direct summation over the requested index range:
/// kExclLast k = 0..n-1, kInclLast k = 0..n, kExclFirst k = 1..n.
ExactInt row_sum_u(const ExactInt& n, RowRange range);

/// Closed forms a0 = 3x^2-3x, b0 = 2x^3-3x^2, a1 = 3x^2+3x, b1 = 2x^3+3x^2.
/// Throws DomainError for x < 1.
ABCoefficients ab_coefficients(const ExactInt& x);

/// U((n^2+n+2)/2, 1), checked against (n+1)^3 - n^3.
ExactInt central_polygonal_pointer(const ExactInt& n);

/// Sums the cube decomposition over one of the iteration sets. T-form sums
/// 6mx - 6m^2 + 1 (sets A and C only); U-form is x + 6 * sum(mx - m^2).
/// Throws DomainError for x < 1 or for T-form over set B.
ExactInt iteration_set_sum(const ExactInt& x, IterationSet set, SumForm form);

// Rendering. Entries always print as exact decimal integers.
std::string render_centered(std::span<const TriangleRow> rows);
std::string render_csv(std::span<const TriangleRow> rows);
std::string render_json(std::span<const TriangleRow> rows);

}  // namespace powerexp
