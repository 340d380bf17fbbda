#pragma once

// Registry of displayed identities, each evaluated exactly over an integer
// (or rational) grid. A report lists every point where lhs != rhs together
// with an inferred description of where the identity holds on that grid.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "powerexp/exact.hpp"

namespace powerexp {

enum class AuditStatus { kVerifiedClaim, kAuditedClaim, kNonEvaluable };

std::string to_string(AuditStatus status);

struct DomainVar {
  std::string name;
  std::vector<ExactRat> values;
  std::vector<std::string> labels;  ///< optional display names, parallel to values

  static DomainVar range(std::string name, long lo, long hi);
  static DomainVar list(std::string name, std::vector<ExactRat> values);
  std::string label(std::size_t i) const;
};

class Domain;

/// One grid point; a view into its Domain.
class Point {
 public:
  Point(const Domain& domain, std::vector<std::size_t> index) : domain_(&domain), index_(std::move(index)) {}

  const ExactRat& operator[](std::string_view name) const;
  ExactInt i(std::string_view name) const;
  long l(std::string_view name) const;
  const std::vector<std::size_t>& index() const { return index_; }
  /// ("x", "3"), ("n", "4"), ... in variable order.
  std::vector<std::pair<std::string, std::string>> coords() const;
  std::string str() const;

 private:
  const Domain* domain_;
  std::vector<std::size_t> index_;
};

class Domain {
 public:
  Domain() = default;
  Domain(std::vector<DomainVar> vars, std::function<bool(const Point&)> constraint = {},
         std::string constraint_text = {});

  const std::vector<DomainVar>& vars() const { return vars_; }
  std::size_t var_index(std::string_view name) const;  ///< throws std::invalid_argument
  /// Points in lexicographic order of variable indices, filtered by the constraint.
  std::vector<Point> points() const;
  std::string describe() const;

  void replace(DomainVar var);

 private:
  std::vector<DomainVar> vars_;
  std::function<bool(const Point&)> constraint_;
  std::string constraint_text_;
};

using Evaluator = std::function<ExactRat(const Point&)>;

struct IdentityRecord {
  std::string id;
  std::string citation;
  AuditStatus status = AuditStatus::kVerifiedClaim;
  Domain domain;
  Evaluator lhs;
  Evaluator rhs;
  /// A point fails when |lhs - rhs| exceeds this; zero when absent.
  Evaluator tolerance;
  std::string reason;  ///< NON_EVALUABLE only
  std::vector<std::string> notes;
  std::vector<std::string> aliases;
  /// Extra findings computed at audit time (limits, readings, ...).
  std::function<std::vector<std::string>()> analysis;
};

struct OutOfScope {
  std::string id;
  std::string citation;
  std::string reason;
};

struct Failure {
  std::vector<std::pair<std::string, std::string>> point;
  ExactRat lhs;
  ExactRat rhs;
  ExactRat residual;  ///< lhs - rhs
  std::optional<ExactRat> tolerance;
};

struct AuditReport {
  std::string id;
  std::string citation;
  AuditStatus status = AuditStatus::kAuditedClaim;
  std::string domain;
  long points_tested = 0;
  std::vector<Failure> failures;
  std::string validity_summary;
  std::vector<std::string> notes;

  bool ok() const { return failures.empty(); }
  /// 2 when a verified claim failed, 0 otherwise.
  int exit_status() const;
};

struct AuditAllReport {
  std::vector<AuditReport> reports;  ///< ordered by id
  std::vector<OutOfScope> non_evaluable;
  bool verified_ok() const;
  int exit_status() const { return verified_ok() ? 0 : 2; }
};

using DomainOverrides = std::map<std::string, std::vector<ExactRat>>;

/// Immutable after first use, ordered by id.
const std::vector<IdentityRecord>& registry();
/// Displays deliberately left out of the registry.
const std::vector<OutOfScope>& out_of_scope();
/// Accepts aliases. Throws std::invalid_argument for unknown ids.
const IdentityRecord& find_record(std::string_view id);

/// Throws std::invalid_argument for unknown ids, NON_EVALUABLE ids and
/// overrides naming variables the record does not have.
AuditReport audit(std::string_view id, const DomainOverrides& overrides = {}, unsigned parallelism = 1);
AuditAllReport audit_all(unsigned parallelism = 1);

/// Parses "var=a:b" (integer range) or "var=v1,v2,..." (rationals).
std::pair<std::string, std::vector<ExactRat>> parse_override(std::string_view text);

/// Right-hand side of the k-face count of the generalized hypercube:
/// sum_j C(n,k) C(k,j) (-1)^{k-j} (p-1)^j. Throws DomainError unless
/// 0 <= k <= n and p >= 1.
ExactInt face_count_claim(long n, long k, long p);

/// Describes the pass set of a grid in terms of single-variable conditions.
/// `passed[i]` belongs to `points[i]`.
std::string validity_summary(const Domain& domain, const std::vector<Point>& points,
                             const std::vector<bool>& passed);

std::string render_text(const AuditReport& report);
std::string render_json(const AuditReport& report);
std::string render_text(const AuditAllReport& report);
std::string render_json(const AuditAllReport& report);

}  // namespace powerexp
