#include "powerexp/audit.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

namespace powerexp {

std::string to_string(AuditStatus status) {
  switch (status) {
    case AuditStatus::kVerifiedClaim: return "VERIFIED_CLAIM";
    case AuditStatus::kAuditedClaim: return "AUDITED_CLAIM";
    case AuditStatus::kNonEvaluable: return "NON_EVALUABLE";
  }
  return "?";
}

DomainVar DomainVar::range(std::string name, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range for " + name);
  DomainVar v{std::move(name), {}, {}};
  for (long i = lo; i <= hi; ++i) v.values.emplace_back(i);
  return v;
}

DomainVar DomainVar::list(std::string name, std::vector<ExactRat> values) {
  if (values.empty()) throw std::invalid_argument("empty value list for " + name);
  return DomainVar{std::move(name), std::move(values), {}};
}

std::string DomainVar::label(std::size_t i) const {
  return i < labels.size() ? labels[i] : values.at(i).str();
}

const ExactRat& Point::operator[](std::string_view name) const {
  std::size_t j = domain_->var_index(name);
  return domain_->vars()[j].values[index_[j]];
}

ExactInt Point::i(std::string_view name) const { return (*this)[name].to_integer(); }

long Point::l(std::string_view name) const { return i(name).to_long(); }

std::vector<std::pair<std::string, std::string>> Point::coords() const {
  std::vector<std::pair<std::string, std::string>> out;
  const auto& vars = domain_->vars();
  for (std::size_t j = 0; j < vars.size(); ++j) out.emplace_back(vars[j].name, vars[j].label(index_[j]));
  return out;
}

std::string Point::str() const {
  std::string out;
  for (const auto& [name, value] : coords()) {
    if (!out.empty()) out += ", ";
    out += name + "=" + value;
  }
  return out;
}

Domain::Domain(std::vector<DomainVar> vars, std::function<bool(const Point&)> constraint,
               std::string constraint_text)
    : vars_(std::move(vars)), constraint_(std::move(constraint)), constraint_text_(std::move(constraint_text)) {}

std::size_t Domain::var_index(std::string_view name) const {
  for (std::size_t j = 0; j < vars_.size(); ++j) {
    if (vars_[j].name == name) return j;
  }
  throw std::invalid_argument("no domain variable named '" + std::string(name) + "'");
}

std::vector<Point> Domain::points() const {
  std::vector<Point> out;
  if (vars_.empty()) return out;
  std::vector<std::size_t> idx(vars_.size(), 0);
  while (true) {
    Point p(*this, idx);
    if (!constraint_ || constraint_(p)) out.push_back(std::move(p));
    std::size_t j = vars_.size();
    while (j > 0) {
      --j;
      if (++idx[j] < vars_[j].values.size()) break;
      idx[j] = 0;
      if (j == 0) return out;
    }
  }
}

namespace {

std::string describe_var(const DomainVar& v) {
  bool contiguous = v.labels.empty() && v.values.size() > 2;
  for (std::size_t i = 0; contiguous && i < v.values.size(); ++i) {
    contiguous = v.values[i].is_integer() && v.values[i] == v.values.front() + ExactRat(static_cast<long>(i));
  }
  if (contiguous) return v.name + " in [" + v.values.front().str() + "," + v.values.back().str() + "]";
  std::string out = v.name + " in {";
  for (std::size_t i = 0; i < v.values.size(); ++i) out += (i ? "," : "") + v.label(i);
  return out + "}";
}

}  // namespace

std::string Domain::describe() const {
  std::string out;
  for (const auto& v : vars_) out += (out.empty() ? "" : ", ") + describe_var(v);
  if (!constraint_text_.empty()) out += "; " + constraint_text_;
  return out;
}

void Domain::replace(DomainVar var) {
  vars_[var_index(var.name)] = std::move(var);
}

int AuditReport::exit_status() const {
  return status == AuditStatus::kVerifiedClaim && !failures.empty() ? 2 : 0;
}

bool AuditAllReport::verified_ok() const {
  return std::all_of(reports.begin(), reports.end(), [](const AuditReport& r) { return r.exit_status() == 0; });
}

const IdentityRecord& find_record(std::string_view id) {
  for (const auto& r : registry()) {
    if (r.id == id) return r;
    for (const auto& alias : r.aliases) {
      if (alias == id) return r;
    }
  }
  throw std::invalid_argument("unknown identity id '" + std::string(id) + "'");
}

AuditReport audit(std::string_view id, const DomainOverrides& overrides, unsigned parallelism) {
  const IdentityRecord& record = find_record(id);
  if (record.status == AuditStatus::kNonEvaluable) {
    throw std::invalid_argument(record.id + " is NON_EVALUABLE: " + record.reason);
  }
  Domain domain = record.domain;
  for (const auto& [name, values] : overrides) {
    domain.var_index(name);
    domain.replace(DomainVar::list(name, values));
  }
  const std::vector<Point> points = domain.points();

  std::vector<std::optional<Failure>> results(points.size());
  auto evaluate = [&](std::size_t i) {
    const Point& p = points[i];
    ExactRat lhs = record.lhs(p);
    ExactRat rhs = record.rhs(p);
    ExactRat residual = lhs - rhs;
    std::optional<ExactRat> tol;
    if (record.tolerance) tol = record.tolerance(p);
    if (abs(residual) > tol.value_or(ExactRat(0))) {
      results[i] = Failure{p.coords(), std::move(lhs), std::move(rhs), std::move(residual), std::move(tol)};
    }
  };

  unsigned lanes = std::max(1u, std::min<unsigned>(parallelism, static_cast<unsigned>(points.size())));
  if (lanes == 1) {
    for (std::size_t i = 0; i < points.size(); ++i) evaluate(i);
  } else {
    std::vector<std::exception_ptr> errors(lanes);
    {
      std::vector<std::jthread> workers;
      for (unsigned lane = 0; lane < lanes; ++lane) {
        workers.emplace_back([&, lane] {
          try {
            for (std::size_t i = lane; i < points.size(); i += lanes) evaluate(i);
          } catch (...) {
            errors[lane] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  AuditReport report;
  report.id = record.id;
  report.citation = record.citation;
  report.status = record.status;
  report.domain = domain.describe();
  report.points_tested = static_cast<long>(points.size());
  std::vector<bool> passed(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    passed[i] = !results[i];
    if (results[i]) report.failures.push_back(std::move(*results[i]));
  }
  report.validity_summary = validity_summary(domain, points, passed);
  report.notes = record.notes;
  if (record.analysis) {
    for (auto& note : record.analysis()) report.notes.push_back(std::move(note));
  }
  return report;
}

AuditAllReport audit_all(unsigned parallelism) {
  AuditAllReport all;
  for (const auto& record : registry()) {
    if (record.status == AuditStatus::kNonEvaluable) {
      all.non_evaluable.push_back({record.id, record.citation, record.reason});
    } else {
      all.reports.push_back(audit(record.id, {}, parallelism));
    }
  }
  return all;
}

std::pair<std::string, std::vector<ExactRat>> parse_override(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 == text.size()) {
    throw std::invalid_argument("expected var=a:b or var=v1,v2,...: '" + std::string(text) + "'");
  }
  std::string name(text.substr(0, eq));
  std::string_view rest = text.substr(eq + 1);
  if (auto colon = rest.find(':'); colon != std::string_view::npos) {
    ExactInt lo = ExactInt::parse(rest.substr(0, colon));
    ExactInt hi = ExactInt::parse(rest.substr(colon + 1));
    if (hi < lo) throw std::invalid_argument("empty range in '" + std::string(text) + "'");
    if (hi - lo > ExactInt(100000)) throw std::invalid_argument("range too large in '" + std::string(text) + "'");
    std::vector<ExactRat> values;
    for (ExactInt v = lo; v <= hi; v += 1) values.emplace_back(v);
    return {name, values};
  }
  std::vector<ExactRat> values;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    values.push_back(ExactRat::parse(rest.substr(0, comma)));
    rest.remove_prefix(comma == std::string_view::npos ? rest.size() : comma + 1);
  }
  return {name, values};
}

ExactInt face_count_claim(long n, long k, long p) {
  if (n < 0 || k < 0 || k > n) throw DomainError("face count requires 0 <= k <= n");
  if (p < 1) throw DomainError("face count requires p >= 1");
  ExactInt sum = 0;
  for (long j = 0; j <= k; ++j) {
    ExactInt term = binomial(n, k) * binomial(k, j) * int_pow(p - 1, j);
    sum += (k - j) % 2 == 0 ? term : -term;
  }
  return sum;
}

}  // namespace powerexp
