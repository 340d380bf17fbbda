#include <algorithm>

#include <json.hpp>

#include "powerexp/audit.hpp"
#include "powerexp/exp_series.hpp"
#include "powerexp/expand.hpp"
#include "powerexp/findiff.hpp"
#include "powerexp/oeis.hpp"
#include "powerexp/triangle.hpp"

namespace powerexp {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kTextFailureLimit = 12;

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <typename T>
std::vector<std::string> strs(const std::vector<T>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

std::string column_header(long n, long d) {
  std::string f = "x^" + std::to_string(n);
  if (d == 0) return f;
  if (d == 1) return "D(" + f + ")";
  return "D^" + std::to_string(d) + "(" + f + ")";
}

// Cell (x, d) of a difference table, empty past the column's end.
std::string table_cell(const DifferenceTable& t, long x, long d) {
  const auto& col = t.columns[static_cast<std::size_t>(d)];
  return x < static_cast<long>(col.size()) ? col[static_cast<std::size_t>(x)].str() : std::string();
}

std::string direction_word(int direction) {
  if (direction > 0) return "truncated, true value larger";
  if (direction < 0) return "truncated, true value smaller";
  return "exact";
}

Json report_json(const AuditReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json point = Json::object();
    for (const auto& [name, value] : f.point) point[name] = value;
    Json entry = {{"point", point}, {"lhs", f.lhs.str()}, {"rhs", f.rhs.str()}, {"residual", f.residual.str()}};
    if (f.tolerance) entry["tolerance"] = f.tolerance->str();
    failures.push_back(std::move(entry));
  }
  return Json{{"id", r.id},
              {"citation", r.citation},
              {"status", to_string(r.status)},
              {"domain", r.domain},
              {"points_tested", r.points_tested},
              {"failure_count", r.failures.size()},
              {"failures", std::move(failures)},
              {"validity_summary", r.validity_summary},
              {"notes", r.notes}};
}

}  // namespace

std::string render_centered(std::span<const TriangleRow> rows) {
  std::vector<std::string> lines;
  std::size_t width = 0;
  for (const auto& row : rows) {
    lines.push_back(join(strs(row.entries), " "));
    width = std::max(width, lines.back().size());
  }
  std::string out;
  for (const auto& line : lines) out += std::string((width - line.size()) / 2, ' ') + line + "\n";
  return out;
}

std::string render_csv(std::span<const TriangleRow> rows) {
  std::string out = "n,k,value\n";
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.entries.size(); ++k) {
      out += std::to_string(row.n) + "," + std::to_string(k) + "," + row.entries[k].str() + "\n";
    }
  }
  return out;
}

std::string render_json(std::span<const TriangleRow> rows) {
  std::string kind = rows.empty() ? std::string() : rows.front().kind.name();
  std::string out = "{\"kind\":" + Json(kind).dump() + ",\"rows\":[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json row = {{"n", rows[i].n}, {"entries", strs(rows[i].entries)}};
    out += row.dump() + (i + 1 < rows.size() ? ",\n" : "\n");
  }
  return out + "]}\n";
}

std::string render_text(const DifferenceTable& t) {
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header = {"x"};
  for (long d = 0; d <= t.depth; ++d) header.push_back(column_header(t.n, d));
  grid.push_back(header);
  for (long x = 0; x <= t.x_max; ++x) {
    std::vector<std::string> line = {std::to_string(x)};
    for (long d = 0; d <= t.depth; ++d) line.push_back(table_cell(t, x, d));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], line[c].size());
  }
  std::string out;
  for (const auto& line : grid) {
    std::string text;
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c) text += "  ";
      text += std::string(widths[c] - line[c].size(), ' ') + line[c];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out += text + "\n";
  }
  return out;
}

std::string render_csv(const DifferenceTable& t) {
  std::vector<std::string> header = {"x"};
  for (long d = 0; d <= t.depth; ++d) header.push_back(column_header(t.n, d));
  std::string out = join(header, ",") + "\n";
  for (long x = 0; x <= t.x_max; ++x) {
    std::vector<std::string> line = {std::to_string(x)};
    for (long d = 0; d <= t.depth; ++d) line.push_back(table_cell(t, x, d));
    out += join(line, ",") + "\n";
  }
  return out;
}

std::string render_json(const DifferenceTable& t) {
  Json columns = Json::array();
  for (const auto& col : t.columns) columns.push_back(strs(col));
  Json j = {{"n", t.n}, {"x_max", t.x_max}, {"depth", t.depth}, {"columns", std::move(columns)}};
  return j.dump(2) + "\n";
}

std::string render_text(const ExpansionResult& r, bool with_terms) {
  std::string out = "x = " + r.x.str() + "\n";
  out += "n = " + std::to_string(r.n) + "\n";
  out += "strategy = " + r.strategy.name() + "\n";
  out += "value = " + r.value.str() + "\n";
  if (with_terms) out += "terms = " + join(strs(r.terms), ",") + "\n";
  return out;
}

std::string render_json(const ExpansionResult& r, bool with_terms) {
  Json j = {{"x", r.x.str()}, {"n", r.n}, {"strategy", r.strategy.name()}, {"value", r.value.str()}};
  if (with_terms) j["terms"] = strs(r.terms);
  return j.dump(2) + "\n";
}

std::string render_text(const ExpPartial& p, int digits) {
  TruncatedDecimal value = truncate_decimal(p.value, digits);
  TruncatedDecimal bound = truncate_decimal(p.tail_bound, digits);
  std::string out = "x = " + p.x.str() + "\n";
  out += "terms = " + std::to_string(p.terms_used) + "\n";
  out += "strategy = " + p.strategy.name() + "\n";
  out += "value = " + p.value.str() + "\n";
  out += "decimal = " + value.text + " (" + direction_word(value.direction) + ")\n";
  out += "tail_bound = " + p.tail_bound.str() + "\n";
  out += "tail_bound_decimal = " + bound.text + " (" + direction_word(bound.direction) + ")\n";
  return out;
}

std::string render_json(const ExpPartial& p, int digits) {
  TruncatedDecimal value = truncate_decimal(p.value, digits);
  Json j = {{"x", p.x.str()},
            {"terms", p.terms_used},
            {"strategy", p.strategy.name()},
            {"value", p.value.str()},
            {"digits", digits},
            {"decimal", value.text},
            {"decimal_direction", value.direction},
            {"tail_bound", p.tail_bound.str()}};
  return j.dump(2) + "\n";
}

std::string render_text(const CompareReport& r) {
  std::string out = r.sequence_id + ": " + std::to_string(r.terms_compared) + " terms compared, ";
  if (r.ok()) return out + "ok\n";
  const Mismatch& m = *r.first_mismatch;
  return out + "first mismatch at index " + std::to_string(m.index) + ": b-file " + m.expected.str() +
         ", generated " + m.actual.str() + "\n";
}

std::string render_json(const CompareReport& r) {
  Json mismatch = nullptr;
  if (r.first_mismatch) {
    mismatch = {{"index", r.first_mismatch->index},
                {"expected", r.first_mismatch->expected.str()},
                {"actual", r.first_mismatch->actual.str()}};
  }
  Json j = {{"sequence_id", r.sequence_id},
            {"terms_compared", r.terms_compared},
            {"ok", r.ok()},
            {"first_mismatch", std::move(mismatch)}};
  return j.dump(2) + "\n";
}

std::string render_text(const AuditReport& r) {
  std::string out = "== " + r.id + " [" + to_string(r.status) + "]\n";
  out += "ref: " + r.citation + "\n";
  out += "domain: " + r.domain + " (" + std::to_string(r.points_tested) + (r.points_tested == 1 ? " point)\n" : " points)\n");
  out += "failures: " + std::to_string(r.failures.size()) + "\n";
  std::size_t shown = std::min(r.failures.size(), kTextFailureLimit);
  for (std::size_t i = 0; i < shown; ++i) {
    const Failure& f = r.failures[i];
    std::vector<std::string> coords;
    for (const auto& [name, value] : f.point) coords.push_back(name + "=" + value);
    out += "  " + join(coords, ", ") + ": lhs " + f.lhs.str() + ", rhs " + f.rhs.str() + ", residual " +
           f.residual.str();
    if (f.tolerance) out += ", tolerance " + f.tolerance->str();
    out += "\n";
  }
  if (r.failures.size() > shown) out += "  ... " + std::to_string(r.failures.size() - shown) + " more\n";
  out += "summary: " + r.validity_summary + "\n";
  for (const auto& note : r.notes) out += "note: " + note + "\n";
  return out;
}

std::string render_json(const AuditReport& r) { return report_json(r).dump(2) + "\n"; }

std::string render_text(const AuditAllReport& all) {
  std::string out;
  std::vector<std::string> failing;
  for (const auto& r : all.reports) {
    out += render_text(r) + "\n";
    if (r.exit_status() != 0) failing.push_back(r.id);
  }
  out += "== non-evaluable\n";
  for (const auto& e : all.non_evaluable) out += "  " + e.id + ": " + e.citation + " (" + e.reason + ")\n";
  out += "== out of scope\n";
  for (const auto& e : out_of_scope()) out += "  " + e.id + ": " + e.citation + " (" + e.reason + ")\n";
  out += "\n";
  out += failing.empty() ? std::string("verified claims: all passed\n")
                         : "verified claims failing: " + join(failing, ", ") + "\n";
  return out;
}

std::string render_json(const AuditAllReport& all) {
  Json reports = Json::array();
  for (const auto& r : all.reports) reports.push_back(report_json(r));
  auto listing = [](const std::vector<OutOfScope>& entries) {
    Json out = Json::array();
    for (const auto& e : entries) out.push_back({{"id", e.id}, {"citation", e.citation}, {"reason", e.reason}});
    return out;
  };
  Json j = {{"verified_ok", all.verified_ok()},
            {"reports", std::move(reports)},
            {"non_evaluable", listing(all.non_evaluable)},
            {"out_of_scope", listing(out_of_scope())}};
  return j.dump(2) + "\n";
}

}  // namespace powerexp
