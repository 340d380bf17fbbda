#include "cli.hpp"

#include <ostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "powerexp/audit.hpp"
#include "powerexp/exp_series.hpp"
#include "powerexp/expand.hpp"
#include "powerexp/findiff.hpp"
#include "powerexp/oeis.hpp"
#include "powerexp/triangle.hpp"

namespace powerexp::cli {

namespace {

struct Options {
  bool offline = false;
  std::string cache_dir;

  std::string triangle_kind;
  long rows = 4;
  long row = -1;
  unsigned jobs = 1;
  std::string format = "text";

  std::string x;
  long n = 0;
  std::string strategy = "telescope-geom";
  bool with_terms = false;

  long xmax = 10;
  long depth = 1;

  std::string id;
  std::vector<std::string> ranges;

  long digits = -1;
  long terms = -1;

  std::string oeis_action;
  long count = -1;
  std::string mode;
};

FetchMode parse_mode(const std::string& mode) {
  if (mode == "offline") return FetchMode::kOffline;
  if (mode == "cached") return FetchMode::kCached;
  if (mode == "refresh") return FetchMode::kRefresh;
  throw std::invalid_argument("unknown fetch mode '" + mode + "'");
}

OeisConfig oeis_config(const Options& o) {
  OeisConfig config = OeisConfig::from_environment();
  if (!o.cache_dir.empty()) config.cache_dir = o.cache_dir;
  if (o.offline) config.offline_only = true;
  return config;
}

int run_triangle(const Options& o, std::ostream& out) {
  TriangleKind kind = TriangleKind::parse(o.triangle_kind);
  std::vector<TriangleRow> rows;
  if (o.row >= 0) {
    rows.push_back(triangle_row(kind, o.row));
  } else {
    rows = triangle_rows(kind, o.rows, o.jobs);
  }
  if (o.format == "csv") {
    out << render_csv(rows);
  } else if (o.format == "json") {
    out << render_json(rows);
  } else {
    out << render_centered(rows);
  }
  return kExitOk;
}

int run_expand(const Options& o, std::ostream& out) {
  ExpansionResult r = expand_power(ExactInt::parse(o.x), o.n, Strategy::parse(o.strategy));
  out << (o.format == "json" ? render_json(r, o.with_terms) : render_text(r, o.with_terms));
  return kExitOk;
}

int run_difftable(const Options& o, std::ostream& out) {
  DifferenceTable t = difference_table(o.n, o.xmax, o.depth);
  if (o.format == "csv") {
    out << render_csv(t);
  } else if (o.format == "json") {
    out << render_json(t);
  } else {
    out << render_text(t);
  }
  return kExitOk;
}

int run_audit(const Options& o, std::ostream& out) {
  if (o.id.empty()) {
    if (!o.ranges.empty()) throw std::invalid_argument("--range needs --id");
    AuditAllReport all = audit_all(o.jobs);
    out << (o.format == "json" ? render_json(all) : render_text(all));
    return all.exit_status() == 0 ? kExitOk : kExitClaimFailed;
  }
  DomainOverrides overrides;
  for (const auto& spec : o.ranges) {
    auto [name, values] = parse_override(spec);
    overrides[name] = std::move(values);
  }
  AuditReport r = audit(o.id, overrides, o.jobs);
  out << (o.format == "json" ? render_json(r) : render_text(r));
  return r.exit_status() == 0 ? kExitOk : kExitClaimFailed;
}

int run_exp(const Options& o, std::ostream& out) {
  ExactInt x = ExactInt::parse(o.x);
  long digits = o.digits > 0 ? o.digits : 20;
  long terms = o.terms >= 0 ? o.terms : exp_convergence_report(x, digits);
  ExpPartial p = exp_partial(x, terms, Strategy::parse(o.strategy));
  out << (o.format == "json" ? render_json(p, static_cast<int>(digits)) : render_text(p, static_cast<int>(digits)));
  return kExitOk;
}

int run_oeis(const Options& o, std::ostream& out) {
  const OeisConfig config = oeis_config(o);
  if (o.oeis_action == "gen") {
    long count = o.count > 0 ? o.count : 20;
    BFile b;
    b.sequence_id = o.id;
    b.offset = sequence_offset(o.id);
    auto terms = generate(o.id, count);
    for (long i = 0; i < count; ++i) b.entries.push_back({b.offset + i, terms[static_cast<std::size_t>(i)]});
    out << serialize_bfile(b);
    return kExitOk;
  }
  if (o.oeis_action == "fetch") {
    BFile b = fetch_bfile(o.id, parse_mode(o.mode.empty() ? "cached" : o.mode), config);
    if (o.format == "json") {
      nlohmann::ordered_json j = {
          {"sequence_id", b.sequence_id}, {"terms", b.entries.size()}, {"source", to_string(b.source)}};
      out << j.dump(2) << "\n";
    } else {
      out << b.sequence_id << ": " << b.entries.size() << " terms (" << to_string(b.source) << ")\n";
    }
    return kExitOk;
  }
  BFile b = fetch_bfile(o.id, parse_mode(o.mode.empty() ? "offline" : o.mode), config);
  long count = o.count > 0 ? o.count : static_cast<long>(b.entries.size());
  CompareReport r = compare_with(b, count);
  out << (o.format == "json" ? render_json(r) : render_text(r));
  return r.ok() ? kExitOk : kExitClaimFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact power expansions, cube-difference triangles and identity audits", "powerexp"};
  app.require_subcommand(1);
  app.add_flag("--offline", o.offline, "Refuse any network access");
  app.add_option("--cache-dir", o.cache_dir, "b-file cache directory (default: POWEREXP_CACHE_DIR or ~/.cache)");

  const auto text_csv_json = CLI::IsMember({"text", "csv", "json"});
  const auto text_json = CLI::IsMember({"text", "json"});
  const unsigned max_jobs = std::max(1u, std::thread::hardware_concurrency());

  auto* triangle = app.add_subcommand("triangle", "Print rows of a coefficient triangle");
  triangle->add_option("kind", o.triangle_kind, "u, pascal, rascal, scaled-pascal, v:M, reduced-1, reduced-2, ones")
      ->required();
  triangle->add_option("--rows", o.rows, "Print rows 0..N")->check(CLI::NonNegativeNumber);
  triangle->add_option("--row", o.row, "Print only row N")->check(CLI::NonNegativeNumber);
  triangle->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, max_jobs * 4));
  triangle->add_option("--format", o.format)->check(text_csv_json);

  auto* expand = app.add_subcommand("expand", "Expand x^n with one strategy");
  expand->add_option("--x", o.x)->required();
  expand->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  expand->add_option("--strategy", o.strategy)->required();
  expand->add_flag("--terms", o.with_terms, "Also print the summands");
  expand->add_option("--format", o.format)->check(text_json);

  auto* difftable = app.add_subcommand("difftable", "Forward-difference table of x^n");
  difftable->add_option("--n", o.n)->required();
  difftable->add_option("--xmax", o.xmax)->required();
  difftable->add_option("--depth", o.depth)->required();
  difftable->add_option("--format", o.format)->check(text_csv_json);

  auto* audit_cmd = app.add_subcommand("audit", "Audit one identity, or all of them");
  audit_cmd->add_option("--id", o.id);
  audit_cmd->add_option("--range", o.ranges, "Override a domain variable: var=a:b or var=v1,v2");
  audit_cmd->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1u, max_jobs * 4));
  audit_cmd->add_option("--format", o.format)->check(text_json);

  auto* exp = app.add_subcommand("exp", "Exact partial sum of e^x");
  exp->add_option("--x", o.x)->required();
  auto* digits = exp->add_option("--digits", o.digits, "Sum until the tail bound is below 10^-D")
                     ->check(CLI::Range(1L, 100000L));
  exp->add_option("--terms", o.terms, "Sum n = 0..N")->check(CLI::NonNegativeNumber)->excludes(digits);
  exp->add_option("--strategy", o.strategy);
  exp->add_option("--format", o.format)->check(text_json);

  auto* oeis = app.add_subcommand("oeis", "Generate, fetch or check OEIS sequences");
  oeis->add_option("action", o.oeis_action)->required()->check(CLI::IsMember({"check", "fetch", "gen"}));
  oeis->add_option("--id", o.id)->required();
  oeis->add_option("--count", o.count)->check(CLI::PositiveNumber);
  oeis->add_option("--mode", o.mode)->check(CLI::IsMember({"offline", "cached", "refresh"}));
  oeis->add_option("--format", o.format)->check(text_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*triangle) return run_triangle(o, out);
    if (*expand) return run_expand(o, out);
    if (*difftable) return run_difftable(o, out);
    if (*audit_cmd) return run_audit(o, out);
    if (*exp) return run_exp(o, out);
    return run_oeis(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace powerexp::cli
