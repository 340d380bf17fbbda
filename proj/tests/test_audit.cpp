#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "powerexp/audit.hpp"

using namespace powerexp;

namespace {

const Failure* failure_at(const AuditReport& r, std::vector<std::pair<std::string, std::string>> point) {
  for (const auto& f : r.failures) {
    if (f.point == point) return &f;
  }
  return nullptr;
}

bool has_note_containing(const AuditReport& r, std::string_view needle) {
  return std::any_of(r.notes.begin(), r.notes.end(),
                     [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

const AuditAllReport& all_reports() {
  static const AuditAllReport all = audit_all(2);
  return all;
}

}  // namespace

TEST(Registry, CoversEveryDisplay) {
  const std::set<std::string> expected = {
      "APP2",   "D2_3",   "D3_2",    "D3_3",    "E1_10",   "E1_11",  "E1_12",  "E1_14",    "E1_15",  "E1_16",
      "E1_2",   "E1_5",   "E1_7",    "E1_9",    "E2_10",   "E2_12",  "E2_13",  "E2_14",    "E2_15",  "E2_16",
      "E2_17",  "E2_18",  "E2_19",   "E2_21",   "E2_22",   "E2_23",  "E2_25",  "E2_26",    "E2_27",  "E2_28",
      "E2_29",  "E2_30",  "E2_6",    "E2_7",    "E3_10",   "E3_11",  "E3_12A", "E3_12B",   "E3_12C", "E3_12N",
      "E3_12P", "E3_12R", "E3_13",   "E3_14",   "E3_15",   "E3_16_17", "E3_18", "E3_19",   "E3_20",  "E3_21",
      "E3_5",   "E3_6",   "E3_7",    "E3_8",    "E3_9",    "E4_1",   "E4_2",   "E5_1",     "E5_10",  "E5_11",
      "E5_12",  "E5_2",   "E5_4",    "E5_5",    "E5_6",    "E5_7",   "E5_8",   "E5_9",     "FIG10",  "FIG2",
      "FIG3",   "FIG4",   "FIG5",    "FIG6",    "FIG7",    "FIG8",   "L1_4",   "P3_4_11",  "P3_4_12", "P3_4_2",
      "P3_4_3", "P3_4_5", "TAB1",    "TAB9",    "X2_29",   "X2_8",
  };
  std::set<std::string> actual;
  for (const auto& r : registry()) actual.insert(r.id);
  EXPECT_EQ(actual, expected);
  EXPECT_EQ(actual.size(), registry().size()) << "duplicate ids";
}

TEST(Registry, SortedAndWellFormed) {
  const auto& records = registry();
  EXPECT_TRUE(std::is_sorted(records.begin(), records.end(),
                             [](const IdentityRecord& a, const IdentityRecord& b) { return a.id < b.id; }));
  for (const auto& r : records) {
    EXPECT_FALSE(r.citation.empty()) << r.id;
    if (r.status == AuditStatus::kNonEvaluable) {
      EXPECT_FALSE(r.reason.empty()) << r.id;
      EXPECT_FALSE(r.lhs) << r.id;
    } else {
      EXPECT_TRUE(r.lhs && r.rhs) << r.id;
      EXPECT_FALSE(r.domain.points().empty()) << r.id;
    }
  }
  for (const auto& o : out_of_scope()) {
    EXPECT_FALSE(o.reason.empty());
    EXPECT_THROW(find_record(o.id), std::invalid_argument) << o.id;
  }
}

TEST(Registry, AliasesAndLookupErrors) {
  EXPECT_EQ(find_record("E3_16").id, "E3_16_17");
  EXPECT_EQ(find_record("E3_17").id, "E3_16_17");
  EXPECT_THROW(find_record("E9_99"), std::invalid_argument);
  EXPECT_THROW(audit("E4_1"), std::invalid_argument);
  EXPECT_THROW(audit("E3_16"), std::invalid_argument);
  EXPECT_THROW(audit("E3_14", {{"q", {ExactRat(1)}}}), std::invalid_argument);
}

TEST(AuditFindings, E3_14) {
  auto r = audit("E3_14");
  EXPECT_EQ(r.points_tested, 19 * 8);
  const Failure* f = failure_at(r, {{"x", "3"}, {"n", "4"}});
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->lhs, ExactRat(80));
  EXPECT_EQ(f->rhs, ExactRat(79));
  EXPECT_EQ(f->residual, ExactRat(1));
  EXPECT_EQ(r.validity_summary, "holds iff n=3 or x=2 (on tested grid)");
  EXPECT_EQ(r.failures.size(), 126u);
  EXPECT_EQ(r.exit_status(), 0);
}

TEST(AuditFindings, E2_22) {
  auto r = audit("E2_22");
  std::vector<std::string> residuals;
  for (long x = 2; x <= 4; ++x) residuals.push_back(failure_at(r, {{"x", std::to_string(x)}})->residual.str());
  EXPECT_EQ(residuals, (std::vector<std::string>{"-4", "-20", "-56"}));
  EXPECT_EQ(failure_at(r, {{"x", "1"}}), nullptr);
  EXPECT_EQ(r.validity_summary, "holds iff x=1 (on tested grid)");
}

TEST(AuditFindings, E2_19) {
  auto r = audit("E2_19");
  const Failure* f = failure_at(r, {{"x", "3"}, {"n", "2"}, {"m", "1"}});
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->lhs, ExactRat(27));
  EXPECT_EQ(f->rhs, ExactRat(18));
  EXPECT_EQ(f->residual, ExactRat(9));
  EXPECT_EQ(r.validity_summary, "holds iff x=2 (on tested grid)");
}

TEST(AuditFindings, E5_11) {
  auto r = audit("E5_11");
  const Failure* f = failure_at(r, {{"n", "3"}, {"k", "1"}, {"p", "2"}});
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->lhs, ExactRat(0));
  EXPECT_EQ(f->rhs, ExactRat(12));
  EXPECT_TRUE(has_note_containing(r, "claim equals C(n,k)(p-2)^k"));
}

TEST(AuditFindings, TableNineErratum) {
  auto r = audit("TAB9");
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].point, (std::vector<std::pair<std::string, std::string>>{{"x", "3"}, {"pair", "0"}}));
  EXPECT_EQ(r.failures[0].residual, ExactRat(2));
  EXPECT_TRUE(has_note_containing(r, "B_0(3) is printed as 25"));
  EXPECT_EQ(r.validity_summary, "fails only at (x=3, pair=0) (on tested grid)");
}

TEST(AuditFindings, ExpSeriesTruncated) {
  auto r = audit("E4_2");
  for (const auto& f : r.failures) EXPECT_NE(f.point[0].second, "2");
  EXPECT_EQ(r.failures.size(), 8u);
  const Failure* f = failure_at(r, {{"x", "3"}, {"offset", "0"}});
  ASSERT_NE(f, nullptr);
  EXPECT_EQ(f->residual.str(), "-118476494704455156683/1124000727777607680000");
  ASSERT_TRUE(f->tolerance);
  EXPECT_EQ(f->tolerance->str(), "4782969/574620602716160000");
  EXPECT_EQ(r.validity_summary, "holds iff x=2 (on tested grid)");
}

TEST(AuditFindings, DerivativeLimit) {
  auto r = audit("E2_30", {{"x", {ExactRat(2)}}, {"n", {ExactRat(2)}}});
  ASSERT_EQ(r.failures.size(), 8u);
  for (const auto& f : r.failures) {
    EXPECT_EQ(f.lhs, ExactRat(5));
    EXPECT_EQ(f.rhs, ExactRat(4));
  }
  EXPECT_TRUE(has_note_containing(r, "limit mismatch at (x=2, n=2): quotient -> 5, n*x^(n-1) = 4, mismatch 1"));
}

TEST(AuditFindings, ReadingsAndErrata) {
  EXPECT_EQ(audit("L1_4").validity_summary, "holds iff h=1 (on tested grid)");
  EXPECT_EQ(audit("E3_11").validity_summary, "holds iff n=0 (on tested grid)");
  EXPECT_EQ(audit("E3_12C").validity_summary, "fails on all 108 tested points");
  EXPECT_TRUE(audit("E3_13").ok());
  auto fig8 = audit("FIG8");
  EXPECT_EQ(fig8.failures.size(), 6u);
  EXPECT_TRUE(has_note_containing(fig8, "V_1(n,k)"));
  auto e315 = audit("E3_15", {{"variant", {ExactRat(3)}}});
  EXPECT_EQ(e315.validity_summary, "fails on all 54 tested points");
  for (const auto& f : e315.failures) {
    long x = std::stol(f.point[1].second), n = std::stol(f.point[2].second);
    ExactInt tail = 0;
    for (long t = 4; t <= n; ++t) tail += int_pow(x, n - t);
    EXPECT_EQ(f.residual, -ExactRat(1 + tail));
  }
  for (long v : {1, 2, 4}) {
    EXPECT_EQ(audit("E3_15", {{"variant", {ExactRat(v)}}}).validity_summary,
              "holds iff n=3 or x=2 (on tested grid)")
        << v;
  }
}

TEST(AuditAll, VerifiedClaimsGreen) {
  const auto& all = all_reports();
  EXPECT_TRUE(all.verified_ok());
  EXPECT_EQ(all.exit_status(), 0);
  for (const auto& r : all.reports) {
    if (r.status == AuditStatus::kVerifiedClaim) EXPECT_TRUE(r.ok()) << r.id << ": " << r.validity_summary;
  }
  std::vector<std::string> ne;
  for (const auto& e : all.non_evaluable) ne.push_back(e.id);
  EXPECT_EQ(ne, (std::vector<std::string>{"E3_16_17", "E4_1", "E5_12"}));
}

TEST(AuditAll, ResidualsAreExact) {
  for (const auto& r : all_reports().reports) {
    for (const auto& f : r.failures) {
      EXPECT_EQ(f.residual, f.lhs - f.rhs) << r.id;
      EXPECT_GT(abs(f.residual), f.tolerance.value_or(ExactRat(0))) << r.id;
    }
  }
}

TEST(AuditAll, DeterministicAcrossParallelism) {
  AuditAllReport serial = audit_all(1);
  EXPECT_EQ(render_json(serial), render_json(all_reports()));
  EXPECT_EQ(render_text(serial), render_text(audit_all(7)));
  EXPECT_EQ(render_json(audit("E3_10", {}, 1)), render_json(audit("E3_10", {}, 8)));
}

TEST(AuditOverrides, ParseForms) {
  auto [name, values] = parse_override("x=2:5");
  EXPECT_EQ(name, "x");
  EXPECT_EQ(values, (std::vector<ExactRat>{2, 3, 4, 5}));
  auto [h, hs] = parse_override("h=1/2,-3,7/4");
  EXPECT_EQ(h, "h");
  EXPECT_EQ(hs, (std::vector<ExactRat>{ExactRat(ExactInt(1), ExactInt(2)), -3, ExactRat(ExactInt(7), ExactInt(4))}));
  for (const char* bad : {"x", "=3", "x=", "x=5:2", "x=a:b", "x=1/0", "x=0:1000000"}) {
    EXPECT_ANY_THROW(parse_override(bad)) << bad;
  }
}

TEST(AuditOverrides, NarrowsTheGrid) {
  auto r = audit("E3_14", {{"x", {ExactRat(3)}}, {"n", {ExactRat(4)}}});
  EXPECT_EQ(r.points_tested, 1);
  EXPECT_EQ(r.domain, "x in {3}, n in {4}");
  ASSERT_EQ(r.failures.size(), 1u);
  EXPECT_EQ(r.failures[0].residual, ExactRat(1));
}

TEST(FaceCount, ClosedForm) {
  for (long n = 0; n <= 8; ++n) {
    for (long k = 0; k <= n; ++k) {
      for (long p = 1; p <= 6; ++p) EXPECT_EQ(face_count_claim(n, k, p), binomial(n, k) * int_pow(p - 2, k));
    }
  }
  EXPECT_THROW(face_count_claim(2, 3, 2), DomainError);
  EXPECT_THROW(face_count_claim(2, 1, 0), DomainError);
}

TEST(ValiditySummary, SyntheticGrids) {
  Domain d({DomainVar::range("a", 0, 3), DomainVar::range("b", 0, 3)});
  auto points = d.points();
  auto summary = [&](auto pred) {
    std::vector<bool> passed;
    for (const auto& p : points) passed.push_back(pred(p.l("a"), p.l("b")));
    return validity_summary(d, points, passed);
  };
  EXPECT_EQ(summary([](long, long) { return true; }), "holds on all 16 tested points");
  EXPECT_EQ(summary([](long, long) { return false; }), "fails on all 16 tested points");
  EXPECT_EQ(summary([](long a, long) { return a == 1; }), "holds iff a=1 (on tested grid)");
  EXPECT_EQ(summary([](long a, long b) { return a == 0 || b >= 2; }), "holds iff b in [2,3] or a=0 (on tested grid)");
  EXPECT_EQ(summary([](long a, long b) { return !(a == 2 && b == 1); }), "fails only at (a=2, b=1) (on tested grid)");
  EXPECT_EQ(summary([](long a, long b) { return a == b && a < 2; }), "holds only at (a=0, b=0), (a=1, b=1) (on tested grid)");
  EXPECT_EQ(summary([](long a, long b) { return (a + b) % 2 == 0; }), "holds at 8 of 16 tested points (on tested grid)");
  EXPECT_EQ(validity_summary(d, {}, {}), "no points tested");
}

TEST(ValiditySummary, ConstrainedGridsAndLabels) {
  Domain d({DomainVar::range("n", 0, 4), DomainVar::range("k", 0, 4)},
           [](const Point& p) { return p.l("k") <= p.l("n"); });
  auto points = d.points();
  EXPECT_EQ(points.size(), 15u);
  std::vector<bool> passed;
  for (const auto& p : points) passed.push_back(p.l("n") >= 3);
  EXPECT_EQ(validity_summary(d, points, passed), "holds iff n in [3,4] (on tested grid)");

  DomainVar set = DomainVar::list("set", {ExactRat(0), ExactRat(1)});
  set.labels = {"A", "B"};
  Domain labelled({set, DomainVar::range("x", 1, 3)});
  auto lp = labelled.points();
  std::vector<bool> lpass;
  for (const auto& p : lp) lpass.push_back(p.l("set") == 1);
  EXPECT_EQ(validity_summary(labelled, lp, lpass), "holds iff set=B (on tested grid)");
  EXPECT_EQ(labelled.describe(), "set in {A,B}, x in [1,3]");
}

TEST(AuditRender, TextAndJsonShape) {
  auto r = audit("E3_14");
  std::string text = render_text(r);
  EXPECT_EQ(text.substr(0, text.find('\n')), "== E3_14 [AUDITED_CLAIM]");
  EXPECT_NE(text.find("  x=3, n=4: lhs 80, rhs 79, residual 1\n"), std::string::npos);
  EXPECT_NE(text.find("  ... 114 more\n"), std::string::npos);
  std::string json = render_json(r);
  EXPECT_NE(json.find("\"status\": \"AUDITED_CLAIM\""), std::string::npos);
  EXPECT_NE(json.find("\"residual\": \"1\""), std::string::npos);
  std::string all = render_text(all_reports());
  EXPECT_NE(all.find("== non-evaluable\n  E3_16_17:"), std::string::npos);
  EXPECT_NE(all.find("verified claims: all passed\n"), std::string::npos);
}
