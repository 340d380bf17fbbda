#include <gtest/gtest.h>

#include "gen.hpp"
#include "powerexp/triangle.hpp"

using namespace powerexp;
using powerexp::testing::Gen;

namespace {

std::vector<long> row_values(const TriangleKind& kind, long n) {
  std::vector<long> out;
  for (const auto& v : triangle_row(kind, n).entries) out.push_back(v.to_long());
  return out;
}

}  // namespace

TEST(UTriangle, FirstFiveRows) {
  TriangleKind u;
  EXPECT_EQ(row_values(u, 0), (std::vector<long>{1}));
  EXPECT_EQ(row_values(u, 1), (std::vector<long>{1, 1}));
  EXPECT_EQ(row_values(u, 2), (std::vector<long>{1, 7, 1}));
  EXPECT_EQ(row_values(u, 3), (std::vector<long>{1, 13, 13, 1}));
  EXPECT_EQ(row_values(u, 4), (std::vector<long>{1, 19, 25, 19, 1}));
}

TEST(UTriangle, RowTenPlotPoints) {
  EXPECT_EQ(row_values(TriangleKind{}, 10), (std::vector<long>{1, 55, 97, 127, 145, 151, 145, 127, 97, 55, 1}));
  EXPECT_EQ(u_coeff(10, 5), ExactInt(151));
}

TEST(UTriangle, RowSums) {
  for (long n = 0; n <= 200; ++n) {
    ExactInt cube = int_pow(n, 3);
    EXPECT_EQ(row_sum_u(n, RowRange::kExclLast), cube) << n;
    EXPECT_EQ(row_sum_u(n, RowRange::kExclFirst), cube) << n;
    EXPECT_EQ(row_sum_u(n, RowRange::kInclLast), cube + 1) << n;
  }
  EXPECT_THROW(row_sum_u(-1, RowRange::kExclLast), DomainError);
}

TEST(UTriangle, RecurrencesOnRandomIndices) {
  Gen g;
  for (int i = 0; i < 1000; ++i) {
    ExactInt n = g.big(20), k = g.big(20);
    EXPECT_EQ(2 * u_coeff(n, k), u_coeff(n + 1, k) + u_coeff(n - 1, k));
    EXPECT_EQ(2 * u_coeff(n, k), u_coeff(2 * n - k, k) + u_coeff(2 * n - k, 0));
    EXPECT_EQ(u_coeff(n, k), u_coeff(n, n - k));
    EXPECT_EQ(u_coeff(n, k), 6 * rascal_coeff(n, k) - 5);
  }
}

TEST(UTriangle, CentralPolygonalPointer) {
  for (long n = 0; n <= 300; ++n) {
    EXPECT_EQ(central_polygonal_pointer(n), int_pow(n + 1, 3) - int_pow(n, 3));
  }
  EXPECT_THROW(central_polygonal_pointer(-1), DomainError);
}

TEST(VTriangle, Definition) {
  EXPECT_EQ(v_coeff(2, 4, 2), ExactInt(21));
  EXPECT_EQ(v_coeff(2, 4, 0), ExactInt(1));
  EXPECT_EQ(v_coeff(2, 4, 4), ExactInt(1));
  EXPECT_EQ(v_coeff(0, 7, 3), ExactInt(1));
  EXPECT_THROW(v_coeff(-1, 4, 2), DomainError);
  EXPECT_THROW(v_coeff(1, 4, 5), DomainError);
  EXPECT_THROW(v_coeff(1, 4, -1), DomainError);
}

TEST(VTriangle, RowSumsArePowers) {
  for (long m = 0; m <= 5; ++m) {
    for (long n = 1; n <= 20; ++n) {
      ExactInt sum = 0;
      for (long k = 0; k < n; ++k) sum += v_coeff(m, n, k);
      EXPECT_EQ(sum, int_pow(n, m + 1)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(Triangles, ReducedVariants) {
  EXPECT_EQ(row_values(TriangleKind::parse("reduced-1"), 4), (std::vector<long>{1, 3, 9, 3, 1}));
  EXPECT_EQ(row_values(TriangleKind::parse("reduced-2"), 4), (std::vector<long>{1, -1, 5, -1, 1}));
  EXPECT_EQ(row_values(TriangleKind::parse("scaled-pascal"), 4), (std::vector<long>{1, 8, 24, 32, 16}));
  EXPECT_EQ(row_values(TriangleKind::parse("rascal"), 4), (std::vector<long>{1, 4, 5, 4, 1}));
  EXPECT_EQ(row_values(TriangleKind::parse("ones"), 3), (std::vector<long>{1, 1, 1, 1}));
  EXPECT_EQ(row_values(TriangleKind::parse("v:1"), 4), (std::vector<long>{1, 5, 5, 5, 1}));
}

TEST(Triangles, KindNamesRoundTrip) {
  for (std::string name : {"u", "pascal", "rascal", "scaled-pascal", "v:0", "v:3", "reduced-1", "reduced-2", "ones"}) {
    EXPECT_EQ(TriangleKind::parse(name).name(), name);
  }
  EXPECT_THROW(TriangleKind::parse("hex"), std::invalid_argument);
  EXPECT_THROW(TriangleKind::parse("v:-1"), std::invalid_argument);
  EXPECT_THROW(TriangleKind::parse("v:x"), std::invalid_argument);
}

TEST(Triangles, EntryBounds) {
  EXPECT_THROW(triangle_entry(TriangleKind{}, 3, 4), DomainError);
  EXPECT_THROW(triangle_entry(TriangleKind{}, -1, 0), DomainError);
  EXPECT_THROW(triangle_row(TriangleKind{}, -1), DomainError);
  EXPECT_THROW(triangle_rows(TriangleKind{}, -1), DomainError);
}

TEST(Triangles, ParallelRowsMatchSerial) {
  for (const char* name : {"u", "pascal", "v:2"}) {
    auto kind = TriangleKind::parse(name);
    auto serial = triangle_rows(kind, 60, 1);
    auto parallel = triangle_rows(kind, 60, 5);
    ASSERT_EQ(serial.size(), parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      EXPECT_EQ(serial[i].n, parallel[i].n);
      EXPECT_EQ(serial[i].entries, parallel[i].entries);
    }
    EXPECT_EQ(render_csv(serial), render_csv(parallel));
  }
}

TEST(Triangles, Symmetric) {
  for (const char* name : {"u", "pascal", "rascal", "v:3", "reduced-1", "reduced-2"}) {
    for (const auto& row : triangle_rows(TriangleKind::parse(name), 30)) {
      for (std::size_t k = 0; k < row.entries.size(); ++k) {
        EXPECT_EQ(row.entries[k], row.entries[row.entries.size() - 1 - k]) << name << " row " << row.n;
      }
    }
  }
}

TEST(ABCoefficients, ClosedFormsAndShift) {
  auto ab = ab_coefficients(3);
  EXPECT_EQ(ab.a0, ExactInt(18));
  EXPECT_EQ(ab.b0, ExactInt(27));
  EXPECT_EQ(ab.a1, ExactInt(36));
  EXPECT_EQ(ab.b1, ExactInt(81));
  for (long x = 1; x <= 200; ++x) {
    auto cur = ab_coefficients(x);
    EXPECT_EQ(cur.a0 * x - cur.b0, int_pow(x, 3));
    EXPECT_EQ(cur.a1 * x - cur.b1, int_pow(x, 3));
    EXPECT_EQ(ab_coefficients(x + 1).a0, cur.a1);
  }
  EXPECT_THROW(ab_coefficients(0), DomainError);
}

TEST(IterationSets, AllFormsGiveTheCube) {
  for (long x = 1; x <= 50; ++x) {
    ExactInt cube = int_pow(x, 3);
    EXPECT_EQ(iteration_set_sum(x, IterationSet::kA, SumForm::kTForm), cube);
    EXPECT_EQ(iteration_set_sum(x, IterationSet::kC, SumForm::kTForm), cube);
    for (auto set : {IterationSet::kA, IterationSet::kB, IterationSet::kC}) {
      EXPECT_EQ(iteration_set_sum(x, set, SumForm::kUForm), cube);
    }
  }
  EXPECT_THROW(iteration_set_sum(3, IterationSet::kB, SumForm::kTForm), DomainError);
  EXPECT_THROW(iteration_set_sum(0, IterationSet::kA, SumForm::kUForm), DomainError);
}

TEST(TriangleRender, CenteredText) {
  auto rows = triangle_rows(TriangleKind{}, 4);
  EXPECT_EQ(render_centered(rows), "     1\n    1 1\n   1 7 1\n 1 13 13 1\n1 19 25 19 1\n");
}

TEST(TriangleRender, CsvAndJson) {
  std::vector<TriangleRow> rows = {triangle_row(TriangleKind{}, 10)};
  std::string csv = render_csv(rows);
  EXPECT_EQ(csv.substr(0, 10), "n,k,value\n");
  EXPECT_NE(csv.find("10,5,151\n"), std::string::npos);
  auto two = triangle_rows(TriangleKind::parse("pascal"), 1);
  EXPECT_EQ(render_json(two), "{\"kind\":\"pascal\",\"rows\":[\n{\"n\":0,\"entries\":[\"1\"]},\n"
                              "{\"n\":1,\"entries\":[\"1\",\"1\"]}\n]}\n");
}
