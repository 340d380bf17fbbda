#include <gtest/gtest.h>

#include "gen.hpp"
#include "powerexp/findiff.hpp"

using namespace powerexp;
using powerexp::testing::Gen;

namespace {

std::vector<long> longs(const std::vector<ExactInt>& v) {
  std::vector<long> out;
  for (const auto& e : v) out.push_back(e.to_long());
  return out;
}

}  // namespace

TEST(DifferenceTable, CubesToThirdOrder) {
  auto t = difference_table(3, 10, 3);
  ASSERT_EQ(t.columns.size(), 4u);
  EXPECT_EQ(longs(t.columns[0]), (std::vector<long>{0, 1, 8, 27, 64, 125, 216, 343, 512, 729, 1000}));
  EXPECT_EQ(longs(t.columns[1]), (std::vector<long>{1, 7, 19, 37, 61, 91, 127, 169, 217, 271}));
  EXPECT_EQ(longs(t.columns[2]), (std::vector<long>{6, 12, 18, 24, 30, 36, 42, 48, 54}));
  EXPECT_EQ(longs(t.columns[3]), (std::vector<long>(8, 6)));
}

TEST(DifferenceTable, NthDifferenceIsFactorial) {
  for (long n = 1; n <= 9; ++n) {
    auto t = difference_table(n, n + 6, n);
    for (const auto& v : t.columns.back()) EXPECT_EQ(v, factorial(n)) << n;
    if (n + 1 <= n + 6) {
      auto deeper = difference_table(n, n + 6, n + 1);
      for (const auto& v : deeper.columns.back()) EXPECT_TRUE(v.is_zero());
    }
  }
}

TEST(DifferenceTable, Errors) {
  EXPECT_THROW(difference_table(0, 10, 3), DomainError);
  EXPECT_THROW(difference_table(3, 10, 0), DomainError);
  EXPECT_THROW(difference_table(3, 2, 3), DomainError);
}

TEST(DifferenceTable, Rendering) {
  auto t = difference_table(3, 10, 3);
  std::string csv = render_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "x,x^3,D(x^3),D^2(x^3),D^3(x^3)");
  EXPECT_NE(csv.find("\n3,27,37,24,6\n"), std::string::npos);
  EXPECT_NE(csv.find("\n10,1000,,,\n"), std::string::npos);
  std::string text = render_text(t);
  EXPECT_NE(text.find(" 3    27      37        24         6\n"), std::string::npos);
  EXPECT_NE(text.find("10  1000\n"), std::string::npos);
}

TEST(ForwardDiff, SequenceOrders) {
  std::vector<ExactRat> squares;
  for (long x = 0; x < 6; ++x) squares.emplace_back(x * x);
  auto first = forward_diff_seq(squares, 1);
  EXPECT_EQ(first.size(), 5u);
  EXPECT_EQ(first[2], ExactRat(5));
  auto second = forward_diff_seq(squares, 2);
  for (const auto& v : second) EXPECT_EQ(v, ExactRat(2));
  EXPECT_THROW(forward_diff_seq(squares, 0), DomainError);
  EXPECT_THROW(forward_diff_seq(squares, 6), DomainError);
}

TEST(ForwardDiff, BinomialFormOnRandomRationals) {
  Gen g;
  for (int i = 0; i < 300; ++i) {
    ExactRat x = g.small_rat(50), h = g.small_rat(50);
    long n = g.range(1, 12);
    EXPECT_EQ(binomial_diff(x, n, h), rat_pow(x + h, n) - rat_pow(x, n));
  }
  EXPECT_THROW(binomial_diff(ExactRat(1), 0, ExactRat(1)), DomainError);
}

TEST(Telescope, RecoversPower) {
  for (long x = 0; x <= 40; ++x) {
    for (long n = 1; n <= 8; ++n) {
      auto t = telescope_power(x, n);
      EXPECT_EQ(t.value, int_pow(x, n));
      EXPECT_EQ(t.terms.size(), static_cast<std::size_t>(x));
    }
  }
  EXPECT_EQ(longs(telescope_power(4, 3).terms), (std::vector<long>{1, 7, 19, 37}));
  EXPECT_THROW(telescope_power(-1, 2), DomainError);
  EXPECT_THROW(telescope_power(2, 0), DomainError);
}

TEST(GeometricSum, Values) {
  EXPECT_EQ(gsum(ExactInt(3), 3), ExactInt(13));
  EXPECT_EQ(gsum(ExactInt(4), 3), ExactInt(21));
  EXPECT_EQ(gsum(ExactInt(5), 0), ExactInt(0));
  EXPECT_EQ(gsum(ExactRat(ExactInt(1), ExactInt(2)), 3), ExactRat(ExactInt(7), ExactInt(4)));
  EXPECT_THROW(gsum(ExactInt(2), -1), DomainError);
  Gen g;
  for (int i = 0; i < 200; ++i) {
    ExactRat x = g.small_rat(30);
    long n = g.range(0, 15);
    EXPECT_EQ(ExactRat(1) + (x - 1) * gsum(x, n), rat_pow(x, n));
  }
}

TEST(VFirstDiff, WorkedExample) {
  EXPECT_EQ(v_first_diff(3, 3), ExactInt(37));
  EXPECT_EQ(ExactInt(3) * gsum(ExactInt(4), 3), ExactInt(63));
  EXPECT_EQ(ExactInt(2) * gsum(ExactInt(3), 3), ExactInt(26));
  for (long x = 1; x <= 30; ++x) {
    for (long n = 1; n <= 8; ++n) EXPECT_EQ(v_first_diff(x, n), int_pow(x + 1, n) - int_pow(x, n));
  }
  EXPECT_THROW(v_first_diff(0, 3), DomainError);
}

TEST(HexFootnote, CubeDifferences) {
  for (long n = 0; n <= 100; ++n) EXPECT_EQ(hex_footnote_check(n), int_pow(n + 1, 3) - int_pow(n, 3));
  EXPECT_THROW(hex_footnote_check(-1), DomainError);
}
