#include <gtest/gtest.h>

#include "powerexp/expand.hpp"

using namespace powerexp;

TEST(Expand, WorkedExampleVRow) {
  auto r = expand_power(4, 3, Strategy{StrategyTag::kVRow});
  EXPECT_EQ(r.value, ExactInt(64));
  EXPECT_EQ(r.terms, (std::vector<ExactRat>{1, 21, 21, 21}));
}

TEST(Expand, AllStrategiesAgreeWithPower) {
  for (const auto& s : evaluable_strategies()) {
    for (long x = 1; x <= 15; ++x) {
      for (long n = 0; n <= 9; ++n) {
        EXPECT_EQ(expand_power(x, n, s).value, int_pow(x, n)) << s.name() << " x=" << x << " n=" << n;
      }
    }
  }
  EXPECT_EQ(evaluable_strategies().size(), 8u);
}

TEST(Expand, GenBinomialDepthIndependent) {
  for (long j = 1; j <= 5; ++j) {
    for (auto pair : {ABPair::kZero, ABPair::kOne}) {
      for (long x = 1; x <= 8; ++x) {
        for (long n = 0; n <= 10; ++n) {
          auto r = expand_power(x, n, Strategy::gen_binomial(j, pair));
          EXPECT_EQ(r.value, int_pow(x, n));
          EXPECT_EQ(r.terms.size(), static_cast<std::size_t>(j + 1));
        }
      }
    }
  }
}

TEST(Expand, DomainErrors) {
  EXPECT_THROW(expand_power(0, 3, Strategy{StrategyTag::kURow}), DomainError);
  EXPECT_THROW(expand_power(0, 3, Strategy::gen_binomial(2)), DomainError);
  EXPECT_THROW(expand_power(0, 0, Strategy{StrategyTag::kVRow}), DomainError);
  EXPECT_THROW(expand_power(-1, 2, Strategy{StrategyTag::kTelescopeGeom}), DomainError);
  EXPECT_THROW(expand_power(2, -1, Strategy{StrategyTag::kTelescopeGeom}), DomainError);
  EXPECT_EQ(expand_power(0, 0, Strategy{StrategyTag::kTelescopeGeom}).value, ExactInt(1));
  EXPECT_EQ(expand_power(0, 0, Strategy{StrategyTag::kBinomialDiffSum}).value, ExactInt(1));
  EXPECT_EQ(expand_power(0, 3, Strategy{StrategyTag::kDoubleBinomial}).value, ExactInt(0));
  EXPECT_THROW(Strategy::gen_binomial(0), DomainError);
}

TEST(Expand, StrategyNamesRoundTrip) {
  for (const auto& s : evaluable_strategies()) EXPECT_EQ(Strategy::parse(s.name()), s);
  EXPECT_EQ(Strategy::parse("gen-binomial"), Strategy::gen_binomial(1));
  EXPECT_EQ(Strategy::parse("gen-binomial:3"), Strategy::gen_binomial(3));
  EXPECT_EQ(Strategy::parse("gen-binomial:3:a1b1"), Strategy::gen_binomial(3, ABPair::kOne));
  EXPECT_EQ(Strategy::parse("gen-binomial:2:a0b0"), Strategy::gen_binomial(2));
  EXPECT_EQ(Strategy::gen_binomial(4, ABPair::kOne).name(), "gen-binomial:4:a1b1");
  for (const char* bad : {"", "v-row:2", "gen-binomial:0", "gen-binomial:2:ab", "gen-binomial:x", "cube"}) {
    EXPECT_THROW(Strategy::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(DoubleBinomial, SummandsAndGroups) {
  auto raw = double_binomial_summands(3, 2);
  EXPECT_EQ(raw.size(), 6u);
  auto grouped = expand_power(3, 2, Strategy{StrategyTag::kDoubleBinomial});
  EXPECT_EQ(grouped.terms, (std::vector<ExactRat>{1, 4, 4}));
  for (long m = 1; m <= 30; ++m) {
    for (long n = 0; n <= 12; ++n) {
      ExactRat sum = 0;
      for (const auto& t : double_binomial_summands(m, n)) sum += t;
      EXPECT_EQ(sum, ExactRat(int_pow(m, n)));
    }
  }
  EXPECT_THROW(double_binomial_summands(2, -1), DomainError);
}

TEST(BinomialPair, Regrouping) {
  for (long x = 0; x <= 8; ++x) {
    for (long y = 0; y <= 8; ++y) {
      if (x + y < 1) continue;
      for (long n = 0; n <= 7; ++n) {
        auto e = expand_binomial_pair(x, y, n);
        EXPECT_EQ(e.value, int_pow(x + y, n));
        EXPECT_EQ(1 + e.x_total + e.y_total - e.unit_total, e.value);
      }
    }
  }
  EXPECT_THROW(expand_binomial_pair(0, 0, 2), DomainError);
}

TEST(Multinomial, ThreeAndFourParts) {
  std::vector<ExactInt> parts = {1, 2, 3};
  EXPECT_EQ(expand_multinomial(parts, 4), int_pow(6, 4));
  std::vector<ExactInt> four = {2, 0, 5, 1};
  EXPECT_EQ(expand_multinomial(four, 6), int_pow(8, 6));
  std::vector<ExactInt> zero = {0, 0};
  EXPECT_THROW(expand_multinomial(zero, 2), DomainError);
}

TEST(GeomRatio, MatchesGsum) {
  EXPECT_EQ(geom_ratio_identity(3, 4), ExactRat(40));
  EXPECT_THROW(geom_ratio_identity(1, 4), DomainError);
  EXPECT_THROW(geom_ratio_identity(3, 0), DomainError);
}

TEST(ExpandRender, TextAndJson) {
  auto r = expand_power(4, 3, Strategy{StrategyTag::kVRow});
  EXPECT_EQ(render_text(r, true), "x = 4\nn = 3\nstrategy = v-row\nvalue = 64\nterms = 1,21,21,21\n");
  EXPECT_EQ(render_text(r, false).find("terms"), std::string::npos);
  std::string json = render_json(r, true);
  EXPECT_NE(json.find("\"value\": \"64\""), std::string::npos);
  EXPECT_NE(json.find("\"strategy\": \"v-row\""), std::string::npos);
}
