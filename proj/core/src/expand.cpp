#include "powerexp/expand.hpp"

#include <numeric>
#include <stdexcept>

#include "powerexp/findiff.hpp"
#include "powerexp/triangle.hpp"

namespace powerexp {

namespace {

struct NamedTag {
  std::string_view name;
  StrategyTag tag;
};

constexpr NamedTag kNames[] = {
    {"v-row", StrategyTag::kVRow},
    {"telescope-geom", StrategyTag::kTelescopeGeom},
    {"u-row", StrategyTag::kURow},
    {"u-recurrence-n", StrategyTag::kURecurrenceN},
    {"u-reflect", StrategyTag::kUReflect},
    {"u-central", StrategyTag::kUCentral},
    {"gen-binomial", StrategyTag::kGenBinomial},
    {"double-binomial", StrategyTag::kDoubleBinomial},
    {"binomial-diff-sum", StrategyTag::kBinomialDiffSum},
};

bool is_u_family(StrategyTag tag) {
  return tag == StrategyTag::kURow || tag == StrategyTag::kURecurrenceN ||
         tag == StrategyTag::kUReflect || tag == StrategyTag::kUCentral;
}

const ExactRat kHalf(ExactInt(1), ExactInt(2));

// Each U-family strategy sums x terms of the form c_k * x^{n-3}.
template <typename Coefficient>
std::vector<ExactRat> u_family_terms(const ExactInt& x, long n, Coefficient coefficient) {
  std::vector<ExactRat> terms;
  ExactRat scale = rat_pow(ExactRat(x), n - 3);
  for (ExactInt k = 0; k < x; k += 1) terms.push_back(coefficient(k) * scale);
  return terms;
}

std::vector<ExactRat> gen_binomial_terms(const ExactInt& x, long n, long depth, ABPair pair) {
  if (depth < 1) throw DomainError("generalized binomial depth must be >= 1");
  ABCoefficients ab = ab_coefficients(x);
  const ExactInt& a = pair == ABPair::kZero ? ab.a0 : ab.a1;
  const ExactInt& b = pair == ABPair::kZero ? ab.b0 : ab.b1;
  std::vector<ExactRat> terms;
  for (long k = 0; k <= depth; ++k) {
    ExactInt coeff = binomial(depth, k) * int_pow(a, depth - k) * int_pow(b, k);
    if (k % 2 == 1) coeff = -coeff;
    terms.push_back(ExactRat(coeff) * rat_pow(ExactRat(x), n - 2 * depth - k));
  }
  return terms;
}

}  // namespace

Strategy Strategy::gen_binomial(long depth, ABPair pair) {
  if (depth < 1) throw DomainError("generalized binomial depth must be >= 1");
  return Strategy{StrategyTag::kGenBinomial, depth, pair};
}

Strategy Strategy::parse(std::string_view name) {
  std::string_view head = name.substr(0, name.find(':'));
  for (const auto& entry : kNames) {
    if (entry.name != head) continue;
    if (entry.tag != StrategyTag::kGenBinomial) {
      if (head.size() != name.size()) break;
      return Strategy{entry.tag, 1, ABPair::kZero};
    }
    // gen-binomial[:J[:a0b0|a1b1]]
    std::string_view rest = name.substr(head.size());
    long depth = 1;
    ABPair pair = ABPair::kZero;
    if (!rest.empty()) {
      rest.remove_prefix(1);
      std::string_view depth_text = rest.substr(0, rest.find(':'));
      ExactInt parsed = ExactInt::parse(depth_text);
      if (parsed < 1 || !parsed.fits_long()) break;
      depth = parsed.to_long();
      rest.remove_prefix(depth_text.size());
      if (!rest.empty()) {
        rest.remove_prefix(1);
        if (rest == "a1b1") pair = ABPair::kOne;
        else if (rest != "a0b0") break;
      }
    }
    return gen_binomial(depth, pair);
  }
  throw std::invalid_argument("unknown strategy '" + std::string(name) + "'");
}

std::string Strategy::name() const {
  for (const auto& entry : kNames) {
    if (entry.tag != tag) continue;
    std::string out(entry.name);
    if (tag == StrategyTag::kGenBinomial) {
      out += ":" + std::to_string(depth);
      if (pair == ABPair::kOne) out += ":a1b1";
    }
    return out;
  }
  return "?";
}

std::vector<Strategy> evaluable_strategies() {
  return {
      {StrategyTag::kVRow},         {StrategyTag::kTelescopeGeom},  {StrategyTag::kURow},
      {StrategyTag::kURecurrenceN}, {StrategyTag::kUReflect},       {StrategyTag::kUCentral},
      {StrategyTag::kDoubleBinomial}, {StrategyTag::kBinomialDiffSum},
  };
}

std::vector<ExactRat> double_binomial_summands(const ExactInt& m, long n) {
  if (n < 0) throw DomainError("double binomial sum requires n >= 0");
  std::vector<ExactRat> out;
  out.reserve(static_cast<std::size_t>((n + 1) * (n + 2) / 2));
  for (long k = 0; k <= n; ++k) {
    for (long j = 0; j <= k; ++j) {
      ExactInt term = binomial(n, k) * binomial(k, j) * int_pow(m, j);
      out.emplace_back((k - j) % 2 == 0 ? term : -term);
    }
  }
  return out;
}

ExpansionResult expand_power(const ExactInt& x, long n, const Strategy& strategy) {
  if (n < 0) throw DomainError("expand_power requires n >= 0");
  if (x.sign() < 0) throw DomainError("expand_power requires x >= 0");
  const StrategyTag tag = strategy.tag;
  if ((is_u_family(tag) || tag == StrategyTag::kGenBinomial) && x < 1) {
    throw DomainError(strategy.name() + " requires x >= 1 (it scales by negative powers of x)");
  }

  ExpansionResult result{x, n, strategy, 0, {}};
  auto& terms = result.terms;
  switch (tag) {
    case StrategyTag::kVRow: {
      if (x.is_zero() && n == 0) throw DomainError("v-row has no terms at x = 0, n = 0");
      // V_{n-1}(x,0) = 1; interior entries are all gsum(x, n).
      ExactInt interior = gsum(x, n);
      for (ExactInt k = 0; k < x; k += 1) terms.emplace_back(k.is_zero() ? ExactInt(1) : interior);
      break;
    }
    case StrategyTag::kTelescopeGeom: {
      terms.emplace_back(1);
      ExactInt power = 1;
      for (long k = 0; k < n; ++k) {
        ExactInt next = power * x;
        terms.emplace_back(next - power);
        power = std::move(next);
      }
      break;
    }
    case StrategyTag::kURow:
      terms = u_family_terms(x, n, [&](const ExactInt& k) { return ExactRat(u_coeff(x, k)); });
      break;
    case StrategyTag::kURecurrenceN:
      terms = u_family_terms(x, n, [&](const ExactInt& k) {
        return kHalf * ExactRat(u_coeff(x + 1, k) + u_coeff(x - 1, k));
      });
      break;
    case StrategyTag::kUReflect:
      terms = u_family_terms(x, n, [&](const ExactInt& k) {
        ExactInt row = 2 * x - k;
        return kHalf * ExactRat(u_coeff(row, k) + u_coeff(row, 0));
      });
      break;
    case StrategyTag::kUCentral:
      terms = u_family_terms(x, n, [](const ExactInt& k) {
        return ExactRat(u_coeff(exact_div(k * k + k + 2, 2), 1));
      });
      break;
    case StrategyTag::kGenBinomial:
      terms = gen_binomial_terms(x, n, strategy.depth, strategy.pair);
      break;
    case StrategyTag::kDoubleBinomial: {
      // Terms grouped by the outer index k.
      auto raw = double_binomial_summands(x, n);
      std::size_t at = 0;
      for (long k = 0; k <= n; ++k) {
        ExactRat group = 0;
        for (long j = 0; j <= k; ++j) group += raw[at++];
        terms.push_back(group);
      }
      break;
    }
    case StrategyTag::kBinomialDiffSum: {
      // Telescoping recovers x^n - 0^n; the anchor 0^n is only nonzero at n = 0.
      if (n == 0) terms.emplace_back(1);
      for (ExactInt j = 0; j < x; j += 1) {
        ExactInt inner = 0;
        for (long k = 1; k <= n; ++k) inner += binomial(n, k) * int_pow(j, n - k);
        terms.emplace_back(inner);
      }
      break;
    }
  }

  ExactRat total = std::accumulate(terms.begin(), terms.end(), ExactRat(0));
  result.value = total.to_integer();
  if (result.value != int_pow(x, n)) {
    throw std::logic_error(strategy.name() + " expansion of " + x.str() + "^" + std::to_string(n) +
                           " summed to " + total.str());
  }
  return result;
}

BinomialPairExpansion expand_binomial_pair(const ExactInt& x, const ExactInt& y, long n) {
  if (n < 0) throw DomainError("expand_binomial_pair requires n >= 0");
  ExactInt s = x + y;
  if (s < 1) throw DomainError("expand_binomial_pair requires x + y >= 1");
  ExactInt g = gsum(s, n);
  BinomialPairExpansion out{1 + (s - 1) * g, x * g, y * g, g};
  if (out.value != int_pow(s, n) || 1 + out.x_total + out.y_total - out.unit_total != out.value) {
    throw std::logic_error("binomial pair regrouping disagrees with (x+y)^n");
  }
  return out;
}

ExactInt expand_multinomial(std::span<const ExactInt> xs, long n) {
  if (n < 0) throw DomainError("expand_multinomial requires n >= 0");
  ExactInt s = std::accumulate(xs.begin(), xs.end(), ExactInt(0));
  if (s < 1) throw DomainError("expand_multinomial requires the parts to sum to >= 1");
  ExactInt value = 1 + (s - 1) * gsum(s, n);
  if (value != int_pow(s, n)) throw std::logic_error("multinomial expansion disagrees with s^n");
  return value;
}

ExactRat geom_ratio_identity(const ExactInt& x, long n) {
  if (x < 2) throw DomainError("geom_ratio_identity requires x >= 2");
  if (n < 1) throw DomainError("geom_ratio_identity requires n >= 1");
  ExactRat denom(x - 1);
  ExactRat value = ExactRat(int_pow(x, n)) / denom - ExactRat(1) / denom;
  if (value != gsum(ExactRat(x), n)) throw std::logic_error("geometric ratio disagrees with gsum");
  return value;
}

}  // namespace powerexp
