#pragma once

// Seeded generators for the property tests. A failing case prints its seed
// through SCOPED_TRACE so it can be replayed.

#include <cstdint>
#include <random>
#include <string>

#include "powerexp/exact.hpp"

namespace powerexp::testing {

inline constexpr std::uint64_t kSeed = 0x5eed'c0be'2024'0001ULL;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return range(0, 1) == 1; }

  /// Integer with up to `digits` decimal digits, either sign.
  ExactInt big(int digits) {
    std::string text = coin() ? "-" : "";
    int len = static_cast<int>(range(1, digits));
    text += static_cast<char>('1' + range(0, 8));
    for (int i = 1; i < len; ++i) text += static_cast<char>('0' + range(0, 9));
    return ExactInt::parse(text);
  }

  ExactRat rat(int digits) {
    ExactInt den = big(digits);
    if (den.sign() < 0) den = -den;
    return ExactRat(big(digits), den);
  }

  /// Small rational p/q with |p| <= bound, 1 <= q <= bound.
  ExactRat small_rat(long bound) { return ExactRat(ExactInt(range(-bound, bound)), ExactInt(range(1, bound))); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace powerexp::testing
