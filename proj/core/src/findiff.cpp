#include "powerexp/findiff.hpp"

#include <stdexcept>

namespace powerexp {

std::vector<ExactRat> forward_diff_seq(std::span<const ExactRat> values, long order) {
  if (order < 1) throw DomainError("difference order must be >= 1");
  if (static_cast<std::size_t>(order) >= values.size()) {
    throw DomainError("difference order " + std::to_string(order) + " needs more than " +
                      std::to_string(values.size()) + " values");
  }
  std::vector<ExactRat> seq(values.begin(), values.end());
  for (long d = 0; d < order; ++d) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) seq[i] = seq[i + 1] - seq[i];
    seq.pop_back();
  }
  return seq;
}

DifferenceTable difference_table(long n, long x_max, long depth) {
  if (n < 1) throw DomainError("difference table power must be >= 1");
  if (depth < 1 || depth > x_max) throw DomainError("difference table requires 1 <= depth <= x_max");
  DifferenceTable table{n, x_max, depth, {}};
  table.columns.reserve(static_cast<std::size_t>(depth) + 1);
  std::vector<ExactInt> column;
  for (long x = 0; x <= x_max; ++x) column.push_back(int_pow(x, n));
  table.columns.push_back(column);
  for (long d = 1; d <= depth; ++d) {
    const auto& prev = table.columns.back();
    std::vector<ExactInt> next;
    next.reserve(prev.size() - 1);
    for (std::size_t i = 0; i + 1 < prev.size(); ++i) next.push_back(prev[i + 1] - prev[i]);
    table.columns.push_back(std::move(next));
  }
  return table;
}

ExactRat binomial_diff(const ExactRat& x, long n, const ExactRat& h) {
  if (n < 1) throw DomainError("binomial_diff requires n >= 1");
  ExactRat sum = 0;
  for (long k = 1; k <= n; ++k) sum += ExactRat(binomial(n, k)) * rat_pow(x, n - k) * rat_pow(h, k);
  if (sum != rat_pow(x + h, n) - rat_pow(x, n)) {
    throw std::logic_error("binomial_diff disagrees with (x+h)^n - x^n");
  }
  return sum;
}

Telescoped telescope_power(long x, long n) {
  if (x < 0) throw DomainError("telescope_power requires x >= 0");
  if (n < 1) throw DomainError("telescope_power requires n >= 1");
  Telescoped out{0, {}};
  out.terms.reserve(static_cast<std::size_t>(x));
  for (long k = 0; k < x; ++k) {
    out.terms.push_back(int_pow(k + 1, n) - int_pow(k, n));
    out.value += out.terms.back();
  }
  return out;
}

ExactRat gsum(const ExactRat& x, long n) {
  if (n < 0) throw DomainError("gsum requires n >= 0");
  ExactRat sum = 0;
  ExactRat power = 1;
  for (long i = 0; i < n; ++i) {
    sum += power;
    power *= x;
  }
  return sum;
}

ExactInt gsum(const ExactInt& x, long n) { return gsum(ExactRat(x), n).to_integer(); }

ExactInt v_first_diff(long x, long n) {
  if (x < 1) throw DomainError("v_first_diff requires x >= 1");
  if (n < 1) throw DomainError("v_first_diff requires n >= 1");
  ExactInt at_x = gsum(ExactInt(x), n);
  ExactInt at_next = gsum(ExactInt(x + 1), n);
  ExactInt diff = ExactInt(x) * (at_next - at_x) + at_x;
  if (diff != int_pow(x + 1, n) - int_pow(x, n)) {
    throw std::logic_error("v_first_diff disagrees with (x+1)^n - x^n");
  }
  return diff;
}

ExactInt hex_footnote_check(long n) {
  if (n < 0) throw DomainError("hex_footnote_check requires n >= 0");
  ExactInt sum = 1;
  for (long j = 0; j <= n; ++j) sum += ExactInt(6 * j);
  if (sum != int_pow(n + 1, 3) - int_pow(n, 3)) {
    throw std::logic_error("hexagonal footnote sum disagrees with the cube difference");
  }
  return sum;
}

}  // namespace powerexp
