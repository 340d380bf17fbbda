#include <algorithm>
#include <map>

#include "bundled.hpp"
#include "powerexp/audit.hpp"
#include "powerexp/exp_series.hpp"
#include "powerexp/expand.hpp"
#include "powerexp/findiff.hpp"
#include "powerexp/oeis.hpp"
#include "powerexp/triangle.hpp"

namespace powerexp {

namespace {

using R = ExactRat;
using I = ExactInt;
using Rows = std::vector<std::vector<long>>;

R U(const I& n, const I& k) { return R(u_coeff(n, k)); }
R pw(const R& x, long n) { return rat_pow(x, n); }

DomainVar rng(std::string name, long lo, long hi) { return DomainVar::range(std::move(name), lo, hi); }

DomainVar vals(std::string name, std::vector<R> values) { return DomainVar::list(std::move(name), std::move(values)); }

DomainVar labeled(std::string name, std::vector<R> values, std::vector<std::string> labels) {
  DomainVar v = DomainVar::list(std::move(name), std::move(values));
  v.labels = std::move(labels);
  return v;
}

bool k_le_n(const Point& p) { return p.i("k") <= p.i("n"); }

IdentityRecord claim(AuditStatus status, std::string id, std::string citation, Domain domain, Evaluator lhs,
                     Evaluator rhs, std::vector<std::string> notes = {}) {
  IdentityRecord r;
  r.id = std::move(id);
  r.citation = std::move(citation);
  r.status = status;
  r.domain = std::move(domain);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.notes = std::move(notes);
  return r;
}

IdentityRecord verified(std::string id, std::string citation, Domain domain, Evaluator lhs, Evaluator rhs,
                        std::vector<std::string> notes = {}) {
  return claim(AuditStatus::kVerifiedClaim, std::move(id), std::move(citation), std::move(domain), std::move(lhs),
               std::move(rhs), std::move(notes));
}

IdentityRecord audited(std::string id, std::string citation, Domain domain, Evaluator lhs, Evaluator rhs,
                       std::vector<std::string> notes = {}) {
  return claim(AuditStatus::kAuditedClaim, std::move(id), std::move(citation), std::move(domain), std::move(lhs),
               std::move(rhs), std::move(notes));
}

IdentityRecord non_evaluable(std::string id, std::string citation, std::string reason,
                             std::vector<std::string> aliases = {}) {
  IdentityRecord r;
  r.id = std::move(id);
  r.citation = std::move(citation);
  r.status = AuditStatus::kNonEvaluable;
  r.reason = std::move(reason);
  r.aliases = std::move(aliases);
  return r;
}

// Bundled b-file values, parsed once.
const I& fixture_term(const std::string& id, long index) {
  static const std::map<std::string, BFile> files = [] {
    std::map<std::string, BFile> out;
    for (const auto& f : detail::bundled_bfiles()) {
      out.emplace(std::string(f.sequence_id), parse_bfile(f.text, std::string(f.sequence_id)));
    }
    return out;
  }();
  auto it = files.find(id);
  if (it == files.end()) throw std::logic_error("no bundled fixture for " + id);
  const BFile& b = it->second;
  long at = index - b.offset;
  if (at < 0 || at >= static_cast<long>(b.entries.size())) {
    throw std::logic_error(id + " fixture has no index " + std::to_string(index));
  }
  return b.entries[static_cast<std::size_t>(at)].value;
}

R triangle_fixture(const std::string& id, const Point& p) {
  long n = p.l("n");
  return R(fixture_term(id, n * (n + 1) / 2 + p.l("k")));
}

R printed_row_entry(const Rows& rows, const Point& p) {
  return R(rows.at(static_cast<std::size_t>(p.l("n"))).at(static_cast<std::size_t>(p.l("k"))));
}

Domain printed_rows_domain(const Rows& rows) {
  return Domain({rng("n", 0, static_cast<long>(rows.size()) - 1), rng("k", 0, static_cast<long>(rows.size()) - 1)},
                k_le_n, "k <= n");
}

R binomial_sum(const R& x, const R& y, long n) {
  R sum = 0;
  for (long k = 0; k <= n; ++k) sum += R(binomial(n, k)) * pw(x, n - k) * pw(y, k);
  return sum;
}

// sum_{j=0}^{x-1} sum_{k=1}^{n} C(n,k) j^{n-k} h^k
R discrete_integral(const I& x, long n, const R& h) {
  R sum = 0;
  for (I j = 0; j < x; j += 1) {
    for (long k = 1; k <= n; ++k) sum += R(binomial(n, k) * int_pow(j, n - k)) * pw(h, k);
  }
  return sum;
}

R gs(const R& x, long n) { return gsum(x, n); }

R u_row_sum(const I& n, const I& from, const I& to) {
  R sum = 0;
  for (I k = from; k <= to; k += 1) sum += U(n, k);
  return sum;
}

R cube_difference(const I& n) { return R(int_pow(n + 1, 3) - int_pow(n, 3)); }

// U at the central polygonal row (t^2+t+2)/2, column 1.
R central(const I& t) { return U(exact_div(t * t + t + 2, 2), 1); }

// Half-sum of U at rows (t^2+t)/2 and (t^2+t+4)/2, column 1.
R central_pair(const I& t) {
  return R(ExactInt(1), ExactInt(2)) * (U(exact_div(t * t + t, 2), 1) + U(exact_div(t * t + t + 4, 2), 1));
}

R tail_geometric(const I& x, long n) {
  R sum = 0;
  for (long t = 4; t <= n; ++t) sum += R(int_pow(x, n - t));
  return sum;
}

const R kHalf(ExactInt(1), ExactInt(2));

std::pair<I, I> ab_pair(const I& x, long pair) {
  ABCoefficients ab = ab_coefficients(x);
  return pair == 0 ? std::pair{ab.a0, ab.b0} : std::pair{ab.a1, ab.b1};
}

R gen_binomial_rhs(const I& x, long n, long j, long pair) {
  auto [a, b] = ab_pair(x, pair);
  R sum = 0;
  for (long k = 0; k <= j; ++k) {
    R term = R(binomial(j, k) * int_pow(a, j - k) * int_pow(b, k)) * pw(R(x), n - 2 * j - k);
    sum += k % 2 == 0 ? term : -term;
  }
  return sum;
}

// Smallest N >= 3 with tail bound below 1e-12 of the partial sum of e^x.
long e42_terms(const I& x) {
  R partial = 0;
  I fact = 1;
  I power = 1;
  const R scale(ExactInt(1), int_pow(10, 12));
  for (long n = 0;; ++n) {
    if (n > 0) {
      fact *= n;
      power *= x;
    }
    partial += R(power, fact);
    if (n >= 3 && exp_tail_bound(x, n) < partial * scale) return n;
  }
}

std::vector<IdentityRecord> section_one() {
  std::vector<IdentityRecord> out;
  out.push_back(verified(
      "E1_2", "binomial theorem for (x+y)^n",
      Domain({rng("x", -3, 6), rng("y", -3, 6), rng("n", 0, 8)}),
      [](const Point& p) { return pw(p["x"] + p["y"], p.l("n")); },
      [](const Point& p) { return binomial_sum(p["x"], p["y"], p.l("n")); }));

  {
    IdentityRecord r = audited(
        "L1_4", "power as the discrete integral of its first difference with step h",
        Domain({rng("x", 1, 6), rng("n", 1, 5), vals("h", {R(1, 2), R(1), R(3, 2), R(2)})}),
        [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); },
        [](const Point& p) { return discrete_integral(p.i("x"), p.l("n"), p["h"]); },
        {"the display allows any real step h; the telescoping sum over unit steps only closes for h = 1",
         "h is restricted to exact rationals"});
    out.push_back(std::move(r));
  }

  out.push_back(verified(
      "E1_5", "power as a telescoping sum of (k+1)^n - k^n",
      Domain({rng("x", 0, 30), rng("n", 1, 10)}),
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); },
      [](const Point& p) { return R(telescope_power(p.l("x"), p.l("n")).value); }));

  out.push_back(verified(
      "E1_7", "forward difference with step h in binomial form",
      Domain({vals("x", {R(-2), R(-1, 2), R(0), R(1, 3), R(1), R(5, 2), R(4)}), rng("n", 1, 8),
              vals("h", {R(-1), R(1, 2), R(1), R(2), R(7, 3)})}),
      [](const Point& p) { return pw(p["x"] + p["h"], p.l("n")) - pw(p["x"], p.l("n")); },
      [](const Point& p) {
        R sum = 0;
        long n = p.l("n");
        for (long k = 1; k <= n; ++k) sum += R(binomial(n, k)) * pw(p["x"], n - k) * pw(p["h"], k);
        return sum;
      }));

  {
    static const Rows printed = {
        {0, 1, 8, 27, 64, 125, 216, 343, 512, 729, 1000},
        {1, 7, 19, 37, 61, 91, 127, 169, 217, 271},
        {6, 12, 18, 24, 30, 36, 42, 48, 54},
        {6, 6, 6, 6, 6, 6, 6, 6},
    };
    out.push_back(verified(
        "TAB1", "difference table of x^3 up to third order",
        Domain({rng("x", 0, 10), rng("d", 0, 3)}, [](const Point& p) { return p.l("x") + p.l("d") <= 10; },
               "x + d <= 10"),
        [](const Point& p) {
          static const DifferenceTable table = difference_table(3, 10, 3);
          return R(table.columns[static_cast<std::size_t>(p.l("d"))][static_cast<std::size_t>(p.l("x"))]);
        },
        [](const Point& p) {
          return R(printed[static_cast<std::size_t>(p.l("d"))][static_cast<std::size_t>(p.l("x"))]);
        },
        {"right side is the printed table; column d is the d-th difference"}));
  }

  out.push_back(verified(
      "E1_9", "first difference of cubes as 1 + 3!*0 + 3!*1 + ... + 3!*x",
      Domain({rng("x", 0, 100)}), [](const Point& p) { return cube_difference(p.i("x")); },
      [](const Point& p) {
        R sum = 1;
        for (I j = 0; j <= p.i("x"); j += 1) sum += R(6 * j);
        return sum;
      }));

  out.push_back(verified(
      "E1_10", "cube as a sum of the first differences written with 3! multiples",
      Domain({rng("x", 0, 60)}), [](const Point& p) { return R(int_pow(p.i("x"), 3)); },
      [](const Point& p) {
        R sum = 0;
        for (I i = 0; i < p.i("x"); i += 1) {
          sum += 1;
          for (I j = 0; j <= i; j += 1) sum += R(6 * j);
        }
        return sum;
      }));

  out.push_back(verified(
      "E1_11", "cube as x + sum (x-m) 3! m",
      Domain({rng("x", 0, 60)}), [](const Point& p) { return R(int_pow(p.i("x"), 3)); },
      [](const Point& p) {
        I x = p.i("x");
        R sum(x);
        for (I m = 0; m < x; m += 1) sum += R((x - m) * 6 * m);
        return sum;
      }));

  out.push_back(verified(
      "E1_12", "cube as sum over m of 3! mx - 3! m^2 + 1",
      Domain({rng("x", 0, 60)}), [](const Point& p) { return R(int_pow(p.i("x"), 3)); },
      [](const Point& p) {
        I x = p.i("x");
        R sum = 0;
        for (I m = 0; m < x; m += 1) sum += R(6 * m * x - 6 * m * m + 1);
        return sum;
      }));

  out.push_back(verified(
      "E1_14", "T-form cube sum is the same over iteration sets A and C",
      Domain({rng("x", 1, 60), labeled("set", {R(0), R(2)}, {"A", "C"})}),
      [](const Point& p) {
        auto set = p.l("set") == 0 ? IterationSet::kA : IterationSet::kC;
        return R(iteration_set_sum(p.i("x"), set, SumForm::kTForm));
      },
      [](const Point& p) { return R(int_pow(p.i("x"), 3)); }));

  out.push_back(verified(
      "E1_15", "U-form cube sum is the same over iteration sets A, B and C",
      Domain({rng("x", 1, 60), labeled("set", {R(0), R(1), R(2)}, {"A", "B", "C"})}),
      [](const Point& p) {
        static const IterationSet sets[] = {IterationSet::kA, IterationSet::kB, IterationSet::kC};
        return R(iteration_set_sum(p.i("x"), sets[p.l("set")], SumForm::kUForm));
      },
      [](const Point& p) { return R(int_pow(p.i("x"), 3)); }));

  out.push_back(verified(
      "E1_16", "generator y(n,k) = 3! kn - 3! k^2 + 1 of the cube triangle",
      Domain({rng("n", 0, 40), rng("k", 0, 40)}, k_le_n, "k <= n"),
      [](const Point& p) { return R(triangle_entry(TriangleKind{}, p.l("n"), p.l("k"))); },
      [](const Point& p) {
        I n = p.i("n"), k = p.i("k");
        return R(6 * k * n - 6 * k * k + 1);
      }));

  out.push_back(verified(
      "FIG2", "eleven plotted points of 3! kx - 3! k^2 + 1 at x = 10",
      Domain({rng("k", 0, 10)}), [](const Point& p) { return U(10, p.i("k")); },
      [](const Point& p) {
        static const long printed[] = {1, 55, 97, 127, 145, 151, 145, 127, 97, 55, 1};
        return R(printed[p.l("k")]);
      }));

  out.push_back(verified(
      "FIG3", "cube triangle rows 0 to 4 against the A287326 fixture",
      Domain({rng("n", 0, 4), rng("k", 0, 4)}, k_le_n, "k <= n"),
      [](const Point& p) { return R(triangle_entry(TriangleKind{}, p.l("n"), p.l("k"))); },
      [](const Point& p) { return triangle_fixture("A287326", p); }));

  out.push_back(verified(
      "FIG4", "Pascal's triangle rows 0 to 4 against the A007318 fixture",
      Domain({rng("n", 0, 4), rng("k", 0, 4)}, k_le_n, "k <= n"),
      [](const Point& p) { return R(triangle_entry(TriangleKind{TriangleTag::kPascal}, p.l("n"), p.l("k"))); },
      [](const Point& p) { return triangle_fixture("A007318", p); }));
  return out;
}

std::vector<IdentityRecord> section_two() {
  std::vector<IdentityRecord> out;
  {
    static const Rows printed = {{1}, {1, 1}, {1, 3, 1}, {1, 4, 4, 1}, {1, 3, 9, 3, 1}};
    out.push_back(verified(
        "FIG5", "cube triangle with n^2 removed from interior entries, rows 0 to 4",
        printed_rows_domain(printed),
        [](const Point& p) { return R(triangle_entry(TriangleKind{TriangleTag::kReduced1}, p.l("n"), p.l("k"))); },
        [](const Point& p) { return printed_row_entry(printed, p); }));
  }
  {
    static const Rows printed = {{1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1}, {1, -1, 5, -1, 1}};
    out.push_back(verified(
        "FIG6", "cube triangle with n^2 + n removed from interior entries, rows 0 to 4",
        printed_rows_domain(printed),
        [](const Point& p) { return R(triangle_entry(TriangleKind{TriangleTag::kReduced2}, p.l("n"), p.l("k"))); },
        [](const Point& p) { return printed_row_entry(printed, p); }));
  }

  out.push_back(verified(
      "D2_3", "V_M(n,k): n^0 + ... + n^M inside the row, 1 on the boundary",
      Domain({rng("m", 0, 5), rng("n", 0, 12), rng("k", 0, 12)}, k_le_n, "k <= n"),
      [](const Point& p) { return R(v_coeff(p.l("m"), p.i("n"), p.i("k"))); },
      [](const Point& p) {
        I n = p.i("n"), k = p.i("k");
        if (k.is_zero() || k == n) return R(1);
        R sum = 0;
        for (long i = 0; i <= p.l("m"); ++i) sum += R(int_pow(n, i));
        return sum;
      }));

  out.push_back(verified(
      "E2_6", "V_M(n,k) is constant across the interior of a row",
      Domain({rng("m", 0, 6), rng("n", 3, 20), rng("k", 1, 19), rng("j", 1, 19)},
             [](const Point& p) { return p.i("k") < p.i("j") && p.i("j") <= p.i("n") - 1; },
             "1 <= k < j <= n-1"),
      [](const Point& p) { return R(v_coeff(p.l("m"), p.i("n"), p.i("k"))); },
      [](const Point& p) { return R(v_coeff(p.l("m"), p.i("n"), p.i("j"))); }));

  out.push_back(verified(
      "E2_7", "n^M as the row sum of V_{M-1}(n,k) for M in {1,2,3}",
      Domain({rng("m", 1, 3), rng("n", 1, 40)}),
      [](const Point& p) { return R(int_pow(p.i("n"), p.l("m"))); },
      [](const Point& p) {
        R sum = 0;
        for (I k = 0; k < p.i("n"); k += 1) sum += R(v_coeff(p.l("m") - 1, p.i("n"), k));
        return sum;
      }));

  out.push_back(verified(
      "X2_8", "worked example 4^3 = 1 + 21 + 21 + 21",
      Domain({rng("k", 0, 3)}),
      [](const Point& p) {
        static const ExpansionResult r = expand_power(4, 3, Strategy{StrategyTag::kVRow});
        return r.terms.at(static_cast<std::size_t>(p.l("k")));
      },
      [](const Point& p) {
        static const long printed[] = {1, 21, 21, 21};
        return R(printed[p.l("k")]);
      }));

  out.push_back(verified(
      "E2_10", "x^n as the sum of V_{n-1}(x,k) over k = 0..x-1",
      Domain({rng("x", 1, 30), rng("n", 1, 10)}),
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); },
      [](const Point& p) {
        R sum = 0;
        for (I k = 0; k < p.i("x"); k += 1) sum += R(v_coeff(p.l("n") - 1, p.i("x"), k));
        return sum;
      }));

  out.push_back(verified(
      "FIG7", "triangle of V_0(x,k) against the A000012 fixture, rows 0 to 4",
      Domain({rng("n", 0, 4), rng("k", 0, 4)}, k_le_n, "k <= n"),
      [](const Point& p) { return R(v_coeff(0, p.i("n"), p.i("k"))); },
      [](const Point& p) { return triangle_fixture("A000012", p); }));

  out.push_back(verified(
      "E2_12", "x^2 = 1 + sum of (V_0(x,k) + x) over k = 1..x-1",
      Domain({rng("x", 1, 60)}), [](const Point& p) { return R(int_pow(p.i("x"), 2)); },
      [](const Point& p) {
        I x = p.i("x");
        R sum = 1;
        for (I k = 1; k < x; k += 1) sum += R(v_coeff(0, x, k) + x);
        return sum;
      }));

  out.push_back(verified(
      "E2_13", "x^n as x copies of x^{n-1}",
      Domain({rng("x", 0, 20), rng("n", 1, 10)}),
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); },
      [](const Point& p) {
        R sum = 0;
        for (I k = 0; k < p.i("x"); k += 1) sum += R(int_pow(p.i("x"), p.l("n") - 1));
        return sum;
      }));

  out.push_back(verified(
      "E2_14", "row sum of V_{n-1}(x,k) rewritten as 1 + (x-1)(x^0 + ... + x^{n-1})",
      Domain({rng("x", 1, 30), rng("n", 1, 10), labeled("form", {R(1), R(2), R(3)}, {"row", "geometric", "shifted"})}),
      [](const Point& p) {
        I x = p.i("x");
        long n = p.l("n");
        switch (p.l("form")) {
          case 1: {
            R sum = 0;
            for (I k = 0; k < x; k += 1) sum += R(v_coeff(n - 1, x, k));
            return sum;
          }
          case 2: return 1 + R(x - 1) * gs(R(x), n);
          default: {
            R sum(x);
            for (long i = 1; i < n; ++i) sum += R((x - 1) * int_pow(x, i));
            return sum;
          }
        }
      },
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); }));

  out.push_back(verified(
      "E2_15", "x^n = 1 + sum (x-1)x^k = 1 + sum (x^{k+1} - x^k)",
      Domain({rng("x", 0, 30), rng("n", 0, 10), labeled("form", {R(1), R(2)}, {"scaled", "telescoped"})}),
      [](const Point& p) {
        I x = p.i("x");
        R sum = 1;
        for (long k = 0; k < p.l("n"); ++k) {
          sum += p.l("form") == 1 ? R((x - 1) * int_pow(x, k)) : R(int_pow(x, k + 1) - int_pow(x, k));
        }
        return sum;
      },
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); }));

  out.push_back(verified(
      "E2_16", "f(x) = 1 + sum of g(x,k+1) - g(x,k) with g(x,k) = x^k",
      Domain({rng("x", 0, 30), rng("n", 0, 10)}),
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); },
      [](const Point& p) {
        auto g = [&](long k) { return R(int_pow(p.i("x"), k)); };
        R sum = 1;
        for (long k = 0; k < p.l("n"); ++k) sum += g(k + 1) - g(k);
        return sum;
      }));

  out.push_back(verified(
      "E2_17", "x^n/(x-1) - 1/(x-1) = x^0 + ... + x^{n-1}",
      Domain({rng("x", 0, 30), rng("n", 1, 10)}, [](const Point& p) { return p.l("x") != 1; }, "x != 1"),
      [](const Point& p) {
        R d = p["x"] - 1;
        return pw(p["x"], p.l("n")) / d - R(1) / d;
      },
      [](const Point& p) { return gs(p["x"], p.l("n")); }));

  out.push_back(verified(
      "E2_18", "x^n as a double sum of binomial first differences",
      Domain({rng("x", 1, 20), rng("n", 1, 10)}),
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); },
      [](const Point& p) { return discrete_integral(p.i("x"), p.l("n"), R(1)); }));

  out.push_back(audited(
      "E2_19", "x^{n+m} as the double binomial sum plus x^n + x^{n+1} + ... + x^{n+m-1}",
      Domain({rng("x", 1, 6), rng("n", 1, 6), rng("m", 1, 4)}),
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n") + p.l("m"))); },
      [](const Point& p) {
        I x = p.i("x");
        long n = p.l("n");
        R sum = discrete_integral(x, n, R(1));
        for (long i = 0; i < p.l("m"); ++i) sum += R(int_pow(x, n + i));
        return sum;
      },
      {"the binomial coefficient is printed with a fixed lower index 2; it is evaluated with the running "
       "index k, the reading under which the double sum equals x^n",
       "with that reading the claim is x^{n+m} = x^n + x^n + x^{n+1} + ... + x^{n+m-1}"}));

  {
    static const Rows printed = {{1}, {1, 1}, {1, 3, 1}, {1, 4, 4, 1}, {1, 5, 5, 5, 1}};
    out.push_back(audited(
        "FIG8", "printed triangle labelled V_2(n,k), rows 0 to 4",
        printed_rows_domain(printed), [](const Point& p) { return printed_row_entry(printed, p); },
        [](const Point& p) { return R(v_coeff(2, p.i("n"), p.i("k"))); },
        {"erratum: the printed interior entries are 1 + n, i.e. V_1(n,k); V_2(n,k) = 1 + n + n^2",
         "the caption announces rows 0 to 9; only rows 0 to 4 are printed"}));
  }

  out.push_back(verified(
      "E2_21", "x^2 as the sum of the first |x| odd numbers",
      Domain({rng("x", -50, 50)}), [](const Point& p) { return R(int_pow(p.i("x"), 2)); },
      [](const Point& p) {
        R sum = 0;
        for (I k = 0; k < abs(p.i("x")); k += 1) sum += R(2 * k + 1);
        return sum;
      }));

  out.push_back(audited(
      "E2_22", "x^2 as the sum of V_2(2k,k)",
      Domain({rng("x", 1, 12)}), [](const Point& p) { return R(int_pow(p.i("x"), 2)); },
      [](const Point& p) {
        R sum = 0;
        for (I k = 0; k < p.i("x"); k += 1) sum += R(v_coeff(2, 2 * k, k));
        return sum;
      },
      {"the upper limit n is not tied to x in the display; it is evaluated on the grid n = x"}));

  out.push_back(verified(
      "E2_23", "(x+y)^n = 1 + (x+y-1)(geometric sum of x+y)",
      Domain({rng("x", 0, 10), rng("y", 0, 10), rng("n", 0, 8)},
             [](const Point& p) { return p.l("x") + p.l("y") >= 1; }, "x + y >= 1"),
      [](const Point& p) { return binomial_sum(p["x"], p["y"], p.l("n")); },
      [](const Point& p) {
        R s = p["x"] + p["y"];
        return 1 + (s - 1) * gs(s, p.l("n"));
      }));

  out.push_back(verified(
      "E2_25", "binomial expansion regrouped into x-, y- and unit-weighted geometric sums",
      Domain({rng("x", 0, 10), rng("y", 0, 10), rng("n", 0, 8)},
             [](const Point& p) { return p.l("x") + p.l("y") >= 1; }, "x + y >= 1"),
      [](const Point& p) { return binomial_sum(p["x"], p["y"], p.l("n")); },
      [](const Point& p) {
        BinomialPairExpansion e = expand_binomial_pair(p.i("x"), p.i("y"), p.l("n"));
        return R(1 + e.x_total + e.y_total - e.unit_total);
      }));

  out.push_back(verified(
      "E2_26", "multinomial analogue with three parts",
      Domain({rng("a", 0, 4), rng("b", 0, 4), rng("c", 0, 4), rng("n", 0, 6)},
             [](const Point& p) { return p.l("a") + p.l("b") + p.l("c") >= 1; }, "a + b + c >= 1"),
      [](const Point& p) {
        R s = p["a"] + p["b"] + p["c"];
        R product = 1;
        for (long i = 0; i < p.l("n"); ++i) product *= s;
        return product;
      },
      [](const Point& p) {
        R s = p["a"] + p["b"] + p["c"];
        R sum = 1;
        for (long i = 0; i < p.l("n"); ++i) sum += (s - 1) * pw(s, i);
        return sum;
      },
      {"the left side is printed without an exponent; read as (x_1 + ... + x_k)^n"}));

  out.push_back(verified(
      "E2_27", "f(x) = 1 + (x-1)V_{n-1}(x,k) = x^n",
      Domain({rng("x", 0, 30), rng("n", 0, 10)}),
      [](const Point& p) { return 1 + (p["x"] - 1) * gs(p["x"], p.l("n")); },
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); }));

  out.push_back(verified(
      "E2_28", "first difference x[V_{n-1}(x+1,k) - V_{n-1}(x,k)] + V_{n-1}(x,k)",
      Domain({rng("x", 0, 30), rng("n", 1, 10)}),
      [](const Point& p) {
        R x = p["x"];
        long n = p.l("n");
        return x * (gs(x + 1, n) - gs(x, n)) + gs(x, n);
      },
      [](const Point& p) { return R(int_pow(p.i("x") + 1, p.l("n")) - int_pow(p.i("x"), p.l("n"))); },
      {"audited on the final line; the intermediate line xV_{n-1}(x+1,k) - x^n - 1 has a sign slip "
       "(-(x^n - 1) expands to -x^n + 1) and is off by -2 everywhere"}));

  out.push_back(verified(
      "X2_29", "worked example: difference of x^3 at x = 3 is 63 - 26 = 37",
      Domain({vals("x", {R(3)}), vals("n", {R(3)})}),
      [](const Point& p) {
        R x = p["x"];
        long n = p.l("n");
        return x * gs(x + 1, n) - (x - 1) * gs(x, n);
      },
      [](const Point&) { return R(37); }));

  out.push_back(audited(
      "E2_29", "m-th difference of x^n through differences of V_{n-1}",
      Domain({rng("x", 1, 6), rng("n", 1, 5), rng("m", 1, 4)}),
      [](const Point& p) {
        long n = p.l("n"), m = p.l("m");
        std::vector<R> values;
        for (long i = 0; i <= m; ++i) values.emplace_back(int_pow(p.i("x") + i, n));
        return forward_diff_seq(values, m).front();
      },
      [](const Point& p) {
        R x = p["x"];
        long n = p.l("n"), m = p.l("m");
        R sum = 0;
        for (long k = 0; k < m; ++k) sum += (x - k) * (gs(x + m - k, n) - gs(x + m - k + 1, n));
        return sum;
      },
      {"the index t is undefined; V_{n-1}(., t) is read as an interior entry, i.e. the geometric sum",
       "left side is the iterated forward difference; at m = 1 the printed bracket has the opposite sign "
       "of the first-difference formula"}));

  {
    IdentityRecord r = audited(
        "E2_30", "derivative as the h -> 0 limit of a V_{n-1} difference quotient",
        Domain({rng("x", 1, 5), rng("n", 1, 5),
                vals("h", {R(1, 10), R(1, 100), R(1, 1000), R(1, 10000), R(1, 100000), R(1, 1000000),
                           R(1, 10000000), R(1, 100000000)})}),
        [](const Point& p) {
          R x = p["x"], h = p["h"];
          long n = p.l("n");
          return (x * gs(x + h, n) - (x - h) * gs(x, n)) / h;
        },
        [](const Point& p) { return R(p.l("n")) * pw(p["x"], p.l("n") - 1); },
        {"the quotient is evaluated exactly at h = 10^-1 .. 10^-8; its analytic limit is "
         "sum_{i<n} (i+1) x^i, computed alongside"});
    r.analysis = [] {
      std::vector<std::string> notes;
      for (long x = 1; x <= 5; ++x) {
        for (long n = 1; n <= 5; ++n) {
          R limit = 0;
          for (long i = 0; i < n; ++i) limit += R((i + 1) * int_pow(x, i));
          R derivative = R(n) * pw(R(x), n - 1);
          if (limit == derivative) continue;
          notes.push_back("limit mismatch at (x=" + std::to_string(x) + ", n=" + std::to_string(n) +
                          "): quotient -> " + limit.str() + ", n*x^(n-1) = " + derivative.str() +
                          ", mismatch " + (limit - derivative).str());
        }
      }
      return notes;
    };
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<IdentityRecord> section_three() {
  std::vector<IdentityRecord> out;
  out.push_back(verified(
      "D3_2", "U(n,k) = 3! nk - 3! k^2 + 1",
      Domain({rng("n", 0, 40), rng("k", 0, 40)}, k_le_n, "k <= n"),
      [](const Point& p) { return U(p.i("n"), p.i("k")); },
      [](const Point& p) {
        I n = p.i("n"), k = p.i("k");
        return R(factorial(3) * n * k - factorial(3) * k * k + 1);
      }));

  out.push_back(verified(
      "D3_3", "U(n,k) = 3! nk - 3! n^0 k^2 + n^0",
      Domain({rng("n", 0, 40), rng("k", 0, 40)}, k_le_n, "k <= n"),
      [](const Point& p) { return U(p.i("n"), p.i("k")); },
      [](const Point& p) {
        I n = p.i("n"), k = p.i("k");
        return R(6 * n * k - 6 * int_pow(n, 0) * k * k + int_pow(n, 0));
      }));

  auto row_sum_record = [](std::string id, std::string citation, RowRange range, bool pair_one) {
    return verified(
        std::move(id), std::move(citation),
        Domain({rng("n", 0, 200), labeled("form", {R(1), R(2)}, {"cube", "AB"})},
               [](const Point& p) { return p.l("form") == 1 || p.l("n") >= 1; }, "AB form needs n >= 1"),
        [range](const Point& p) { return R(row_sum_u(p.i("n"), range)); },
        [pair_one](const Point& p) {
          I n = p.i("n");
          if (p.l("form") == 1) return R(int_pow(n, 3));
          auto [a, b] = ab_pair(n, pair_one ? 1 : 0);
          return R(a * n - b);
        });
  };
  out.push_back(row_sum_record("E3_5", "row sum of U over k = 0..n-1 is A_0 n - B_0 = n^3", RowRange::kExclLast, false));
  out.push_back(row_sum_record("E3_6", "row sum of U over k = 1..n is A_1 n - B_1 = n^3", RowRange::kExclFirst, true));

  out.push_back(verified(
      "E3_7", "full row sum of U is n^3 + 1", Domain({rng("n", 0, 200)}),
      [](const Point& p) { return R(row_sum_u(p.i("n"), RowRange::kInclLast)); },
      [](const Point& p) { return R(int_pow(p.i("n"), 3) + 1); }));

  out.push_back(verified(
      "P3_4_2", "A_{0,n+1} = A_{1,n}", Domain({rng("n", 1, 200)}),
      [](const Point& p) { return R(ab_coefficients(p.i("n") + 1).a0); },
      [](const Point& p) { return R(ab_coefficients(p.i("n")).a1); }));

  out.push_back(verified(
      "P3_4_3", "row sum over k = 0..n-1 scaled by n^{m-3} is n^m",
      Domain({rng("n", 1, 30), rng("m", 0, 8)}),
      [](const Point& p) { return u_row_sum(p.i("n"), 0, p.i("n") - 1) * pw(p["n"], p.l("m") - 3); },
      [](const Point& p) { return pw(p["n"], p.l("m")); }));

  out.push_back(verified(
      "P3_4_5", "full row sum scaled by n^{m-3} is n^m + n^{m-3}",
      Domain({rng("n", 1, 30), rng("m", 0, 8)}),
      [](const Point& p) { return u_row_sum(p.i("n"), 0, p.i("n")) * pw(p["n"], p.l("m") - 3); },
      [](const Point& p) { return pw(p["n"], p.l("m")) + pw(p["n"], p.l("m") - 3); }));

  out.push_back(verified(
      "E3_8", "U((n^2+n+2)/2, 1) is the first difference of n^3", Domain({rng("n", 0, 300)}),
      [](const Point& p) { return central(p.i("n")); }, [](const Point& p) { return cube_difference(p.i("n")); }));

  out.push_back(verified(
      "E3_9", "2U(n,k) = U(n+1,k) + U(n-1,k)", Domain({rng("n", 1, 300), rng("k", -50, 50)}),
      [](const Point& p) { return 2 * U(p.i("n"), p.i("k")); },
      [](const Point& p) { return U(p.i("n") + 1, p.i("k")) + U(p.i("n") - 1, p.i("k")); }));

  out.push_back(verified(
      "E3_10", "2U(n,k) = U(2n-k,k) + U(2n-k,0) for n > k",
      Domain({rng("n", 1, 300), rng("k", 0, 299)}, [](const Point& p) { return p.i("k") < p.i("n"); }, "k < n"),
      [](const Point& p) { return 2 * U(p.i("n"), p.i("k")); },
      [](const Point& p) {
        I row = 2 * p.i("n") - p.i("k");
        return U(row, p.i("k")) + U(row, 0);
      }));

  out.push_back(audited(
      "E3_11", "n^3 as n copies of U((n^2+n+2)/2, 1)", Domain({rng("n", 0, 30)}),
      [](const Point& p) { return R(int_pow(p.i("n"), 3)); },
      [](const Point& p) {
        R sum = 0;
        for (I k = 0; k < p.i("n"); k += 1) sum += central(p.i("n"));
        return sum;
      },
      {"the printed summand does not depend on k; with the running index k the sum telescopes to n^3"}));

  out.push_back(verified(
      "P3_4_11", "symmetry U(n,k) = U(n,n-k)", Domain({rng("n", 0, 300), rng("k", 0, 300)}, k_le_n, "k <= n"),
      [](const Point& p) { return U(p.i("n"), p.i("k")); },
      [](const Point& p) { return U(p.i("n"), p.i("n") - p.i("k")); }));

  out.push_back(verified(
      "P3_4_12", "A287326(n,k) = 6 A077028(n,k) - 5", Domain({rng("n", 0, 100), rng("k", 0, 100)}, k_le_n, "k <= n"),
      [](const Point& p) { return U(p.i("n"), p.i("k")); },
      [](const Point& p) {
        I n = p.i("n"), k = p.i("k");
        return R(6 * (n * k - k * k + 1) - 5);
      }));

  auto x_power_grid = [] { return Domain({rng("x", 1, 12), rng("n", 0, 8)}); };
  auto lhs_power = [](const Point& p) { return R(int_pow(p.i("x"), p.l("n"))); };
  auto scaled_sum = [](auto summand) {
    return [summand](const Point& p) {
      I x = p.i("x");
      R scale = pw(R(x), p.l("n") - 3);
      R sum = 0;
      for (I k = 0; k < x; k += 1) sum += summand(x, k) * scale;
      return sum;
    };
  };

  out.push_back(verified("E3_12A", "x^n as the U row sum scaled by x^{n-3}", x_power_grid(), lhs_power,
                         scaled_sum([](const I& x, const I& k) { return U(x, k); })));
  out.push_back(verified("E3_12N", "x^n through the linear recurrence in the row index", x_power_grid(), lhs_power,
                         scaled_sum([](const I& x, const I& k) { return kHalf * (U(x + 1, k) + U(x - 1, k)); })));
  out.push_back(verified("E3_12R", "x^n through the reflection recurrence", x_power_grid(), lhs_power,
                         scaled_sum([](const I& x, const I& k) { return kHalf * (U(2 * x - k, k) + U(2 * x - k, 0)); })));
  out.push_back(audited(
      "E3_12C", "x^n through the central polygonal row, as displayed", x_power_grid(), lhs_power,
      scaled_sum([](const I& x, const I&) { return kHalf * central(x); }),
      {"displayed summand (1/2)U((x^2+x+2)/2, 1) does not depend on k",
       "the code listing sums U((k^2+k+2)/2, 1) x^(n-3) over k without the 1/2; that reading equals x^n "
       "and is the u-central strategy"}));
  out.push_back(verified(
      "E3_12P", "x^n through the pair of rows (k^2+k)/2 and (k^2+k+4)/2", x_power_grid(), lhs_power,
      scaled_sum([](const I&, const I& k) { return central_pair(k); }),
      {"the display writes x where the code listing uses the running index k; evaluated with k"}));
  out.push_back(verified(
      "E3_12B", "x^n through binomial row indices C(k+1,2) and C(k+1,2) + C(2,1)", x_power_grid(), lhs_power,
      scaled_sum([](const I&, const I& k) {
        I row = binomial(k + 1, 2);
        return kHalf * (U(row, 1) + U(row + binomial(2, 1), 1));
      }),
      {"the display writes C(n+1,2); evaluated as C(k+1,2) = (k^2+k)/2 to match the preceding line"}));

  out.push_back(audited(
      "E3_13", "x^3 = sum_{m=1}^{x-1} 3! mx - 3! m^2 + x/(x-1), x != 1", Domain({rng("x", 2, 40)}),
      [](const Point& p) { return R(int_pow(p.i("x"), 3)); },
      [](const Point& p) {
        I x = p.i("x");
        R ratio(x, x - 1);
        R sum = 0;
        for (I m = 1; m < x; m += 1) sum += R(6 * m * x - 6 * m * m) + ratio;
        return sum;
      },
      {"x/(x-1) is evaluated exactly and read as part of each summand"}));

  out.push_back(audited(
      "E3_14", "x^n - 1 as a U row sum scaled by x^{n-3} plus x^{n-4} + ... + x + 1",
      Domain({rng("x", 2, 20), rng("n", 3, 10)}),
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n")) - 1); },
      [](const Point& p) {
        I x = p.i("x");
        long n = p.l("n");
        R sum = 0;
        for (I m = 1; m < x; m += 1) sum += U(x, m) * pw(R(x), n - 3);
        return sum + tail_geometric(x, n);
      },
      {"the tail x^{n-4} + ... + 1 is added once, as displayed; the code listing repeats it for every m",
       "right minus left equals (x^{n-3} - 1)/(x - 1) - (x^{n-3} - 1)"}));

  out.push_back(audited(
      "E3_15", "x^n - 1 through the recurrences, four displayed variants",
      Domain({rng("variant", 1, 4), rng("x", 2, 10), rng("n", 3, 8)}),
      [](const Point& p) { return R(int_pow(p.i("x"), p.l("n")) - 1); },
      [](const Point& p) {
        I x = p.i("x");
        long n = p.l("n");
        R scale = pw(R(x), n - 3);
        R sum = 0;
        switch (p.l("variant")) {
          case 1:
            for (I k = 1; k < x; k += 1) sum += kHalf * (U(2 * x - k, k) + U(2 * x - k, 0)) * scale;
            break;
          case 2:
            for (I k = 1; k < x; k += 1) sum += kHalf * (U(x + 1, k) + U(x - 1, k)) * scale;
            break;
          case 3:
            for (I m = 0; m < x; m += 1) sum += central_pair(m) * scale;
            break;
          default:
            for (I k = 1; k < x; k += 1) sum += central(k) * scale;
            break;
        }
        return sum + tail_geometric(x, n);
      },
      {"rows written with x inside the brackets are evaluated with the running index, as in the code listing",
       "variant 3 starts at m = 0 as displayed, which adds x^{n-3} relative to the other variants",
       "variants 1, 2 and 4 agree with the single-line form"}));

  out.push_back(non_evaluable(
      "E3_16_17", "x^n with the tails -1 - x^2 - x^3 - ... and -x^{n-2} - x^{n-1} - ...",
      "the infinite tails diverge for every integer x > 1; no partial sum is defined", {"E3_16", "E3_17"}));

  out.push_back(verified(
      "E3_18", "x^n = A x^{n-2} - B x^{n-3} for both coefficient pairs",
      Domain({rng("x", 1, 12), rng("n", 0, 10), rng("pair", 0, 1)}), lhs_power,
      [](const Point& p) { return gen_binomial_rhs(p.i("x"), p.l("n"), 1, p.l("pair")); }));

  out.push_back(verified(
      "E3_19", "x^n = A^2 x^{n-4} - 2AB x^{n-5} + B^2 x^{n-6}",
      Domain({rng("x", 1, 12), rng("n", 0, 10), rng("pair", 0, 1)}), lhs_power,
      [](const Point& p) {
        auto [a, b] = ab_pair(p.i("x"), p.l("pair"));
        R x = p["x"];
        long n = p.l("n");
        return R(a * a) * pw(x, n - 4) - R(2 * a * b) * pw(x, n - 5) + R(b * b) * pw(x, n - 6);
      }));

  out.push_back(verified(
      "E3_20", "j-fold recursion sum (-1)^k C(j,k) A^{j-k} B^k x^{n-2j-k}",
      Domain({rng("x", 1, 10), rng("n", 0, 10), rng("j", 1, 5), rng("pair", 0, 1)}), lhs_power,
      [](const Point& p) { return gen_binomial_rhs(p.i("x"), p.l("n"), p.l("j"), p.l("pair")); }));

  out.push_back(verified(
      "E3_21", "repeated recursion does not change the total (depth j against depth 1)",
      Domain({rng("x", 1, 10), rng("n", 0, 10), rng("j", 1, 8), rng("pair", 0, 1)}),
      [](const Point& p) { return gen_binomial_rhs(p.i("x"), p.l("n"), p.l("j"), p.l("pair")); },
      [](const Point& p) { return gen_binomial_rhs(p.i("x"), p.l("n"), 1, p.l("pair")); },
      {"the unbounded repetition is represented by finite depths j"}));

  {
    // x, A0, B0, A1, B1 as printed.
    static const long printed[10][5] = {
        {1, 1, 0, 6, 5},       {2, 6, 4, 18, 28},       {3, 18, 25, 36, 81},     {4, 36, 80, 60, 176},
        {5, 60, 175, 90, 325}, {6, 90, 324, 126, 540}, {7, 126, 539, 168, 833}, {8, 168, 832, 216, 1216},
        {9, 216, 1215, 270, 1701}, {10, 270, 1700, 330, 2300},
    };
    out.push_back(audited(
        "TAB9", "printed coefficients A, B against the constraint A x - B = x^3",
        Domain({rng("x", 1, 10), rng("pair", 0, 1)}),
        [](const Point& p) {
          const long* row = printed[p.l("x") - 1];
          long a = row[1 + 2 * p.l("pair")], b = row[2 + 2 * p.l("pair")];
          return R(I(a) * p.i("x") - I(b));
        },
        [](const Point& p) { return R(int_pow(p.i("x"), 3)); },
        {"erratum: B_0(3) is printed as 25; the constraint A_0 x - B_0 = x^3 forces 27 "
         "(closed form 2x^3 - 3x^2)",
         "the x = 1 row prints (A_0, B_0) = (1, 0) while the closed forms give (0, -1); both satisfy the "
         "constraint"}));
  }
  return out;
}

std::vector<IdentityRecord> section_four() {
  std::vector<IdentityRecord> out;
  out.push_back(non_evaluable(
      "E4_1", "e^x through the generalized x^n forms with infinite tails",
      "built on the divergent tails of the generalized x^n form; the inner sums have no finite value"));

  IdentityRecord r = audited(
      "E4_2", "e^x - e through the U row sum with the tail x^{n-4} + ... + 1, truncated",
      Domain({rng("x", 2, 6), rng("offset", 0, 1)}),
      [](const Point& p) { return exp_minus_e_partial(p.i("x"), e42_terms(p.i("x")), p.l("offset")); },
      [](const Point& p) { return exp_minus_e_reference(p.i("x"), e42_terms(p.i("x"))); },
      {"both sides are truncated at the N whose tail bound is below 1e-12 of the partial sum of e^x; "
       "a point passes when |lhs - rhs| <= 2 * tail bound",
       "for n in {0, 1, 2} the term (x^n - 1)/n! is used directly; the displayed inner form needs "
       "negative powers there",
       "right side is the independent sum of (x^n - 1)/n!",
       "outer offsets 0 and 1 give the same value because the n = 0 term is 0"});
  r.tolerance = [](const Point& p) {
    I x = p.i("x");
    return 2 * exp_tail_bound(x, e42_terms(x));
  };
  r.analysis = [] {
    std::vector<std::string> notes;
    for (long x = 2; x <= 6; ++x) {
      long n = e42_terms(x);
      R residual = exp_minus_e_partial(x, n, 0) - exp_minus_e_reference(x, n);
      notes.push_back("x=" + std::to_string(x) + ": N=" + std::to_string(n) + ", residual ~ " +
                      truncate_decimal(residual, 20).text);
    }
    return notes;
  };
  out.push_back(std::move(r));
  return out;
}

std::vector<IdentityRecord> section_five() {
  std::vector<IdentityRecord> out;
  out.push_back(verified(
      "E5_1", "Pascal row sums are 2^n", Domain({rng("n", 0, 64)}),
      [](const Point& p) { return binomial_sum(R(1), R(1), p.l("n")); },
      [](const Point& p) { return R(int_pow(2, p.l("n"))); }));

  out.push_back(verified(
      "E5_2", "row sums of C(n,k) 2^k are 3^n", Domain({rng("n", 0, 64)}),
      [](const Point& p) {
        R sum = 0;
        for (long k = 0; k <= p.l("n"); ++k) sum += R(triangle_entry(TriangleKind{TriangleTag::kScaledPascal2k}, p.l("n"), k));
        return sum;
      },
      [](const Point& p) { return R(int_pow(3, p.l("n"))); }));

  {
    static const Rows printed = {{1}, {1, 2}, {1, 4, 4}, {1, 6, 12, 8}, {1, 8, 24, 32, 16}};
    out.push_back(verified(
        "FIG10", "triangle of C(n,k) 2^k, rows 0 to 4", printed_rows_domain(printed),
        [](const Point& p) { return R(binomial(p.i("n"), p.i("k")) * int_pow(2, p.l("k"))); },
        [](const Point& p) { return printed_row_entry(printed, p); }));
  }

  out.push_back(verified(
      "E5_4", "hypercube volume m^n as a double binomial sum",
      Domain({rng("m", 1, 30), rng("n", 0, 12)}),
      [](const Point& p) { return R(int_pow(p.i("m"), p.l("n"))); },
      [](const Point& p) {
        R sum = 0;
        for (const auto& t : double_binomial_summands(p.i("m"), p.l("n"))) sum += t;
        return sum;
      }));

  auto binomial_power = [](std::string id, std::string citation, long lo, long hi, auto base, auto summand_base) {
    return verified(
        std::move(id), std::move(citation), Domain({rng("m", lo, hi), rng("n", 0, 12)}),
        [base](const Point& p) { return pw(base(p["m"]), p.l("n")); },
        [summand_base](const Point& p) {
          R sum = 0;
          for (long k = 0; k <= p.l("n"); ++k) sum += R(binomial(p.l("n"), k)) * pw(summand_base(p["m"]), k);
          return sum;
        });
  };
  out.push_back(verified(
      "E5_5", "2^n = sum C(n,k)(2-1)^k", Domain({rng("n", 0, 64)}),
      [](const Point& p) { return R(int_pow(2, p.l("n"))); },
      [](const Point& p) { return binomial_sum(R(1), R(2 - 1), p.l("n")); }));
  out.push_back(verified(
      "E5_6", "(2+1)^n = sum C(n,k)((2-1)+1)^k", Domain({rng("n", 0, 64)}),
      [](const Point& p) { return R(int_pow(2 + 1, p.l("n"))); },
      [](const Point& p) { return binomial_sum(R(1), R((2 - 1) + 1), p.l("n")); }));
  out.push_back(binomial_power("E5_7", "(x+1)^n = sum C(n,k) x^k", -5, 10,
                               [](const R& m) { return m + 1; }, [](const R& m) { return m; }));
  out.push_back(binomial_power("E5_8", "m^n = sum C(n,k)(m-1)^k", 0, 20,
                               [](const R& m) { return m; }, [](const R& m) { return m - 1; }));
  out.push_back(binomial_power("E5_9", "(m+1)^n = sum C(n,k) m^k", 0, 20,
                               [](const R& m) { return m + 1; }, [](const R& m) { return m; }));

  out.push_back(verified(
      "E5_10", "m^n = sum_k C(n,k) sum_j C(k,j)(-1)^{k-j} m^j", Domain({rng("m", 1, 30), rng("n", 0, 12)}),
      [](const Point& p) { return R(int_pow(p.i("m"), p.l("n"))); },
      [](const Point& p) {
        I m = p.i("m");
        long n = p.l("n");
        R outer = 0;
        for (long k = 0; k <= n; ++k) {
          I inner = 0;
          for (long j = 0; j <= k; ++j) {
            I t = binomial(k, j) * int_pow(m, j);
            inner += (k - j) % 2 == 0 ? t : -t;
          }
          outer += R(binomial(n, k) * inner);
        }
        return outer;
      },
      {"the sentence before the display writes (-1)^{n-k}; the display's (-1)^{k-j} is the sign that makes "
       "the inner sum (m-1)^k"}));

  {
    IdentityRecord r = audited(
        "E5_11", "k-face count of the generalized hypercube",
        Domain({rng("n", 0, 6), rng("k", 0, 6), vals("p", {R(2)})}, k_le_n, "k <= n"),
        [](const Point& p) { return R(face_count_claim(p.l("n"), p.l("k"), p.l("p"))); },
        [](const Point& p) { return R(binomial(p.i("n"), p.i("k")) * int_pow(2, p.l("n") - p.l("k"))); },
        {"the generalized hypercube is never defined; only p = 2 has an independent model, the n-cube "
         "with C(n,k) 2^{n-k} k-faces",
         "right side of the claim equals C(n,k)(p-2)^k by the binomial theorem"});
    r.analysis = [] {
      for (long n = 0; n <= 6; ++n) {
        for (long k = 0; k <= n; ++k) {
          for (long p = 1; p <= 5; ++p) {
            if (face_count_claim(n, k, p) != binomial(n, k) * int_pow(p - 2, k)) {
              return std::vector<std::string>{"closed form C(n,k)(p-2)^k disagrees at (n=" + std::to_string(n) +
                                              ", k=" + std::to_string(k) + ", p=" + std::to_string(p) + ")"};
            }
          }
        }
      }
      return std::vector<std::string>{"claim equals C(n,k)(p-2)^k for n <= 6, p in [1,5]"};
    };
    out.push_back(std::move(r));
  }

  out.push_back(non_evaluable(
      "E5_12", "x^n - 1 as n-times continued binomial summation, with the continued-fraction operator K",
      "the nested continued summation and the operator K are not defined precisely enough to evaluate"));

  out.push_back(verified(
      "APP2", "extended cube triangle rows 0 to 10 against the A287326 fixture",
      Domain({rng("n", 0, 10), rng("k", 0, 10)}, k_le_n, "k <= n"),
      [](const Point& p) { return U(p.i("n"), p.i("k")); },
      [](const Point& p) { return triangle_fixture("A287326", p); }));
  return out;
}

}  // namespace

const std::vector<IdentityRecord>& registry() {
  static const std::vector<IdentityRecord> records = [] {
    std::vector<IdentityRecord> all;
    for (auto part : {section_one, section_two, section_three, section_four, section_five}) {
      for (auto& r : part()) all.push_back(std::move(r));
    }
    std::sort(all.begin(), all.end(), [](const IdentityRecord& a, const IdentityRecord& b) { return a.id < b.id; });
    return all;
  }();
  return records;
}

const std::vector<OutOfScope>& out_of_scope() {
  static const std::vector<OutOfScope> entries = {
      {"APP1", "code listings for the main expressions",
       "used to disambiguate displayed formulas; not an identity of its own"},
      {"FUT", "future research directions", "no statement to evaluate"},
      {"P1_1", "list of binomial theorem properties", "prose description of the binomial expansion"},
      {"P3_4_7", "items of the cube triangle have a binomial distribution over rows",
       "statistical claim with no stated test or parameters"},
      {"Q1_18", "question on connections with Pascal, Stirling or Euler triangles", "a question, not a claim"},
  };
  return entries;
}

}  // namespace powerexp
