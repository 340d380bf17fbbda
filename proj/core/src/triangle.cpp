#include "powerexp/triangle.hpp"

#include <stdexcept>
#include <thread>

namespace powerexp {

TriangleKind TriangleKind::v(long m) {
  if (m < 0) throw DomainError("V triangle order must be >= 0");
  return TriangleKind{TriangleTag::kVTriangle, m};
}

TriangleKind TriangleKind::parse(std::string_view name) {
  if (name == "u") return {TriangleTag::kUTriangle, 0};
  if (name == "pascal") return {TriangleTag::kPascal, 0};
  if (name == "rascal") return {TriangleTag::kRascal, 0};
  if (name == "scaled-pascal") return {TriangleTag::kScaledPascal2k, 0};
  if (name == "reduced-1") return {TriangleTag::kReduced1, 0};
  if (name == "reduced-2") return {TriangleTag::kReduced2, 0};
  if (name == "ones") return {TriangleTag::kOnes, 0};
  if (name.starts_with("v:")) {
    auto order = ExactInt::parse(name.substr(2));
    if (order.sign() < 0 || !order.fits_long()) {
      throw std::invalid_argument("bad V triangle order in '" + std::string(name) + "'");
    }
    return v(order.to_long());
  }
  throw std::invalid_argument("unknown triangle kind '" + std::string(name) + "'");
}

std::string TriangleKind::name() const {
  switch (tag) {
    case TriangleTag::kUTriangle: return "u";
    case TriangleTag::kPascal: return "pascal";
    case TriangleTag::kRascal: return "rascal";
    case TriangleTag::kScaledPascal2k: return "scaled-pascal";
    case TriangleTag::kVTriangle: return "v:" + std::to_string(m);
    case TriangleTag::kReduced1: return "reduced-1";
    case TriangleTag::kReduced2: return "reduced-2";
    case TriangleTag::kOnes: return "ones";
  }
  return "?";
}

ExactInt u_coeff(const ExactInt& n, const ExactInt& k) {
  return ExactInt(6) * n * k - ExactInt(6) * k * k + 1;
}

ExactInt v_coeff(long m, const ExactInt& n, const ExactInt& k) {
  if (m < 0) throw DomainError("V_M requires M >= 0");
  if (k.sign() < 0 || k > n) throw DomainError("V_M(n,k) requires 0 <= k <= n");
  if (k.is_zero() || k == n) return 1;
  ExactInt sum = 0;
  ExactInt power = 1;
  for (long i = 0; i <= m; ++i) {
    sum += power;
    power *= n;
  }
  return sum;
}

ExactInt rascal_coeff(const ExactInt& n, const ExactInt& k) {
  return exact_div(u_coeff(n, k) + 5, 6);
}

ExactInt triangle_entry(const TriangleKind& kind, long n, long k) {
  if (n < 0 || k < 0 || k > n) throw DomainError("triangle entry requires 0 <= k <= n");
  const bool boundary = k == 0 || k == n;
  switch (kind.tag) {
    case TriangleTag::kUTriangle: return u_coeff(n, k);
    case TriangleTag::kPascal: return binomial(n, k);
    case TriangleTag::kRascal: return rascal_coeff(n, k);
    case TriangleTag::kScaledPascal2k: return binomial(n, k) * int_pow(2, k);
    case TriangleTag::kVTriangle: return v_coeff(kind.m, n, k);
    case TriangleTag::kReduced1:
      if (boundary) return 1;
      return u_coeff(n, k) - int_pow(n, 2);
    case TriangleTag::kReduced2:
      if (boundary) return 1;
      return u_coeff(n, k) - int_pow(n, 2) - ExactInt(n);
    case TriangleTag::kOnes: return 1;
  }
  throw std::logic_error("unhandled triangle kind");
}

TriangleRow triangle_row(const TriangleKind& kind, long n) {
  if (n < 0) throw DomainError("triangle row index must be >= 0");
  TriangleRow row{kind, n, {}};
  row.entries.reserve(static_cast<std::size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) row.entries.push_back(triangle_entry(kind, n, k));
  return row;
}

std::vector<TriangleRow> triangle_rows(const TriangleKind& kind, long last, unsigned parallelism) {
  if (last < 0) throw DomainError("row count must be >= 0");
  std::vector<TriangleRow> rows(static_cast<std::size_t>(last) + 1);
  auto work = [&](unsigned lane, unsigned lanes) {
    for (long n = lane; n <= last; n += lanes) rows[static_cast<std::size_t>(n)] = triangle_row(kind, n);
  };
  if (parallelism <= 1) {
    work(0, 1);
    return rows;
  }
  std::vector<std::jthread> threads;
  for (unsigned lane = 0; lane < parallelism; ++lane) threads.emplace_back(work, lane, parallelism);
  return rows;
}

ExactInt row_sum_u(const ExactInt& n, RowRange range) {
  if (n.sign() < 0) throw DomainError("row_sum_u requires n >= 0");
  ExactInt lo = range == RowRange::kExclFirst ? ExactInt(1) : ExactInt(0);
  ExactInt hi = range == RowRange::kExclLast ? n - 1 : n;
  ExactInt sum = 0;
  for (ExactInt k = lo; k <= hi; k += 1) sum += u_coeff(n, k);
  return sum;
}

ABCoefficients ab_coefficients(const ExactInt& x) {
  if (x < 1) throw DomainError("ab_coefficients requires x >= 1");
  ExactInt x2 = x * x;
  ExactInt x3 = x2 * x;
  ABCoefficients ab{x, 3 * x2 - 3 * x, 2 * x3 - 3 * x2, 3 * x2 + 3 * x, 2 * x3 + 3 * x2};
  if (ab.a0 * x - ab.b0 != x3 || ab.a1 * x - ab.b1 != x3) {
    throw std::logic_error("ab_coefficients: closed forms violate A*x - B = x^3");
  }
  return ab;
}

ExactInt central_polygonal_pointer(const ExactInt& n) {
  if (n.sign() < 0) throw DomainError("central_polygonal_pointer requires n >= 0");
  ExactInt row = exact_div(n * n + n + 2, 2);
  ExactInt value = u_coeff(row, 1);
  if (value != int_pow(n + 1, 3) - int_pow(n, 3)) {
    throw std::logic_error("central polygonal row does not yield the cube difference");
  }
  return value;
}

ExactInt iteration_set_sum(const ExactInt& x, IterationSet set, SumForm form) {
  if (x < 1) throw DomainError("iteration_set_sum requires x >= 1");
  if (form == SumForm::kTForm && set == IterationSet::kB) {
    throw DomainError("the T-form sum is only stated over sets A and C");
  }
  ExactInt lo = set == IterationSet::kA ? ExactInt(1) : ExactInt(0);
  ExactInt hi = set == IterationSet::kC ? x - 1 : x;
  ExactInt sum = 0;
  if (form == SumForm::kTForm) {
    for (ExactInt m = lo; m <= hi; m += 1) sum += u_coeff(x, m);
    return sum;
  }
  for (ExactInt m = lo; m <= hi; m += 1) sum += m * x - m * m;
  return x + 6 * sum;
}

}  // namespace powerexp
