#include <algorithm>
#include <optional>

#include "powerexp/audit.hpp"

namespace powerexp {

namespace {

// A single-variable condition var in values[lo..hi].
struct Atom {
  std::size_t var = 0;
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<std::size_t> members;  // point indices
};

bool integer_run(const DomainVar& v, std::size_t lo, std::size_t hi) {
  if (!v.labels.empty()) return false;
  for (std::size_t i = lo; i <= hi; ++i) {
    if (!v.values[i].is_integer() || v.values[i] != v.values[lo] + ExactRat(static_cast<long>(i - lo))) return false;
  }
  return true;
}

std::string describe(const Domain& domain, const Atom& a) {
  const DomainVar& v = domain.vars()[a.var];
  if (a.lo == a.hi) return v.name + "=" + v.label(a.lo);
  if (integer_run(v, a.lo, a.hi)) return v.name + " in [" + v.label(a.lo) + "," + v.label(a.hi) + "]";
  std::string out = v.name + " in {";
  for (std::size_t i = a.lo; i <= a.hi; ++i) out += (i == a.lo ? "" : ",") + v.label(i);
  return out + "}";
}

// Maximal runs of values whose points all lie in `target`.
std::vector<Atom> atoms_within(const Domain& domain, const std::vector<Point>& points,
                               const std::vector<bool>& target) {
  std::vector<Atom> atoms;
  for (std::size_t j = 0; j < domain.vars().size(); ++j) {
    const std::size_t count = domain.vars()[j].values.size();
    std::vector<std::vector<std::size_t>> groups(count);
    for (std::size_t i = 0; i < points.size(); ++i) groups[points[i].index()[j]].push_back(i);

    std::optional<Atom> run;
    auto close = [&] {
      if (run && !run->members.empty()) atoms.push_back(std::move(*run));
      run.reset();
    };
    for (std::size_t v = 0; v < count; ++v) {
      const auto& g = groups[v];
      if (g.empty()) continue;  // constrained away; neither extends nor breaks a run
      bool inside = std::all_of(g.begin(), g.end(), [&](std::size_t i) { return target[i]; });
      if (!inside) {
        close();
        continue;
      }
      if (!run) run = Atom{j, v, v, {}};
      run->hi = v;
      run->members.insert(run->members.end(), g.begin(), g.end());
    }
    close();
  }
  return atoms;
}

// Greedy cover of the target set with at most `limit` atoms.
std::optional<std::vector<Atom>> cover(const Domain& domain, const std::vector<Point>& points,
                                       const std::vector<bool>& target, std::size_t limit) {
  std::vector<Atom> atoms = atoms_within(domain, points, target);
  std::vector<bool> covered(points.size(), false);
  std::size_t remaining = static_cast<std::size_t>(std::count(target.begin(), target.end(), true));
  std::vector<Atom> chosen;
  while (remaining > 0 && chosen.size() < limit) {
    std::size_t best = atoms.size();
    std::size_t best_gain = 0;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      std::size_t gain = 0;
      for (std::size_t i : atoms[a].members) gain += covered[i] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = a;
      }
    }
    if (best == atoms.size()) break;
    for (std::size_t i : atoms[best].members) covered[i] = true;
    remaining -= best_gain;
    chosen.push_back(atoms[best]);
  }
  if (remaining > 0) return std::nullopt;
  return chosen;
}

std::string join_atoms(const Domain& domain, const std::vector<Atom>& atoms) {
  std::string out;
  for (const auto& a : atoms) out += (out.empty() ? "" : " or ") + describe(domain, a);
  return out;
}

std::string list_points(const std::vector<Point>& points, const std::vector<bool>& passed, bool want) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (passed[i] != want) continue;
    out += (out.empty() ? "(" : ", (") + points[i].str() + ")";
  }
  return out;
}

std::string tested(std::size_t n) { return std::to_string(n) + (n == 1 ? " tested point" : " tested points"); }

}  // namespace

std::string validity_summary(const Domain& domain, const std::vector<Point>& points,
                             const std::vector<bool>& passed) {
  const std::string scope = " (on tested grid)";
  const std::size_t total = points.size();
  if (total == 0) return "no points tested";
  const auto pass_count = static_cast<std::size_t>(std::count(passed.begin(), passed.end(), true));
  const std::size_t fail_count = total - pass_count;
  if (fail_count == 0) return "holds on all " + tested(total);
  if (pass_count == 0) return "fails on all " + tested(total);

  std::vector<bool> failed(total);
  for (std::size_t i = 0; i < total; ++i) failed[i] = !passed[i];

  if (auto c = cover(domain, points, passed, 2)) return "holds iff " + join_atoms(domain, *c) + scope;
  if (auto c = cover(domain, points, failed, 2)) return "fails iff " + join_atoms(domain, *c) + scope;
  if (fail_count <= 3) return "fails only at " + list_points(points, passed, false) + scope;
  if (pass_count <= 3) return "holds only at " + list_points(points, passed, true) + scope;
  if (auto c = cover(domain, points, passed, 3)) return "holds iff " + join_atoms(domain, *c) + scope;
  if (auto c = cover(domain, points, failed, 3)) return "fails iff " + join_atoms(domain, *c) + scope;
  return "holds at " + std::to_string(pass_count) + " of " + tested(total) + scope;
}

}  // namespace powerexp
