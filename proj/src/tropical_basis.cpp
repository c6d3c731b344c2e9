#include "tropmat/tropical_basis.hpp"

#include <algorithm>
#include <iostream>

#include "tropmat/budget.hpp"
#include "tropmat/error.hpp"

namespace tropmat {

bool excludes(Subset circuit, ZeroOnePoint x) {
  int zeros = (circuit - x).count();
  if (zeros == 1) return true;
  // A singleton circuit's minimum is always attained once.
  return zeros == 0 && circuit.count() == 1;
}

bool excludes_real(Subset circuit, std::span<const Rational> x) {
  if (circuit.empty())
    fail(ErrorCode::InvalidArgument, "empty circuit");
  int attained = 0;
  const Rational* min = nullptr;
  for (int e : circuit.elements()) {
    const Rational& v = x[static_cast<size_t>(e)];
    if (!min || v < *min) {
      min = &v;
      attained = 1;
    } else if (v == *min) {
      ++attained;
    }
  }
  return attained == 1;
}

ZeroOnePoint zero_one_reduction(Subset circuit, std::span<const Rational> x) {
  if (!excludes_real(circuit, x))
    fail(ErrorCode::NotExcluded,
         "the circuit's minimum is not attained uniquely");
  const Rational* m = nullptr;
  for (int e : circuit.elements()) {
    const Rational& v = x[static_cast<size_t>(e)];
    if (!m || v < *m) m = &v;
  }
  ZeroOnePoint v;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] > *m) v = v.with(static_cast<int>(i));
  return v;
}

namespace {

void warn_on_loops(const Matroid& m) {
  if (m.has_loops())
    std::cerr << "warning: matroid has singleton circuits (loops); "
                 "tropical-basis semantics follow the exclusion rule, "
                 "not the simple-matroid theory\n";
}

/// For every 0/1 point excluded by at least one circuit, the indices of
/// the excluding circuits. Points excluded by nothing are irrelevant to
/// basis questions.
struct ExclusionTable {
  std::vector<ZeroOnePoint> points;
  std::vector<std::vector<int>> excluders;  // parallel to points
};

ExclusionTable exclusion_table(const Matroid& m) {
  check_enum_guard(m.size());
  ExclusionTable t;
  const auto& cs = m.circuits();
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    ZeroOnePoint x(bits);
    std::vector<int> ex;
    for (int ci = 0; ci < static_cast<int>(cs.size()); ++ci)
      if (excludes(cs[ci], x)) ex.push_back(ci);
    if (!ex.empty()) {
      t.points.push_back(x);
      t.excluders.push_back(std::move(ex));
    }
  }
  return t;
}

std::vector<int> family_indices(const Matroid& m,
                                std::span<const Subset> family) {
  const auto& cs = m.circuits();
  std::vector<int> idx;
  for (Subset b : family) {
    auto it = std::lower_bound(cs.begin(), cs.end(), b);
    if (it == cs.end() || *it != b)
      fail(ErrorCode::NotSubfamily,
           b.str() + " is not a circuit of the matroid");
    idx.push_back(static_cast<int>(it - cs.begin()));
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

}  // namespace

std::vector<ZeroOnePoint> variety_points_01(const Matroid& m) {
  check_enum_guard(m.size());
  std::vector<ZeroOnePoint> out;
  const auto& cs = m.circuits();
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    ZeroOnePoint x(bits);
    bool excluded = std::any_of(cs.begin(), cs.end(),
                                [&](Subset c) { return excludes(c, x); });
    if (!excluded) out.push_back(x);
  }
  return out;
}

bool is_tropical_basis(const Matroid& m, std::span<const Subset> family) {
  warn_on_loops(m);
  std::vector<int> idx = family_indices(m, family);
  std::vector<char> in_family(m.circuits().size(), 0);
  for (int i : idx) in_family[i] = 1;

  check_enum_guard(m.size());
  const auto& cs = m.circuits();
  const std::uint64_t total = std::uint64_t{1} << m.size();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    ZeroOnePoint x(bits);
    bool covered = false, excluded = false;
    for (int ci = 0; ci < static_cast<int>(cs.size()); ++ci) {
      if (!excludes(cs[ci], x)) continue;
      excluded = true;
      if (in_family[ci]) {
        covered = true;
        break;
      }
    }
    if (excluded && !covered) return false;
  }
  return true;
}

NecessaryCircuits necessary_circuits(const Matroid& m) {
  warn_on_loops(m);
  ExclusionTable t = exclusion_table(m);
  NecessaryCircuits out;
  for (size_t p = 0; p < t.points.size(); ++p) {
    if (t.excluders[p].size() != 1) continue;
    Subset c = m.circuits()[static_cast<size_t>(t.excluders[p][0])];
    auto [it, fresh] = out.witnesses.insert({c, t.points[p]});
    if (fresh) out.circuits.push_back(c);
    // Points come in lexicographic order, so the first witness is kept.
  }
  std::sort(out.circuits.begin(), out.circuits.end());
  return out;
}

BasisReport minimal_basis_greedy(const Matroid& m,
                                 std::span<const Subset> order) {
  warn_on_loops(m);
  std::vector<Subset> removal_order(order.begin(), order.end());
  family_indices(m, removal_order);  // validates the subfamily
  // Removal attempts follow the caller's order; circuits it omits are
  // tried afterwards in lexicographic order.
  std::vector<int> try_order;
  const auto& cs = m.circuits();
  for (Subset s : removal_order) {
    int ci = static_cast<int>(std::lower_bound(cs.begin(), cs.end(), s) -
                              cs.begin());
    if (std::find(try_order.begin(), try_order.end(), ci) == try_order.end())
      try_order.push_back(ci);
  }
  for (int ci = 0; ci < static_cast<int>(cs.size()); ++ci)
    if (std::find(try_order.begin(), try_order.end(), ci) == try_order.end())
      try_order.push_back(ci);

  ExclusionTable t = exclusion_table(m);
  std::vector<std::vector<int>> points_of(m.circuits().size());
  for (int p = 0; p < static_cast<int>(t.points.size()); ++p)
    for (int ci : t.excluders[static_cast<size_t>(p)])
      points_of[static_cast<size_t>(ci)].push_back(p);
  std::vector<int> cover(t.points.size());
  for (size_t p = 0; p < t.points.size(); ++p)
    cover[p] = static_cast<int>(t.excluders[p].size());

  std::vector<char> kept(m.circuits().size(), 1);
  for (int ci : try_order) {
    bool removable = std::all_of(
        points_of[static_cast<size_t>(ci)].begin(),
        points_of[static_cast<size_t>(ci)].end(),
        [&](int p) { return cover[static_cast<size_t>(p)] >= 2; });
    if (removable) {
      kept[static_cast<size_t>(ci)] = 0;
      for (int p : points_of[static_cast<size_t>(ci)])
        --cover[static_cast<size_t>(p)];
    }
  }

  BasisReport report;
  report.certified_minimal = true;
  for (int ci = 0; ci < static_cast<int>(m.circuits().size()); ++ci) {
    if (!kept[static_cast<size_t>(ci)]) continue;
    Subset c = m.circuits()[static_cast<size_t>(ci)];
    report.basis.push_back(c);
    for (int p : points_of[static_cast<size_t>(ci)])
      if (cover[static_cast<size_t>(p)] == 1) {
        report.witnesses[c] = t.points[static_cast<size_t>(p)];
        break;
      }
  }
  return report;
}

namespace {

/// Deduplicated set-cover instance: one element per distinct excluder set,
/// dominated (superset) excluder sets dropped.
struct CoverInstance {
  std::vector<std::vector<int>> elements;  // candidate circuits per element
};

CoverInstance cover_instance(const ExclusionTable& t) {
  std::vector<std::vector<int>> sets = t.excluders;
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  CoverInstance inst;
  for (size_t a = 0; a < sets.size(); ++a) {
    bool dominated = false;
    for (size_t b = 0; b < sets.size() && !dominated; ++b)
      if (a != b && std::includes(sets[a].begin(), sets[a].end(),
                                  sets[b].begin(), sets[b].end()) &&
          sets[a] != sets[b])
        dominated = true;
    if (!dominated) inst.elements.push_back(sets[a]);
  }
  return inst;
}

struct CoverSearch {
  const CoverInstance& inst;
  std::vector<int> best;  // circuit indices; empty = none yet
  bool have_best = false;
  std::vector<int> chosen;
  std::uint64_t nodes = 0;

  explicit CoverSearch(const CoverInstance& i) : inst(i) {}

  bool better_than_best(const std::vector<int>& cand) const {
    if (!have_best) return true;
    if (cand.size() != best.size()) return cand.size() < best.size();
    return cand < best;
  }

  void run() {
    std::vector<char> covered(inst.elements.size(), 0);
    descend(covered, 0);
  }

  void descend(std::vector<char>& covered, int covered_count) {
    if (++nodes > Budget::max_search_nodes())
      fail(ErrorCode::SearchBudgetExceeded, "set-cover node budget exceeded");
    if (covered_count == static_cast<int>(inst.elements.size())) {
      std::vector<int> cand = chosen;
      std::sort(cand.begin(), cand.end());
      if (better_than_best(cand)) {
        best = cand;
        have_best = true;
      }
      return;
    }
    if (have_best && chosen.size() + 1 > best.size()) return;  // bound
    // Branch on the uncovered element with fewest candidates.
    int pick = -1;
    for (int e = 0; e < static_cast<int>(inst.elements.size()); ++e) {
      if (covered[static_cast<size_t>(e)]) continue;
      if (pick < 0 || inst.elements[static_cast<size_t>(e)].size() <
                          inst.elements[static_cast<size_t>(pick)].size())
        pick = e;
    }
    for (int ci : inst.elements[static_cast<size_t>(pick)]) {
      if (std::find(chosen.begin(), chosen.end(), ci) != chosen.end())
        continue;
      chosen.push_back(ci);
      std::vector<int> newly;
      for (int e = 0; e < static_cast<int>(inst.elements.size()); ++e) {
        if (covered[static_cast<size_t>(e)]) continue;
        const auto& cand = inst.elements[static_cast<size_t>(e)];
        if (std::binary_search(cand.begin(), cand.end(), ci)) {
          covered[static_cast<size_t>(e)] = 1;
          newly.push_back(e);
        }
      }
      descend(covered, covered_count + static_cast<int>(newly.size()));
      for (int e : newly) covered[static_cast<size_t>(e)] = 0;
      chosen.pop_back();
    }
  }
};

}  // namespace

BasisReport minimum_basis_exact(const Matroid& m) {
  warn_on_loops(m);
  ExclusionTable t = exclusion_table(m);
  CoverInstance inst = cover_instance(t);
  CoverSearch search(inst);
  search.run();

  BasisReport report;
  report.certified_minimal = true;
  std::vector<char> in_basis(m.circuits().size(), 0);
  for (int ci : search.best) in_basis[static_cast<size_t>(ci)] = 1;
  for (int ci : search.best)
    report.basis.push_back(m.circuits()[static_cast<size_t>(ci)]);
  std::sort(report.basis.begin(), report.basis.end());
  // A cardinality-minimum basis is inclusion-minimal: each member covers
  // some point no other member covers.
  for (size_t p = 0; p < t.points.size(); ++p) {
    int sole = -1, count = 0;
    for (int ci : t.excluders[p])
      if (in_basis[static_cast<size_t>(ci)]) {
        sole = ci;
        if (++count > 1) break;
      }
    if (count == 1) {
      Subset c = m.circuits()[static_cast<size_t>(sole)];
      report.witnesses.emplace(c, t.points[p]);
    }
  }
  return report;
}

bool has_unique_minimal_basis(const Matroid& m) {
  NecessaryCircuits nec = necessary_circuits(m);
  return is_tropical_basis(m, nec.circuits);
}

bool pasting_generates(std::span<const Subset> family, const Matroid& m) {
  std::vector<int> idx = family_indices(m, family);  // validates subfamily
  std::vector<Subset> known(family.begin(), family.end());
  std::sort(known.begin(), known.end());
  known.erase(std::unique(known.begin(), known.end()), known.end());
  const auto& cs = m.circuits();

  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t a = 0; a < known.size() && !grew; ++a)
      for (size_t b = a + 1; b < known.size() && !grew; ++b) {
        if ((known[a] & known[b]).count() != 1) continue;
        Subset pasted = known[a] ^ known[b];
        if (!std::binary_search(cs.begin(), cs.end(), pasted)) continue;
        auto it = std::lower_bound(known.begin(), known.end(), pasted);
        if (it == known.end() || *it != pasted) {
          known.insert(it, pasted);
          grew = true;
        }
      }
  }
  return known.size() == cs.size() &&
         std::equal(known.begin(), known.end(), cs.begin());
}

Rational uniform_lower_bound(int d, int n) {
  if (d < 0 || d > n) fail(ErrorCode::InvalidArgument, "need 0 <= d <= n");
  Rational bound(binomial(n, d), static_cast<unsigned long>(d) + 1);
  bound.canonicalize();
  return bound;
}

}  // namespace tropmat
