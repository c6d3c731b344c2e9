#include "tropmat/matroid.hpp"

#include <algorithm>
#include <numeric>

#include "tropmat/budget.hpp"
#include "tropmat/error.hpp"

namespace tropmat {

Matroid::Matroid(int n, std::vector<Subset> circuits)
    : n_(n), circuits_(std::move(circuits)) {
  std::sort(circuits_.begin(), circuits_.end());
  circuits_.erase(std::unique(circuits_.begin(), circuits_.end()),
                  circuits_.end());
}

Matroid Matroid::from_circuits(int n, std::vector<Subset> circuits,
                               bool trusted) {
  if (n < 0 || n > 64)
    fail(ErrorCode::GroundSetTooLarge, "ground set size must be in 0..64");
  Subset universe = Subset::full(n);
  for (Subset c : circuits) {
    if (!c.subset_of(universe))
      fail(ErrorCode::InvalidArgument,
           "circuit " + c.str() + " leaves the ground set");
    if (c.empty())
      fail(ErrorCode::InvalidArgument, "the empty set cannot be a circuit");
  }
  Matroid m(n, std::move(circuits));
  if (trusted) return m;

  const auto& cs = m.circuits_;
  for (size_t a = 0; a < cs.size(); ++a)
    for (size_t b = 0; b < cs.size(); ++b)
      if (a != b && cs[a].subset_of(cs[b]))
        fail(ErrorCode::ComparabilityViolation,
             "circuit " + cs[a].str() + " is contained in " + cs[b].str());

  for (size_t a = 0; a < cs.size(); ++a)
    for (size_t b = a + 1; b < cs.size(); ++b) {
      Subset common = cs[a] & cs[b];
      for (int e : common.elements()) {
        Subset target = (cs[a] | cs[b]).without(e);
        bool found = std::any_of(cs.begin(), cs.end(), [&](Subset c) {
          return c.subset_of(target);
        });
        if (!found)
          fail(ErrorCode::EliminationViolation,
               "no circuit inside (" + cs[a].str() + " u " + cs[b].str() +
                   ") minus element " + std::to_string(e + 1));
      }
    }
  return m;
}

bool Matroid::has_loops() const {
  return std::any_of(circuits_.begin(), circuits_.end(),
                     [](Subset c) { return c.count() == 1; });
}

bool Matroid::is_independent(Subset s) const {
  return std::none_of(circuits_.begin(), circuits_.end(),
                      [&](Subset c) { return c.subset_of(s); });
}

int Matroid::rank(Subset s) const {
  Subset indep;
  for (int e : s.elements())
    if (is_independent(indep.with(e))) indep = indep.with(e);
  return indep.count();
}

Subset Matroid::closure(Subset s) const {
  int r = rank(s);
  Subset out = s;
  for (int e = 0; e < n_; ++e)
    if (!s.contains(e) && rank(s.with(e)) == r) out = out.with(e);
  return out;
}

bool Matroid::is_flat(Subset s) const { return closure(s) == s; }

std::vector<Subset> Matroid::all_flats() const {
  check_enum_guard(n_);
  std::vector<Subset> flats;
  const std::uint64_t total = std::uint64_t{1} << n_;
  for (std::uint64_t x = 0; x < total; ++x) {
    Subset s(x);
    // S is a flat iff no circuit has exactly one element outside S.
    bool flat = std::none_of(circuits_.begin(), circuits_.end(), [&](Subset c) {
      return (c - s).count() == 1;
    });
    if (flat) flats.push_back(s);
  }
  return flats;
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  int n = m1.size() + m2.size();
  if (n > 64)
    fail(ErrorCode::GroundSetTooLarge, "direct sum exceeds 64 elements");
  std::vector<Subset> circuits = m1.circuits();
  for (Subset c : m2.circuits())
    circuits.push_back(Subset(c.bits << m1.size()));
  // Union of two valid circuit families over disjoint ground sets
  // satisfies both axioms; no recheck needed.
  return Matroid::from_circuits(n, std::move(circuits), /*trusted=*/true);
}

std::vector<Subset> components(const Matroid& m) {
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset c : m.circuits()) {
    auto elems = c.elements();
    for (size_t i = 1; i < elems.size(); ++i) {
      int a = find(elems[0]), b = find(elems[i]);
      if (a != b) parent[b] = a;
    }
  }
  std::vector<Subset> blocks(m.size());
  for (int e = 0; e < m.size(); ++e) blocks[find(e)] = blocks[find(e)].with(e);
  std::vector<Subset> out;
  for (int e = 0; e < m.size(); ++e)
    if (!blocks[e].empty()) out.push_back(blocks[e]);
  return out;
}

SimplifyResult simplify(const Matroid& m) {
  const int n = m.size();
  Subset loops;
  for (Subset c : m.circuits())
    if (c.count() == 1) loops = loops | c;

  // Parallel classes among non-loop elements, via union-find on 2-circuits.
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (Subset c : m.circuits())
    if (c.count() == 2 && (c & loops).empty()) {
      auto e = c.elements();
      int a = find(e[0]), b = find(e[1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::vector<int> element_map(n, -1);
  std::vector<int> new_index(n, -1);
  int next = 0;
  for (int e = 0; e < n; ++e) {
    if (loops.contains(e)) continue;
    int rep = find(e);
    if (new_index[rep] < 0) new_index[rep] = next++;
    element_map[e] = new_index[rep];
  }

  std::vector<Subset> circuits;
  for (Subset c : m.circuits()) {
    if (c.count() <= 2) continue;  // loops and parallel pairs vanish
    Subset image;
    for (int e : c.elements()) image = image.with(element_map[e]);
    circuits.push_back(image);
  }
  // Images of distinct >=3 circuits may coincide; from_circuits dedups.
  Matroid simple = Matroid::from_circuits(next, std::move(circuits),
                                          /*trusted=*/true);
  return SimplifyResult{std::move(simple), std::move(element_map)};
}

Subset paste(Subset c1, Subset c2) {
  if ((c1 & c2).count() != 1)
    fail(ErrorCode::IntersectionNotSingleton,
         "paste requires |C1 n C2| = 1, got " + (c1 & c2).str());
  return c1 ^ c2;
}

}  // namespace tropmat
