#pragma once

#include <map>
#include <span>
#include <vector>

#include "tropmat/matroid.hpp"
#include "tropmat/rational.hpp"
#include "tropmat/subset.hpp"

namespace tropmat {

/// A 0/1 point on the ground set: bitmask of the coordinates with value 1.
/// Its support (the 1-coordinates) is what the flat criterion looks at.
using ZeroOnePoint = Subset;

/// True iff the minimum of x over the circuit is attained exactly once:
/// exactly one zero coordinate inside the circuit, or a singleton circuit
/// (whose minimum is always unique).
bool excludes(Subset circuit, ZeroOnePoint x);

/// True iff the minimum of {x_i : i in circuit} is attained exactly once.
bool excludes_real(Subset circuit, std::span<const Rational> x);

/// The 0/1 reduction of the proof of the 0/1 lemma: v_i = 1 if x_i > m,
/// 0 if x_i <= m, where m is the unique minimum of x over the circuit.
/// Throws NotExcluded if excludes_real(circuit, x) fails.
ZeroOnePoint zero_one_reduction(Subset circuit, std::span<const Rational> x);

/// All 0/1 points whose support is a flat; equivalently the points no
/// circuit excludes. Guarded by Budget.
std::vector<ZeroOnePoint> variety_points_01(const Matroid& m);

/// True iff every 0/1 point excluded by some circuit of m is excluded by
/// some member of family. Throws NotSubfamily if family has a non-circuit.
bool is_tropical_basis(const Matroid& m, std::span<const Subset> family);

struct NecessaryCircuits {
  std::vector<Subset> circuits;
  /// circuit -> a 0/1 point excluded by it and by no other circuit
  /// (the lexicographically smallest such witness).
  std::map<Subset, ZeroOnePoint> witnesses;
};

/// Circuits that lie in every tropical basis, each with a witness point.
NecessaryCircuits necessary_circuits(const Matroid& m);

struct BasisReport {
  std::vector<Subset> basis;
  bool certified_minimal = false;
  /// basis member -> point excluded by it and by no other member; the
  /// point that would be lost if the member were removed.
  std::map<Subset, ZeroOnePoint> witnesses;
};

/// Starting from all circuits, drops circuits in the given order whenever
/// the remainder is still a tropical basis. Inclusion-minimal result.
BasisReport minimal_basis_greedy(const Matroid& m,
                                 std::span<const Subset> order = {});

/// Cardinality-minimum tropical basis via exact set cover
/// (branch and bound, deterministic (size, lex) tie-break).
/// Throws SearchBudgetExceeded past the node budget.
BasisReport minimum_basis_exact(const Matroid& m);

/// True iff necessary_circuits(m) is itself a tropical basis, in which
/// case it is the unique inclusion-minimal one.
bool has_unique_minimal_basis(const Matroid& m);

/// True iff the paste-closure of family (keeping only results that are
/// circuits of m) is the whole circuit set.
bool pasting_generates(std::span<const Subset> family, const Matroid& m);

/// C(n,d)/(d+1), the cited lower bound on tropical basis size of U_{d,n}.
Rational uniform_lower_bound(int d, int n);

}  // namespace tropmat
