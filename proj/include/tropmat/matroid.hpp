#pragma once

#include <optional>
#include <vector>

#include "tropmat/subset.hpp"

namespace tropmat {

/// A matroid on ground set {0,..,n-1} given by its circuit family.
///
/// Construction verifies the circuit axioms (incomparability and
/// elimination) unless the family is explicitly trusted. Instances are
/// immutable; every operation is a pure function of the inputs.
class Matroid {
 public:
  /// Runs validate_circuits: checks both circuit axioms exhaustively over
  /// circuit pairs. Throws ComparabilityViolation / EliminationViolation.
  /// Set trusted=true to skip the axiom check for large known families.
  static Matroid from_circuits(int n, std::vector<Subset> circuits,
                               bool trusted = false);

  int size() const { return n_; }
  const std::vector<Subset>& circuits() const { return circuits_; }
  bool has_loops() const;

  /// True iff no circuit is contained in s.
  bool is_independent(Subset s) const;

  /// Size of a maximal independent subset of s (greedy; well-defined).
  int rank(Subset s) const;

  /// cl(s) = s together with every e with rank(s+e) = rank(s).
  Subset closure(Subset s) const;

  /// closure(s) == s.
  bool is_flat(Subset s) const;

  /// All flats, by exhaustive enumeration. Guarded by Budget (n <= 24).
  /// Uses the circuit criterion (no circuit C with |C \ S| = 1), which
  /// agrees with the closure definition.
  std::vector<Subset> all_flats() const;

 private:
  Matroid(int n, std::vector<Subset> circuits);
  int n_ = 0;
  std::vector<Subset> circuits_;  // sorted, deduplicated
};

/// Ground set [n1+n2]; circuits of m2 shifted past m1's ground set.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

/// Finest partition of the ground set such that every circuit lies in one
/// block; untouched elements (coloops/loops of no circuit) are singletons.
std::vector<Subset> components(const Matroid& m);

struct SimplifyResult {
  Matroid matroid;
  /// element_map[old] = new index, or -1 for removed loops.
  std::vector<int> element_map;
};

/// Removes loops and collapses each parallel class to its smallest element.
SimplifyResult simplify(const Matroid& m);

/// Symmetric difference of two circuits meeting in exactly one element.
/// Throws IntersectionNotSingleton otherwise.
Subset paste(Subset c1, Subset c2);

}  // namespace tropmat
