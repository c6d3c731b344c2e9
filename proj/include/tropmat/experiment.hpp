#pragma once

#include <cstdint>
#include <optional>

#include "tropmat/field_matrix.hpp"
#include "tropmat/trop_space.hpp"

namespace tropmat {

struct ConverseConfig {
  std::uint64_t seed = 0;
  int samples = 1000;
};

struct ConverseReport {
  /// k = codimension of L = rank of the row matrix.
  int k = 0;
  bool rank_condition_holds = false;
  std::optional<std::vector<int>> violating_columns;
  /// Outcome of the heuristic prevariety-vs-space comparison. Evidence
  /// only; never a proof of the converse.
  PrevarietyReport comparison;
};

/// Experimental harness for the converse question: given a matrix whose
/// rows lie in the orthogonal complement of L = ker(rows), checks the
/// column rank condition and runs the heuristic comparison between the
/// prevariety of the rows and the tropical linear space of L.
/// Throws PluckerCoordinateZero when L has a zero Pluecker coordinate
/// (the hypothesis of the conjecture fails).
ConverseReport converse_experiment(const FieldMatrix& m,
                                   const ConverseConfig& config = {});

}  // namespace tropmat
