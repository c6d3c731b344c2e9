#pragma once

#include <cstdint>
#include <random>

#include "tropmat/field_matrix.hpp"
#include "tropmat/rational.hpp"

namespace tropmat {

/// Deterministic RNG for randomized harnesses. Seeds are mandatory inputs.
using Rng = std::mt19937_64;

/// Rational with numerator in [-9,9] and denominator in {1,2,3}.
Rational random_small_rational(Rng& rng, bool nonzero = false);

/// Entry c * t^a with small rational c != 0 and exponent a in {0,..,3}
/// (a = 0 always when monomials = false).
Puiseux random_entry(Rng& rng, bool monomials);

struct SubspaceInstance {
  /// rows x n matrix whose rows span the subspace.
  FieldMatrix basis_rows;
  int n = 0;
  int dim = 0;
};

/// Random dim-dimensional subspace of K^n with all Pluecker coordinates
/// of the row space certified nonzero; instances with a zero minor are
/// rejected and resampled.
SubspaceInstance random_subspace(Rng& rng, int n, int dim, bool monomials);

}  // namespace tropmat
