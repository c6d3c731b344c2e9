#pragma once

#include <vector>

#include "tropmat/puiseux.hpp"
#include "tropmat/subset.hpp"
#include "tropmat/trop_matrix.hpp"

namespace tropmat {

using FieldVector = std::vector<Puiseux>;

/// Rectangular matrix over the Puiseux field (rationals embed as
/// exponent-0 series).
class FieldMatrix {
 public:
  FieldMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static FieldMatrix from_rows(const std::vector<FieldVector>& rows);
  static FieldMatrix from_rational_rows(
      const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Puiseux& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Puiseux& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  FieldVector row(int i) const;
  FieldVector col(int j) const;
  FieldMatrix transposed() const;

 private:
  int rows_, cols_;
  std::vector<Puiseux> data_;
};

/// Entrywise valuation.
TropMatrix deg(const FieldMatrix& a);
std::vector<TropValue> deg(const FieldVector& v);

struct EliminationResult {
  int rank = 0;
  std::vector<FieldVector> row_space_basis;
  std::vector<FieldVector> kernel_basis;
};

/// Exact fraction-free Gauss-Jordan elimination, pivoting on the entry of
/// least certified degree. Throws PrecisionExhausted when no pivot in a
/// column can be certified nonzero or zero.
EliminationResult kernel_and_rowspace(const FieldMatrix& a);

/// Exact determinant of a square matrix (fraction-free elimination).
Puiseux field_det(const FieldMatrix& a);

struct PluckerVector {
  int d = 0, n = 0;
  /// All d x d minors, in lexicographic order of column subsets.
  std::vector<Puiseux> minors;
};

/// Maximal minors of a d x n matrix whose rows span the subspace.
/// Throws TooManyMinors past 10^4 subsets.
PluckerVector plucker_vector(const FieldMatrix& a);

/// One representative per minimal-support nonzero vector of the row space
/// of r, normalized so the first nonzero coordinate is 1 (pass
/// normalize_representatives=false for the raw exact solutions). Guarded
/// to n <= 12 columns.
std::vector<FieldVector> circuits_of_rowspace(
    const FieldMatrix& r, bool normalize_representatives = true);

/// Minimal-support nonzero vectors of the column space of a (one per
/// support). Cocircuits of the subspace spanned by the columns.
std::vector<FieldVector> cocircuits_of_subspace(const FieldMatrix& a);

Subset support(const FieldVector& v);

}  // namespace tropmat
