#pragma once

#include <optional>
#include <vector>

#include "tropmat/trop_value.hpp"

namespace tropmat {

/// Rectangular min-plus matrix.
class TropMatrix {
 public:
  TropMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  static TropMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  TropValue& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const TropValue& at(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  std::vector<TropValue> row(int i) const;
  std::vector<TropValue> col(int j) const;

  friend bool operator==(const TropMatrix& a, const TropMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_, cols_;
  std::vector<TropValue> data_;
};

/// C_ij = min_k (A_ik + B_kj). Throws DimensionMismatch.
TropMatrix trop_mat_mul(const TropMatrix& a, const TropMatrix& b);
std::vector<TropValue> trop_mat_vec(const TropMatrix& a,
                                    const std::vector<TropValue>& v);

struct TropDetResult {
  TropValue value;
  /// Number of permutations attaining the minimum, saturated at 2.
  int attain_count = 0;
  /// Non-unique minimum, or value = infinity.
  bool singular = true;
};

/// Exhaustive minimum over all r! permutation sums. Throws NotSquare;
/// SizeBudgetExceeded past Budget::max_det_size().
TropDetResult trop_det(const TropMatrix& a);

/// Largest r admitting a tropically nonsingular r x r submatrix;
/// 0 for all-infinity matrices.
int trop_rank(const TropMatrix& a);

struct RankConditionResult {
  bool holds = false;
  /// Lexicographically first violating column set (0-indexed) when !holds.
  std::optional<std::vector<int>> witness_columns;
};

/// Checks that every k-subset of columns has tropical rank exactly k.
RankConditionResult column_rank_condition(const TropMatrix& d, int k);

}  // namespace tropmat
