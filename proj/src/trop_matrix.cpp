#include "tropmat/trop_matrix.hpp"

#include <algorithm>
#include <numeric>

#include "tropmat/budget.hpp"
#include "tropmat/error.hpp"
#include "tropmat/subset.hpp"

namespace tropmat {

TropMatrix TropMatrix::identity(int n) {
  TropMatrix a(n, n);
  for (int i = 0; i < n; ++i) a.at(i, i) = TropValue::zero();
  return a;
}

std::vector<TropValue> TropMatrix::row(int i) const {
  std::vector<TropValue> out(cols_);
  for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(j)] = at(i, j);
  return out;
}

std::vector<TropValue> TropMatrix::col(int j) const {
  std::vector<TropValue> out(rows_);
  for (int i = 0; i < rows_; ++i) out[static_cast<size_t>(i)] = at(i, j);
  return out;
}

TropMatrix trop_mat_mul(const TropMatrix& a, const TropMatrix& b) {
  if (a.cols() != b.rows())
    fail(ErrorCode::DimensionMismatch,
         "inner dimensions " + std::to_string(a.cols()) + " and " +
             std::to_string(b.rows()) + " differ");
  TropMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      TropValue acc = TropValue::infinity();
      for (int k = 0; k < a.cols(); ++k)
        acc = tmin(acc, tplus(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

std::vector<TropValue> trop_mat_vec(const TropMatrix& a,
                                    const std::vector<TropValue>& v) {
  if (a.cols() != static_cast<int>(v.size()))
    fail(ErrorCode::DimensionMismatch, "matrix-vector dimensions differ");
  std::vector<TropValue> out(static_cast<size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) {
    TropValue acc = TropValue::infinity();
    for (int j = 0; j < a.cols(); ++j)
      acc = tmin(acc, tplus(a.at(i, j), v[static_cast<size_t>(j)]));
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

TropDetResult trop_det(const TropMatrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorCode::NotSquare, "tropical determinant needs a square matrix");
  const int r = a.rows();
  if (r > Budget::max_det_size())
    fail(ErrorCode::SizeBudgetExceeded,
         "exhaustive tropical determinant guarded to size " +
             std::to_string(Budget::max_det_size()));
  TropDetResult res;
  res.value = TropValue::infinity();
  std::vector<int> perm(static_cast<size_t>(r));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    TropValue sum = TropValue::zero();
    for (int i = 0; i < r && sum.is_finite(); ++i)
      sum = tplus(sum, a.at(i, perm[static_cast<size_t>(i)]));
    if (sum.is_infinite()) continue;
    if (sum < res.value) {
      res.value = sum;
      res.attain_count = 1;
    } else if (sum == res.value && res.attain_count < 2) {
      res.attain_count = 2;  // saturates; only uniqueness matters
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  res.singular = res.value.is_infinite() || res.attain_count >= 2;
  return res;
}

namespace {

TropMatrix submatrix(const TropMatrix& a, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  TropMatrix s(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j)
      s.at(static_cast<int>(i), static_cast<int>(j)) =
          a.at(rows[i], cols[j]);
  return s;
}

bool has_nonsingular_rxr(const TropMatrix& a, int r) {
  for (Subset rs : k_subsets(a.rows(), r))
    for (Subset cs : k_subsets(a.cols(), r)) {
      TropMatrix sub = submatrix(a, rs.elements(), cs.elements());
      if (!trop_det(sub).singular) return true;
    }
  return false;
}

}  // namespace

int trop_rank(const TropMatrix& a) {
  for (int r = std::min(a.rows(), a.cols()); r >= 1; --r)
    if (has_nonsingular_rxr(a, r)) return r;
  return 0;
}

RankConditionResult column_rank_condition(const TropMatrix& d, int k) {
  if (k > std::min(d.rows(), d.cols()) || k <= 0)
    fail(ErrorCode::InvalidArgument,
         "k must be in 1..min(rows, cols) for the column rank condition");
  RankConditionResult res;
  // k-subsets in lex order; the first violation is the witness.
  for (Subset cs : k_subsets(d.cols(), k)) {
    std::vector<int> all_rows(static_cast<size_t>(d.rows()));
    std::iota(all_rows.begin(), all_rows.end(), 0);
    TropMatrix sub = submatrix(d, all_rows, cs.elements());
    if (!has_nonsingular_rxr(sub, k)) {
      res.holds = false;
      res.witness_columns = cs.elements();
      return res;
    }
  }
  res.holds = true;
  return res;
}

}  // namespace tropmat
