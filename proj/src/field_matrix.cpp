#include "tropmat/field_matrix.hpp"

#include <algorithm>

#include "tropmat/error.hpp"

namespace tropmat {

FieldMatrix FieldMatrix::from_rows(const std::vector<FieldVector>& rows) {
  if (rows.empty() || rows[0].empty())
    fail(ErrorCode::InvalidArgument, "matrix must be nonempty");
  FieldMatrix a(static_cast<int>(rows.size()),
                static_cast<int>(rows[0].size()));
  for (int i = 0; i < a.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != a.cols())
      fail(ErrorCode::InvalidArgument, "ragged rows");
    for (int j = 0; j < a.cols(); ++j)
      a.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return a;
}

FieldMatrix FieldMatrix::from_rational_rows(
    const std::vector<std::vector<Rational>>& rows) {
  std::vector<FieldVector> conv;
  for (const auto& r : rows) {
    FieldVector v;
    for (const Rational& q : r) v.push_back(Puiseux::constant(q));
    conv.push_back(std::move(v));
  }
  return from_rows(conv);
}

FieldVector FieldMatrix::row(int i) const {
  FieldVector out(static_cast<size_t>(cols_));
  for (int j = 0; j < cols_; ++j) out[static_cast<size_t>(j)] = at(i, j);
  return out;
}

FieldVector FieldMatrix::col(int j) const {
  FieldVector out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) out[static_cast<size_t>(i)] = at(i, j);
  return out;
}

FieldMatrix FieldMatrix::transposed() const {
  FieldMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

TropMatrix deg(const FieldMatrix& a) {
  TropMatrix d(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) d.at(i, j) = a.at(i, j).deg();
  return d;
}

std::vector<TropValue> deg(const FieldVector& v) {
  std::vector<TropValue> out;
  out.reserve(v.size());
  for (const Puiseux& f : v) out.push_back(f.deg());
  return out;
}

namespace {

void require_determinate(const Puiseux& f) {
  if (f.is_indeterminate())
    fail(ErrorCode::PrecisionExhausted,
         "elimination hit an entry with no certified leading term");
}

}  // namespace

EliminationResult kernel_and_rowspace(const FieldMatrix& a) {
  const int m = a.rows(), n = a.cols();
  std::vector<FieldVector> work;
  for (int i = 0; i < m; ++i) work.push_back(a.row(i));

  // Fraction-free Gauss-Jordan: rows are combined by cross-multiplication
  // only, so exact inputs stay exact. Pivot = least-degree certified
  // nonzero entry in the column.
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int i = rank; i < m; ++i) {
      const Puiseux& e = work[static_cast<size_t>(i)][static_cast<size_t>(col)];
      require_determinate(e);
      if (!e.is_nonzero()) continue;
      if (pivot < 0 ||
          e.deg() < work[static_cast<size_t>(pivot)][static_cast<size_t>(col)].deg())
        pivot = i;
    }
    if (pivot < 0) continue;
    std::swap(work[static_cast<size_t>(rank)], work[static_cast<size_t>(pivot)]);
    const FieldVector& prow = work[static_cast<size_t>(rank)];
    for (int i = 0; i < m; ++i) {
      if (i == rank) continue;
      FieldVector& row = work[static_cast<size_t>(i)];
      const Puiseux& e = row[static_cast<size_t>(col)];
      require_determinate(e);
      if (!e.is_nonzero()) continue;
      Puiseux factor = e;
      Puiseux scale = prow[static_cast<size_t>(col)];
      for (int j = 0; j < n; ++j)
        row[static_cast<size_t>(j)] =
            scale * row[static_cast<size_t>(j)] -
            factor * prow[static_cast<size_t>(j)];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  EliminationResult res;
  res.rank = rank;
  for (int i = 0; i < rank; ++i)
    res.row_space_basis.push_back(work[static_cast<size_t>(i)]);

  // Kernel basis, one vector per free column; entries stay polynomial by
  // clearing denominators with the off-row pivot products.
  std::vector<char> is_pivot(static_cast<size_t>(n), 0);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = 1;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    FieldVector v(static_cast<size_t>(n), Puiseux::zero());
    Puiseux all = Puiseux::constant(Rational(1));
    for (int i = 0; i < rank; ++i)
      all = all * work[static_cast<size_t>(i)][static_cast<size_t>(pivot_col[static_cast<size_t>(i)])];
    v[static_cast<size_t>(free)] = all;
    for (int i = 0; i < rank; ++i) {
      Puiseux others = Puiseux::constant(Rational(1));
      for (int i2 = 0; i2 < rank; ++i2)
        if (i2 != i)
          others = others *
                   work[static_cast<size_t>(i2)][static_cast<size_t>(pivot_col[static_cast<size_t>(i2)])];
      v[static_cast<size_t>(pivot_col[static_cast<size_t>(i)])] =
          -(work[static_cast<size_t>(i)][static_cast<size_t>(free)] * others);
    }
    res.kernel_basis.push_back(std::move(v));
  }
  return res;
}

Puiseux field_det(const FieldMatrix& a) {
  if (a.rows() != a.cols())
    fail(ErrorCode::NotSquare, "determinant needs a square matrix");
  const int n = a.rows();
  if (n > 10) fail(ErrorCode::SizeBudgetExceeded, "determinant guarded to 10");
  if (n == 0) return Puiseux::constant(Rational(1));
  if (n == 1) return a.at(0, 0);
  // Cofactor expansion along the first row; exact in the polynomial ring.
  Puiseux det = Puiseux::zero();
  for (int j = 0; j < n; ++j) {
    if (!a.at(0, j).is_nonzero() && !a.at(0, j).is_indeterminate()) continue;
    FieldMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = a.at(i, c);
      }
    }
    Puiseux term = a.at(0, j) * field_det(minor);
    det = (j % 2 == 0) ? det + term : det - term;
  }
  return det;
}

PluckerVector plucker_vector(const FieldMatrix& a) {
  PluckerVector p;
  p.d = a.rows();
  p.n = a.cols();
  if (p.d > p.n)
    fail(ErrorCode::InvalidArgument, "need d <= n (rows spanning a subspace)");
  if (binomial(p.n, p.d) > 10'000)
    fail(ErrorCode::TooManyMinors, "more than 10^4 maximal minors");
  for (Subset cols : k_subsets(p.n, p.d)) {
    FieldMatrix sub(p.d, p.d);
    auto cl = cols.elements();
    for (int i = 0; i < p.d; ++i)
      for (int j = 0; j < p.d; ++j)
        sub.at(i, j) = a.at(i, cl[static_cast<size_t>(j)]);
    p.minors.push_back(field_det(sub));
  }
  return p;
}

Subset support(const FieldVector& v) {
  Subset s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_indeterminate())
      fail(ErrorCode::PrecisionExhausted,
           "support undecidable at current truncation");
    if (v[i].is_nonzero()) s = s.with(static_cast<int>(i));
  }
  return s;
}

namespace {

FieldVector normalize_first_nonzero(FieldVector v) {
  for (const Puiseux& e : v) {
    if (e.is_indeterminate()) break;
    if (e.is_nonzero()) {
      FieldVector out;
      for (const Puiseux& f : v) out.push_back(f / e);
      return out;
    }
  }
  return v;
}

}  // namespace

std::vector<FieldVector> circuits_of_rowspace(const FieldMatrix& r,
                                              bool normalize_representatives) {
  const int n = r.cols();
  if (n > 12)
    fail(ErrorCode::GroundSetTooLarge,
         "minimal-support enumeration guarded to 12 coordinates");
  EliminationResult basis = kernel_and_rowspace(r);
  const int rk = basis.rank;
  if (rk == 0) return {};

  // Every minimal-support vector vanishes on an independent (rank-1)-set
  // of coordinates; solving on each candidate set finds them all.
  std::vector<FieldVector> reps;
  std::vector<Subset> seen_supports;
  for (Subset zero_set : k_subsets(n, rk - 1)) {
    // Solve for c with (c . B)|zero_set = 0, B the row-space basis.
    FieldMatrix constraints(rk, rk - 1);
    auto zs = zero_set.elements();
    for (int i = 0; i < rk; ++i)
      for (int j = 0; j + 1 < rk; ++j)
        constraints.at(i, j) =
            basis.row_space_basis[static_cast<size_t>(i)]
                                 [static_cast<size_t>(zs[static_cast<size_t>(j)])];
    EliminationResult sol = kernel_and_rowspace(constraints.transposed());
    if (sol.kernel_basis.size() != 1) continue;  // zero_set not independent
    const FieldVector& c = sol.kernel_basis[0];
    FieldVector v(static_cast<size_t>(n), Puiseux::zero());
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < rk; ++i)
        v[static_cast<size_t>(j)] =
            v[static_cast<size_t>(j)] +
            c[static_cast<size_t>(i)] *
                basis.row_space_basis[static_cast<size_t>(i)][static_cast<size_t>(j)];
    Subset sup = support(v);
    if (sup.empty()) continue;
    if (std::find(seen_supports.begin(), seen_supports.end(), sup) ==
        seen_supports.end()) {
      seen_supports.push_back(sup);
      reps.push_back(normalize_representatives
                         ? normalize_first_nonzero(std::move(v))
                         : std::move(v));
    }
  }
  // Deterministic order: by support as a bitmask.
  std::vector<size_t> idx(reps.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) {
    return seen_supports[x] < seen_supports[y];
  });
  std::vector<FieldVector> out;
  for (size_t i : idx) out.push_back(std::move(reps[i]));
  return out;
}

std::vector<FieldVector> cocircuits_of_subspace(const FieldMatrix& a) {
  return circuits_of_rowspace(a.transposed());
}

}  // namespace tropmat
