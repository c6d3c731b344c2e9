#include <doctest.h>

#include <random>

#include "tropmat/error.hpp"
#include "tropmat/instances.hpp"
#include "tropmat/trop_matrix.hpp"

using namespace tropmat;

namespace {

TropValue tv(long n, long d = 1) { return TropValue(make_rational(n, d)); }
TropValue inf() { return TropValue::infinity(); }

TropMatrix from_rows(const std::vector<std::vector<TropValue>>& rows) {
  TropMatrix a(static_cast<int>(rows.size()),
               static_cast<int>(rows[0].size()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      a.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return a;
}

/// Independent assignment-optimum oracle: bitmask DP over column sets,
/// no permutation enumeration.
TropValue assignment_dp(const TropMatrix& a) {
  const int n = a.rows();
  std::vector<TropValue> dp(std::uint64_t{1} << n, inf());
  dp[0] = TropValue::zero();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    int row = Subset(s).count();
    if (row >= n || dp[s].is_infinite()) continue;
    for (int j = 0; j < n; ++j) {
      if (s >> j & 1) continue;
      std::uint64_t t = s | (std::uint64_t{1} << j);
      dp[t] = tmin(dp[t], tplus(dp[s], a.at(row, j)));
    }
  }
  return dp[(std::uint64_t{1} << n) - 1];
}

}  // namespace

TEST_CASE("trop_mat_mul") {
  TropMatrix id = TropMatrix::identity(2);
  TropMatrix v(2, 1);
  v.at(0, 0) = tv(3);
  v.at(1, 0) = tv(5);
  CHECK(trop_mat_mul(id, v) == v);

  TropMatrix row(1, 2);
  row.at(0, 0) = tv(0);
  row.at(0, 1) = tv(0);
  TropMatrix prod = trop_mat_mul(row, v);
  CHECK(prod.at(0, 0) == tv(3));  // min(3, 5)

  TropMatrix infrow(1, 2);  // all-infinity row stays infinite
  CHECK(trop_mat_mul(infrow, v).at(0, 0) == inf());

  CHECK_THROWS_AS(trop_mat_mul(row, row), Error);
}

TEST_CASE("trop_det basics") {
  TropDetResult r = trop_det(from_rows({{tv(0), tv(1)}, {tv(1), tv(0)}}));
  CHECK(r.value == tv(0));
  CHECK(r.attain_count == 1);
  CHECK(!r.singular);

  r = trop_det(from_rows({{tv(0), tv(0)}, {tv(0), tv(0)}}));
  CHECK(r.value == tv(0));
  CHECK(r.singular);

  // Rows 1-2 of columns {3,4} of the section-4 example.
  r = trop_det(from_rows({{tv(0), tv(0)}, {tv(0), tv(0)}}));
  CHECK(r.singular);

  // All-infinity determinant is singular by convention.
  TropMatrix allinf(2, 2);
  CHECK(trop_det(allinf).singular);
  CHECK(trop_det(allinf).value == inf());

  CHECK_THROWS_AS(trop_det(TropMatrix(2, 3)), Error);
}

TEST_CASE("trop_det value matches the assignment DP on random 6x6") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<int> val(0, 20);
  std::uniform_int_distribution<int> infd(0, 9);
  for (int trial = 0; trial < 200; ++trial) {
    TropMatrix a(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j)
        a.at(i, j) = infd(rng) == 0 ? inf() : tv(val(rng));
    CHECK(trop_det(a).value == assignment_dp(a));
  }
}

TEST_CASE("permuting rows/columns preserves det value and singularity") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> val(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    TropMatrix a(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a.at(i, j) = tv(val(rng));
    std::vector<int> rp{0, 1, 2, 3}, cp{0, 1, 2, 3};
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    TropMatrix b(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        b.at(i, j) = a.at(rp[static_cast<size_t>(i)], cp[static_cast<size_t>(j)]);
    TropDetResult ra = trop_det(a), rb = trop_det(b);
    CHECK(ra.value == rb.value);
    CHECK(ra.singular == rb.singular);
  }
}

TEST_CASE("adding a scalar to one row shifts the det and keeps the count") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> val(0, 6);
  for (int trial = 0; trial < 50; ++trial) {
    TropMatrix a(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) a.at(i, j) = tv(val(rng));
    TropMatrix b = a;
    Rational shift = make_rational(static_cast<long>(rng() % 7) - 3);
    for (int j = 0; j < 4; ++j)
      b.at(2, j) = tplus(b.at(2, j), TropValue(shift));
    TropDetResult ra = trop_det(a), rb = trop_det(b);
    CHECK(rb.value == tplus(ra.value, TropValue(shift)));
    CHECK(ra.attain_count == rb.attain_count);
  }
}

TEST_CASE("trop_rank") {
  CHECK(trop_rank(from_rows({{tv(0), tv(1)}, {tv(1), tv(0)}})) == 2);
  TropMatrix allinf(2, 2);
  CHECK(trop_rank(allinf) == 0);

  // Columns {3,4} of the section-4 example degree matrix.
  TropMatrix cols34 = from_rows({{tv(0), tv(0)}, {tv(0), tv(0)}, {inf(), inf()}});
  CHECK(trop_rank(cols34) == 1);

  CHECK(trop_rank(TropMatrix::identity(3)) == 3);
}

TEST_CASE("trop_rank monotone under submatrices") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> val(0, 4);
  for (int trial = 0; trial < 20; ++trial) {
    TropMatrix a(4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j)
        a.at(i, j) = (rng() % 7 == 0) ? inf() : tv(val(rng));
    int r = trop_rank(a);
    CHECK(r <= 4);
    // Delete one row and one column; rank cannot grow.
    TropMatrix sub(3, 4);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 4; ++j) sub.at(i, j) = a.at(i + 1, j + 1);
    CHECK(trop_rank(sub) <= r);
  }
}

TEST_CASE("column_rank_condition on the section-4 example") {
  TropMatrix dm = from_rows({{tv(0), inf(), tv(0), tv(0)},
                             {inf(), tv(0), tv(0), tv(0)},
                             {tv(0), tv(0), inf(), inf()}});
  RankConditionResult r = column_rank_condition(dm, 2);
  CHECK(!r.holds);
  REQUIRE(r.witness_columns.has_value());
  CHECK(*r.witness_columns == std::vector<int>{2, 3});  // columns {3,4}

  CHECK(column_rank_condition(TropMatrix::identity(3), 3).holds);
  CHECK_THROWS_AS(column_rank_condition(TropMatrix::identity(3), 4), Error);
}

TEST_CASE("column_rank_condition holds for full circuit matrices") {
  // deg of all circuits of a generic rational subspace: the full circuit
  // set is a tropical basis, so the rank condition must hold.
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 4 + static_cast<int>(rng() % 3);
    int dim = 2;
    SubspaceInstance inst = random_subspace(rng, n, dim, /*monomials=*/false);
    EliminationResult kr = kernel_and_rowspace(inst.basis_rows);
    FieldMatrix perp = FieldMatrix::from_rows(kr.kernel_basis);
    auto circuit_vectors = circuits_of_rowspace(perp);
    std::vector<FieldVector> rows(circuit_vectors.begin(),
                                  circuit_vectors.end());
    TropMatrix dm = deg(FieldMatrix::from_rows(rows));
    int k = n - dim;
    RankConditionResult r = column_rank_condition(dm, k);
    CHECK(r.holds);
  }
}
