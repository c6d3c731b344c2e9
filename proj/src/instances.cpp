#include "tropmat/instances.hpp"

#include "tropmat/error.hpp"

namespace tropmat {

Rational random_small_rational(Rng& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  int n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  Rational q(n, den(rng));
  q.canonicalize();
  return q;
}

Puiseux random_entry(Rng& rng, bool monomials) {
  Rational c = random_small_rational(rng, /*nonzero=*/true);
  if (!monomials) return Puiseux::constant(c);
  std::uniform_int_distribution<int> expo(0, 3);
  return Puiseux::monomial(c, Rational(expo(rng)));
}

SubspaceInstance random_subspace(Rng& rng, int n, int dim, bool monomials) {
  if (dim <= 0 || dim > n)
    fail(ErrorCode::InvalidArgument, "need 0 < dim <= n");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FieldMatrix a(dim, n);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = random_entry(rng, monomials);
    PluckerVector pv = plucker_vector(a);
    bool ok = true;
    for (const Puiseux& minor : pv.minors)
      if (!minor.is_nonzero()) {
        ok = false;
        break;
      }
    if (ok) return SubspaceInstance{std::move(a), n, dim};
  }
  fail(ErrorCode::SearchBudgetExceeded,
       "could not sample a subspace with all Pluecker minors nonzero");
}

}  // namespace tropmat
