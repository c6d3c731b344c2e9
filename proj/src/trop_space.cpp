#include "tropmat/trop_space.hpp"

#include <algorithm>
#include <random>

#include "tropmat/error.hpp"

namespace tropmat {

Subset TropLinearForm::support() const {
  Subset s;
  for (size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i].is_finite()) s = s.with(static_cast<int>(i));
  return s;
}

TropPoint::TropPoint(std::vector<TropValue> coords)
    : coords_(std::move(coords)) {
  const TropValue* least = nullptr;
  for (const TropValue& c : coords_)
    if (c.is_finite() && (!least || c < *least)) least = &c;
  if (!least)
    fail(ErrorCode::InvalidArgument,
         "a tropical projective point cannot be all-infinite");
  Rational shift = least->value();
  for (TropValue& c : coords_)
    if (c.is_finite()) c = TropValue(c.value() - shift);
}

Subset TropPoint::support() const {
  Subset s;
  for (size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i].is_finite()) s = s.with(static_cast<int>(i));
  return s;
}

const TropValue& TropPlucker::at(Subset dsubset) const {
  return values[static_cast<size_t>(subset_lex_rank(dsubset, n))];
}

TropPlucker TropPlucker::constant_zero(int d, int n) {
  TropPlucker p;
  p.d = d;
  p.n = n;
  p.values.assign(binomial(n, d), TropValue::zero());
  return p;
}

TropPlucker TropPlucker::from_minors(const PluckerVector& pv) {
  TropPlucker p;
  p.d = pv.d;
  p.n = pv.n;
  for (const Puiseux& m : pv.minors) p.values.push_back(m.deg());
  return p;
}

PluckerValidation validate_plucker(const TropPlucker& p) {
  PluckerValidation out;
  if (static_cast<std::uint64_t>(p.values.size()) != binomial(p.n, p.d))
    fail(ErrorCode::InvalidArgument, "need C(n,d) values");
  bool some_finite =
      std::any_of(p.values.begin(), p.values.end(),
                  [](const TropValue& v) { return v.is_finite(); });
  if (!some_finite)
    fail(ErrorCode::InvalidArgument, "all-infinite Pluecker vector");
  if (p.d < 2 || p.n - p.d < 2) return out;  // no quadruples to check

  for (Subset quad : k_subsets(p.n, 4)) {
    auto q = quad.elements();
    int i = q[0], j = q[1], k = q[2], l = q[3];
    // (d-2)-subsets of the remaining elements.
    auto rest = (Subset::full(p.n) - quad).elements();
    int r = static_cast<int>(rest.size());
    for (Subset pick : k_subsets(r, p.d - 2)) {
      Subset s;
      for (int e : pick.elements()) s = s.with(rest[static_cast<size_t>(e)]);
      TropValue t1 = tplus(p.at(s.with(i).with(j)), p.at(s.with(k).with(l)));
      TropValue t2 = tplus(p.at(s.with(i).with(k)), p.at(s.with(j).with(l)));
      TropValue t3 = tplus(p.at(s.with(i).with(l)), p.at(s.with(j).with(k)));
      TropValue m = tmin(t1, tmin(t2, t3));
      if (m.is_infinite()) continue;  // degenerate: counts as attained twice
      int attained = (t1 == m) + (t2 == m) + (t3 == m);
      if (attained < 2) {
        out.valid = false;
        out.violations.push_back(PluckerViolation{s, i, j, k, l});
      }
    }
  }
  return out;
}

std::vector<TropLinearForm> circuits_of_plucker(const TropPlucker& p) {
  std::vector<TropLinearForm> out;
  for (Subset iset : k_subsets(p.n, p.d + 1)) {
    TropLinearForm f;
    f.coefficients.assign(static_cast<size_t>(p.n), TropValue::infinity());
    for (int i : iset.elements())
      f.coefficients[static_cast<size_t>(i)] = p.at(iset.without(i));
    out.push_back(std::move(f));
  }
  return out;
}

bool in_hyperplane(const TropLinearForm& f, const TropPoint& x) {
  if (f.coefficients.size() != x.coords().size())
    fail(ErrorCode::DimensionMismatch, "form and point sizes differ");
  TropValue best = TropValue::infinity();
  int attained = 0;
  for (size_t i = 0; i < f.coefficients.size(); ++i) {
    TropValue v = tplus(f.coefficients[i], x.coords()[i]);
    if (v.is_infinite()) continue;
    if (v < best) {
      best = v;
      attained = 1;
    } else if (v == best) {
      ++attained;
    }
  }
  // An all-infinite minimum constrains nothing.
  return best.is_infinite() || attained >= 2;
}

bool in_linear_space(const TropPlucker& p, const TropPoint& x) {
  for (const TropLinearForm& f : circuits_of_plucker(p))
    if (!in_hyperplane(f, x)) return false;
  return true;
}

MembershipResult trop_image_membership(const TropMatrix& d,
                                       const TropPoint& x) {
  if (d.rows() != x.size())
    fail(ErrorCode::DimensionMismatch, "matrix rows and point size differ");
  MembershipResult res;
  // Principal solution v*_j = sup_i (x_i - D_ij), taking v*_j = inf when
  // some finite D_ij faces an infinite x_i (that row forces it) and when
  // column j is all-infinite (unconstrained; inf is the top choice).
  for (int j = 0; j < d.cols(); ++j) {
    bool forced_inf = false;
    bool any = false;
    Rational best;
    for (int i = 0; i < d.rows() && !forced_inf; ++i) {
      const TropValue& dij = d.at(i, j);
      if (dij.is_infinite()) continue;
      const TropValue& xi = x.coords()[static_cast<size_t>(i)];
      if (xi.is_infinite()) {
        forced_inf = true;
        break;
      }
      Rational candidate = xi.value() - dij.value();
      if (!any || candidate > best) {
        best = candidate;
        any = true;
      }
    }
    res.preimage.push_back(forced_inf || !any ? TropValue::infinity()
                                              : TropValue(best));
  }
  std::vector<TropValue> image = trop_mat_vec(d, res.preimage);
  res.member = true;
  for (int i = 0; i < d.rows(); ++i)
    if (!(image[static_cast<size_t>(i)] == x.coords()[static_cast<size_t>(i)])) {
      res.member = false;
      res.violating_coordinate = i;
      break;
    }
  return res;
}

namespace {

Rational random_rational_in(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> num(lo, hi);
  std::uniform_int_distribution<int> den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

/// Tropicalized circuits of the column space of a: the minimal-support
/// forms of the orthogonal complement of colspace(a).
std::vector<TropLinearForm> space_circuit_forms(const FieldMatrix& a) {
  EliminationResult elim = kernel_and_rowspace(a.transposed());
  if (elim.kernel_basis.empty()) {
    // Full column space: no circuit constraints.
    return {};
  }
  FieldMatrix perp = FieldMatrix::from_rows(elim.kernel_basis);
  std::vector<TropLinearForm> forms;
  for (const FieldVector& c : circuits_of_rowspace(perp)) {
    TropLinearForm f;
    f.coefficients = deg(c);
    forms.push_back(std::move(f));
  }
  return forms;
}

}  // namespace

bool containment_check(const FieldMatrix& a, int samples, std::uint64_t seed) {
  std::vector<TropLinearForm> forms = space_circuit_forms(a);
  TropMatrix da = deg(a);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coin(0, 4);
  for (int s = 0; s < samples; ++s) {
    std::vector<TropValue> v;
    for (int j = 0; j < da.cols(); ++j)
      v.push_back(coin(rng) == 0 ? TropValue::infinity()
                                 : TropValue(random_rational_in(rng, -9, 9)));
    std::vector<TropValue> img = trop_mat_vec(da, v);
    bool all_inf = std::all_of(img.begin(), img.end(), [](const TropValue& t) {
      return t.is_infinite();
    });
    if (all_inf) continue;
    TropPoint x(img);
    for (const TropLinearForm& f : forms)
      if (!in_hyperplane(f, x)) return false;  // bug certificate
  }
  return true;
}

std::vector<FieldVector> cocircuit_decomposition(const FieldVector& v,
                                                 const FieldMatrix& a) {
  if (static_cast<int>(v.size()) != a.rows())
    fail(ErrorCode::DimensionMismatch, "vector size and matrix rows differ");
  if (support(v).empty())
    fail(ErrorCode::InvalidArgument, "decomposition needs a nonzero vector");

  // Membership: v in colspace(a) iff appending v as a column keeps rank.
  {
    EliminationResult base = kernel_and_rowspace(a.transposed());
    std::vector<FieldVector> rows;
    for (int i = 0; i < a.cols(); ++i) rows.push_back(a.col(i));
    rows.push_back(v);
    EliminationResult ext =
        kernel_and_rowspace(FieldMatrix::from_rows(rows));
    if (ext.rank != base.rank)
      fail(ErrorCode::NotInSpace, "vector is not in the column space");
  }

  std::vector<FieldVector> cocircuits = circuits_of_rowspace(
      a.transposed(), /*normalize_representatives=*/false);

  // Scaled recursion: remaining = current / denom stays exact; supports
  // shrink strictly. Pieces are (numerator vector, denominator scalar).
  std::vector<std::pair<FieldVector, Puiseux>> pieces;
  FieldVector current = v;
  Puiseux denom = Puiseux::constant(Rational(1));
  while (true) {
    Subset sup = support(current);
    if (sup.empty())
      fail(ErrorCode::NotInSpace, "internal: support vanished mid-recursion");
    const FieldVector* chosen = nullptr;
    bool is_minimal = false;
    for (const FieldVector& u : cocircuits) {
      Subset us = support(u);
      if (us == sup) {
        // Same-support vectors are scalar multiples: current is a cocircuit.
        is_minimal = true;
        break;
      }
      if (!chosen && us.subset_of(sup)) chosen = &u;
    }
    if (is_minimal) {
      pieces.push_back({current, denom});
      break;
    }
    if (!chosen)
      fail(ErrorCode::NotInSpace,
           "no cocircuit support inside the vector's support");
    const FieldVector& u = *chosen;
    // j maximizing deg(current_j) - deg(u_j) makes deg(c u) >= deg(v)
    // coordinatewise for c = current_j / u_j.
    int pick = -1;
    Rational best;
    for (int j : support(u).elements()) {
      Rational gap = current[static_cast<size_t>(j)].deg().value() -
                     u[static_cast<size_t>(j)].deg().value();
      if (pick < 0 || gap > best) {
        best = gap;
        pick = j;
      }
    }
    const Puiseux cj = current[static_cast<size_t>(pick)];
    const Puiseux uj = u[static_cast<size_t>(pick)];
    FieldVector num(u.size(), Puiseux::zero());
    for (size_t t = 0; t < u.size(); ++t) num[t] = cj * u[t];
    pieces.push_back({std::move(num), denom * uj});
    FieldVector next(current.size(), Puiseux::zero());
    for (size_t t = 0; t < current.size(); ++t)
      next[t] = uj * current[t] - cj * u[t];
    current = std::move(next);
    denom = denom * uj;
  }

  // Verify deg(v) = min over pieces of deg(piece) coordinatewise; degrees
  // of pieces are exact: deg(num) - deg(den).
  for (size_t i = 0; i < v.size(); ++i) {
    TropValue dv = v[i].deg();
    TropValue acc = TropValue::infinity();
    for (const auto& [num, den] : pieces) {
      TropValue dn = num[i].deg();
      if (dn.is_infinite()) continue;
      acc = tmin(acc, TropValue(dn.value() - den.deg().value()));
    }
    if (!(acc == dv))
      fail(ErrorCode::PrecisionExhausted,
           "internal: degree identity failed in the decomposition");
  }

  std::vector<FieldVector> out;
  for (const auto& [num, den] : pieces) {
    FieldVector piece;
    for (const Puiseux& e : num) piece.push_back(e / den);
    out.push_back(std::move(piece));
  }
  return out;
}

ParametrizationResult parametrization_equality(const FieldMatrix& a,
                                               int samples,
                                               std::uint64_t seed) {
  ParametrizationResult res;
  std::vector<FieldVector> cocircuits = cocircuits_of_subspace(a);
  std::vector<Subset> column_supports;
  for (int j = 0; j < a.cols(); ++j)
    column_supports.push_back(support(a.col(j)));

  for (const FieldVector& c : cocircuits) {
    Subset s = support(c);
    if (std::find(column_supports.begin(), column_supports.end(), s) ==
        column_supports.end()) {
      res.missing_supports.push_back(s);
      if (!res.non_member_witness)
        res.non_member_witness = TropPoint(deg(c));
    }
  }
  res.equal = res.missing_supports.empty();

  TropMatrix da = deg(a);
  if (!res.equal) {
    // The theorem's proof witness must fail image membership; make the
    // failure exact and loud if it ever does not.
    MembershipResult mem = trop_image_membership(da, *res.non_member_witness);
    if (mem.member)
      fail(ErrorCode::InvalidArgument,
           "internal: missing-cocircuit witness is in the image");
    return res;
  }

  // Sampled forward verification: deg of random elements of L lies in
  // im(deg(A)).
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < samples) {
    FieldVector w(static_cast<size_t>(a.rows()), Puiseux::zero());
    for (int j = 0; j < a.cols(); ++j) {
      Rational lambda = random_rational_in(rng, -9, 9);
      if (lambda == 0) continue;
      for (int i = 0; i < a.rows(); ++i)
        w[static_cast<size_t>(i)] =
            w[static_cast<size_t>(i)] + Puiseux::constant(lambda) * a.at(i, j);
    }
    if (support(w).empty()) continue;
    ++done;
    TropPoint x(deg(w));
    MembershipResult mem = trop_image_membership(da, x);
    if (!mem.member)
      fail(ErrorCode::InvalidArgument,
           "internal: sampled member of L escapes im(deg(A)) although all "
           "cocircuits are represented");
  }
  return res;
}

SamplerConfig::SamplerConfig()
    : grid_levels{Rational(0), Rational(1), Rational(2)} {}

namespace {

/// Enumerates level^n pattern points (levels plus infinity), skipping the
/// all-infinite assignment, in lexicographic order.
template <typename Fn>
void for_each_pattern(int n, const std::vector<Rational>& levels, Fn&& fn) {
  const int base = static_cast<int>(levels.size()) + 1;  // + infinity
  std::vector<int> digits(static_cast<size_t>(n), 0);
  while (true) {
    bool all_inf = true;
    std::vector<TropValue> coords;
    for (int i = 0; i < n; ++i) {
      int d = digits[static_cast<size_t>(i)];
      if (d < static_cast<int>(levels.size())) {
        coords.push_back(TropValue(levels[static_cast<size_t>(d)]));
        all_inf = false;
      } else {
        coords.push_back(TropValue::infinity());
      }
    }
    if (!all_inf) fn(TropPoint(std::move(coords)));
    int i = n - 1;
    while (i >= 0 && digits[static_cast<size_t>(i)] == base - 1) {
      digits[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++digits[static_cast<size_t>(i)];
  }
}

}  // namespace

PrevarietyReport prevariety_vs_space(const std::vector<TropLinearForm>& forms,
                                     const TropPlucker& p,
                                     const SamplerConfig& config) {
  PrevarietyReport report;
  auto circuits = circuits_of_plucker(p);
  auto check_point = [&](const TropPoint& x) -> bool {
    ++report.points_checked;
    bool in_prev = std::all_of(forms.begin(), forms.end(),
                               [&](const TropLinearForm& f) {
                                 return in_hyperplane(f, x);
                               });
    bool in_space = std::all_of(circuits.begin(), circuits.end(),
                                [&](const TropLinearForm& f) {
                                  return in_hyperplane(f, x);
                                });
    if (in_prev == in_space) return true;
    report.verdict = CompareVerdict::Counterexample;
    report.witness = x;
    report.witness_in_prevariety = in_prev;
    return false;
  };

  // (a) exponent-grid pattern points.
  if (p.n <= config.max_grid_dimension) {
    bool ok = true;
    for_each_pattern(p.n, config.grid_levels, [&](const TropPoint& x) {
      if (ok) ok = check_point(x);
    });
    if (!ok) return report;
  }

  // (b) support screening: with all Pluecker values finite, no space point
  // has support smaller than d+1, so any small-support prevariety point is
  // an immediate counterexample.
  bool all_finite = std::all_of(p.values.begin(), p.values.end(),
                                [](const TropValue& v) { return v.is_finite(); });
  if (all_finite && p.n > config.max_grid_dimension) {
    int k = p.n - p.d;
    for (int size = 1; size <= k; ++size)
      for (Subset s : k_subsets(p.n, size)) {
        std::vector<TropValue> coords(static_cast<size_t>(p.n),
                                      TropValue::infinity());
        for (int e : s.elements())
          coords[static_cast<size_t>(e)] = TropValue(Rational(0));
        if (!check_point(TropPoint(std::move(coords)))) return report;
      }
  }

  // (c) random rational points.
  std::mt19937_64 rng(config.seed);
  std::uniform_int_distribution<int> coin(0, 3);
  for (int t = 0; t < config.random_trials; ++t) {
    std::vector<TropValue> coords;
    bool any_finite = false;
    for (int i = 0; i < p.n; ++i) {
      if (coin(rng) == 0) {
        coords.push_back(TropValue::infinity());
      } else {
        coords.push_back(TropValue(random_rational_in(rng, -6, 6)));
        any_finite = true;
      }
    }
    if (!any_finite) continue;
    if (!check_point(TropPoint(std::move(coords)))) return report;
  }
  return report;
}

}  // namespace tropmat
