#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tropmat/field_matrix.hpp"
#include "tropmat/subset.hpp"
#include "tropmat/trop_matrix.hpp"
#include "tropmat/trop_value.hpp"

namespace tropmat {

/// Tropical linear form over [n]; support = the finite coefficients.
struct TropLinearForm {
  std::vector<TropValue> coefficients;
  Subset support() const;
  /// Fewer than two finite coefficients: the hyperplane condition is
  /// degenerate (satisfiable only with infinities).
  bool degenerate() const { return support().count() < 2; }
};

/// Point of TP^{n-1}: not all infinite, normalized so the least finite
/// coordinate is 0.
class TropPoint {
 public:
  explicit TropPoint(std::vector<TropValue> coords);
  const std::vector<TropValue>& coords() const { return coords_; }
  int size() const { return static_cast<int>(coords_.size()); }
  Subset support() const;
  friend bool operator==(const TropPoint& a, const TropPoint& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::vector<TropValue> coords_;
};

/// Tropical Pluecker vector: values over d-subsets of [n] in lex order.
struct TropPlucker {
  int d = 0, n = 0;
  std::vector<TropValue> values;  // size C(n,d)

  const TropValue& at(Subset dsubset) const;
  static TropPlucker constant_zero(int d, int n);  // the uniform matroid
  /// Valuation of an exact Pluecker vector.
  static TropPlucker from_minors(const PluckerVector& p);
};

struct PluckerViolation {
  Subset s;  // the (d-2)-subset
  int i, j, k, l;  // 0-indexed
};

struct PluckerValidation {
  bool valid = true;
  std::vector<PluckerViolation> violations;
};

/// Checks the 3-term relations over all (S, {i,j,k,l}); an all-infinite
/// minimum counts as attained twice.
PluckerValidation validate_plucker(const TropPlucker& p);

/// One form per (d+1)-subset I: coefficient p_{I minus i} at i in I,
/// infinity elsewhere.
std::vector<TropLinearForm> circuits_of_plucker(const TropPlucker& p);

/// min_i (c_i + x_i) attained at least twice; an all-infinite minimum
/// counts as satisfied.
bool in_hyperplane(const TropLinearForm& f, const TropPoint& x);

/// In every circuit hyperplane of p.
bool in_linear_space(const TropPlucker& p, const TropPoint& x);

struct MembershipResult {
  bool member = false;
  /// Principal candidate v* with v*_j = sup_i (x_i - D_ij).
  std::vector<TropValue> preimage;
  /// A coordinate where D (.) v* differs from x, when not a member.
  std::optional<int> violating_coordinate;
};

/// x in im(D) iff D (.) v* = x for the principal residuation candidate.
MembershipResult trop_image_membership(const TropMatrix& d, const TropPoint& x);

/// Samples tropical combinations of deg(A)'s columns and verifies each
/// lies in every tropicalized circuit hyperplane of the column space.
/// Always true; a false return is a bug certificate.
bool containment_check(const FieldMatrix& a, int samples = 500,
                       std::uint64_t seed = 0);

/// Writes v (nonzero, in the column space of a) as a sum of cocircuits
/// with deg(v) = min of the pieces' degrees coordinatewise, following the
/// support-shrinking recursion. Throws NotInSpace.
std::vector<FieldVector> cocircuit_decomposition(const FieldVector& v,
                                                 const FieldMatrix& a);

struct ParametrizationResult {
  bool equal = false;
  std::vector<Subset> missing_supports;
  /// deg of a cocircuit with a missing support; fails image membership.
  std::optional<TropPoint> non_member_witness;
};

/// deg(L) = im(deg(A)) iff every cocircuit support of L = colspace(A)
/// appears among the columns of A (such a column is automatically a
/// scalar multiple of the cocircuit). On success additionally verifies
/// sampled image equality; on failure reports the missing supports and an
/// exact non-member witness.
ParametrizationResult parametrization_equality(const FieldMatrix& a,
                                               int samples = 200,
                                               std::uint64_t seed = 0);

struct SamplerConfig {
  std::uint64_t seed = 0;
  std::vector<Rational> grid_levels;  // finite exponent levels for patterns
  int random_trials = 1000;
  int max_grid_dimension = 8;
  SamplerConfig();
};

enum class CompareVerdict { EqualOnSamples, Counterexample };

struct PrevarietyReport {
  CompareVerdict verdict = CompareVerdict::EqualOnSamples;
  std::optional<TropPoint> witness;
  /// True when the witness satisfies the forms but is outside the space;
  /// false for the reverse discrepancy (which indicates invalid forms).
  bool witness_in_prevariety = true;
  std::int64_t points_checked = 0;
};

/// Heuristic equality test between the prevariety of the forms and the
/// tropical linear space of p: exponent-grid pattern points, random
/// points, and support-size screening. Equality is only "on samples".
PrevarietyReport prevariety_vs_space(const std::vector<TropLinearForm>& forms,
                                     const TropPlucker& p,
                                     const SamplerConfig& config = {});

}  // namespace tropmat
