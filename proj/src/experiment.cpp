#include "tropmat/experiment.hpp"

#include "tropmat/error.hpp"

namespace tropmat {

ConverseReport converse_experiment(const FieldMatrix& m,
                                   const ConverseConfig& config) {
  // L = kernel of the rows; the rows live in its orthogonal complement.
  EliminationResult elim = kernel_and_rowspace(m);
  if (elim.kernel_basis.empty())
    fail(ErrorCode::InvalidArgument, "the rows cut out the zero space");
  FieldMatrix l_basis = FieldMatrix::from_rows(elim.kernel_basis);

  PluckerVector pv = plucker_vector(l_basis);
  for (const Puiseux& minor : pv.minors) {
    if (minor.is_indeterminate())
      fail(ErrorCode::PrecisionExhausted,
           "a Pluecker minor has no certified leading term");
    if (!minor.is_nonzero())
      fail(ErrorCode::PluckerCoordinateZero,
           "L has a zero Pluecker coordinate; the rank criterion and the "
           "conjecture do not apply");
  }

  ConverseReport report;
  report.k = elim.rank;  // codim L = rank of the row matrix

  TropMatrix dm = deg(m);
  RankConditionResult cond = column_rank_condition(dm, report.k);
  report.rank_condition_holds = cond.holds;
  report.violating_columns = cond.witness_columns;

  std::vector<TropLinearForm> forms;
  for (int i = 0; i < m.rows(); ++i) {
    TropLinearForm f;
    f.coefficients = dm.row(i);
    forms.push_back(std::move(f));
  }
  TropPlucker p = TropPlucker::from_minors(pv);
  SamplerConfig sampler;
  sampler.seed = config.seed;
  sampler.random_trials = config.samples;
  report.comparison = prevariety_vs_space(forms, p, sampler);
  return report;
}

}  // namespace tropmat
