#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "mceif/fisher.hpp"
#include "mceif/functional.hpp"
#include "mceif/model.hpp"

#include "json.hpp"

namespace mceif {

/// Pointwise influence values as a callable, so the estimator templates can
/// take either the Monte Carlo evaluator or a closed-form reference.
using EifFn = std::function<Vector(const Observation&)>;

/// Precomputed Monte Carlo EIF state: W = I_hat^{-1} grad_psi^T solved once
/// per functional output coordinate, then evaluate(x) = W * score(phi, x).
class EifEvaluator {
 public:
  EifEvaluator(const ModelContract& model, ParamVector phi, Matrix solved_directions,
               Index sample_count, double damping, std::vector<CgResult> row_solves);

  const ModelContract& model() const { return *model_; }
  const ParamVector& phi() const { return phi_; }
  Index output_dim() const { return solved_directions_.rows(); }
  Index param_dim() const { return solved_directions_.cols(); }
  Index sample_count() const { return sample_count_; }
  const Matrix& solved_directions() const { return solved_directions_; }
  const std::vector<CgResult>& row_solves() const { return row_solves_; }
  bool all_converged() const;

  Vector evaluate(const Observation& x) const;

  /// N x L matrix of influence values over a batch.
  Matrix evaluate_batch(const ObservationBatch& xs) const;

  EifFn as_fn() const;

  /// {M, L, p, cg_iters_per_row, residuals, damping}
  nlohmann::json diagnostics() const;

 private:
  const ModelContract* model_;
  ParamVector phi_;
  Matrix solved_directions_;  // L x p
  Index sample_count_;
  double damping_;
  std::vector<CgResult> row_solves_;  // solutions dropped, iters/residuals kept
};

/// Assembles the evaluator from the functional gradient, the empirical Fisher
/// and a CG solve per output row. The gradient estimator and the Fisher share
/// the sample budget M but draw from split streams.
EifEvaluator build_eif(const ModelContract& model, const FunctionalContract& functional,
                       const ParamVector& phi, Index sample_count, const Rng& rng,
                       const CgConfig& cfg = {}, FisherMode mode = FisherMode::kCached);

/// Monte Carlo mean of evaluate() over K fresh model draws; a direct check of
/// the influence-function mean-zero identity.
Vector mean_zero_check(const EifEvaluator& ev, Rng& rng, Index draws);

}  // namespace mceif
