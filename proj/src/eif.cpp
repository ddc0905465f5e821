#include "mceif/eif.hpp"

namespace mceif {

EifEvaluator::EifEvaluator(const ModelContract& model, ParamVector phi,
                           Matrix solved_directions, Index sample_count, double damping,
                           std::vector<CgResult> row_solves)
    : model_(&model),
      phi_(std::move(phi)),
      solved_directions_(std::move(solved_directions)),
      sample_count_(sample_count),
      damping_(damping),
      row_solves_(std::move(row_solves)) {}

bool EifEvaluator::all_converged() const {
  for (const auto& s : row_solves_)
    if (!s.converged) return false;
  return true;
}

Vector EifEvaluator::evaluate(const Observation& x) const {
  return solved_directions_ * model_->score(phi_, x);
}

Matrix EifEvaluator::evaluate_batch(const ObservationBatch& xs) const {
  return model_->score_batch(phi_, xs) * solved_directions_.transpose();
}

EifFn EifEvaluator::as_fn() const {
  return [this](const Observation& x) { return evaluate(x); };
}

nlohmann::json EifEvaluator::diagnostics() const {
  nlohmann::json j;
  j["M"] = sample_count_;
  j["L"] = output_dim();
  j["p"] = param_dim();
  j["damping"] = damping_;
  std::vector<Index> iters;
  std::vector<double> residuals;
  for (const auto& s : row_solves_) {
    iters.push_back(s.iters);
    residuals.push_back(s.residual);
  }
  j["cg_iters_per_row"] = iters;
  j["residuals"] = residuals;
  return j;
}

EifEvaluator build_eif(const ModelContract& model, const FunctionalContract& functional,
                       const ParamVector& phi, Index sample_count, const Rng& rng,
                       const CgConfig& cfg, FisherMode mode) {
  const Index out_dim = functional.output_dim();

  Rng grad_rng = rng.split(1);
  const Matrix grad = functional.gradient(phi, sample_count, grad_rng);
  if (grad.rows() != out_dim || grad.cols() != phi.size())
    throw std::invalid_argument("build_eif: functional gradient has wrong shape");

  const FisherOperator fisher =
      build_fisher(model, phi, sample_count, rng.split(0), mode, cfg.damping);

  // One solve per output coordinate; symmetry of the Fisher estimate makes
  // W * score(x) identical to the per-point formula grad * I^{-1} score(x).
  Matrix w(out_dim, phi.size());
  std::vector<CgResult> solves;
  solves.reserve(out_dim);
  for (Index l = 0; l < out_dim; ++l) {
    CgResult s = cg_solve(fisher, grad.row(l).transpose(), cfg);
    w.row(l) = s.solution.transpose();
    s.solution.resize(0);
    solves.push_back(std::move(s));
  }
  return EifEvaluator(model, phi, std::move(w), sample_count, fisher.damping(),
                      std::move(solves));
}

Vector mean_zero_check(const EifEvaluator& ev, Rng& rng, Index draws) {
  if (draws < 1) throw std::invalid_argument("mean_zero_check: draws must be >= 1");
  const ObservationBatch xs = ev.model().sample(ev.phi(), rng, draws);
  return ev.evaluate_batch(xs).colwise().mean();
}

}  // namespace mceif
