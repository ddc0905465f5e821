#pragma once

#include <functional>

#include "mceif/eif.hpp"
#include "mceif/functional.hpp"
#include "mceif/model.hpp"

namespace mceif {

/// Disjoint half split: first half fits the model, second half feeds the
/// influence-function correction.
struct SplitData {
  ObservationBatch train;
  ObservationBatch holdout;
};

SplitData split_data(const ObservationBatch& data);

/// Log-prior with gradient, for MAP fitting.
struct LogPrior {
  std::function<double(const ParamVector&)> log_density;
  std::function<Vector(const ParamVector&)> gradient;
};

LogPrior flat_prior();
/// Independent normals with per-coordinate standard deviations.
LogPrior gaussian_prior(Vector mean, Vector sd);

struct MapConfig {
  Index max_iters = 2000;
  double step_size = 1e-2;
  double grad_tolerance = 1e-6;
};

struct MapResult {
  ParamVector phi;
  Index iters = 0;
  double grad_norm = 0.0;
  bool converged = false;
};

/// Gradient ascent on the log posterior with backtracking halving whenever a
/// step would decrease it, and step growth after accepted steps.
MapResult map_fit(const ModelContract& model, const LogPrior& prior,
                  const ObservationBatch& data, const MapConfig& cfg,
                  const ParamVector& phi0);

Vector plug_in(const FunctionalContract& functional, const ParamVector& phi_hat);

/// Plug-in plus the held-out average of the influence function. The eif
/// argument takes either the Monte Carlo evaluator or a closed-form EIF.
Vector one_step(const FunctionalContract& functional, const ParamVector& phi_hat,
                const ObservationBatch& holdout, const EifFn& eif);

/// Convenience overload that builds the MC-EIF evaluator internally.
Vector one_step(const ModelContract& model, const FunctionalContract& functional,
                const ParamVector& phi_hat, const ObservationBatch& holdout,
                Index sample_count, const Rng& rng, const CgConfig& cfg = {});

/// Per-observation moment m(x, eta(p_phi_hat)) for linear estimating
/// equations g = m - theta.
using MomentFn = std::function<Vector(const Observation&)>;

/// Debiased ML under the linear moment assumption: the empirical orthogonal
/// moment (2/N) sum [m(x_n) - theta + eif(x_n)] has the unique closed-form
/// root theta = holdout mean of m + eif, so no iterative root-finder is run.
Vector dml_linear(const MomentFn& moment, const ObservationBatch& holdout,
                  const EifFn& eif);

struct TmleConfig {
  Index ascent_steps = 200;
  double step_size = 1e-2;
  double feasibility_margin = 1e-6;  // 1 + eps' eif(x) >= margin on holdout
  Index eval_samples = 10000;        // fresh model draws for the reweighted functional
};

struct TmleResult {
  Vector estimate;
  Vector epsilon;
  double objective_gain = 0.0;  // perturbed holdout log-likelihood improvement
};

/// Integrand h(x, eps) with Psi(p_eps) = E_{p_eps}[h(x, eps)], used to
/// evaluate the functional under the fluctuated density.
using TmleIntegrand = std::function<Vector(const Observation&, const Vector&)>;

/// One-step TMLE: fits the fluctuation size eps by projected gradient ascent
/// of the perturbed holdout log-likelihood, then re-evaluates the functional
/// under the fluctuated density via self-normalized importance reweighting of
/// fresh model samples. The reweighted evaluation is applied as a difference
/// from its eps = 0 counterpart on the same sample set, so eps = 0 (and any
/// identically zero EIF) returns the plug-in exactly.
TmleResult tmle_one_step(const FunctionalContract& functional, const ModelContract& model,
                         const ParamVector& phi_hat, const ObservationBatch& holdout,
                         const EifFn& eif, const TmleIntegrand& integrand,
                         const TmleConfig& cfg, const Rng& rng);

/// Integrand for expectation-of-density functionals (psi = E_p[p(x)]): under
/// the fluctuated density the integrand itself is p_eps(x).
TmleIntegrand density_integrand(const ModelContract& model, const ParamVector& phi_hat,
                                const EifFn& eif);

}  // namespace mceif
