#include "mceif/estimators.hpp"

#include <cmath>
#include <limits>

namespace mceif {

SplitData split_data(const ObservationBatch& data) {
  const Index n = data.rows();
  if (n < 2) throw std::invalid_argument("split_data: need at least two observations");
  const Index n_train = n / 2;
  return {data.topRows(n_train), data.bottomRows(n - n_train)};
}

LogPrior flat_prior() {
  return {[](const ParamVector&) { return 0.0; },
          [](const ParamVector& phi) { return Vector(Vector::Zero(phi.size())); }};
}

LogPrior gaussian_prior(Vector mean, Vector sd) {
  return {[mean, sd](const ParamVector& phi) {
            double lp = 0.0;
            for (Index i = 0; i < phi.size(); ++i) {
              const double z = (phi[i] - mean[i]) / sd[i];
              lp += -0.5 * z * z - std::log(sd[i]);
            }
            return lp;
          },
          [mean, sd](const ParamVector& phi) {
            Vector g(phi.size());
            for (Index i = 0; i < phi.size(); ++i)
              g[i] = -(phi[i] - mean[i]) / (sd[i] * sd[i]);
            return g;
          }};
}

namespace {

double log_posterior(const ModelContract& model, const LogPrior& prior,
                     const ObservationBatch& data, const ParamVector& phi) {
  return model.log_prob_sum(phi, data) + prior.log_density(phi);
}

Vector log_posterior_grad(const ModelContract& model, const LogPrior& prior,
                          const ObservationBatch& data, const ParamVector& phi) {
  return model.score_batch(phi, data).colwise().sum().transpose() + prior.gradient(phi);
}

}  // namespace

MapResult map_fit(const ModelContract& model, const LogPrior& prior,
                  const ObservationBatch& data, const MapConfig& cfg,
                  const ParamVector& phi0) {
  if (data.rows() < 1) throw std::invalid_argument("map_fit: data must be nonempty");

  MapResult res;
  res.phi = phi0;
  double obj = log_posterior(model, prior, data, res.phi);
  if (!std::isfinite(obj)) throw std::runtime_error("map_fit: divergent start");
  double step = cfg.step_size;

  for (res.iters = 0; res.iters < cfg.max_iters; ++res.iters) {
    const Vector grad = log_posterior_grad(model, prior, data, res.phi);
    res.grad_norm = grad.norm();
    if (res.grad_norm <= cfg.grad_tolerance) {
      res.converged = true;
      return res;
    }

    // Backtracking: halve until the log posterior does not decrease.
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries) {
      ParamVector cand = res.phi + step * grad;
      double cand_obj;
      try {
        cand_obj = log_posterior(model, prior, data, cand);
      } catch (const std::domain_error&) {
        cand_obj = -std::numeric_limits<double>::infinity();
      }
      if (std::isfinite(cand_obj) && cand_obj >= obj) {
        res.phi = std::move(cand);
        obj = cand_obj;
        accepted = true;
        step = std::min(step * 2.0, 1.0);
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      // No ascent direction at floating-point resolution.
      res.converged = res.grad_norm <= cfg.grad_tolerance;
      return res;
    }
  }
  res.grad_norm = log_posterior_grad(model, prior, data, res.phi).norm();
  res.converged = res.grad_norm <= cfg.grad_tolerance;
  return res;
}

Vector plug_in(const FunctionalContract& functional, const ParamVector& phi_hat) {
  return functional.value(phi_hat);
}

Vector one_step(const FunctionalContract& functional, const ParamVector& phi_hat,
                const ObservationBatch& holdout, const EifFn& eif) {
  if (holdout.rows() < 1) throw std::invalid_argument("one_step: holdout must be nonempty");
  Vector correction = Vector::Zero(functional.output_dim());
  for (Index i = 0; i < holdout.rows(); ++i) correction += eif(holdout.row(i));
  correction /= static_cast<double>(holdout.rows());
  return plug_in(functional, phi_hat) + correction;
}

Vector one_step(const ModelContract& model, const FunctionalContract& functional,
                const ParamVector& phi_hat, const ObservationBatch& holdout,
                Index sample_count, const Rng& rng, const CgConfig& cfg) {
  const EifEvaluator ev = build_eif(model, functional, phi_hat, sample_count, rng, cfg);
  return one_step(functional, phi_hat, holdout, ev.as_fn());
}

Vector dml_linear(const MomentFn& moment, const ObservationBatch& holdout,
                  const EifFn& eif) {
  if (holdout.rows() < 1) throw std::invalid_argument("dml_linear: holdout must be nonempty");
  Vector acc = moment(holdout.row(0)) + eif(holdout.row(0));
  for (Index i = 1; i < holdout.rows(); ++i)
    acc += moment(holdout.row(i)) + eif(holdout.row(i));
  return acc / static_cast<double>(holdout.rows());
}

TmleResult tmle_one_step(const FunctionalContract& functional, const ModelContract& model,
                         const ParamVector& phi_hat, const ObservationBatch& holdout,
                         const EifFn& eif, const TmleIntegrand& integrand,
                         const TmleConfig& cfg, const Rng& rng) {
  const Index n = holdout.rows();
  if (n < 1) throw std::invalid_argument("tmle_one_step: holdout must be nonempty");
  const Index out_dim = functional.output_dim();

  Matrix holdout_eif(n, out_dim);
  for (Index i = 0; i < n; ++i) holdout_eif.row(i) = eif(holdout.row(i)).transpose();

  const auto feasible = [&](const Vector& eps) {
    return ((holdout_eif * eps).array() + 1.0 >= cfg.feasibility_margin).all();
  };
  const auto objective = [&](const Vector& eps) {
    return (holdout_eif * eps).array().log1p().sum() / static_cast<double>(n);
  };

  // Projected gradient ascent from eps = 0, which is always feasible.
  Vector eps = Vector::Zero(out_dim);
  double obj = 0.0;
  for (Index it = 0; it < cfg.ascent_steps; ++it) {
    const Vector ratios = (1.0 + (holdout_eif * eps).array()).inverse().matrix();
    const Vector grad = holdout_eif.transpose() * ratios / static_cast<double>(n);
    double step = cfg.step_size;
    bool moved = false;
    for (int tries = 0; tries < 40; ++tries) {
      const Vector cand = eps + step * grad;
      if (feasible(cand)) {
        const double cand_obj = objective(cand);
        if (cand_obj >= obj) {
          eps = cand;
          obj = cand_obj;
          moved = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!moved) break;
  }

  // Reweighted functional value on fresh model draws, taken as a difference
  // against the eps = 0 evaluation of the same sample set.
  Rng eval_rng = rng.split(17);
  const ObservationBatch xs = model.sample(phi_hat, eval_rng, cfg.eval_samples);

  Vector weighted = Vector::Zero(out_dim);
  Vector unweighted = Vector::Zero(out_dim);
  const Vector eps0 = Vector::Zero(out_dim);
  double weight_sum = 0.0;
  for (Index m = 0; m < xs.rows(); ++m) {
    const Observation x = xs.row(m);
    const double w = std::max(1.0 + eps.dot(eif(x)), cfg.feasibility_margin);
    weight_sum += w;
    weighted += w * integrand(x, eps);
    unweighted += integrand(x, eps0);
  }
  weighted /= weight_sum;
  unweighted /= static_cast<double>(xs.rows());

  TmleResult res;
  res.epsilon = eps;
  res.objective_gain = obj;
  res.estimate = plug_in(functional, phi_hat) + (weighted - unweighted);
  return res;
}

TmleIntegrand density_integrand(const ModelContract& model, const ParamVector& phi_hat,
                                const EifFn& eif) {
  return [&model, phi_hat, eif](const Observation& x, const Vector& eps) {
    const double base = std::exp(model.log_prob(phi_hat, x));
    Vector out(eps.size());
    out.fill((1.0 + eps.dot(eif(x))) * base);
    return out;
  };
}

}  // namespace mceif
