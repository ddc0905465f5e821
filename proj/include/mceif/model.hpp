#pragma once

#include <stdexcept>

#include "mceif/rng.hpp"
#include "mceif/types.hpp"

namespace mceif {

/// Parametric family contract: sampling, log-density and the analytic score
/// gradient d/dphi log p_phi(x). All operations are pure given (phi, rng
/// state); sample() must consume the rng strictly row by row so that drawing
/// a batch in chunks reproduces a single-call draw.
class ModelContract {
 public:
  virtual ~ModelContract() = default;

  virtual Index param_dim() const = 0;
  virtual Index obs_dim() const = 0;

  virtual Observation sample_one(const ParamVector& phi, Rng& rng) const = 0;

  virtual double log_prob(const ParamVector& phi, const Observation& x) const = 0;

  /// Analytic gradient of log_prob with respect to phi, length param_dim().
  virtual Vector score(const ParamVector& phi, const Observation& x) const = 0;

  ObservationBatch sample(const ParamVector& phi, Rng& rng, Index n) const {
    if (n < 1) throw std::invalid_argument("sample: n must be >= 1");
    ObservationBatch out(n, obs_dim());
    for (Index i = 0; i < n; ++i) out.row(i) = sample_one(phi, rng);
    return out;
  }

  /// Per-row scores stacked into an N x p Jacobian. Models may override with
  /// a vectorized path; the result must match score() row for row.
  virtual Matrix score_batch(const ParamVector& phi, const ObservationBatch& xs) const {
    Matrix j(xs.rows(), param_dim());
    for (Index i = 0; i < xs.rows(); ++i) j.row(i) = score(phi, xs.row(i));
    return j;
  }

  double log_prob_sum(const ParamVector& phi, const ObservationBatch& xs) const {
    double s = 0.0;
    for (Index i = 0; i < xs.rows(); ++i) s += log_prob(phi, xs.row(i));
    return s;
  }
};

/// Max relative error between the analytic score and a central finite
/// difference of log_prob. Validates every bundled model implementation.
double score_fd_error(const ModelContract& model, const ParamVector& phi,
                      const Observation& x, double h = 1e-6);

}  // namespace mceif
