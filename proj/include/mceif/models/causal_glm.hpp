#pragma once

#include "mceif/eif.hpp"
#include "mceif/model.hpp"

namespace mceif {

/// Causal GLM with F continuous confounders, binary treatment and Gaussian
/// response:
///   c ~ N(0, I_F)
///   t | c ~ Bernoulli(logits = pi' c)
///   y | t, c ~ N(tau t + xi' c + mu0, 1)
///
/// Observation layout: x = (c_1..c_F, t, y), D = F + 2.
/// Parameter layout (frozen, all gradient code depends on it):
///   phi = (mu0, xi_1..xi_F, pi_1..pi_F, tau), p = 2F + 2.
/// The response variance is fixed at 1 and the confounder marginal carries no
/// parameters, so the joint log-density splits into three conditionals.
class CausalGlm : public ModelContract {
 public:
  explicit CausalGlm(Index confounders);

  Index confounders() const { return confounders_; }
  Index param_dim() const override { return 2 * confounders_ + 2; }
  Index obs_dim() const override { return confounders_ + 2; }

  Observation sample_one(const ParamVector& phi, Rng& rng) const override;
  double log_prob(const ParamVector& phi, const Observation& x) const override;
  Vector score(const ParamVector& phi, const Observation& x) const override;
  Matrix score_batch(const ParamVector& phi, const ObservationBatch& xs) const override;

  // phi coordinate accessors
  double mu0(const ParamVector& phi) const { return phi[0]; }
  Vector xi(const ParamVector& phi) const { return phi.segment(1, confounders_); }
  Vector pi(const ParamVector& phi) const {
    return phi.segment(1 + confounders_, confounders_);
  }
  double tau(const ParamVector& phi) const { return phi[param_dim() - 1]; }

  /// Outcome regression E[y | t, c] under phi.
  double outcome_mean(const ParamVector& phi, const Vector& c, double t) const;
  /// Propensity P(t = 1 | c) under phi.
  double propensity(const ParamVector& phi, const Vector& c) const;

  /// True parameter draw: standard normals on mu0 and tau, variance 1/sqrt(F)
  /// on xi and pi; tau overridable so experiments can fix the true ATE.
  ParamVector draw_params(Rng& rng, double tau_value) const;
  ParamVector draw_params(Rng& rng) const;

 private:
  Index confounders_;
};

/// Closed-form efficient influence function for the ATE functional (psi = tau)
/// at phi, derived from the population Fisher information of the family. The
/// Fisher blocks involving the propensity weights decouple, leaving three 1-D
/// Gaussian integrals of sigmoid moments evaluated by quadrature; no Monte
/// Carlo and no conjugate gradients anywhere on this path, so it serves as an
/// independent oracle for the MC route.
EifFn analytic_ate_eif(const CausalGlm& model, const ParamVector& phi);

}  // namespace mceif
