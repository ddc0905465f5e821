#pragma once

#include "mceif/estimators.hpp"
#include "mceif/functional.hpp"
#include "mceif/functionals/expected_density.hpp"  // GradientMode
#include "mceif/models/causal_glm.hpp"

namespace mceif {

/// Average treatment effect on the causal GLM. The linear outcome model makes
/// psi = tau exactly, so the analytic gradient is the unit vector selecting
/// tau. The Monte Carlo mode simulates the interventional contrast
/// y(t=1) - y(t=0) with confounders drawn from the model; its pathwise
/// gradient is the same unit vector (the contrast is linear in tau).
class AteFunctional : public FunctionalContract {
 public:
  AteFunctional(CausalGlm model, GradientMode mode,
                Index value_budget = 10000, std::uint64_t value_seed = 0);

  Index output_dim() const override { return 1; }
  Vector value(const ParamVector& phi) const override;
  Matrix gradient(const ParamVector& phi, Index budget, Rng& rng) const override;

 private:
  CausalGlm model_;
  GradientMode mode_;
  Index value_budget_;
  std::uint64_t value_seed_;
};

/// Regression-difference moment m(x) = E[y|t=1,c] - E[y|t=0,c] under
/// phi_hat; with the linear outcome model this is the tau coordinate, making
/// the associated functional the ATE itself.
MomentFn ate_regression_moment(const CausalGlm& model, const ParamVector& phi_hat);

/// Outcome-regression (AIPW-style) integrand whose expectation under any
/// distribution over (c, t, y) recovers that distribution's ATE when the
/// phi_hat outcome regression or propensity is correct; used to evaluate the
/// TMLE-fluctuated density. Propensities are clipped away from {0, 1}.
TmleIntegrand ate_aipw_integrand(const CausalGlm& model, const ParamVector& phi_hat,
                                 double propensity_clip = 1e-3);

}  // namespace mceif
