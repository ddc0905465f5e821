#include "mceif/functionals/ate.hpp"

#include <algorithm>
#include <cmath>

namespace mceif {

AteFunctional::AteFunctional(CausalGlm model, GradientMode mode, Index value_budget,
                             std::uint64_t value_seed)
    : model_(std::move(model)),
      mode_(mode),
      value_budget_(value_budget),
      value_seed_(value_seed) {}

Vector AteFunctional::value(const ParamVector& phi) const {
  Vector v(1);
  if (mode_ == GradientMode::kAnalytic) {
    v[0] = model_.tau(phi);
    return v;
  }
  // Interventional contrast averaged over model-drawn confounders and
  // response noise.
  Rng rng(value_seed_);
  const Index f = model_.confounders();
  double acc = 0.0;
  for (Index i = 0; i < value_budget_; ++i) {
    Vector c(f);
    for (Index k = 0; k < f; ++k) c[k] = rng.normal();
    const double y1 = model_.outcome_mean(phi, c, 1.0) + rng.normal();
    const double y0 = model_.outcome_mean(phi, c, 0.0) + rng.normal();
    acc += y1 - y0;
  }
  v[0] = acc / static_cast<double>(value_budget_);
  return v;
}

Matrix AteFunctional::gradient(const ParamVector& phi, Index /*budget*/, Rng& /*rng*/) const {
  // Pathwise derivative of the contrast is exactly the tau selector in both
  // modes: the confounder and noise terms cancel in y(1) - y(0).
  Matrix g = Matrix::Zero(1, model_.param_dim());
  g(0, model_.param_dim() - 1) = 1.0;
  return g;
}

MomentFn ate_regression_moment(const CausalGlm& model, const ParamVector& phi_hat) {
  const double tau = model.tau(phi_hat);
  return [tau](const Observation&) {
    Vector v(1);
    v[0] = tau;
    return v;
  };
}

TmleIntegrand ate_aipw_integrand(const CausalGlm& model, const ParamVector& phi_hat,
                                 double propensity_clip) {
  const Index f = model.confounders();
  CausalGlm m = model;
  ParamVector phi = phi_hat;
  return [m, phi, f, propensity_clip](const Observation& x, const Vector& /*eps*/) {
    const Vector c = x.head(f);
    const double t = x[f];
    const double y = x[f + 1];
    const double q1 = m.outcome_mean(phi, c, 1.0);
    const double q0 = m.outcome_mean(phi, c, 0.0);
    double e = m.propensity(phi, c);
    e = std::min(std::max(e, propensity_clip), 1.0 - propensity_clip);
    const double qt = t > 0.5 ? q1 : q0;
    const double ipw = t > 0.5 ? 1.0 / e : -1.0 / (1.0 - e);
    Vector v(1);
    v[0] = q1 - q0 + ipw * (y - qt);
    return v;
  };
}

}  // namespace mceif
