#include "mceif/functionals/expected_density.hpp"

#include <cmath>

namespace mceif {

ExpectedDensity::ExpectedDensity(Gaussian1D model, GradientMode mode, Index value_budget,
                                 std::uint64_t value_seed)
    : model_(std::move(model)),
      mode_(mode),
      value_budget_(value_budget),
      value_seed_(value_seed) {}

Vector ExpectedDensity::value(const ParamVector& phi) const {
  const double sigma = model_.sigma_of(phi);
  Vector v(1);
  if (mode_ == GradientMode::kAnalytic) {
    v[0] = 1.0 / (2.0 * sigma * std::sqrt(M_PI));
    return v;
  }
  // (1/m) sum p_phi(mu + sigma z); p_phi at a reparameterized draw depends
  // only on z and sigma.
  Rng rng(value_seed_);
  double acc = 0.0;
  for (Index i = 0; i < value_budget_; ++i) {
    const double z = rng.normal();
    acc += std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * M_PI));
  }
  v[0] = acc / static_cast<double>(value_budget_);
  return v;
}

Matrix ExpectedDensity::gradient(const ParamVector& phi, Index budget, Rng& rng) const {
  const double sigma = model_.sigma_of(phi);
  Matrix g = Matrix::Zero(1, model_.param_dim());
  if (model_.param_dim() == 1) return g;  // known sigma: psi does not depend on mu

  if (mode_ == GradientMode::kAnalytic) {
    g(0, 1) = -1.0 / (2.0 * sigma * sigma * std::sqrt(M_PI));
    return g;
  }
  if (budget < 1) throw std::invalid_argument("ExpectedDensity::gradient: budget must be >= 1");
  double acc = 0.0;
  for (Index i = 0; i < budget; ++i) {
    const double z = rng.normal();
    acc += -std::exp(-0.5 * z * z) / (sigma * sigma * std::sqrt(2.0 * M_PI));
  }
  g(0, 1) = acc / static_cast<double>(budget);
  return g;
}

}  // namespace mceif
