#include "mceif/models/gaussian1d.hpp"

#include <cmath>

namespace mceif {

namespace {
constexpr double kLogTwoPi = 1.8378770664093453;
}

double Gaussian1D::sigma_of(const ParamVector& phi) const {
  const double sigma = known_sigma_ ? fixed_sigma_ : phi[1];
  if (sigma <= 0.0) throw std::domain_error("Gaussian1D: sigma must be positive");
  return sigma;
}

Observation Gaussian1D::sample_one(const ParamVector& phi, Rng& rng) const {
  Observation x(1);
  x[0] = phi[0] + sigma_of(phi) * rng.normal();
  return x;
}

double Gaussian1D::log_prob(const ParamVector& phi, const Observation& x) const {
  const double sigma = sigma_of(phi);
  const double z = (x[0] - phi[0]) / sigma;
  return -0.5 * kLogTwoPi - std::log(sigma) - 0.5 * z * z;
}

Vector Gaussian1D::score(const ParamVector& phi, const Observation& x) const {
  const double sigma = sigma_of(phi);
  const double d = x[0] - phi[0];
  Vector s(param_dim());
  s[0] = d / (sigma * sigma);
  if (!known_sigma_) s[1] = (d * d - sigma * sigma) / (sigma * sigma * sigma);
  return s;
}

}  // namespace mceif
