#pragma once

#include "mceif/model.hpp"

namespace mceif {

/// Univariate normal family. Two variants:
///   known sigma:   phi = (mu),        sigma fixed at construction (p = 1)
///   unknown sigma: phi = (mu, sigma), sigma > 0 enforced (p = 2)
/// sigma is parameterized directly, not on the log scale; sigma <= 0 is a
/// domain error.
class Gaussian1D : public ModelContract {
 public:
  static Gaussian1D known_sigma(double sigma = 1.0) { return Gaussian1D(true, sigma); }
  static Gaussian1D unknown_sigma() { return Gaussian1D(false, 1.0); }

  Index param_dim() const override { return known_sigma_ ? 1 : 2; }
  Index obs_dim() const override { return 1; }

  Observation sample_one(const ParamVector& phi, Rng& rng) const override;
  double log_prob(const ParamVector& phi, const Observation& x) const override;
  Vector score(const ParamVector& phi, const Observation& x) const override;

  double sigma_of(const ParamVector& phi) const;

 private:
  Gaussian1D(bool known, double sigma) : known_sigma_(known), fixed_sigma_(sigma) {}

  bool known_sigma_;
  double fixed_sigma_;
};

}  // namespace mceif
