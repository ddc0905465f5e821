#pragma once

#include <cstdint>

#include "mceif/functional.hpp"
#include "mceif/models/gaussian1d.hpp"

namespace mceif {

enum class GradientMode { kAnalytic, kMonteCarlo };

/// Expected density psi = integral of p(x)^2 dx for the Gaussian1D family,
/// which is 1/(2 sigma sqrt(pi)) in closed form. The Monte Carlo mode uses the
/// reparameterization x = mu + sigma z, under which both the value and the
/// pathwise gradient reduce to averages over z; the mu component vanishes
/// identically because the functional is translation invariant.
class ExpectedDensity : public FunctionalContract {
 public:
  ExpectedDensity(Gaussian1D model, GradientMode mode,
                  Index value_budget = 10000, std::uint64_t value_seed = 0);

  Index output_dim() const override { return 1; }
  Vector value(const ParamVector& phi) const override;
  Matrix gradient(const ParamVector& phi, Index budget, Rng& rng) const override;

  GradientMode mode() const { return mode_; }

 private:
  Gaussian1D model_;
  GradientMode mode_;
  Index value_budget_;
  std::uint64_t value_seed_;
};

}  // namespace mceif
