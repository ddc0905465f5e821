#pragma once

#include "mceif/rng.hpp"
#include "mceif/types.hpp"

namespace mceif {

/// Target functional psi(phi) in R^L with a gradient estimator. Monte Carlo
/// gradient modes take a sample budget and must shrink their error like
/// O(1/sqrt(budget)); closed-form gradients ignore the budget and the rng.
class FunctionalContract {
 public:
  virtual ~FunctionalContract() = default;

  virtual Index output_dim() const = 0;

  virtual Vector value(const ParamVector& phi) const = 0;

  /// L x p gradient d psi / d phi.
  virtual Matrix gradient(const ParamVector& phi, Index budget, Rng& rng) const = 0;
};

/// Central finite difference of value(), used to validate analytic gradients.
Matrix functional_fd_gradient(const FunctionalContract& f, const ParamVector& phi,
                              double h = 1e-5);

}  // namespace mceif
