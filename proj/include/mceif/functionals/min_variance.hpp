#pragma once

#include "mceif/functional.hpp"
#include "mceif/models/mvn_cov.hpp"

namespace mceif {

/// Global minimum variance portfolio weights (the infinite risk-aversion
/// limit of the Markowitz program): theta = Sigma^{-1} 1 / (1' Sigma^{-1} 1),
/// so the weights sum to one by construction. The gradient differentiates the
/// closed-form map by central finite differences over the Cholesky
/// parameters.
class MinVariancePortfolio : public FunctionalContract {
 public:
  explicit MinVariancePortfolio(MvnCov model) : model_(std::move(model)) {}

  Index output_dim() const override { return model_.assets(); }
  Vector value(const ParamVector& phi) const override;
  Matrix gradient(const ParamVector& phi, Index budget, Rng& rng) const override;

  /// Weights for an explicit covariance; shared by the true-optimum oracle.
  static Vector weights(const Matrix& sigma);

 private:
  MvnCov model_;
};

}  // namespace mceif
