#pragma once

#include "mceif/model.hpp"

namespace mceif {

/// Zero-mean multivariate normal with unknown covariance, parameterized by
/// the lower-triangular Cholesky factor of Sigma with log-diagonal so the
/// parameter space is all of R^p, p = D(D+1)/2.
///
/// Layout (frozen): row-major lower triangle, phi[i(i+1)/2 + j] = L_ij for
/// j < i and log L_ii for j == i.
class MvnCov : public ModelContract {
 public:
  explicit MvnCov(Index assets);

  Index assets() const { return assets_; }
  Index param_dim() const override { return assets_ * (assets_ + 1) / 2; }
  Index obs_dim() const override { return assets_; }

  Observation sample_one(const ParamVector& phi, Rng& rng) const override;
  double log_prob(const ParamVector& phi, const Observation& x) const override;
  Vector score(const ParamVector& phi, const Observation& x) const override;

  Matrix cholesky(const ParamVector& phi) const;
  Matrix sigma(const ParamVector& phi) const;
  ParamVector params_from_sigma(const Matrix& sigma) const;

 private:
  Index assets_;
};

}  // namespace mceif
