#include "mceif/functionals/min_variance.hpp"

#include <cmath>
#include <stdexcept>

namespace mceif {

Vector MinVariancePortfolio::weights(const Matrix& sigma) {
  Eigen::LDLT<Matrix> ldlt(sigma);
  if (ldlt.info() != Eigen::Success || !ldlt.isPositive())
    throw std::domain_error("MinVariancePortfolio: covariance not positive definite");
  const Vector ones = Vector::Ones(sigma.rows());
  const Vector raw = ldlt.solve(ones);
  const double denom = ones.dot(raw);
  if (!std::isfinite(denom) || std::abs(denom) < 1e-12)
    throw std::domain_error("MinVariancePortfolio: covariance near singular");
  return raw / denom;
}

Vector MinVariancePortfolio::value(const ParamVector& phi) const {
  return weights(model_.sigma(phi));
}

Matrix MinVariancePortfolio::gradient(const ParamVector& phi, Index /*budget*/,
                                      Rng& /*rng*/) const {
  const Index p = model_.param_dim();
  Matrix g(output_dim(), p);
  for (Index j = 0; j < p; ++j) {
    ParamVector up = phi, dn = phi;
    const double h = 1e-5 * (1.0 + std::abs(phi[j]));
    up[j] += h;
    dn[j] -= h;
    g.col(j) = (value(up) - value(dn)) / (2.0 * h);
  }
  return g;
}

}  // namespace mceif
