#include "mceif/models/mvn_cov.hpp"

#include <cmath>

namespace mceif {

namespace {
constexpr double kLogTwoPi = 1.8378770664093453;

inline Eigen::Index tri_index(Eigen::Index i, Eigen::Index j) {
  return i * (i + 1) / 2 + j;
}
}  // namespace

MvnCov::MvnCov(Index assets) : assets_(assets) {
  if (assets < 1) throw std::invalid_argument("MvnCov: need at least one asset");
}

Matrix MvnCov::cholesky(const ParamVector& phi) const {
  Matrix l = Matrix::Zero(assets_, assets_);
  for (Index i = 0; i < assets_; ++i) {
    for (Index j = 0; j < i; ++j) l(i, j) = phi[tri_index(i, j)];
    l(i, i) = std::exp(phi[tri_index(i, i)]);
  }
  return l;
}

Matrix MvnCov::sigma(const ParamVector& phi) const {
  const Matrix l = cholesky(phi);
  return l * l.transpose();
}

ParamVector MvnCov::params_from_sigma(const Matrix& sigma_in) const {
  Eigen::LLT<Matrix> llt(sigma_in);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("MvnCov: covariance is not positive definite");
  const Matrix l = llt.matrixL();
  ParamVector phi(param_dim());
  for (Index i = 0; i < assets_; ++i) {
    for (Index j = 0; j < i; ++j) phi[tri_index(i, j)] = l(i, j);
    phi[tri_index(i, i)] = std::log(l(i, i));
  }
  return phi;
}

Observation MvnCov::sample_one(const ParamVector& phi, Rng& rng) const {
  Vector z(assets_);
  for (Index i = 0; i < assets_; ++i) z[i] = rng.normal();
  return cholesky(phi) * z;
}

double MvnCov::log_prob(const ParamVector& phi, const Observation& x) const {
  const Matrix l = cholesky(phi);
  const Vector y = l.triangularView<Eigen::Lower>().solve(x);
  double log_det_half = 0.0;
  for (Index i = 0; i < assets_; ++i) log_det_half += phi[tri_index(i, i)];
  return -0.5 * assets_ * kLogTwoPi - log_det_half - 0.5 * y.squaredNorm();
}

Vector MvnCov::score(const ParamVector& phi, const Observation& x) const {
  const Matrix l = cholesky(phi);
  const Vector y = l.triangularView<Eigen::Lower>().solve(x);
  const Vector z = l.transpose().triangularView<Eigen::Upper>().solve(y);

  // d/dL of log-density is (z y^T) on the lower triangle minus 1/L_ii on the
  // diagonal; the log-diagonal chain rule multiplies diagonal entries by L_ii.
  Vector g(param_dim());
  for (Index i = 0; i < assets_; ++i) {
    for (Index j = 0; j < i; ++j) g[tri_index(i, j)] = z[i] * y[j];
    g[tri_index(i, i)] = z[i] * y[i] * l(i, i) - 1.0;
  }
  return g;
}

}  // namespace mceif
