#include "mceif/models/lkj.hpp"

#include <cmath>
#include <stdexcept>

namespace mceif {

Matrix lkj_sample_truth(Index dim, Rng& rng, double eta) {
  if (dim < 2) throw std::invalid_argument("lkj_sample_truth: dim must be >= 2");
  if (!(eta > 0.0)) throw std::invalid_argument("lkj_sample_truth: eta must be positive");

  double beta = eta + (dim - 2.0) / 2.0;
  Matrix r = Matrix::Identity(dim, dim);
  const double u = rng.beta(beta, beta);
  r(0, 1) = r(1, 0) = 2.0 * u - 1.0;

  for (Index k = 2; k < dim; ++k) {
    beta -= 0.5;
    const double radius_sq = rng.beta(k / 2.0, beta);

    // Direction uniform on the (k-1)-sphere.
    Vector z(k);
    for (Index i = 0; i < k; ++i) z[i] = rng.normal();
    z *= std::sqrt(radius_sq) / z.norm();

    const Eigen::LLT<Matrix> llt(r.topLeftCorner(k, k));
    const Vector col = Matrix(llt.matrixL()) * z;
    r.block(0, k, k, 1) = col;
    r.block(k, 0, 1, k) = col.transpose();
  }
  return r;
}

}  // namespace mceif
