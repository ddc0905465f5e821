#include "mceif/model.hpp"

#include <algorithm>
#include <cmath>

namespace mceif {

double score_fd_error(const ModelContract& model, const ParamVector& phi,
                      const Observation& x, double h) {
  const Vector analytic = model.score(phi, x);
  double worst = 0.0;
  for (Index j = 0; j < phi.size(); ++j) {
    ParamVector up = phi, dn = phi;
    const double step = h * (1.0 + std::abs(phi[j]));
    up[j] += step;
    dn[j] -= step;
    const double fd = (model.log_prob(up, x) - model.log_prob(dn, x)) / (2.0 * step);
    const double scale = std::max({1.0, std::abs(fd), std::abs(analytic[j])});
    worst = std::max(worst, std::abs(fd - analytic[j]) / scale);
  }
  return worst;
}

}  // namespace mceif
