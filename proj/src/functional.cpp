#include "mceif/functional.hpp"

#include <cmath>

namespace mceif {

Matrix functional_fd_gradient(const FunctionalContract& f, const ParamVector& phi,
                              double h) {
  Matrix g(f.output_dim(), phi.size());
  for (Index j = 0; j < phi.size(); ++j) {
    ParamVector up = phi, dn = phi;
    const double step = h * (1.0 + std::abs(phi[j]));
    up[j] += step;
    dn[j] -= step;
    g.col(j) = (f.value(up) - f.value(dn)) / (2.0 * step);
  }
  return g;
}

}  // namespace mceif
