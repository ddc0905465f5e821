#include "mceif/gateaux.hpp"

#include <cmath>
#include <stdexcept>

namespace mceif {

namespace {

void validate(const GateauxConfig& cfg) {
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
    throw std::invalid_argument("gateaux: epsilon must be in (0, 1)");
  if (!(cfg.lambda > 0.0)) throw std::invalid_argument("gateaux: lambda must be positive");
  if (cfg.grid_nodes < 3 || !(cfg.grid_hi > cfg.grid_lo))
    throw std::invalid_argument("gateaux: bad grid");
}

double grid_step(const GateauxConfig& cfg) {
  return (cfg.grid_hi - cfg.grid_lo) / static_cast<double>(cfg.grid_nodes - 1);
}

double trapezoid_mass(const Vector& f, double dx) {
  double s = f.sum() - 0.5 * (f[0] + f[f.size() - 1]);
  return s * dx;
}

}  // namespace

Vector gateaux_grid(const GateauxConfig& cfg) {
  validate(cfg);
  const double dx = grid_step(cfg);
  Vector x(cfg.grid_nodes);
  for (Index i = 0; i < cfg.grid_nodes; ++i) x[i] = cfg.grid_lo + i * dx;
  return x;
}

Vector density_on_grid(const std::function<double(double)>& pdf, const GateauxConfig& cfg) {
  const Vector x = gateaux_grid(cfg);
  Vector d(x.size());
  for (Index i = 0; i < x.size(); ++i) d[i] = pdf(x[i]);
  return d;
}

double expected_density_quadrature(const Vector& density, const GateauxConfig& cfg) {
  validate(cfg);
  if (density.size() != cfg.grid_nodes)
    throw std::invalid_argument("gateaux: density/grid size mismatch");
  return trapezoid_mass(density.array().square().matrix(), grid_step(cfg));
}

double gateaux_if(const Vector& base_density, double x0, const GateauxConfig& cfg) {
  validate(cfg);
  if (base_density.size() != cfg.grid_nodes)
    throw std::invalid_argument("gateaux: density/grid size mismatch");
  if ((base_density.array() < 0.0).any())
    throw std::domain_error("gateaux: base density is negative on the grid");
  const double dx = grid_step(cfg);
  if (std::abs(trapezoid_mass(base_density, dx) - 1.0) > 1e-6)
    throw std::domain_error("gateaux: base density mass deviates from 1 on the grid");

  // Gaussian kernel, renormalized on the grid so the mixture keeps unit mass.
  const Vector x = gateaux_grid(cfg);
  Vector kernel(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    const double z = (x[i] - x0) / cfg.lambda;
    kernel[i] = std::exp(-0.5 * z * z) / (cfg.lambda * std::sqrt(2.0 * M_PI));
  }
  kernel /= trapezoid_mass(kernel, dx);

  const Vector perturbed = (1.0 - cfg.epsilon) * base_density + cfg.epsilon * kernel;
  const double psi_base = expected_density_quadrature(base_density, cfg);
  const double psi_pert = expected_density_quadrature(perturbed, cfg);
  return (psi_pert - psi_base) / cfg.epsilon;
}

}  // namespace mceif
