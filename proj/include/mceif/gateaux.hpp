#pragma once

#include <functional>

#include "mceif/types.hpp"

namespace mceif {

/// Finite-difference Gateaux approximation of the influence function for the
/// 1-D expected-density functional: perturb the base density by mass epsilon
/// toward a Gaussian kernel of bandwidth lambda centered at x0 and difference
/// the functional. Quadrature is trapezoid on a fixed uniform grid.
struct GateauxConfig {
  double epsilon = 0.05;   // perturbation mass, in (0, 1)
  double lambda = 0.5;     // kernel bandwidth (standard deviation)
  double grid_lo = -8.0;
  double grid_hi = 8.0;
  Index grid_nodes = 4001;
};

/// Uniform quadrature grid points for a config.
Vector gateaux_grid(const GateauxConfig& cfg);

/// Densities of a callable pdf evaluated on the config grid.
Vector density_on_grid(const std::function<double(double)>& pdf, const GateauxConfig& cfg);

/// Trapezoid quadrature of the expected-density functional on the grid.
double expected_density_quadrature(const Vector& density, const GateauxConfig& cfg);

/// (Psi(perturbed) - Psi(base)) / epsilon at x0. Throws std::domain_error if
/// the base density is negative anywhere or its grid mass deviates from one
/// by more than 1e-6.
double gateaux_if(const Vector& base_density, double x0, const GateauxConfig& cfg);

}  // namespace mceif
