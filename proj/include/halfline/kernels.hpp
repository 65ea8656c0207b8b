#ifndef HALFLINE_KERNELS_HPP
#define HALFLINE_KERNELS_HPP

#include <complex>

#include "halfline/types.hpp"

namespace halfline::kernels {

// Resolvent kernel of the free half-line Laplacian at energy E < 0:
//   [exp(-kappa|x-y|) -/+ exp(-kappa(x+y))] / (2 kappa),   kappa = |E|^{1/2}.
double free_green(BoundaryCondition bc, double x, double y, double E);

// Heat kernel of the free half-line Laplacian:
//   [exp(-(x-y)^2/4t) -/+ exp(-(x+y)^2/4t)] / (2 sqrt(pi t)).
double heat_kernel(BoundaryCondition bc, double x, double y, double t);

// Diagonal free kernel at the delta location, lambda * G(x0, x0; E).
// Equals 1 exactly at the bound state. Uses a series branch near kappa = 0
// where the Dirichlet closed form suffers catastrophic cancellation.
double birman_schwinger_value(BoundaryCondition bc, const DeltaConfig& cfg, double E);

// Krein-formula resolvent kernel of the perturbed operator:
//   G(x,y) + lambda G(x,x0) G(x0,y) / (1 - lambda G(x0,x0)).
// Throws PoleProximityError when the denominator is below `guard`.
double perturbed_green(BoundaryCondition bc, const DeltaConfig& cfg, double x, double y,
                       double E, double guard = 1e-13);

// Analytic continuation of lambda * G(x0, x0) to complex momentum k
// (E = k^2): lambda (1 -/+ exp(2 i k x0)) / (-2 i k).
// Agrees with birman_schwinger_value at k = i kappa.
std::complex<double> green_continued(BoundaryCondition bc, const DeltaConfig& cfg,
                                     std::complex<double> k);

} // namespace halfline::kernels

#endif
