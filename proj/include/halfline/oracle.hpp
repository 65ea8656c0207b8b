#ifndef HALFLINE_ORACLE_HPP
#define HALFLINE_ORACLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "halfline/types.hpp"

namespace halfline::oracle {

// Settings for the shooting eigensolver. x_max must sit well past x0 so that
// the decay-matching condition at the right end is meaningful.
struct ShootingConfig {
    double step;
    double x_max;
    double tol;

    static ShootingConfig defaults(const DeltaConfig& cfg);
};

// Independent ODE eigensolver: RK4 integration of -psi'' = E psi from the
// wall, delta jump psi'(x0+) = psi'(x0-) - lambda psi(x0), bisection on the
// log-derivative mismatch psi'/psi + kappa at x_max. Never touches the
// closed-form kernels. Empty when the mismatch has no sign change in the
// admissible energy window.
std::optional<double> shooting_eigenvalue(BoundaryCondition bc, const DeltaConfig& cfg,
                                          const ShootingConfig& sc);

// Resolvent via the Laplace transform of the heat kernel:
//   int_0^inf e^{-|E| t} K_t(x, y) dt.
double laplace_green(BoundaryCondition bc, double x, double y, double E);

// Defect of the first resolvent identity
//   R(E1) - R(E2) = (E1 - E2) R(E1) R(E2)
// evaluated pointwise with perturbed_green and quadrature over the product.
double resolvent_identity_check(BoundaryCondition bc, const DeltaConfig& cfg, double E1,
                                double E2, double x, double y);

// Brute-force localization of pole candidates: grid local minima of the
// pole_residual max-norm below 0.1.
std::vector<std::pair<double, double>>
grid_pole_scan(BoundaryCondition bc, double alpha, std::pair<double, double> z1_range,
               std::pair<double, double> z2_range, int resolution);

} // namespace halfline::oracle

#endif
