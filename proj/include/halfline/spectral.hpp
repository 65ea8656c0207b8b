#ifndef HALFLINE_SPECTRAL_HPP
#define HALFLINE_SPECTRAL_HPP

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "halfline/types.hpp"

namespace halfline::spectral {

// The (at most one) negative eigenvalue with its piecewise eigenfunction
// coefficients: psi = A sinh(kappa x) (Dirichlet) or A cosh(kappa x)
// (Neumann) for x <= x0, and B exp(-kappa x) beyond, L2-normalized.
struct BoundState {
    double energy;
    double kappa;
    double amplitude_inner;
    double amplitude_outer;
    BoundaryCondition bc;
    DeltaConfig cfg;
};

// Solves lambda (1 -/+ exp(-2 kappa x0)) = 2 kappa.
// Dirichlet: a root exists iff alpha = lambda x0 > 1 and lies in (0, lambda/2);
// empty otherwise. Neumann: the unique root in (lambda/2, lambda] always exists.
std::optional<BoundState> bound_state_energy(BoundaryCondition bc, const DeltaConfig& cfg);

// Inverse map x0(E) at fixed lambda:
//   Dirichlet: -(1/2kappa) ln(1 - 2kappa/lambda),  E in (-lambda^2/4, 0);
//   Neumann:   -(1/2kappa) ln(2kappa/lambda - 1),  E in [-lambda^2, -lambda^2/4).
double x0_of_energy(BoundaryCondition bc, double lambda, double E);

double eigenfunction(const BoundState& state, double x);

// Sentinel for x0 = infinity grid points; maps to the asymptote -lambda^2/4.
inline constexpr double kInfiniteX0 = std::numeric_limits<double>::infinity();

enum class SweepParameter { Lambda, X0 };

// Bound-state energy along a parameter grid with the other parameter fixed.
std::vector<std::pair<double, std::optional<double>>>
energy_sweep(BoundaryCondition bc, SweepParameter fixed, double fixed_value,
             const std::vector<double>& grid);

} // namespace halfline::spectral

#endif
