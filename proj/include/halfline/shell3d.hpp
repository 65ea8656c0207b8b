#ifndef HALFLINE_SHELL3D_HPP
#define HALFLINE_SHELL3D_HPP

#include <optional>

#include "halfline/types.hpp"

namespace halfline::shell3d {

// The two self-adjoint extensions of the 3D Laplacian whose s-wave sectors
// reduce to the half-line problem: DeltaInf0 (ordinary -Delta, Dirichlet at
// the origin) and Delta00 (zero-energy-resonance extension, Neumann).
enum class Extension { DeltaInf0, Delta00 };

inline BoundaryCondition boundary_of(Extension ext) {
    return ext == Extension::DeltaInf0 ? BoundaryCondition::Dirichlet
                                       : BoundaryCondition::Neumann;
}

// Ground state of -Delta - lambda delta(r - r0) under the given extension;
// exactly the 1D eigenvalue of the corresponding half-line operator.
// DeltaInf0 is empty iff lambda r0 <= 1; Delta00 always binds.
std::optional<double> shell_ground_state(Extension ext, double lambda, double r0);

// s-wave ground state psi(r) = u(r) / r with u the 1D eigenfunction,
// normalized so that 4 pi int_0^inf u^2 dr = 1. Diverges as 1/r at the
// origin for Delta00 (u(0) != 0); finite for DeltaInf0.
double radial_ground_wavefunction(Extension ext, double lambda, double r0, double r);

struct NoBoundState : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace halfline::shell3d

#endif
