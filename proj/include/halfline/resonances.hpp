#ifndef HALFLINE_RESONANCES_HPP
#define HALFLINE_RESONANCES_HPP

#include <array>
#include <complex>
#include <vector>

#include "halfline/types.hpp"

namespace halfline::resonances {

// A lower-half-momentum-plane pole of the continued resolvent, stored for the
// +z1 member of the (+z1, -z1) mirror pair in the dimensionless z = 2 x0 k
// convention. energy = E_R - i Gamma / 2.
struct ResonancePole {
    double z1;
    double z2;
    int branch;
    std::complex<double> k;
    std::complex<double> energy;
    double resonance_energy;
    double width;
    double residual;
};

struct SearchReport {
    std::vector<ResonancePole> poles;
    std::vector<int> skipped_branches; // no admissible root on the branch
    std::vector<int> failed_branches;  // Newton did not converge
};

// Residuals of the continued pole condition lambda G(k) = 1 at
// k = (z1 - i z2) / (2 x0), z2 > 0 on the resonance sheet:
//   Dirichlet: ( alpha (1 - e^{z2} cos z1) + z2,  alpha e^{z2} sin z1 - z1 )
//   Neumann:   ( alpha (1 + e^{z2} cos z1) + z2,  alpha e^{z2} sin z1 + z1 )
// For z2 > 50 the pair is returned scaled by e^{-z2}; zeros are unchanged.
std::array<double, 2> pole_residual(BoundaryCondition bc, double alpha, double z1, double z2);

// One pole per admissible branch (Dirichlet: z1 mod 2pi in (0, pi); Neumann:
// z1 mod 2pi in (pi, 2pi)), ordered by increasing z1, residual <= tol.
SearchReport find_resonances(BoundaryCondition bc, const DeltaConfig& cfg, int n_max,
                             double tol = 1e-10);

std::complex<double> to_energy(const ResonancePole& pole);

// Fills the derived momentum/energy-plane fields from (z1, z2, x0).
ResonancePole make_pole(double z1, double z2, double x0, int branch = 0,
                        double residual = 0.0);

} // namespace halfline::resonances

#endif
