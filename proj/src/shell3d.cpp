#include "halfline/shell3d.hpp"

#include <cmath>
#include <limits>

#include "halfline/spectral.hpp"

namespace halfline::shell3d {

std::optional<double> shell_ground_state(Extension ext, double lambda, double r0) {
    const auto st = spectral::bound_state_energy(boundary_of(ext), DeltaConfig(lambda, r0));
    if (!st)
        return std::nullopt;
    return st->energy;
}

double radial_ground_wavefunction(Extension ext, double lambda, double r0, double r) {
    const auto st = spectral::bound_state_energy(boundary_of(ext), DeltaConfig(lambda, r0));
    if (!st)
        throw NoBoundState("radial_ground_wavefunction: no ground state for these parameters");
    const double scale = 1.0 / std::sqrt(4.0 * M_PI);
    if (r == 0.0) {
        if (ext == Extension::DeltaInf0)
            return scale * st->amplitude_inner * st->kappa; // sinh(kr)/r -> k
        return std::numeric_limits<double>::infinity();     // u(0) != 0, 1/r blowup
    }
    return scale * spectral::eigenfunction(*st, r) / r;
}

} // namespace halfline::shell3d
