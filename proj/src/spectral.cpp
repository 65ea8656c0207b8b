#include "halfline/spectral.hpp"

#include <cmath>

namespace halfline::spectral {

namespace {

// lambda (1 -/+ exp(-2 kappa x0)) - 2 kappa; positive below the root.
double eigenvalue_defect(BoundaryCondition bc, const DeltaConfig& cfg, double kappa) {
    const double u = 2.0 * kappa * cfg.x0;
    if (bc == BoundaryCondition::Dirichlet)
        return cfg.lambda * (-std::expm1(-u)) - 2.0 * kappa;
    return cfg.lambda * (1.0 + std::exp(-u)) - 2.0 * kappa;
}

double bisect_kappa(BoundaryCondition bc, const DeltaConfig& cfg, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, lo); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (eigenvalue_defect(bc, cfg, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

BoundState make_state(BoundaryCondition bc, const DeltaConfig& cfg, double kappa) {
    // Inner piece A sinh (Dirichlet) / A cosh (Neumann), outer piece B e^{-kappa x},
    // matched at x0 and L2-normalized with the closed-form piecewise integrals.
    const double w = kappa * cfg.x0;
    const bool dirichlet = bc == BoundaryCondition::Dirichlet;
    const double g = dirichlet ? std::sinh(w) : std::cosh(w);
    const double inner_sq =
        std::sinh(2.0 * w) / (4.0 * kappa) + (dirichlet ? -0.5 : 0.5) * cfg.x0;
    const double outer_sq = g * g / (2.0 * kappa);
    const double A = 1.0 / std::sqrt(inner_sq + outer_sq);
    const double B = A * g * std::exp(w);
    return BoundState{-kappa * kappa, kappa, A, B, bc, cfg};
}

} // namespace

std::optional<BoundState> bound_state_energy(BoundaryCondition bc, const DeltaConfig& cfg) {
    if (bc == BoundaryCondition::Dirichlet) {
        if (cfg.alpha() <= 1.0)
            return std::nullopt;
        // defect > 0 as kappa -> 0+ (alpha > 1), < 0 at kappa = lambda/2.
        const double lo = 1e-14 * cfg.lambda;
        return make_state(bc, cfg, bisect_kappa(bc, cfg, lo, 0.5 * cfg.lambda));
    }
    if (cfg.x0 == 0.0)
        return make_state(bc, cfg, cfg.lambda); // E_N(0) = -lambda^2 exactly
    // defect > 0 at kappa = lambda/2, < 0 at kappa = lambda.
    return make_state(bc, cfg, bisect_kappa(bc, cfg, 0.5 * cfg.lambda, cfg.lambda));
}

double x0_of_energy(BoundaryCondition bc, double lambda, double E) {
    if (!(lambda > 0.0))
        throw DomainError("x0_of_energy: lambda must be positive");
    const double kappa = std::sqrt(-E);
    if (bc == BoundaryCondition::Dirichlet) {
        if (!(E < 0.0 && E > -lambda * lambda / 4.0))
            throw DomainError("x0_of_energy: Dirichlet requires -lambda^2/4 < E < 0");
        return -std::log1p(-2.0 * kappa / lambda) / (2.0 * kappa);
    }
    if (!(E >= -lambda * lambda && E < -lambda * lambda / 4.0))
        throw DomainError("x0_of_energy: Neumann requires -lambda^2 <= E < -lambda^2/4");
    return -std::log(2.0 * kappa / lambda - 1.0) / (2.0 * kappa);
}

double eigenfunction(const BoundState& state, double x) {
    if (x < 0.0)
        throw DomainError("eigenfunction: x must be nonnegative");
    const double kappa = state.kappa;
    if (x >= state.cfg.x0)
        return state.amplitude_outer * std::exp(-kappa * x);
    if (state.bc == BoundaryCondition::Dirichlet)
        return state.amplitude_inner * std::sinh(kappa * x);
    return state.amplitude_inner * std::cosh(kappa * x);
}

std::vector<std::pair<double, std::optional<double>>>
energy_sweep(BoundaryCondition bc, SweepParameter fixed, double fixed_value,
             const std::vector<double>& grid) {
    std::vector<std::pair<double, std::optional<double>>> out;
    out.reserve(grid.size());
    for (double p : grid) {
        const double lambda = fixed == SweepParameter::Lambda ? fixed_value : p;
        const double x0 = fixed == SweepParameter::X0 ? fixed_value : p;
        std::optional<double> energy;
        if (x0 == kInfiniteX0) {
            energy = -lambda * lambda / 4.0;
        } else if (auto st = bound_state_energy(bc, DeltaConfig(lambda, x0))) {
            energy = st->energy;
        }
        out.emplace_back(p, energy);
    }
    return out;
}

} // namespace halfline::spectral
