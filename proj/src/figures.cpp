#include "halfline/figures.hpp"

#include <cmath>

#include "halfline/resonances.hpp"
#include "halfline/spectral.hpp"

namespace halfline::figures {

namespace {

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = a + (b - a) * i / (n - 1);
    v.back() = b;
    return v;
}

BoundSweepSeries sweep_x0(BoundaryCondition bc, double lambda, double a, double b, int n) {
    BoundSweepSeries s{"lambda=" + std::to_string(lambda), lambda, {}};
    for (auto& [p, e] :
         spectral::energy_sweep(bc, spectral::SweepParameter::Lambda, lambda, linspace(a, b, n)))
        s.rows.push_back({p, e, false});
    return s;
}

BoundSweepSeries sweep_lambda(BoundaryCondition bc, double x0, int n) {
    const bool inf = x0 == spectral::kInfiniteX0;
    BoundSweepSeries s{inf ? "x0=inf" : "x0=" + std::to_string(x0), x0, {}};
    for (auto& [p, e] : spectral::energy_sweep(bc, spectral::SweepParameter::X0, x0,
                                               linspace(3.0 / n, 3.0, n)))
        s.rows.push_back({p, e, inf});
    return s;
}

std::vector<PoleRow> pole_loci(BoundaryCondition bc, const std::vector<double>& alphas,
                               int n_max) {
    std::vector<PoleRow> rows;
    for (double alpha : alphas) {
        // report k in the x0 = 1 scaling; z-plane data depends on alpha only
        const auto rep = resonances::find_resonances(bc, DeltaConfig(alpha, 1.0), n_max);
        for (const auto& p : rep.poles)
            rows.push_back({alpha, p.branch, p.z1, p.z2, p.k.real(), p.k.imag(),
                            p.resonance_energy, p.width, p.residual});
    }
    return rows;
}

} // namespace

std::vector<BoundSweepSeries> figure_1l(int points) {
    std::vector<BoundSweepSeries> out;
    for (double lambda : {1.8, 1.85, 1.90, 1.95, 2.0})
        out.push_back(
            sweep_x0(BoundaryCondition::Dirichlet, lambda, 1.0 / lambda, 5.0, points));
    return out;
}

std::vector<BoundSweepSeries> figure_1r(int points) {
    std::vector<BoundSweepSeries> out;
    for (double x0 : {1.0 / 3.0, 1.0, 3.0, spectral::kInfiniteX0})
        out.push_back(sweep_lambda(BoundaryCondition::Dirichlet, x0, points));
    return out;
}

std::vector<SurfaceRow> figure_2(int n_lambda, int n_x0) {
    std::vector<SurfaceRow> rows;
    rows.reserve(static_cast<std::size_t>(n_lambda) * n_x0);
    for (int i = 1; i <= n_lambda; ++i) {
        const double lambda = 3.0 * i / n_lambda;
        for (int j = 1; j <= n_x0; ++j) {
            const double x0 = 5.0 * j / n_x0;
            const auto st =
                spectral::bound_state_energy(BoundaryCondition::Dirichlet, DeltaConfig(lambda, x0));
            rows.push_back({lambda, x0, st ? std::optional<double>(st->energy) : std::nullopt});
        }
    }
    return rows;
}

std::vector<PoleRow> figure_3(const std::vector<double>& alphas, int n_max) {
    return pole_loci(BoundaryCondition::Dirichlet, alphas, n_max);
}

std::vector<BoundSweepSeries> figure_4l(int points) {
    std::vector<BoundSweepSeries> out;
    for (double lambda : {0.9, 0.95, 1.0, 1.05, 1.1})
        out.push_back(sweep_x0(BoundaryCondition::Neumann, lambda, 0.0, 5.0, points));
    return out;
}

std::vector<BoundSweepSeries> figure_4r(int points) {
    std::vector<BoundSweepSeries> out;
    for (double x0 : {0.1, 1.0, 3.0, spectral::kInfiniteX0})
        out.push_back(sweep_lambda(BoundaryCondition::Neumann, x0, points));
    return out;
}

std::vector<PoleRow> figure_5(const std::vector<double>& alphas, int n_max) {
    return pole_loci(BoundaryCondition::Neumann, alphas, n_max);
}

} // namespace halfline::figures
