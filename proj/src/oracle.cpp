#include "halfline/oracle.hpp"

#include <cmath>

#include "halfline/kernels.hpp"
#include "halfline/quadrature.hpp"
#include "halfline/resonances.hpp"

namespace halfline::oracle {

namespace {

struct ShotState {
    double psi;
    double dpsi;
};

// RK4 for psi'' = kappa^2 psi over [a, b], renormalizing to dodge overflow.
// The returned pair is the state up to an arbitrary positive factor.
ShotState integrate_segment(ShotState s, double kappa2, double a, double b, double h) {
    const int n = std::max(1, static_cast<int>(std::ceil((b - a) / h)));
    const double dx = (b - a) / n;
    for (int i = 0; i < n; ++i) {
        const double k1p = s.dpsi, k1d = kappa2 * s.psi;
        const double k2p = s.dpsi + 0.5 * dx * k1d, k2d = kappa2 * (s.psi + 0.5 * dx * k1p);
        const double k3p = s.dpsi + 0.5 * dx * k2d, k3d = kappa2 * (s.psi + 0.5 * dx * k2p);
        const double k4p = s.dpsi + dx * k3d, k4d = kappa2 * (s.psi + dx * k3p);
        s.psi += dx / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        s.dpsi += dx / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        if (std::abs(s.psi) > 1e100 || std::abs(s.dpsi) > 1e100) {
            s.psi *= 1e-100;
            s.dpsi *= 1e-100;
        }
    }
    return s;
}

// Decay-matching defect psi'(x_max) + kappa psi(x_max); proportional to the
// coefficient of the growing mode, so its only sign change in the admissible
// window is at the eigenvalue.
double shoot_defect(BoundaryCondition bc, const DeltaConfig& cfg, const ShootingConfig& sc,
                    double kappa) {
    const double kappa2 = kappa * kappa;
    ShotState s = bc == BoundaryCondition::Dirichlet ? ShotState{0.0, 1.0}
                                                     : ShotState{1.0, 0.0};
    const double x_max = std::min(sc.x_max, cfg.x0 + 35.0 / kappa);
    s = integrate_segment(s, kappa2, 0.0, cfg.x0, sc.step);
    s.dpsi -= cfg.lambda * s.psi; // delta jump at x0
    s = integrate_segment(s, kappa2, cfg.x0, x_max, sc.step);
    return s.dpsi + kappa * s.psi;
}

} // namespace

ShootingConfig ShootingConfig::defaults(const DeltaConfig& cfg) {
    return ShootingConfig{1e-4 * std::min(1.0, 1.0 / cfg.lambda), cfg.x0 + 300.0, 1e-9};
}

std::optional<double> shooting_eigenvalue(BoundaryCondition bc, const DeltaConfig& cfg,
                                          const ShootingConfig& sc) {
    const double lam = cfg.lambda;
    const bool dirichlet = bc == BoundaryCondition::Dirichlet;
    const double k_lo = dirichlet ? 1e-6 * lam : 0.5 * lam * (1.0 + 1e-9);
    const double k_hi = dirichlet ? 0.5 * lam * (1.0 - 1e-9) : lam * (1.0 + 1e-6);

    // coarse scan for a sign change of the matching defect
    const int scan = 48;
    double lo = k_lo, hi = k_hi;
    double flo = shoot_defect(bc, cfg, sc, lo);
    bool bracketed = false;
    for (int i = 1; i <= scan; ++i) {
        const double k = k_lo + (k_hi - k_lo) * i / scan;
        const double f = shoot_defect(bc, cfg, sc, k);
        if (std::signbit(f) != std::signbit(flo)) {
            hi = k;
            lo = k_lo + (k_hi - k_lo) * (i - 1) / scan;
            bracketed = true;
            break;
        }
        flo = f;
    }
    if (!bracketed)
        return std::nullopt;

    flo = shoot_defect(bc, cfg, sc, lo);
    while (hi - lo > sc.tol * std::max(1.0, lo)) {
        const double mid = 0.5 * (lo + hi);
        const double fm = shoot_defect(bc, cfg, sc, mid);
        if (std::signbit(fm) == std::signbit(flo)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    const double kappa = 0.5 * (lo + hi);
    return -kappa * kappa;
}

double laplace_green(BoundaryCondition bc, double x, double y, double E) {
    if (!(E < 0.0))
        throw DomainError("laplace_green requires E < 0");
    const double aE = -E;
    const double s = image_sign(bc);
    const double d = x - y, p = x + y;

    // t in (0, 1] with t = u^2; the Jacobian cancels the 1/sqrt(t) singularity:
    // 2 u K_{u^2}(x,y) = [exp(-d^2/4u^2) + s exp(-p^2/4u^2)] / sqrt(pi)
    auto head = [&](double u) {
        if (u == 0.0)
            return ((d == 0.0 ? 1.0 : 0.0) + s * (p == 0.0 ? 1.0 : 0.0)) / std::sqrt(M_PI);
        const double uu = 4.0 * u * u;
        return std::exp(-aE * u * u) *
               (std::exp(-d * d / uu) + s * std::exp(-p * p / uu)) / std::sqrt(M_PI);
    };
    auto tail = [&](double t) {
        return std::exp(-aE * t) * kernels::heat_kernel(bc, x, y, t);
    };
    const double T = std::max(2.0, 33.0 / aE); // e^{-|E|T} below 1e-14
    return quadrature::integrate(head, 0.0, 1.0, 1e-9) +
           quadrature::integrate(tail, 1.0, T, 1e-9);
}

double resolvent_identity_check(BoundaryCondition bc, const DeltaConfig& cfg, double E1,
                                double E2, double x, double y) {
    if (E1 == E2)
        throw DomainError("resolvent_identity_check requires E1 != E2");
    const double r1 = kernels::perturbed_green(bc, cfg, x, y, E1);
    const double r2 = kernels::perturbed_green(bc, cfg, x, y, E2);
    const double kmin = std::min(std::sqrt(-E1), std::sqrt(-E2));
    const double z_max = std::max({x, y, cfg.x0}) + 40.0 / kmin;
    auto prod = [&](double z) {
        return kernels::perturbed_green(bc, cfg, x, z, E1) *
               kernels::perturbed_green(bc, cfg, z, y, E2);
    };
    const double integral =
        quadrature::integrate_split(prod, 0.0, z_max, {x, y, cfg.x0}, 1e-9);
    return std::abs(r1 - r2 - (E1 - E2) * integral);
}

std::vector<std::pair<double, double>>
grid_pole_scan(BoundaryCondition bc, double alpha, std::pair<double, double> z1_range,
               std::pair<double, double> z2_range, int resolution) {
    if (resolution < 100)
        throw DomainError("grid_pole_scan: resolution must be >= 100");
    const int n = resolution;
    const std::size_t stride = static_cast<std::size_t>(n) + 1;
    const double h1 = (z1_range.second - z1_range.first) / n;
    const double h2 = (z2_range.second - z2_range.first) / n;

    std::vector<double> r1g(stride * stride), r2g(stride * stride);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            const auto r = resonances::pole_residual(bc, alpha, z1_range.first + h1 * i,
                                                     z2_range.first + h2 * j);
            r1g[i * stride + j] = r[0];
            r2g[i * stride + j] = r[1];
        }

    auto norm_at = [&](double z1, double z2) {
        const auto r = resonances::pole_residual(bc, alpha, z1, z2);
        return std::max(std::abs(r[0]), std::abs(r[1]));
    };
    auto changes_sign = [&](const std::vector<double>& g, int i, int j) {
        const double a = g[i * stride + j], b = g[(i + 1) * stride + j];
        const double c = g[i * stride + j + 1], d = g[(i + 1) * stride + j + 1];
        return std::min({a, b, c, d}) < 0.0 && std::max({a, b, c, d}) > 0.0;
    };

    // A common zero forces both residual components to change sign across the
    // enclosing cell; the max-norm valley itself can be narrower than the grid.
    std::vector<std::pair<double, double>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!changes_sign(r1g, i, j) || !changes_sign(r2g, i, j))
                continue;

            // nested grid descent of the max-norm inside the cell
            double c1 = z1_range.first + h1 * (i + 0.5);
            double c2 = z2_range.first + h2 * (j + 0.5);
            double rad1 = h1, rad2 = h2;
            double best = norm_at(c1, c2);
            for (int level = 0; level < 8; ++level) {
                double b1 = c1, b2 = c2;
                for (int a = -5; a <= 5; ++a)
                    for (int b = -5; b <= 5; ++b) {
                        const double w = norm_at(c1 + rad1 * a / 5.0, c2 + rad2 * b / 5.0);
                        if (w < best) {
                            best = w;
                            b1 = c1 + rad1 * a / 5.0;
                            b2 = c2 + rad2 * b / 5.0;
                        }
                    }
                c1 = b1;
                c2 = b2;
                rad1 /= 5.0;
                rad2 /= 5.0;
            }
            if (best >= 0.1)
                continue;
            bool duplicate = false;
            for (const auto& [p1, p2] : out)
                duplicate = duplicate || (std::abs(p1 - c1) < h1 && std::abs(p2 - c2) < h2);
            if (!duplicate)
                out.emplace_back(c1, c2);
        }
    }
    return out;
}

} // namespace halfline::oracle
