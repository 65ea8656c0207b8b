// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances are fixed here, not configurable.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "halfline/figures.hpp"
#include "halfline/kernels.hpp"
#include "halfline/oracle.hpp"
#include "halfline/quadrature.hpp"
#include "halfline/resonances.hpp"
#include "halfline/shell3d.hpp"
#include "halfline/spectral.hpp"

using namespace halfline;

namespace {

constexpr auto D = BoundaryCondition::Dirichlet;
constexpr auto N = BoundaryCondition::Neumann;

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, name,
                detail.c_str());
    if (!ok)
        ++failures;
}

void criterion_1_dirichlet_threshold() {
    bool ok = true;
    for (double lambda : {0.5, 1.0, 2.0, 5.0}) {
        const auto below =
            spectral::bound_state_energy(D, DeltaConfig(lambda, (1.0 - 1e-6) / lambda));
        const auto above =
            spectral::bound_state_energy(D, DeltaConfig(lambda, (1.0 + 1e-3) / lambda));
        ok = ok && !below && above && above->energy < 0.0;
    }
    report(1, "Dirichlet threshold", ok, "lambda*x0 > 1 separates existence");
}

void criterion_2_limits() {
    bool ok = true;
    double worst = 0.0;
    for (double lambda : {0.5, 1.0, 2.0}) {
        const double x0 = 50.0 / lambda * std::max(1.0, 1.0 / lambda);
        const auto far = spectral::bound_state_energy(D, DeltaConfig(lambda, x0));
        const double dev_far =
            far ? std::abs(far->energy + lambda * lambda / 4.0) : 1e300;
        ok = ok && dev_far <= 1e-10 * lambda * lambda;

        const auto origin = spectral::bound_state_energy(N, DeltaConfig(lambda, 0.0));
        const double dev0 =
            origin ? std::abs(origin->energy + lambda * lambda) : 1e300;
        ok = ok && dev0 <= 1e-12 * lambda * lambda;
        worst = std::max({worst, dev_far / (lambda * lambda), dev0 / (lambda * lambda)});
    }
    report(2, "asymptote and origin limits", ok,
           "worst relative deviation " + std::to_string(worst));
}

void criterion_3_ranges() {
    int violations = 0;
    for (int i = 0; i < 20; ++i) {
        const double lambda = 0.2 + (3.0 - 0.2) * i / 19;
        for (int j = 0; j < 20; ++j) {
            const double x0 = 0.05 + (5.0 - 0.05) * j / 19;
            const DeltaConfig cfg(lambda, x0);
            if (const auto dd = spectral::bound_state_energy(D, cfg)) {
                if (!(dd->energy > -lambda * lambda / 4.0 && dd->energy < 0.0))
                    ++violations;
            }
            const auto dn = spectral::bound_state_energy(N, cfg);
            if (!dn || !(dn->energy >= -lambda * lambda && dn->energy < -lambda * lambda / 4.0))
                ++violations;
        }
    }
    report(3, "eigenvalue ranges", violations == 0,
           std::to_string(violations) + " violations on the 20x20 grid");
}

void criterion_4_shooting() {
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        const double lambda = 0.5 + (3.0 - 0.5) * i / 4;
        for (int j = 0; j < 5; ++j) {
            const double x0 = 0.2 + (4.0 - 0.2) * j / 4;
            const DeltaConfig cfg(lambda, x0);
            auto sc = oracle::ShootingConfig::defaults(cfg);
            sc.step = 1e-3 * std::min(1.0, 1.0 / lambda);
            for (auto bc : {D, N}) {
                const auto closed = spectral::bound_state_energy(bc, cfg);
                const auto shot = oracle::shooting_eigenvalue(bc, cfg, sc);
                if (bool(closed) != bool(shot)) {
                    ok = false;
                } else if (closed) {
                    const double d = std::abs(closed->energy - *shot);
                    worst = std::max(worst, d);
                    ok = ok && d <= 1e-8;
                }
            }
        }
    }
    report(4, "shooting oracle equivalence", ok, "worst |dE| " + std::to_string(worst));
}

void criterion_5_kernel_identities() {
    double worst_laplace = 0.0;
    for (auto bc : {D, N})
        for (auto [x, y] : {std::pair{0.3, 0.7}, {1.0, 1.5}, {2.2, 2.9}})
            for (double E : {-0.4, -1.0, -3.0})
                worst_laplace = std::max(worst_laplace,
                                         std::abs(oracle::laplace_green(bc, x, y, E) -
                                                  kernels::free_green(bc, x, y, E)));

    double worst_resolvent = 0.0;
    for (auto bc : {D, N})
        for (auto [lambda, x0, E1, E2, x, y] :
             {std::array{0.8, 1.5, -1.0, -2.0, 0.5, 1.5}, {1.0, 2.0, -1.5, -2.5, 1.0, 3.0},
              {1.3, 0.7, -2.0, -3.0, 0.5, 0.5}, {2.0, 1.0, -3.0, -4.5, 1.2, 0.4}})
            worst_resolvent = std::max(
                worst_resolvent,
                oracle::resolvent_identity_check(bc, DeltaConfig(lambda, x0), E1, E2, x, y));

    double worst_semigroup = 0.0;
    for (auto bc : {D, N})
        for (auto [x, y, t, s] : {std::array{0.5, 1.5, 0.3, 0.7}, {1.0, 1.0, 0.5, 0.5},
                                  {0.2, 2.4, 0.2, 1.1}, {2.0, 0.8, 1.0, 0.4}}) {
            auto f = [&, x = x, y = y, t = t, s = s](double z) {
                return kernels::heat_kernel(bc, x, z, t) * kernels::heat_kernel(bc, z, y, s);
            };
            const double z_max = std::max(x, y) + 12.0 * std::sqrt(std::max(t, s));
            worst_semigroup =
                std::max(worst_semigroup,
                         std::abs(quadrature::integrate(f, 0.0, z_max, 1e-10) -
                                  kernels::heat_kernel(bc, x, y, t + s)));
        }

    const bool ok =
        worst_laplace <= 1e-6 && worst_resolvent <= 1e-6 && worst_semigroup <= 1e-8;
    report(5, "kernel identities", ok,
           "laplace " + std::to_string(worst_laplace) + ", resolvent " +
               std::to_string(worst_resolvent) + ", semigroup " +
               std::to_string(worst_semigroup));
}

void criterion_6_resonances() {
    bool ok = true;
    std::string detail;
    for (auto [bc, lambda] : {std::pair{D, 2.0}, std::pair{N, 1.0}}) {
        const DeltaConfig cfg(lambda, 1.0);
        const auto rep = resonances::find_resonances(bc, cfg, 5);
        ok = ok && rep.poles.size() == 5 && rep.failed_branches.empty();

        const std::pair<double, double> z1r{0.01, 11.0 * M_PI}, z2r{0.01, 5.0};
        const auto scan = oracle::grid_pole_scan(bc, cfg.alpha(), z1r, z2r, 700);
        const double dz1 = (z1r.second - z1r.first) / 700.0;
        const double dz2 = (z2r.second - z2r.first) / 700.0;

        std::size_t inside = 0;
        for (const auto& p : rep.poles) {
            ok = ok && p.residual <= 1e-10 && p.z2 > 0.0;
            ok = ok && std::abs(kernels::green_continued(bc, cfg, p.k) - 1.0) <= 1e-9;
            const double m = std::fmod(p.z1, 2.0 * M_PI);
            ok = ok && (bc == D ? (m > 0.0 && m < M_PI) : (m > M_PI && m < 2.0 * M_PI));
            if (p.z1 > z1r.second || p.z2 > z2r.second)
                continue;
            ++inside;
            bool matched = false;
            for (const auto& [z1, z2] : scan)
                matched = matched ||
                          (std::abs(z1 - p.z1) <= 2.0 * dz1 && std::abs(z2 - p.z2) <= 2.0 * dz2);
            ok = ok && matched;
        }
        ok = ok && scan.size() == inside;
        detail += std::string(to_string(bc)) + ":" + std::to_string(rep.poles.size()) + " poles, " +
                  std::to_string(scan.size()) + " scan candidates; ";
    }
    report(6, "resonance poles vs oracle", ok, detail);
}

void criterion_7_figures() {
    bool ok = true;

    auto decreasing = [](const std::vector<figures::BoundSweepRow>& rows) {
        double prev = 1e300;
        for (const auto& r : rows) {
            if (!r.energy)
                continue;
            if (*r.energy >= prev)
                return false;
            prev = *r.energy;
        }
        return true;
    };
    auto increasing = [](const std::vector<figures::BoundSweepRow>& rows) {
        double prev = -1e300;
        for (const auto& r : rows) {
            if (!r.energy)
                continue;
            if (*r.energy <= prev)
                return false;
            prev = *r.energy;
        }
        return true;
    };
    auto fixed_values = [](const std::vector<figures::BoundSweepSeries>& s) {
        std::vector<double> v;
        for (const auto& e : s)
            v.push_back(e.fixed);
        return v;
    };

    const auto f1l = figures::figure_1l(120);
    ok = ok && fixed_values(f1l) == std::vector<double>{1.8, 1.85, 1.90, 1.95, 2.0};
    for (const auto& s : f1l)
        ok = ok && decreasing(s.rows); // E_D decreasing in x0

    const auto f1r = figures::figure_1r(120);
    ok = ok &&
         fixed_values(f1r) == std::vector<double>{1.0 / 3.0, 1.0, 3.0, spectral::kInfiniteX0};
    for (const auto& s : f1r) {
        ok = ok && decreasing(s.rows); // E_D decreasing in lambda
        if (s.fixed == spectral::kInfiniteX0)
            for (const auto& r : s.rows)
                ok = ok && r.asymptotic && r.energy &&
                     *r.energy == -r.param * r.param / 4.0; // exact asymptote rows
    }

    const auto f4l = figures::figure_4l(120);
    ok = ok && fixed_values(f4l) == std::vector<double>{0.9, 0.95, 1.0, 1.05, 1.1};
    for (const auto& s : f4l) {
        ok = ok && increasing(s.rows); // E_N increasing in x0
        for (const auto& r : s.rows)
            ok = ok && r.energy && *r.energy < -s.fixed * s.fixed / 4.0; // toward the asymptote
    }

    const auto f4r = figures::figure_4r(120);
    ok = ok && fixed_values(f4r) == std::vector<double>{0.1, 1.0, 3.0, spectral::kInfiniteX0};
    for (const auto& s : f4r) {
        ok = ok && decreasing(s.rows); // E_N decreasing in lambda
        if (s.fixed == spectral::kInfiniteX0)
            for (const auto& r : s.rows)
                ok = ok && r.asymptotic && r.energy && *r.energy == -r.param * r.param / 4.0;
    }

    report(7, "figure datasets", ok, "caption parameter sets, monotonicity, exact inf rows");
}

void criterion_8_shell_correspondence() {
    bool ok = true;
    for (int i = 0; i < 10; ++i) {
        const double lambda = 0.3 + (3.0 - 0.3) * i / 9;
        for (int j = 0; j < 10; ++j) {
            const double r0 = 0.1 + (4.0 - 0.1) * j / 9;
            const auto dir =
                spectral::bound_state_energy(D, DeltaConfig(lambda, r0));
            const auto inf0 = shell3d::shell_ground_state(shell3d::Extension::DeltaInf0,
                                                          lambda, r0);
            const auto neu =
                spectral::bound_state_energy(N, DeltaConfig(lambda, r0));
            const auto zero = shell3d::shell_ground_state(shell3d::Extension::Delta00,
                                                          lambda, r0);
            ok = ok && bool(dir) == bool(inf0) && neu && zero;
            if (dir && inf0)
                ok = ok && dir->energy == *inf0; // bit-for-bit
            if (neu && zero)
                ok = ok && neu->energy == *zero;
            if (inf0 && zero)
                ok = ok && *zero < *inf0;
        }
    }
    report(8, "3D shell correspondence", ok, "10x10 (lambda, r0) grid");
}

} // namespace

int main() {
    criterion_1_dirichlet_threshold();
    criterion_2_limits();
    criterion_3_ranges();
    criterion_4_shooting();
    criterion_5_kernel_identities();
    criterion_6_resonances();
    criterion_7_figures();
    criterion_8_shell_correspondence();
    return failures;
}
