#include "halfline/resonances.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace halfline::resonances {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

struct Residual {
    Eigen::Vector2d r;
    Eigen::Matrix2d J;
};

// Residual and Jacobian of the pole system. For z2 > 50 everything is scaled
// by e^{-z2} so that e^{z2} never overflows; the zero set is identical.
Residual evaluate(BoundaryCondition bc, double alpha, double z1, double z2) {
    const double s = -image_sign(bc); // +1 Dirichlet, -1 Neumann
    const double c = std::cos(z1);
    const double sn = std::sin(z1);
    Residual out;
    if (z2 <= 50.0) {
        const double ez = std::exp(z2);
        out.r << alpha * (1.0 - s * ez * c) + z2, alpha * ez * sn - s * z1;
        out.J << alpha * s * ez * sn, 1.0 - alpha * s * ez * c,
                 alpha * ez * c - s, alpha * ez * sn;
    } else {
        const double em = std::exp(-z2);
        out.r << alpha * (em - s * c) + z2 * em, alpha * sn - s * z1 * em;
        out.J << alpha * s * sn, -alpha * em + em - z2 * em,
                 alpha * c - s * em, s * z1 * em;
    }
    return out;
}

// Scalar reduction on a branch: eliminate z2 through the second equation,
//   z2(z1) = ln(s z1 / (alpha sin z1)),
// and evaluate the first equation's residual F(z1) = alpha - z1 cot z1 + z2(z1).
double branch_z2(BoundaryCondition bc, double alpha, double z1) {
    const double s = -image_sign(bc);
    return std::log(s * z1 / (alpha * std::sin(z1)));
}

double branch_scalar(BoundaryCondition bc, double alpha, double z1) {
    return alpha - z1 * std::cos(z1) / std::sin(z1) + branch_z2(bc, alpha, z1);
}

bool newton_refine(BoundaryCondition bc, double alpha, double& z1, double& z2,
                   int max_iter = 200) {
    for (int it = 0; it < max_iter; ++it) {
        Residual cur = evaluate(bc, alpha, z1, z2);
        const double rn = cur.r.cwiseAbs().maxCoeff();
        if (rn <= 1e-12)
            return true;
        Eigen::Vector2d step = cur.J.lu().solve(-cur.r);
        double damp = 1.0;
        while (damp > 1e-8) {
            Residual trial = evaluate(bc, alpha, z1 + damp * step(0), z2 + damp * step(1));
            if (trial.r.cwiseAbs().maxCoeff() < rn)
                break;
            damp *= 0.5;
        }
        z1 += damp * step(0);
        z2 += damp * step(1);
        if ((damp * step).cwiseAbs().maxCoeff() <= 1e-13)
            return evaluate(bc, alpha, z1, z2).r.cwiseAbs().maxCoeff() <= 1e-10;
    }
    return evaluate(bc, alpha, z1, z2).r.cwiseAbs().maxCoeff() <= 1e-10;
}

bool branch_admissible(BoundaryCondition bc, double z1) {
    const double m = std::fmod(z1, kTwoPi);
    if (bc == BoundaryCondition::Dirichlet)
        return m > 0.0 && m < M_PI;
    return m > M_PI && m < kTwoPi;
}

} // namespace

std::array<double, 2> pole_residual(BoundaryCondition bc, double alpha, double z1, double z2) {
    const Eigen::Vector2d r = evaluate(bc, alpha, z1, z2).r;
    return {r(0), r(1)};
}

SearchReport find_resonances(BoundaryCondition bc, const DeltaConfig& cfg, int n_max,
                             double tol) {
    if (n_max < 1)
        throw DomainError("find_resonances: n_max must be >= 1");
    if (!(cfg.x0 > 0.0))
        throw DomainError("find_resonances: x0 must be positive");
    const double alpha = cfg.alpha();
    const bool dirichlet = bc == BoundaryCondition::Dirichlet;
    SearchReport report;

    for (int n = 0; static_cast<int>(report.poles.size()) < n_max && n < n_max + 8; ++n) {
        // sin z1 > 0 (Dirichlet) or < 0 (Neumann) on the branch interval
        const double a = kTwoPi * n + (dirichlet ? 0.0 : M_PI);
        const double b = a + M_PI;
        const int scan = 2000;
        const double margin = 1e-9 * std::max(1.0, b);

        // 1D sign-change scan of the scalar reduction, restricted to z2 > 0
        bool found = false;
        double prev_z1 = 0.0, prev_f = 0.0;
        bool have_prev = false;
        for (int i = 0; i <= scan; ++i) {
            const double z1 = a + margin + (b - a - 2.0 * margin) * i / scan;
            if (branch_z2(bc, alpha, z1) <= 0.0) {
                have_prev = false;
                continue;
            }
            const double f = branch_scalar(bc, alpha, z1);
            if (have_prev && std::signbit(f) != std::signbit(prev_f)) {
                // bisect the bracket, then polish in 2D
                double lo = prev_z1, hi = z1, flo = prev_f;
                for (int it = 0; it < 80; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = branch_scalar(bc, alpha, mid);
                    if (std::signbit(fm) == std::signbit(flo)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                double rz1 = 0.5 * (lo + hi);
                double rz2 = branch_z2(bc, alpha, rz1);
                if (rz2 > 0.0 && newton_refine(bc, alpha, rz1, rz2) && rz2 > 0.0 &&
                    branch_admissible(bc, rz1)) {
                    const double res =
                        evaluate(bc, alpha, rz1, rz2).r.cwiseAbs().maxCoeff();
                    if (res <= tol) {
                        report.poles.push_back(make_pole(rz1, rz2, cfg.x0, n, res));
                        found = true;
                        break;
                    }
                }
                report.failed_branches.push_back(n);
                found = true; // bracket existed but refinement failed; move on
                break;
            }
            prev_z1 = z1;
            prev_f = f;
            have_prev = true;
        }
        if (!found)
            report.skipped_branches.push_back(n);
    }
    std::sort(report.poles.begin(), report.poles.end(),
              [](const ResonancePole& p, const ResonancePole& q) { return p.z1 < q.z1; });
    return report;
}

ResonancePole make_pole(double z1, double z2, double x0, int branch, double residual) {
    ResonancePole p;
    p.z1 = z1;
    p.z2 = z2;
    p.branch = branch;
    p.k = std::complex<double>(z1, -z2) / (2.0 * x0);
    p.resonance_energy = (z1 * z1 - z2 * z2) / (4.0 * x0 * x0);
    p.width = z1 * z2 / (x0 * x0);
    p.energy = std::complex<double>(p.resonance_energy, -0.5 * p.width);
    p.residual = residual;
    return p;
}

std::complex<double> to_energy(const ResonancePole& pole) {
    return pole.energy;
}

} // namespace halfline::resonances
