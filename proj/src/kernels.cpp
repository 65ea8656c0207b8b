#include "halfline/kernels.hpp"

#include <cmath>

namespace halfline::kernels {

namespace {

void check_coords(double x, double y) {
    if (x < 0.0 || y < 0.0 || !std::isfinite(x) || !std::isfinite(y))
        throw DomainError("coordinates must be nonnegative and finite");
}

void check_negative_energy(double E) {
    if (!(E < 0.0) || !std::isfinite(E))
        throw DomainError("real-energy kernel requires E < 0");
}

// (1 - exp(-u)) / u with the cancellation-free branch for small u.
double one_minus_exp_over(double u) {
    if (u < 1e-4)
        return 1.0 - u / 2.0 + u * u / 6.0 - u * u * u / 24.0;
    return -std::expm1(-u) / u;
}

} // namespace

double free_green(BoundaryCondition bc, double x, double y, double E) {
    check_coords(x, y);
    check_negative_energy(E);
    const double kappa = std::sqrt(-E);
    const double s = image_sign(bc);
    return (std::exp(-kappa * std::abs(x - y)) + s * std::exp(-kappa * (x + y))) /
           (2.0 * kappa);
}

double heat_kernel(BoundaryCondition bc, double x, double y, double t) {
    check_coords(x, y);
    if (!(t > 0.0) || !std::isfinite(t))
        throw DomainError("heat kernel requires t > 0");
    const double d = x - y;
    const double p = x + y;
    const double s = image_sign(bc);
    return (std::exp(-d * d / (4.0 * t)) + s * std::exp(-p * p / (4.0 * t))) /
           (2.0 * std::sqrt(M_PI * t));
}

double birman_schwinger_value(BoundaryCondition bc, const DeltaConfig& cfg, double E) {
    check_negative_energy(E);
    const double kappa = std::sqrt(-E);
    const double u = 2.0 * kappa * cfg.x0;
    if (bc == BoundaryCondition::Dirichlet) {
        // lambda (1 - e^{-u}) / (2 kappa) = lambda x0 (1 - e^{-u}) / u
        return cfg.lambda * cfg.x0 * one_minus_exp_over(u);
    }
    return cfg.lambda * (1.0 + std::exp(-u)) / (2.0 * kappa);
}

double perturbed_green(BoundaryCondition bc, const DeltaConfig& cfg, double x, double y,
                       double E, double guard) {
    const double denom = 1.0 - birman_schwinger_value(bc, cfg, E);
    if (std::abs(denom) < guard)
        throw PoleProximityError("perturbed_green: evaluation too close to the eigenvalue");
    return free_green(bc, x, y, E) +
           cfg.lambda * free_green(bc, x, cfg.x0, E) * free_green(bc, cfg.x0, y, E) / denom;
}

std::complex<double> green_continued(BoundaryCondition bc, const DeltaConfig& cfg,
                                     std::complex<double> k) {
    if (k == std::complex<double>(0.0, 0.0))
        throw DomainError("green_continued: k = 0 (use the kappa -> 0 limit lambda*x0)");
    const std::complex<double> i(0.0, 1.0);
    const double s = image_sign(bc);
    return cfg.lambda * (1.0 + s * std::exp(2.0 * i * k * cfg.x0)) / (-2.0 * i * k);
}

} // namespace halfline::kernels
