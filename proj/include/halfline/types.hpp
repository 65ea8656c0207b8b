#ifndef HALFLINE_TYPES_HPP
#define HALFLINE_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace halfline {

// Boundary condition at the origin of the half-line. Dirichlet selects the
// minus sign in the image-charge term of every kernel, Neumann the plus sign.
enum class BoundaryCondition { Dirichlet, Neumann };

inline double image_sign(BoundaryCondition bc) {
    return bc == BoundaryCondition::Dirichlet ? -1.0 : +1.0;
}

inline const char* to_string(BoundaryCondition bc) {
    return bc == BoundaryCondition::Dirichlet ? "dirichlet" : "neumann";
}

// Attractive delta perturbation -lambda * delta(x - x0).
// alpha = lambda * x0 is the dimensionless combination controlling the
// bound-state threshold and the resonance branch structure.
struct DeltaConfig {
    double lambda;
    double x0;

    DeltaConfig(double lambda_, double x0_) : lambda(lambda_), x0(x0_) {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw std::invalid_argument("DeltaConfig: lambda must be positive and finite");
        if (!(x0 >= 0.0) || !std::isfinite(x0))
            throw std::invalid_argument("DeltaConfig: x0 must be nonnegative and finite");
    }

    double alpha() const { return lambda * x0; }
};

struct PoleProximityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace halfline

#endif
