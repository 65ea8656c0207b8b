#ifndef HALFLINE_FIGURES_HPP
#define HALFLINE_FIGURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "halfline/types.hpp"

namespace halfline::figures {

struct BoundSweepRow {
    double param;
    std::optional<double> energy;
    bool asymptotic = false; // x0 = inf row carrying the -lambda^2/4 value
};

struct BoundSweepSeries {
    std::string label;  // "lambda=..." or "x0=..."
    double fixed;       // fixed parameter value (inf for the asymptote series)
    std::vector<BoundSweepRow> rows;
};

struct SurfaceRow {
    double lambda;
    double x0;
    std::optional<double> energy;
};

struct PoleRow {
    double alpha;
    int branch;
    double z1;
    double z2;
    double re_k;
    double im_k;
    double e_r;
    double gamma;
    double residual;
};

// E_D(x0) for lambda in {1.8, 1.85, 1.90, 1.95, 2}, x0 in [1/lambda, 5].
std::vector<BoundSweepSeries> figure_1l(int points = 200);
// E_D(lambda) for x0 in {1/3, 1, 3, inf}, lambda in (0, 3].
std::vector<BoundSweepSeries> figure_1r(int points = 200);
// (lambda, x0, E_D) surface over lambda in (0, 3], x0 in (0, 5].
std::vector<SurfaceRow> figure_2(int n_lambda = 60, int n_x0 = 60);
// Dirichlet resonance pole loci for each alpha (k reported at x0 = 1).
std::vector<PoleRow> figure_3(const std::vector<double>& alphas, int n_max = 8);
// E_N(x0) for lambda in {0.9, 0.95, 1, 1.05, 1.1}, x0 in [0, 5].
std::vector<BoundSweepSeries> figure_4l(int points = 200);
// E_N(lambda) for x0 in {0.1, 1, 3, inf}, lambda in (0, 3].
std::vector<BoundSweepSeries> figure_4r(int points = 200);
// Neumann resonance pole loci.
std::vector<PoleRow> figure_5(const std::vector<double>& alphas, int n_max = 8);

} // namespace halfline::figures

#endif
