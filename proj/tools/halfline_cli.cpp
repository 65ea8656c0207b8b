// Command-line front end: kernel evaluation, bound states, resonances,
// parameter sweeps, figure datasets and oracle verification, emitted as
// CSV or JSON. Outputs are deterministic for a given invocation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "halfline/figures.hpp"
#include "halfline/kernels.hpp"
#include "halfline/oracle.hpp"
#include "halfline/resonances.hpp"
#include "halfline/shell3d.hpp"
#include "halfline/spectral.hpp"

using namespace halfline;
using json = nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Output {
    std::string path; // empty = stdout
    std::string format = "csv";

    void emit(const std::string& csv_body, const json& payload) const {
        std::ostringstream text;
        if (format == "json") {
            text << payload.dump(2) << "\n";
        } else {
            text << csv_body;
        }
        if (path.empty()) {
            std::cout << text.str();
        } else {
            std::ofstream f(path);
            if (!f)
                throw std::runtime_error("cannot open output file: " + path);
            f << text.str();
        }
    }
};

std::string fmt(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

BoundaryCondition parse_bc(const std::string& s) {
    if (s == "dirichlet")
        return BoundaryCondition::Dirichlet;
    if (s == "neumann")
        return BoundaryCondition::Neumann;
    throw CLI::ValidationError("--bc", "expected 'dirichlet' or 'neumann'");
}

double parse_x0(const std::string& s) {
    if (s == "inf")
        return spectral::kInfiniteX0;
    return std::stod(s);
}

json meta(const json& config) {
    return json{{"version", kVersion}, {"config", config}};
}

std::string sweep_csv(const std::vector<std::pair<double, std::optional<double>>>& rows) {
    std::string out = "param,energy,exists\n";
    for (const auto& [p, e] : rows)
        out += fmt(p) + "," + (e ? fmt(*e) : "") + "," + (e ? "true" : "false") + "\n";
    return out;
}

json sweep_json(const std::vector<std::pair<double, std::optional<double>>>& rows) {
    json data = json::array();
    for (const auto& [p, e] : rows) {
        json r{{"param", p}, {"exists", bool(e)}};
        if (e)
            r["energy"] = *e;
        data.push_back(r);
    }
    return data;
}

std::string poles_csv(const std::vector<resonances::ResonancePole>& poles) {
    std::string out = "branch,z1,z2,re_k,im_k,e_r,gamma,residual\n";
    for (const auto& p : poles)
        out += std::to_string(p.branch) + "," + fmt(p.z1) + "," + fmt(p.z2) + "," +
               fmt(p.k.real()) + "," + fmt(p.k.imag()) + "," + fmt(p.resonance_energy) +
               "," + fmt(p.width) + "," + fmt(p.residual) + "\n";
    return out;
}

json poles_json(const std::vector<resonances::ResonancePole>& poles) {
    json data = json::array();
    for (const auto& p : poles)
        data.push_back({{"branch", p.branch},
                        {"z1", p.z1},
                        {"z2", p.z2},
                        {"re_k", p.k.real()},
                        {"im_k", p.k.imag()},
                        {"e_r", p.resonance_energy},
                        {"gamma", p.width},
                        {"residual", p.residual}});
    return data;
}

std::string series_csv(const std::vector<figures::BoundSweepSeries>& series,
                       const std::string& fixed_name, const std::string& param_name) {
    std::string out = fixed_name + "," + param_name + ",energy,exists,asymptotic\n";
    for (const auto& s : series)
        for (const auto& r : s.rows)
            out += (std::isinf(s.fixed) ? "inf" : fmt(s.fixed)) + "," + fmt(r.param) + "," +
                   (r.energy ? fmt(*r.energy) : "") + "," + (r.energy ? "true" : "false") +
                   "," + (r.asymptotic ? "true" : "false") + "\n";
    return out;
}

json series_json(const std::vector<figures::BoundSweepSeries>& series) {
    json data = json::array();
    for (const auto& s : series) {
        json rows = json::array();
        for (const auto& r : s.rows) {
            json row{{"param", r.param}, {"exists", bool(r.energy)}, {"asymptotic", r.asymptotic}};
            if (r.energy)
                row["energy"] = *r.energy;
            rows.push_back(row);
        }
        data.push_back({{"label", s.label}, {"rows", rows}});
    }
    return data;
}

int run_verify(BoundaryCondition bc, double lambda, double x0) {
    const DeltaConfig cfg(lambda, x0);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok, const std::string& detail) {
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
        if (!ok)
            ++failures;
    };

    // closed-form eigenvalue vs shooting
    const auto st = spectral::bound_state_energy(bc, cfg);
    oracle::ShootingConfig sc = oracle::ShootingConfig::defaults(cfg);
    sc.step = 1e-3 * std::min(1.0, 1.0 / lambda);
    const auto sh = oracle::shooting_eigenvalue(bc, cfg, sc);
    if (st && sh)
        report("shooting", std::abs(st->energy - *sh) <= 1e-8,
               "dE = " + fmt(std::abs(st->energy - *sh)));
    else
        report("shooting", bool(st) == bool(sh),
               st || sh ? "existence mismatch" : "both report no bound state");

    // Laplace transform of the heat kernel vs the closed-form resolvent
    double worst = 0.0;
    for (double x : {0.3, 1.0, 2.1})
        for (double E : {-0.5, -2.0})
            worst = std::max(worst,
                             std::abs(oracle::laplace_green(bc, x, 1.2, E) -
                                      kernels::free_green(bc, x, 1.2, E)));
    report("laplace", worst <= 1e-6, "max defect = " + fmt(worst));

    // first resolvent identity for the perturbed kernel
    const double defect = oracle::resolvent_identity_check(bc, cfg, -2.0 * lambda * lambda,
                                                           -3.0 * lambda * lambda, 0.5, 1.5);
    report("resolvent-identity", defect <= 1e-6, "defect = " + fmt(defect));

    // resonance poles vs brute-force residual scan
    if (x0 > 0.0) {
        const auto rep = resonances::find_resonances(bc, cfg, 3);
        const auto scan = oracle::grid_pole_scan(bc, cfg.alpha(), {1e-3, 7.0 * M_PI},
                                                 {1e-3, 8.0}, 400);
        bool all_matched = true;
        for (const auto& p : rep.poles) {
            if (p.z1 > 7.0 * M_PI || p.z2 > 8.0)
                continue;
            bool matched = false;
            for (const auto& [z1, z2] : scan)
                if (std::abs(z1 - p.z1) < 0.2 && std::abs(z2 - p.z2) < 0.2)
                    matched = true;
            all_matched = all_matched && matched;
        }
        report("resonances", all_matched,
               std::to_string(rep.poles.size()) + " poles, " +
                   std::to_string(scan.size()) + " scan candidates");
    }

    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bound states, resonances and kernels of the half-line Laplacian "
                 "with an attractive delta perturbation"};
    app.require_subcommand(1);

    std::string bc_name = "dirichlet";
    std::string x0_str = "1";
    std::string fmt_name = "csv";
    std::string out_path;
    double lambda = 1.0;
    double tol = 1e-10;

    auto add_common = [&](CLI::App* sub, bool with_params = true) {
        sub->add_option("--format", fmt_name, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--tol", tol, "solver tolerance override");
        if (with_params) {
            sub->add_option("--bc", bc_name, "boundary condition")
                ->check(CLI::IsMember({"dirichlet", "neumann"}));
            sub->add_option("--lambda", lambda, "coupling strength");
            sub->add_option("--x0", x0_str, "delta location (or 'inf')");
        }
    };

    double x = 0.0, y = 0.0, E = -1.0, t = 1.0;
    auto* green = app.add_subcommand("green", "evaluate the resolvent kernel");
    add_common(green);
    green->add_option("--x", x)->required();
    green->add_option("--y", y)->required();
    green->add_option("--energy", E, "energy E < 0")->required();
    bool perturbed = false;
    green->add_flag("--perturbed", perturbed, "Krein-perturbed kernel instead of the free one");

    auto* heat = app.add_subcommand("heat", "evaluate the heat kernel");
    add_common(heat);
    heat->add_option("--x", x)->required();
    heat->add_option("--y", y)->required();
    heat->add_option("--time", t, "time t > 0")->required();

    auto* bound = app.add_subcommand("bound", "solve the bound-state equation");
    add_common(bound);

    int n_max = 5;
    auto* res = app.add_subcommand("resonances", "enumerate resonance poles");
    add_common(res);
    res->add_option("--n-max", n_max, "maximum number of poles");

    std::string fixed_name = "lambda";
    double fixed_value = 1.0;
    std::vector<double> grid_spec; // start, stop, count
    auto* sweep = app.add_subcommand("sweep", "bound-state energy along a parameter grid");
    add_common(sweep, false);
    sweep->add_option("--bc", bc_name)->check(CLI::IsMember({"dirichlet", "neumann"}));
    sweep->add_option("--fixed", fixed_name, "which parameter stays fixed")
        ->check(CLI::IsMember({"lambda", "x0"}));
    sweep->add_option("--value", fixed_value, "value of the fixed parameter")->required();
    sweep->add_option("--grid", grid_spec, "start stop count")->expected(3)->required();

    std::string figure_name;
    int points = 200;
    std::vector<double> alphas{0.5, 1.0, 2.0, 3.0};
    auto* figure = app.add_subcommand("figure", "emit a figure dataset");
    add_common(figure, false);
    figure->add_option("name", figure_name, "one of 1L 1R 2 3 4L 4R 5")
        ->required()
        ->check(CLI::IsMember({"1L", "1R", "2", "3", "4L", "4R", "5"}));
    figure->add_option("--points", points, "grid points per curve");
    figure->add_option("--alphas", alphas, "alpha list for the pole loci figures");
    figure->add_option("--n-max", n_max, "poles per alpha");

    std::string ext_name = "deltainf0";
    double r0 = 1.0;
    auto* shell = app.add_subcommand("shell3d", "delta-sphere ground state");
    add_common(shell, false);
    shell->add_option("--extension", ext_name, "deltainf0 or delta00")
        ->check(CLI::IsMember({"deltainf0", "delta00"}));
    shell->add_option("--lambda", lambda, "coupling strength");
    shell->add_option("--r0", r0, "shell radius");

    auto* verify = app.add_subcommand("verify", "run the oracle cross-checks");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const BoundaryCondition bc = parse_bc(bc_name);
        const double x0 = parse_x0(x0_str);
        Output out{out_path, fmt_name};

        if (green->parsed()) {
            const double v = perturbed
                                 ? kernels::perturbed_green(bc, DeltaConfig(lambda, x0), x, y, E)
                                 : kernels::free_green(bc, x, y, E);
            json cfg{{"bc", bc_name}, {"x", x}, {"y", y}, {"energy", E}, {"perturbed", perturbed}};
            out.emit("x,y,energy,value\n" + fmt(x) + "," + fmt(y) + "," + fmt(E) + "," +
                         fmt(v) + "\n",
                     {{"metadata", meta(cfg)}, {"data", {{"value", v}}}});
        } else if (heat->parsed()) {
            const double v = kernels::heat_kernel(bc, x, y, t);
            json cfg{{"bc", bc_name}, {"x", x}, {"y", y}, {"time", t}};
            out.emit("x,y,time,value\n" + fmt(x) + "," + fmt(y) + "," + fmt(t) + "," +
                         fmt(v) + "\n",
                     {{"metadata", meta(cfg)}, {"data", {{"value", v}}}});
        } else if (bound->parsed()) {
            json cfg{{"bc", bc_name}, {"lambda", lambda}, {"x0", x0_str}};
            if (x0 == spectral::kInfiniteX0) {
                const double e = -lambda * lambda / 4.0;
                out.emit("energy,exists,asymptotic\n" + fmt(e) + ",true,true\n",
                         {{"metadata", meta(cfg)},
                          {"data", {{"energy", e}, {"exists", true}, {"asymptotic", true}}}});
            } else if (auto st = spectral::bound_state_energy(bc, DeltaConfig(lambda, x0))) {
                out.emit("energy,exists,asymptotic\n" + fmt(st->energy) + ",true,false\n",
                         {{"metadata", meta(cfg)},
                          {"data",
                           {{"energy", st->energy}, {"kappa", st->kappa}, {"exists", true}}}});
            } else {
                std::cout << "no bound state (threshold: x0 = " << fmt(1.0 / lambda) << ")\n";
            }
        } else if (res->parsed()) {
            const auto rep = resonances::find_resonances(bc, DeltaConfig(lambda, x0), n_max, tol);
            json cfg{{"bc", bc_name}, {"lambda", lambda}, {"x0", x0_str}, {"n_max", n_max}};
            out.emit(poles_csv(rep.poles),
                     {{"metadata", meta(cfg)},
                      {"data", poles_json(rep.poles)},
                      {"skipped_branches", rep.skipped_branches},
                      {"failed_branches", rep.failed_branches}});
            if (!rep.failed_branches.empty()) {
                std::cerr << "convergence failure on branches:";
                for (int b : rep.failed_branches)
                    std::cerr << " " << b;
                std::cerr << "\n";
                return 1;
            }
        } else if (sweep->parsed()) {
            const auto fixed = fixed_name == "lambda" ? spectral::SweepParameter::Lambda
                                                      : spectral::SweepParameter::X0;
            const int count = static_cast<int>(grid_spec[2]);
            if (count < 2)
                throw CLI::ValidationError("--grid", "count must be >= 2");
            std::vector<double> grid(count);
            for (int i = 0; i < count; ++i)
                grid[i] = grid_spec[0] + (grid_spec[1] - grid_spec[0]) * i / (count - 1);
            const auto rows = spectral::energy_sweep(bc, fixed, fixed_value, grid);
            json cfg{{"bc", bc_name}, {"fixed", fixed_name}, {"value", fixed_value},
                     {"grid", grid_spec}};
            out.emit(sweep_csv(rows), {{"metadata", meta(cfg)}, {"data", sweep_json(rows)}});
        } else if (figure->parsed()) {
            json cfg{{"figure", figure_name}, {"points", points}};
            if (figure_name == "1L") {
                const auto s = figures::figure_1l(points);
                out.emit(series_csv(s, "lambda", "x0"),
                         {{"metadata", meta(cfg)}, {"data", series_json(s)}});
            } else if (figure_name == "1R") {
                const auto s = figures::figure_1r(points);
                out.emit(series_csv(s, "x0", "lambda"),
                         {{"metadata", meta(cfg)}, {"data", series_json(s)}});
            } else if (figure_name == "4L") {
                const auto s = figures::figure_4l(points);
                out.emit(series_csv(s, "lambda", "x0"),
                         {{"metadata", meta(cfg)}, {"data", series_json(s)}});
            } else if (figure_name == "4R") {
                const auto s = figures::figure_4r(points);
                out.emit(series_csv(s, "x0", "lambda"),
                         {{"metadata", meta(cfg)}, {"data", series_json(s)}});
            } else if (figure_name == "2") {
                const auto rows = figures::figure_2();
                std::string csv = "lambda,x0,energy\n";
                json data = json::array();
                for (const auto& r : rows) {
                    csv += fmt(r.lambda) + "," + fmt(r.x0) + "," +
                           (r.energy ? fmt(*r.energy) : "") + "\n";
                    json jr{{"lambda", r.lambda}, {"x0", r.x0}};
                    if (r.energy)
                        jr["energy"] = *r.energy;
                    data.push_back(jr);
                }
                out.emit(csv, {{"metadata", meta(cfg)}, {"data", data}});
            } else { // 3 or 5
                cfg["alphas"] = alphas;
                const auto rows = figure_name == "3" ? figures::figure_3(alphas, n_max)
                                                     : figures::figure_5(alphas, n_max);
                std::string csv = "alpha,branch,z1,z2,re_k,im_k,e_r,gamma,residual\n";
                json data = json::array();
                for (const auto& r : rows) {
                    csv += fmt(r.alpha) + "," + std::to_string(r.branch) + "," + fmt(r.z1) +
                           "," + fmt(r.z2) + "," + fmt(r.re_k) + "," + fmt(r.im_k) + "," +
                           fmt(r.e_r) + "," + fmt(r.gamma) + "," + fmt(r.residual) + "\n";
                    data.push_back({{"alpha", r.alpha}, {"branch", r.branch}, {"z1", r.z1},
                                    {"z2", r.z2}, {"re_k", r.re_k}, {"im_k", r.im_k},
                                    {"e_r", r.e_r}, {"gamma", r.gamma},
                                    {"residual", r.residual}});
                }
                out.emit(csv, {{"metadata", meta(cfg)}, {"data", data}});
            }
        } else if (shell->parsed()) {
            const auto ext = ext_name == "deltainf0" ? shell3d::Extension::DeltaInf0
                                                     : shell3d::Extension::Delta00;
            json cfg{{"extension", ext_name}, {"lambda", lambda}, {"r0", r0}};
            if (auto e = shell3d::shell_ground_state(ext, lambda, r0)) {
                out.emit("energy,exists\n" + fmt(*e) + ",true\n",
                         {{"metadata", meta(cfg)}, {"data", {{"energy", *e}, {"exists", true}}}});
            } else {
                std::cout << "no bound state (threshold: r0 = " << fmt(1.0 / lambda) << ")\n";
            }
        } else if (verify->parsed()) {
            return run_verify(bc, lambda, x0);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
