#include "fsr/cases.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "fsr/exact.hpp"
#include "fsr/forcing.hpp"
#include "fsr/physics_euler.hpp"
#include "fsr/physics_scalar.hpp"
#include "fsr/solver.hpp"
#include "fsr/verification.hpp"

namespace fsr {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const std::vector<StudyRow>& rows) {
    std::ofstream os(path);
    os << "grid,h,error,observed_order,iterations,wall_seconds\n";
    for (const auto& r : rows)
        os << r.grid << "," << fmt17(r.h) << "," << fmt17(r.error) << ","
           << fmt17(r.observed_order) << "," << r.iterations << "," << fmt17(r.wall_seconds)
           << "\n";
}

void write_plot(const std::string& dir, const std::string& csv_name) {
    std::ofstream os(dir + "/plot.gp");
    os << "set logscale xy\nset xlabel 'h'\nset ylabel 'error'\nset key left top\n"
       << "set datafile separator ','\n"
       << "plot '" << csv_name << "' using 2:3 skip 1 with linespoints title 'error'\n";
}

par::Exec exec_for(const CaseConfig& cfg) {
    int t = cfg.threads > 0 ? cfg.threads : par::max_threads();
    return par::Exec{t};
}

void validate(const CaseConfig& cfg) {
    const auto& cases = CaseConfig::case_names();
    if (std::find(cases.begin(), cases.end(), cfg.case_tag) == cases.end()) {
        std::string msg = "unknown case '" + cfg.case_tag + "'; valid names:";
        for (const auto& c : cases) msg += " " + c;
        throw InvalidParameter(msg);
    }
    SchemeConfig::preset(cfg.scheme); // throws with the valid-name list
    const bool euler = cfg.case_tag.rfind("euler", 0) == 0;
    if (cfg.scheme == "qfsr5z" && !euler)
        throw InvalidParameter("qfsr5z reconstructs the parameter vector and requires an "
                               "Euler case");
    for (std::size_t i = 1; i < cfg.grids.size(); ++i)
        if (cfg.grids[i] <= cfg.grids[i - 1])
            throw InvalidParameter("grid size list must be strictly increasing");
    if (!cfg.grid_family.empty() && cfg.case_tag.rfind("euler2d", 0) != 0)
        throw InvalidParameter("--grid-family applies to 2D cases only");
}

std::vector<int> default_grids(const std::string& tag, bool te) {
    if (tag == "burgers-steady" || tag == "cubic-steady")
        return te ? std::vector<int>{64, 128, 256, 512, 1024}
                  : std::vector<int>{32, 64, 128, 256};
    if (tag == "euler1d-steady")
        return te ? std::vector<int>{33, 65, 129, 257} : std::vector<int>{22, 44, 88, 176};
    if (tag == "euler1d-acoustic") return {21, 41, 81, 161};
    if (tag == "euler2d-steady")
        return te ? std::vector<int>{17, 33, 65} : std::vector<int>{32, 48, 64, 80, 96, 112, 128};
    return {64, 80, 96, 112, 128}; // euler2d-vortex
}

SchemeConfig scheme_for(const CaseConfig& cfg) {
    auto sch = SchemeConfig::preset(cfg.scheme);
    sch.dissipation = cfg.dissipation;
    return sch;
}

Mesh build_2d_mesh(const CaseConfig& cfg, int n, double x_lo, double x_hi, double y_lo) {
    const std::string fam = cfg.grid_family.empty() ? "quad" : cfg.grid_family;
    if (fam == "quad") return build_quad_grid(n, cfg.aspect, x_lo, x_hi, y_lo);
    if (cfg.aspect != 1.0)
        throw InvalidParameter("aspect applies to quad grids only");
    if (fam == "right-tri") return build_tri_grid(n, TriVariant::Right);
    if (fam == "equilateral-tri") return build_tri_grid(n, TriVariant::Equilateral);
    if (fam == "irregular-tri") return build_tri_grid(n, TriVariant::Irregular, cfg.seed);
    throw InvalidParameter("unknown grid family '" + fam +
                           "' (quad|right-tri|equilateral-tri|irregular-tri)");
}

template <class Model, class Exact>
std::vector<Vec<typename Model::Real, Model::M>>
exact_field(const MeshT<typename Model::Real>& mesh, const Model& model, const Exact& exact,
            double t) {
    using Real = typename Model::Real;
    std::vector<Vec<Real, Model::M>> u(mesh.num_nodes());
    for (int j = 0; j < mesh.num_nodes(); ++j) {
        const auto wp = exact.template prim<Real>(mesh.nodes[j].x[0], mesh.nodes[j].x[1], t);
        Vec<Real, Model::M> w;
        for (int c = 0; c < Model::M; ++c) w[c] = wp[c];
        u[j] = model.u_from_w(w);
    }
    return u;
}

// ---------------------------------------------------------------- steady

template <class Model, bool Z, class Exact>
StudyRow steady_grid_run(const CaseConfig& cfg, const Model& model, const Exact& exact,
                         const MeshT<typename Model::Real>& mesh,
                         const Vec<typename Model::Real, Model::M>& w_init, double drop,
                         ErrNorm norm) {
    using Real = typename Model::Real;
    Timer timer;
    auto sch = scheme_for(cfg);
    Discretization<Model, Z> D(mesh, model, sch, exec_for(cfg));
    D.forcing = forcing_field(mesh, model, exact, 0.0);

    auto uex = exact_field(mesh, model, exact, 0.0);
    std::vector<Vec<Real, Model::M>> u(mesh.num_nodes());
    const auto u_init = model.u_from_w(w_init);
    for (int j = 0; j < mesh.num_nodes(); ++j)
        u[j] = mesh.nodes[j].boundary_depth <= 2 ? uex[j] : u_init;

    SolveParams p;
    p.cfl = cfg.cfl;
    p.drop = drop;
    const long n_scale = (Model::DIM == 1) ? mesh.num_nodes()
                                           : long(std::lround(std::sqrt(double(mesh.num_nodes()))));
    p.max_iter = cfg.max_iter > 0 ? cfg.max_iter : (Model::DIM == 1 ? 500 : 2000) * n_scale;
    auto rep = solve_steady(D, u, p);

    StudyRow row;
    row.grid = int(Model::DIM == 1 ? mesh.num_nodes() : n_scale);
    row.h = mesh.effective_spacing();
    row.error = solution_error(u, uex, norm);
    row.iterations = rep.iterations;
    row.wall_seconds = timer.seconds();
    return row;
}

// --------------------------------------------------------------- unsteady

template <class Model, bool Z, class Exact>
StudyRow unsteady_grid_run(const CaseConfig& cfg, const Model& model, const Exact& exact,
                           const Mesh& mesh, double dt, long steps, ErrNorm norm) {
    Timer timer;
    auto sch = scheme_for(cfg);
    Discretization<Model, Z> D(mesh, model, sch, exec_for(cfg));

    auto u = exact_field(mesh, model, exact, 0.0);
    auto pin = [&](std::vector<Vec<double, Model::M>>& v, double t) {
        for (int j : D.pinned_nodes()) {
            const auto wp =
                exact.template prim<double>(mesh.nodes[j].x[0], mesh.nodes[j].x[1], t);
            Vec<double, Model::M> w;
            for (int c = 0; c < Model::M; ++c) w[c] = wp[c];
            v[j] = model.u_from_w(w);
        }
    };
    auto rep = advance_unsteady(D, u, 0.0, dt, steps, pin);

    const double tf = double(steps) * dt;
    auto uex = exact_field(mesh, model, exact, tf);
    StudyRow row;
    row.grid = int(Model::DIM == 1 ? mesh.num_nodes()
                                   : std::lround(std::sqrt(double(mesh.num_nodes()))));
    row.h = mesh.effective_spacing();
    row.error = solution_error(u, uex, norm);
    row.iterations = rep.iterations;
    row.wall_seconds = timer.seconds();
    return row;
}

StudyResult finish(const CaseConfig& cfg, std::vector<StudyRow> rows, const char* csv_name) {
    // observed orders from the effective spacings
    std::vector<ConvRow> conv;
    for (const auto& r : rows) conv.push_back({r.grid, r.h, r.error, std::nan(""), 0, 0.0});
    const auto rep = convergence_order(std::move(conv));
    for (std::size_t i = 0; i < rows.size(); ++i)
        rows[i].observed_order = rep.rows[i].observed_order;

    StudyResult out;
    out.rows = std::move(rows);
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        out.csv_path = cfg.out_dir + "/" + csv_name;
        write_csv(out.csv_path, out.rows);
        if (cfg.plot) write_plot(cfg.out_dir, csv_name);
    }
    return out;
}

// Scalar-case domain: chosen so the wave speed stays away from zero at the
// boundaries (u = sin(1.23 x) has no zero on [0.5, 1.5]); a vanishing f'(u)
// at a pinned boundary would otherwise contaminate the Linf order with a
// 1/f' error layer. These solves run in long double: the fifth-order
// errors on the finest grids sit below the double round-off floor.
constexpr double kScalarXlo = 0.5, kScalarXhi = 1.5;

template <class Flux>
StudyResult run_scalar_steady(const CaseConfig& cfg, const Flux&, double drop) {
    using Real = long double;
    ScalarLaw<Real, Flux> law;
    std::conditional_t<std::is_same_v<Flux, BurgersFlux>, BurgersSteadyExact, CubicSteadyExact>
        exact;
    std::vector<StudyRow> rows;
    for (int n : cfg.grids) {
        auto mesh = build_uniform_1d<Real>(n, Real(kScalarXlo), Real(kScalarXhi));
        rows.push_back(steady_grid_run<ScalarLaw<Real, Flux>, false>(
            cfg, law, exact, mesh, Vec<Real, 1>{Real(0.8)}, drop, ErrNorm::Linf));
    }
    return finish(cfg, std::move(rows), "convergence.csv");
}

template <bool Z>
StudyResult run_euler1d_steady(const CaseConfig& cfg, double drop) {
    Euler1D<double> gas;
    gas.entropy_fix_eps = cfg.entropy_fix;
    Euler1DSteadyExact exact;
    std::vector<StudyRow> rows;
    for (int n : cfg.grids) {
        auto mesh = build_uniform_1d<double>(n, 0.0, 1.0);
        rows.push_back(steady_grid_run<Euler1D<double>, Z>(
            cfg, gas, exact, mesh, Vec<double, 3>{1.0, 0.2, 1.7}, drop, ErrNorm::L1));
    }
    return finish(cfg, std::move(rows), "convergence.csv");
}

template <bool Z>
StudyResult run_euler1d_acoustic(const CaseConfig& cfg) {
    Euler1D<double> gas;
    AcousticExact exact;
    const double dt = cfg.dt > 0 ? cfg.dt : 2.0e-6;
    const long steps = cfg.steps > 0 ? cfg.steps : std::lround(0.07 / dt);
    std::vector<StudyRow> rows;
    for (int n : cfg.grids) {
        auto mesh = build_uniform_1d<double>(n, 0.0, 1.0);
        rows.push_back(
            unsteady_grid_run<Euler1D<double>, Z>(cfg, gas, exact, mesh, dt, steps, ErrNorm::L1));
    }
    return finish(cfg, std::move(rows), "convergence.csv");
}

template <bool Z>
StudyResult run_euler2d_steady(const CaseConfig& cfg, double drop) {
    Euler2D<double> gas;
    gas.entropy_fix_eps = cfg.entropy_fix;
    Euler2DSteadyExact exact;
    exact.yfreq = 1.0 / cfg.aspect;
    std::vector<StudyRow> rows;
    for (int n : cfg.grids) {
        auto mesh = build_2d_mesh(cfg, n, 0.0, 1.0, 0.0);
        rows.push_back(steady_grid_run<Euler2D<double>, Z>(
            cfg, gas, exact, mesh, Vec<double, 4>{1.0, 0.15, 0.02, 1.0}, drop, ErrNorm::L1));
    }
    return finish(cfg, std::move(rows), "convergence.csv");
}

template <bool Z>
StudyResult run_euler2d_vortex(const CaseConfig& cfg) {
    Euler2D<double> gas;
    VortexExact exact;
    const double dt = cfg.dt > 0 ? cfg.dt : 1.0e-3;
    const long steps = cfg.steps > 0 ? cfg.steps : 1000;
    std::vector<StudyRow> rows;
    for (int n : cfg.grids) {
        auto mesh = build_quad_grid(n, cfg.aspect, -5.0, 5.0, -5.0);
        rows.push_back(
            unsteady_grid_run<Euler2D<double>, Z>(cfg, gas, exact, mesh, dt, steps, ErrNorm::L1));
    }
    return finish(cfg, std::move(rows), "convergence.csv");
}

// ------------------------------------------------------------- te probes

template <class Real, class Flux, class Exact>
StudyRow te_scalar_row(const CaseConfig& cfg, const Exact& exact, int n) {
    Timer timer;
    ScalarLaw<Real, Flux> law;
    auto mesh = build_uniform_1d<Real>(n, Real(kScalarXlo), Real(kScalarXhi));
    auto sch = scheme_for(cfg);
    Discretization<ScalarLaw<Real, Flux>, false> D(mesh, law, sch, exec_for(cfg));
    D.forcing = forcing_closed_form_1d<Real>(mesh, [&](Real x) { return exact.source(x); });
    std::vector<Vec<Real, 1>> u(n);
    for (int j = 0; j < n; ++j) u[j][0] = exact.template prim<Real>(mesh.nodes[j].x[0], Real(0), 0.0)[0];
    StudyRow row;
    row.grid = n;
    row.h = double(mesh.effective_spacing());
    row.error = te_interior_linf(D, u);
    row.wall_seconds = timer.seconds();
    return row;
}

template <class Model, bool Z, class Exact>
StudyRow te_euler_row(const CaseConfig& cfg, const Model& model, const Exact& exact,
                      const Mesh& mesh) {
    Timer timer;
    auto sch = scheme_for(cfg);
    Discretization<Model, Z> D(mesh, model, sch, exec_for(cfg));
    D.forcing = forcing_field(mesh, model, exact, 0.0);
    auto u = exact_field(mesh, model, exact, 0.0);
    StudyRow row;
    row.grid = int(Model::DIM == 1 ? mesh.num_nodes()
                                   : std::lround(std::sqrt(double(mesh.num_nodes()))));
    row.h = double(mesh.effective_spacing());
    row.error = te_interior_linf(D, u);
    row.wall_seconds = timer.seconds();
    return row;
}

#if FSR_HAVE_QUAD
using TeReal = quad;
#else
using TeReal = long double;
#endif

} // namespace

const std::vector<std::string>& CaseConfig::case_names() {
    static const std::vector<std::string> names = {"burgers-steady",   "cubic-steady",
                                                   "euler1d-steady",   "euler1d-acoustic",
                                                   "euler2d-steady",   "euler2d-vortex"};
    return names;
}

double StudyResult::final_order() const {
    return rows.size() >= 2 ? rows.back().observed_order : std::nan("");
}

StudyResult run_case(const CaseConfig& cfg_in) {
    CaseConfig cfg = cfg_in;
    validate(cfg);
    if (cfg.grids.empty()) cfg.grids = default_grids(cfg.case_tag, false);
    const bool z = SchemeConfig::preset(cfg.scheme).recon_var == ReconVar::Parameter;

    if (cfg.case_tag == "burgers-steady")
        return run_scalar_steady(cfg, BurgersFlux{}, cfg.drop > 0 ? cfg.drop : 1e-7);
    if (cfg.case_tag == "cubic-steady")
        return run_scalar_steady(cfg, CubicFlux{}, cfg.drop > 0 ? cfg.drop : 1e-7);
    if (cfg.case_tag == "euler1d-steady") {
        const double drop = cfg.drop > 0 ? cfg.drop : 1e-7;
        return z ? run_euler1d_steady<true>(cfg, drop) : run_euler1d_steady<false>(cfg, drop);
    }
    if (cfg.case_tag == "euler1d-acoustic")
        return z ? run_euler1d_acoustic<true>(cfg) : run_euler1d_acoustic<false>(cfg);
    if (cfg.case_tag == "euler2d-steady") {
        const double drop = cfg.drop > 0 ? cfg.drop : 1e-8;
        return z ? run_euler2d_steady<true>(cfg, drop) : run_euler2d_steady<false>(cfg, drop);
    }
    return z ? run_euler2d_vortex<true>(cfg) : run_euler2d_vortex<false>(cfg);
}

StudyResult run_te_probe(const CaseConfig& cfg_in) {
    CaseConfig cfg = cfg_in;
    validate(cfg);
    if (cfg.case_tag == "euler1d-acoustic" || cfg.case_tag == "euler2d-vortex")
        throw InvalidParameter("the truncation-error probe applies to steady cases only");
    if (cfg.grids.empty()) cfg.grids = default_grids(cfg.case_tag, true);
    const bool z = SchemeConfig::preset(cfg.scheme).recon_var == ReconVar::Parameter;

    std::vector<StudyRow> rows;
    if (cfg.case_tag == "burgers-steady") {
        for (int n : cfg.grids)
            rows.push_back(te_scalar_row<TeReal, BurgersFlux>(cfg, BurgersSteadyExact{}, n));
    } else if (cfg.case_tag == "cubic-steady") {
        for (int n : cfg.grids)
            rows.push_back(te_scalar_row<TeReal, CubicFlux>(cfg, CubicSteadyExact{}, n));
    } else if (cfg.case_tag == "euler1d-steady") {
        Euler1D<double> gas;
        Euler1DSteadyExact exact;
        for (int n : cfg.grids) {
            auto mesh = build_uniform_1d<double>(n, 0.0, 1.0);
            rows.push_back(z ? te_euler_row<Euler1D<double>, true>(cfg, gas, exact, mesh)
                             : te_euler_row<Euler1D<double>, false>(cfg, gas, exact, mesh));
        }
    } else { // euler2d-steady
        Euler2D<double> gas;
        Euler2DSteadyExact exact;
        exact.yfreq = 1.0 / cfg.aspect;
        for (int n : cfg.grids) {
            auto mesh = build_2d_mesh(cfg, n, 0.0, 1.0, 0.0);
            rows.push_back(z ? te_euler_row<Euler2D<double>, true>(cfg, gas, exact, mesh)
                             : te_euler_row<Euler2D<double>, false>(cfg, gas, exact, mesh));
        }
    }
    return finish(cfg, std::move(rows), "te.csv");
}

} // namespace fsr
