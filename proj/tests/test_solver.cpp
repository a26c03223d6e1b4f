#include "doctest.h"

#include <cmath>

#include "fsr/exact.hpp"
#include "fsr/forcing.hpp"
#include "fsr/physics_scalar.hpp"
#include "fsr/solver.hpp"
#include "fsr/verification.hpp"

using namespace fsr;

namespace {
struct Wave {
    double c = 1.0;
    template <class C>
    std::array<C, 1> prim(C x, C, double t) const {
        return {sin(C(2.0 * consts::pi) * (x - C(c * t)))};
    }
};
} // namespace

TEST_SUITE_BEGIN("solver");

TEST_CASE("local time step hand value, linearity and euler stagnation") {
    auto mesh = build_uniform_1d<double>(11, 0.0, 1.0);
    Burgers<double> bg;
    Discretization<Burgers<double>, false> D(mesh, bg, SchemeConfig::preset("fromm"));
    std::vector<Vec<double, 1>> u(11, Vec<double, 1>{2.0});
    std::vector<double> dt;
    D.local_time_step(u, 0.99, dt);
    // interior: V = 0.1, two unit edges with wave speed 2 each
    CHECK(dt[5] == doctest::Approx(0.99 * 0.1 / 4.0).epsilon(1e-14));
    std::vector<double> dt2;
    D.local_time_step(u, 1.98, dt2);
    CHECK(dt2[5] == doctest::Approx(2.0 * dt[5]).epsilon(1e-14));

    // stagnant Euler state: acoustic speed keeps dt finite
    Euler1D<double> gas;
    Discretization<Euler1D<double>, false> De(mesh, gas, SchemeConfig::preset("fromm"));
    std::vector<Vec<double, 3>> ue(11, gas.u_from_w({1.0, 0.0, 1.0}));
    De.local_time_step(ue, 0.99, dt);
    CHECK(std::isfinite(dt[5]));
    CHECK(dt[5] > 0.0);
    CHECK(dt[5] < 1.0);
}

TEST_CASE("ssp-rk3 combination coefficients give fourth-order one-step error") {
    // u' = lambda u for one step: error vs exp must shrink like dt^4 with
    // the classical 1/24 leading coefficient.
    const double lambda = -1.3;
    auto one_step = [&](double dt) {
        double u = 1.0;
        const double u1 = u + dt * lambda * u;
        const double u2 = 0.75 * u + 0.25 * (u1 + dt * lambda * u1);
        return u / 3.0 + 2.0 / 3.0 * (u2 + dt * lambda * u2);
    };
    const double dt1 = 1e-2, dt2 = 5e-3;
    const double e1 = std::abs(one_step(dt1) - std::exp(lambda * dt1));
    const double e2 = std::abs(one_step(dt2) - std::exp(lambda * dt2));
    const double order = std::log(e1 / e2) / std::log(2.0);
    CHECK(order == doctest::Approx(4.0).epsilon(0.02));
    CHECK(e1 / std::pow(lambda * dt1, 4) == doctest::Approx(1.0 / 24.0).epsilon(0.01));
}

TEST_CASE("exact discrete fixed point converges in zero iterations") {
    auto mesh = build_uniform_1d<double>(16, 0.0, 1.0);
    Burgers<double> bg;
    Discretization<Burgers<double>, false> D(mesh, bg, SchemeConfig::preset("fsr3"));
    std::vector<Vec<double, 1>> u(16, Vec<double, 1>{0.4}); // constant, no forcing
    SolveParams p;
    auto rep = solve_steady(D, u, p);
    CHECK(rep.converged);
    CHECK(rep.iterations == 0);
    for (int j = 0; j < 16; ++j) CHECK(u[j][0] == 0.4);
}

TEST_CASE("steady burgers on 32 nodes converges with a finite error") {
    auto mesh = build_uniform_1d<double>(32, 0.0, 1.0);
    Burgers<double> bg;
    BurgersSteadyExact exact;
    Discretization<Burgers<double>, false> D(mesh, bg, SchemeConfig::preset("fsr3"));
    D.forcing = forcing_field(mesh, bg, exact, 0.0);
    std::vector<Vec<double, 1>> u(32), uex(32);
    for (int j = 0; j < 32; ++j) uex[j][0] = std::sin(1.23 * mesh.nodes[j].x[0]);
    for (int j = 0; j < 32; ++j)
        u[j] = mesh.nodes[j].boundary_depth <= 2 ? uex[j] : Vec<double, 1>{0.5};
    SolveParams p;
    p.drop = 1e-10;
    p.max_iter = 40000;
    auto rep = solve_steady(D, u, p);
    CHECK(rep.converged);
    const double err = solution_error(u, uex, ErrNorm::Linf);
    CHECK(err > 0.0);
    CHECK(err < 1e-4);

    // determinism: the same solve twice is bitwise identical
    std::vector<Vec<double, 1>> v(32);
    for (int j = 0; j < 32; ++j)
        v[j] = mesh.nodes[j].boundary_depth <= 2 ? uex[j] : Vec<double, 1>{0.5};
    auto rep2 = solve_steady(D, v, p);
    CHECK(rep2.iterations == rep.iterations);
    for (int j = 0; j < 32; ++j) CHECK(v[j][0] == u[j][0]);
}

TEST_CASE("unsteady: zero steps returns the initial state") {
    auto mesh = build_uniform_1d<double>(16, 0.0, 1.0);
    Advection<double> adv;
    Discretization<Advection<double>, false> D(mesh, adv, SchemeConfig::preset("fsr3"));
    std::vector<Vec<double, 1>> u(16);
    for (int j = 0; j < 16; ++j) u[j][0] = std::sin(mesh.nodes[j].x[0]);
    auto u0 = u;
    advance_unsteady(D, u, 0.0, 1e-3, 0, [](auto&, double) {});
    for (int j = 0; j < 16; ++j) CHECK(u[j][0] == u0[j][0]);
}

TEST_CASE("unsteady advection converges at the spatial design order") {
    // u_t + c u_x = 0 with exact sinusoid; dissipation off so fsr3 runs at
    // its zero-dissipation order 4; dt small enough to stay spatial.
    Advection<double> adv;
    adv.fl.c = 1.0;
    Wave wave;
    auto sch = SchemeConfig::preset("fsr3");
    sch.dissipation = false;
    auto run = [&](int n, double dt) {
        auto mesh = build_uniform_1d<double>(n, 0.0, 1.0);
        Discretization<Advection<double>, false> D(mesh, adv, sch);
        std::vector<Vec<double, 1>> u(n);
        auto pin = [&](std::vector<Vec<double, 1>>& v, double t) {
            for (int j : D.pinned_nodes()) v[j][0] = wave.prim<double>(mesh.nodes[j].x[0], 0.0, t)[0];
        };
        for (int j = 0; j < n; ++j) u[j][0] = wave.prim<double>(mesh.nodes[j].x[0], 0.0, 0.0)[0];
        const double tf = 0.05;
        const long steps = std::lround(tf / dt);
        advance_unsteady(D, u, 0.0, dt, steps, pin);
        double err = 0.0;
        for (int j = 0; j < n; ++j)
            err = std::max(err,
                           std::abs(u[j][0] - wave.prim<double>(mesh.nodes[j].x[0], 0.0, tf)[0]));
        return err;
    };
    const double e1 = run(33, 1e-4);
    const double e2 = run(65, 1e-4);
    const double order = std::log(e1 / e2) / std::log(2.0);
    CHECK(order > 3.4); // design order 4 with zero dissipation

    // temporal saturation: halving dt changes the error only marginally
    const double e2b = run(65, 5e-5);
    CHECK(std::abs(e2b - e2) / e2 < 0.01);
}

TEST_SUITE_END();
