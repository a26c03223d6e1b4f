#include "doctest.h"

#include <cmath>

#include "fsr/exact.hpp"
#include "fsr/forcing.hpp"
#include "fsr/physics_euler.hpp"
#include "fsr/physics_scalar.hpp"
#include "fsr/verification.hpp"

using namespace fsr;

TEST_SUITE_BEGIN("verification");

TEST_CASE("vortex evaluation at the center") {
    VortexExact vx;
    const auto w = vx.prim<double>(0.0, 0.0, 0.0);
    CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-14)); // u_inf, ybar = 0
    // temperature T = gamma p / rho at the center
    const double T = 1.4 * w[3] / w[0];
    CHECK(T == doctest::Approx(1.0 - 25.0 * 0.4 * std::exp(1.0) / (8.0 * consts::pi * consts::pi))
                   .epsilon(1e-12));
    CHECK(T == doctest::Approx(0.65578).epsilon(1e-4));
}

TEST_CASE("acoustic wave closed form at t = 0 and fixed-point residual") {
    AcousticExact ac;
    const double V0 = ac.solve_V<double>(0.25, 0.0);
    CHECK(V0 == doctest::Approx(1.0 / (consts::pi * 0.2 * 2.4)).epsilon(1e-13));
    CHECK(V0 == doctest::Approx(0.663146).epsilon(1e-5));

    const double t = 0.05;
    for (double x : {0.1, 0.37, 0.81}) {
        const double V = ac.solve_V<double>(x, t);
        const double residual =
            std::abs(V - std::sin(2.0 * consts::pi *
                                  (x - (ac.Minf + V + 1.0 + 0.2 * V) * t)) /
                             (consts::pi * ac.ts * 2.4));
        CHECK(residual < 1e-13);
    }
    // admissible primitive state
    const auto w = ac.prim<double>(0.4, 0.0, t);
    CHECK(w[0] > 0.0);
    CHECK(w[2] > 0.0);
}

TEST_CASE("2d steady exact fields stay admissible on the unit square") {
    Euler2DSteadyExact ex;
    double min_rho = 1e300, min_p = 1e300;
    for (int i = 0; i <= 100; ++i)
        for (int j = 0; j <= 100; ++j) {
            const auto w = ex.prim<double>(i / 100.0, j / 100.0, 0.0);
            min_rho = std::min(min_rho, w[0]);
            min_p = std::min(min_p, w[3]);
        }
    CHECK(min_rho > 0.0);
    CHECK(min_p > 0.0);
}

TEST_CASE("error norms") {
    std::vector<Vec<double, 1>> u(10, Vec<double, 1>{1.0}), ex(10, Vec<double, 1>{1.0});
    CHECK(solution_error(u, ex, ErrNorm::Linf) == 0.0);
    CHECK(solution_error(u, ex, ErrNorm::L1) == 0.0);
    u[3][0] += 2.5e-3;
    CHECK(solution_error(u, ex, ErrNorm::Linf) == doctest::Approx(2.5e-3));
    CHECK(solution_error(u, ex, ErrNorm::L1) == doctest::Approx(2.5e-4));
}

TEST_CASE("observed orders from error pairs") {
    // (h, e) = (0.1, 1e-2), (0.05, 1.25e-3) -> order 3
    ConvRow r1{10, 0.1, 1e-2, 0, 0, 0};
    ConvRow r2{20, 0.05, 1.25e-3, 0, 0, 0};
    auto rep = convergence_order({r1, r2});
    CHECK(rep.final_order() == doctest::Approx(3.0).epsilon(1e-12));

    // synthetic e ~ h^5
    std::vector<ConvRow> rows;
    for (int k = 0; k < 4; ++k) {
        ConvRow r;
        r.h = 0.1 / std::pow(2.0, k);
        r.error = 7.0 * std::pow(r.h, 5);
        rows.push_back(r);
    }
    rep = convergence_order(rows);
    CHECK(rep.final_order() == doctest::Approx(5.0).epsilon(1e-12));

    // mixed e ~ h^2 + h^4 tends to 2 from above
    rows.clear();
    for (int k = 0; k < 8; ++k) {
        ConvRow r;
        r.h = 0.1 / std::pow(2.0, k);
        r.error = std::pow(r.h, 2) + std::pow(r.h, 4);
        rows.push_back(r);
    }
    rep = convergence_order(rows);
    CHECK(rep.final_order() == doctest::Approx(2.0).epsilon(1e-4));

    // non-monotone h is rejected
    std::vector<ConvRow> bad = {{0, 0.1, 1.0, 0, 0, 0}, {0, 0.2, 0.5, 0, 0, 0}};
    CHECK_THROWS_AS(convergence_order(bad), InvalidSeries);
}

TEST_CASE("te probe: sr2 decays at second order in double precision") {
    Burgers<double> bg;
    BurgersSteadyExact exact;
    auto sch = SchemeConfig::preset("fromm");
    std::vector<ConvRow> rows;
    for (int n : {33, 65, 129}) {
        auto mesh = build_uniform_1d<double>(n, 0.0, 1.0);
        Discretization<Burgers<double>, false> D(mesh, bg, sch);
        D.forcing = forcing_closed_form_1d<double>(mesh, [&](double x) { return exact.source(x); });
        std::vector<Vec<double, 1>> u(n);
        for (int j = 0; j < n; ++j) u[j][0] = std::sin(1.23 * mesh.nodes[j].x[0]);
        ConvRow r;
        r.h = mesh.effective_spacing();
        r.error = te_interior_linf(D, u);
        rows.push_back(r);
    }
    auto rep = convergence_order(rows);
    CHECK(rep.final_order() == doctest::Approx(2.0).epsilon(0.15));
}

TEST_SUITE_END();
