#include "doctest.h"

#include <cstdlib>

#include "fsr/exact.hpp"
#include "fsr/forcing.hpp"
#include "fsr/lsq.hpp"
#include "fsr/physics_euler.hpp"
#include "fsr/solver.hpp"

using namespace fsr;

TEST_SUITE_BEGIN("parallel");

TEST_CASE("FSR_THREADS caps the worker count") {
    setenv("FSR_THREADS", "1", 1);
    CHECK(par::max_threads() == 1);
    unsetenv("FSR_THREADS");
    CHECK(par::max_threads() >= 1);
}

TEST_CASE("lsq kernels are bitwise identical across thread counts") {
    auto mesh = build_tri_grid(24, TriVariant::Irregular, 11);
    LsqOperator<double> op(mesh);
    NodalBuf<double> q;
    q.resize(mesh.num_nodes(), 4);
    for (int j = 0; j < mesh.num_nodes(); ++j)
        for (int c = 0; c < 4; ++c)
            q.at(j)[c] = std::sin((c + 1) * mesh.nodes[j].x[0]) + mesh.nodes[j].x[1] * c;
    NodalBuf<double> g1, g2, h1, h2;
    lsq_gradient(mesh, op, q, g1, par::Exec{1});
    lsq_gradient(mesh, op, q, g2, par::Exec{4});
    REQUIRE(g1.v.size() == g2.v.size());
    for (std::size_t i = 0; i < g1.v.size(); ++i) CHECK(g1.v[i] == g2.v[i]);
    lsq_hessian(mesh, op, g1, h1, par::Exec{1});
    lsq_hessian(mesh, op, g2, h2, par::Exec{4});
    for (std::size_t i = 0; i < h1.v.size(); ++i) CHECK(h1.v[i] == h2.v[i]);
}

TEST_CASE("a short steady solve is bitwise identical across thread counts") {
    auto mesh = build_quad_grid(12, 1.0);
    Euler2D<double> gas;
    Euler2DSteadyExact exact;
    auto sch = SchemeConfig::preset("cfsr4");

    auto run = [&](int threads) {
        Discretization<Euler2D<double>, false> D(mesh, gas, sch, par::Exec{threads});
        D.forcing = forcing_field(mesh, gas, exact, 0.0);
        std::vector<Vec<double, 4>> u(mesh.num_nodes());
        for (int j = 0; j < mesh.num_nodes(); ++j) {
            if (mesh.nodes[j].boundary_depth <= 2) {
                const auto wp =
                    exact.prim<double>(mesh.nodes[j].x[0], mesh.nodes[j].x[1], 0.0);
                u[j] = gas.u_from_w({wp[0], wp[1], wp[2], wp[3]});
            } else {
                u[j] = gas.u_from_w({1.0, 0.15, 0.02, 1.0});
            }
        }
        SolveParams p;
        p.drop = 1e-3;
        p.max_iter = 200;
        solve_steady(D, u, p);
        return u;
    };
    auto u1 = run(1);
    auto u2 = run(2);
    auto u4 = run(4);
    for (int j = 0; j < mesh.num_nodes(); ++j)
        for (int c = 0; c < 4; ++c) {
            CHECK(u1[j][c] == u2[j][c]);
            CHECK(u1[j][c] == u4[j][c]);
        }
}

TEST_SUITE_END();
