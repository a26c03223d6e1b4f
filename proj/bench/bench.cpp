// Kernel benchmark: serial reference vs OpenMP paths on a 2D Euler case.
// Run: fsr-bench [n-per-side] [repeats]
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "fsr/exact.hpp"
#include "fsr/forcing.hpp"
#include "fsr/physics_euler.hpp"
#include "fsr/solver.hpp"

using namespace fsr;

namespace {

template <class F>
double time_best(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        best = std::min(best, s);
    }
    return best;
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::atoi(argv[1]) : 128;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 5;
    const int nt = par::max_threads();

    auto mesh = build_quad_grid(n, 1.0);
    Euler2D<double> gas;
    Euler2DSteadyExact exact;
    std::vector<Vec<double, 4>> u(mesh.num_nodes()), res;
    for (int j = 0; j < mesh.num_nodes(); ++j) {
        const auto wp = exact.prim<double>(mesh.nodes[j].x[0], mesh.nodes[j].x[1], 0.0);
        u[j] = gas.u_from_w({wp[0], wp[1], wp[2], wp[3]});
    }

    std::printf("%dx%d quad grid, %d nodes, %d edges, %d threads available\n", n, n,
                mesh.num_nodes(), mesh.num_edges(), nt);
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial [ms]", "omp [ms]", "speedup");

    LsqOperator<double> op(mesh);
    NodalBuf<double> q, g1, g2, h1;
    q.resize(mesh.num_nodes(), 4);
    for (int j = 0; j < mesh.num_nodes(); ++j)
        for (int c = 0; c < 4; ++c) q.at(j)[c] = double(u[j][c]);

    const double g_s = time_best(repeats, [&] { lsq_gradient(mesh, op, q, g1, par::Exec{1}); });
    const double g_p = time_best(repeats, [&] { lsq_gradient(mesh, op, q, g2, par::Exec{nt}); });
    std::printf("%-28s %12.3f %12.3f %8.2f\n", "lsq_gradient (4 vars)", 1e3 * g_s, 1e3 * g_p,
                g_s / g_p);

    const double h_s = time_best(repeats, [&] { lsq_hessian(mesh, op, g1, h1, par::Exec{1}); });
    const double h_p = time_best(repeats, [&] { lsq_hessian(mesh, op, g1, h1, par::Exec{nt}); });
    std::printf("%-28s %12.3f %12.3f %8.2f\n", "lsq_hessian (4 vars)", 1e3 * h_s, 1e3 * h_p,
                h_s / h_p);

    for (const char* name : {"yh", "cfsr3", "cfsr5", "qfsr4", "qfsr5z", "fsr5"}) {
        auto sch = SchemeConfig::preset(name);
        auto bench_family = [&](auto z_tag) {
            constexpr bool Z = decltype(z_tag)::value;
            Discretization<Euler2D<double>, Z> D(mesh, gas, sch);
            const double s = time_best(repeats, [&] { D.residual_reference(u, res); });
            D.set_exec(par::Exec{nt});
            const double p = time_best(repeats, [&] { D.residual(u, res); });
            std::printf("%-28s %12.3f %12.3f %8.2f\n",
                        (std::string("residual ") + name).c_str(), 1e3 * s, 1e3 * p, s / p);
        };
        if (sch.recon_var == ReconVar::Parameter)
            bench_family(std::true_type{});
        else
            bench_family(std::false_type{});
    }
    return 0;
}
