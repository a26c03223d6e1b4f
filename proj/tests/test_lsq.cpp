#include "doctest.h"

#include <cmath>
#include <vector>

#include "fsr/lsq.hpp"
#include "fsr/mesh.hpp"

using namespace fsr;

namespace {

NodalBuf<double> sample(const Mesh& m, double (*f)(double, double)) {
    NodalBuf<double> q;
    q.resize(m.num_nodes(), 1);
    for (int j = 0; j < m.num_nodes(); ++j)
        q.at(j)[0] = f(m.nodes[j].x[0], m.nodes[j].x[1]);
    return q;
}

// Independent oracle: accumulate the full normal-equation system in long
// double and solve by Gaussian elimination with pivoting.
void dense_gradient(const Mesh& m, const NodalBuf<double>& q, int j, double g[2]) {
    long double a[2][2] = {{0, 0}, {0, 0}};
    long double b[2] = {0, 0};
    for (int p = m.inc_ptr[j]; p < m.inc_ptr[j + 1]; ++p) {
        const int k = m.inc_nbr[p];
        const long double dx = m.nodes[k].x[0] - m.nodes[j].x[0];
        const long double dy = m.nodes[k].x[1] - m.nodes[j].x[1];
        const long double dq = q.at(k)[0] - q.at(j)[0];
        a[0][0] += dx * dx;
        a[0][1] += dx * dy;
        a[1][0] += dy * dx;
        a[1][1] += dy * dy;
        b[0] += dx * dq;
        b[1] += dy * dq;
    }
    int piv = std::abs((double)a[0][0]) >= std::abs((double)a[1][0]) ? 0 : 1;
    int oth = 1 - piv;
    const long double f = a[oth][0] / a[piv][0];
    a[oth][1] -= f * a[piv][1];
    b[oth] -= f * b[piv];
    const long double gy = b[oth] / a[oth][1];
    const long double gx = (b[piv] - a[piv][1] * gy) / a[piv][0];
    g[0] = double(gx);
    g[1] = double(gy);
}

} // namespace

TEST_SUITE_BEGIN("lsq");

TEST_CASE("gradients are exact for linear fields on any mesh") {
    for (auto variant : {TriVariant::Right, TriVariant::Irregular}) {
        auto m = build_tri_grid(16, variant, 7);
        LsqOperator<double> op(m);
        auto q = sample(m, [](double x, double y) { return 3.0 * x + 2.0 * y; });
        NodalBuf<double> g;
        lsq_gradient(m, op, q, g, par::Exec::serial());
        for (int j = 0; j < m.num_nodes(); ++j) {
            CHECK(std::abs(g.at(j)[0] - 3.0) < 1e-12);
            CHECK(std::abs(g.at(j)[1] - 2.0) < 1e-12);
        }
    }
}

TEST_CASE("uniform 1d interior gradient is the central difference") {
    auto m = build_uniform_1d<double>(11, 0.0, 1.0);
    LsqOperator<double> op(m);
    NodalBuf<double> q;
    q.resize(11, 1);
    for (int j = 0; j < 11; ++j) q.at(j)[0] = m.nodes[j].x[0] * m.nodes[j].x[0];
    NodalBuf<double> g;
    lsq_gradient(m, op, q, g, par::Exec::serial());
    CHECK(g.at(5)[0] == doctest::Approx(1.0).epsilon(1e-14)); // x = 0.5
    for (int j = 1; j < 10; ++j) {
        const double cd = (q.at(j + 1)[0] - q.at(j - 1)[0]) / 0.2;
        CHECK(std::abs(g.at(j)[0] - cd) <= 1e-13 * std::max(1.0, std::abs(cd)));
    }
}

TEST_CASE("irregular-grid gradient matches the dense normal-equation oracle") {
    auto m = build_tri_grid(16, TriVariant::Irregular, 1);
    LsqOperator<double> op(m);
    auto q = sample(m, [](double x, double) { return x * x; });
    NodalBuf<double> g;
    lsq_gradient(m, op, q, g, par::Exec::serial());
    for (int j = 0; j < m.num_nodes(); ++j) {
        double ref[2];
        dense_gradient(m, q, j, ref);
        CHECK(std::abs(g.at(j)[0] - ref[0]) < 1e-12);
        CHECK(std::abs(g.at(j)[1] - ref[1]) < 1e-12);
    }
}

TEST_CASE("hessian of a quadratic is exact on uniform 1d") {
    auto m = build_uniform_1d<double>(13, 0.0, 1.2);
    LsqOperator<double> op(m);
    NodalBuf<double> q;
    q.resize(13, 1);
    for (int j = 0; j < 13; ++j) q.at(j)[0] = m.nodes[j].x[0] * m.nodes[j].x[0];
    NodalBuf<double> g, h;
    lsq_gradient(m, op, q, g, par::Exec::serial());
    lsq_hessian(m, op, g, h, par::Exec::serial());
    for (int j = 2; j < 11; ++j)
        CHECK(h.at(j)[0] == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("hessian is the wide 2h-laplacian, not the compact difference") {
    // u = x^4 at x = 0, h = 0.1: (0.0016 - 0 + 0.0016)/0.04 = 0.08,
    // whereas the compact three-point formula would give 0.0002/0.01 = 0.02.
    auto m = build_uniform_1d<double>(7, -0.3, 0.3);
    LsqOperator<double> op(m);
    NodalBuf<double> q;
    q.resize(7, 1);
    for (int j = 0; j < 7; ++j) q.at(j)[0] = std::pow(m.nodes[j].x[0], 4);
    NodalBuf<double> g, h;
    lsq_gradient(m, op, q, g, par::Exec::serial());
    lsq_hessian(m, op, g, h, par::Exec::serial());
    CHECK(h.at(3)[0] == doctest::Approx(0.08).epsilon(1e-12));
    const double compact = (q.at(4)[0] - 2.0 * q.at(3)[0] + q.at(2)[0]) / 0.01;
    CHECK(std::abs(h.at(3)[0] - compact) > 0.05);
}

TEST_CASE("2h-laplacian reduction holds at depth >= 2 for a quartic") {
    auto m = build_uniform_1d<double>(21, 0.0, 1.0);
    LsqOperator<double> op(m);
    NodalBuf<double> q;
    q.resize(21, 1);
    for (int j = 0; j < 21; ++j) q.at(j)[0] = std::pow(m.nodes[j].x[0], 4);
    NodalBuf<double> g, h;
    lsq_gradient(m, op, q, g, par::Exec::serial());
    lsq_hessian(m, op, g, h, par::Exec::serial());
    const double hh = 1.0 / 20.0;
    for (int j = 0; j < 21; ++j) {
        if (m.nodes[j].boundary_depth < 2) continue;
        const double wide =
            (q.at(j + 2)[0] - 2.0 * q.at(j)[0] + q.at(j - 2)[0]) / (4.0 * hh * hh);
        CHECK(std::abs(h.at(j)[0] - wide) <= 1e-13 * std::max(1.0, std::abs(wide)));
    }
}

TEST_CASE("mixed second derivative of xy on a regular quad grid") {
    auto m = build_quad_grid(11, 1.0);
    LsqOperator<double> op(m);
    auto q = sample(m, [](double x, double y) { return x * y; });
    NodalBuf<double> g, h;
    lsq_gradient(m, op, q, g, par::Exec::serial());
    lsq_hessian(m, op, g, h, par::Exec::serial());
    for (int j = 0; j < m.num_nodes(); ++j) {
        if (m.nodes[j].boundary_depth < 2) continue;
        CHECK(h.at(j)[1] == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(std::abs(h.at(j)[0]) < 1e-11);
        CHECK(std::abs(h.at(j)[2]) < 1e-11);
    }
}

TEST_CASE("collinear 2d stencil raises a degenerate-stencil error") {
    Mesh m;
    m.dim = 2;
    m.nodes.resize(3);
    m.nodes[0].x = {0.0, 0.0};
    m.nodes[1].x = {1.0, 0.0};
    m.nodes[2].x = {2.0, 0.0};
    m.volume = {1.0, 1.0, 1.0};
    m.edges.resize(2);
    m.edges[0].a = 0;
    m.edges[0].b = 1;
    m.edges[1].a = 1;
    m.edges[1].b = 2;
    m.build_incidence();
    CHECK_THROWS_AS([&] { LsqOperator<double> op(m); }(), DegenerateStencil);
    try {
        LsqOperator<double> op(m);
        (void)op;
    } catch (const DegenerateStencil& e) {
        CHECK(e.node == 0);
    }
}

TEST_SUITE_END();
