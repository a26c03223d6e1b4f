// Error norms, observed-order fitting and the truncation-error probe.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "fsr/discretization.hpp"
#include "fsr/mesh.hpp"

namespace fsr {

enum class ErrNorm { Linf, L1 };

/// Norm of a per-node scalar error sample (Linf: max, L1: mean).
template <class Real>
double error_norm(const std::vector<Real>& err, ErrNorm norm) {
    double acc = 0.0;
    for (const Real& e : err) {
        const double a = std::abs(double(e));
        if (norm == ErrNorm::Linf)
            acc = std::max(acc, a);
        else
            acc += a;
    }
    if (norm == ErrNorm::L1 && !err.empty()) acc /= double(err.size());
    return acc;
}

/// Solution error against an exact nodal field. Scalar laws use the
/// solution itself; Euler cases use the density component.
template <class Real, int M>
double solution_error(const std::vector<Vec<Real, M>>& u, const std::vector<Vec<Real, M>>& u_exact,
                      ErrNorm norm) {
    std::vector<Real> err(u.size());
    for (std::size_t j = 0; j < u.size(); ++j) err[j] = u[j][0] - u_exact[j][0];
    return error_norm(err, norm);
}

struct ConvRow {
    int grid = 0;
    double h = 0.0;
    double error = 0.0;
    double observed_order = std::nan(""); // vs previous row
    long iterations = 0;
    double wall_seconds = 0.0;
};

struct ConvergenceReport {
    std::vector<ConvRow> rows;
    double final_order() const {
        return rows.size() >= 2 ? rows.back().observed_order : std::nan("");
    }
};

/// Pairwise observed orders p_i = log(e_i/e_{i+1}) / log(h_i/h_{i+1}).
inline ConvergenceReport convergence_order(std::vector<ConvRow> rows) {
    if (rows.size() < 2) throw InvalidSeries("need at least two grids");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!(rows[i].error > 0.0)) throw InvalidSeries("errors must be positive");
        if (i > 0 && !(rows[i].h < rows[i - 1].h))
            throw InvalidSeries("h must be strictly decreasing");
    }
    for (std::size_t i = 1; i < rows.size(); ++i)
        rows[i].observed_order = std::log(rows[i - 1].error / rows[i].error) /
                                 std::log(rows[i - 1].h / rows[i].h);
    ConvergenceReport rep;
    rep.rows = std::move(rows);
    return rep;
}

/// Truncation-error probe: inject the exact nodal solution into the
/// residual (forcing included, nothing solved) and take the interior Linf
/// over nodes of boundary_depth >= 3, where the formal order is clean.
template <class Disc>
double te_interior_linf(Disc& D, const typename Disc::State& u_exact) {
    typename Disc::State res;
    D.residual(u_exact, res, /*mask=*/false, /*with_forcing=*/true);
    double linf = 0.0;
    const auto& mesh = D.mesh();
    for (int j = 0; j < mesh.num_nodes(); ++j) {
        if (mesh.nodes[j].boundary_depth < 3) continue;
        for (int c = 0; c < Disc::M; ++c) linf = std::max(linf, std::abs(double(res[j][c])));
    }
    return linf;
}

} // namespace fsr
