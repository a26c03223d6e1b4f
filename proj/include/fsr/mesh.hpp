// Node-centered grids with median-dual metrics.
//
// Nodes carry a boundary-layer depth (0 = on the boundary, 1 = neighbor,
// 2 = neighbor-of-neighbor, 3 = everything further in); solution values at
// depth <= 2 are pinned to the exact solution by the discretization, so
// only depth-3 nodes carry free unknowns.
//
// Dual faces connect edge midpoints to cell centroids (median dual); the
// scaled edge normal is the sum of the one or two face-segment normals and
// is oriented from edge.a to edge.b. Interior dual volumes close exactly:
// the signed normals around an interior node sum to zero.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fsr/errors.hpp"
#include "fsr/qreal.hpp"
#include "fsr/smallmat.hpp"

namespace fsr {

enum class GridFamily { Uniform1D, Quad, RightTri, EquilateralTri, IrregularTri };

template <class Real>
struct MeshT {
    struct Node {
        Vec<Real, 2> x;
        int boundary_depth = 3;
    };
    struct Edge {
        int a = -1, b = -1;
        Vec<Real, 2> midpoint{};
        Vec<Real, 2> normal{}; // scaled: |normal| = dual-face measure, oriented a -> b
    };

    int dim = 2;
    GridFamily family = GridFamily::Quad;
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<Real> volume; // dual control volume per node

    // Node->edge incidence in CSR form, edges listed in ascending index
    // order per node. sign = +1 where the node is edge.a, -1 where edge.b.
    std::vector<int> inc_ptr;
    std::vector<int> inc_edge;
    std::vector<int> inc_nbr;
    std::vector<signed char> inc_sign;

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_edges() const { return static_cast<int>(edges.size()); }

    Real total_volume() const {
        Real s{};
        for (const Real& v : volume) s += v;
        return s;
    }

    /// Effective spacing: mean of sqrt(V_j) in 2D, mean of V_j in 1D.
    Real effective_spacing() const {
        Real s{};
        for (const Real& v : volume) s += (dim == 1) ? v : sqrt(v);
        return s / Real(num_nodes());
    }

    void build_incidence() {
        const int nn = num_nodes();
        inc_ptr.assign(nn + 1, 0);
        for (const Edge& e : edges) {
            ++inc_ptr[e.a + 1];
            ++inc_ptr[e.b + 1];
        }
        for (int i = 0; i < nn; ++i) inc_ptr[i + 1] += inc_ptr[i];
        inc_edge.assign(inc_ptr[nn], 0);
        inc_nbr.assign(inc_ptr[nn], 0);
        inc_sign.assign(inc_ptr[nn], 0);
        std::vector<int> fill(inc_ptr.begin(), inc_ptr.end() - 1);
        for (int e = 0; e < num_edges(); ++e) {
            const Edge& ed = edges[e];
            int pa = fill[ed.a]++;
            inc_edge[pa] = e;
            inc_nbr[pa] = ed.b;
            inc_sign[pa] = +1;
            int pb = fill[ed.b]++;
            inc_edge[pb] = e;
            inc_nbr[pb] = ed.a;
            inc_sign[pb] = -1;
        }
        // Edge indices are emitted in ascending order already (single pass
        // over edges), which fixes the per-node accumulation order.
    }

    /// BFS distance to the boundary node set, capped at 3.
    void assign_depths(const std::vector<char>& on_boundary) {
        const int nn = num_nodes();
        std::vector<int> dist(nn, -1);
        std::vector<int> queue;
        queue.reserve(nn);
        for (int i = 0; i < nn; ++i)
            if (on_boundary[i]) {
                dist[i] = 0;
                queue.push_back(i);
            }
        for (std::size_t q = 0; q < queue.size(); ++q) {
            int j = queue[q];
            for (int p = inc_ptr[j]; p < inc_ptr[j + 1]; ++p) {
                int k = inc_nbr[p];
                if (dist[k] < 0) {
                    dist[k] = dist[j] + 1;
                    queue.push_back(k);
                }
            }
        }
        for (int i = 0; i < nn; ++i) nodes[i].boundary_depth = std::min(dist[i] < 0 ? 3 : dist[i], 3);
    }

    /// Plain-text listing for debugging; format documented in the README.
    void dump(std::ostream& os) const {
        os << "nodes " << num_nodes() << "\n";
        for (int i = 0; i < num_nodes(); ++i)
            os << i << " " << double(nodes[i].x[0]) << " " << double(nodes[i].x[1]) << " "
               << nodes[i].boundary_depth << " " << double(volume[i]) << "\n";
        os << "edges " << num_edges() << "\n";
        for (int e = 0; e < num_edges(); ++e)
            os << e << " " << edges[e].a << " " << edges[e].b << " " << double(edges[e].normal[0])
               << " " << double(edges[e].normal[1]) << "\n";
    }
};

using Mesh = MeshT<double>;

template <class Real>
MeshT<Real> build_uniform_1d(int n, Real x_lo, Real x_hi) {
    if (n < 7) throw StencilTooSmall("1d grid needs at least 7 nodes, got " + std::to_string(n));
    if (!(x_hi > x_lo)) throw InvalidParameter("1d grid bounds must satisfy x_lo < x_hi");
    MeshT<Real> m;
    m.dim = 1;
    m.family = GridFamily::Uniform1D;
    const Real h = (x_hi - x_lo) / Real(n - 1);
    m.nodes.resize(n);
    m.volume.resize(n);
    for (int j = 0; j < n; ++j) {
        m.nodes[j].x = {x_lo + Real(j) * h, Real(0)};
        m.volume[j] = (j == 0 || j == n - 1) ? h / Real(2) : h;
    }
    m.edges.resize(n - 1);
    for (int j = 0; j + 1 < n; ++j) {
        auto& e = m.edges[j];
        e.a = j;
        e.b = j + 1;
        e.midpoint = {(m.nodes[j].x[0] + m.nodes[j + 1].x[0]) / Real(2), Real(0)};
        e.normal = {Real(1), Real(0)};
    }
    m.build_incidence();
    std::vector<char> bnd(n, 0);
    bnd[0] = bnd[n - 1] = 1;
    m.assign_depths(bnd);
    return m;
}

namespace detail {

// Accumulate median-dual metrics from a CCW-ordered cell soup.
template <class Real>
void finish_from_cells(MeshT<Real>& m, const std::vector<std::vector<int>>& cells) {
    const int nn = m.num_nodes();
    m.volume.assign(nn, Real(0));
    std::map<std::pair<int, int>, Vec<Real, 2>> normal_acc;
    std::map<std::pair<int, int>, int> occurrence;

    auto key = [](int p, int q) { return std::make_pair(std::min(p, q), std::max(p, q)); };

    for (const auto& cell : cells) {
        const int nv = static_cast<int>(cell.size());
        Vec<Real, 2> c{};
        for (int v : cell) c += m.nodes[v].x;
        c *= Real(1) / Real(nv);
        for (int s = 0; s < nv; ++s) {
            const int p = cell[s];
            const int q = cell[(s + 1) % nv];
            const int o = cell[(s + nv - 1) % nv];
            const Vec<Real, 2> xp = m.nodes[p].x;
            const Vec<Real, 2> m_pq = Real(0.5) * (xp + m.nodes[q].x);
            const Vec<Real, 2> m_op = Real(0.5) * (xp + m.nodes[o].x);

            // Face segment: edge midpoint -> centroid; normal rotated
            // clockwise points from p toward q for a CCW cell.
            const Vec<Real, 2> d = c - m_pq;
            Vec<Real, 2> nseg = {d[1], -d[0]};
            auto k = key(p, q);
            auto& acc = normal_acc[k];
            if (p < q)
                acc += nseg;
            else
                acc -= nseg;
            occurrence[k] += 1;

            // Corner quadrilateral (p, m_pq, c, m_op), shoelace area.
            const Vec<Real, 2> a0 = xp, a1 = m_pq, a2 = c, a3 = m_op;
            Real area2 = a0[0] * a1[1] - a1[0] * a0[1] + a1[0] * a2[1] - a2[0] * a1[1] +
                         a2[0] * a3[1] - a3[0] * a2[1] + a3[0] * a0[1] - a0[0] * a3[1];
            m.volume[p] += area2 / Real(2);
        }
    }

    m.edges.clear();
    m.edges.reserve(normal_acc.size());
    std::vector<char> on_boundary(nn, 0);
    for (const auto& [k, nrm] : normal_acc) {
        typename MeshT<Real>::Edge e;
        e.a = k.first;
        e.b = k.second;
        e.midpoint = Real(0.5) * (m.nodes[e.a].x + m.nodes[e.b].x);
        e.normal = nrm;
        m.edges.push_back(e);
        if (occurrence.at(k) == 1) {
            on_boundary[k.first] = 1;
            on_boundary[k.second] = 1;
        }
    }
    m.build_incidence();
    m.assign_depths(on_boundary);
    for (const Real& v : m.volume)
        if (!(v > Real(0))) throw InvalidParameter("mesh has a non-positive dual volume");
}

inline double unit_double(std::uint64_t bits) { return double(bits >> 11) * 0x1.0p-53; }

} // namespace detail

/// n x n nodes on [0,1] x [0,aspect]; interior dual volumes are hx*hy.
inline Mesh build_quad_grid(int n, double aspect, double x_lo = 0.0, double x_hi = 1.0,
                            double y_lo = 0.0) {
    if (n < 2) throw StencilTooSmall("quad grid needs at least 2 nodes per side");
    if (!(aspect > 0.0)) throw InvalidParameter("aspect must be positive");
    Mesh m;
    m.dim = 2;
    m.family = GridFamily::Quad;
    const double lx = x_hi - x_lo;
    const double hx = lx / (n - 1);
    const double hy = aspect * lx / (n - 1);
    m.nodes.resize(std::size_t(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m.nodes[std::size_t(j) * n + i].x = {x_lo + i * hx, y_lo + j * hy};
    std::vector<std::vector<int>> cells;
    cells.reserve(std::size_t(n - 1) * (n - 1));
    for (int j = 0; j + 1 < n; ++j)
        for (int i = 0; i + 1 < n; ++i) {
            int v00 = j * n + i, v10 = j * n + i + 1, v11 = (j + 1) * n + i + 1, v01 = (j + 1) * n + i;
            cells.push_back({v00, v10, v11, v01});
        }
    detail::finish_from_cells(m, cells);
    return m;
}

enum class TriVariant { Right, Equilateral, Irregular };

inline TriVariant tri_variant_from_string(const std::string& s) {
    if (s == "right") return TriVariant::Right;
    if (s == "equilateral") return TriVariant::Equilateral;
    if (s == "irregular") return TriVariant::Irregular;
    throw InvalidParameter("unknown triangle variant '" + s + "' (right|equilateral|irregular)");
}

/// Triangular families derived from an n x n quad grid on the unit square.
/// right: fixed BL->TR diagonal. equilateral: odd rows shifted left by hx/2
/// with strip-alternating diagonals. irregular: seeded random diagonals plus
/// interior-node perturbation within a disk of radius 0.25*h.
inline Mesh build_tri_grid(int n, TriVariant variant, std::uint64_t seed = 0) {
    if (n < 2) throw StencilTooSmall("tri grid needs at least 2 nodes per side");
    Mesh m;
    m.dim = 2;
    m.family = variant == TriVariant::Right       ? GridFamily::RightTri
               : variant == TriVariant::Equilateral ? GridFamily::EquilateralTri
                                                    : GridFamily::IrregularTri;
    const double h = 1.0 / (n - 1);
    m.nodes.resize(std::size_t(n) * n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) m.nodes[std::size_t(j) * n + i].x = {i * h, j * h};

    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> cells;
    cells.reserve(2 * std::size_t(n - 1) * (n - 1));
    for (int j = 0; j + 1 < n; ++j)
        for (int i = 0; i + 1 < n; ++i) {
            int v00 = j * n + i, v10 = j * n + i + 1, v11 = (j + 1) * n + i + 1, v01 = (j + 1) * n + i;
            bool main_diag = true; // v00 -- v11
            if (variant == TriVariant::Equilateral) main_diag = (j % 2 == 0);
            if (variant == TriVariant::Irregular) main_diag = (rng() & 1u) == 0;
            if (main_diag) {
                cells.push_back({v00, v10, v11});
                cells.push_back({v00, v11, v01});
            } else {
                cells.push_back({v00, v10, v01});
                cells.push_back({v10, v11, v01});
            }
        }

    if (variant == TriVariant::Equilateral) {
        for (int j = 1; j < n; j += 2)
            for (int i = 0; i < n; ++i) m.nodes[std::size_t(j) * n + i].x[0] -= 0.5 * h;
    }
    if (variant == TriVariant::Irregular) {
        for (int j = 1; j + 1 < n; ++j)
            for (int i = 1; i + 1 < n; ++i) {
                const double u = detail::unit_double(rng());
                const double v = detail::unit_double(rng());
                const double r = 0.25 * h * std::sqrt(u);
                const double phi = 2.0 * 3.14159265358979323846 * v;
                auto& x = m.nodes[std::size_t(j) * n + i].x;
                x[0] += r * std::cos(phi);
                x[1] += r * std::sin(phi);
            }
    }
    detail::finish_from_cells(m, cells);
    return m;
}

} // namespace fsr
