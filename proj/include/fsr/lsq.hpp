// Unweighted linear least-squares derivatives over first-neighbor stencils.
//
// The nodal gradient solves the normal equations min sum_k |q_k - q_j -
// g.(x_k - x_j)|^2. Second derivatives come from a successive application
// of the same operator to the gradient components, symmetrized; on a
// uniform 1D grid this is the wide-stencil 2h-Laplacian
// (u_{j+2} - 2 u_j + u_{j-2}) / (2h)^2, which the high-order schemes rely
// on (the compact three-point second difference must not be substituted).
#pragma once

#include <vector>

#include "fsr/errors.hpp"
#include "fsr/mesh.hpp"
#include "fsr/parallel.hpp"

namespace fsr {

/// Nodal multi-variable buffer: values [node*nv + c].
template <class Real>
struct NodalBuf {
    int nv = 0;
    std::vector<Real> v;
    void resize(int nn, int nvars) {
        nv = nvars;
        v.assign(std::size_t(nn) * nvars, Real(0));
    }
    Real* at(int node) { return v.data() + std::size_t(node) * nv; }
    const Real* at(int node) const { return v.data() + std::size_t(node) * nv; }
};

/// Precomputed per-node inverse LSQ normal matrices for a mesh.
template <class Real>
struct LsqOperator {
    int dim = 1;
    // 1D: [n] = 1/sum(dx^2). 2D: [3n] = inverse symmetric (ixx, ixy, iyy).
    std::vector<Real> inv;

    explicit LsqOperator(const MeshT<Real>& m) : dim(m.dim) {
        const int nn = m.num_nodes();
        if (dim == 1) {
            inv.resize(nn);
            for (int j = 0; j < nn; ++j) {
                Real sxx{};
                for (int p = m.inc_ptr[j]; p < m.inc_ptr[j + 1]; ++p) {
                    const Real dx = m.nodes[m.inc_nbr[p]].x[0] - m.nodes[j].x[0];
                    sxx += dx * dx;
                }
                if (!(sxx > Real(0))) throw DegenerateStencil(j);
                inv[j] = Real(1) / sxx;
            }
        } else {
            inv.resize(std::size_t(nn) * 3);
            for (int j = 0; j < nn; ++j) {
                Real sxx{}, sxy{}, syy{};
                for (int p = m.inc_ptr[j]; p < m.inc_ptr[j + 1]; ++p) {
                    const auto d = m.nodes[m.inc_nbr[p]].x - m.nodes[j].x;
                    sxx += d[0] * d[0];
                    sxy += d[0] * d[1];
                    syy += d[1] * d[1];
                }
                const Real det = sxx * syy - sxy * sxy;
                const Real tr = sxx + syy;
                if (!(det > Real(1e-14) * tr * tr)) throw DegenerateStencil(j);
                inv[j * 3 + 0] = syy / det;
                inv[j * 3 + 1] = -sxy / det;
                inv[j * 3 + 2] = sxx / det;
            }
        }
    }
};

/// Gradient of an nv-variable field: grad[(node*nv + c)*dim + d].
template <class Real>
void lsq_gradient(const MeshT<Real>& m, const LsqOperator<Real>& op, const NodalBuf<Real>& q,
                  NodalBuf<Real>& grad, const par::Exec& ex) {
    const int nv = q.nv;
    grad.resize(m.num_nodes(), nv * m.dim);
    if (m.dim == 1) {
        par::for_each(m.num_nodes(), ex, [&](std::int64_t j) {
            const Real* qj = q.at(int(j));
            Real* g = grad.at(int(j));
            for (int c = 0; c < nv; ++c) {
                Real b{};
                for (int p = m.inc_ptr[j]; p < m.inc_ptr[j + 1]; ++p) {
                    const int k = m.inc_nbr[p];
                    const Real dx = m.nodes[k].x[0] - m.nodes[j].x[0];
                    b += dx * (q.at(k)[c] - qj[c]);
                }
                g[c] = op.inv[j] * b;
            }
        });
    } else {
        par::for_each(m.num_nodes(), ex, [&](std::int64_t j) {
            const Real* qj = q.at(int(j));
            Real* g = grad.at(int(j));
            const Real ixx = op.inv[j * 3 + 0], ixy = op.inv[j * 3 + 1], iyy = op.inv[j * 3 + 2];
            for (int c = 0; c < nv; ++c) {
                Real bx{}, by{};
                for (int p = m.inc_ptr[j]; p < m.inc_ptr[j + 1]; ++p) {
                    const int k = m.inc_nbr[p];
                    const auto d = m.nodes[k].x - m.nodes[j].x;
                    const Real dq = q.at(k)[c] - qj[c];
                    bx += d[0] * dq;
                    by += d[1] * dq;
                }
                g[c * 2 + 0] = ixx * bx + ixy * by;
                g[c * 2 + 1] = ixy * bx + iyy * by;
            }
        });
    }
}

/// Symmetrized second derivatives from a gradient field.
/// 1D: hess[node*nv + c] = d2/dx2. 2D: hess[(node*nv + c)*3 + {xx,xy,yy}].
template <class Real>
void lsq_hessian(const MeshT<Real>& m, const LsqOperator<Real>& op, const NodalBuf<Real>& grad,
                 NodalBuf<Real>& hess, const par::Exec& ex) {
    const int nv = grad.nv / m.dim;
    hess.resize(m.num_nodes(), nv * (m.dim == 1 ? 1 : 3));
    if (m.dim == 1) {
        par::for_each(m.num_nodes(), ex, [&](std::int64_t j) {
            const Real* gj = grad.at(int(j));
            Real* h = hess.at(int(j));
            for (int c = 0; c < nv; ++c) {
                Real b{};
                for (int p = m.inc_ptr[j]; p < m.inc_ptr[j + 1]; ++p) {
                    const int k = m.inc_nbr[p];
                    const Real dx = m.nodes[k].x[0] - m.nodes[j].x[0];
                    b += dx * (grad.at(k)[c] - gj[c]);
                }
                h[c] = op.inv[j] * b;
            }
        });
    } else {
        par::for_each(m.num_nodes(), ex, [&](std::int64_t j) {
            const Real* gj = grad.at(int(j));
            Real* h = hess.at(int(j));
            const Real ixx = op.inv[j * 3 + 0], ixy = op.inv[j * 3 + 1], iyy = op.inv[j * 3 + 2];
            for (int c = 0; c < nv; ++c) {
                Real bxx{}, bxy{}, byx{}, byy{};
                for (int p = m.inc_ptr[j]; p < m.inc_ptr[j + 1]; ++p) {
                    const int k = m.inc_nbr[p];
                    const auto d = m.nodes[k].x - m.nodes[j].x;
                    const Real dgx = grad.at(k)[c * 2 + 0] - gj[c * 2 + 0];
                    const Real dgy = grad.at(k)[c * 2 + 1] - gj[c * 2 + 1];
                    bxx += d[0] * dgx;
                    bxy += d[1] * dgx;
                    byx += d[0] * dgy;
                    byy += d[1] * dgy;
                }
                const Real gxx = ixx * bxx + ixy * bxy;
                const Real gxy = ixy * bxx + iyy * bxy;
                const Real gyx = ixx * byx + ixy * byy;
                const Real gyy = ixy * byx + iyy * byy;
                h[c * 3 + 0] = gxx;
                h[c * 3 + 1] = (gxy + gyx) / Real(2);
                h[c * 3 + 2] = gyy;
            }
        });
    }
}

} // namespace fsr
