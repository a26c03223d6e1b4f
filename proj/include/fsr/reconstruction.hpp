// Per-edge reconstruction: the extended kappa-scheme for left/right
// solution states and the four flux-pair families.
//
// Directional operators at an edge (j,k) with midpoint x_m:
//   dhat_j q   = (x_m - x_j) . grad q
//   dhat2_j q  = (x_m - x_j)^t Hess(q) (x_m - x_j)
//   dtil3_j q  = 1/2 { dhat_j q_k - dhat_j q_j } - dhat2_j q_j
// dhat2 carries no 1/2: on a uniform 1D grid it reduces to (h^2/4) u'',
// which is the normalization the kappa3/theta3 coefficients assume.
#pragma once

#include "fsr/lsq.hpp"
#include "fsr/mesh.hpp"
#include "fsr/physics_euler.hpp"
#include "fsr/scheme.hpp"
#include "fsr/smallmat.hpp"

namespace fsr {

/// Reconstruction-variable adapter: evaluates the flux and its derivatives
/// in either the primitive or the parameter-vector space.
template <class Model, bool ZSpace>
struct ReconSpace {
    using Real = typename Model::Real;
    static constexpr int M = Model::M;
    using V = Vec<Real, M>;
    using Mt = Mat<Real, M>;
    using N = Vec<Real, 2>;

    const Model& m;

    V q_from_w(const V& w) const {
        if constexpr (ZSpace)
            return m.z_from_w(w);
        else
            return w;
    }
    V w_from_q(const V& q) const {
        if constexpr (ZSpace)
            return m.w_from_z(q);
        else
            return q;
    }
    V u_from_q(const V& q) const { return m.u_from_w(w_from_q(q)); }
    V flux(const V& q, const N& n) const {
        if constexpr (ZSpace)
            return m.flux_z(q, n);
        else
            return m.flux_w(q, n);
    }
    Mt jac(const V& q, const N& n) const {
        if constexpr (ZSpace)
            return m.jac_z(q, n);
        else
            return m.jac_w(q, n);
    }
    Mt hc(const V& q, const V& dq, const N& n) const {
        if constexpr (ZSpace)
            return m.hc_z(dq, n);
        else
            return m.hc_w(q, dq, n);
    }
    /// Conservative-variable jump used by the dissipation term.
    V dissipation_jump(const V& qj, const V& qk, const V& qL, const V& qR) const {
        if constexpr (ZSpace)
            return z_jump_to_u_jump(m, qj, qk, qL, qR);
        else
            return u_from_q(qR) - u_from_q(qL);
    }
};

template <class Real>
struct EdgeGeom {
    Vec<Real, 2> dj{}, dk{}; // x_m - x_j, x_m - x_k
    Vec<Real, 2> nhat{};
    Real nlen{};

    template <class MeshLike>
    static EdgeGeom from(const MeshLike& m, int e) {
        const auto& ed = m.edges[e];
        EdgeGeom g;
        g.dj = ed.midpoint - m.nodes[ed.a].x;
        g.dk = ed.midpoint - m.nodes[ed.b].x;
        g.nlen = sqrt(dot(ed.normal, ed.normal));
        g.nhat = (Real(1) / g.nlen) * ed.normal;
        return g;
    }
};

/// First directional derivative of all M variables: d . grad.
template <class Real, int M>
Vec<Real, M> dir1(const Real* grad, const Vec<Real, 2>& d, int dim) {
    Vec<Real, M> r;
    if (dim == 1)
        for (int c = 0; c < M; ++c) r[c] = d[0] * grad[c];
    else
        for (int c = 0; c < M; ++c) r[c] = d[0] * grad[c * 2] + d[1] * grad[c * 2 + 1];
    return r;
}

/// Second directional term d^t H d per variable.
template <class Real, int M>
Vec<Real, M> dir2(const Real* hess, const Vec<Real, 2>& d, int dim) {
    Vec<Real, M> r;
    if (dim == 1)
        for (int c = 0; c < M; ++c) r[c] = d[0] * d[0] * hess[c];
    else
        for (int c = 0; c < M; ++c)
            r[c] = d[0] * d[0] * hess[c * 3] + Real(2) * d[0] * d[1] * hess[c * 3 + 1] +
                   d[1] * d[1] * hess[c * 3 + 2];
    return r;
}

/// Directional data of one M-variable field at an edge.
template <class Real, int M>
struct DirData {
    Vec<Real, M> qj, qk;
    Vec<Real, M> dj_qj, dj_qk, dk_qk, dk_qj;
    Vec<Real, M> d2j_qj, d2k_qk; // zero unless hessians supplied
    Vec<Real, M> t3j, t3k;

    static DirData gather(const EdgeGeom<Real>& g, int dim, const Real* qj_p, const Real* qk_p,
                          const Real* gj, const Real* gk, const Real* hj, const Real* hk) {
        DirData d;
        for (int c = 0; c < M; ++c) {
            d.qj[c] = qj_p[c];
            d.qk[c] = qk_p[c];
        }
        d.dj_qj = dir1<Real, M>(gj, g.dj, dim);
        d.dj_qk = dir1<Real, M>(gk, g.dj, dim);
        d.dk_qk = dir1<Real, M>(gk, g.dk, dim);
        d.dk_qj = dir1<Real, M>(gj, g.dk, dim);
        if (hj) d.d2j_qj = dir2<Real, M>(hj, g.dj, dim);
        if (hk) d.d2k_qk = dir2<Real, M>(hk, g.dk, dim);
        d.t3j = Real(0.5) * (d.dj_qk - d.dj_qj) - d.d2j_qj;
        d.t3k = Real(0.5) * (d.dk_qj - d.dk_qk) - d.d2k_qk;
        return d;
    }
};

/// Extended kappa-reconstruction of the left/right states.
template <class Real, int M>
void reconstruct_pair(const DirData<Real, M>& d, Real kappa, Real kappa3, Vec<Real, M>& qL,
                      Vec<Real, M>& qR) {
    const Vec<Real, M> avg = Real(0.5) * (d.qj + d.qk);
    qL = kappa * avg + (Real(1) - kappa) * (d.qj + d.dj_qj) + kappa3 * d.t3j;
    qR = kappa * avg + (Real(1) - kappa) * (d.qk + d.dk_qk) + kappa3 * d.t3k;
}

/// SR2: plain flux of the reconstructed states.
template <class Space, class V, class N>
void flux_pair_sr2(const Space& sp, const V& qL, const V& qR, const N& nhat, V& fL, V& fR) {
    fL = sp.flux(qL, nhat);
    fR = sp.flux(qR, nhat);
}

/// FSR / CFSR: kappa-type combination applied to directional flux data.
template <class Real, int M>
void flux_pair_direct(const DirData<Real, M>& f, Real theta, Real theta3, Vec<Real, M>& fL,
                      Vec<Real, M>& fR) {
    const Vec<Real, M> avg = Real(0.5) * (f.qj + f.qk);
    fL = theta * avg + (Real(1) - theta) * (f.qj + f.dj_qj) + theta3 * f.t3j;
    fR = theta * avg + (Real(1) - theta) * (f.qk + f.dk_qk) + theta3 * f.t3k;
}

/// Chain-rule flux data from solution data:
///   dhat f  = (df/dq) dhat q
///   dhat2 f = [(d2f/dq2) dhat q] dhat q + (df/dq) dhat2 q
template <class Space, class Real, int M>
DirData<Real, M> chain_flux_data(const Space& sp, const DirData<Real, M>& q,
                                 const Vec<Real, 2>& nhat, bool with_hessian) {
    DirData<Real, M> f;
    const auto Jj = sp.jac(q.qj, nhat);
    const auto Jk = sp.jac(q.qk, nhat);
    f.qj = sp.flux(q.qj, nhat);
    f.qk = sp.flux(q.qk, nhat);
    f.dj_qj = Jj * q.dj_qj;
    f.dj_qk = Jk * q.dj_qk;
    f.dk_qk = Jk * q.dk_qk;
    f.dk_qj = Jj * q.dk_qj;
    if (with_hessian) {
        f.d2j_qj = sp.hc(q.qj, q.dj_qj, nhat) * q.dj_qj + Jj * q.d2j_qj;
        f.d2k_qk = sp.hc(q.qk, q.dk_qk, nhat) * q.dk_qk + Jk * q.d2k_qk;
    }
    f.t3j = Real(0.5) * (f.dj_qk - f.dj_qj) - f.d2j_qj;
    f.t3k = Real(0.5) * (f.dk_qj - f.dk_qk) - f.d2k_qk;
    return f;
}

template <class Space, class Real, int M>
void flux_pair_chain(const Space& sp, const DirData<Real, M>& q, const Vec<Real, 2>& nhat,
                     Real theta, Real theta3, Vec<Real, M>& fL, Vec<Real, M>& fR) {
    const auto f = chain_flux_data(sp, q, nhat, theta3 != Real(0));
    flux_pair_direct(f, theta, theta3, fL, fR);
}

/// QFSR: quadratic expansion about the nodal state in the reconstructed
/// solution difference, with the fifth-order extra terms L and Q.
template <class Space, class Real, int M>
void flux_pair_quadratic(const Space& sp, const DirData<Real, M>& q, const Vec<Real, M>& qL,
                         const Vec<Real, M>& qR, const Vec<Real, 2>& nhat, Real theta2, Real a5,
                         Real b5, Real c5, Vec<Real, M>& fL, Vec<Real, M>& fR) {
    const Vec<Real, M> dL = qL - q.qj;
    const Vec<Real, M> dR = qR - q.qk;
    const auto Jj = sp.jac(q.qj, nhat);
    const auto Jk = sp.jac(q.qk, nhat);

    Vec<Real, M> quadL = sp.hc(q.qj, dL, nhat) * dL;
    Vec<Real, M> quadR = sp.hc(q.qk, dR, nhat) * dR;
    Vec<Real, M> linL = dL, linR = dR;
    if (a5 != Real(0)) {
        linL += a5 * q.t3j;
        linR += a5 * q.t3k;
    }
    if (b5 != Real(0)) {
        quadL += b5 * (sp.hc(q.qj, q.d2j_qj, nhat) * q.d2j_qj);
        quadR += b5 * (sp.hc(q.qk, q.d2k_qk, nhat) * q.d2k_qk);
    }
    if (c5 != Real(0)) {
        quadL += c5 * (sp.hc(q.qj, q.dj_qj, nhat) * q.t3j);
        quadR += c5 * (sp.hc(q.qk, q.dk_qk, nhat) * q.t3k);
    }
    fL = sp.flux(q.qj, nhat) + Jj * linL + (theta2 / Real(2)) * quadL;
    fR = sp.flux(q.qk, nhat) + Jk * linR + (theta2 / Real(2)) * quadR;
}

} // namespace fsr
