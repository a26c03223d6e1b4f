// Edge-based flux-balance residual:
//   Res_j = (1/V_j) sum_k Phi_jk |n_jk| - s_j,
//   Phi_jk = 1/2 [f_L + f_R] - 1/2 D_n [u_R - u_L]
// with D_n the Roe |df/du| of the unreconstructed endpoint states and the
// jump taken between the reconstructed states.
//
// Nodes with boundary_depth <= 2 are Dirichlet-pinned: their residual is
// masked to zero and the solver holds exact values there.
//
// The parallel path buffers per-edge fluxes and gathers them per node in
// ascending edge order; the serial reference accumulates directly in the
// same order, so the two are bit-identical for any thread count.
#pragma once

#include <atomic>
#include <climits>
#include <string>
#include <vector>

#include "fsr/lsq.hpp"
#include "fsr/mesh.hpp"
#include "fsr/parallel.hpp"
#include "fsr/reconstruction.hpp"
#include "fsr/scheme.hpp"

namespace fsr {

/// Numerical flux from already-reconstructed edge states.
template <class Space, class Model, class V, class N>
V numerical_flux(const Space& sp, const Model& model, const V& wj, const V& wk, const V& qj,
                 const V& qk, const V& qL, const V& qR, const V& fL, const V& fR, const N& nhat,
                 bool dissipation) {
    using Real = typename Model::Real;
    V phi = Real(0.5) * (fL + fR);
    if (dissipation) {
        const V du = sp.dissipation_jump(qj, qk, qL, qR);
        V ddu;
        model.roe_apply_abs(wj, wk, nhat, du, ddu);
        phi -= Real(0.5) * ddu;
    }
    return phi;
}

template <class Model, bool ZSpace>
class Discretization {
  public:
    using Real = typename Model::Real;
    static constexpr int M = Model::M;
    using V = Vec<Real, M>;
    using State = std::vector<V>;
    using Space = ReconSpace<Model, ZSpace>;

    Discretization(const MeshT<Real>& mesh, Model model, SchemeConfig sch,
                   par::Exec ex = par::Exec::serial())
        : mesh_(&mesh), model_(std::move(model)), sch_(std::move(sch)), lsq_(mesh), ex_(ex) {
        for (int j = 0; j < mesh.num_nodes(); ++j)
            if (mesh.nodes[j].boundary_depth <= 2) pinned_.push_back(j);
    }

    const MeshT<Real>& mesh() const { return *mesh_; }
    const Model& model() const { return model_; }
    const SchemeConfig& scheme() const { return sch_; }
    const std::vector<int>& pinned_nodes() const { return pinned_; }
    Space space() const { return Space{model_}; }
    void set_exec(par::Exec ex) { ex_ = ex; }
    par::Exec exec() const { return ex_; }

    /// Startup mode for steady solves: the plain first-order Roe flux
    /// (no reconstruction, first-order dissipation jump), used only to
    /// flush the initial transient. The target scheme takes over before
    /// convergence is measured, so the converged state is unaffected.
    void set_robust_jump(bool on) { robust_jump_ = on; }
    bool robust_jump() const { return robust_jump_; }

    /// Per-node forcing s_j; empty disables the source term.
    std::vector<V> forcing;

    void residual(const State& u, State& res, bool mask = true, bool with_forcing = true) {
        prepare(u);
        const int ne = mesh_->num_edges();
        ephi_.resize(ne);
        std::atomic<int> bad{INT_MAX};
        par::for_each(ne, ex_, [&](std::int64_t e) {
            try {
                ephi_[e] = edge_phi(int(e));
            } catch (...) {
                record_min(bad, int(e));
            }
        });
        if (bad.load() != INT_MAX)
            throw InadmissibleState("flux evaluation failed at edge " +
                                    std::to_string(bad.load()));
        res.resize(mesh_->num_nodes());
        const auto* m = mesh_;
        par::for_each(mesh_->num_nodes(), ex_, [&](std::int64_t j) {
            V acc{};
            for (int p = m->inc_ptr[j]; p < m->inc_ptr[j + 1]; ++p) {
                if (m->inc_sign[p] > 0)
                    acc += ephi_[m->inc_edge[p]];
                else
                    acc -= ephi_[m->inc_edge[p]];
            }
            res[j] = finalize(int(j), acc, mask, with_forcing);
        });
    }

    /// Serial reference: one direct loop over edges, no flux buffer.
    void residual_reference(const State& u, State& res, bool mask = true,
                            bool with_forcing = true) {
        prepare(u);
        res.assign(mesh_->num_nodes(), V{});
        for (int e = 0; e < mesh_->num_edges(); ++e) {
            const V phi = edge_phi(e);
            res[mesh_->edges[e].a] += phi;
            res[mesh_->edges[e].b] -= phi;
        }
        for (int j = 0; j < mesh_->num_nodes(); ++j)
            res[j] = finalize(j, res[j], mask, with_forcing);
    }

    /// Volume-weighted sum of the flux part over all nodes; telescopes to
    /// zero (there are no boundary faces in the edge loop).
    V flux_balance_sum(const State& u) {
        State res;
        residual(u, res, /*mask=*/false, /*with_forcing=*/false);
        V s{};
        for (int j = 0; j < mesh_->num_nodes(); ++j) s += mesh_->volume[j] * res[j];
        return s;
    }

    /// Per-node pseudo-time step: cfl * V_j / sum_edges lambda |n|.
    void local_time_step(const State& u, Real cfl, std::vector<Real>& dt) {
        const int nn = mesh_->num_nodes();
        const int ne = mesh_->num_edges();
        w_.resize(nn);
        std::atomic<int> bad{INT_MAX};
        par::for_each(nn, ex_, [&](std::int64_t j) {
            try {
                w_[j] = model_.w_from_u(u[j]);
            } catch (...) {
                record_min(bad, int(j));
            }
        });
        check_nodes(bad);
        elam_.resize(ne);
        par::for_each(ne, ex_, [&](std::int64_t e) {
            const auto g = EdgeGeom<Real>::from(*mesh_, int(e));
            elam_[e] = model_.max_wave(w_[mesh_->edges[e].a], w_[mesh_->edges[e].b], g.nhat) *
                       g.nlen;
        });
        dt.resize(nn);
        const auto* m = mesh_;
        par::for_each(nn, ex_, [&](std::int64_t j) {
            Real s{};
            for (int p = m->inc_ptr[j]; p < m->inc_ptr[j + 1]; ++p) s += elam_[m->inc_edge[p]];
            if (s < Real(1e-12)) s = Real(1e-12);
            dt[j] = cfl * m->volume[j] / s;
        });
    }

  private:
    static void record_min(std::atomic<int>& slot, int idx) {
        int cur = slot.load();
        while (idx < cur && !slot.compare_exchange_weak(cur, idx)) {
        }
    }
    void check_nodes(std::atomic<int>& bad) const {
        if (bad.load() != INT_MAX)
            throw InadmissibleState("inadmissible state at node " + std::to_string(bad.load()));
    }

    void prepare(const State& u) {
        const int nn = mesh_->num_nodes();
        const Space sp{model_};
        w_.resize(nn);
        q_.resize(nn, M);
        std::atomic<int> bad{INT_MAX};
        par::for_each(nn, ex_, [&](std::int64_t j) {
            try {
                w_[j] = model_.w_from_u(u[j]);
                const V qv = sp.q_from_w(w_[j]);
                Real* out = q_.at(int(j));
                for (int c = 0; c < M; ++c) out[c] = qv[c];
            } catch (...) {
                record_min(bad, int(j));
            }
        });
        check_nodes(bad);
        if (robust_jump_) return; // startup flux uses nodal states only
        lsq_gradient(*mesh_, lsq_, q_, gq_, ex_);
        if (sch_.need_solution_hessian()) lsq_hessian(*mesh_, lsq_, gq_, hq_, ex_);
        if (sch_.need_flux_fields()) {
            constexpr int D = Model::DIM;
            ft_.resize(nn, M * D);
            par::for_each(nn, ex_, [&](std::int64_t j) {
                std::array<Real, M> wa;
                for (int c = 0; c < M; ++c) wa[c] = w_[j][c];
                Real* out = ft_.at(int(j));
                for (int d = 0; d < D; ++d) {
                    const auto col = model_.template flux_tensor_col<Real>(wa, d);
                    for (int c = 0; c < M; ++c) out[c * D + d] = col[c];
                }
            });
            lsq_gradient(*mesh_, lsq_, ft_, gft_, ex_);
            if (sch_.need_flux_hessian()) lsq_hessian(*mesh_, lsq_, gft_, hft_, ex_);
        }
    }

    V finalize(int j, V acc, bool mask, bool with_forcing) const {
        if (mask && mesh_->nodes[j].boundary_depth <= 2) return V{};
        acc *= Real(1) / mesh_->volume[j];
        if (with_forcing && !forcing.empty()) acc -= forcing[j];
        return acc;
    }

    /// Directional flux data for the FSR family: nodal flux-tensor
    /// components and their LSQ derivatives projected on the edge normal.
    DirData<Real, M> gather_flux_data(const EdgeGeom<Real>& g, int a, int b) const {
        constexpr int D = Model::DIM;
        const int dim = mesh_->dim;
        const bool hess = sch_.need_flux_hessian();
        DirData<Real, M> f;
        const Real* fa = ft_.at(a);
        const Real* fb = ft_.at(b);
        const Real* ga = gft_.at(a);
        const Real* gb = gft_.at(b);
        for (int c = 0; c < M; ++c) {
            Real fj{}, fk{}, djj{}, djk{}, dkk{}, dkj{}, h2j{}, h2k{};
            for (int d = 0; d < D; ++d) {
                const int v = c * D + d;
                const Real nd = g.nhat[d];
                fj += fa[v] * nd;
                fk += fb[v] * nd;
                if (dim == 1) {
                    djj += g.dj[0] * ga[v] * nd;
                    djk += g.dj[0] * gb[v] * nd;
                    dkk += g.dk[0] * gb[v] * nd;
                    dkj += g.dk[0] * ga[v] * nd;
                    if (hess) {
                        h2j += g.dj[0] * g.dj[0] * hft_.at(a)[v] * nd;
                        h2k += g.dk[0] * g.dk[0] * hft_.at(b)[v] * nd;
                    }
                } else {
                    djj += (g.dj[0] * ga[v * 2] + g.dj[1] * ga[v * 2 + 1]) * nd;
                    djk += (g.dj[0] * gb[v * 2] + g.dj[1] * gb[v * 2 + 1]) * nd;
                    dkk += (g.dk[0] * gb[v * 2] + g.dk[1] * gb[v * 2 + 1]) * nd;
                    dkj += (g.dk[0] * ga[v * 2] + g.dk[1] * ga[v * 2 + 1]) * nd;
                    if (hess) {
                        const Real* ha = hft_.at(a);
                        const Real* hb = hft_.at(b);
                        h2j += (g.dj[0] * g.dj[0] * ha[v * 3] +
                                Real(2) * g.dj[0] * g.dj[1] * ha[v * 3 + 1] +
                                g.dj[1] * g.dj[1] * ha[v * 3 + 2]) *
                               nd;
                        h2k += (g.dk[0] * g.dk[0] * hb[v * 3] +
                                Real(2) * g.dk[0] * g.dk[1] * hb[v * 3 + 1] +
                                g.dk[1] * g.dk[1] * hb[v * 3 + 2]) *
                               nd;
                    }
                }
            }
            f.qj[c] = fj;
            f.qk[c] = fk;
            f.dj_qj[c] = djj;
            f.dj_qk[c] = djk;
            f.dk_qk[c] = dkk;
            f.dk_qj[c] = dkj;
            f.d2j_qj[c] = h2j;
            f.d2k_qk[c] = h2k;
        }
        f.t3j = Real(0.5) * (f.dj_qk - f.dj_qj) - f.d2j_qj;
        f.t3k = Real(0.5) * (f.dk_qj - f.dk_qk) - f.d2k_qk;
        return f;
    }

    V edge_phi(int e) const {
        const Space sp{model_};
        const auto g = EdgeGeom<Real>::from(*mesh_, e);
        const int a = mesh_->edges[e].a;
        const int b = mesh_->edges[e].b;
        if (robust_jump_) {
            V phi = Real(0.5) * (model_.flux_w(w_[a], g.nhat) + model_.flux_w(w_[b], g.nhat));
            if (sch_.dissipation) {
                const V du = model_.u_from_w(w_[b]) - model_.u_from_w(w_[a]);
                V ddu;
                model_.roe_apply_abs(w_[a], w_[b], g.nhat, du, ddu);
                phi -= Real(0.5) * ddu;
            }
            return phi * g.nlen;
        }
        const bool sh = sch_.need_solution_hessian();
        const auto qd = DirData<Real, M>::gather(g, mesh_->dim, q_.at(a), q_.at(b), gq_.at(a),
                                                 gq_.at(b), sh ? hq_.at(a) : nullptr,
                                                 sh ? hq_.at(b) : nullptr);
        V qL, qR;
        reconstruct_pair(qd, Real(sch_.kappa), Real(sch_.kappa3), qL, qR);
        V fL, fR;
        switch (sch_.family) {
        case Family::SR2:
            flux_pair_sr2(sp, qL, qR, g.nhat, fL, fR);
            break;
        case Family::FSR:
            flux_pair_direct(gather_flux_data(g, a, b), Real(sch_.theta), Real(sch_.theta3), fL,
                             fR);
            break;
        case Family::CFSR:
            flux_pair_chain(sp, qd, g.nhat, Real(sch_.theta), Real(sch_.theta3), fL, fR);
            break;
        case Family::QFSR:
            flux_pair_quadratic(sp, qd, qL, qR, g.nhat, Real(sch_.theta2), Real(sch_.aq5),
                                Real(sch_.bq5), Real(sch_.cq5), fL, fR);
            break;
        }
        V phi = numerical_flux(sp, model_, w_[a], w_[b], qd.qj, qd.qk, qL, qR, fL, fR, g.nhat,
                               sch_.dissipation);
        return phi * g.nlen;
    }

    const MeshT<Real>* mesh_;
    Model model_;
    SchemeConfig sch_;
    LsqOperator<Real> lsq_;
    par::Exec ex_;
    bool robust_jump_ = false;
    std::vector<int> pinned_;

    std::vector<V> w_;
    NodalBuf<Real> q_, gq_, hq_, ft_, gft_, hft_;
    std::vector<V> ephi_;
    std::vector<Real> elam_;
};

} // namespace fsr
