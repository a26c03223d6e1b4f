// Perfect-gas Euler equations in 1D/2D, node state machinery for the
// reconstruction schemes: conversions between conservative u, primitive
// w = (rho, v, p) and the parameter vector z = (sqrt(rho), sqrt(rho) v,
// sqrt(rho) H) in which all flux components are exactly quadratic;
// directional flux Jacobians and Hessian contractions in both w and z;
// Roe-averaged dissipation matrix.
//
// Component layout: [0] = density slot, [1..SDIM] = velocity slots,
// [SDIM+1] = pressure/energy/enthalpy slot.
#pragma once

#include <array>
#include <cmath>

#include "fsr/errors.hpp"
#include "fsr/qreal.hpp"
#include "fsr/smallmat.hpp"

namespace fsr {

template <class R, int SDIM>
struct EulerGas {
    using Real = R;
    static constexpr int DIM = SDIM;
    static constexpr int M = SDIM + 2;
    static constexpr int IE = SDIM + 1;
    static constexpr bool euler = true;

    Real gamma = Real(1.4);
    Real entropy_fix_eps = Real(0); // Harten floor scale; 0 disables the fix

    using V = Vec<Real, M>;
    using Mt = Mat<Real, M>;
    using N = Vec<Real, 2>;

    bool admissible_w(const V& w) const { return w[0] > Real(0) && w[IE] > Real(0); }
    void require_admissible(const V& w) const {
        if (!admissible_w(w)) throw InadmissibleState("non-positive density or pressure");
    }

    Real q2(const V& w) const {
        Real s{};
        for (int d = 0; d < SDIM; ++d) s += w[1 + d] * w[1 + d];
        return s;
    }
    Real enthalpy(const V& w) const {
        return gamma * w[IE] / ((gamma - Real(1)) * w[0]) + q2(w) / Real(2);
    }

    V u_from_w(const V& w) const {
        V u;
        u[0] = w[0];
        for (int d = 0; d < SDIM; ++d) u[1 + d] = w[0] * w[1 + d];
        u[IE] = w[IE] / (gamma - Real(1)) + w[0] * q2(w) / Real(2);
        return u;
    }
    V w_from_u(const V& u) const {
        if (!(u[0] > Real(0))) throw InadmissibleState("non-positive density");
        V w;
        w[0] = u[0];
        Real k{};
        for (int d = 0; d < SDIM; ++d) {
            w[1 + d] = u[1 + d] / u[0];
            k += w[1 + d] * w[1 + d];
        }
        w[IE] = (gamma - Real(1)) * (u[IE] - u[0] * k / Real(2));
        if (!(w[IE] > Real(0))) throw InadmissibleState("non-positive pressure");
        return w;
    }
    V z_from_w(const V& w) const {
        require_admissible(w);
        V z;
        z[0] = sqrt(w[0]);
        for (int d = 0; d < SDIM; ++d) z[1 + d] = z[0] * w[1 + d];
        z[IE] = z[0] * enthalpy(w);
        return z;
    }
    V w_from_z(const V& z) const {
        if (!(z[0] > Real(0))) throw InadmissibleState("non-positive sqrt-density");
        V w;
        w[0] = z[0] * z[0];
        Real zt2{};
        for (int d = 0; d < SDIM; ++d) {
            w[1 + d] = z[1 + d] / z[0];
            zt2 += z[1 + d] * z[1 + d];
        }
        w[IE] = (gamma - Real(1)) / gamma * (z[0] * z[IE] - zt2 / Real(2));
        if (!(w[IE] > Real(0))) throw InadmissibleState("non-positive pressure");
        return w;
    }

    Real vn(const V& w, const N& n) const {
        Real s{};
        for (int d = 0; d < SDIM; ++d) s += w[1 + d] * n[d];
        return s;
    }

    V flux_w(const V& w, const N& n) const {
        const Real un = vn(w, n);
        V f;
        f[0] = w[0] * un;
        for (int d = 0; d < SDIM; ++d) f[1 + d] = w[0] * un * w[1 + d] + w[IE] * n[d];
        f[IE] = w[0] * un * enthalpy(w);
        return f;
    }

    /// One column of the flux tensor F (direction d), on a generic scalar
    /// type so the forcing can differentiate it with a complex step.
    template <class T>
    std::array<T, M> flux_tensor_col(const std::array<T, M>& w, int d) const {
        const T g = T(double(gamma));
        T k{};
        for (int i = 0; i < SDIM; ++i) k += w[1 + i] * w[1 + i];
        const T rhoH = g * w[IE] / (g - T(1)) + w[0] * k / T(2);
        const T un = w[1 + d];
        std::array<T, M> f{};
        f[0] = w[0] * un;
        for (int i = 0; i < SDIM; ++i) f[1 + i] = w[0] * un * w[1 + i];
        f[1 + d] += w[IE];
        f[IE] = un * rhoH;
        return f;
    }

    Mt jac_w(const V& w, const N& n) const {
        const Real un = vn(w, n);
        const Real H = enthalpy(w);
        Mt a;
        a(0, 0) = un;
        for (int j = 0; j < SDIM; ++j) a(0, 1 + j) = w[0] * n[j];
        a(0, IE) = Real(0);
        for (int i = 0; i < SDIM; ++i) {
            a(1 + i, 0) = un * w[1 + i];
            for (int j = 0; j < SDIM; ++j)
                a(1 + i, 1 + j) = w[0] * ((i == j ? un : Real(0)) + w[1 + i] * n[j]);
            a(1 + i, IE) = n[i];
        }
        a(IE, 0) = un * q2(w) / Real(2);
        for (int j = 0; j < SDIM; ++j) a(IE, 1 + j) = w[0] * (H * n[j] + un * w[1 + j]);
        a(IE, IE) = gamma * un / (gamma - Real(1));
        return a;
    }

    /// (d^2 f / d w^2) . dw : directional derivative of jac_w along dw.
    Mt hc_w(const V& w, const V& dw, const N& n) const {
        const Real un = vn(w, n);
        const Real dun = vn(dw, n);
        Real vdv{};
        for (int d = 0; d < SDIM; ++d) vdv += w[1 + d] * dw[1 + d];
        const Real drhoH =
            gamma * dw[IE] / (gamma - Real(1)) + dw[0] * q2(w) / Real(2) + w[0] * vdv;
        const Real drhoun = dw[0] * un + w[0] * dun;
        Mt a;
        a(0, 0) = dun;
        for (int j = 0; j < SDIM; ++j) a(0, 1 + j) = dw[0] * n[j];
        a(0, IE) = Real(0);
        for (int i = 0; i < SDIM; ++i) {
            a(1 + i, 0) = dun * w[1 + i] + un * dw[1 + i];
            for (int j = 0; j < SDIM; ++j)
                a(1 + i, 1 + j) = dw[0] * ((i == j ? un : Real(0)) + w[1 + i] * n[j]) +
                                  w[0] * ((i == j ? dun : Real(0)) + dw[1 + i] * n[j]);
            a(1 + i, IE) = Real(0);
        }
        a(IE, 0) = dun * q2(w) / Real(2) + un * vdv;
        for (int j = 0; j < SDIM; ++j)
            a(IE, 1 + j) = drhoH * n[j] + drhoun * w[1 + j] + w[0] * un * dw[1 + j];
        a(IE, IE) = gamma * dun / (gamma - Real(1));
        return a;
    }

    Real zn(const V& z, const N& n) const {
        Real s{};
        for (int d = 0; d < SDIM; ++d) s += z[1 + d] * n[d];
        return s;
    }

    V flux_z(const V& z, const N& n) const {
        const Real zn_ = zn(z, n);
        Real zt2{};
        for (int d = 0; d < SDIM; ++d) zt2 += z[1 + d] * z[1 + d];
        const Real p = (gamma - Real(1)) / gamma * (z[0] * z[IE] - zt2 / Real(2));
        V f;
        f[0] = zn_ * z[0];
        for (int d = 0; d < SDIM; ++d) f[1 + d] = zn_ * z[1 + d] + p * n[d];
        f[IE] = zn_ * z[IE];
        return f;
    }

    Mt jac_z(const V& z, const N& n) const {
        const Real g1g = (gamma - Real(1)) / gamma;
        const Real zn_ = zn(z, n);
        Mt a;
        a(0, 0) = zn_;
        for (int j = 0; j < SDIM; ++j) a(0, 1 + j) = z[0] * n[j];
        a(0, IE) = Real(0);
        for (int i = 0; i < SDIM; ++i) {
            a(1 + i, 0) = g1g * z[IE] * n[i];
            for (int j = 0; j < SDIM; ++j)
                a(1 + i, 1 + j) =
                    (i == j ? zn_ : Real(0)) + z[1 + i] * n[j] - g1g * n[i] * z[1 + j];
            a(1 + i, IE) = g1g * z[0] * n[i];
        }
        a(IE, 0) = Real(0);
        for (int j = 0; j < SDIM; ++j) a(IE, 1 + j) = z[IE] * n[j];
        a(IE, IE) = zn_;
        return a;
    }

    /// (d^2 f / d z^2) . dz is constant in z: the flux is exactly quadratic
    /// in the parameter vector, so it equals jac_z evaluated at dz.
    Mt hc_z(const V& dz, const N& n) const { return jac_z(dz, n); }

    /// du/dz, used for the dissipation jump when reconstructing in z.
    Mt du_dz(const V& z) const {
        Mt a;
        a(0, 0) = Real(2) * z[0];
        for (int j = 0; j < SDIM; ++j) a(0, 1 + j) = Real(0);
        a(0, IE) = Real(0);
        for (int i = 0; i < SDIM; ++i) {
            a(1 + i, 0) = z[1 + i];
            for (int j = 0; j < SDIM; ++j) a(1 + i, 1 + j) = (i == j) ? z[0] : Real(0);
            a(1 + i, IE) = Real(0);
        }
        a(IE, 0) = z[IE] / gamma;
        for (int j = 0; j < SDIM; ++j) a(IE, 1 + j) = (gamma - Real(1)) * z[1 + j] / gamma;
        a(IE, IE) = z[0] / gamma;
        return a;
    }

    struct RoeAvg {
        std::array<Real, SDIM> v;
        Real H, a, un;
    };

    RoeAvg roe_average(const V& wj, const V& wk, const N& n) const {
        require_admissible(wj);
        require_admissible(wk);
        const Real rj = sqrt(wj[0]), rk = sqrt(wk[0]);
        const Real wsum = rj + rk;
        RoeAvg r;
        Real k{};
        for (int d = 0; d < SDIM; ++d) {
            r.v[d] = (rj * wj[1 + d] + rk * wk[1 + d]) / wsum;
            k += r.v[d] * r.v[d];
        }
        r.H = (rj * enthalpy(wj) + rk * enthalpy(wk)) / wsum;
        const Real a2 = (gamma - Real(1)) * (r.H - k / Real(2));
        if (!(a2 > Real(0))) throw RoeFailure("Roe average has non-positive sound speed");
        r.a = sqrt(a2);
        r.un = Real(0);
        for (int d = 0; d < SDIM; ++d) r.un += r.v[d] * n[d];
        return r;
    }

    Real fix_eigenvalue(Real lam, Real scale) const {
        Real al = abs(lam);
        if (entropy_fix_eps > Real(0)) {
            const Real delta = entropy_fix_eps * scale;
            if (al < delta) al = (lam * lam + delta * delta) / (Real(2) * delta);
        }
        return al;
    }

    /// Right eigenvectors, eigenvalues and left eigenvectors of the Roe-
    /// averaged directional Jacobian: A = R diag(lam) L with A du = df.
    void roe_eigensystem(const RoeAvg& r, const N& n, Mt& Rm, V& lam, Mt& Lm) const {
        const Real a = r.a;
        Real k{};
        for (int d = 0; d < SDIM; ++d) k += r.v[d] * r.v[d];
        lam[0] = r.un - a;
        lam[1] = r.un;
        lam[2] = r.un + a;
        // column 0: u_n - a acoustic, 1: entropy, 2: u_n + a acoustic
        Rm(0, 0) = Real(1);
        Rm(0, 1) = Real(1);
        Rm(0, 2) = Real(1);
        for (int d = 0; d < SDIM; ++d) {
            Rm(1 + d, 0) = r.v[d] - a * n[d];
            Rm(1 + d, 1) = r.v[d];
            Rm(1 + d, 2) = r.v[d] + a * n[d];
        }
        Rm(IE, 0) = r.H - a * r.un;
        Rm(IE, 1) = k / Real(2);
        Rm(IE, 2) = r.H + a * r.un;

        const Real b1 = (gamma - Real(1)) / (a * a);
        const Real b2 = b1 * k / Real(2);
        Lm(0, 0) = (b2 + r.un / a) / Real(2);
        Lm(1, 0) = Real(1) - b2;
        Lm(2, 0) = (b2 - r.un / a) / Real(2);
        for (int d = 0; d < SDIM; ++d) {
            Lm(0, 1 + d) = (-b1 * r.v[d] - n[d] / a) / Real(2);
            Lm(1, 1 + d) = b1 * r.v[d];
            Lm(2, 1 + d) = (-b1 * r.v[d] + n[d] / a) / Real(2);
        }
        Lm(0, IE) = b1 / Real(2);
        Lm(1, IE) = -b1;
        Lm(2, IE) = b1 / Real(2);

        if constexpr (SDIM == 2) {
            // shear wave, lambda = u_n
            lam[3] = r.un;
            const Real lx = -n[1], ly = n[0];
            const Real ul = r.v[0] * lx + r.v[1] * ly;
            Rm(0, 3) = Real(0);
            Rm(1, 3) = lx;
            Rm(2, 3) = ly;
            Rm(3, 3) = ul;
            Lm(3, 0) = -ul;
            Lm(3, 1) = lx;
            Lm(3, 2) = ly;
            Lm(3, 3) = Real(0);
        }
    }

    Mt roe_abs_matrix(const V& wj, const V& wk, const N& n) const {
        const RoeAvg r = roe_average(wj, wk, n);
        Mt Rm, Lm;
        V lam;
        roe_eigensystem(r, n, Rm, lam, Lm);
        const Real scale = abs(r.un) + r.a;
        Mt d{};
        for (int i = 0; i < M; ++i)
            for (int j = 0; j < M; ++j) {
                Real s{};
                for (int w = 0; w < M; ++w)
                    s += Rm(i, w) * fix_eigenvalue(lam[w], scale) * Lm(w, j);
                d(i, j) = s;
            }
        return d;
    }

    /// out = |A_roe| du via wave decomposition (hot path of the edge loop).
    void roe_apply_abs(const V& wj, const V& wk, const N& n, const V& du, V& out) const {
        const RoeAvg r = roe_average(wj, wk, n);
        Mt Rm, Lm;
        V lam;
        roe_eigensystem(r, n, Rm, lam, Lm);
        const Real scale = abs(r.un) + r.a;
        V alpha;
        for (int w = 0; w < M; ++w) {
            Real s{};
            for (int j = 0; j < M; ++j) s += Lm(w, j) * du[j];
            alpha[w] = fix_eigenvalue(lam[w], scale) * s;
        }
        for (int i = 0; i < M; ++i) {
            Real s{};
            for (int w = 0; w < M; ++w) s += Rm(i, w) * alpha[w];
            out[i] = s;
        }
    }

    Real max_wave(const V& wj, const V& wk, const N& n) const {
        const RoeAvg r = roe_average(wj, wk, n);
        return abs(r.un) + r.a;
    }
};

template <class R>
using Euler1D = EulerGas<R, 1>;
template <class R>
using Euler2D = EulerGas<R, 2>;

/// Spec-level variable-set tags and the generic conversion entry point.
enum class VarSet { Conservative, Primitive, Parameter };

template <class Model>
typename Model::V convert(const Model& m, const typename Model::V& s, VarSet from, VarSet to) {
    using V = typename Model::V;
    V w;
    switch (from) {
    case VarSet::Conservative: w = m.w_from_u(s); break;
    case VarSet::Primitive: w = s; break;
    case VarSet::Parameter: w = m.w_from_z(s); break;
    }
    if constexpr (Model::euler) {
        if (!m.admissible_w(w)) throw InadmissibleState("inadmissible state in convert");
    }
    switch (to) {
    case VarSet::Conservative: return m.u_from_w(w);
    case VarSet::Primitive: return w;
    case VarSet::Parameter: return m.z_from_w(w);
    }
    return w;
}

/// Dissipation matrix D_n = |df/du| at the Roe average of the two states;
/// `enabled = false` is the zero-dissipation switch.
template <class Model>
typename Model::Mt roe_dissipation(const Model& m, const typename Model::V& wj,
                                   const typename Model::V& wk,
                                   const Vec<typename Model::Real, 2>& n, bool enabled = true) {
    if (!enabled) return typename Model::Mt{};
    return m.roe_abs_matrix(wj, wk, n);
}

/// Conservative-variable jump for the dissipation term when the solution
/// is reconstructed in the parameter vector:
///   du = 1/2 [ (du/dz)_j + (du/dz)_k ] (z_R - z_L),
/// which, du/dz being linear in z, equals du/dz at the arithmetic average
/// of z_j and z_k. Exact for quadratic u(z) up to the j,k vs L,R
/// evaluation point (an O(h^2) relative difference).
template <class Model>
typename Model::V z_jump_to_u_jump(const Model& m, const typename Model::V& zj,
                                   const typename Model::V& zk, const typename Model::V& zL,
                                   const typename Model::V& zR) {
    using Real = typename Model::Real;
    auto zbar = Real(0.5) * (zj + zk);
    return m.du_dz(zbar) * (zR - zL);
}

} // namespace fsr
