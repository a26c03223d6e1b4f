// Scalar conservation laws in one dimension: f = u^2/2 (Burgers),
// f = u^3/3, and linear advection. The three variable sets coincide for
// scalar laws, so conversions are the identity.
#pragma once

#include "fsr/qreal.hpp"
#include "fsr/smallmat.hpp"

namespace fsr {

struct BurgersFlux {
    template <class T>
    T f(T u) const {
        return u * u / T(2);
    }
    template <class T>
    T df(T u) const {
        return u;
    }
    template <class T>
    T d2f(T) const {
        return T(1);
    }
};

struct CubicFlux {
    template <class T>
    T f(T u) const {
        return u * u * u / T(3);
    }
    template <class T>
    T df(T u) const {
        return u * u;
    }
    template <class T>
    T d2f(T u) const {
        return T(2) * u;
    }
};

struct AdvectionFlux {
    double c = 1.0;
    template <class T>
    T f(T u) const {
        return T(c) * u;
    }
    template <class T>
    T df(T) const {
        return T(c);
    }
    template <class T>
    T d2f(T) const {
        return T(0);
    }
};

/// Scalar law wrapper exposing the interface the discretization kernels
/// expect from a model. q (reconstruction variable) = w = u = z.
template <class R, class Flux>
struct ScalarLaw {
    using Real = R;
    static constexpr int M = 1;
    static constexpr int DIM = 1;
    static constexpr bool euler = false;

    Flux fl{};

    using V = Vec<Real, 1>;
    using Mt = Mat<Real, 1>;
    using N = Vec<Real, 2>; // unit normal, [0] used

    bool admissible_w(const V&) const { return true; }
    V u_from_w(const V& w) const { return w; }
    V w_from_u(const V& u) const { return u; }
    V z_from_w(const V& w) const { return w; }
    V w_from_z(const V& z) const { return z; }

    V flux_w(const V& w, const N& n) const { return {n[0] * fl.f(w[0])}; }
    Mt jac_w(const V& w, const N& n) const {
        Mt m;
        m(0, 0) = n[0] * fl.df(w[0]);
        return m;
    }
    Mt hc_w(const V& w, const V& dw, const N& n) const {
        Mt m;
        m(0, 0) = n[0] * fl.d2f(w[0]) * dw[0];
        return m;
    }

    V flux_z(const V& z, const N& n) const { return flux_w(z, n); }
    Mt jac_z(const V& z, const N& n) const { return jac_w(z, n); }
    Mt hc_z(const V& dz, const N& n) const {
        // Only meaningful when f is quadratic; evaluated about u is exact
        // for Burgers and is the local quadratic model otherwise.
        Mt m;
        m(0, 0) = n[0] * fl.d2f(Real(0)) * dz[0];
        return m;
    }

    /// Nodal flux tensor (one column in 1D), evaluable on complex states
    /// for the complex-step forcing.
    template <class T>
    std::array<T, 1> flux_tensor_col(const std::array<T, 1>& w, int) const {
        return {fl.f(w[0])};
    }

    /// Roe dissipation coefficient |df/du| at the Roe average: the secant
    /// slope, falling back to f'(u_j) for vanishing jumps.
    Real roe_speed(const V& wj, const V& wk, const N& n) const {
        const Real du = wk[0] - wj[0];
        Real slope;
        if (abs(du) < Real(1e-14))
            slope = fl.df(wj[0]);
        else
            slope = (fl.f(wk[0]) - fl.f(wj[0])) / du;
        return abs(n[0] * slope);
    }
    Mt roe_abs_matrix(const V& wj, const V& wk, const N& n) const {
        Mt m;
        m(0, 0) = roe_speed(wj, wk, n);
        return m;
    }
    void roe_apply_abs(const V& wj, const V& wk, const N& n, const V& du, V& out) const {
        out[0] = roe_speed(wj, wk, n) * du[0];
    }
    /// Largest wave speed on an edge, for the local time step.
    Real max_wave(const V& wj, const V& wk, const N& n) const {
        Real s = roe_speed(wj, wk, n);
        s = std::max(s, abs(n[0] * fl.df(wj[0])));
        s = std::max(s, abs(n[0] * fl.df(wk[0])));
        return s;
    }

    Mt du_dz(const V&) const {
        Mt m;
        m(0, 0) = Real(1);
        return m;
    }
};

template <class R>
using Burgers = ScalarLaw<R, BurgersFlux>;
template <class R>
using Cubic = ScalarLaw<R, CubicFlux>;
template <class R>
using Advection = ScalarLaw<R, AdvectionFlux>;

} // namespace fsr
