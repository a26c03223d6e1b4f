// Manufactured-solution forcing: s(x) = div F(w_exact(x)), computed by
// numeric differentiation of the analytic flux tensor.
//
// The default is a complex-step derivative (exact to round-off, no
// subtractive cancellation), so the forcing never floors the measurable
// discretization error. The Richardson-extrapolated central difference is
// kept as an independent cross-check.
#pragma once

#include <array>
#include <complex>
#include <vector>

#include "fsr/mesh.hpp"
#include "fsr/smallmat.hpp"

namespace fsr {

enum class ForcingMethod { ComplexStep, Richardson };

/// exact.prim<C>(x, y, t) must return the primitive state with scalar type
/// C for real and complex arguments alike.
template <class Model, class Exact>
std::vector<Vec<typename Model::Real, Model::M>>
forcing_field(const MeshT<typename Model::Real>& mesh, const Model& model, const Exact& exact,
              double t, ForcingMethod method = ForcingMethod::ComplexStep) {
    using Real = typename Model::Real;
    constexpr int M = Model::M;
    constexpr int D = Model::DIM;
    std::vector<Vec<Real, M>> s(mesh.num_nodes());

    if (method == ForcingMethod::ComplexStep) {
        using C = std::complex<Real>;
        const Real delta = Real(1e-100);
        for (int j = 0; j < mesh.num_nodes(); ++j) {
            const Real x = mesh.nodes[j].x[0];
            const Real y = mesh.nodes[j].x[1];
            Vec<Real, M> sj{};
            for (int d = 0; d < D; ++d) {
                const C xs = (d == 0) ? C(x, delta) : C(x, Real(0));
                const C ys = (d == 1) ? C(y, delta) : C(y, Real(0));
                const std::array<C, M> w = exact.template prim<C>(xs, ys, t);
                const std::array<C, M> f = model.template flux_tensor_col<C>(w, d);
                for (int c = 0; c < M; ++c) sj[c] += f[c].imag() / delta;
            }
            s[j] = sj;
        }
        return s;
    }

    // Two-step-size Richardson extrapolation of central differences,
    // fourth order: (4 D_{h/2} - D_h) / 3, h0 = 1e-4 * domain scale.
    Real lo = Real(1e300), hi = Real(-1e300);
    for (const auto& nd : mesh.nodes) {
        lo = std::min(lo, nd.x[0]);
        hi = std::max(hi, nd.x[0]);
    }
    const Real h0 = Real(1e-4) * std::max(hi - lo, Real(1));
    auto central = [&](Real x, Real y, int d, Real h) {
        std::array<Real, M> fp, fm;
        {
            const Real xp = x + (d == 0 ? h : Real(0)), yp = y + (d == 1 ? h : Real(0));
            fp = model.template flux_tensor_col<Real>(exact.template prim<Real>(xp, yp, t), d);
        }
        {
            const Real xm = x - (d == 0 ? h : Real(0)), ym = y - (d == 1 ? h : Real(0));
            fm = model.template flux_tensor_col<Real>(exact.template prim<Real>(xm, ym, t), d);
        }
        std::array<Real, M> r;
        for (int c = 0; c < M; ++c) r[c] = (fp[c] - fm[c]) / (Real(2) * h);
        return r;
    };
    for (int j = 0; j < mesh.num_nodes(); ++j) {
        const Real x = mesh.nodes[j].x[0];
        const Real y = mesh.nodes[j].x[1];
        Vec<Real, M> sj{};
        for (int d = 0; d < D; ++d) {
            const auto dh = central(x, y, d, h0);
            const auto dh2 = central(x, y, d, Real(0.5) * h0);
            for (int c = 0; c < M; ++c) sj[c] += (Real(4) * dh2[c] - dh[c]) / Real(3);
        }
        s[j] = sj;
    }
    return s;
}

/// Forcing from a closed-form scalar source, any real type (the quad-
/// precision truncation-error probe uses this for the 1D scalar laws).
template <class Real, class Fn>
std::vector<Vec<Real, 1>> forcing_closed_form_1d(const MeshT<Real>& mesh, Fn&& s_of_x) {
    std::vector<Vec<Real, 1>> s(mesh.num_nodes());
    for (int j = 0; j < mesh.num_nodes(); ++j) s[j][0] = s_of_x(mesh.nodes[j].x[0]);
    return s;
}

} // namespace fsr
