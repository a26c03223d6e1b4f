// Exact/manufactured solutions for the verification cases. Evaluators are
// templated on the coordinate scalar so the forcing can differentiate them
// with a complex step and the truncation-error probe can run them in
// extended precision.
#pragma once

#include <array>
#include <complex>

#include "fsr/errors.hpp"
#include "fsr/qreal.hpp"

namespace fsr {

namespace consts {
inline constexpr double pi = 3.14159265358979323846;
}

/// u(x) = sin(A x); steady source for f = u^2/2 is A sin(Ax) cos(Ax).
struct BurgersSteadyExact {
    double A = 1.23;
    template <class C>
    std::array<C, 1> prim(C x, C, double) const {
        return {sin(C(A) * x)};
    }
    template <class R>
    R source(R x) const {
        return R(A) * sin(R(A) * x) * cos(R(A) * x);
    }
};

/// Same exact solution with f = u^3/3: s = u^2 u' = sin^2(Ax) A cos(Ax).
struct CubicSteadyExact {
    double A = 1.23;
    template <class C>
    std::array<C, 1> prim(C x, C, double) const {
        return {sin(C(A) * x)};
    }
    template <class R>
    R source(R x) const {
        const R s = sin(R(A) * x);
        return s * s * R(A) * cos(R(A) * x);
    }
};

/// Steady 1D Euler manufactured solution,
///   w_i(x) = c0_i + c1_i sin(c2_i pi x) + x^5.
struct Euler1DSteadyExact {
    template <class C>
    std::array<C, 3> prim(C x, C, double) const {
        const C x5 = x * x * x * x * x;
        const C pi = C(consts::pi);
        return {C(1.0) + C(0.29) * sin(C(2.3) * pi * x) + x5,
                C(0.2) + C(0.30) * sin(C(2.0) * pi * x) + x5,
                C(1.7) + C(0.27) * sin(C(2.5) * pi * x) + x5};
    }
};

/// Simple-wave acoustic solution of the 1D Euler equations. V(x,t) is
/// defined implicitly and solved by fixed-point iteration from the t=0
/// value; valid until shock formation near t = t_s.
struct AcousticExact {
    double Minf = 1.7;
    double ts = 0.2;
    double gamma = 1.4;

    template <class C>
    C wave_speed_fn(C V) const { // u + a = Minf + V + 1 + (gamma-1)/2 V
        return C(Minf) + V + C(1.0) + C(0.5 * (gamma - 1.0)) * V;
    }

    template <class C>
    C solve_V(C x, double t) const {
        const C denom = C(consts::pi * ts * (gamma + 1.0));
        const C twopi = C(2.0 * consts::pi);
        C V = sin(twopi * x) / denom;
        if (t == 0.0) return V;
        for (int it = 0; it < 200; ++it) {
            const C Vn = sin(twopi * (x - wave_speed_fn(V) * C(t))) / denom;
            const auto dv = abs(Vn - V);
            V = Vn;
            if (double(dv) < 1e-14) return V;
        }
        throw IterationFailure("acoustic fixed point did not converge (t too close to t_s)");
    }

    template <class C>
    std::array<C, 3> prim(C x, C, double t) const {
        const C V = solve_V(x, t);
        const C g1 = C(0.5 * (gamma - 1.0));
        const C base = C(1.0) + g1 * V;
        const C rho = pow(base, C(2.0 / (gamma - 1.0)));
        const C p = pow(base, C(2.0 * gamma / (gamma - 1.0))) / C(gamma);
        return {rho, C(Minf) + V, p};
    }
};

/// Steady 2D Euler sinusoids; yfreq multiplies the y-coefficients for the
/// high-aspect-ratio variant (y rescaled by `aspect`, frequencies by
/// 1/aspect).
struct Euler2DSteadyExact {
    double yfreq = 1.0;
    template <class C>
    std::array<C, 4> prim(C x, C y, double) const {
        const C pi = C(consts::pi);
        const C yy = C(yfreq) * y;
        return {C(1.00) + C(0.2) * sin(pi * (C(2.3) * x + C(2.3) * yy)),
                C(0.15) + C(0.2) * sin(pi * (C(2.0) * x + C(2.0) * yy)),
                C(0.02) + C(0.2) * sin(pi * (C(2.0) * x + C(2.0) * yy)),
                C(1.00) + C(0.2) * sin(pi * (C(2.5) * x + C(2.5) * yy))};
    }
};

/// Inviscid vortex transport: perturbation of a uniform flow, exact
/// solution of the homogeneous 2D Euler equations.
struct VortexExact {
    double K = 5.0;
    double uinf = 0.5, vinf = 0.0;
    double gamma = 1.4;

    template <class C>
    std::array<C, 4> prim(C x, C y, double t) const {
        const C xb = x - C(uinf * t);
        const C yb = y - C(vinf * t);
        const C r2 = xb * xb + yb * yb;
        const C twopi = C(2.0 * consts::pi);
        const C swirl = C(K) / twopi * exp((C(1.0) - r2) / C(2.0));
        const C T = C(1.0) - C(K * K * (gamma - 1.0) / (8.0 * consts::pi * consts::pi)) *
                                 exp(C(1.0) - r2);
        const C rho = pow(T, C(1.0 / (gamma - 1.0)));
        return {rho, C(uinf) - yb * swirl, C(vinf) + xb * swirl,
                pow(rho, C(gamma)) / C(gamma)};
    }
};

} // namespace fsr
