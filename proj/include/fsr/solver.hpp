// Pseudo-time (steady) and fixed-step (unsteady) marching with the
// three-stage SSP Runge-Kutta scheme
//   u1 = u - dt R(u)
//   u2 = 3/4 u + 1/4 (u1 - dt R(u1))
//   u  = 1/3 u + 2/3 (u2 - dt R(u2)).
// Steady runs use per-node local time steps at a given CFL and stop when
// the L1 residual drops below `drop` relative to the initial-guess
// residual (or stalls at the round-off floor). Pinned nodes are rewritten
// after every stage; for unsteady runs they track the exact solution at
// the stage times t, t+dt, t+dt/2.
#pragma once

#include <chrono>
#include <cmath>
#include <vector>

#include "fsr/discretization.hpp"

namespace fsr {

struct SolveParams {
    double cfl = 0.99;
    double drop = 1e-7;
    long max_iter = 100000;
    // Stall guard: stop once the residual has made no relative progress
    // over stall_window iterations (round-off floor reached before `drop`).
    int stall_window = 800;
    // Startup phase: march with the first-order Roe flux until the
    // residual has dropped by startup_drop, so the initial transient is
    // flushed robustly before the target flux takes over. 0 disables.
    double startup_drop = 1e-5;
};

struct SolveReport {
    long iterations = 0;
    double res0 = 0.0, res_final = 0.0;
    bool converged = false;
    bool stalled = false;
    double wall_seconds = 0.0;
};

namespace detail {
template <class Disc, class State>
std::vector<double> snapshot(const Disc&, const State& u) {
    std::vector<double> snap;
    snap.reserve(u.size() * (u.empty() ? 0 : u[0].size()));
    for (const auto& v : u)
        for (int c = 0; c < v.size(); ++c) snap.push_back(double(v[c]));
    return snap;
}
} // namespace detail

template <class State>
double residual_l1(const State& res) {
    if (res.empty()) return 0.0;
    double s = 0.0;
    for (const auto& r : res)
        for (int c = 0; c < r.size(); ++c) s += double(abs(r[c]));
    return s / (double(res.size()) * double(res[0].size()));
}

/// Steady pseudo-time march. Pinned values are taken from `u` at entry and
/// held fixed. Throws SolverDivergence on inadmissible iterates.
template <class Disc>
SolveReport solve_steady(Disc& D, typename Disc::State& u, const SolveParams& p) {
    using Real = typename Disc::Real;
    using State = typename Disc::State;
    const auto t_start = std::chrono::steady_clock::now();
    auto wall = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    };

    const auto& pinned = D.pinned_nodes();
    State u_pin;
    u_pin.reserve(pinned.size());
    for (int j : pinned) u_pin.push_back(u[j]);
    auto apply_pin = [&](State& v) {
        for (std::size_t i = 0; i < pinned.size(); ++i) v[pinned[i]] = u_pin[i];
    };

    SolveReport rep;
    State res, res_s, u1, u2;
    std::vector<Real> dt;
    const int nn = D.mesh().num_nodes();

    auto guarded_residual = [&](const State& v, State& r, long it) {
        try {
            D.residual(v, r);
        } catch (const InadmissibleState& e) {
            throw SolverDivergence(std::string("solver divergence: ") + e.what(), it,
                                   detail::snapshot(D, v));
        }
    };

    const bool with_startup = p.startup_drop > 0.0 && D.scheme().dissipation;
    D.set_robust_jump(with_startup);

    guarded_residual(u, res, 0);
    rep.res0 = residual_l1(res);
    rep.res_final = rep.res0;
    if (rep.res0 == 0.0) {
        D.set_robust_jump(false);
        rep.converged = true;
        rep.wall_seconds = wall();
        return rep;
    }

    u1.resize(nn);
    u2.resize(nn);
    double best = rep.res0;
    long last_improve = 0;
    const par::Exec ex = D.exec();

    for (long it = 1; it <= p.max_iter; ++it) {
        D.local_time_step(u, Real(p.cfl), dt);
        par::for_each(nn, ex, [&](std::int64_t j) { u1[j] = u[j] - dt[j] * res[j]; });
        apply_pin(u1);
        guarded_residual(u1, res_s, it);
        par::for_each(nn, ex, [&](std::int64_t j) {
            u2[j] = Real(0.75) * u[j] + Real(0.25) * (u1[j] - dt[j] * res_s[j]);
        });
        apply_pin(u2);
        guarded_residual(u2, res_s, it);
        const Real c13 = Real(1) / Real(3), c23 = Real(2) / Real(3);
        par::for_each(nn, ex, [&](std::int64_t j) {
            u[j] = c13 * u[j] + c23 * (u2[j] - dt[j] * res_s[j]);
        });
        apply_pin(u);
        guarded_residual(u, res, it);

        double rn = residual_l1(res);
        rep.iterations = it;
        rep.res_final = rn;
        if (!std::isfinite(rn))
            throw SolverDivergence("solver divergence: non-finite residual", it,
                                   detail::snapshot(D, u));

        const long startup_cap = std::max<long>(2000, p.max_iter / 4);
        if (D.robust_jump() && (rn <= p.startup_drop * rep.res0 || it >= startup_cap)) {
            // transient flushed; hand over to the target dissipation jump
            D.set_robust_jump(false);
            guarded_residual(u, res, it);
            rn = residual_l1(res);
            rep.res_final = rn;
            best = rn;
            last_improve = it;
        }
        if (D.robust_jump()) continue;

        if (rn <= p.drop * rep.res0) {
            rep.converged = true;
            break;
        }
        if (rn < 0.999 * best) {
            best = rn;
            last_improve = it;
        } else if (it - last_improve >= p.stall_window) {
            rep.stalled = true;
            break;
        }
    }
    D.set_robust_jump(false);
    rep.wall_seconds = wall();
    return rep;
}

/// Fixed-step unsteady march from t0 over n_steps. pin(v, t) must write
/// the exact pinned values for time t into v.
template <class Disc, class PinFn>
SolveReport advance_unsteady(Disc& D, typename Disc::State& u, double t0, double dt_step,
                             long n_steps, PinFn&& pin) {
    using Real = typename Disc::Real;
    using State = typename Disc::State;
    const auto t_start = std::chrono::steady_clock::now();

    SolveReport rep;
    State res, u1, u2;
    const int nn = D.mesh().num_nodes();
    u1.resize(nn);
    u2.resize(nn);
    const Real dt = Real(dt_step);
    const par::Exec ex = D.exec();

    pin(u, t0);
    for (long s = 0; s < n_steps; ++s) {
        const double t = t0 + double(s) * dt_step;
        try {
            D.residual(u, res);
            par::for_each(nn, ex, [&](std::int64_t j) { u1[j] = u[j] - dt * res[j]; });
            pin(u1, t + dt_step);
            D.residual(u1, res);
            par::for_each(nn, ex, [&](std::int64_t j) {
                u2[j] = Real(0.75) * u[j] + Real(0.25) * (u1[j] - dt * res[j]);
            });
            pin(u2, t + 0.5 * dt_step);
            D.residual(u2, res);
            const Real c13 = Real(1) / Real(3), c23 = Real(2) / Real(3);
            par::for_each(nn, ex, [&](std::int64_t j) {
                u[j] = c13 * u[j] + c23 * (u2[j] - dt * res[j]);
            });
            pin(u, t + dt_step);
        } catch (const InadmissibleState& e) {
            throw SolverDivergence(std::string("unsteady divergence: ") + e.what(), s,
                                   detail::snapshot(D, u));
        }
        rep.iterations = s + 1;
    }
    rep.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
    rep.converged = true;
    return rep;
}

} // namespace fsr
