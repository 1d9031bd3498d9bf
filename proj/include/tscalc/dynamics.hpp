#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

#include "tscalc/core.hpp"
#include "tscalc/timescale.hpp"

namespace tscalc {

using State = Eigen::VectorXcd;

// Right-hand side of x' = f(x, t) on C^N.
struct VectorField {
    std::function<State(const State&, double)> f;
    int dimension = 1;
    bool autonomous = false;
    std::optional<std::function<Eigen::MatrixXcd(const State&, double)>> jacobian;
};

enum class SchemeKind {
    ForwardEuler,
    BackwardEuler,
    Trapezoidal1,
    Trapezoidal2,
    ImplicitMidpoint,
    DiscreteGradient,
};

// Separable Hamiltonian H(p,q) = T(p) + V(q) with analytic derivatives
// (needed for the degenerate-gap limit of the discrete gradient).
struct HamiltonianSpec {
    std::function<double(double)> T;
    std::function<double(double)> V;
    std::function<double(double)> dT;
    std::function<double(double)> dV;

    double energy(double p, double q) const { return T(p) + V(q); }
};

struct StepDiagnostics {
    int iterations = 0;
    double residual = 0.0;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    std::vector<StepDiagnostics> diagnostics;
};

namespace detail {

// Solves y = rhs(y) by fixed-point iteration with a switch to damped Newton
// (finite-difference Jacobian) after 8 non-contracting sweeps.
inline State solve_implicit(const std::function<State(const State&)>& rhs,
                            const State& guess, double scale,
                            StepDiagnostics* diag = nullptr) {
    auto residual = [&](const State& y) -> State { return rhs(y) - y; };
    State y = guess;
    double rn = residual(y).norm();
    double target = 1e-15 * (1.0 + scale);
    int iter = 0;
    bool newton = false;
    double prev = rn;
    while (rn > target && iter < 50) {
        if (!newton) {
            State yn = rhs(y);
            double rnn = residual(yn).norm();
            if (iter >= 8 && rnn > 0.5 * prev) {
                newton = true;
                continue;
            }
            prev = rnn;
            y = yn;
            rn = rnn;
        } else {
            int n = static_cast<int>(y.size());
            Eigen::MatrixXcd jac(n, n);
            State r0 = residual(y);
            double h = 1e-7 * (1.0 + y.norm());
            for (int c = 0; c < n; ++c) {
                State yp = y;
                yp[c] += h;
                jac.col(c) = (residual(yp) - r0) / h;
            }
            State dy = jac.partialPivLu().solve(-r0);
            double damping = 1.0;
            for (int half = 0; half < 6; ++half) {
                State trial = y + damping * dy;
                double rt = residual(trial).norm();
                if (rt < rn) {
                    y = trial;
                    rn = rt;
                    break;
                }
                damping *= 0.5;
            }
        }
        ++iter;
        if (iter >= 50) break;
    }
    rn = residual(y).norm();
    if (diag) {
        diag->iterations = iter;
        diag->residual = rn;
    }
    if (rn > tol::solve * (1.0 + scale))
        throw SolverDiverged("implicit step residual " + std::to_string(rn) +
                             " above tolerance after 50 iterations");
    return y;
}

// Embedded Dormand-Prince 5(4) adaptive integrator for dense sub-intervals,
// where every scheme reduces to the exact ODE.
inline State integrate_dense_ode(const VectorField& field, State x, double t0,
                                 double t1, double tolerance = tol::dense) {
    static const double c[7] = {0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
    static const double a[7][6] = {
        {},
        {1.0 / 5},
        {3.0 / 40, 9.0 / 40},
        {44.0 / 45, -56.0 / 15, 32.0 / 9},
        {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
        {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
        {35.0 / 384, 0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
    static const double b5[7] = {35.0 / 384,     0, 500.0 / 1113, 125.0 / 192,
                                 -2187.0 / 6784, 11.0 / 84, 0};
    static const double b4[7] = {5179.0 / 57600,   0,           7571.0 / 16695,
                                 393.0 / 640,      -92097.0 / 339200,
                                 187.0 / 2100,     1.0 / 40};
    double t = t0;
    double h = (t1 - t0) * 0.1;
    int guard = 0;
    while (t < t1) {
        if (++guard > 1000000)
            throw SolverDiverged("dense reference integration stalled");
        h = std::min(h, t1 - t);
        State k[7];
        for (int i = 0; i < 7; ++i) {
            State xi = x;
            for (int l = 0; l < i; ++l)
                if (a[i][l] != 0.0) xi += h * a[i][l] * k[l];
            k[i] = field.f(xi, t + c[i] * h);
        }
        State x5 = x, err = State::Zero(x.size());
        for (int i = 0; i < 7; ++i) {
            if (b5[i] != 0.0) x5 += h * b5[i] * k[i];
            err += h * (b5[i] - b4[i]) * k[i];
        }
        double en = err.norm() / (tolerance * (1.0 + x.norm()));
        if (en <= 1.0) {
            t += h;
            x = std::move(x5);
        }
        double factor = en > 0 ? 0.9 * std::pow(en, -0.2) : 5.0;
        h *= std::clamp(factor, 0.2, 5.0);
    }
    return x;
}

} // namespace detail

// One right-scattered step x -> x^sigma under the given scheme.
inline State step(SchemeKind scheme, const VectorField& field, const State& x,
                  double t, double mu, StepDiagnostics* diag = nullptr) {
    double ts = t + mu;
    switch (scheme) {
    case SchemeKind::ForwardEuler:
        return x + mu * field.f(x, t);
    case SchemeKind::BackwardEuler:
        return detail::solve_implicit(
            [&](const State& y) -> State { return x + mu * field.f(y, ts); },
            x + mu * field.f(x, t), x.norm(), diag);
    case SchemeKind::Trapezoidal1: {
        State fx = field.f(x, t);
        return detail::solve_implicit(
            [&](const State& y) -> State {
                return x + 0.5 * mu * (fx + field.f(y, ts));
            },
            x + mu * fx, x.norm(), diag);
    }
    case SchemeKind::Trapezoidal2: {
        State fx_t = field.f(x, t);
        State fx_ts = field.f(x, ts);
        return detail::solve_implicit(
            [&](const State& y) -> State {
                return x + 0.25 * mu * (fx_t + fx_ts + field.f(y, t) + field.f(y, ts));
            },
            x + mu * fx_t, x.norm(), diag);
    }
    case SchemeKind::ImplicitMidpoint:
        return detail::solve_implicit(
            [&](const State& y) -> State {
                State mid = 0.5 * (x + y);
                if (field.autonomous) return x + mu * field.f(mid, t);
                // the scale may not contain (t + t^sigma)/2; average over
                // {t, t^sigma} instead
                return x + 0.5 * mu * (field.f(mid, t) + field.f(mid, ts));
            },
            x + mu * field.f(x, t), x.norm(), diag);
    case SchemeKind::DiscreteGradient:
        throw Error("DiscreteGradient steps take a HamiltonianSpec; use "
                    "discrete_gradient_step");
    }
    throw Error("unreachable");
}

// Trajectory over every scale node in [t0, t1]: scattered steps use `step`,
// dense sub-intervals use the adaptive reference integrator.
inline Trajectory integrate(SchemeKind scheme, const VectorField& field,
                            const TimeScale& ts, const State& x0, double t0,
                            double t1) {
    if (!ts.contains(t0) || !ts.contains(t1))
        throw NotInScale("integrate: endpoint not in scale");
    Trajectory traj;
    traj.times.push_back(ts.snap(t0));
    traj.states.push_back(x0);
    traj.diagnostics.push_back({});
    ts.for_each_segment(
        t0, t1,
        [&](double lo, double hi) {
            traj.times.push_back(hi);
            traj.states.push_back(
                detail::integrate_dense_ode(field, traj.states.back(), lo, hi));
            traj.diagnostics.push_back({});
        },
        [&](double tt, double ss, double mu) {
            StepDiagnostics diag;
            traj.times.push_back(ss);
            traj.states.push_back(step(scheme, field, traj.states.back(), tt, mu, &diag));
            traj.diagnostics.push_back(diag);
        });
    return traj;
}

// Coupled implicit discrete-gradient step for H(p,q) = T(p) + V(q):
//   q^s = q + mu (T(p^s) - T(p))/(p^s - p),  p^s = p - mu (V(q^s) - V(q))/(q^s - q),
// with the analytic derivative replacing the quotient below the gap tolerance.
// Conserves H exactly up to the solver residual.
inline std::pair<double, double>
discrete_gradient_step(const HamiltonianSpec& h, double q, double p, double mu,
                       StepDiagnostics* diag = nullptr) {
    auto dgT = [&](double ps) {
        return std::abs(ps - p) < tol::gap(p) ? h.dT(p)
                                              : (h.T(ps) - h.T(p)) / (ps - p);
    };
    auto dgV = [&](double qs) {
        return std::abs(qs - q) < tol::gap(q) ? h.dV(q)
                                              : (h.V(qs) - h.V(q)) / (qs - q);
    };
    State guess(2);
    guess << q + mu * h.dT(p), p - mu * h.dV(q);
    State sol = detail::solve_implicit(
        [&](const State& y) -> State {
            State out(2);
            out << q + mu * dgT(y[1].real()), p - mu * dgV(y[0].real());
            return out;
        },
        guess, std::abs(q) + std::abs(p), diag);
    return {sol[0].real(), sol[1].real()};
}

// Residual of the oscillator analogue q^{DD} + omega0^2 (q^{ss} + 2q^s + q)/4 = 0
// at a doubly right-scattered point; the classical residual q'' + omega0^2 q
// at dense points.
inline Complex oscillator_residual(const GridFunction& q, double omega0,
                                   double t) {
    const TimeScale& ts = q.scale;
    PointClass pc = ts.classify(t);
    t = ts.snap(t);
    if (!pc.right_scattered) {
        if (pc.at_max)
            throw DegenerateAtMax("oscillator residual undefined at max");
        // classical residual q'' + omega0^2 q, second central difference
        const Piece& piece = ts.pieces()[ts.find_piece(t)];
        double h = std::min({t - piece.lo, piece.hi - t, 1e-3 * (1.0 + std::abs(t))});
        if (h <= 0.0)
            throw DegenerateAtMax("oscillator residual needs interior dense point");
        Complex qdd =
            (q.eval(t + h) - 2.0 * q.eval(t) + q.eval(t - h)) / (h * h);
        return qdd + omega0 * omega0 * q.eval(t);
    }
    double s1 = ts.sigma(t);
    PointClass pc1 = ts.classify(s1);
    if (!pc1.right_scattered)
        throw DegenerateAtMax("oscillator residual needs two scattered steps");
    double s2 = ts.sigma(s1);
    double mu0 = pc.mu, mu1 = pc1.mu;
    Complex q0 = q.eval(t), q1 = q.eval(s1), q2 = q.eval(s2);
    Complex qdd = ((q2 - q1) / mu1 - (q1 - q0) / mu0) / mu0;
    Complex avg2 = (q2 + 2.0 * q1 + q0) / 4.0;
    return qdd + omega0 * omega0 * avg2;
}

} // namespace tscalc
