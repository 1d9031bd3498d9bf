#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tscalc/dynamics.hpp"
#include "tscalc/expfun.hpp"
#include "tscalc/trigfun.hpp"

using namespace tscalc;

namespace {

VectorField linear_field(Complex alpha) {
    return {[alpha](const State& x, double) -> State { return alpha * x; }, 1,
            true, std::nullopt};
}

State scalar(Complex v) {
    State x(1);
    x << v;
    return x;
}

} // namespace

TEST_CASE("single steps") {
    VectorField f = linear_field(1.0);
    CHECK(step(SchemeKind::ForwardEuler, f, scalar(1.0), 0, 1)[0] == Complex(2, 0));
    CHECK(std::abs(step(SchemeKind::ImplicitMidpoint, f, scalar(1.0), 0, 1)[0] -
                   3.0) < 1e-12);
    VectorField zero{[](const State& x, double) -> State {
                         return State::Zero(x.size());
                     },
                     1, true, std::nullopt};
    for (SchemeKind k : {SchemeKind::ForwardEuler, SchemeKind::BackwardEuler,
                         SchemeKind::Trapezoidal1, SchemeKind::Trapezoidal2,
                         SchemeKind::ImplicitMidpoint})
        CHECK(step(k, zero, scalar(1.7), 0, 0.5)[0] == Complex(1.7, 0));
}

TEST_CASE("integrate on the integer grid") {
    TimeScale z3 = normalize(uniform_grid(0, 1, 3));
    VectorField f = linear_field(1.0);
    Trajectory t = integrate(SchemeKind::ForwardEuler, f, z3, scalar(1.0), 0, 3);
    REQUIRE(t.times.size() == 4);
    CHECK(t.states[1][0] == Complex(2, 0));
    CHECK(t.states[2][0] == Complex(4, 0));
    CHECK(t.states[3][0] == Complex(8, 0));

    TimeScale z2 = normalize(uniform_grid(0, 1, 2));
    Trajectory m = integrate(SchemeKind::ImplicitMidpoint, f, z2, scalar(1.0), 0, 2);
    CHECK(std::abs(m.states[1][0] - 3.0) < 1e-12);
    CHECK(std::abs(m.states[2][0] - 9.0) < 1e-11);
}

TEST_CASE("linear consistency with the exponential families") {
    TimeScale ts = normalize({Piece::point(0), Piece::point(0.4), Piece::point(1.1),
                              Piece::point(1.6)});
    Complex a(0.6, 0.3);
    CoefficientFunction alpha(a);
    VectorField f = linear_field(a);
    struct Pair {
        SchemeKind kind;
        ExpScheme scheme;
    };
    const Pair pairs[] = {{SchemeKind::ForwardEuler, ExpScheme::delta()},
                          {SchemeKind::BackwardEuler, ExpScheme::nabla()},
                          {SchemeKind::Trapezoidal1, ExpScheme::cayley()},
                          {SchemeKind::Trapezoidal2, ExpScheme::cayley()},
                          {SchemeKind::ImplicitMidpoint, ExpScheme::cayley()}};
    for (const Pair& p : pairs) {
        Trajectory t = integrate(p.kind, f, ts, scalar(1.0), 0, 1.6);
        for (std::size_t i = 0; i < t.times.size(); ++i) {
            Complex e = eval_exp(p.scheme, alpha, ts, t.times[i], 0);
            CHECK(std::abs(t.states[i][0] - e) < 1e-11 * std::abs(e));
        }
    }
}

TEST_CASE("non-autonomous trapezoidal step factors") {
    auto alpha = [](double t) { return Complex(0.3 + 0.2 * std::sin(t), 0.1 * t); };
    VectorField f{[&alpha](const State& x, double t) -> State {
                      return alpha(t) * x;
                  },
                  1, false, std::nullopt};
    double t = 0.7, mu = 0.5, ts_ = t + mu;
    Complex a = alpha(t), as = alpha(ts_), avg = 0.5 * (a + as);

    Complex s1 = step(SchemeKind::Trapezoidal1, f, scalar(1.0), t, mu)[0];
    Complex expect1 = (1.0 + 0.5 * mu * a) / (1.0 - 0.5 * mu * as);
    CHECK(std::abs(s1 - expect1) < 1e-13);

    Complex s2 = step(SchemeKind::Trapezoidal2, f, scalar(1.0), t, mu)[0];
    Complex expect2 = (1.0 + 0.5 * mu * avg) / (1.0 - 0.5 * mu * avg);
    CHECK(std::abs(s2 - expect2) < 1e-13);

    // symmetric variant maps imaginary <alpha> into the unit circle
    auto iw = [](double t2) { return Complex(0, 0.8 + 0.1 * t2); };
    VectorField g{[&iw](const State& x, double t2) -> State { return iw(t2) * x; },
                  1, false, std::nullopt};
    Complex u = step(SchemeKind::Trapezoidal2, g, scalar(1.0), t, mu)[0];
    CHECK(std::abs(std::abs(u) - 1.0) < 1e-13);
}

TEST_CASE("integrate handles dense sub-intervals with the reference integrator") {
    TimeScale ts = normalize({Piece::point(0), Piece::interval(0.5, 1.5),
                              Piece::point(2.0)});
    Complex a(0.8, 0.0);
    CoefficientFunction alpha(a);
    VectorField f = linear_field(a);
    Trajectory t = integrate(SchemeKind::ImplicitMidpoint, f, ts, scalar(1.0), 0, 2);
    Complex e = eval_exp(ExpScheme::cayley(), alpha, ts, 2, 0);
    CHECK(std::abs(t.states.back()[0] - e) < 1e-9 * std::abs(e));
}

TEST_CASE("discrete gradient hand case and conservation") {
    HamiltonianSpec osc{[](double p) { return 0.5 * p * p; },
                        [](double q) { return 0.5 * q * q; },
                        [](double p) { return p; }, [](double q) { return q; }};
    auto [qs, ps] = discrete_gradient_step(osc, 1.0, 0.0, 1.0);
    CHECK(std::abs(qs - 0.6) < 1e-14);
    CHECK(std::abs(ps + 0.8) < 1e-14);
    CHECK(std::abs(osc.energy(ps, qs) - 0.5) < 1e-14);

    // constant T conserves q, constant V conserves p
    HamiltonianSpec flat{[](double) { return 1.0; },
                         [](double q) { return 0.5 * q * q; },
                         [](double) { return 0.0; }, [](double q) { return q; }};
    auto [q2, p2] = discrete_gradient_step(flat, 0.7, 0.4, 0.3);
    CHECK(q2 == 0.7);

    HamiltonianSpec pend{[](double p) { return 0.5 * p * p; },
                         [](double q) { return -std::cos(q); },
                         [](double p) { return p; },
                         [](double q) { return std::sin(q); }};
    auto [q3, p3] = discrete_gradient_step(pend, 0.5, 0.3, 0.1);
    CHECK(std::abs(pend.energy(p3, q3) - pend.energy(0.3, 0.5)) < 1e-12);
}

TEST_CASE("oscillator residual") {
    TimeScale z = normalize(uniform_grid(0, 1, 6));
    CoefficientFunction one(1.0);
    GridFunction sine{z, [&](double t) {
                          return cayley_trig(z, one, t, 0).second;
                      }};
    for (double t : {0.0, 1.0, 2.0, 3.0, 4.0})
        CHECK(std::abs(oscillator_residual(sine, 1.0, t)) < 1e-12);

    GridFunction zero{z, [](double) { return Complex(0, 0); }};
    CHECK(std::abs(oscillator_residual(zero, 1.0, 2.0)) == 0.0);

    // non-unit spacing: the identity holds whenever the graininess is constant
    TimeScale fine = normalize(uniform_grid(0.25, 0.37, 8));
    CoefficientFunction w(0.7);
    GridFunction cosine{fine, [&](double t) {
                            return cayley_trig(fine, w, t, 0.25).first;
                        }};
    auto fnodes = fine.nodes(0.25, fine.max());
    for (std::size_t i = 0; i + 2 < fnodes.size(); ++i)
        CHECK(std::abs(oscillator_residual(cosine, 0.7, fnodes[i])) < 1e-11);

    // averaging does not commute with Delta across a graininess change, so
    // the second-order identity genuinely fails when mu is non-constant
    TimeScale nonuni = normalize({Piece::point(0), Piece::point(0.5),
                                  Piece::point(1.5), Piece::point(2)});
    GridFunction bent{nonuni, [&](double t) {
                          return cayley_trig(nonuni, w, t, 0).first;
                      }};
    CHECK(std::abs(oscillator_residual(bent, 0.7, 0.0)) > 1e-3);
}

TEST_CASE("implicit solver contract") {
    // stiff linear problem forces the Newton branch
    VectorField stiff = linear_field(-40.0);
    State x = scalar(1.0);
    StepDiagnostics diag;
    State y = step(SchemeKind::BackwardEuler, stiff, x, 0, 0.5, &diag);
    CHECK(std::abs(y[0] - 1.0 / 21.0) < 1e-13);
    CHECK(diag.residual <= 1e-12 * 2.0);
}
