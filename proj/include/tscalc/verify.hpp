#pragma once

#include <cmath>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tscalc/core.hpp"
#include "tscalc/dynamics.hpp"
#include "tscalc/expfun.hpp"
#include "tscalc/liegroup.hpp"
#include "tscalc/qcalc.hpp"
#include "tscalc/timescale.hpp"
#include "tscalc/trigfun.hpp"

namespace tscalc::verify {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass() const { return residual <= tolerance; }
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass()) return false;
        return true;
    }
    double max_residual() const {
        double r = 0.0;
        for (const auto& c : checks) r = std::max(r, c.residual);
        return r;
    }
};

namespace detail {

// Random mixed scale: up to `max_scattered` scattered points and up to
// `max_intervals` dense intervals, starting at 0, gaps bounded away from the
// regressivity thresholds used by the suites.
inline TimeScale random_mixed_scale(std::mt19937& rng, int max_scattered = 20,
                                    int max_intervals = 2) {
    std::uniform_real_distribution<double> gap(0.05, 1.2);
    std::uniform_real_distribution<double> len(0.2, 1.0);
    std::uniform_int_distribution<int> npts(4, max_scattered);
    std::uniform_int_distribution<int> nint(0, max_intervals);
    int points = npts(rng), intervals = nint(rng);
    std::vector<Piece> pieces;
    double t = 0.0;
    pieces.push_back(Piece::point(t));
    std::vector<int> at(points);
    for (int i = 0; i < points; ++i) at[i] = i;
    std::shuffle(at.begin(), at.end(), rng);
    for (int i = 1; i < points; ++i) {
        t += gap(rng);
        if (intervals > 0 && at[i] < max_intervals) {
            double hi = t + len(rng);
            pieces.push_back(Piece::interval(t, hi));
            t = hi;
            --intervals;
        } else {
            pieces.push_back(Piece::point(t));
        }
    }
    return normalize(std::move(pieces));
}

// Smooth bounded real coefficient, |value| <= 1.
inline CoefficientFunction random_real_coeff(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double c0 = 0.6 * u(rng), c1 = 0.4 * u(rng), ph = 3.0 * u(rng);
    return CoefficientFunction([c0, c1, ph](double t) {
        return Complex(c0 + c1 * std::sin(t + ph), 0.0);
    });
}

inline CoefficientFunction random_complex_coeff(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double a0 = 0.5 * u(rng), a1 = 0.3 * u(rng);
    double b0 = 0.5 * u(rng), b1 = 0.3 * u(rng), ph = 3.0 * u(rng);
    return CoefficientFunction([=](double t) {
        return Complex(a0 + a1 * std::cos(t + ph), b0 + b1 * std::sin(t));
    });
}

inline void record(SuiteReport& rep, const std::string& name, double residual,
                   double tolerance) {
    rep.checks.push_back({name, residual, tolerance});
}

} // namespace detail

// Criterion 1: Pythagorean exactness of the Cayley trig/hyperbolic pairs on
// 50 random mixed scales.
inline SuiteReport pythagorean() {
    SuiteReport rep{"pythagorean", {}};
    std::mt19937 rng(20260826);
    double worst_trig = 0.0, worst_hyp = 0.0;
    for (int s = 0; s < 50; ++s) {
        TimeScale ts = detail::random_mixed_scale(rng);
        CoefficientFunction omega = detail::random_real_coeff(rng);
        // keep |alpha| small so Cosh^2 stays O(1): the residual of the
        // hyperbolic identity is evaluated in doubles and its roundoff floor
        // grows like eps * Cosh^2
        CoefficientFunction base = detail::random_real_coeff(rng);
        CoefficientFunction alpha([base](double t) { return 0.25 * base.eval(t); });
        double t0 = ts.min();
        for (double t : ts.nodes(t0, ts.max())) {
            auto [c, si] = cayley_trig(ts, omega, t, t0);
            worst_trig = std::max(worst_trig, std::abs(c * c + si * si - 1.0));
            auto [ch, sh] = cayley_hyperbolic(ts, alpha, t, t0);
            worst_hyp = std::max(worst_hyp, std::abs(ch * ch - sh * sh - 1.0));
        }
    }
    detail::record(rep, "Cos^2 + Sin^2 = 1", worst_trig, 1e-12);
    detail::record(rep, "Cosh^2 - Sinh^2 = 1", worst_hyp, 1e-12);
    return rep;
}

// Criterion 2: semigroup and inverse laws for Cayley and Pade(2,2); the
// delta/nabla exponentials demonstrably violate the inverse law.
inline SuiteReport semigroup() {
    SuiteReport rep{"semigroup", {}};
    std::mt19937 rng(7041);
    for (ExpScheme scheme : {ExpScheme::cayley(), ExpScheme::pade(2, 2)}) {
        std::string tag = scheme.tag == ExpScheme::Tag::Cayley ? "cayley" : "pade22";
        double worst_semi = 0.0, worst_inv = 0.0;
        for (int s = 0; s < 20; ++s) {
            TimeScale ts = detail::random_mixed_scale(rng);
            CoefficientFunction alpha = detail::random_complex_coeff(rng);
            CoefficientFunction malpha([a = alpha.eval](double t) { return -a(t); });
            auto nodes = ts.nodes(ts.min(), ts.max());
            double a = nodes.front(), b = nodes[nodes.size() / 2], c = nodes.back();
            Complex eca = eval_exp(scheme, alpha, ts, c, a);
            Complex semi = eval_exp(scheme, alpha, ts, c, b) *
                           eval_exp(scheme, alpha, ts, b, a);
            worst_semi = std::max(worst_semi, std::abs(semi - eca) / std::abs(eca));
            Complex inv = eval_exp(scheme, malpha, ts, c, a);
            worst_inv = std::max(worst_inv, std::abs(inv * eca - 1.0));
        }
        detail::record(rep, tag + " semigroup E(c,b)E(b,a) = E(c,a)", worst_semi, 1e-12);
        detail::record(rep, tag + " inverse E_{-a} = 1/E_a", worst_inv, 1e-12);
    }
    // Violation on Z: delta with alpha = 1 (nabla takes alpha = 1/2; alpha = 1
    // is not nabla-regressive on Z, the step denominator vanishes).
    TimeScale z3 = normalize(uniform_grid(0.0, 1.0, 3));
    CoefficientFunction one(1.0), mone(-1.0);
    double delta_gap = std::abs(eval_exp(ExpScheme::delta(), one, z3, 3, 0) *
                                    eval_exp(ExpScheme::delta(), mone, z3, 3, 0) -
                                1.0);
    CoefficientFunction half(0.5), mhalf(-0.5);
    double nabla_gap = std::abs(eval_exp(ExpScheme::nabla(), half, z3, 3, 0) *
                                    eval_exp(ExpScheme::nabla(), mhalf, z3, 3, 0) -
                                1.0);
    detail::record(rep, "delta inverse-law violation > 1e-3 (as 1/residual)",
                   delta_gap > 1e-3 ? 0.0 : 1.0, 0.5);
    detail::record(rep, "nabla inverse-law violation > 1e-3 (as 1/residual)",
                   nabla_gap > 1e-3 ? 0.0 : 1.0, 0.5);
    return rep;
}

// Criterion 3: the (+) law and the Cayley <-> delta bijection.
inline SuiteReport oplus() {
    SuiteReport rep{"oplus", {}};
    std::mt19937 rng(99173);
    double worst_oplus = 0.0, worst_bij = 0.0;
    for (int s = 0; s < 20; ++s) {
        TimeScale ts = detail::random_mixed_scale(rng, 10);
        CoefficientFunction alpha = detail::random_complex_coeff(rng);
        CoefficientFunction beta = detail::random_complex_coeff(rng);
        CoefficientFunction oplus_ab([&ts, a = alpha.eval, b = beta.eval](double t) {
            return circle_plus(a(t), b(t), ts.graininess(t));
        });
        CoefficientFunction delta_beta([&ts, a = alpha.eval](double t) {
            return alpha_to_beta(a(t), ts.graininess(t));
        });
        double t0 = ts.min();
        for (double t : ts.nodes(t0, ts.max())) {
            Complex ea = eval_exp(ExpScheme::cayley(), alpha, ts, t, t0);
            Complex eb = eval_exp(ExpScheme::cayley(), beta, ts, t, t0);
            Complex eab = eval_exp(ExpScheme::cayley(), oplus_ab, ts, t, t0);
            worst_oplus = std::max(worst_oplus,
                                   std::abs(ea * eb - eab) / std::abs(eab));
            Complex ed = eval_exp(ExpScheme::delta(), delta_beta, ts, t, t0);
            worst_bij =
                std::max(worst_bij, std::abs(ea - ed) / std::max(1.0, std::abs(ea)));
        }
    }
    detail::record(rep, "E_a E_b = E_{a(+)b}", worst_oplus, 1e-11);
    detail::record(rep, "Cayley via beta = delta exponential", worst_bij, 1e-11);
    return rep;
}

// Criterion 4: cylinder-form equivalence, product vs exp of the delta
// integral of zeta_mu(alpha).
inline SuiteReport cylinder_form() {
    SuiteReport rep{"cylinder", {}};
    std::mt19937 rng(55501);
    double worst = 0.0;
    for (int s = 0; s < 20; ++s) {
        TimeScale ts = detail::random_mixed_scale(rng, 12, 2);
        CoefficientFunction alpha = detail::random_complex_coeff(rng);
        GridFunction zeta{ts, [&ts, a = alpha.eval](double t) {
                              return cylinder(ts.graininess(t), a(t));
                          }};
        double t0 = ts.min();
        for (double t : ts.nodes(t0, ts.max())) {
            Complex prod = eval_exp(ExpScheme::cayley(), alpha, ts, t, t0);
            Complex integ = std::exp(delta_integral(zeta, t0, t));
            worst = std::max(worst, std::abs(prod - integ) / std::abs(prod));
        }
    }
    detail::record(rep, "E_a = exp(integral of zeta_mu(alpha))", worst, 1e-10);
    return rep;
}

// Criterion 5: measured local-error orders via log-log regression, plus the
// Cayley leading coefficient 1/12.
inline SuiteReport order_of_accuracy() {
    SuiteReport rep{"order", {}};
    auto slope = [](const ExpScheme& s) {
        // pairwise log-log slopes carry an O(z) bias from the next term of
        // the defect expansion (0.07 for nabla, where the series has a large
        // second coefficient); one Richardson step removes it
        std::vector<double> zs{0.1, 0.05, 0.025, 0.0125};
        std::vector<double> errs;
        for (double z : zs)
            errs.push_back(std::abs(step_factor(s, z, z, 1.0) - std::exp(z)));
        double s2 = std::log(errs[1] / errs[2]) / std::log(2.0);
        double s3 = std::log(errs[2] / errs[3]) / std::log(2.0);
        return s3 + (s3 - s2);
    };
    detail::record(rep, "delta slope = 2",
                   std::abs(slope(ExpScheme::delta()) - 2.0), 0.05);
    detail::record(rep, "nabla slope = 2",
                   std::abs(slope(ExpScheme::nabla()) - 2.0), 0.05);
    detail::record(rep, "cayley slope = 3",
                   std::abs(slope(ExpScheme::cayley()) - 3.0), 0.05);
    detail::record(rep, "pade(2,2) slope = 5",
                   std::abs(slope(ExpScheme::pade(2, 2)) - 5.0), 0.1);
    double z = 0.0125;
    double coeff =
        std::abs(step_factor(ExpScheme::cayley(), z, z, 1.0) - std::exp(z)) /
        (z * z * z);
    detail::record(rep, "cayley leading coefficient = 1/12",
                   std::abs(coeff - 1.0 / 12.0) * 12.0, 0.02);
    return rep;
}

// Criterion 6: unit-circle property of the symmetric schemes; the
// Bohner-Peterson Pythagorean defect equals e_{mu omega^2}.
inline SuiteReport unit_circle() {
    SuiteReport rep{"unitcircle", {}};
    std::mt19937 rng(31337);
    std::uniform_real_distribution<double> uw(-3.0, 3.0), um(0.01, 1.5);
    for (ExpScheme scheme :
         {ExpScheme::cayley(), ExpScheme::pade(2, 2), ExpScheme::pade(3, 3)}) {
        double worst = 0.0;
        std::string tag = scheme.tag == ExpScheme::Tag::Cayley
                              ? "cayley"
                              : "pade" + std::to_string(scheme.j) +
                                    std::to_string(scheme.k);
        for (int i = 0; i < 100; ++i) {
            double w = uw(rng), mu = um(rng);
            Complex m = step_factor(scheme, Complex(0, w), Complex(0, w), mu);
            worst = std::max(worst, std::abs(std::abs(m) - 1.0));
        }
        detail::record(rep, tag + " |step(i w mu)| = 1", worst, 1e-13);
    }
    // BP defect on Z at t = 1 with omega = 1: cos^2 + sin^2 = e_{mu omega^2}(1) = 2
    TimeScale z2 = normalize(uniform_grid(0.0, 1.0, 2));
    CoefficientFunction one(1.0);
    auto [c, s] = bp_trig(z2, one, 1.0, 0.0);
    detail::record(rep, "BP defect value 2 at t=1 on Z", std::abs(c * c + s * s - 2.0),
                   1e-11);
    // and against e_{mu omega^2} on random scales
    std::mt19937 rng2(8080);
    double worst_defect = 0.0;
    for (int i = 0; i < 10; ++i) {
        TimeScale ts = detail::random_mixed_scale(rng2, 10);
        CoefficientFunction omega = detail::random_real_coeff(rng2);
        CoefficientFunction mu_w2([&ts, w = omega.eval](double t) {
            Complex v = w(t);
            return ts.graininess(t) * v * v;
        });
        double t0 = ts.min();
        for (double t : ts.nodes(t0, ts.max())) {
            auto [ct, st] = bp_trig(ts, omega, t, t0);
            Complex defect = ct * ct + st * st;
            Complex expected = eval_exp(ExpScheme::delta(), mu_w2, ts, t, t0);
            worst_defect = std::max(
                worst_defect, std::abs(defect - expected) / std::abs(expected));
        }
    }
    detail::record(rep, "cos^2 + sin^2 = e_{mu w^2}", worst_defect, 1e-11);
    return rep;
}

// Criterion 7: exact energy conservation of the discrete-gradient stepper.
inline SuiteReport energy() {
    SuiteReport rep{"energy", {}};
    HamiltonianSpec osc{[](double p) { return 0.5 * p * p; },
                        [](double q) { return 0.5 * q * q; },
                        [](double p) { return p; }, [](double q) { return q; }};
    HamiltonianSpec pend{[](double p) { return 0.5 * p * p; },
                         [](double q) { return -std::cos(q); },
                         [](double p) { return p; },
                         [](double q) { return std::sin(q); }};
    auto [qs, ps] = discrete_gradient_step(osc, 1.0, 0.0, 1.0);
    detail::record(rep, "hand case (1,0,mu=1) -> (0.6,-0.8)",
                   std::max(std::abs(qs - 0.6), std::abs(ps + 0.8)), 1e-14);
    std::mt19937 rng(4242);
    std::uniform_real_distribution<double> umu(0.02, 0.3);
    struct Case {
        const char* name;
        const HamiltonianSpec* h;
        double q0, p0;
        bool uniform;
    };
    const Case cases[] = {{"oscillator uniform", &osc, 1.0, 0.3, true},
                          {"oscillator nonuniform", &osc, 1.0, 0.3, false},
                          {"pendulum uniform", &pend, 0.5, 0.3, true},
                          {"pendulum nonuniform", &pend, 0.5, 0.3, false}};
    for (const Case& c : cases) {
        double q = c.q0, p = c.p0;
        double h0 = c.h->energy(p, q);
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            double mu = c.uniform ? 0.1 : umu(rng);
            std::tie(q, p) = discrete_gradient_step(*c.h, q, p, mu);
            worst = std::max(worst,
                             std::abs(c.h->energy(p, q) - h0) / std::abs(h0));
        }
        detail::record(rep, std::string(c.name) + " |H - H0|/|H0| over 1e4 steps",
                       worst, 1e-11);
    }
    return rep;
}

// Criterion 8: the oscillator analogue q^{DD} + w0^2 <<q>> = 0 for Cayley
// sin/cos, and long-run boundedness of the implicit-midpoint trajectory.
inline SuiteReport oscillator() {
    SuiteReport rep{"oscillator", {}};
    {
        TimeScale ts = normalize(uniform_grid(0.0, 1.0, 12));
        CoefficientFunction omega(1.0);
        double t0 = ts.min();
        GridFunction sine{ts, [&](double t) {
                              return cayley_trig(ts, omega, t, t0).second;
                          }};
        double worst = 0.0;
        for (double t : ts.nodes(t0, 10.0))
            worst = std::max(worst, std::abs(oscillator_residual(sine, 1.0, t)));
        detail::record(rep, "Cayley sin residual on Z", worst, 1e-11);
    }
    {
        // the identity needs constant graininess (averaging commutes with
        // Delta only then), so "nonuniform" means non-unit spacings and
        // arbitrary anchors rather than mixed graininess
        double worst = 0.0;
        for (auto [start, h] : {std::pair{0.0, 0.5}, std::pair{-1.3, 0.37},
                                std::pair{2.0, 0.05}, std::pair{0.1, 1.7}}) {
            TimeScale ts = normalize(uniform_grid(start, h, 12));
            CoefficientFunction omega(0.7);
            double t0 = ts.min();
            GridFunction cosine{ts, [&](double t) {
                                    return cayley_trig(ts, omega, t, t0).first;
                                }};
            auto nodes = ts.nodes(t0, ts.max());
            for (std::size_t i = 0; i + 2 < nodes.size(); ++i)
                worst = std::max(
                    worst, std::abs(oscillator_residual(cosine, 0.7, nodes[i])));
        }
        detail::record(rep, "Cayley cos residual on non-unit grids", worst, 1e-11);
    }
    {
        double w0 = 1.0, mu = 0.1;
        VectorField field{[w0](const State& x, double) {
                              State out(2);
                              out << x[1], -w0 * w0 * x[0];
                              return out;
                          },
                          2, true, std::nullopt};
        State x(2);
        x << 1.0, 0.0;
        double e0 = std::norm(x[1]) + w0 * w0 * std::norm(x[0]);
        double worst = 0.0;
        for (int i = 0; i < 100000; ++i) {
            x = step(SchemeKind::ImplicitMidpoint, field, x, i * mu, mu);
            double e = std::norm(x[1]) + w0 * w0 * std::norm(x[0]);
            worst = std::max(worst, std::abs(e - e0) / e0);
        }
        detail::record(rep, "implicit-midpoint energy drift over 1e5 steps",
                       worst, 1e-9);
    }
    return rep;
}

// Criterion 9: the exact exponential satisfies x^D = alpha psi_alpha <x>.
inline SuiteReport exact_exp() {
    SuiteReport rep{"exactexp", {}};
    std::mt19937 rng(606060);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst_res = 0.0, worst_psi = 0.0;
    for (int s = 0; s < 20; ++s) {
        TimeScale ts = detail::random_mixed_scale(rng);
        Complex alpha(u(rng), u(rng));
        CoefficientFunction af(alpha);
        double t0 = ts.min();
        ts.for_each_segment(
            t0, ts.max(), [](double, double) {},
            [&](double t, double sg, double mu) {
                Complex x = eval_exp(ExpScheme::exact(), af, ts, t, t0);
                Complex xs = eval_exp(ExpScheme::exact(), af, ts, sg, t0);
                Complex lhs = (xs - x) / mu;
                Complex rhs = alpha * exact_psi(alpha, mu) * 0.5 * (x + xs);
                worst_res = std::max(worst_res,
                                     std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
                Complex direct = 2.0 * std::tanh(0.5 * alpha * mu) / (alpha * mu);
                worst_psi = std::max(worst_psi,
                                     std::abs(exact_psi(alpha, mu) - direct));
            });
    }
    detail::record(rep, "x^D = alpha psi <x> at scattered points", worst_res, 1e-12);
    detail::record(rep, "psi = 2 tanh(a mu/2)/(a mu)", worst_psi, 1e-14);
    return rep;
}

// Criterion 10: the modified q-calculus identities.
inline SuiteReport qcalculus() {
    SuiteReport rep{"qcalc", {}};
    double worst_ps = 0.0, worst_fact = 0.0, worst_recip = 0.0;
    double worst_pyth = 0.0, worst_deriv = 0.0;
    for (double q : {0.3, 0.5, 0.7, 0.9}) {
        QParams params(q);
        double radius = 0.8 * 2.0 / (1.0 - q);
        for (double frac : {0.1, 0.3, 0.5, 0.8, 1.0}) {
            double xr = frac * radius;
            for (Complex x : {Complex(xr, 0), Complex(-xr, 0), Complex(0, xr)}) {
                Complex prod = q_exp_product(x, params);
                Complex series = q_exp_series(x, params);
                worst_ps = std::max(worst_ps,
                                    std::abs(prod - series) / std::abs(prod));
                auto [eq, Eq] = jackson_exponentials(0.5 * x, params);
                worst_fact =
                    std::max(worst_fact, std::abs(eq * Eq - prod) / std::abs(prod));
                worst_recip = std::max(
                    worst_recip, std::abs(prod * q_exp_product(-x, params) - 1.0));
            }
            auto [cq, sq] = q_trig(xr, params);
            worst_pyth = std::max(worst_pyth, std::abs(cq * cq + sq * sq - 1.0));
            auto sin_q = [&params](double y) {
                return Complex(q_trig(y, params).second, 0.0);
            };
            auto cos_q = [&params](double y) {
                return Complex(q_trig(y, params).first, 0.0);
            };
            double x0 = std::max(xr, 0.1);
            worst_deriv = std::max(
                worst_deriv, std::abs(q_derivative(sin_q, x0, q) -
                                      q_average(cos_q, x0, q)));
            worst_deriv = std::max(
                worst_deriv, std::abs(q_derivative(cos_q, x0, q) +
                                      q_average(sin_q, x0, q)));
        }
    }
    detail::record(rep, "product = series", worst_ps, 1e-12);
    detail::record(rep, "E_q^x = e_q^{x/2} E_q^{x/2}", worst_fact, 1e-12);
    detail::record(rep, "E_q^x E_q^{-x} = 1", worst_recip, 1e-13);
    detail::record(rep, "Cos_q^2 + Sin_q^2 = 1", worst_pyth, 1e-13);
    detail::record(rep, "D_q Sin_q = <Cos_q>, D_q Cos_q = -<Sin_q>", worst_deriv,
                   1e-11);
    double worst_limit = 0.0;
    // the product needs ~log(tol)/log(q) factors, so give the near-classical
    // q its own budget instead of the defaults
    QParams near1(0.999, 1e-9, 50000);
    for (double x : {-1.0, -0.5, 0.5, 1.0})
        worst_limit = std::max(worst_limit,
                               std::abs(q_exp_product(Complex(x, 0), near1) -
                                        std::exp(x)));
    detail::record(rep, "classical limit at q = 0.999", worst_limit, 5e-3);
    return rep;
}

// Criterion 11: structure preservation of Cayley flows on SO(3), SU(2), Sp(2).
inline SuiteReport lieflow() {
    SuiteReport rep{"lieflow", {}};
    TimeScale grid = normalize(uniform_grid(0.0, 0.05, 1000));
    auto run = [&](const char* name, const QuadraticGroupSpec& g,
                   std::function<Matrix(double)> A) {
        LieFlowProblem prob{g, std::move(A), Matrix::Identity(g.n, g.n), grid};
        double worst = 0.0;
        for (const auto& s : flow(prob, grid.min(), grid.max()))
            worst = std::max(worst, s.defect);
        detail::record(rep, std::string(name) + " defect over 1e3 steps", worst,
                       1e-10);
    };
    run("SO(3)", QuadraticGroupSpec::orthogonal(3), [](double t) {
        Matrix a = Matrix::Zero(3, 3);
        a(0, 1) = -1.0 - 0.3 * std::sin(t);
        a(1, 0) = 1.0 + 0.3 * std::sin(t);
        a(0, 2) = 0.5 * std::cos(t);
        a(2, 0) = -0.5 * std::cos(t);
        a(1, 2) = -0.7;
        a(2, 1) = 0.7;
        return a;
    });
    run("SU(2)", QuadraticGroupSpec::unitary(2), [](double t) {
        Matrix a(2, 2);
        Complex i(0, 1);
        double b = 0.8, c = 0.4 + 0.2 * std::cos(t), d = 0.5;
        a << i * b, c + i * d, -c + i * d, -i * b;
        return a;
    });
    run("Sp(2)", QuadraticGroupSpec::symplectic(2), [](double t) {
        Matrix a(2, 2);
        a << 0.3, 0.9 + 0.1 * std::sin(t), -0.8, -0.3;
        return a;
    });
    {
        // scalar reduction: U(1) flow equals the Cayley exponential
        double w = 0.9;
        LieFlowProblem prob{QuadraticGroupSpec::unitary(1),
                            [w](double) {
                                Matrix a(1, 1);
                                a(0, 0) = Complex(0, w);
                                return a;
                            },
                            Matrix::Identity(1, 1), grid};
        CoefficientFunction iw(Complex(0, w));
        double worst = 0.0;
        for (const auto& s : flow(prob, grid.min(), grid.max())) {
            Complex e = eval_exp(ExpScheme::cayley(), iw, grid, s.t, grid.min());
            worst = std::max(worst, std::abs(s.Phi(0, 0) - e));
        }
        detail::record(rep, "1x1 flow = scalar Cayley exponential", worst, 1e-13);
    }
    {
        Matrix a(2, 2);
        a << 0.0, -1.0, 1.0, 0.0;
        Matrix r = cayley_matrix(a, 2.0);
        Matrix expected(2, 2);
        expected << 0.0, -1.0, 1.0, 0.0;
        detail::record(rep, "mu = 2 planar step is the 90-degree rotation",
                       (r - expected).norm(), 1e-15);
    }
    return rep;
}

using SuiteFn = SuiteReport (*)();

inline const std::map<std::string, SuiteFn>& suites() {
    static const std::map<std::string, SuiteFn> table{
        {"pythagorean", &pythagorean}, {"semigroup", &semigroup},
        {"oplus", &oplus},             {"cylinder", &cylinder_form},
        {"order", &order_of_accuracy}, {"unitcircle", &unit_circle},
        {"energy", &energy},           {"oscillator", &oscillator},
        {"exactexp", &exact_exp},      {"qcalc", &qcalculus},
        {"lieflow", &lieflow},
    };
    return table;
}

} // namespace tscalc::verify
