#pragma once

#include <utility>

#include "tscalc/core.hpp"
#include "tscalc/expfun.hpp"
#include "tscalc/timescale.hpp"

namespace tscalc {

// The competing trig/hyperbolic families.  All of them are computed from
// exponentials, never from independent recursions, so identity failures
// localize to the exponential code.
struct TrigFamily {
    enum class Tag { Hilger, BohnerPeterson, Cayley, Exact };
    Tag tag = Tag::Cayley;
};

namespace detail {

constexpr Complex kImag{0.0, 1.0};

// Delta-regressivity check along [t0, t] for +-alpha; the Hilger and
// Bohner-Peterson families divide by delta exponentials and need it.
inline void check_delta_regressive(const TimeScale& ts,
                                   const CoefficientFunction& alpha, double t0,
                                   double t, bool both_signs) {
    if (t == t0) return;
    double lo = std::min(t, t0), hi = std::max(t, t0);
    ts.for_each_segment(
        lo, hi, [](double, double) {},
        [&](double tt, double, double mu) {
            Complex a = alpha.eval(tt);
            if (std::abs(1.0 + mu * a) < tol::regressive)
                throw NotRegressive("delta exponential: mu*alpha = -1 at t = " +
                                    std::to_string(tt));
            if (both_signs && std::abs(1.0 - mu * a) < tol::regressive)
                throw NotRegressive("delta exponential: mu*alpha = +1 at t = " +
                                    std::to_string(tt));
        });
}

} // namespace detail

// Cayley trigonometric pair (Cos_omega, Sin_omega).  Real outputs for real
// omega; satisfies Cos^2 + Sin^2 = 1 exactly.
inline std::pair<Complex, Complex> cayley_trig(const TimeScale& ts,
                                               const CoefficientFunction& omega,
                                               double t, double t0) {
    CoefficientFunction iw([w = omega.eval](double s) { return detail::kImag * w(s); });
    CoefficientFunction miw([w = omega.eval](double s) { return -detail::kImag * w(s); });
    Complex ep = eval_exp(ExpScheme::cayley(), iw, ts, t, t0);
    Complex em = eval_exp(ExpScheme::cayley(), miw, ts, t, t0);
    return {0.5 * (ep + em), (ep - em) / (2.0 * detail::kImag)};
}

// Cayley hyperbolic pair (Cosh_alpha, Sinh_alpha); Cosh^2 - Sinh^2 = 1.
inline std::pair<Complex, Complex>
cayley_hyperbolic(const TimeScale& ts, const CoefficientFunction& alpha,
                  double t, double t0) {
    CoefficientFunction ma([a = alpha.eval](double s) { return -a(s); });
    Complex ep = eval_exp(ExpScheme::cayley(), alpha, ts, t, t0);
    Complex em = eval_exp(ExpScheme::cayley(), ma, ts, t, t0);
    return {0.5 * (ep + em), 0.5 * (ep - em)};
}

// Hilger hyperbolic pair: (e_alpha + 1/e_alpha)/2, (e_alpha - 1/e_alpha)/2.
// cosh^2 - sinh^2 = 1 but the delta derivatives are not proportional to the
// partner function.
inline std::pair<Complex, Complex> hilger_trig(const TimeScale& ts,
                                               const CoefficientFunction& alpha,
                                               double t, double t0) {
    detail::check_delta_regressive(ts, alpha, t0, t, false);
    Complex e = eval_exp(ExpScheme::delta(), alpha, ts, t, t0);
    Complex einv = 1.0 / e;
    return {0.5 * (e + einv), 0.5 * (e - einv)};
}

// Residuals of the two Hilger derivative formulas at a right-scattered t:
//   cosh^D = (mu a^2/2)/(1+mu a) cosh + (a + mu a^2/2)/(1+mu a) sinh
// and its sinh companion; both vanish identically.
inline std::pair<Complex, Complex>
hilger_derivative_residual(const TimeScale& ts, const CoefficientFunction& alpha,
                           double t, double t0) {
    PointClass pc = ts.classify(t);
    double mu = pc.mu;
    Complex a = alpha.eval(ts.snap(t));
    auto [ch, sh] = hilger_trig(ts, alpha, t, t0);
    Complex dch, dsh;
    if (pc.right_scattered) {
        auto [chs, shs] = hilger_trig(ts, alpha, ts.sigma(t), t0);
        dch = (chs - ch) / mu;
        dsh = (shs - sh) / mu;
    } else {
        // mu = 0 limit: cosh' = alpha sinh, sinh' = alpha cosh
        dch = a * sh;
        dsh = a * ch;
    }
    Complex den = 1.0 + mu * a;
    if (std::abs(den) < tol::regressive)
        throw NotRegressive("hilger residual: mu*alpha = -1");
    Complex c1 = 0.5 * mu * a * a / den;
    Complex c2 = (a + 0.5 * mu * a * a) / den;
    return {dch - (c1 * ch + c2 * sh), dsh - (c1 * sh + c2 * ch)};
}

// Bohner-Peterson hyperbolic pair from e_{+-alpha}; derivative relations are
// clean, the Pythagorean identity degrades to e_{-mu alpha^2}.
inline std::pair<Complex, Complex>
bp_hyperbolic(const TimeScale& ts, const CoefficientFunction& alpha, double t,
              double t0) {
    detail::check_delta_regressive(ts, alpha, t0, t, true);
    CoefficientFunction ma([a = alpha.eval](double s) { return -a(s); });
    Complex ep = eval_exp(ExpScheme::delta(), alpha, ts, t, t0);
    Complex em = eval_exp(ExpScheme::delta(), ma, ts, t, t0);
    return {0.5 * (ep + em), 0.5 * (ep - em)};
}

// Bohner-Peterson trigonometric pair: cos = cosh_{i omega}, sin = -i sinh_{i omega}.
inline std::pair<Complex, Complex> bp_trig(const TimeScale& ts,
                                           const CoefficientFunction& omega,
                                           double t, double t0) {
    CoefficientFunction iw([w = omega.eval](double s) { return detail::kImag * w(s); });
    auto [ch, sh] = bp_hyperbolic(ts, iw, t, t0);
    return {ch, -detail::kImag * sh};
}

// Exact trig: the restriction of cos/sin to the scale (constant omega only).
inline std::pair<double, double> exact_trig(double omega0, double t, double t0) {
    double x = omega0 * (t - t0);
    return {std::cos(x), std::sin(x)};
}

} // namespace tscalc
