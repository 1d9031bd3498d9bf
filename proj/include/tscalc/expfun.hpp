#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tscalc/core.hpp"
#include "tscalc/timescale.hpp"

namespace tscalc {

// Coefficient function alpha (or omega): an rd-continuous callable, with an
// optional constant hint required by the Exact scheme.
struct CoefficientFunction {
    std::function<Complex(double)> eval;
    std::optional<Complex> constant_hint;

    CoefficientFunction() = default;
    CoefficientFunction(std::function<Complex(double)> fn)
        : eval(std::move(fn)) {}
    CoefficientFunction(Complex c)
        : eval([c](double) { return c; }), constant_hint(c) {}
    CoefficientFunction(double c) : CoefficientFunction(Complex(c)) {}
};

// Tagged choice of exponential family.
struct ExpScheme {
    enum class Tag { Delta, Nabla, Cayley, Pade, Exact };
    Tag tag = Tag::Cayley;
    int j = 1, k = 1; // Pade orders, meaningful only for Tag::Pade

    static ExpScheme delta() { return {Tag::Delta, 1, 0}; }
    static ExpScheme nabla() { return {Tag::Nabla, 0, 1}; }
    static ExpScheme cayley() { return {Tag::Cayley, 1, 1}; }
    static ExpScheme pade(int j, int k) { return {Tag::Pade, j, k}; }
    static ExpScheme exact() { return {Tag::Exact, 0, 0}; }
};

// Rational function P_j(x)/Q_k(x) matching e^x through order j+k at 0,
// normalized so both constant terms are 1.
struct PadeApproximant {
    int j = 0, k = 0;
    std::vector<double> p_coeffs; // j+1 entries, ascending powers
    std::vector<double> q_coeffs; // k+1 entries, ascending powers
};

namespace detail {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Classical Pade table of e^x, in exact rational arithmetic.
inline std::pair<std::vector<Rational>, std::vector<Rational>>
pade_rational(int j, int k) {
    std::vector<Rational> p(j + 1), q(k + 1);
    for (int i = 0; i <= j; ++i)
        p[i] = Rational(factorial(j) * factorial(j + k - i),
                        factorial(j + k) * factorial(i) * factorial(j - i));
    for (int i = 0; i <= k; ++i) {
        q[i] = Rational(factorial(k) * factorial(j + k - i),
                        factorial(j + k) * factorial(i) * factorial(k - i));
        if (i % 2 == 1) q[i] = -q[i];
    }
    return {p, q};
}

inline Complex horner(const std::vector<double>& c, Complex x) {
    Complex r = c.back();
    for (auto it = c.rbegin() + 1; it != c.rend(); ++it) r = r * x + *it;
    return r;
}

} // namespace detail

inline constexpr int kPadeOrderCap = 12;

inline const PadeApproximant& pade_coefficients(int j, int k) {
    if (j < 0 || k < 0 || j + k < 1)
        throw OrderTooLarge("Pade orders must satisfy j,k >= 0 and j+k >= 1");
    if (j + k > kPadeOrderCap)
        throw OrderTooLarge("Pade order j+k exceeds cap " +
                            std::to_string(kPadeOrderCap));
    static std::map<std::pair<int, int>, PadeApproximant> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({j, k});
    if (it != cache.end()) return it->second;
    auto [p, q] = detail::pade_rational(j, k);
    PadeApproximant pa;
    pa.j = j;
    pa.k = k;
    for (const auto& c : p) pa.p_coeffs.push_back(static_cast<double>(c));
    for (const auto& c : q) pa.q_coeffs.push_back(static_cast<double>(c));
    return cache.emplace(std::make_pair(j, k), std::move(pa)).first->second;
}

// Cylinder transformation: zeta_mu(z) = (1/mu) log((1 + z mu/2)/(1 - z mu/2)),
// zeta_0(z) = z.
inline Complex cylinder(double mu, Complex z) {
    if (mu == 0.0) return z;
    Complex num = 1.0 + 0.5 * z * mu;
    Complex den = 1.0 - 0.5 * z * mu;
    if (std::abs(den) < tol::regressive * std::max(1.0, std::abs(num)) ||
        std::abs(num) < tol::regressive * std::max(1.0, std::abs(den)))
        throw NotRegressive("cylinder transform: mu*z = +-2");
    return std::log(num / den) / mu;
}

// The bijection between Cayley and delta coefficients: beta = alpha/(1 - mu alpha/2).
inline Complex alpha_to_beta(Complex alpha, double mu) {
    Complex den = 1.0 - 0.5 * mu * alpha;
    if (std::abs(den) < tol::regressive * std::max(1.0, std::abs(alpha)))
        throw NotRegressive("alpha_to_beta: mu*alpha = 2");
    return alpha / den;
}

inline Complex beta_to_alpha(Complex beta, double mu) {
    Complex den = 1.0 + 0.5 * mu * beta;
    if (std::abs(den) < tol::regressive * std::max(1.0, std::abs(beta)))
        throw NotRegressive("beta_to_alpha: mu*beta = -1... (excluded value)");
    return beta / den;
}

// alpha (+) beta = (alpha + beta)/(1 + mu^2 alpha beta / 4): the addition law
// under which Cayley exponentials multiply.
inline Complex circle_plus(Complex alpha, Complex beta, double mu) {
    Complex num = alpha + beta;
    Complex den = 1.0 + 0.25 * mu * mu * alpha * beta;
    if (std::abs(den) < tol::regressive * std::max(1.0, std::abs(num)))
        throw SingularOplus("circle_plus denominator vanishes");
    return num / den;
}

// Multiplier m with x(sigma(t)) = m x(t) across one right-scattered step.
// Delta and Cayley/Pade evaluate alpha at t; Nabla at sigma(t).
inline Complex step_factor(const ExpScheme& scheme, Complex alpha_at_t,
                           Complex alpha_at_sigma, double mu) {
    switch (scheme.tag) {
    case ExpScheme::Tag::Delta:
        return 1.0 + alpha_at_t * mu;
    case ExpScheme::Tag::Nabla: {
        Complex den = 1.0 - alpha_at_sigma * mu;
        if (std::abs(den) < tol::regressive)
            throw NotRegressive("nabla step: mu*alpha(sigma(t)) = 1");
        return 1.0 / den;
    }
    case ExpScheme::Tag::Cayley: {
        Complex z = alpha_at_t * mu;
        Complex num = 1.0 + 0.5 * z;
        Complex den = 1.0 - 0.5 * z;
        if (std::abs(den) < tol::regressive * std::max(1.0, std::abs(num)))
            throw NotRegressive("Cayley step: mu*alpha = 2");
        return num / den;
    }
    case ExpScheme::Tag::Pade: {
        const PadeApproximant& pa = pade_coefficients(scheme.j, scheme.k);
        Complex z = alpha_at_t * mu;
        Complex num = detail::horner(pa.p_coeffs, z);
        Complex den = detail::horner(pa.q_coeffs, z);
        if (std::abs(den) < tol::regressive * std::max(1.0, std::abs(num)))
            throw NotRegressive("Pade step: Q_k(mu*alpha) = 0");
        return num / den;
    }
    case ExpScheme::Tag::Exact:
        return std::exp(alpha_at_t * mu);
    }
    throw Error("unreachable");
}

// psi_alpha at a step of graininess mu: 1 when mu = 0, else
// (2/(alpha mu)) tanh(alpha mu / 2), continuously extended through alpha -> 0.
inline Complex exact_psi(Complex alpha, double mu) {
    if (mu == 0.0) return 1.0;
    Complex z = alpha * mu;
    if (std::abs(z) < 1e-6) {
        // tanh(z/2)/(z/2) = 1 - z^2/12 + z^4/120 - ...
        Complex z2 = z * z;
        return 1.0 - z2 / 12.0 + z2 * z2 / 120.0;
    }
    return 2.0 * std::tanh(0.5 * z) / z;
}

// Exponential on a time scale: product of step factors over scattered steps
// times exp(integral of alpha) over dense sub-intervals.  Backward evaluation
// (t < t0) is the reciprocal of the forward product, realizing the semigroup
// property.
inline Complex eval_exp(const ExpScheme& scheme, const CoefficientFunction& alpha,
                        const TimeScale& ts, double t, double t0) {
    if (!ts.contains(t) || !ts.contains(t0))
        throw NotInScale("eval_exp: endpoint not in scale");
    t = ts.snap(t);
    t0 = ts.snap(t0);
    if (t == t0) return 1.0;
    if (t < t0)
        return 1.0 / eval_exp(scheme, alpha, ts, t0, t);
    if (scheme.tag == ExpScheme::Tag::Exact) {
        if (!alpha.constant_hint)
            throw Error("Exact scheme requires a constant coefficient "
                        "(constant_hint not set)");
        return std::exp(*alpha.constant_hint * (t - t0));
    }
    Complex acc = 1.0;
    ts.for_each_segment(
        t0, t,
        [&](double lo, double hi) {
            acc *= std::exp(detail::integrate_dense(alpha.eval, lo, hi));
        },
        [&](double tt, double ss, double mu) {
            acc *= step_factor(scheme, alpha.eval(tt), alpha.eval(ss), mu);
        });
    return acc;
}

// Leading term of step_factor(z) - e^z as z -> 0, computed by exact rational
// series subtraction.  order == 0 means the scheme is exact (no error term).
struct LeadingErrorTerm {
    int order = 0;
    double coefficient = 0.0;
};

inline LeadingErrorTerm local_error_expansion(const ExpScheme& scheme) {
    using detail::Rational;
    constexpr int N = 18; // series length; enough past the order cap
    std::vector<Rational> m(N, 0);
    switch (scheme.tag) {
    case ExpScheme::Tag::Delta:
        m[0] = 1;
        m[1] = 1;
        break;
    case ExpScheme::Tag::Nabla:
        for (int n = 0; n < N; ++n) m[n] = 1; // 1/(1-z)
        break;
    case ExpScheme::Tag::Cayley:
    case ExpScheme::Tag::Pade: {
        int j = scheme.tag == ExpScheme::Tag::Cayley ? 1 : scheme.j;
        int k = scheme.tag == ExpScheme::Tag::Cayley ? 1 : scheme.k;
        if (j + k > kPadeOrderCap)
            throw OrderTooLarge("Pade order exceeds cap");
        auto [p, q] = detail::pade_rational(j, k);
        p.resize(N, 0);
        q.resize(N, 0);
        // long division: m = p / q with q[0] = 1
        for (int n = 0; n < N; ++n) {
            Rational c = p[n];
            for (int i = 1; i <= n; ++i) c -= q[i] * m[n - i];
            m[n] = c;
        }
        break;
    }
    case ExpScheme::Tag::Exact:
        return {0, 0.0};
    }
    detail::BigInt nfact = 1;
    for (int n = 0; n < N; ++n) {
        if (n > 0) nfact *= n;
        Rational diff = m[n] - Rational(1, nfact);
        if (diff != 0) return {n, static_cast<double>(diff)};
    }
    return {0, 0.0};
}

} // namespace tscalc
