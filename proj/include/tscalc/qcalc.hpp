#pragma once

#include <cmath>
#include <cstdlib>
#include <limits>
#include <functional>
#include <utility>

#include <boost/multiprecision/cpp_complex.hpp>

#include "tscalc/core.hpp"

namespace tscalc {

// Parameters of the modified q-calculus; the product representation converges
// only for q strictly inside (0,1).
struct QParams {
    double q = 0.5;
    double series_tol = 1e-15;
    int max_terms = 500;

    QParams() = default;
    QParams(double q_, double tol_ = 1e-15, int max_terms_ = 500)
        : q(q_), series_tol(tol_), max_terms(max_terms_) {
        if (!(q > 0.0 && q < 1.0))
            throw Error("QParams: q must lie strictly in (0, 1)");
        if (series_tol < std::numeric_limits<double>::epsilon())
            throw Error("QParams: series_tol below machine epsilon");
        if (const char* cap = std::getenv("TSCALE_MAX_TERMS"))
            max_terms = std::min(max_terms, std::atoi(cap));
    }
};

// Modified bracket {k} = (1 + q + ... + q^{k-1}) / ((1 + q^{k-1})/2).
inline double q_bracket(int k, double q) {
    if (k < 1) throw Error("q_bracket: k must be >= 1");
    double num = 0.0, p = 1.0;
    for (int i = 0; i < k; ++i) {
        num += p;
        p *= q;
    }
    return num / (0.5 * (1.0 + std::pow(q, k - 1)));
}

// {n}! = {1}{2}...{n}; evaluated in log space above n = 150 to dodge overflow.
inline double q_factorial(int n, double q) {
    if (n < 0) throw Error("q_factorial: n must be >= 0");
    if (n <= 150) {
        double r = 1.0;
        for (int k = 1; k <= n; ++k) r *= q_bracket(k, q);
        return r;
    }
    double lg = 0.0;
    for (int k = 1; k <= n; ++k) lg += std::log(q_bracket(k, q));
    return std::exp(lg);
}

// E_q^x as the series sum x^n / {n}!.  The terms can grow many orders of
// magnitude above the result before the geometric decay kicks in (e.g.
// x = -16, q = 0.9), so the partial sums are accumulated in extended
// precision to keep the cancellation from eating the answer.
inline Complex q_exp_series(Complex x, const QParams& params) {
    using Big = boost::multiprecision::cpp_complex_50;
    using BigF = boost::multiprecision::cpp_bin_float_50;
    Big sum = 1, term = 1;
    const Big xb(x.real(), x.imag());
    // running 1 + q + ... + q^{n-1} and q^{n-1} for the bracket {n}; these
    // must carry full precision as well, since a double-rounded bracket
    // injects 1e-16 of relative noise per term ahead of the cancellation
    BigF geo = 0, qpow = 1;
    // factors {n} -> 2/(1-q), so the tail is eventually geometric with ratio
    // |x|(1-q)/2 < 1 inside the convergence domain
    double ratio_bound = std::abs(x) * (1.0 - params.q) / 2.0;
    for (int n = 1; n <= params.max_terms; ++n) {
        geo += qpow;
        BigF bracket = geo / (0.5 * (1 + qpow));
        qpow *= params.q;
        term *= xb / bracket;
        sum += term;
        double tail = static_cast<double>(abs(term));
        if (ratio_bound < 1.0) tail /= (1.0 - ratio_bound);
        // strictly relative to the current sum: the partial sums can peak
        // orders of magnitude above a tiny final value, so an absolute (or
        // max(1,.)-floored) cutoff would truncate far too early
        if (tail <= params.series_tol * static_cast<double>(abs(sum)))
            return Complex(static_cast<double>(sum.real()),
                           static_cast<double>(sum.imag()));
    }
    throw NoConvergence("q_exp_series: max_terms exhausted before tail bound");
}

// E_q^x as the infinite product of Cayley factors
// (1 + q^k(1-q)x/2) / (1 - q^k(1-q)x/2).
inline Complex q_exp_product(Complex x, const QParams& params) {
    Complex prod = 1.0;
    double qk = 1.0;
    double trunc = params.series_tol * (1.0 - params.q);
    for (int k = 0; k <= params.max_terms; ++k, qk *= params.q) {
        Complex w = 0.5 * qk * (1.0 - params.q) * x;
        Complex den = 1.0 - w;
        if (std::abs(den) < tol::regressive)
            throw PoleInProduct("q_exp_product: factor denominator vanishes at k = " +
                                std::to_string(k));
        Complex factor = (1.0 + w) / den;
        prod *= factor;
        if (std::abs(factor - 1.0) < trunc) return prod;
    }
    throw NoConvergence("q_exp_product: max_terms exhausted");
}

// The classical Jackson pair (e_q^x, E_q^x) with the standard bracket
// [n]_q = (1-q^n)/(1-q); distinct from the modified {n} bracket.
inline std::pair<Complex, Complex> jackson_exponentials(Complex x,
                                                        const QParams& params) {
    using Big = boost::multiprecision::cpp_complex_50;
    using BigF = boost::multiprecision::cpp_bin_float_50;
    double q = params.q;
    const Big xb(x.real(), x.imag());
    // extended precision for the same cancellation reason as q_exp_series:
    // near the e_q radius the terms peak far above the sum
    Big small_sum = 1, small_term = 1;
    Big big_sum = 1, big_term = 1;
    BigF qpow = 1; // q^{n-1}
    bool small_done = false, big_done = false;
    for (int n = 1; n <= params.max_terms && !(small_done && big_done); ++n) {
        BigF bracket = (1 - qpow * q) / (1 - q);
        if (!small_done) {
            small_term *= xb / bracket;
            small_sum += small_term;
            if (static_cast<double>(abs(small_term)) <=
                params.series_tol * static_cast<double>(abs(small_sum)))
                small_done = true;
        }
        if (!big_done) {
            big_term *= qpow * xb / bracket;
            big_sum += big_term;
            if (static_cast<double>(abs(big_term)) <=
                params.series_tol * static_cast<double>(abs(big_sum)))
                big_done = true;
        }
        qpow *= q;
    }
    if (!small_done || !big_done)
        throw NoConvergence("jackson_exponentials: series did not converge");
    auto to_complex = [](const Big& z) {
        return Complex(static_cast<double>(z.real()),
                       static_cast<double>(z.imag()));
    };
    return {to_complex(small_sum), to_complex(big_sum)};
}

// Modified q-trig pair: (Cos_q x, Sin_q x) = (Re, Im) of E_q^{ix}, whose
// product factors all have unit modulus, so Cos^2 + Sin^2 = 1 to roundoff.
inline std::pair<double, double> q_trig(double x, const QParams& params) {
    Complex e = q_exp_product(Complex(0.0, x), params);
    return {e.real(), e.imag()};
}

// D_q f(x) = (f(qx) - f(x))/(qx - x).
inline Complex q_derivative(const std::function<Complex(double)>& f, double x,
                            double q) {
    if (x == 0.0) throw Error("q_derivative: x must be nonzero");
    return (f(q * x) - f(x)) / (q * x - x);
}

// <f(x)> = (f(x) + f(qx))/2.
inline Complex q_average(const std::function<Complex(double)>& f, double x,
                         double q) {
    return 0.5 * (f(x) + f(q * x));
}

} // namespace tscalc
