#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "tscalc/core.hpp"

namespace tscalc {

// A closed interval [lo, hi]; degenerate (lo == hi) encodes a scattered point.
struct Piece {
    double lo;
    double hi;

    static Piece point(double t) { return {t, t}; }
    static Piece interval(double lo, double hi) { return {lo, hi}; }
    bool is_point() const { return lo == hi; }
};

// Full four-way point classification with gap sizes.
struct PointClass {
    bool right_scattered = false;
    double mu = 0.0; // sigma(t) - t, positive exactly when right_scattered
    bool left_scattered = false;
    double nu = 0.0; // t - rho(t)
    bool at_max = false;
    bool at_min = false;

    bool right_dense() const { return !right_scattered; }
    bool left_dense() const { return !left_scattered; }
};

// Canonical representation of a time scale over a bounded window: a sorted,
// disjoint union of closed intervals and scattered points.  The window is
// always tightened to the hull of the set.
class TimeScale {
public:
    TimeScale() = default;

    const std::vector<Piece>& pieces() const { return pieces_; }
    double min() const { return pieces_.front().lo; }
    double max() const { return pieces_.back().hi; }

    bool contains(double t) const {
        return find_piece(t) != npos;
    }

    // Index of the piece containing t, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::size_t find_piece(double t) const {
        double tau = tol::membership(t);
        auto it = std::lower_bound(pieces_.begin(), pieces_.end(), t - tau,
                                   [](const Piece& p, double v) { return p.hi < v; });
        if (it == pieces_.end()) return npos;
        if (t < it->lo - tau) return npos;
        return static_cast<std::size_t>(it - pieces_.begin());
    }

    // Snap t onto exact endpoint values of its piece (rounding guard).
    double snap(double t) const {
        std::size_t i = require(t);
        double tau = tol::membership(t);
        if (std::abs(t - pieces_[i].lo) <= tau) return pieces_[i].lo;
        if (std::abs(t - pieces_[i].hi) <= tau) return pieces_[i].hi;
        return t;
    }

    double sigma(double t) const {
        std::size_t i = require(t);
        t = snap(t);
        if (t < pieces_[i].hi) return t; // right-dense (interval interior)
        if (i + 1 == pieces_.size()) return t; // sigma(max) = max
        return pieces_[i + 1].lo;
    }

    double rho(double t) const {
        std::size_t i = require(t);
        t = snap(t);
        if (t > pieces_[i].lo) return t; // left-dense
        if (i == 0) return t; // rho(min) = min
        return pieces_[i - 1].hi;
    }

    double graininess(double t) const { return sigma(t) - snap(t); }

    PointClass classify(double t) const {
        std::size_t i = require(t);
        t = snap(t);
        PointClass pc;
        pc.at_min = (i == 0 && t == pieces_.front().lo);
        pc.at_max = (i + 1 == pieces_.size() && t == pieces_.back().hi);
        if (t == pieces_[i].hi && !pc.at_max) {
            pc.right_scattered = true;
            pc.mu = pieces_[i + 1].lo - t;
        }
        if (t == pieces_[i].lo && !pc.at_min) {
            pc.left_scattered = true;
            pc.nu = t - pieces_[i - 1].hi;
        }
        return pc;
    }

    // Walks [t0, t1] (t0 <= t1, both in the scale), invoking dense(lo, hi)
    // for every dense sub-interval and scattered(t, sigma_t, mu) for every
    // right-scattered step in [t0, t1).
    template <typename DenseFn, typename ScatteredFn>
    void for_each_segment(double t0, double t1, DenseFn&& dense,
                          ScatteredFn&& scattered) const {
        std::size_t i = require(t0);
        require(t1);
        double cur = snap(t0);
        t1 = snap(t1);
        for (;;) {
            double seg_hi = std::min(pieces_[i].hi, t1);
            if (cur < seg_hi) {
                dense(cur, seg_hi);
                cur = seg_hi;
            }
            if (cur >= t1 - tol::membership(t1)) break;
            // cur == pieces_[i].hi < t1: right-scattered step
            double nxt = pieces_[i + 1].lo;
            scattered(cur, nxt, nxt - cur);
            cur = nxt;
            ++i;
        }
    }

    // All scale nodes in [t0, t1] that a trajectory visits: scattered points
    // and dense sub-interval endpoints, in increasing order.
    std::vector<double> nodes(double t0, double t1) const {
        std::vector<double> out{snap(t0)};
        for_each_segment(
            t0, t1, [&](double, double hi) { out.push_back(hi); },
            [&](double, double s, double) { out.push_back(s); });
        return out;
    }

    friend TimeScale normalize(std::vector<Piece> pieces, double window_lo,
                               double window_hi);

private:
    std::size_t require(double t) const {
        std::size_t i = find_piece(t);
        if (i == npos)
            throw NotInScale("point t = " + std::to_string(t) +
                             " is not in the time scale");
        return i;
    }

    std::vector<Piece> pieces_;
};

// Canonical sorted merged representation; idempotent.  Pieces are clipped to
// the window, touching/overlapping pieces are merged, and the window is
// tightened to the hull.
inline TimeScale normalize(std::vector<Piece> pieces, double window_lo,
                           double window_hi) {
    std::vector<Piece> clipped;
    for (const Piece& p : pieces) {
        double lo = std::max(p.lo, window_lo);
        double hi = std::min(p.hi, window_hi);
        if (lo <= hi) clipped.push_back({lo, hi});
    }
    if (clipped.empty())
        throw EmptyScale("no piece intersects the window");
    std::sort(clipped.begin(), clipped.end(),
              [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    std::vector<Piece> merged;
    for (const Piece& p : clipped) {
        if (!merged.empty() &&
            p.lo <= merged.back().hi + tol::membership(p.lo)) {
            merged.back().hi = std::max(merged.back().hi, p.hi);
        } else {
            merged.push_back(p);
        }
    }
    TimeScale ts;
    ts.pieces_ = std::move(merged);
    return ts;
}

inline TimeScale normalize(std::vector<Piece> pieces) {
    if (pieces.empty()) throw EmptyScale("no pieces");
    double lo = pieces.front().lo, hi = pieces.front().hi;
    for (const Piece& p : pieces) {
        lo = std::min(lo, p.lo);
        hi = std::max(hi, p.hi);
    }
    return normalize(std::move(pieces), lo, hi);
}

// Piece builders for the common grids.
inline std::vector<Piece> uniform_grid(double start, double step, int count) {
    std::vector<Piece> out;
    for (int k = 0; k <= count; ++k) out.push_back(Piece::point(start + k * step));
    return out;
}

// Geometric grid {scale * q^k : k = 0..count}, optionally including 0.
inline std::vector<Piece> q_grid(double q, double scale, int count,
                                 bool include_zero = false) {
    std::vector<Piece> out;
    double v = scale;
    for (int k = 0; k <= count; ++k) {
        out.push_back(Piece::point(v));
        v *= q;
    }
    if (include_zero) out.push_back(Piece::point(0.0));
    return out;
}

// An rd-continuous map on a time scale, given as an analytic callable.
struct GridFunction {
    TimeScale scale;
    std::function<Complex(double)> eval;
};

namespace detail {

// Adaptive Gauss-Kronrod (G7, K15) quadrature.  All nodes are interior, so
// rd-continuous integrands that jump at a right-scattered interval endpoint
// are integrated correctly without ever sampling the jump.
inline std::pair<Complex, double>
gauss_kronrod_15(const std::function<Complex(double)>& f, double a, double b) {
    static const double xk[8] = {
        0.0,
        0.2077849550078984676006894037732449,
        0.4058451513773971669066064120769615,
        0.5860872354676911302941448382587296,
        0.7415311855993944398638647732807884,
        0.8648644233597690727897127886409262,
        0.9491079123427585245261896840478513,
        0.9914553711208126392068546975263285};
    static const double wk[8] = {
        0.2094821410847278280129991748917143,
        0.2044329400752988924141619992346491,
        0.1903505780647854099132564024210137,
        0.1690047266392679028265834265985503,
        0.1406532597155259187451895905102379,
        0.1047900103222501838398763225415180,
        0.0630920926299785532907006631892043,
        0.0229353220105292249637320080589696};
    static const double wg[4] = {
        0.4179591836734693877551020408163265,
        0.3818300505051189449503697754889751,
        0.2797053914892766679014677714237796,
        0.1294849661688696932706114326790820};
    double h = 0.5 * (b - a), c = 0.5 * (a + b);
    Complex fc = f(c);
    Complex kron = wk[0] * fc;
    Complex gauss = wg[0] * fc;
    for (int i = 1; i < 8; ++i) {
        Complex fp = f(c + h * xk[i]), fm = f(c - h * xk[i]);
        kron += wk[i] * (fp + fm);
        if (i % 2 == 0) gauss += wg[i / 2] * (fp + fm);
    }
    kron *= h;
    gauss *= h;
    return {kron, std::abs(kron - gauss)};
}

inline Complex adaptive_gk(const std::function<Complex(double)>& f, double a,
                           double b, double tolerance, int depth) {
    auto [value, err] = gauss_kronrod_15(f, a, b);
    if (err <= tolerance) return value;
    if (depth <= 0)
        throw QuadratureFailure("adaptive quadrature budget exhausted on [" +
                                std::to_string(a) + ", " + std::to_string(b) + "]");
    double m = 0.5 * (a + b);
    return adaptive_gk(f, a, m, 0.5 * tolerance, depth - 1) +
           adaptive_gk(f, m, b, 0.5 * tolerance, depth - 1);
}

inline Complex integrate_dense(const std::function<Complex(double)>& f,
                               double a, double b,
                               double tolerance = tol::quad) {
    if (a == b) return 0.0;
    return adaptive_gk(f, a, b, tolerance, 40);
}

// Richardson-refined finite difference for a black-box callable at a dense
// point.  span_l/span_r bound how far the evaluation may reach.
inline Complex fd_derivative(const std::function<Complex(double)>& f, double t,
                             double span_l, double span_r) {
    bool central = span_l > 0.0;
    double h0 = central ? std::min(span_l, span_r) : span_r;
    h0 = std::min(0.5 * h0, 1e-2 * (1.0 + std::abs(t)));
    constexpr int levels = 10;
    Complex table[levels][levels];
    Complex prev = 0.0;
    double h = h0;
    for (int k = 0; k < levels; ++k, h *= 0.5) {
        table[k][0] = central ? (f(t + h) - f(t - h)) / (2.0 * h)
                              : (f(t + h) - f(t)) / h;
        double factor = central ? 4.0 : 2.0; // error ladder h^2 vs h^1
        double pow = factor;
        for (int j = 1; j <= k; ++j, pow *= factor)
            table[k][j] =
                table[k][j - 1] + (table[k][j - 1] - table[k - 1][j - 1]) / (pow - 1.0);
        if (k > 0) {
            Complex best = table[k][k];
            if (std::abs(best - prev) <= tol::fd * (1.0 + std::abs(best)))
                return best;
            prev = best;
        } else {
            prev = table[0][0];
        }
    }
    return prev;
}

} // namespace detail

inline Complex delta_derivative(const GridFunction& f, double t) {
    PointClass pc = f.scale.classify(t);
    t = f.scale.snap(t);
    if (pc.right_scattered)
        return (f.eval(f.scale.sigma(t)) - f.eval(t)) / pc.mu;
    if (pc.at_max)
        throw DegenerateAtMax("delta derivative undefined at right-dense max");
    std::size_t i = f.scale.find_piece(t);
    const Piece& p = f.scale.pieces()[i];
    return detail::fd_derivative(f.eval, t, t - p.lo, p.hi - t);
}

inline Complex nabla_derivative(const GridFunction& f, double t) {
    PointClass pc = f.scale.classify(t);
    t = f.scale.snap(t);
    if (pc.left_scattered)
        return (f.eval(t) - f.eval(f.scale.rho(t))) / pc.nu;
    if (pc.at_min)
        throw DegenerateAtMax("nabla derivative undefined at left-dense min");
    std::size_t i = f.scale.find_piece(t);
    const Piece& p = f.scale.pieces()[i];
    // mirrored finite difference: reach left, optionally right
    bool central = p.hi - t > 0.0;
    if (central)
        return detail::fd_derivative(f.eval, t, t - p.lo, p.hi - t);
    auto g = [&f, t](double s) { return f.eval(2.0 * t - s); };
    return -detail::fd_derivative(g, t, 0.0, t - p.lo);
}

// Delta integral over [a, b]: mu(t) f(t) at every right-scattered step plus
// adaptive quadrature over dense sub-intervals.
inline Complex delta_integral(const GridFunction& f, double a, double b,
                              double tolerance = tol::quad) {
    Complex acc = 0.0;
    f.scale.for_each_segment(
        a, b,
        [&](double lo, double hi) {
            acc += detail::integrate_dense(f.eval, lo, hi, tolerance);
        },
        [&](double t, double, double mu) { acc += mu * f.eval(t); });
    return acc;
}

} // namespace tscalc
