#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

#include <functional>
#include <vector>

#include "tscalc/core.hpp"
#include "tscalc/timescale.hpp"

namespace tscalc {

using Matrix = Eigen::MatrixXcd;

// Quadratic matrix Lie group {X : X* J X = J} for a fixed invertible J;
// star is the transpose over the reals and the conjugate transpose over C.
struct QuadraticGroupSpec {
    int n = 1;
    Matrix J;
    bool complex_field = false;

    Matrix star(const Matrix& x) const {
        return complex_field ? Matrix(x.adjoint()) : Matrix(x.transpose());
    }

    static QuadraticGroupSpec orthogonal(int n) {
        return {n, Matrix::Identity(n, n), false};
    }
    static QuadraticGroupSpec unitary(int n) {
        return {n, Matrix::Identity(n, n), true};
    }
    static QuadraticGroupSpec symplectic(int n) {
        if (n % 2 != 0) throw Error("symplectic group needs even dimension");
        Matrix j = Matrix::Zero(n, n);
        int m = n / 2;
        j.block(0, m, m, m) = Matrix::Identity(m, m);
        j.block(m, 0, m, m) = -Matrix::Identity(m, m);
        return {n, j, false};
    }
};

struct LieFlowProblem {
    QuadraticGroupSpec group;
    std::function<Matrix(double)> A; // algebra-valued coefficient
    Matrix Phi0;
    TimeScale scale;
};

struct FlowSample {
    double t;
    Matrix Phi;
    double defect;
};

// Frobenius-norm defect of the quadratic-group condition Phi* J Phi = J.
inline double membership_defect(const QuadraticGroupSpec& group,
                                const Matrix& Phi) {
    return (group.star(Phi) * group.J * Phi - group.J).norm();
}

inline double algebra_defect(const QuadraticGroupSpec& group, const Matrix& A) {
    return (group.star(A) * group.J + group.J * A).norm();
}

// Matrix Cayley transform (I - mu A/2)^{-1} (I + mu A/2), via LU factorization
// with one step of residual refinement.
inline Matrix cayley_matrix(const Matrix& A, double mu) {
    int n = static_cast<int>(A.rows());
    Matrix M = Matrix::Identity(n, n) - 0.5 * mu * A;
    Matrix B = Matrix::Identity(n, n) + 0.5 * mu * A;
    Eigen::PartialPivLU<Matrix> lu(M);
    if (lu.rcond() < tol::regressive)
        throw SingularCayley("I - mu A / 2 is numerically singular");
    Matrix X = lu.solve(B);
    X += lu.solve(B - M * X);
    return X;
}

namespace detail {

inline bool constant_on(const std::function<Matrix(double)>& A, double lo,
                        double hi) {
    Matrix a = A(lo);
    double scale = 1.0 + a.norm();
    return (A(0.5 * (lo + hi)) - a).norm() < 1e-13 * scale &&
           (A(hi) - a).norm() < 1e-13 * scale;
}

// Composed small Cayley steps over a dense interval with non-constant A;
// halves the substep until the Richardson difference is below tolerance.
inline Matrix dense_cayley_compose(const std::function<Matrix(double)>& A,
                                   const Matrix& Phi, double lo, double hi,
                                   double tolerance) {
    auto sweep = [&](int steps) {
        Matrix p = Phi;
        double h = (hi - lo) / steps;
        for (int i = 0; i < steps; ++i) {
            double tm = lo + (i + 0.5) * h; // midpoint sampling, O(h^2) local
            p = cayley_matrix(A(tm), h) * p;
        }
        return p;
    };
    Matrix coarse = sweep(16);
    for (int steps = 32; steps <= (1 << 22); steps *= 2) {
        Matrix fine = sweep(steps);
        if ((fine - coarse).norm() < tolerance * (1.0 + fine.norm()))
            return fine;
        coarse = std::move(fine);
    }
    throw SolverDiverged("dense Cayley composition did not reach tolerance");
}

} // namespace detail

// Flow of Phi^Delta = A <Phi>: Cayley steps at scattered points, matrix
// exponential (constant A) or composed small Cayley steps on dense intervals.
inline std::vector<FlowSample> flow(const LieFlowProblem& problem, double t0,
                                    double t1) {
    const QuadraticGroupSpec& g = problem.group;
    auto check_algebra = [&](const Matrix& a, double t) {
        if (algebra_defect(g, a) > tol::algebra * (1.0 + a.norm()))
            throw AlgebraViolation("A(t) fails the algebra condition at t = " +
                                   std::to_string(t));
    };
    if (membership_defect(g, problem.Phi0) > tol::group * (1.0 + problem.Phi0.norm()))
        throw AlgebraViolation("Phi0 is not a group element");
    std::vector<FlowSample> out;
    Matrix Phi = problem.Phi0;
    out.push_back({problem.scale.snap(t0), Phi, membership_defect(g, Phi)});
    problem.scale.for_each_segment(
        t0, t1,
        [&](double lo, double hi) {
            if (detail::constant_on(problem.A, lo, hi)) {
                Matrix a = problem.A(lo);
                check_algebra(a, lo);
                Phi = (((hi - lo) * a).exp() * Phi).eval();
            } else {
                check_algebra(problem.A(lo), lo);
                check_algebra(problem.A(hi), hi);
                Phi = detail::dense_cayley_compose(problem.A, Phi, lo, hi,
                                                   tol::dense * 100.0);
            }
            out.push_back({hi, Phi, membership_defect(g, Phi)});
        },
        [&](double tt, double ss, double mu) {
            Matrix a = problem.A(tt);
            check_algebra(a, tt);
            Phi = (cayley_matrix(a, mu) * Phi).eval();
            out.push_back({ss, Phi, membership_defect(g, Phi)});
        });
    return out;
}

} // namespace tscalc
