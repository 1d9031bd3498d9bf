#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "tscalc/expfun.hpp"

using namespace tscalc;

TEST_CASE("cylinder transformation") {
    CHECK(cylinder(0.0, Complex(3, 4)) == Complex(3, 4));
    CHECK(cylinder(1.0, 0.0) == 0.0);
    CHECK(std::abs(cylinder(1.0, 1.0).real() - 1.0986122886681098) < 1e-15);
    CHECK_THROWS_AS(cylinder(1.0, 2.0), NotRegressive);
    CHECK_THROWS_AS(cylinder(1.0, -2.0), NotRegressive);
}

TEST_CASE("alpha/beta bijection") {
    CHECK(alpha_to_beta(1.0, 1.0) == Complex(2, 0));
    CHECK(alpha_to_beta(Complex(0.3, 0.7), 0.0) == Complex(0.3, 0.7));
    Complex beta(0.7, 0.0);
    CHECK(std::abs(alpha_to_beta(beta_to_alpha(beta, 0.3), 0.3) - beta) < 1e-15);
    CHECK_THROWS_AS(alpha_to_beta(2.0, 1.0), NotRegressive);
}

TEST_CASE("circle plus") {
    CHECK(circle_plus(0.0, 0.0, 1.7) == 0.0);
    CHECK(circle_plus(1.0, 1.0, 2.0) == Complex(1, 0));
    Complex a(0.3, -0.2), b(1.1, 0.4);
    CHECK(circle_plus(a, b, 0.0) == a + b);
    // commutative
    CHECK(circle_plus(a, b, 0.7) == circle_plus(b, a, 0.7));
    // 1 + mu^2 a b / 4 = 0
    CHECK_THROWS_AS(circle_plus(1.0, -1.0, 2.0), SingularOplus);
}

TEST_CASE("Pade coefficients match the printed special cases") {
    const PadeApproximant& p11 = pade_coefficients(1, 1);
    CHECK(p11.p_coeffs == std::vector<double>{1.0, 0.5});
    CHECK(p11.q_coeffs == std::vector<double>{1.0, -0.5});

    const PadeApproximant& p22 = pade_coefficients(2, 2);
    CHECK(p22.p_coeffs == std::vector<double>{1.0, 0.5, 1.0 / 12.0});
    CHECK(p22.q_coeffs == std::vector<double>{1.0, -0.5, 1.0 / 12.0});

    const PadeApproximant& p10 = pade_coefficients(1, 0);
    CHECK(p10.p_coeffs == std::vector<double>{1.0, 1.0});
    CHECK(p10.q_coeffs == std::vector<double>{1.0});

    CHECK_THROWS_AS(pade_coefficients(7, 6), OrderTooLarge);
    CHECK_THROWS_AS(pade_coefficients(0, 0), OrderTooLarge);
}

TEST_CASE("Pade approximant agrees with e^x through order j+k") {
    // independent oracle: halving x must shrink the defect by ~2^(j+k+1);
    // the ratio itself converges like 1 + O(x), so extrapolate from two
    // halvings at x values where the defect still dominates roundoff
    for (auto [j, k] : {std::pair{2, 1}, std::pair{3, 2}, std::pair{3, 3}}) {
        auto r = [&](double x) {
            return std::abs(
                step_factor(ExpScheme::pade(j, k), x, x, 1.0) - std::exp(x));
        };
        double ratio = 2.0 * r(0.2) / r(0.1) - r(0.4) / r(0.2);
        CHECK(ratio == Catch::Approx(std::pow(2.0, j + k + 1)).epsilon(0.05));
    }
}

TEST_CASE("step factors") {
    CHECK(step_factor(ExpScheme::cayley(), 1.0, 1.0, 1.0) == Complex(3, 0));
    CHECK(step_factor(ExpScheme::delta(), 1.0, 1.0, 1.0) == Complex(2, 0));
    CHECK(step_factor(ExpScheme::nabla(), 0.0, 0.5, 1.0) == Complex(2, 0));
    CHECK_THROWS_AS(step_factor(ExpScheme::nabla(), 0.0, 1.0, 1.0), NotRegressive);
    CHECK_THROWS_AS(step_factor(ExpScheme::cayley(), 2.0, 2.0, 1.0), NotRegressive);
}

TEST_CASE("scheme coincidence is bit-for-bit on step_factor") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int i = 0; i < 50; ++i) {
        Complex a(u(rng), u(rng));
        double mu = 0.5 + 0.5 * std::abs(u(rng));
        CHECK(step_factor(ExpScheme::pade(1, 0), a, a, mu) ==
              step_factor(ExpScheme::delta(), a, a, mu));
        CHECK(step_factor(ExpScheme::pade(0, 1), a, a, mu) ==
              step_factor(ExpScheme::nabla(), a, a, mu));
        CHECK(step_factor(ExpScheme::pade(1, 1), a, a, mu) ==
              step_factor(ExpScheme::cayley(), a, a, mu));
    }
}

TEST_CASE("eval_exp on scattered scales") {
    TimeScale z2 = normalize(uniform_grid(0, 1, 2));
    CoefficientFunction one(1.0);
    CHECK(std::abs(eval_exp(ExpScheme::cayley(), one, z2, 2, 0) - 9.0) < 1e-14);
    CHECK(eval_exp(ExpScheme::cayley(), one, z2, 0, 0) == 1.0);

    TimeScale ts = normalize({Piece::point(0), Piece::point(0.5), Piece::point(1.5)});
    // (1.25/0.75)*(1.5/0.5) = 5
    CHECK(std::abs(eval_exp(ExpScheme::cayley(), one, ts, 1.5, 0) - 5.0) < 1e-14);
}

TEST_CASE("eval_exp matches repeated step factors") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    std::vector<Piece> pieces;
    double t = 0;
    for (int i = 0; i < 8; ++i) {
        pieces.push_back(Piece::point(t));
        t += 0.3 + 0.5 * std::abs(u(rng));
    }
    TimeScale ts = normalize(pieces);
    CoefficientFunction alpha([](double s) { return Complex(0.4 * std::sin(s), 0.2); });
    for (ExpScheme sch : {ExpScheme::delta(), ExpScheme::nabla(),
                          ExpScheme::cayley(), ExpScheme::pade(2, 2)}) {
        Complex prod = 1.0;
        for (std::size_t i = 0; i + 1 < ts.pieces().size(); ++i) {
            double a = ts.pieces()[i].lo, b = ts.pieces()[i + 1].lo;
            prod *= step_factor(sch, alpha.eval(a), alpha.eval(b), b - a);
        }
        CHECK(std::abs(eval_exp(sch, alpha, ts, ts.max(), 0) - prod) <
              1e-13 * std::abs(prod));
    }
}

TEST_CASE("backward evaluation is the reciprocal path product") {
    TimeScale ts = normalize({Piece::point(0), Piece::interval(0.5, 1.0),
                              Piece::point(2)});
    CoefficientFunction alpha(Complex(0.3, 0.4));
    Complex fwd = eval_exp(ExpScheme::cayley(), alpha, ts, 2, 0);
    Complex bwd = eval_exp(ExpScheme::cayley(), alpha, ts, 0, 2);
    CHECK(std::abs(fwd * bwd - 1.0) < 1e-14);
}

TEST_CASE("conjugation symmetry") {
    TimeScale ts = normalize({Piece::point(0), Piece::point(0.7),
                              Piece::interval(1.0, 1.6), Piece::point(2.1)});
    CoefficientFunction alpha([](double t) { return Complex(0.3 * t, 0.5 - 0.2 * t); });
    CoefficientFunction alpha_bar(
        [](double t) { return std::conj(Complex(0.3 * t, 0.5 - 0.2 * t)); });
    for (ExpScheme sch : {ExpScheme::delta(), ExpScheme::cayley(),
                          ExpScheme::pade(2, 2)}) {
        Complex e = eval_exp(sch, alpha, ts, 2.1, 0);
        Complex ec = eval_exp(sch, alpha_bar, ts, 2.1, 0);
        CHECK(std::abs(std::conj(e) - ec) < 1e-14 * std::abs(e));
    }
}

TEST_CASE("delta/nabla exponentials violate the inverse law on scattered scales") {
    TimeScale z3 = normalize(uniform_grid(0, 1, 3));
    CoefficientFunction one(1.0), mone(-1.0);
    Complex e = eval_exp(ExpScheme::delta(), one, z3, 3, 0);
    Complex em = eval_exp(ExpScheme::delta(), mone, z3, 3, 0);
    CHECK(std::abs(e * em - 1.0) > 1e-3);
}

TEST_CASE("exact scheme") {
    CHECK(exact_psi(Complex(1, 0), 0.0) == 1.0);
    CHECK(std::abs(exact_psi(Complex(1e-12, 0), 1.0) - 1.0) < 1e-12);
    CHECK(std::abs(exact_psi(Complex(1, 0), 1.0).real() - 2.0 * std::tanh(0.5)) <
          1e-15);

    TimeScale ts = normalize({Piece::point(0), Piece::point(1), Piece::point(2.5)});
    CoefficientFunction alpha(Complex(0.4, 0.3));
    Complex e = eval_exp(ExpScheme::exact(), alpha, ts, 2.5, 0);
    CHECK(std::abs(e - std::exp(Complex(0.4, 0.3) * 2.5)) < 1e-15 * std::abs(e));

    CoefficientFunction nonconst([](double t) { return Complex(t, 0); });
    CHECK_THROWS_AS(eval_exp(ExpScheme::exact(), nonconst, ts, 2.5, 0), Error);
}

TEST_CASE("exact exponential satisfies the psi identity") {
    TimeScale ts = normalize({Piece::point(0), Piece::point(0.8), Piece::point(1.3),
                              Piece::point(2.4)});
    Complex alpha(0.7, -0.4);
    CoefficientFunction af(alpha);
    for (std::size_t i = 0; i + 1 < ts.pieces().size(); ++i) {
        double t = ts.pieces()[i].lo;
        double s = ts.pieces()[i + 1].lo;
        double mu = s - t;
        Complex x = eval_exp(ExpScheme::exact(), af, ts, t, 0);
        Complex xs = eval_exp(ExpScheme::exact(), af, ts, s, 0);
        Complex lhs = (xs - x) / mu;
        Complex rhs = alpha * exact_psi(alpha, mu) * 0.5 * (x + xs);
        CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(lhs));
    }
}

TEST_CASE("local error expansions") {
    LeadingErrorTerm cayley = local_error_expansion(ExpScheme::cayley());
    CHECK(cayley.order == 3);
    CHECK(cayley.coefficient == 1.0 / 12.0);

    LeadingErrorTerm delta = local_error_expansion(ExpScheme::delta());
    CHECK(delta.order == 2);
    CHECK(delta.coefficient == -0.5);

    LeadingErrorTerm nabla = local_error_expansion(ExpScheme::nabla());
    CHECK(nabla.order == 2);
    CHECK(nabla.coefficient == 0.5);

    CHECK(local_error_expansion(ExpScheme::pade(2, 2)).order == 5);
    CHECK(local_error_expansion(ExpScheme::exact()).order == 0);
}

TEST_CASE("unit circle property of symmetric schemes") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 100; ++i) {
        Complex iw(0.0, u(rng));
        double mu = 0.1 + std::abs(u(rng)) / 3.0;
        for (ExpScheme sch : {ExpScheme::cayley(), ExpScheme::pade(2, 2)})
            CHECK(std::abs(std::abs(step_factor(sch, iw, iw, mu)) - 1.0) < 1e-13);
    }
}
