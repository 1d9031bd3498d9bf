#include <catch2/catch_amalgamated.hpp>

#include "tscalc/qcalc.hpp"

using namespace tscalc;

TEST_CASE("modified q-bracket") {
    CHECK(q_bracket(1, 0.3) == 1.0);
    CHECK(q_bracket(1, 0.9) == 1.0);
    CHECK(std::abs(q_bracket(2, 0.3) - 2.0) < 1e-15);
    CHECK(std::abs(q_bracket(2, 0.77) - 2.0) < 1e-15);
    // q -> 1 limit: {k} -> k
    for (int k : {3, 5, 8})
        CHECK(std::abs(q_bracket(k, 1.0 - 1e-10) - k) < 1e-6);
}

TEST_CASE("modified q-factorial") {
    CHECK(q_factorial(0, 0.5) == 1.0);
    CHECK(std::abs(q_factorial(2, 0.5) - 2.0) < 1e-15);
    CHECK(std::abs(q_factorial(3, 0.5) - 5.6) < 1e-14);
    // log-space path agrees with the direct product where both work
    double direct = q_factorial(150, 0.9);
    double logged = q_factorial(151, 0.9) / q_bracket(151, 0.9);
    CHECK(std::abs(direct - logged) < 1e-9 * direct);
}

TEST_CASE("q-exponential series and product") {
    QParams p(0.5);
    CHECK(q_exp_series(0.0, p) == 1.0);
    CHECK(q_exp_product(0.0, p) == 1.0);

    Complex s = q_exp_series(Complex(0.3, 0), p);
    Complex pr = q_exp_product(Complex(0.3, 0), p);
    CHECK(std::abs(s - pr) < 1e-12 * std::abs(pr));

    QParams near1(0.9999);
    CHECK(std::abs(q_exp_series(1.0, near1) - std::exp(1.0)) < 1e-3);

    // forced pole at x = 2/(1-q)
    CHECK_THROWS_AS(q_exp_product(Complex(2.0 / (1.0 - p.q), 0), p), PoleInProduct);
}

TEST_CASE("reciprocal law of the product form") {
    QParams p(0.6);
    for (Complex x : {Complex(0.8, 0), Complex(-1.1, 0), Complex(0, 1.3)})
        CHECK(std::abs(q_exp_product(x, p) * q_exp_product(-x, p) - 1.0) < 1e-13);
}

TEST_CASE("Jackson exponentials and the factorization identity") {
    QParams p(0.4);
    auto [e0, E0] = jackson_exponentials(0.0, p);
    CHECK(e0 == 1.0);
    CHECK(E0 == 1.0);

    Complex x(0.5, 0);
    auto [eq, Eq] = jackson_exponentials(0.5 * x, p);
    Complex full = q_exp_product(x, p);
    CHECK(std::abs(eq * Eq - full) < 1e-12 * std::abs(full));

    QParams near1(0.99999);
    auto [e1, E1] = jackson_exponentials(0.5, near1);
    CHECK(std::abs(e1 - std::exp(0.5)) < 1e-3);
    CHECK(std::abs(E1 - std::exp(0.5)) < 1e-3);
}

TEST_CASE("q-trigonometric functions") {
    QParams p(0.5);
    auto [c0, s0] = q_trig(0.0, p);
    CHECK(c0 == 1.0);
    CHECK(s0 == 0.0);
    auto [c, s] = q_trig(1.0, p);
    CHECK(std::abs(c * c + s * s - 1.0) < 1e-13);
    // oddness of Sin_q
    for (double x : {0.4, 1.2, 2.0})
        CHECK(std::abs(q_trig(-x, p).second + q_trig(x, p).second) < 1e-14);
}

TEST_CASE("q-derivative and q-average") {
    double q = 0.5;
    auto id = [](double x) { return Complex(x, 0); };
    CHECK(std::abs(q_derivative(id, 2.0, q) - 1.0) < 1e-15);
    CHECK(std::abs(q_derivative(id, -0.7, q) - 1.0) < 1e-15);
    auto sq = [](double x) { return Complex(x * x, 0); };
    CHECK(std::abs(q_derivative(sq, 2.0, q) - 3.0) < 1e-14); // (q+1)x
    CHECK_THROWS_AS(q_derivative(id, 0.0, q), Error);

    // D_q Sin_q = <Cos_q>
    QParams p(0.6);
    auto sin_q = [&p](double x) { return Complex(q_trig(x, p).second, 0); };
    auto cos_q = [&p](double x) { return Complex(q_trig(x, p).first, 0); };
    CHECK(std::abs(q_derivative(sin_q, 0.8, 0.6) - q_average(cos_q, 0.8, 0.6)) <
          1e-11);
    CHECK(std::abs(q_derivative(cos_q, 0.8, 0.6) + q_average(sin_q, 0.8, 0.6)) <
          1e-11);
}

TEST_CASE("QParams validation") {
    CHECK_THROWS_AS(QParams(1.0), Error);
    CHECK_THROWS_AS(QParams(0.0), Error);
    CHECK_THROWS_AS(QParams(0.5, 1e-18), Error);
}
