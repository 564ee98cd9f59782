#include "hkdfkit/hermite.hpp"
#include "hkdfkit/operational.hpp"

#include <doctest.h>

using namespace hkdf;

TEST_CASE("exp_diff on x^n reproduces the Hermite families") {
    for (unsigned m = 2; m <= 5; ++m) {
        for (unsigned n = 0; n <= 10; ++n) {
            MultiPoly xn = MultiPoly::monomial("x", n);
            CHECK(exp_diff(xn, "x", m, MultiPoly::variable("y")) == hkdf2(n, m));
            CHECK(umbral_hermite(n, m) == hkdf2(n, m));
        }
    }
}

TEST_CASE("exp_shift is exact Taylor shift") {
    MultiPoly p = MultiPoly::monomial("x", 3);
    MultiPoly shifted = exp_shift(p, "x", GaussianRational(Rational(1, 2)));
    MultiPoly want = p.substitute(
        "x", MultiPoly::variable("x") + MultiPoly::constant(GaussianRational(Rational(1, 2))));
    CHECK(shifted == want);
}

TEST_CASE("diff operators compose commutatively") {
    DiffOperator a = DiffOperator::partial("x", 2, GaussianRational(Rational(1, 3)));
    DiffOperator b = DiffOperator::partial("y", 1) + DiffOperator::identity();
    MultiPoly p = MultiPoly::monomial("x", 4) * MultiPoly::monomial("y", 2);
    CHECK((a * b).apply(p) == (b * a).apply(p));
    CHECK((a * b).apply(p) == a.apply(b.apply(p)));
}

TEST_CASE("umbral numbers") {
    CHECK(umbral_number(2, 0) == 1);
    CHECK(umbral_number(2, 1) == 0);
    CHECK(umbral_number(2, 4) == 12);
    CHECK(umbral_number(3, 3) == 6);
    CHECK(umbral_number(3, 4) == 0);
    CHECK(umbral_number(2, 12) == 665280);
    CHECK(UmbralSymbol{3, 6}.value() == 360);
    CHECK_THROWS_AS(umbral_number(1, 2), std::invalid_argument);
}

TEST_CASE("gaussian operator reduction") {
    GaussReduction g = gauss_operator_reduce(1, Rational(2, 3));
    CHECK(g.order == 2);
    CHECK(g.coeff == Rational(3, 8));
    // applying to x^n equals the (x, y -> 1/(4b)) Hermite value
    MultiPoly got = g.apply(MultiPoly::monomial("x", 4), "x");
    MultiPoly want = hkdf2(4, 2).substitute("y", GaussianRational(Rational(3, 8)));
    CHECK(got == want);
    CHECK(g.materialize("x", 4).apply(MultiPoly::monomial("x", 4)) == want);
    CHECK_THROWS_AS(gauss_operator_reduce(1, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(gauss_operator_reduce(2, Rational(-1)), std::domain_error);
}
