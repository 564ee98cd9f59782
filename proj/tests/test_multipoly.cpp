#include "hkdfkit/multipoly.hpp"

#include <doctest.h>

#include <random>

using namespace hkdf;

namespace {

MultiPoly random_poly(std::mt19937_64& rng) {
    static const char* names[3] = {"x", "y", "z"};
    MultiPoly p;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < terms; ++t) {
        MultiPoly mono = MultiPoly::constant(GaussianRational(
            Rational(static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 3)),
            Rational(static_cast<long>(rng() % 5) - 2)));
        for (int v = 0; v < 3; ++v) {
            unsigned e = rng() % 3;
            if (e) mono = mono * MultiPoly::monomial(names[v], e);
        }
        p += mono;
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rational_from_string("3/4") == Rational(3, 4));
    CHECK(rational_from_string("-1.25") == Rational(-5, 4));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK(to_fraction_string(Rational(-6, 4)) == "-3/2");
    CHECK(rational_from_double(0.125) == Rational(1, 8));
    CHECK(rational_from_double(0.1) != Rational(1, 10));  // 0.1 is not dyadic
}

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a(Rational(1, 2), Rational(3));
    GaussianRational b(Rational(2), Rational(-1, 3));
    CHECK((a * b).re == Rational(2));                    // 1 + 1
    CHECK((a * a.conj()).im == 0);
    CHECK(a / a == GaussianRational(1));
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK(gaussian_from_string("1/2+3i") == a);
    CHECK(gaussian_from_string("-2i") == GaussianRational(Rational(0), Rational(-2)));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MultiPoly::zero());
        CHECK(a * MultiPoly::constant(GaussianRational(1)) == a);
        CHECK((a * MultiPoly::zero()).is_zero());
    }
}

TEST_CASE("differentiation commutes and is linear") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng);
        CHECK(a.diff("x").diff("y") == a.diff("y").diff("x"));
        CHECK((a + b).diff("x") == a.diff("x") + b.diff("x"));
        CHECK((a * b).diff("z") == a.diff("z") * b + a * b.diff("z"));
        CHECK(a.diff("x", 2) == a.diff("x").diff("x"));
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    std::mt19937_64 rng(13);
    std::map<std::string, Complex> at{{"x", {0.5, 0.25}}, {"y", {-1.5, 0.0}}, {"z", {2.0, -0.5}}};
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly a = random_poly(rng), b = random_poly(rng);
        // align() may widen the registry, so evaluate sums/products with the
        // full assignment
        Complex lhs = (a * b + a).eval(at);
        Complex rhs = a.eval(at) * b.eval(at) + a.eval(at);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("exact evaluation matches substitution") {
    MultiPoly p = MultiPoly::monomial("x", 2) + MultiPoly::monomial("y", 1, GaussianRational(2));
    std::map<std::string, GaussianRational> at{{"x", GaussianRational(Rational(1, 2))},
                                               {"y", GaussianRational(Rational(-1, 8))}};
    CHECK(p.eval_exact(at) == GaussianRational(Rational(0)));
}

TEST_CASE("substitute composes exactly") {
    MultiPoly p = MultiPoly::monomial("x", 3);
    MultiPoly repl = MultiPoly::variable("u") + MultiPoly::constant(GaussianRational(1));
    MultiPoly q = p.substitute("x", repl);
    // (u+1)^3
    MultiPoly want = repl * repl * repl;
    CHECK(q == want);
}

TEST_CASE("coefficient_of and truncation") {
    MultiPoly p = hkdf::MultiPoly::monomial("t", 2, GaussianRational(Rational(1, 2))) *
                      MultiPoly::variable("x") +
                  MultiPoly::monomial("t", 5);
    CHECK(p.coefficient_of("t", 2) ==
          MultiPoly::monomial("x", 1, GaussianRational(Rational(1, 2))));
    CHECK(p.truncate_in("t", 4) ==
          MultiPoly::monomial("t", 2, GaussianRational(Rational(1, 2))) *
              MultiPoly::variable("x"));
    CHECK(p.truncate_total(3).is_zero() == false);  // the t^2 x term has total degree 3
    CHECK(p.truncate_total(2).is_zero());
}

TEST_CASE("json round trip is bit exact") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        MultiPoly a = random_poly(rng);
        CHECK(MultiPoly::from_json(a.to_json()) == a);
    }
}

TEST_CASE("missing variable in assignment throws") {
    MultiPoly p = MultiPoly::variable("x") + MultiPoly::variable("y");
    CHECK_THROWS_AS(p.eval({{"x", Complex(1.0, 0.0)}}), std::invalid_argument);
}
