#include "hkdfkit/hermite.hpp"

#include <doctest.h>

using namespace hkdf;

namespace {
MultiPoly X(const char* v, unsigned k = 1, long c = 1) {
    return MultiPoly::monomial(v, k, GaussianRational(c));
}
}  // namespace

TEST_CASE("two-variable families, small closed forms") {
    CHECK(hkdf2(0, 2) == MultiPoly::constant(GaussianRational(1)));
    CHECK(hkdf2(1, 2) == X("x"));
    CHECK(hkdf2(2, 2) == X("x", 2) + X("y", 1, 2));
    CHECK(hkdf2(3, 2) == X("x", 3) + X("x") * X("y", 1, 6));
    CHECK(hkdf2(3, 3) == X("x", 3) + X("y", 1, 6));
    CHECK(hkdf2(4, 4) == X("x", 4) + X("y", 1, 24));
    CHECK(hkdf2(5, 4) == X("x", 5) + X("x") * X("y", 1, 120));
}

TEST_CASE("multi-variable family") {
    // H_3 in three variables: x1^3 + 6 x1 x2 + 6 x3
    MultiPoly h = hkdf_multi(3, 3);
    CHECK(h == X("x1", 3) + X("x1") * X("x2", 1, 6) + X("x3", 1, 6));
    // m = 2 coincides with the (x, y) family up to naming
    CHECK(hkdf_multi(4, 2) == hkdf2(4, 2, "x1", "x2"));
}

TEST_CASE("two-index and incomplete families") {
    CHECK(two_index(1, 1) == X("x") * X("z") + X("tau"));
    CHECK(incomplete(2, 1) == X("x", 2) * X("z") + X("x") * X("tau", 1, 2));
    // h_{m,n} is two_index at y = w = 0
    for (unsigned m = 0; m <= 4; ++m) {
        for (unsigned n = 0; n <= 4; ++n) {
            CHECK(two_index(m, n)
                      .substitute("y", GaussianRational(0))
                      .substitute("w", GaussianRational(0)) == incomplete(m, n));
        }
    }
}

TEST_CASE("composite family slices") {
    CHECK(composite(2, 2, 4, 4, 2) ==
          X("x1", 2) * X("x3", 2) + X("tau", 1, 4));
    // tau = 0 factorizes into the two independent families
    MultiPoly f = composite(3, 2, 4, 4, 1).substitute("tau", GaussianRational(0));
    MultiPoly want = hkdf2(3, 4, "x1", "x2") * hkdf2(2, 4, "x3", "x4");
    CHECK(f == want);
}

TEST_CASE("classical polynomials") {
    CHECK(classical(2, Classical::He) == X("x", 2) - MultiPoly::constant(GaussianRational(1)));
    CHECK(classical(3, Classical::He) == X("x", 3) - X("x", 1, 3));
    CHECK(classical(2, Classical::HPhys) ==
          X("x", 2, 4) - MultiPoly::constant(GaussianRational(2)));
    CHECK(classical(3, Classical::HPhys) == X("x", 3, 8) - X("x", 1, 12));
}

TEST_CASE("ladder operators") {
    for (unsigned n = 1; n <= 8; ++n) {
        CHECK(ladder_lower(hkdf2(n, 2), n) == hkdf2(n - 1, 2));
        CHECK(ladder_raise(hkdf2(n, 2)) == hkdf2(n + 1, 2));
    }
}

TEST_CASE("family ids") {
    CHECK(family_from_id("hkdf2:n=2,m=2") == hkdf2(2, 2));
    CHECK(family_from_id("two_index:m=1,n=1") == two_index(1, 1));
    CHECK(family_from_id("classical:n=2,kind=He") == classical(2, Classical::He));
    CHECK(family_from_id("composite:m=2,n=2,p=4,q=4,s=2") == composite(2, 2, 4, 4, 2));
    CHECK_THROWS_AS(family_from_id("nope:n=1"), std::invalid_argument);
    CHECK_THROWS_AS(family_from_id("hkdf2:n=1"), std::invalid_argument);
    CHECK_THROWS_AS(family_from_id("classical:n=1,kind=Q"), std::invalid_argument);
}
