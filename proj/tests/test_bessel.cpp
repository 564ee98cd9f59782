#include "hkdfkit/bessel.hpp"

#include <doctest.h>

#include <cmath>

using namespace hkdf;

TEST_CASE("reference values") {
    CHECK(bessel_j(0, 1.0).value == doctest::Approx(0.7651976865579666).epsilon(1e-13));
    CHECK(bessel_j(1, 1.0).value == doctest::Approx(0.4400505857449335).epsilon(1e-13));
    CHECK(bessel_i(0, 1.0).value == doctest::Approx(1.2660658777520082).epsilon(1e-13));
    CHECK(bessel_j(-2, 3.0).value == doctest::Approx(bessel_j(2, 3.0).value));
    CHECK(bessel_j(-3, 3.0).value == doctest::Approx(-bessel_j(3, 3.0).value));
    CHECK(bessel_i(-2, 3.0).value == doctest::Approx(bessel_i(2, 3.0).value));
}

TEST_CASE("y = 0 reductions") {
    for (int n = 0; n <= 4; ++n) {
        double jn = bessel_j(n, 1.3).value;
        CHECK(std::abs(bessel_2var(n, 1.3, 0.0).value - jn) < 1e-12);
        CHECK(std::abs(ji4(n, 1.3, 0.0).value - jn) < 1e-12);
        CHECK(std::abs(hermite_bessel(n, 1.3, 0.0).value - jn) < 1e-12);
    }
}

TEST_CASE("frozen regressions") {
    SeriesValue a = ji4(1, 1.0, 0.125, SeriesTruncation{20});
    CHECK(a.value == doctest::Approx(0.4405617508883263).epsilon(1e-14));
    SeriesValue b = hermite_bessel(0, 1.0, -0.25, SeriesTruncation{25});
    CHECK(b.value == doctest::Approx(0.8541767533144824).epsilon(1e-14));
}

TEST_CASE("fourier generating function oracle") {
    for (int n = -2; n <= 3; ++n) {
        Complex f2 = fourier_gen_2var(n, 0.8, 0.4);
        CHECK(std::abs(f2.real() - bessel_2var(n, 0.8, 0.4).value) < 1e-10);
        CHECK(std::abs(f2.imag()) < 1e-10);
        Complex f4 = fourier_gen_ji4(n, 0.8, 0.2);
        CHECK(std::abs(f4.real() - ji4(n, 0.8, 0.2).value) < 1e-10);
        CHECK(std::abs(f4.imag()) < 1e-10);
    }
}

TEST_CASE("hermite recurrence values") {
    std::vector<double> h = hermite_values(4, 1.5, -0.5);
    CHECK(h[0] == 1.0);
    CHECK(h[1] == 1.5);
    // H_2 = x^2 + 2y, H_3 = x^3 + 6xy, H_4 = x^4 + 12x^2 y + 12 y^2
    CHECK(h[2] == doctest::Approx(1.25));
    CHECK(h[3] == doctest::Approx(-1.125));
    CHECK(h[4] == doctest::Approx(-5.4375));
}

TEST_CASE("gauss integral of the two-variable bessel") {
    IntegralResult r = bessel_gauss_integral(2, 1.0, 1.0);
    CHECK(r.converged);
    CHECK(r.pass);
    CHECK(r.relative_discrepancy < 1e-6);
}

TEST_CASE("hermite-bessel product integral") {
    IntegralResult r = jgh_integral(2, 1, 0.5, 1.0, 1.0);
    CHECK(r.converged);
    CHECK(r.pass);
    CHECK(r.relative_discrepancy < 1e-5);
}

TEST_CASE("truncation too aggressive throws") {
    CHECK_THROWS_AS(bessel_j(0, 100.0, SeriesTruncation{3}), std::domain_error);
}

TEST_CASE("tail bound dominates refinement delta") {
    for (unsigned K : {15u, 20u, 25u}) {
        SeriesValue coarse = ji4(1, 1.2, 0.3, SeriesTruncation{K});
        SeriesValue fine = ji4(1, 1.2, 0.3, SeriesTruncation{2 * K});
        CHECK(std::abs(fine.value - coarse.value) <= coarse.tail_bound + 1e-15);
    }
}
