#include "hkdfkit/gauss_integrals.hpp"

#include <doctest.h>

#include <cmath>

using namespace hkdf;

namespace {
ParamSet gauss1d(unsigned n, const char* x, const char* b) {
    ParamSet ps;
    ps.indices["n"] = n;
    ps.scalars["x"] = gaussian_from_string(x);
    ps.scalars["b"] = gaussian_from_string(b);
    return ps;
}
}  // namespace

TEST_CASE("id round trip") {
    for (IntegralId id : all_integral_ids()) {
        CHECK(integral_id_from_string(to_string(id)) == id);
    }
    CHECK_THROWS_AS(integral_id_from_string("NOPE"), std::invalid_argument);
}

TEST_CASE("gauss1d closed forms by hand") {
    const double sqrt_pi = std::sqrt(M_PI);
    // n = 0: plain Gaussian mass
    CHECK(std::abs(closed_form(IntegralId::Gauss1dY, gauss1d(0, "1", "1")) - sqrt_pi) < 1e-14);
    // n = 2: the odd y term integrates to zero, leaving x^2 * sqrt(pi)
    CHECK(std::abs(closed_form(IntegralId::Gauss1dY, gauss1d(2, "1", "1")) - sqrt_pi) < 1e-14);
    // n = 4: sqrt(pi) * (x^4 + 24/(4b)) = 7 sqrt(pi) at x = b = 1
    CHECK(std::abs(closed_form(IntegralId::Gauss1dY, gauss1d(4, "1", "1")) - 7 * sqrt_pi) <
          1e-13);
}

TEST_CASE("closed form splits into exact family value and prefactor") {
    ClosedForm cf = closed_form_detail(IntegralId::Gauss1dY, gauss1d(4, "1/2", "2"));
    // H_4^(4)(1/2, 1/8) = (1/2)^4 + 24/8 = 49/16, exactly
    CHECK(cf.exact_value == GaussianRational(Rational(49, 16)));
    CHECK(std::abs(cf.prefactor - std::sqrt(M_PI / 2.0)) < 1e-15);
}

TEST_CASE("oracle agrees on a few pinned instances") {
    struct Row {
        IntegralId id;
        ParamSet ps;
    };
    std::vector<Row> rows;
    rows.push_back({IntegralId::Gauss1dY, gauss1d(5, "3/4", "1/2")});
    {
        ParamSet ps;
        ps.indices["n"] = 3;
        ps.scalars["d1"] = gaussian_from_string("1/2");
        ps.scalars["d2"] = gaussian_from_string("-1/4");
        ps.scalars["y"] = gaussian_from_string("1/3");
        ps.scalars["a"] = gaussian_from_string("1");
        ps.scalars["b"] = gaussian_from_string("2");
        rows.push_back({IntegralId::Complex2d, ps});
    }
    {
        ParamSet ps;
        ps.indices["m"] = 2;
        ps.indices["n"] = 2;
        ps.scalars["x"] = gaussian_from_string("1");
        ps.scalars["z"] = gaussian_from_string("-1/2");
        ps.scalars["tau"] = gaussian_from_string("1/4");
        ps.scalars["a"] = gaussian_from_string("1");
        ps.scalars["b"] = gaussian_from_string("3/2");
        rows.push_back({IntegralId::TwoIndex2d, ps});
    }
    for (const auto& row : rows) {
        IntegralResult r =
            verify(row.id, row.ps, default_quadrature_config(row.id), default_rel_tol(row.id));
        CHECK(r.converged);
        CHECK(r.pass);
        CHECK(r.relative_discrepancy < default_rel_tol(row.id));
    }
}

TEST_CASE("parameter validation") {
    ParamSet ps = gauss1d(2, "1", "1");
    ps.scalars.erase("b");
    CHECK_THROWS_AS(check_params(IntegralId::Gauss1dY, ps), std::invalid_argument);

    ps = gauss1d(2, "1", "0");  // weight must have positive real part
    CHECK_THROWS_AS(check_params(IntegralId::Gauss1dY, ps), std::invalid_argument);

    ps = gauss1d(2, "1", "1");
    ps.scalars["extra"] = gaussian_from_string("1");
    CHECK_THROWS_AS(check_params(IntegralId::Gauss1dY, ps), std::invalid_argument);

    ps = gauss1d(2, "1", "1");
    ps.indices.erase("n");
    CHECK_THROWS_AS(check_params(IntegralId::Gauss1dY, ps), std::invalid_argument);
}
