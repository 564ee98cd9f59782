import math

import hkdfkit as hk


def test_family_construction():
    p = hk.hkdf2(2, 2)
    assert str(p) in ("(2)*y + (1)*x^2", "(1)*x^2 + (2)*y")
    assert p == hk.family("hkdf2:n=2,m=2")
    assert hk.hkdf2(4, 4).eval({"x": 1.0, "y": 0.0}) == 1.0


def test_heat_equation():
    for m in (2, 3, 4):
        h = hk.hkdf2(7, m)
        assert (h.diff("y") - h.diff("x", m)).is_zero()


def test_operational_equivalence():
    xn = hk.Poly.variable("x")
    x5 = xn * xn * xn * xn * xn
    assert hk.exp_diff(x5, "x", 2, "1/4") == hk.hkdf2(5, 2).substitute("y", "1/4")
    assert hk.umbral_hermite(6, 3) == hk.hkdf2(6, 3)


def test_umbral_numbers():
    assert [hk.umbral_number(2, r) for r in range(7)] == ["1", "0", "2", "0", "12", "0", "120"]


def test_json_round_trip():
    p = hk.two_index(2, 2)
    assert hk.Poly.from_json(p.to_json()) == p


def test_integral_verify():
    r = hk.verify_integral("GAUSS_1D_Y", {"n": 4}, {"x": "1", "b": "1"})
    assert r["pass"]
    assert abs(r["closed_form"].real - 7 * math.sqrt(math.pi)) < 1e-10
    assert r["relative_discrepancy"] < 1e-8


def test_bessel():
    v, tail = hk.bessel_j(0, 1.0)
    assert abs(v - 0.7651976865579666) < 1e-12
    assert tail < 1e-30
    v4, _ = hk.ji4(2, 1.3, 0.0)
    vj, _ = hk.bessel_j(2, 1.3)
    assert abs(v4 - vj) < 1e-12


def test_suites_exposed():
    assert "heat" in hk.suite_names()
    checks = hk.run_suite("heat")
    assert checks and all(ok for (_, _, ok, _) in checks)
