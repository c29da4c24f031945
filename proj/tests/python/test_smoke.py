from fractions import Fraction

import pytest

import hbe


def test_registry():
    ids = [e["id"] for e in hbe.registry()]
    assert len(ids) == 23
    assert "I-cb0" in ids


def test_verify_point():
    r = hbe.verify("I-cb0", 2)
    assert r["equal"]
    assert r["lhs"]["one"] == Fraction(17, 3)


def test_symbolic_value():
    r = hbe.verify("I-thm21", 0, m="1/2")
    assert r["equal"]
    assert r["rhs"]["text"] == "2 - 2*ln2"
    assert r["m"] == Fraction(1, 2)
    assert hbe.harmonic_exact(Fraction(1, 2))["ln2"] == -2


def test_verify_range_threads():
    one = hbe.verify_range("I-thm41", 12, ["0", "3/2"], threads=1)
    two = hbe.verify_range("I-thm41", 12, ["0", "3/2"], threads=2)
    assert all(r["equal"] for r in one)
    assert [(r["m"], r["n"], r["lhs"]["text"]) for r in one] == [
        (r["m"], r["n"], r["lhs"]["text"]) for r in two
    ]


def test_recursions():
    assert hbe.u_rec(1, 2) == Fraction(22, 3)
    assert hbe.v_rec(2, 5) == hbe.v_direct(2, 5)
    fit = hbe.fit_structure(2)
    assert fit["residual_ok"]
    assert fit["p"] == [-1, 12, 15]
    assert fit["c"] == 346


def test_numeric():
    r = hbe.verify_numeric("I-thm51", 0.37, 7)
    assert r["pass"]
    assert abs(hbe.digamma(1.0) + 0.5772156649015329) < 1e-14
    assert hbe.derivative_check("central-sum", 1.3) < 1e-5
    assert hbe.half_integer_order2_gate()


def test_errors():
    with pytest.raises(ValueError):
        hbe.verify("I-chujin", 3, m="0")
    with pytest.raises(hbe.PoleError):
        hbe.digamma(-2.0)
    with pytest.raises(ValueError):
        hbe.verify("I-unknown", 1)
