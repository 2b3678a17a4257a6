from fractions import Fraction

import pytest

from holant.scalar import (
    Approx, BackendError, Exact, I, exact_sqrt, format_scalar, parse_scalar, scalar,
)


def test_exact_field_ops():
    a = Exact(Fraction(1, 2), 3)
    b = Exact(-2, Fraction(1, 3))
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert I * I == -1
    assert (1 / I) == -I


def test_exact_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Exact(1) / Exact(0)


def test_approx_tolerance():
    assert Approx(1.0) == Approx(1.0 + 1e-12)
    assert Approx(1.0) != Approx(1.0 + 1e-6)
    assert Approx(1e-11).is_zero()


def test_mixing_backends_rejected():
    with pytest.raises(BackendError):
        Exact(1) + Approx(1.0)
    with pytest.raises(BackendError):
        Approx(2.0) * Exact(3)


@pytest.mark.parametrize("text,value", [
    ("3", Exact(3)),
    ("-1/2", Exact(Fraction(-1, 2))),
    ("1/2+3/4i", Exact(Fraction(1, 2), Fraction(3, 4))),
    ("-1-2i", Exact(-1, -2)),
    ("i", I),
    ("-i", -I),
    ("2/3i", Exact(0, Fraction(2, 3))),
])
def test_parse_exact(text, value):
    v = parse_scalar(text)
    assert isinstance(v, Exact) and v == value


def test_parse_float_is_approx():
    v = parse_scalar("2.5")
    assert isinstance(v, Approx) and v == Approx(2.5)
    assert parse_scalar("1.5-2.0i") == Approx(1.5 - 2j)


@pytest.mark.parametrize("bad", ["", "abc", "1/0", "1//2"])
def test_parse_errors(bad):
    with pytest.raises(ValueError):
        parse_scalar(bad)


def test_format_round_trip():
    for v in [Exact(0), Exact(Fraction(-7, 3)), Exact(Fraction(1, 2), -1), Exact(0, 5), I]:
        assert parse_scalar(format_scalar(v)) == v
    assert format_scalar(Exact(Fraction(1, 2), Fraction(3, 4))) == "1/2+3/4i"
    assert format_scalar(Approx(0.1)) == "0.10000000000000001"


def test_exact_sqrt():
    assert exact_sqrt(Exact(9)) == 3
    assert exact_sqrt(Exact(-9)) == 3 * I
    assert exact_sqrt(Exact(Fraction(4, 9))) == Exact(Fraction(2, 3))
    r = exact_sqrt(Exact(3, 4))
    assert r is not None and r * r == Exact(3, 4)
    assert exact_sqrt(Exact(2)) is None


def test_scalar_coercion():
    assert isinstance(scalar(3), Exact)
    assert isinstance(scalar(0.5), Approx)
    assert scalar("1/3") == Exact(Fraction(1, 3))
