import pytest
from hypothesis import given, strategies as st

from weylalt.qpoly import QPoly

coeffs = st.lists(st.integers(-50, 50), max_size=8)


def test_format():
    assert QPoly([0, 1, 3, 4, 2, 1]).format() == "q + 3q^2 + 4q^3 + 2q^4 + q^5"
    assert QPoly([3, 0, -1]).format() == "3 - q^2"
    assert QPoly.zero().format() == "0"
    assert str(QPoly.one()) == "1"


def test_parse_factored():
    assert QPoly.parse("(q^2+2q+2)(q+1)^2q^4").to_json() == [0, 0, 0, 0, 2, 6, 7, 4, 1]
    assert QPoly.parse("q^2(q+1)").to_json() == [0, 0, 1, 1]
    assert QPoly.parse("2q^2 + q^3").at_one() == 3


@pytest.mark.parametrize("bad", ["q^", "(q+1", "x", "q^-1"])
def test_parse_errors(bad):
    with pytest.raises((ValueError, IndexError)):
        QPoly.parse(bad)


def test_trailing_zeros_normalised():
    assert QPoly([1, 2, 0, 0]) == QPoly([1, 2])
    assert QPoly([0, 0]).is_zero()
    assert QPoly([1, 2, 0]).to_json() == [1, 2]


@given(coeffs)
def test_format_parse_round_trip(c):
    p = QPoly(c)
    assert QPoly.parse(p.format()) == p
    assert QPoly.from_json(p.to_json()) == p


@given(coeffs, coeffs, st.integers(-3, 3))
def test_ring_laws_by_evaluation(a, b, x):
    p, q = QPoly(a), QPoly(b)
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)
    assert (p - p).is_zero()
    assert (p * q) == (q * p)


def test_power_and_shift():
    q1 = QPoly([1, 1])
    assert (q1**3).to_json() == [1, 3, 3, 1]
    assert q1.shift(2) == QPoly.monomial(2) * q1
    assert (q1**0) == QPoly.one()
