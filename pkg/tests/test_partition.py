import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from weylalt.partition import (
    check_rational_gf,
    highest_root_series,
    kostant,
    kostant_q,
    naive_partition_table,
    taylor_coefficients,
)
from weylalt.qpoly import QPoly
from weylalt.rootsys import build_root_system


def test_small_values():
    b3 = build_root_system("B", 3)
    assert kostant_q(b3, (1, 2, 2)) == QPoly([0, 1, 3, 4, 2, 1])
    assert kostant(b3, (1, 2, 2)) == 11
    assert kostant(b3, (0, 0, 0)) == 1
    assert kostant(b3, (-1, 2, 2)) == 0
    assert kostant_q(b3, (0, -1, 0)).is_zero()


def test_type_a_simple_root_count():
    # in A_r every vector (1,...,1) has 2^(r-1) partitions
    for r in range(1, 7):
        assert kostant(build_root_system("A", r), (1,) * r) == 2 ** (r - 1)


def test_length_mismatch():
    with pytest.raises(ValueError):
        kostant(build_root_system("B", 3), (1, 2))


@pytest.mark.parametrize("lt,r", [("B", 2), ("C", 2), ("A", 3), ("D", 4)])
def test_matches_naive_oracle(lt, r):
    rs = build_root_system(lt, r)
    table = naive_partition_table(rs, 6)
    for xi in itertools.product(range(7), repeat=r):
        if sum(xi) <= 6:
            assert kostant_q(rs, xi) == table.get(xi, QPoly.zero()), xi


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 4), min_size=3, max_size=3))
def test_plain_is_q_at_one(xi):
    rs = build_root_system("C", 3)
    assert kostant(rs, xi) == kostant_q(rs, xi).at_one()


def test_highest_root_series():
    assert highest_root_series("B", 5) == [1, 3, 11, 40, 145]
    assert highest_root_series("C", 4) == [1, 3, 10, 35]
    with pytest.raises(ValueError):
        highest_root_series("D", 5)
    with pytest.raises(ValueError):
        highest_root_series("B", 12)


def test_taylor():
    assert taylor_coefficients([1], [1, -1, -1], 7) == [1, 1, 2, 3, 5, 8, 13]
    assert taylor_coefficients([1], [2], 2) == [Fraction(1, 2), 0]
    with pytest.raises(ValueError):
        taylor_coefficients([1], [0, 1], 3)
    assert check_rational_gf([1, 3, 11, 40], [0, 1, -2, 1], [1, -5, 5])
    assert not check_rational_gf([1, 3, 11, 41], [0, 1, -2, 1], [1, -5, 5])
