import pytest
from hypothesis import given, strategies as st

from weylalt.rootsys import (
    LieType,
    NotInLattice,
    RankError,
    Weight,
    build_root_system,
    from_root_coords,
    root_sign,
    special_weight,
    to_root_coords,
)

SMALL = [("A", r) for r in range(1, 7)] + [(t, r) for t in "BC" for r in range(2, 7)] + [("D", r) for r in range(4, 7)]


def n_positive(lt, r):
    return {"A": r * (r + 1) // 2, "B": r * r, "C": r * r, "D": r * (r - 1)}[lt]


@pytest.mark.parametrize("lt,r", SMALL)
def test_invariants(lt, r):
    rs = build_root_system(lt, r)
    assert len(rs.simple_roots) == r
    assert len(rs.positive_roots) == n_positive(lt, r)
    total = rs.zero()
    for a in rs.positive_roots:
        total = total + a
    assert total == rs.rho2
    coords = [to_root_coords(rs, a) for a in rs.positive_roots]
    assert all(min(c) >= 0 for c in coords)
    assert coords == sorted(coords)
    assert tuple(coords) == rs.positive_coords


@pytest.mark.parametrize(
    "lt,r,hr",
    [
        ("A", 4, (1, 1, 1, 1)),
        ("B", 3, (1, 2, 2)),
        ("B", 5, (1, 2, 2, 2, 2)),
        ("C", 4, (2, 2, 2, 1)),
        ("D", 4, (1, 2, 1, 1)),
        ("D", 6, (1, 2, 2, 2, 1, 1)),
    ],
)
def test_highest_root(lt, r, hr):
    assert special_weight(build_root_system(lt, r), "highest_root") == hr


def test_rho_b4_matches_closed_sum():
    rs = build_root_system("B", 4)
    assert to_root_coords(rs, rs.rho2) == tuple(i * (2 * 4 - i) for i in range(1, 5))


def test_a1_rho():
    rs = build_root_system("A", 1)
    assert rs.positive_coords == ((1,),)
    # 2*rho equals the single positive root
    assert to_root_coords(rs, rs.rho2) == (1,)


@pytest.mark.parametrize("lt,r", [("A", 0), ("B", 1), ("C", 1), ("D", 3), ("D", 2)])
def test_rank_domain(lt, r):
    with pytest.raises(RankError):
        build_root_system(lt, r)


def test_unknown_type():
    with pytest.raises(ValueError):
        build_root_system("E", 6)


def test_not_in_lattice():
    rs = build_root_system("B", 2)
    with pytest.raises(NotInLattice):
        to_root_coords(rs, Weight((1, 0)))
    rs = build_root_system("A", 2)
    with pytest.raises(NotInLattice):
        to_root_coords(rs, Weight((2, 0, 0)))


def test_dimension_mismatch():
    rs = build_root_system("B", 3)
    with pytest.raises(ValueError):
        to_root_coords(rs, Weight((0, 0)))
    with pytest.raises(ValueError):
        from_root_coords(rs, (1, 2))


@given(st.sampled_from(SMALL), st.data())
def test_coords_round_trip(case, data):
    rs = build_root_system(*case)
    c = tuple(data.draw(st.lists(st.integers(-20, 20), min_size=rs.rank, max_size=rs.rank)))
    assert to_root_coords(rs, from_root_coords(rs, c)) == c


def test_root_sign():
    rs = build_root_system("C", 3)
    a = rs.positive_roots[0]
    assert root_sign(rs, a) == "positive"
    assert root_sign(rs, -a) == "negative"
    assert root_sign(rs, rs.rho2) == "not_a_root"


def test_special_weights():
    assert special_weight(build_root_system("B", 4), "omega1_B") == (1, 1, 1, 1)
    assert special_weight(build_root_system("C", 4), "omega2_C") == (1, 2, 2, 1)
    with pytest.raises(ValueError):
        special_weight(build_root_system("C", 3), "omega1_B")


def test_dynkin_adjacency_d():
    rs = build_root_system("D", 5)
    assert rs.dynkin_adjacent(3, 5) and rs.dynkin_adjacent(3, 4)
    assert not rs.dynkin_adjacent(4, 5)
    assert rs.lie_type is LieType.D
