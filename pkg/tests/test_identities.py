import pytest

from weylalt.identities import check_identities, four_consecutive_violations

CASES = [("A", r) for r in range(1, 7)] + [(t, r) for t in "BC" for r in range(2, 7)] + [("D", r) for r in range(4, 7)]


def failures(lt, r):
    return [(c.identity, c.index, c.expected, c.computed) for c in check_identities(lt, r) if not c.ok]


@pytest.mark.parametrize("lt,r", CASES)
def test_identities_other_than_a3_second_row(lt, r):
    assert [f for f in failures(lt, r) if f[0] != "A3[1]"] == []


def test_a3_second_row_has_coefficient_two():
    checks = [c for c in check_identities("A", 5) if c.identity == "A3[1]"]
    assert checks
    for c in checks:
        assert c.computed[c.index - 1] == -2 and c.expected[c.index - 1] == -1


def test_highest_root_moves():
    got = {c.index: c.computed for c in check_identities("C", 4) if c.identity == "highest_root"}
    assert got[1] == (-2, 0, 0, 0)
    assert all(v == (0, 0, 0, 0) for i, v in got.items() if i != 1)


@pytest.mark.parametrize("lt,r", [("A", 6), ("B", 6), ("C", 6), ("D", 6)])
def test_no_four_consecutive_support(lt, r):
    assert four_consecutive_violations(lt, r) == []
