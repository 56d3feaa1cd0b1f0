import pytest

from weylalt.altset import (
    alternation_set_bruteforce,
    alternation_set_structural,
    basic_allowable_subwords,
    cardinality_by_recurrence,
    cardinality_sequence,
    doubled_string,
    fibonacci,
    forbidden_word_witnesses,
    is_member,
    kmf_string,
    n_count,
    nonconsecutive_subsets,
    omega1_altset_B,
    omega1_census,
    p_count,
    listed_basic_subwords,
    type_a_count,
)
from weylalt.rootsys import build_root_system, special_weight
from weylalt.weylgroup import GroupTooLarge, enumerate_group, from_word


def hr_set(lt, r, **kw):
    rs = build_root_system(lt, r)
    return alternation_set_bruteforce(rs, special_weight(rs, "highest_root"), (0,) * r, **kw)


def test_b3_set():
    assert hr_set("B", 3).words() == [[], [1], [2], [3], [1, 3]]


def test_c2_set():
    assert hr_set("C", 2).words() == [[], [2]]


def test_membership_matches_definition():
    rs = build_root_system("C", 3)
    lam = special_weight(rs, "highest_root")
    alt = hr_set("C", 3)
    for s in enumerate_group(rs):
        st = kmf_string(rs, s, lam, (0, 0, 0))
        assert (s in alt) == (st is not None and min(st) >= 0) == is_member(rs, s, lam, (0, 0, 0))


def test_half_integral_string_is_none():
    rs = build_root_system("B", 2)
    lam = special_weight(rs, "highest_root")
    for s in enumerate_group(rs):
        d = doubled_string(rs, s, lam, (0, 0))
        assert (kmf_string(rs, s, lam, (0, 0)) is None) == any(x % 2 for x in d)


def test_workers_do_not_change_result():
    assert hr_set("B", 5, workers=1).elements == hr_set("B", 5, workers=2).elements


def test_cap():
    with pytest.raises(GroupTooLarge):
        hr_set("B", 5, cap=1000)


@pytest.mark.parametrize("lt,r", [("B", 4), ("C", 5), ("D", 5), ("D", 6)])
def test_structural_equals_bruteforce(lt, r):
    assert alternation_set_structural(lt, r).as_set() == hr_set(lt, r).as_set()


def test_listed_d_families_miss_symmetric_pair():
    # without s_{r-2} s_r the D5 construction falls short of the true set
    s = alternation_set_structural("D", 5, listed_basic_subwords("D", 5))
    assert len(s) == 16 < len(hr_set("D", 5)) == 18


def test_subwords_start_with_identity():
    for lt, r in [("B", 2), ("B", 6), ("C", 5), ("D", 6)]:
        assert basic_allowable_subwords(lt, r)[0] == []
    with pytest.raises(ValueError):
        basic_allowable_subwords("A", 3)


@pytest.mark.parametrize("lt,r", [("B", 5), ("C", 5), ("D", 6)])
def test_forbidden_witnesses_negative(lt, r):
    for word, s in forbidden_word_witnesses(lt, r):
        assert min(s) < 0, word


def test_recurrences():
    assert [p_count("B", r) for r in range(7)] == [0, 0, 2, 3, 5, 14, 30]
    assert [p_count("C", r) for r in range(7)] == [0, 1, 1, 2, 6, 12, 25]
    assert [n_count(r) for r in range(4, 9)] == [4, 7, 14, 34, 73]
    row = cardinality_by_recurrence("D", 4)
    assert (row.total, row.M, row.N, row.L) == (9, 5, 4, 4)
    with pytest.raises(ValueError):
        cardinality_by_recurrence("A", 4)


def test_sequences():
    assert cardinality_sequence("A", 2, 10) == [1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert cardinality_sequence("D", 4, 19)[-1] == 954809
    assert cardinality_sequence("B", 0, 5, "P") == [0, 0, 2, 3, 5, 14]
    with pytest.raises(ValueError):
        cardinality_sequence("A", 2, 5, "P")
    with pytest.raises(ValueError):
        cardinality_sequence("B", 1, 5)
    with pytest.raises(ValueError):
        cardinality_sequence("B", 5, 4)


def test_type_a_brute_force_agrees_with_fibonacci():
    for r in range(2, 8):
        assert type_a_count(r) == fibonacci(r)


def test_omega1_set():
    assert nonconsecutive_subsets(3, 5) == [(), (3,), (3, 5), (4,), (5,)]
    rs = build_root_system("B", 5)
    alt = alternation_set_bruteforce(rs, special_weight(rs, "highest_root"), special_weight(rs, "omega1_B"))
    assert alt.as_set() == omega1_altset_B(5).as_set()
    assert from_word(rs, [3, 5]) in alt
    assert omega1_census(5) == {(False, 0): 1, (False, 1): 2, (True, 1): 1, (True, 2): 1}
