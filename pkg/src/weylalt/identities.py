"""Action of short Weyl group words on the highest root and on 2*rho.

Each identity is stored as data (word offsets and the expected change in
root coordinates) and checked exactly for every index where it applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .altset import alternation_set_bruteforce
from .rootsys import LieType, build_root_system, special_weight, to_root_coords
from .weylgroup import apply, canonical_word, from_word


@dataclass(frozen=True)
class Identity:
    """``word(target) - target == sum(coeff * alpha_{i+offset})``.

    ``word`` and ``delta`` use offsets from the base index ``i``.
    """

    name: str
    target: str  # "highest_root" or "2rho"
    word: tuple[int, ...]
    delta: tuple[tuple[int, int], ...]  # (offset, coefficient)


def _ids(name, target, rows):
    return [Identity(f"{name}[{k}]", target, tuple(w), tuple(d)) for k, (w, d) in enumerate(rows)]


A2_IDENTITIES = _ids(
    "A2",
    "2rho",
    [
        ((0,), ((0, -2),)),
        ((1,), ((1, -2),)),
        ((1, 0), ((0, -2), (1, -4))),
        ((0, 1), ((0, -4), (1, -2))),
        ((0, 1, 0), ((0, -4), (1, -4))),
    ],
)

# the second row is kept exactly as stated, with coefficient -1 on alpha_i
A3_IDENTITIES = _ids(
    "A3",
    "2rho",
    [
        ((0, 1, 2), ((0, -6), (1, -4), (2, -2))),
        ((2, 1, 0), ((0, -1), (1, -4), (2, -6))),
        ((0, 2, 1), ((0, -4), (1, -2), (2, -4))),
        ((1, 0, 2), ((0, -2), (1, -6), (2, -2))),
    ],
)

B2_IDENTITIES = _ids("B2", "2rho", [((0, 1), ((0, -4), (1, -2))), ((1, 0), ((0, -2), (1, -6)))])
C2_IDENTITIES = _ids("C2", "2rho", [((0, 1), ((0, -6), (1, -2))), ((1, 0), ((0, -2), (1, -4)))])

# reflections that move the highest root: type -> [(i, coefficient of alpha_i removed)]
HIGHEST_ROOT_MOVERS = {
    LieType.A: lambda r: {1: 1, r: 1},
    LieType.B: lambda r: {2: 1},
    LieType.C: lambda r: {1: 2},
    LieType.D: lambda r: {2: 1},
}
# below these ranks s_1 = s_r (A1) or s_2 = s_r (B2, C2) and the list degenerates
HIGHEST_ROOT_MIN_RANK = {LieType.A: 2, LieType.B: 3, LieType.C: 3, LieType.D: 4}


def a2_indices(lt: LieType, r: int) -> range:
    """Base indices i with alpha_i, alpha_{i+1} joined by a single bond."""
    return range(1, r) if lt is LieType.A else range(1, r - 1)


def a3_indices(lt: LieType, r: int) -> range:
    return range(1, r - 1) if lt is LieType.A else range(1, r - 2)


def double_bond_indices(lt: LieType, r: int, kind: LieType) -> range:
    return range(r - 1, r) if lt is kind else range(0)


def _delta(rs, word, target) -> tuple[int, ...]:
    sigma = from_word(rs, list(word))
    if target == "2rho":
        w = rs.rho2
    else:
        w = rs.highest_root.scale(2)
    moved = apply(rs, sigma, w) - w
    c = to_root_coords(rs, moved)
    # both targets are stored doubled; 2rho needs no halving
    if target == "2rho":
        return c
    return tuple(x // 2 for x in c)


@dataclass(frozen=True)
class Check:
    identity: str
    lie_type: str
    rank: int
    index: int
    expected: tuple[int, ...]
    computed: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def _expected(r: int, i: int, delta) -> tuple[int, ...]:
    v = [0] * r
    for off, c in delta:
        v[i + off - 1] += c
    return tuple(v)


def check_identities(lie_type, rank: int) -> Iterator[Check]:
    rs = build_root_system(lie_type, rank)
    lt, r = rs.lie_type, rank
    families = [
        (A2_IDENTITIES, a2_indices(lt, r)),
        (A3_IDENTITIES, a3_indices(lt, r)),
        (B2_IDENTITIES, double_bond_indices(lt, r, LieType.B)),
        (C2_IDENTITIES, double_bond_indices(lt, r, LieType.C)),
    ]
    for ids, indices in families:
        for i in indices:
            for ident in ids:
                word = tuple(i + off for off in ident.word)
                yield Check(ident.name, lt.value, r, i, _expected(r, i, ident.delta), _delta(rs, word, ident.target))
    if r < HIGHEST_ROOT_MIN_RANK[lt]:
        return
    movers = HIGHEST_ROOT_MOVERS[lt](r)
    for i in range(1, r + 1):
        exp = [0] * r
        if i in movers:
            exp[i - 1] = -movers[i]
        yield Check("highest_root", lt.value, r, i, tuple(exp), _delta(rs, (i,), "highest_root"))


def four_consecutive_violations(lie_type, rank: int) -> list[list[int]]:
    """Elements of ``A(hr, 0)`` whose support contains four consecutive
    simple reflections (expected: none)."""
    rs = build_root_system(lie_type, rank)
    alt = alternation_set_bruteforce(rs, special_weight(rs, "highest_root"), (0,) * rank)
    bad = []
    for s in alt:
        support = set(canonical_word(rs, s))
        if any({i, i + 1, i + 2, i + 3} <= support for i in range(1, rank - 2)):
            bad.append(canonical_word(rs, s))
    return bad
