"""Classical root systems in the orthonormal epsilon basis.

Every weight is stored *doubled* (``coords2 = 2 * epsilon coordinates``) so
the Weyl vector and other half-integral quantities stay exact integers.
Root coordinates (coefficients over the simple roots) are plain integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from enum import Enum
from typing import Sequence

__all__ = [
    "LieType",
    "RankError",
    "NotInLattice",
    "Weight",
    "RootSystem",
    "build_root_system",
    "to_root_coords",
    "from_root_coords",
    "special_weight",
    "root_sign",
]


class LieType(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"

    @property
    def min_rank(self) -> int:
        return {"A": 1, "B": 2, "C": 2, "D": 4}[self.value]


class RankError(ValueError):
    """Rank outside the domain of the requested Lie type."""


class NotInLattice(Exception):
    """The weight is not an integral combination of simple roots."""


def _coerce_type(lie_type) -> LieType:
    try:
        return LieType(str(getattr(lie_type, "value", lie_type)).upper())
    except ValueError:
        raise ValueError(f"unknown Lie type {lie_type!r}") from None


def check_rank(lie_type, rank: int) -> LieType:
    lt = _coerce_type(lie_type)
    if not isinstance(rank, int) or rank < lt.min_rank:
        raise RankError(f"type {lt.value} requires rank >= {lt.min_rank}, got {rank!r}")
    return lt


@dataclass(frozen=True)
class Weight:
    coords2: tuple[int, ...]

    def __add__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a + b for a, b in zip(self.coords2, other.coords2, strict=True)))

    def __sub__(self, other: "Weight") -> "Weight":
        return Weight(tuple(a - b for a, b in zip(self.coords2, other.coords2, strict=True)))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords2))

    def scale(self, k: int) -> "Weight":
        return Weight(tuple(k * a for a in self.coords2))

    @property
    def dim(self) -> int:
        return len(self.coords2)


def _eps(d: int, *terms: tuple[int, int]) -> Weight:
    # terms: (index, coefficient) pairs in undoubled epsilon coordinates
    v = [0] * d
    for i, c in terms:
        v[i] += 2 * c
    return Weight(tuple(v))


@dataclass(frozen=True)
class RootSystem:
    lie_type: LieType
    rank: int
    simple_roots: tuple[Weight, ...]
    positive_roots: tuple[Weight, ...]
    highest_root: Weight
    rho2: Weight
    # positive roots in root coordinates, same order as positive_roots
    positive_coords: tuple[tuple[int, ...], ...] = field(repr=False)
    # exact inverse data for the change of basis: c_j = sum_i x2[i] * _inv[i][j]
    _inv: tuple[tuple[Fraction, ...], ...] = field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.rho2.coords2)

    @property
    def name(self) -> str:
        return f"{self.lie_type.value}{self.rank}"

    def __hash__(self) -> int:
        return hash((self.lie_type, self.rank))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RootSystem)
            and self.lie_type == other.lie_type
            and self.rank == other.rank
        )

    def zero(self) -> Weight:
        return Weight((0,) * self.dim)

    def dynkin_adjacent(self, i: int, j: int) -> bool:
        """Whether nodes ``i`` and ``j`` (1-based) share an edge of the Dynkin diagram."""
        if i == j:
            return False
        r = self.rank
        if self.lie_type is LieType.D:
            a, b = sorted((i, j))
            if (a, b) == (r - 1, r):
                return False
            if (a, b) == (r - 2, r):
                return True
        return abs(i - j) == 1


def _simple_roots(lt: LieType, r: int) -> list[Weight]:
    d = r + 1 if lt is LieType.A else r
    roots = [_eps(d, (i, 1), (i + 1, -1)) for i in range(r - 1)]
    if lt is LieType.A:
        roots.append(_eps(d, (r - 1, 1), (r, -1)))
    elif lt is LieType.B:
        roots.append(_eps(d, (r - 1, 1)))
    elif lt is LieType.C:
        roots.append(_eps(d, (r - 1, 2)))
    else:
        roots.append(_eps(d, (r - 2, 1), (r - 1, 1)))
    return roots


def _positive_roots_eps(lt: LieType, r: int) -> list[Weight]:
    d = r + 1 if lt is LieType.A else r
    n = d if lt is LieType.A else r
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            out.append(_eps(d, (i, 1), (j, -1)))
            if lt is not LieType.A:
                out.append(_eps(d, (i, 1), (j, 1)))
    if lt is LieType.B:
        out.extend(_eps(d, (i, 1)) for i in range(r))
    elif lt is LieType.C:
        out.extend(_eps(d, (i, 2)) for i in range(r))
    return out


def _highest_root(lt: LieType, r: int) -> Weight:
    d = r + 1 if lt is LieType.A else r
    if lt is LieType.A:
        return _eps(d, (0, 1), (r, -1))
    if lt is LieType.C:
        return _eps(d, (0, 2))
    return _eps(d, (0, 1), (1, 1))


def _solve_inverse(simple: list[Weight], d: int, r: int) -> tuple[tuple[Fraction, ...], ...]:
    # Left inverse of the r x d matrix of simple roots, restricted to an r x r
    # invertible minor (the first r coordinates), by exact Gauss-Jordan.
    m = [[Fraction(simple[i].coords2[k]) for i in range(r)] for k in range(r)]
    inv = [[Fraction(int(i == j)) for j in range(r)] for i in range(r)]
    for col in range(r):
        piv = next(row for row in range(col, r) if m[row][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        inv[col] = [x / p for x in inv[col]]
        for row in range(r):
            if row != col and m[row][col] != 0:
                f = m[row][col]
                m[row] = [a - f * b for a, b in zip(m[row], m[col])]
                inv[row] = [a - f * b for a, b in zip(inv[row], inv[col])]
    # m now identity; inv solves  M c = x2[:r]  where M[k][i] = simple[i][k]
    rows = [tuple(inv[j][k] for j in range(r)) for k in range(r)]
    rows += [(Fraction(0),) * r] * (d - r)
    return tuple(rows)


def build_root_system(lie_type, rank: int) -> RootSystem:
    """Construct the classical root system of the given type and rank."""
    lt = check_rank(lie_type, rank)
    return _build(lt, rank)


_CACHE: dict[tuple[LieType, int], RootSystem] = {}


def _build(lt: LieType, r: int) -> RootSystem:
    key = (lt, r)
    if key in _CACHE:
        return _CACHE[key]
    d = r + 1 if lt is LieType.A else r
    simple = _simple_roots(lt, r)
    inv = _solve_inverse(simple, d, r)
    pos = _positive_roots_eps(lt, r)
    coords = [_solve(inv, simple, w) for w in pos]
    order = sorted(range(len(pos)), key=lambda k: coords[k])
    pos = [pos[k] for k in order]
    coords = [coords[k] for k in order]
    rho2 = Weight(tuple(sum(col) for col in zip(*(w.coords2 for w in pos))))
    rs = RootSystem(
        lie_type=lt,
        rank=r,
        simple_roots=tuple(simple),
        positive_roots=tuple(pos),
        highest_root=_highest_root(lt, r),
        rho2=rho2,
        positive_coords=tuple(coords),
        _inv=inv,
    )
    _CACHE[key] = rs
    return rs


def _solve(inv, simple: Sequence[Weight], w: Weight) -> tuple[int, ...]:
    r = len(simple)
    c2 = [sum((w.coords2[k] * inv[k][j] for k in range(r)), Fraction(0)) for j in range(r)]
    # c2 is the coefficient vector of w itself (simple roots are doubled too)
    if any(x.denominator != 1 for x in c2):
        raise NotInLattice(w)
    c = tuple(int(x) for x in c2)
    back = [0] * len(w.coords2)
    for ci, a in zip(c, simple):
        for k, x in enumerate(a.coords2):
            back[k] += ci * x
    if tuple(back) != w.coords2:
        raise NotInLattice(w)
    return c


def to_root_coords(rs: RootSystem, w: Weight) -> tuple[int, ...]:
    """Coefficients of ``w`` over the simple roots.

    Raises :class:`NotInLattice` when ``w`` is not an integral combination
    of simple roots (half-integral coefficients, or off the root span in
    type A).
    """
    if w.dim != rs.dim:
        raise ValueError(f"weight has dimension {w.dim}, {rs.name} needs {rs.dim}")
    return _solve(rs._inv, rs.simple_roots, w)


def from_root_coords(rs: RootSystem, c: Sequence[int]) -> Weight:
    if len(c) != rs.rank:
        raise ValueError(f"expected {rs.rank} root coordinates, got {len(c)}")
    out = [0] * rs.dim
    for ci, a in zip(c, rs.simple_roots):
        for k, x in enumerate(a.coords2):
            out[k] += ci * x
    return Weight(tuple(out))


SPECIAL_WEIGHTS = ("zero", "highest_root", "omega1_B", "omega2_C")


def special_weight(rs: RootSystem, which: str) -> tuple[int, ...]:
    """A distinguished weight in root coordinates."""
    r = rs.rank
    if which == "zero":
        return (0,) * r
    if which == "highest_root":
        return to_root_coords(rs, rs.highest_root)
    if which == "omega1_B":
        if rs.lie_type is not LieType.B:
            raise ValueError("omega1_B is only defined for type B")
        return (1,) * r
    if which == "omega2_C":
        if rs.lie_type is not LieType.C:
            raise ValueError("omega2_C is only defined for type C")
        return (1,) + (2,) * (r - 2) + (1,)
    raise ValueError(f"unknown special weight {which!r}")


def root_sign(rs: RootSystem, w: Weight) -> str:
    """Return ``"positive"``, ``"negative"`` or ``"not_a_root"``."""
    if w.dim != rs.dim:
        return "not_a_root"
    if w in _root_set(rs):
        return "positive"
    if -w in _root_set(rs):
        return "negative"
    return "not_a_root"


_ROOT_SETS: dict[tuple[LieType, int], frozenset[Weight]] = {}


def _root_set(rs: RootSystem) -> frozenset[Weight]:
    key = (rs.lie_type, rs.rank)
    if key not in _ROOT_SETS:
        _ROOT_SETS[key] = frozenset(rs.positive_roots)
    return _ROOT_SETS[key]


def is_positive_root_eps(w2: Sequence[int]) -> bool:
    """Sign test valid for any root of a classical system: first nonzero entry."""
    for x in w2:
        if x:
            return x > 0
    return False
