"""Weyl alternation sets.

``A(lam, mu)`` is the set of Weyl group elements ``s`` for which
``s(lam + rho) - (mu + rho)`` is a nonnegative integral combination of simple
roots.  Two independent routes are provided: a brute-force scan of the whole
group, and (for ``lam`` the highest root, ``mu = 0``) the construction from
commuting products of basic allowable subwords.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .rootsys import (
    LieType,
    RootSystem,
    build_root_system,
    check_rank,
    from_root_coords,
    special_weight,
    to_root_coords,
)
from .weylgroup import (
    DEFAULT_CAP,
    GroupTooLarge,
    WeylElement,
    apply,
    canonical_word,
    from_word,
    group_order,
)

Word = list[int]


@dataclass(frozen=True)
class AlternationSet:
    rs: RootSystem
    lam: tuple[int, ...]
    mu: tuple[int, ...]
    elements: tuple[WeylElement, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, sigma: WeylElement) -> bool:
        return sigma in set(self.elements)

    def as_set(self) -> frozenset[WeylElement]:
        return frozenset(self.elements)

    def words(self) -> list[Word]:
        return [canonical_word(self.rs, s) for s in self.elements]


def kmf_string(
    rs: RootSystem, sigma: WeylElement, lam: Sequence[int], mu: Sequence[int]
) -> tuple[int, ...] | None:
    """Root coordinates of ``sigma(lam + rho) - (mu + rho)``.

    Returns ``None`` when some coordinate is half-integral.
    """
    c2 = doubled_string(rs, sigma, lam, mu)
    if any(x % 2 for x in c2):
        return None
    return tuple(x // 2 for x in c2)


def doubled_string(
    rs: RootSystem, sigma: WeylElement, lam: Sequence[int], mu: Sequence[int]
) -> tuple[int, ...]:
    """Root coordinates of ``sigma(2 lam + 2 rho) - (2 mu + 2 rho)``."""
    top = from_root_coords(rs, lam).scale(2) + rs.rho2
    base = from_root_coords(rs, mu).scale(2) + rs.rho2
    return to_root_coords(rs, apply(rs, sigma, top) - base)


def is_member(rs: RootSystem, sigma: WeylElement, lam, mu) -> bool:
    s = kmf_string(rs, sigma, lam, mu)
    return s is not None and min(s) >= 0


def _sorted(rs: RootSystem, elements: Iterable[WeylElement]) -> tuple[WeylElement, ...]:
    keyed = []
    for s in set(elements):
        w = canonical_word(rs, s)
        keyed.append(((len(w), w), s))
    keyed.sort(key=lambda t: t[0])
    return tuple(s for _, s in keyed)


def make_set(rs, lam, mu, elements) -> AlternationSet:
    return AlternationSet(rs, tuple(lam), tuple(mu), _sorted(rs, elements))


# -- brute force ---------------------------------------------------------


def _change_of_basis(rs: RootSystem) -> tuple[np.ndarray, int]:
    # integer matrix K and denominator den with  coords = x2 @ K / den
    inv = rs._inv
    den = 1
    for row in inv:
        for x in row:
            den = den * x.denominator // np.gcd(den, x.denominator)
    K = np.array([[int(x * den) for x in row] for row in inv], dtype=np.int64)
    return K, int(den)


def _sign_rows(rs: RootSystem) -> np.ndarray:
    d = rs.dim
    if rs.lie_type is LieType.A:
        return np.ones((1, d), dtype=np.int64)
    rows = np.array(list(itertools.product((1, -1), repeat=d)), dtype=np.int64)
    if rs.lie_type is LieType.D:
        rows = rows[(rows == -1).sum(axis=1) % 2 == 0]
    return rows


def _scan_chunk(args) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    lt, r, top, base, start, stop = args
    rs = build_root_system(lt, r)
    K, den = _change_of_basis(rs)
    T = _sign_rows(rs)
    top = np.array(top, dtype=np.int64)
    base = np.array(base, dtype=np.int64)
    found = []
    perms = itertools.islice(itertools.permutations(range(rs.dim)), start, stop)
    block = 2048
    while True:
        chunk = list(itertools.islice(perms, block))
        if not chunk:
            break
        P = np.array(chunk, dtype=np.int64)
        Q = np.argsort(P, axis=1)  # inverse permutations
        Xq = top[Q]  # value landing at each target position (before signs)
        Y = T[None, :, :] * Xq[:, None, :] - base  # (perm, sign, d)
        C = Y @ K  # doubled coordinates times den
        ok = np.all((C >= 0) & (C % (2 * den) == 0), axis=2)
        for pi, ti in zip(*np.nonzero(ok)):
            perm = tuple(int(x) for x in P[pi])
            t = T[ti]
            signs = tuple(int(t[perm[i]]) for i in range(rs.dim))
            found.append((perm, signs))
    return found


def alternation_set_bruteforce(
    rs: RootSystem,
    lam: Sequence[int],
    mu: Sequence[int],
    cap: int = DEFAULT_CAP,
    workers: int = 1,
) -> AlternationSet:
    """Scan all of W with the coordinate test (no partition function needed)."""
    if len(lam) != rs.rank or len(mu) != rs.rank:
        raise ValueError(f"weights must have {rs.rank} root coordinates")
    n = group_order(rs)
    if n > cap:
        raise GroupTooLarge(n, cap)
    top = (from_root_coords(rs, lam).scale(2) + rs.rho2).coords2
    base = (from_root_coords(rs, mu).scale(2) + rs.rho2).coords2
    nperm = 1
    for k in range(2, rs.dim + 1):
        nperm *= k
    workers = max(1, min(int(workers), nperm))
    bounds = [nperm * k // workers for k in range(workers + 1)]
    jobs = [
        (rs.lie_type, rs.rank, top, base, bounds[k], bounds[k + 1]) for k in range(workers)
    ]
    if workers == 1:
        parts = [_scan_chunk(jobs[0])]
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_scan_chunk, jobs))
    elements = [WeylElement(p, s) for part in parts for p, s in part]
    return make_set(rs, lam, mu, elements)


# -- structural route ------------------------------------------------------


def basic_allowable_subwords(lie_type, rank: int) -> list[Word]:
    """Basic allowable subwords for ``A(highest root, 0)``, identity first.

    Type D additionally contains ``s_{r-2} s_r`` for r >= 5, the image of
    ``s_{r-2} s_{r-1}`` under the diagram symmetry exchanging the two
    branch nodes.  B2 is the degenerate case ``{1, s1}``.
    """
    lt = check_rank(lie_type, rank)
    r = rank
    out: list[Word] = [[]]
    if lt is LieType.A:
        raise ValueError("basic allowable subwords are defined for types B, C and D")
    if lt is LieType.B:
        if r == 2:
            return out + [[1]]
        out += [[i] for i in range(1, r + 1)]
        out += [[i, i + 1] for i in range(3, r)]
        out += [[i + 1, i] for i in range(3, r - 1)]
        out += [[i, i + 1, i] for i in range(3, r - 1)]
        out += [[i, i + 2, i + 1] for i in range(3, r - 2)]
    elif lt is LieType.C:
        out += [[i] for i in range(2, r + 1)]
        out += [[i, i + 1] for i in range(2, r - 1)]
        out += [[i + 1, i] for i in range(2, r - 1)]
        out += [[i, i + 1, i] for i in range(2, r - 1)]
        out += [[i, i + 2, i + 1] for i in range(2, r - 2)]
    else:
        out += [[i] for i in range(1, r + 1)]
        out += [[i, i + 1] for i in range(3, r)]
        if r >= 5:
            out += [[r - 2, r]]
        out += [[i + 1, i] for i in range(3, r - 2)]
        out += [[i, i + 1, i] for i in range(3, r - 2)]
        out += [[i, i + 2, i + 1] for i in range(3, r - 3)]
    return out


def listed_basic_subwords(lie_type, rank: int) -> list[Word]:
    """The families exactly as listed for each type, without the type-D
    symmetric completion added by :func:`basic_allowable_subwords`."""
    words = basic_allowable_subwords(lie_type, rank)
    lt = check_rank(lie_type, rank)
    if lt is LieType.D and rank >= 5:
        words = [w for w in words if w != [rank - 2, rank]]
    return words


def _commute(rs: RootSystem, a: Word, b: Word) -> bool:
    sa, sb = set(a), set(b)
    if sa & sb:
        return False
    return not any(rs.dynkin_adjacent(i, j) for i in sa for j in sb)


def commuting_families(rs: RootSystem, subwords: Sequence[Word]) -> Iterable[list[Word]]:
    """All sets of pairwise commuting non-identity subwords (including the
    empty family)."""
    pieces = [w for w in subwords if w]
    n = len(pieces)
    ok = [[_commute(rs, pieces[i], pieces[j]) for j in range(n)] for i in range(n)]

    def extend(start: int, chosen: list[int]):
        yield [pieces[k] for k in chosen]
        for k in range(start, n):
            if all(ok[k][c] for c in chosen):
                yield from extend(k + 1, chosen + [k])

    return extend(0, [])


def alternation_set_structural(lie_type, rank: int, subwords: Sequence[Word] | None = None) -> AlternationSet:
    """``A(highest root, 0)`` built from commuting basic allowable subwords."""
    rs = build_root_system(lie_type, rank)
    if subwords is None:
        subwords = basic_allowable_subwords(rs.lie_type, rank)
    elements = set()
    for fam in commuting_families(rs, subwords):
        elements.add(from_word(rs, [i for w in fam for i in w]))
    lam = special_weight(rs, "highest_root")
    return make_set(rs, lam, (0,) * rank, elements)


def forbidden_words(lie_type, rank: int) -> list[Word]:
    """Forbidden generators listed for ``A(highest root, 0)`` in each type."""
    lt = check_rank(lie_type, rank)
    r = rank
    triples = lambda lo, hi: [
        w
        for i in range(lo, hi + 1)
        for w in ([i, i + 1, i + 2], [i + 2, i + 1, i], [i + 1, i, i + 2])
    ]
    if lt is LieType.B:
        pairs = [[1, 2], [2, 1], [2, 3], [3, 2], [r, r - 1]]
        # a triple needs three nodes i..i+2 <= r
        return [w for w in pairs if max(w) <= r] + triples(3, r - 2)
    if lt is LieType.C:
        return [[1], [r - 1, r], [r, r - 1]] + triples(1, r - 2)
    if lt is LieType.D:
        return [[1, 2], [2, 1], [2, 3], [3, 2], [r - 1, r - 2], [r, r - 2]] + triples(1, r - 3)
    raise ValueError("forbidden words are defined for types B, C and D")


def forbidden_word_witnesses(lie_type, rank: int) -> list[tuple[Word, tuple[int, ...]]]:
    """Each forbidden word with ``s(2 hr + 2 rho) - 2 rho`` in root coordinates."""
    rs = build_root_system(lie_type, rank)
    lam = special_weight(rs, "highest_root")
    zero = (0,) * rank
    return [(w, doubled_string(rs, from_word(rs, w), lam, zero)) for w in forbidden_words(lie_type, rank)]


# -- cardinalities ---------------------------------------------------------

_P_SEEDS = {LieType.B: (0, 0, 2, 3), LieType.C: (0, 1, 1, 2)}
_N_SEEDS = (4, 7, 14, 34)  # N_4 .. N_7
MAX_SEQUENCE_RANK = 60


def _linrec(seeds: Sequence[int], n: int) -> int:
    # a_k = a_{k-1} + a_{k-2} + 3 a_{k-3} + a_{k-4}, seeds a_0..a_3
    a = list(seeds)
    while len(a) <= n:
        a.append(a[-1] + a[-2] + 3 * a[-3] + a[-4])
    return a[n]


def p_count(lie_type, r: int) -> int:
    """|P_r|: elements of A(hr, 0) (types B, C) with no factor s_r."""
    lt = LieType(str(getattr(lie_type, "value", lie_type)).upper())
    if lt not in _P_SEEDS:
        raise ValueError("P_r is defined for types B and C")
    if r < 0:
        raise ValueError("rank must be nonnegative")
    return _linrec(_P_SEEDS[lt], r)


def n_count(r: int) -> int:
    """|N_r| = |L_r| for type D (r >= 4)."""
    if r < 4:
        raise ValueError("N_r is defined for r >= 4")
    return _linrec(_N_SEEDS, r - 4)


@dataclass(frozen=True)
class CountRow:
    rank: int
    total: int
    P: int | None = None
    N: int | None = None
    M: int | None = None
    L: int | None = None


def cardinality_by_recurrence(lie_type, rank: int) -> CountRow:
    lt = LieType(str(getattr(lie_type, "value", lie_type)).upper())
    if lt is LieType.B:
        if rank < 2:
            raise ValueError("type B recurrence starts at rank 2")
        p = [p_count(lt, rank - k) for k in range(3)]
        return CountRow(rank, p[0] + p[1] + p[2], P=p[0])
    if lt is LieType.C:
        if rank < 2:
            raise ValueError("type C recurrence starts at rank 2")
        p0, p1 = p_count(lt, rank), p_count(lt, rank - 1)
        return CountRow(rank, p0 + p1, P=p0)
    if lt is LieType.D:
        if rank < 4:
            raise ValueError("type D recurrence starts at rank 4")
        n = n_count(rank)
        # M_r = N_r + N_{r-1}; N_3 is not tabulated, but M_4 = 5 = |D_4| - N_4
        m = n + (n_count(rank - 1) if rank > 4 else 1)
        return CountRow(rank, m + n, N=n, M=m, L=n)
    raise ValueError("recurrences are defined for types B, C and D")


def fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


SEQUENCE_VARIANTS = {
    LieType.A: ("total",),
    LieType.B: ("total", "P"),
    LieType.C: ("total", "P"),
    LieType.D: ("total", "N", "M", "L"),
}

A_BRUTE_FORCE_MAX = 7


def cardinality_sequence(lie_type, from_rank: int, to_rank: int, variant: str = "total") -> list[int]:
    lt = LieType(str(getattr(lie_type, "value", lie_type)).upper())
    if variant not in SEQUENCE_VARIANTS[lt]:
        raise ValueError(f"variant {variant!r} not available for type {lt.value}")
    if to_rank > MAX_SEQUENCE_RANK or from_rank > to_rank:
        raise ValueError(f"invalid rank range {from_rank}..{to_rank}")
    lo = {"P": 0}.get(variant, lt.min_rank if lt is not LieType.A else 1)
    if from_rank < lo:
        raise ValueError(f"range must start at rank >= {lo}")
    ranks = range(from_rank, to_rank + 1)
    if lt is LieType.A:
        return [type_a_count(r) for r in ranks]
    if variant == "P":
        return [p_count(lt, r) for r in ranks]
    rows = [cardinality_by_recurrence(lt, r) for r in ranks]
    return [getattr(row, variant) if variant != "total" else row.total for row in rows]


@lru_cache(maxsize=None)
def type_a_count(r: int) -> int:
    """|A_r(hr, 0)|: brute force for small rank, Fibonacci F_r beyond."""
    if r <= A_BRUTE_FORCE_MAX:
        rs = build_root_system("A", r)
        return len(alternation_set_bruteforce(rs, special_weight(rs, "highest_root"), (0,) * r))
    return fibonacci(r)


# -- nonzero weights -------------------------------------------------------


def nonconsecutive_subsets(lo: int, hi: int) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []

    def rec(start: int, chosen: tuple[int, ...]):
        out.append(chosen)
        for k in range(start, hi + 1):
            rec(k + 2, chosen + (k,))

    rec(lo, ())
    return out


def omega1_altset_B(rank: int) -> AlternationSet:
    """``A(hr, w1)`` in type B: products of pairwise non-adjacent
    reflections s_i with 3 <= i <= r."""
    rs = build_root_system("B", rank)
    elements = [from_word(rs, list(sub)) for sub in nonconsecutive_subsets(3, rank)]
    lam = special_weight(rs, "highest_root")
    return make_set(rs, lam, special_weight(rs, "omega1_B"), elements)


def omega1_census(rank: int) -> dict[tuple[bool, int], int]:
    """Counts of ``A(hr, w1)`` in type B keyed by (contains s_r, length)."""
    out: dict[tuple[bool, int], int] = {}
    for sub in nonconsecutive_subsets(3, rank):
        key = (rank in sub, len(sub))
        out[key] = out.get(key, 0) + 1
    return out


def omega1_census_printed(rank: int, k: int, with_sr: bool) -> int:
    """The binomial census as stated: ``C(r-3-k, k)`` elements of length k
    without s_r, ``C(r-4-k, k)`` of length k+1 with s_r (0 when the top is
    negative)."""
    n = rank - 4 - k if with_sr else rank - 3 - k
    return comb(n, k) if n >= 0 and k >= 0 else 0


def omega1_census_table(rank: int) -> list[dict]:
    """Actual and stated census side by side, one row per (branch, k)."""
    actual = omega1_census(rank)
    rows = []
    for k in range(rank):
        for with_sr in (False, True):
            ell = k + 1 if with_sr else k
            rows.append(
                {
                    "with_sr": with_sr,
                    "k": k,
                    "length": ell,
                    "actual": actual.get((with_sr, ell), 0),
                    "stated": omega1_census_printed(rank, k, with_sr),
                }
            )
    return rows
