"""Kostant's partition function and its q-analog.

Both are computed by a memoized recursion over the positive roots in their
fixed (lexicographic root-coordinate) order: ``count(j, v)`` sums, over the
multiplicity ``t`` of root ``j``, the ways to finish ``v - t * root_j`` with
the remaining roots.  Since every positive root has nonnegative root
coordinates, any branch with a negative coordinate is dead.
"""

from __future__ import annotations

import sys
import threading
from itertools import combinations_with_replacement
from fractions import Fraction
from typing import Sequence

from .qpoly import QPoly
from .rootsys import LieType, RootSystem, build_root_system, to_root_coords

MAX_SERIES_RANK = 9


class _Memo:
    """Per-root-system caches.  Guarded by a lock so shared use from threads
    cannot interleave partial writes."""

    def __init__(self, rs: RootSystem):
        self.roots = rs.positive_coords
        self.q: dict[tuple[int, tuple[int, ...]], QPoly] = {}
        self.plain: dict[tuple[int, tuple[int, ...]], int] = {}
        self.lock = threading.Lock()


_MEMOS: dict[tuple[LieType, int], _Memo] = {}
_MEMOS_LOCK = threading.Lock()


def _memo(rs: RootSystem) -> _Memo:
    key = (rs.lie_type, rs.rank)
    with _MEMOS_LOCK:
        m = _MEMOS.get(key)
        if m is None:
            m = _MEMOS[key] = _Memo(rs)
        return m


def clear_cache() -> None:
    with _MEMOS_LOCK:
        _MEMOS.clear()


def _check(rs: RootSystem, xi: Sequence[int]) -> tuple[int, ...]:
    if len(xi) != rs.rank:
        raise ValueError(f"expected {rs.rank} root coordinates, got {len(xi)}")
    return tuple(int(x) for x in xi)


def _count_q(memo: _Memo, j: int, v: tuple[int, ...]) -> QPoly:
    roots = memo.roots
    if j == len(roots):
        return QPoly.one() if not any(v) else QPoly.zero()
    key = (j, v)
    hit = memo.q.get(key)
    if hit is not None:
        return hit
    beta = roots[j]
    total = QPoly.zero()
    t = 0
    cur = v
    while True:
        sub = _count_q(memo, j + 1, cur)
        if not sub.is_zero():
            total = total + sub.shift(t)
        cur = tuple(a - b for a, b in zip(cur, beta))
        if min(cur) < 0:
            break
        t += 1
    memo.q[key] = total
    return total


def _count(memo: _Memo, j: int, v: tuple[int, ...]) -> int:
    roots = memo.roots
    if j == len(roots):
        return 0 if any(v) else 1
    key = (j, v)
    hit = memo.plain.get(key)
    if hit is not None:
        return hit
    beta = roots[j]
    total = 0
    cur = v
    while True:
        total += _count(memo, j + 1, cur)
        cur = tuple(a - b for a, b in zip(cur, beta))
        if min(cur) < 0:
            break
    memo.plain[key] = total
    return total


def _ensure_recursion(rs: RootSystem) -> None:
    need = len(rs.positive_coords) + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def kostant_q(rs: RootSystem, xi: Sequence[int]) -> QPoly:
    """q-analog: coefficient of ``q**k`` counts multisets of ``k`` positive
    roots summing to ``xi`` (given in root coordinates)."""
    v = _check(rs, xi)
    if min(v, default=0) < 0:
        return QPoly.zero()
    _ensure_recursion(rs)
    memo = _memo(rs)
    with memo.lock:
        return _count_q(memo, 0, v)


def kostant(rs: RootSystem, xi: Sequence[int]) -> int:
    """Number of ways to write ``xi`` as a sum of positive roots."""
    v = _check(rs, xi)
    if min(v, default=0) < 0:
        return 0
    _ensure_recursion(rs)
    memo = _memo(rs)
    with memo.lock:
        return _count(memo, 0, v)


def highest_root_series(lie_type, max_rank: int, cap: int = MAX_SERIES_RANK) -> list[int]:
    """``[P(highest root) for rank 1..max_rank]`` in type A, B or C.

    B1 and C1 degenerate to A1, so rank 1 contributes the value 1 in every
    type.  Type D is not offered: D2 and D3 are not simple of type D.
    """
    lt = LieType(str(getattr(lie_type, "value", lie_type)).upper())
    if lt is LieType.D:
        raise ValueError("highest_root_series is defined for types A, B and C")
    if max_rank < 1:
        raise ValueError("max_rank must be positive")
    if max_rank > cap:
        raise ValueError(f"max_rank {max_rank} exceeds cap {cap}")
    return [
        1 if r < lt.min_rank else kostant_highest(build_root_system(lt, r))
        for r in range(1, max_rank + 1)
    ]


def kostant_highest(rs: RootSystem) -> int:
    return kostant(rs, to_root_coords(rs, rs.highest_root))


def taylor_coefficients(numerator: Sequence[int], denominator: Sequence[int], n: int) -> list[int]:
    """First ``n`` Taylor coefficients (from x^0) of numerator/denominator,
    by exact long division."""
    if not denominator or denominator[0] == 0:
        raise ValueError("denominator must have a nonzero constant term")
    d0 = denominator[0]
    out: list[Fraction] = []
    for k in range(n):
        acc = Fraction(numerator[k] if k < len(numerator) else 0)
        for j in range(1, min(k, len(denominator) - 1) + 1):
            acc -= denominator[j] * out[k - j]
        out.append(acc / d0)
    if any(x.denominator != 1 for x in out):
        return [x for x in out]  # type: ignore[return-value]
    return [int(x) for x in out]


def check_rational_gf(
    series: Sequence[int], numerator: Sequence[int], denominator: Sequence[int]
) -> bool:
    """True iff ``series[r-1]`` is the coefficient of ``x**r`` in
    numerator/denominator for every provided term."""
    coeffs = taylor_coefficients(numerator, denominator, len(series) + 1)
    return list(series) == list(coeffs[1:])


def naive_partition_table(rs: RootSystem, max_height: int) -> dict[tuple[int, ...], QPoly]:
    """Independent oracle: tally every multiset of positive roots whose
    total height is at most ``max_height``.

    Returns ``{xi: P_q(xi)}`` for every reachable ``xi``; vectors of height
    at most ``max_height`` that are absent have ``P_q = 0``.  No memoization,
    so the cost grows with the number of multisets.
    """
    roots = rs.positive_coords
    tally: dict[tuple[int, ...], dict[int, int]] = {(0,) * rs.rank: {0: 1}}
    for size in range(1, max_height + 1):
        for combo in combinations_with_replacement(roots, size):
            xi = tuple(map(sum, zip(*combo)))
            if sum(xi) <= max_height:
                row = tally.setdefault(xi, {})
                row[size] = row.get(size, 0) + 1
    out = {}
    for xi, row in tally.items():
        coeffs = [0] * (max(row) + 1)
        for k, n in row.items():
            coeffs[k] = n
        out[xi] = QPoly(coeffs)
    return out
