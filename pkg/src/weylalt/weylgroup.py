"""Weyl groups of classical type as (signed) permutations.

An element maps ``eps_i -> signs[i] * eps_{perm[i]}`` (0-based indices).
Products follow the usual left-to-right word notation: ``s2*s3`` is the map
``s2 o s3`` (apply ``s3`` first).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .rootsys import LieType, RootSystem, Weight, is_positive_root_eps

DEFAULT_CAP = 10**8


class GroupTooLarge(RuntimeError):
    def __init__(self, size: int, cap: int):
        super().__init__(f"Weyl group has {size} elements, exceeding the cap of {cap}")
        self.size = size
        self.cap = cap


@dataclass(frozen=True)
class WeylElement:
    perm: tuple[int, ...]
    signs: tuple[int, ...]
    cached_length: int | None = field(default=None, compare=False, hash=False, repr=False)

    @property
    def dim(self) -> int:
        return len(self.perm)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(len(self.perm))) and all(s == 1 for s in self.signs)

    def sort_key(self) -> tuple:
        return (self.perm, self.signs)


def identity(rs: RootSystem) -> WeylElement:
    d = rs.dim
    return WeylElement(tuple(range(d)), (1,) * d, 0)


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """The reflection in the ``i``-th simple root (1-based)."""
    r = rs.rank
    if not isinstance(i, int) or not 1 <= i <= r:
        raise ValueError(f"simple reflection index {i!r} out of range 1..{r}")
    d = rs.dim
    perm = list(range(d))
    signs = [1] * d
    lt = rs.lie_type
    if i < r or lt is LieType.A:
        perm[i - 1], perm[i] = i, i - 1
    elif lt in (LieType.B, LieType.C):
        signs[r - 1] = -1
    else:
        perm[r - 2], perm[r - 1] = r - 1, r - 2
        signs[r - 2] = signs[r - 1] = -1
    return WeylElement(tuple(perm), tuple(signs), 1)


def compose(a: WeylElement, b: WeylElement) -> WeylElement:
    """``a o b``: apply ``b`` first, then ``a``."""
    if a.dim != b.dim:
        raise ValueError("cannot compose elements of different dimension")
    perm = tuple(a.perm[p] for p in b.perm)
    signs = tuple(sb * a.signs[p] for sb, p in zip(b.signs, b.perm))
    return WeylElement(perm, signs)


def inverse(a: WeylElement) -> WeylElement:
    d = a.dim
    perm = [0] * d
    signs = [1] * d
    for i, (p, s) in enumerate(zip(a.perm, a.signs)):
        perm[p] = i
        signs[p] = s
    return WeylElement(tuple(perm), tuple(signs), a.cached_length)


def apply_coords(sigma: WeylElement, x: Sequence[int]) -> tuple[int, ...]:
    out = [0] * len(x)
    for i, (p, s) in enumerate(zip(sigma.perm, sigma.signs)):
        out[p] = s * x[i]
    return tuple(out)


def apply(rs: RootSystem, sigma: WeylElement, w: Weight) -> Weight:
    if sigma.dim != rs.dim or w.dim != rs.dim:
        raise ValueError(f"dimension mismatch for {rs.name}")
    return Weight(apply_coords(sigma, w.coords2))


def length(rs: RootSystem, sigma: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    if sigma.cached_length is not None:
        return sigma.cached_length
    n = sum(
        1
        for beta in rs.positive_roots
        if not is_positive_root_eps(apply_coords(sigma, beta.coords2))
    )
    object.__setattr__(sigma, "cached_length", n)
    return n


def group_order(rs: RootSystem) -> int:
    r = rs.rank
    lt = rs.lie_type
    if lt is LieType.A:
        return math.factorial(r + 1)
    if lt is LieType.D:
        return 2 ** (r - 1) * math.factorial(r)
    return 2**r * math.factorial(r)


def _sign_patterns(rs: RootSystem) -> list[tuple[int, ...]]:
    d = rs.dim
    if rs.lie_type is LieType.A:
        return [(1,) * d]
    pats = list(itertools.product((1, -1), repeat=d))
    if rs.lie_type is LieType.D:
        pats = [p for p in pats if p.count(-1) % 2 == 0]
    return pats


def enumerate_group(rs: RootSystem, cap: int = DEFAULT_CAP) -> Iterator[WeylElement]:
    """Yield every element of W once, in a fixed order."""
    n = group_order(rs)
    if n > cap:
        raise GroupTooLarge(n, cap)
    pats = _sign_patterns(rs)
    for perm in itertools.permutations(range(rs.dim)):
        for signs in pats:
            yield WeylElement(perm, signs)


# -- words ---------------------------------------------------------------

_WORD_TOKEN = re.compile(r"s_?\{?(\d+)\}?")


def parse_word(text: str) -> list[int]:
    """Parse ``"s3*s1"``, ``"s3s1"``, ``"[3,1]"`` or ``"1"`` (identity)."""
    t = text.strip()
    if t in ("", "1", "[]", "e", "id"):
        return []
    if t.startswith("["):
        if not t.endswith("]"):
            raise ValueError(f"malformed word {text!r}")
        body = t[1:-1].strip()
        return [int(x) for x in body.split(",")] if body else []
    compact = t.replace("*", "").replace(" ", "").replace("$", "")
    letters = []
    pos = 0
    while pos < len(compact):
        m = _WORD_TOKEN.match(compact, pos)
        if not m:
            raise ValueError(f"malformed word {text!r}")
        letters.append(int(m.group(1)))
        pos = m.end()
    return letters


def format_word(letters: Sequence[int]) -> str:
    return "*".join(f"s{i}" for i in letters) if letters else "1"


def from_word(rs: RootSystem, letters: Sequence[int] | str) -> WeylElement:
    if isinstance(letters, str):
        letters = parse_word(letters)
    out = identity(rs)
    for i in letters:
        out = compose(out, simple_reflection(rs, i))
    return out


def _is_left_descent(rs: RootSystem, sigma_inv: WeylElement, i: int) -> bool:
    alpha = rs.simple_roots[i - 1].coords2
    return not is_positive_root_eps(apply_coords(sigma_inv, alpha))


def canonical_word(rs: RootSystem, sigma: WeylElement) -> list[int]:
    """Reduced word built by always stripping the smallest left descent."""
    word: list[int] = []
    cur = sigma
    while not cur.is_identity():
        inv = inverse(cur)
        i = next(k for k in range(1, rs.rank + 1) if _is_left_descent(rs, inv, k))
        word.append(i)
        cur = compose(simple_reflection(rs, i), cur)
    if sigma.cached_length is None:
        object.__setattr__(sigma, "cached_length", len(word))
    return word
