"""Kostant's weight multiplicity formula and its q-analog."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .altset import (
    AlternationSet,
    alternation_set_bruteforce,
    alternation_set_structural,
    kmf_string,
    omega1_altset_B,
)
from .partition import kostant, kostant_q
from .qpoly import QPoly
from .rootsys import LieType, RootSystem, build_root_system, check_rank, special_weight
from .weylgroup import DEFAULT_CAP, GroupTooLarge, WeylElement, canonical_word, group_order, length


@dataclass(frozen=True)
class Term:
    sigma: WeylElement
    word: tuple[int, ...]
    length: int
    string: tuple[int, ...]
    pq: QPoly

    @property
    def value(self) -> int:
        return self.pq.at_one()


def alternation_set(
    rs: RootSystem, lam: Sequence[int], mu: Sequence[int], cap: int = DEFAULT_CAP, workers: int = 1
) -> AlternationSet:
    """Brute force when W fits under ``cap``; otherwise the structural set
    for ``(highest root, 0)``.  Anything else raises :class:`GroupTooLarge`."""
    lam, mu = tuple(lam), tuple(mu)
    n = group_order(rs)
    if n <= cap:
        return alternation_set_bruteforce(rs, lam, mu, cap=cap, workers=workers)
    if (
        rs.lie_type is not LieType.A
        and lam == special_weight(rs, "highest_root")
        and not any(mu)
    ):
        return alternation_set_structural(rs.lie_type, rs.rank)
    raise GroupTooLarge(n, cap)


def terms(alt: AlternationSet) -> list[Term]:
    """Per-element data of the formula, in the set's order."""
    rs = alt.rs
    out = []
    for s in alt:
        string = kmf_string(rs, s, alt.lam, alt.mu)
        out.append(Term(s, tuple(canonical_word(rs, s)), length(rs, s), string, kostant_q(rs, string)))
    return out


def signed_sum(items: Sequence[Term]) -> QPoly:
    total = QPoly.zero()
    for t in items:
        total = total + (t.pq if t.length % 2 == 0 else -t.pq)
    return total


def multiplicity_q(
    rs: RootSystem, lam: Sequence[int], mu: Sequence[int], cap: int = DEFAULT_CAP, workers: int = 1
) -> QPoly:
    return signed_sum(terms(alternation_set(rs, lam, mu, cap=cap, workers=workers)))


def multiplicity(
    rs: RootSystem, lam: Sequence[int], mu: Sequence[int], cap: int = DEFAULT_CAP, workers: int = 1
) -> int:
    return multiplicity_q(rs, lam, mu, cap=cap, workers=workers).at_one()


def exponents(lie_type, rank: int) -> list[int]:
    lt = check_rank(lie_type, rank)
    r = rank
    if lt is LieType.A:
        return list(range(1, r + 1))
    if lt in (LieType.B, LieType.C):
        return list(range(1, 2 * r, 2))
    return sorted(list(range(1, 2 * r - 2, 2)) + [r - 1])


def exponent_polynomial(lie_type, rank: int) -> QPoly:
    total = QPoly.zero()
    for e in exponents(lie_type, rank):
        total = total + QPoly.monomial(e)
    return total


def verify_exponent_identity(lie_type, rank: int, cap: int = DEFAULT_CAP, workers: int = 1) -> dict:
    """Compare ``m_q(highest root, 0)`` with the exponent polynomial.

    Polynomials in the report are ascending coefficient lists.
    """
    rs = build_root_system(lie_type, rank)
    expected = exponent_polynomial(rs.lie_type, rank)
    computed = multiplicity_q(rs, special_weight(rs, "highest_root"), (0,) * rank, cap=cap, workers=workers)
    return {
        "check": "exponent_identity",
        "type": rs.lie_type.value,
        "rank": rank,
        "expected": expected.to_json(),
        "computed": computed.to_json(),
        "pass": expected == computed,
    }


# -- the weight w1 in type B -----------------------------------------------


def _omega1_parts(rank: int, sigma: WeylElement) -> tuple[int, bool]:
    rs = build_root_system("B", rank)
    alt = omega1_altset_B(rank)
    if sigma not in alt:
        raise ValueError("element is not in A(hr, w1)")
    return length(rs, sigma), rank in canonical_word(rs, sigma)


def omega1_partition_closed_form(rank: int, sigma: WeylElement) -> QPoly:
    """``P_q(s(hr + rho) - rho - w1)`` for ``s`` in ``A(hr, w1)``, type B.

    ``q^(1+l) (1+q)^(r-2-2l)`` without an s_r factor and
    ``q^l (1+q)^(r-1-2l)`` with one; checked against :func:`kostant_q`.
    """
    ell, has_sr = _omega1_parts(rank, sigma)
    q, q1 = QPoly.monomial(1), QPoly([1, 1])
    if has_sr:
        return q**ell * q1 ** (rank - 1 - 2 * ell)
    return q ** (1 + ell) * q1 ** (rank - 2 - 2 * ell)


def omega1_partition_closed_form_stated(rank: int, sigma: WeylElement) -> QPoly | None:
    """The stated variant ``q^(1+l)(1+q)^(r-1-2l)`` / ``q^l(1+q)^(r-2l)``,
    kept for comparison.  It is the correct value for rank ``r + 1``."""
    ell, has_sr = _omega1_parts(rank, sigma)
    q, q1 = QPoly.monomial(1), QPoly([1, 1])
    e = rank - 2 * ell if has_sr else rank - 1 - 2 * ell
    if e < 0:
        return None
    return q ** (ell if has_sr else 1 + ell) * q1**e


def omega1_qmult_B(rank: int, path: str = "closed") -> QPoly:
    """``m_q(hr, w1)`` in type B.

    ``path="closed"`` sums the closed forms over the explicit set;
    ``path="bruteforce"`` runs the full formula over the scanned group.
    """
    rs = build_root_system("B", rank)
    if path == "closed":
        total = QPoly.zero()
        for s in omega1_altset_B(rank):
            p = omega1_partition_closed_form(rank, s)
            total = total + (-p if length(rs, s) % 2 else p)
        return total
    if path == "bruteforce":
        return multiplicity_q(rs, special_weight(rs, "highest_root"), special_weight(rs, "omega1_B"))
    raise ValueError(f"unknown path {path!r}")


def typeA_closed_form_check(rank: int) -> bool:
    """Every element of ``A(hr, 0)`` in type A has ``P = 2^(r-1-2 l)``."""
    rs = build_root_system("A", rank)
    lam = special_weight(rs, "highest_root")
    alt = alternation_set_bruteforce(rs, lam, (0,) * rank)
    for s in alt:
        ell = length(rs, s)
        want = 2 ** (rank - 1 - 2 * ell) if rank - 1 - 2 * ell >= 0 else None
        if kostant(rs, kmf_string(rs, s, lam, (0,) * rank)) != want:
            return False
    return True
