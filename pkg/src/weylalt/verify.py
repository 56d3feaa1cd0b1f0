"""Named verification suites.  Each returns a list of JSON-ready check
records carrying a ``pass`` flag."""

from __future__ import annotations

from .altset import (
    alternation_set_bruteforce,
    cardinality_by_recurrence,
    p_count,
)
from .golden import REFERENCE_TABLES, compare_table, compare_example
from .multiplicity import multiplicity_q, omega1_qmult_B, verify_exponent_identity
from .partition import highest_root_series, taylor_coefficients
from .qpoly import QPoly
from .rootsys import build_root_system, special_weight
from .weylgroup import DEFAULT_CAP, canonical_word

SUITES = ("tables", "exponents", "recurrences", "gf", "omega", "all")

GENERATING_FUNCTIONS = {
    "B": ((0, 1, -2, 1), (1, -5, 5)),
    "C": ((0, 1, -2), (1, -5, 5)),
}
GF_TERMS = 8
OMEGA1_CLOSED_MAX = 12
OMEGA1_BRUTE_MAX = 6


def _ranks(lie_type: str, max_rank: int) -> range:
    lo = 4 if lie_type == "D" else 2
    return range(lo, max_rank + 1)


def suite_tables(max_rank: int = 6, **_) -> list[dict]:
    out = [compare_example().as_dict()] if max_rank >= 3 else []
    out += [compare_table(lt, r).as_dict() for lt, r in REFERENCE_TABLES if r <= max_rank]
    return out


def suite_exponents(max_rank: int = 6, cap: int = DEFAULT_CAP, workers: int = 1) -> list[dict]:
    return [
        verify_exponent_identity(lt, r, cap=cap, workers=workers)
        for lt in ("B", "C", "D")
        for r in _ranks(lt, max_rank)
    ]


def suite_recurrences(max_rank: int = 7, cap: int = DEFAULT_CAP, workers: int = 1) -> list[dict]:
    out = []
    for lt in ("B", "C", "D"):
        for r in _ranks(lt, max_rank):
            rs = build_root_system(lt, r)
            alt = alternation_set_bruteforce(rs, special_weight(rs, "highest_root"), (0,) * r, cap=cap, workers=workers)
            words = [canonical_word(rs, s) for s in alt]
            row = cardinality_by_recurrence(lt, r)
            expected = {"total": row.total}
            computed = {"total": len(words)}
            if lt == "D":
                expected |= {"N": row.N, "M": row.M}
                computed |= {"N": sum(1 in w for w in words), "M": sum(1 not in w for w in words)}
            else:
                expected["P"] = p_count(lt, r)
                computed["P"] = sum(r not in w for w in words)
            out.append(
                {
                    "check": "cardinality",
                    "type": lt,
                    "rank": r,
                    "expected": expected,
                    "computed": computed,
                    "pass": expected == computed,
                }
            )
    return out


def suite_gf(**_) -> list[dict]:
    out = []
    for lt, (num, den) in GENERATING_FUNCTIONS.items():
        computed = highest_root_series(lt, GF_TERMS)
        expected = [int(x) for x in taylor_coefficients(num, den, GF_TERMS + 1)[1:]]
        out.append(
            {
                "check": "generating_function",
                "type": lt,
                "terms": GF_TERMS,
                "expected": expected,
                "computed": computed,
                "pass": expected == computed,
            }
        )
    return out


def suite_omega(max_rank: int = 6, cap: int = DEFAULT_CAP, workers: int = 1) -> list[dict]:
    out = []
    for lt in ("A", "B", "C", "D"):
        lo = {"A": 1, "D": 4}.get(lt, 2)
        for r in range(lo, max_rank + 1):
            rs = build_root_system(lt, r)
            hr = special_weight(rs, "highest_root")
            alt = alternation_set_bruteforce(rs, hr, hr, cap=cap, workers=workers)
            words = [canonical_word(rs, s) for s in alt]
            out.append(_record("set_lambda_lambda", lt, r, [[]], words))
    for r in range(2, OMEGA1_CLOSED_MAX + 1):
        expected = QPoly.monomial(r).to_json()
        out.append(_record("omega1_qmult_closed_form", "B", r, expected, omega1_qmult_B(r, "closed").to_json()))
        if r <= min(OMEGA1_BRUTE_MAX, max_rank):
            out.append(_record("omega1_qmult_bruteforce", "B", r, expected, omega1_qmult_B(r, "bruteforce").to_json()))
    for r in range(2, max(max_rank, 7) + 1):
        rs = build_root_system("C", r)
        hr, w2 = special_weight(rs, "highest_root"), special_weight(rs, "omega2_C")
        alt = alternation_set_bruteforce(rs, hr, w2, cap=cap, workers=workers)
        out.append(_record("omega2_set", "C", r, [[]], [canonical_word(rs, s) for s in alt]))
        out.append(_record("omega2_qmult", "C", r, [0, 1], multiplicity_q(rs, hr, w2, cap=cap, workers=workers).to_json()))
    return out


def _record(check, lt, r, expected, computed) -> dict:
    return {"check": check, "type": lt, "rank": r, "expected": expected, "computed": computed, "pass": expected == computed}


_RUNNERS = {
    "tables": (suite_tables, 6),
    "exponents": (suite_exponents, 6),
    "recurrences": (suite_recurrences, 7),
    "gf": (suite_gf, None),
    "omega": (suite_omega, 6),
}


def run_suite(name: str, max_rank: int | None = None, cap: int = DEFAULT_CAP, workers: int = 1) -> dict:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    names = [s for s in SUITES if s != "all"] if name == "all" else [name]
    checks = []
    for n in names:
        fn, default = _RUNNERS[n]
        checks += [dict(c, suite=n) for c in fn(max_rank=max_rank or default or 0, cap=cap, workers=workers)]
    return {"suite": name, "checks": checks, "count": len(checks), "pass": all(c["pass"] for c in checks)}
