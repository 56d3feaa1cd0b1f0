"""Reference tables shipped with the package and their comparison against
exact recomputation.

Rows are matched to group elements through their string: ``lam + rho`` is
regular, so the string determines the element.  A row's content (length,
string, P_q, P) and its word label are checked separately.  Rows known to
disagree carry an ``annotation`` of kind ``content`` or ``label`` holding
the corrected value next to the stored one; the annotated part is
reported but not counted as a failure.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from .altset import alternation_set_bruteforce, kmf_string
from .multiplicity import exponent_polynomial, multiplicity_q
from .partition import kostant, kostant_q
from .qpoly import QPoly
from .rootsys import build_root_system, special_weight
from .weylgroup import canonical_word, enumerate_group, format_word, from_word, length

REFERENCE_TABLES = [("B", r) for r in range(2, 7)] + [("C", r) for r in range(2, 7)] + [("D", r) for r in range(4, 7)]


def load(name: str) -> dict:
    with resources.files("weylalt.data").joinpath(name).open() as fh:
        return json.load(fh)


def load_table(lie_type: str, rank: int) -> dict:
    return load(f"table_{lie_type}{rank}.json")


def load_example() -> dict:
    return load("example_B3.json")


@dataclass
class RowResult:
    """Outcome for one stored row.

    ``content`` covers (length, string, P_q, P); ``label`` is whether the
    printed word names the element the content belongs to.
    """

    word: str
    content_ok: bool
    label_ok: bool
    annotation: str | None = None
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        if self.annotation == "content":
            return self.label_ok
        if self.annotation == "label":
            return self.content_ok
        return self.content_ok and self.label_ok

    def as_dict(self) -> dict:
        return {
            "word": self.word,
            "content_ok": self.content_ok,
            "label_ok": self.label_ok,
            "annotation": self.annotation,
            "mismatches": self.mismatches,
        }


@dataclass
class TableResult:
    name: str
    rows: list[RowResult]
    extra: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.extra and all(r.ok for r in self.rows)

    def annotated(self, kind: str) -> list[RowResult]:
        return [r for r in self.rows if r.annotation == kind]

    def as_dict(self) -> dict:
        return {
            "check": "table",
            "table": self.name,
            "rows": len(self.rows),
            "content_annotated": [r.word for r in self.annotated("content")],
            "label_annotated": [r.word for r in self.annotated("label")],
            "failures": [r.as_dict() for r in self.rows if not r.ok],
            "extra": self.extra,
            "pass": self.passed,
        }


def _parse_printed(text: str) -> QPoly | None:
    try:
        return QPoly.parse(text)
    except (ValueError, IndexError):
        return None


def _by_string(rs, lam, mu) -> dict[tuple[int, ...], object]:
    # lam + rho is regular, so the string determines the element
    return {kmf_string(rs, s, lam, mu): s for s in enumerate_group(rs)}


def _check_row(rs, row, by_string, value_of, with_pq: bool) -> tuple[RowResult, object]:
    word = row["word"]
    kind = row.get("annotation", {}).get("kind")
    bad = []
    sigma = by_string.get(tuple(row["string"]))
    content_ok = sigma is not None
    if sigma is None:
        bad.append(f"no element has string {row['string']}")
    else:
        if length(rs, sigma) != row["length"]:
            bad.append(f"length {length(rs, sigma)} != {row['length']}")
        pq = value_of(sigma)
        if with_pq:
            stored = row.get("pq")
            if stored is None or QPoly.from_json(stored) != pq:
                bad.append(f"pq {pq.format()} != {row['pq_printed']}")
            val = pq.at_one()
        else:
            val = pq
        if val != row["value"]:
            bad.append(f"value {val} != {row['value']}")
        content_ok = not bad
    named = from_word(rs, word)
    target = sigma
    if target is None and "corrected_string" in row.get("annotation", {}):
        target = by_string.get(tuple(row["annotation"]["corrected_string"]))
    label_ok = target is not None and named == target and len(word) == length(rs, named)
    if not label_ok:
        bad.append(f"label {format_word(word)} does not name the row's element")
    return RowResult(format_word(word), content_ok, label_ok, kind, bad), sigma


def compare_table(lie_type: str, rank: int) -> TableResult:
    """Check each stored row, then that the rows cover the whole set."""
    doc = load_table(lie_type, rank)
    rs = build_root_system(lie_type, rank)
    lam = special_weight(rs, "highest_root")
    mu = (0,) * rank
    by_string = _by_string(rs, lam, mu)
    results, seen = [], set()
    for row in doc["rows"]:
        res, sigma = _check_row(rs, row, by_string, lambda s: kostant_q(rs, kmf_string(rs, s, lam, mu)), True)
        results.append(res)
        seen.add(sigma)
    table = TableResult(f"{lie_type}{rank}", results)
    computed = alternation_set_bruteforce(rs, lam, mu)
    table.extra += [f"missing {format_word(canonical_word(rs, s))}" for s in computed.as_set() - seen]
    table.extra += [f"not in set: {r.word}" for r, s in zip(results, [by_string.get(tuple(x["string"])) for x in doc["rows"]]) if s is not None and s not in computed]
    mq = multiplicity_q(rs, lam, mu)
    if mq != _parse_printed(doc["mq_printed"]) or mq != exponent_polynomial(lie_type, rank):
        table.extra.append(f"m_q {mq.format()} != {doc['mq_printed']}")
    return table


def compare_example() -> TableResult:
    """Whole-group table for B3: every row including the zero terms."""
    doc = load_example()
    rs = build_root_system("B", 3)
    lam, mu = special_weight(rs, "highest_root"), (0, 0, 0)
    by_string = _by_string(rs, lam, mu)
    results, seen = [], set()
    for row in doc["rows"]:
        res, sigma = _check_row(rs, row, by_string, lambda s: kostant(rs, kmf_string(rs, s, lam, mu)), False)
        results.append(res)
        seen.add(sigma)
    table = TableResult("B3 whole group", results)
    # a row whose string matches nothing is located through its label
    for row in doc["rows"]:
        if by_string.get(tuple(row["string"])) is None:
            seen.add(from_word(rs, row["word"]))
    group = set(enumerate_group(rs))
    if seen - {None} != group:
        table.extra.append(f"{len(group - seen)} group elements not covered")
    total = 0
    for s in group:
        v = kostant(rs, kmf_string(rs, s, lam, mu))
        total += -v if length(rs, s) % 2 else v
    if total != doc["multiplicity"]:
        table.extra.append(f"signed sum {total} != {doc['multiplicity']}")
    return table


def load_sequences() -> dict:
    """Printed cardinality sequences: ``{type: {variant: {"from", "values"}}}``."""
    return load("sequences.json")
