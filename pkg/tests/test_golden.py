import pytest

from weylalt.golden import (
    REFERENCE_TABLES,
    compare_table,
    compare_example,
    load_table,
    load_example,
    load_sequences,
)


def test_example_shape():
    doc = load_example()
    assert len(doc["rows"]) == 48 and doc["multiplicity"] == 3


def test_example_comparison():
    res = compare_example()
    assert res.passed
    assert not res.extra
    assert [r.word for r in res.annotated("label")] == ["s2*s3*s1*s2*s3*s3"]
    assert [r.word for r in res.annotated("content")] == ["s3*s2*s1"]


@pytest.mark.parametrize("lt,r", REFERENCE_TABLES)
def test_reference_table(lt, r):
    res = compare_table(lt, r)
    assert res.passed, res.as_dict()
    assert len(res.rows) == len(load_table(lt, r)["rows"])


def test_c6_garbled_row_is_the_only_content_annotation():
    content = [(lt, r, row.word) for lt, r in REFERENCE_TABLES for row in compare_table(lt, r).annotated("content")]
    assert content == [("C", 6, "s2*s4*s6")]


def test_sequence_data_present():
    seq = load_sequences()
    assert len(seq["B"]["total"]["values"]) == 20
    assert seq["D"]["total"]["values"][-1] == 954809
