import json

import pytest

from permpat.catalog import (
    EXPLICIT_FAMILY_SETS,
    TABLE_ROWS,
    assign_entries,
    classify,
    expand_universe,
    table_of,
    verify,
)
from permpat.formulas import FAMILY_REGISTRY
from permpat.perms import format_pattern_set, parse_pattern_set, pattern_set_key

from conftest import naive_avoiders


def test_universe_sizes_and_order():
    sizes = {tid: len(expand_universe(tid)) for tid in (1, 2, 3, 4)}
    assert sizes == {1: 144, 2: 360, 3: 480, 4: 528}
    u = expand_universe(1)
    assert u == sorted(u, key=pattern_set_key)
    with pytest.raises(ValueError):
        expand_universe(5)


def test_table_of():
    assert table_of(parse_pattern_set("123;1234")) == 1
    assert table_of(parse_pattern_set("123;321;1234")) == 2
    assert table_of(parse_pattern_set("123;132;213;231;312;321;1234")) == 4
    assert table_of(parse_pattern_set("1234;4321")) is None
    assert table_of(parse_pattern_set("123;321")) is None


def test_assignment_examples():
    u = [
        parse_pattern_set("123;1234"),
        parse_pattern_set("123;321;2134"),
        parse_pattern_set("132;213;231;312;1234"),
        parse_pattern_set("123;132;213;231;312;321;1234"),
    ]
    entries = assign_entries(u)
    assert entries[u[0]].row_id == "1.catalan"
    assert entries[u[1]].row_id == "2.zero"
    # a printed singleton-class representative; it stays covered, otherwise
    # the coverage audit falls short of the claimed 504
    assert entries[u[2]].row_id == "4.one"
    assert entries[u[3]] is None


def test_zero_row_thresholds():
    entries = assign_entries([
        parse_pattern_set("123;321;2134"),
        parse_pattern_set("123;132;4321"),
        parse_pattern_set("123;132;231;4321"),
        parse_pattern_set("123;132;213;4321"),
    ])
    thresholds = {format_pattern_set(s): e.valid_from for s, e in entries.items()}
    assert thresholds["123;321;2134"] == 5
    assert thresholds["123;132;4321"] == 7
    assert thresholds["123;132;231;4321"] == 6
    # stated n >= 6 fails for the Fibonacci triple; corrected threshold
    assert thresholds["123;132;213;4321"] == 7


def test_assignment_is_unambiguous_everywhere():
    for tid in (1, 2, 3, 4):
        assign_entries(expand_universe(tid))  # raises on any double match


def test_row_sizes_match_claims_for_first_three_tables():
    for tid in (1, 2, 3):
        universe = expand_universe(tid)
        entries = assign_entries(universe)
        computed: dict[str, int] = {}
        for e in entries.values():
            assert e is not None
            computed[e.row_id] = computed.get(e.row_id, 0) + 1
        for row in TABLE_ROWS:
            if row.table == tid:
                assert computed[row.row_id] == row.claimed_size, row.row_id


def test_table4_sizes():
    entries = assign_entries(expand_universe(4))
    computed: dict[str, int] = {}
    uncovered = 0
    for e in entries.values():
        if e is None:
            uncovered += 1
        else:
            computed[e.row_id] = computed.get(e.row_id, 0) + 1
    assert computed == {"4.zero": 250, "4.two": 198, "4.one": 56}
    assert uncovered == 24


def test_classify_examples():
    entry, table = classify(parse_pattern_set("123;132;3214"), 7)
    assert entry.row_id == "2.tribonacci"
    assert table.counts[1:] == (1, 2, 4, 7, 13, 24, 44)

    entry, _ = classify(parse_pattern_set("123;312;2143"), 4)
    assert entry.row_id == "2.linear-2n"

    entry, table = classify(parse_pattern_set("1234;4321"), 5)
    assert entry is None
    assert len(table.counts) == 6


def test_explicit_families_match_independent_oracle():
    for s, name in EXPLICIT_FAMILY_SETS.items():
        fam = FAMILY_REGISTRY[name]
        for n in (4, 5):
            assert fam(n) == frozenset(naive_avoiders(n, s)), name


def test_verify_small():
    report = verify(6)
    assert report.unexpected_mismatches == []
    for tid, (covered, uncovered) in {1: (144, 0), 2: (360, 0), 3: (480, 0), 4: (504, 24)}.items():
        audit = report.table(tid)
        assert (audit.covered, len(audit.uncovered)) == (covered, uncovered)
    finding_ids = {f["id"] for f in report.findings}
    assert "nn2-missing-class" in finding_ids
    assert "table4-claimed-sizes" in finding_ids
    assert "three-zero-threshold-exception" in finding_ids
    assert all(f["status"] == "confirmed" for f in report.findings)


def test_verify_report_serialization():
    report = verify(5)
    blob = json.dumps(report.to_json_dict())
    decoded = json.loads(blob)
    assert decoded["n_max"] == 5
    assert len(decoded["tables"]) == 4
    t4 = next(t for t in decoded["tables"] if t["id"] == 4)
    assert t4["coverage"]["universe"] == 528
    assert len(t4["coverage"]["uncovered"]) == 24
    rows = report.to_csv_rows()
    assert rows[0] == ["table", "row_id", "set", "n", "oracle", "formula", "verdict"]
    # one line per (set, n)
    assert len(rows) == 1 + (144 + 360 + 480 + 528) * 5
    verdicts = {r[6] for r in rows[1:]}
    assert verdicts <= {"match", "mismatch", "uncovered", "below-threshold-skipped"}
    assert "mismatch" not in verdicts


def test_uncovered_pairs_get_conjectures():
    report = verify(6)
    for pair in report.table(4).uncovered:
        assert pair.conjecture is not None
        assert "0 (n>=3)" in pair.conjecture
