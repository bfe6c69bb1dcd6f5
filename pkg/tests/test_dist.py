import json
import os
from fractions import Fraction

import pytest

from rsfq import (
    DegreeBoundError,
    FieldCtx,
    PolyRing,
    deviation_trend,
    distribution,
)
from rsfq.dist import table_from_csv, table_from_json

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


def load_golden(q, n):
    path = os.path.join(GOLDEN_DIR, f"dist_q{q}_n{n}.json")
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

def test_n2_hand_checkable(f3):
    """Three irreducible quadratics, one per statistic value."""
    table = distribution(f3, 2)
    assert table.counts == {"0": 1, "1": 1, "2": 1}
    assert table.total == 3
    assert table.expected == Fraction(1)


def test_n3_frozen(f3):
    table = distribution(f3, 3)
    assert table.total == 8
    assert table.counts == {"0": 4, "1": 2, "2": 2}
    assert table.max_abs_dev == Fraction(4, 3)


def test_matches_golden_tables(f3):
    for n in range(2, 8):
        table = distribution(f3, n)
        golden = load_golden(3, n)
        assert table.counts == golden["counts"]
        assert table.total == golden["total"]


def test_partition_invariant(f3, f5):
    for ring, n_values in ((f3, range(2, 7)), (f5, range(2, 5))):
        for n in n_values:
            table = distribution(ring, n)
            assert sum(table.counts.values()) == table.total
            assert set(table.counts) == {
                ring.ctx.element_str(x) for x in ring.ctx.elements()
            }


def test_degree_too_small(f3):
    with pytest.raises(DegreeBoundError):
        distribution(f3, 1)


def test_parallel_counts_identical(f3):
    seq = distribution(f3, 5, jobs=1)
    par = distribution(f3, 5, jobs=4)
    assert seq.counts == par.counts
    assert seq.total == par.total


def test_extension_field_table():
    ring = PolyRing(FieldCtx(3, 2))
    table = distribution(ring, 2)
    assert table.total == sum(table.counts.values())
    assert len(table.counts) == 9
    # P(2) over F_9 has (81 - 9) / 2 = 36 members
    assert table.total == 36


# ---------------------------------------------------------------------------
# serialization round trips
# ---------------------------------------------------------------------------

def test_json_round_trip(f3):
    table = distribution(f3, 4)
    parsed = table_from_json(table.to_json())
    assert parsed["counts"] == table.counts
    assert parsed["total"] == table.total
    assert parsed["expected"] == str(table.expected)


def test_csv_round_trip(f3):
    table = distribution(f3, 5)
    parsed = table_from_csv(table.to_csv())
    assert parsed["counts"] == table.counts
    assert parsed["total"] == table.total


def test_csv_header_exact(f3):
    first_line = distribution(f3, 3).to_csv().splitlines()[0]
    assert first_line == "gamma,count,expected,deviation"


# ---------------------------------------------------------------------------
# trend
# ---------------------------------------------------------------------------

def test_trend_rows(f3):
    rows = deviation_trend(f3, 6)
    assert [row["n"] for row in rows] == [2, 3, 4, 5, 6]
    for row in rows:
        assert row["relative_dev"] >= 0
        golden = load_golden(3, row["n"])
        assert row["total"] == golden["total"]
