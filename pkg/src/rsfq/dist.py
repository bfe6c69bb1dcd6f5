"""Distribution of the Rudin-Shapiro value over monic irreducibles.

distribution(ring, n) enumerates every monic irreducible of degree n,
tallies the exact count per field value, and carries the exact expected
value total/q and the prime-polynomial bracket
(q^n - 2 q^(n/2)) / n <= total <= q^n / n as construction-time invariants
(checked in exact integer arithmetic; violations raise).

Counting is partitionable: the monic index space splits into contiguous
ranges which share coefficient prefixes, so per-range tallies merge by
integer addition in any order.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import DegreeBoundError, ExactIdentityError
from .field import FieldCtx
from .poly import PolyRing, PolySet
from .rudin import rudin_shapiro


def pnt_bracket_exact(q: int, n: int, count: int) -> bool:
    """Exact check of q^n/n - 2 q^(n/2)/n <= count <= q^n/n.

    The lower bound compares (q^n - n*count)^2 against 4 q^n to avoid
    irrational intermediate values for odd n.
    """
    qn = q**n
    if n * count > qn:
        return False
    deficit = qn - n * count
    return deficit <= 0 or deficit * deficit <= 4 * qn


def pnt_bracket_floats(q: int, n: int) -> tuple[float, float]:
    qn = float(q**n)
    return (qn - 2 * qn**0.5) / n, qn / n


@dataclass
class DistTable:
    """Exact per-value counts of the Rudin-Shapiro statistic over P(n)."""

    q: int
    n: int
    counts: dict          # element string -> exact count, every value present
    total: int
    expected: Fraction
    max_abs_dev: Fraction
    pnt_lower: float
    pnt_upper: float

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "counts": dict(self.counts),
            "total": self.total,
            "expected": str(self.expected),
            "max_abs_dev": str(self.max_abs_dev),
            "pnt_lower": self.pnt_lower,
            "pnt_upper": self.pnt_upper,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["gamma", "count", "expected", "deviation"])
        for gamma, count in self.counts.items():
            dev = abs(Fraction(count) - self.expected)
            writer.writerow([gamma, count, str(self.expected), str(dev)])
        return out.getvalue()


def _count_range(ctx_key: tuple, n: int, lo: int, hi: int) -> list:
    p, e, modulus = ctx_key
    ring = PolyRing(FieldCtx(p, e, modulus or None))
    ctx = ring.ctx
    hist = [0] * ctx.q
    for f in ring.monic_range(n, lo, hi):
        if ring.is_irreducible(f):
            hist[ctx.element_index(rudin_shapiro(ring, f))] += 1
    return hist


def distribution(ring: PolyRing, n: int, cap: int | None = None,
                 jobs: int = 1) -> DistTable:
    """Exact distribution table for degree n (requires n >= 2)."""
    if n < 2:
        raise DegreeBoundError("distribution needs degree >= 2")
    ctx = ring.ctx
    q = ctx.q
    size = ring.cardinality(PolySet.MONIC, n)
    ring.check_cap(size, cap)
    if jobs > 1:
        chunks = _split_range(size, jobs)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(
                _count_range,
                [ctx.key()] * len(chunks),
                [n] * len(chunks),
                [lo for lo, _ in chunks],
                [hi for _, hi in chunks],
            ))
        hist = [sum(col) for col in zip(*partials)]
    else:
        hist = _count_range(ctx.key(), n, 0, size)
    total = sum(hist)
    expected = Fraction(total, q)
    counts = {ctx.element_str(ctx.element_at(i)): hist[i] for i in range(q)}
    max_dev = max(abs(Fraction(c) - expected) for c in hist)
    if not pnt_bracket_exact(q, n, total):
        raise ExactIdentityError(
            f"irreducible count {total} violates the prime-polynomial "
            f"bracket for q={q}, n={n}"
        )
    lower, upper = pnt_bracket_floats(q, n)
    return DistTable(
        q=q, n=n, counts=counts, total=total, expected=expected,
        max_abs_dev=max_dev, pnt_lower=lower, pnt_upper=upper,
    )


def _split_range(size: int, parts: int) -> list:
    parts = max(1, min(parts, size))
    step, extra = divmod(size, parts)
    chunks = []
    lo = 0
    for i in range(parts):
        hi = lo + step + (1 if i < extra else 0)
        chunks.append((lo, hi))
        lo = hi
    return chunks


def table_from_json(text: str) -> dict:
    data = json.loads(text)
    data["counts"] = {k: int(v) for k, v in data["counts"].items()}
    return data


def table_from_csv(text: str) -> dict:
    """Recover the per-value counts from an emitted CSV table."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if header != ["gamma", "count", "expected", "deviation"]:
        raise ValueError(f"unexpected CSV header {header!r}")
    counts = {}
    for row in reader:
        if not row:
            continue
        counts[row[0]] = int(row[1])
    return {"counts": counts, "total": sum(counts.values())}


def deviation_trend(ring: PolyRing, n_max: int, cap: int | None = None,
                    jobs: int = 1) -> list:
    """Relative deviation per degree, for inspection (nothing asymptotic)."""
    rows = []
    for n in range(2, n_max + 1):
        table = distribution(ring, n, cap, jobs)
        rel = float(table.max_abs_dev / table.expected) if table.total else 0.0
        rows.append({
            "n": n,
            "total": table.total,
            "expected": str(table.expected),
            "max_abs_dev": str(table.max_abs_dev),
            "relative_dev": rel,
        })
    return rows
