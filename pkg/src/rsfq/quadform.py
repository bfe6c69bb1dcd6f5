"""Symmetric bilinear and quadratic forms on coefficient spaces over F_q.

The base form pairs adjacent coefficients: B(t^i, t^j) = 1/2 when
|i - j| = 1 and 0 otherwise, so the quadratic value of a coefficient vector
is its lag-1 autocorrelation.  Composing with multiplication by a fixed
monic polynomial a gives the form h -> S(a h) on the space of h with
deg h <= n - deg a; differences of two such forms are built entrywise from
autocorrelations of a and b.

Forms live on the full degree-at-most space of dimension n - k + 1.  The
restriction to monic h (top coefficient fixed to 1) is affine; its
quadratic part is the principal submatrix with the top index deleted, and
monic_slice_rank reports that rank.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegreeBoundError, NotMonicError
from .field import FieldCtx
from .poly import PolyRing, PolySet
from .rudin import autocorrelation


@dataclass(frozen=True)
class SymMatrix:
    """Symmetric matrix over F_q; symmetry is checked at construction."""

    ctx: FieldCtx
    rows: tuple

    def __post_init__(self):
        m = len(self.rows)
        for row in self.rows:
            if len(row) != m:
                raise ValueError("matrix is not square")
        for i in range(m):
            for j in range(i):
                if self.rows[i][j] != self.rows[j][i]:
                    raise ValueError("matrix is not symmetric")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int):
        return self.rows[i][j]


def sym_matrix(ctx: FieldCtx, rows) -> SymMatrix:
    return SymMatrix(ctx, tuple(tuple(row) for row in rows))


def adjacent_pair_matrix(ctx: FieldCtx, m: int) -> SymMatrix:
    """The base form: 1/2 on the |i - j| = 1 band, dimension m."""
    if m < 1:
        raise DegreeBoundError("dimension must be >= 1")
    half = ctx.inv(ctx.scalar(2))
    zero = ctx.zero()
    rows = [[zero] * m for _ in range(m)]
    for i in range(m - 1):
        rows[i][i + 1] = half
        rows[i + 1][i] = half
    return sym_matrix(ctx, rows)


def quad_eval(mat: SymMatrix, x):
    """x^T M x."""
    ctx = mat.ctx
    total = ctx.zero()
    for i, xi in enumerate(x):
        if xi == ctx.zero():
            continue
        row_val = ctx.zero()
        for j, xj in enumerate(x):
            row_val = ctx.add(row_val, ctx.mul(mat.rows[i][j], xj))
        total = ctx.add(total, ctx.mul(xi, row_val))
    return total


def bilinear_eval(mat: SymMatrix, x, y):
    """x^T M y."""
    ctx = mat.ctx
    total = ctx.zero()
    for i, xi in enumerate(x):
        if xi == ctx.zero():
            continue
        for j, yj in enumerate(y):
            total = ctx.add(total, ctx.mul(xi, ctx.mul(mat.rows[i][j], yj)))
    return total


def matrix_rank(mat: SymMatrix) -> int:
    """Exact rank over F_q by Gaussian elimination."""
    ctx = mat.ctx
    m = mat.dim
    rows = [list(r) for r in mat.rows]
    zero = ctx.zero()
    rank = 0
    for col in range(m):
        pivot = None
        for r in range(rank, m):
            if rows[r][col] != zero:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = ctx.inv(rows[rank][col])
        for r in range(rank + 1, m):
            c = rows[r][col]
            if c != zero:
                factor = ctx.mul(c, inv)
                rows[r] = [
                    ctx.sub(rows[r][j], ctx.mul(factor, rows[rank][j]))
                    for j in range(m)
                ]
        rank += 1
    return rank


def kernel_dim(mat: SymMatrix) -> int:
    return mat.dim - matrix_rank(mat)


def principal_submatrix(mat: SymMatrix, drop: int) -> SymMatrix:
    keep = [i for i in range(mat.dim) if i != drop]
    return sym_matrix(
        mat.ctx, [[mat.rows[i][j] for j in keep] for i in keep]
    )


def monic_slice_rank(mat: SymMatrix) -> int:
    """Rank of the quadratic part after fixing the top coefficient to 1.

    On the affine slice x_top = 1 the form becomes (quadratic in the rest) +
    (linear) + (constant); the quadratic part is the principal submatrix
    with the last index removed.
    """
    if mat.dim == 1:
        return 0
    return matrix_rank(principal_submatrix(mat, mat.dim - 1))


def _multiplication_rows(ring: PolyRing, a, m: int) -> list:
    """Matrix of h -> a*h from coefficient space dim m to dim deg a + m."""
    ctx = ring.ctx
    k = len(a) - 1
    zero = ctx.zero()
    rows = [[zero] * m for _ in range(k + m)]
    for col in range(m):
        for i, ai in enumerate(a):
            rows[col + i][col] = ai
    return rows


def qa_matrix(ring: PolyRing, a, n: int) -> SymMatrix:
    """Matrix of h -> S(a h) on {deg h <= n - deg a}, via map composition.

    Built as A^T B A where A is multiplication by a and B the base form on
    the product space of dimension n + 1.
    """
    if not ring.is_monic(a):
        raise NotMonicError("multiplier must be monic")
    k = len(a) - 1
    if k >= n:
        raise DegreeBoundError(f"need deg a = {k} < n = {n}")
    ctx = ring.ctx
    m = n - k + 1
    amap = _multiplication_rows(ring, a, m)
    half = ctx.inv(ctx.scalar(2))
    zero = ctx.zero()
    # (B A)[r][c] = half * (A[r-1][c] + A[r+1][c]): B is the adjacent band.
    ba = [[zero] * m for _ in range(n + 1)]
    for r in range(n + 1):
        for c in range(m):
            acc = zero
            if r > 0:
                acc = ctx.add(acc, amap[r - 1][c])
            if r < n:
                acc = ctx.add(acc, amap[r + 1][c])
            ba[r][c] = ctx.mul(half, acc)
    rows = [[zero] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            acc = zero
            for r in range(n + 1):
                if amap[r][i] != zero:
                    acc = ctx.add(acc, ctx.mul(amap[r][i], ba[r][j]))
            rows[i][j] = acc
    return sym_matrix(ctx, rows)


def qa_matrix_entrywise(ring: PolyRing, a, n: int) -> SymMatrix:
    """Same form as qa_matrix, built from autocorrelations of a.

    Entry (i, j) is (S_a(|i-j-1|) + S_a(|j-i-1|)) / 2 where S_a(lag) is the
    autocorrelation of a at that lag (zero beyond deg a).  Kept as a second,
    independent construction; both routes must agree.
    """
    if not ring.is_monic(a):
        raise NotMonicError("multiplier must be monic")
    k = len(a) - 1
    if k >= n:
        raise DegreeBoundError(f"need deg a = {k} < n = {n}")
    ctx = ring.ctx
    m = n - k + 1
    half = ctx.inv(ctx.scalar(2))
    corr = [autocorrelation(ring, a, lag, k) for lag in range(2 * m + k + 2)]
    def s(lag):
        return corr[lag] if lag < len(corr) else ctx.zero()
    rows = [
        [
            ctx.mul(half, ctx.add(s(abs(i - j - 1)), s(abs(j - i - 1))))
            for j in range(m)
        ]
        for i in range(m)
    ]
    return sym_matrix(ctx, rows)


def bab_matrix(ring: PolyRing, a, b, n: int) -> SymMatrix:
    """Matrix of h -> S(a h) - S(b h) for monic a, b of equal degree k < n/2."""
    if not ring.is_monic(a) or not ring.is_monic(b):
        raise NotMonicError("both multipliers must be monic")
    k = len(a) - 1
    if len(b) - 1 != k:
        raise DegreeBoundError("multipliers must have equal degree")
    if 2 * k >= n:
        raise DegreeBoundError(f"need 2k = {2 * k} < n = {n}")
    ctx = ring.ctx
    m = n - k + 1
    half = ctx.inv(ctx.scalar(2))
    corr_a = [autocorrelation(ring, a, lag, k) for lag in range(2 * m + k + 2)]
    corr_b = [autocorrelation(ring, b, lag, k) for lag in range(2 * m + k + 2)]
    def diff(lag):
        if lag >= len(corr_a):
            return ctx.zero()
        return ctx.sub(corr_a[lag], corr_b[lag])
    rows = [
        [
            ctx.mul(half, ctx.add(diff(abs(i - j - 1)), diff(abs(j - i - 1))))
            for j in range(m)
        ]
        for i in range(m)
    ]
    return sym_matrix(ctx, rows)


@dataclass
class RankReport:
    """Observed rank data for one scanned form."""

    q: int
    n: int
    k: int
    form: str
    a: str
    b: str | None
    rank: int
    kernel_dim: int
    bound: int
    monic_rank: int
    passed: bool

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "form": self.form,
            "a": self.a,
            "b": self.b,
            "rank": self.rank,
            "kernel_dim": self.kernel_dim,
            "bound": self.bound,
            "monic_rank": self.monic_rank,
            "pass": self.passed,
        }


def scan_qa_ranks(ring: PolyRing, n: int, cap: int | None = None) -> list:
    """Rank scan of h -> S(a h) over every monic a of degree k < n/2.

    Each report records the exact rank against the lower bound n - k - 1
    (pass is rank >= bound), plus the kernel dimension and the monic-slice
    rank for inspection.  The scan only observes; callers decide which of
    the recorded quantities to assert.  Boundary instances where the bound
    fails do exist (e.g. q = 3, n = 6, k = 2, a = t^2+t+2 has rank 2), so
    downstream checks must not assume an all-pass outcome.
    """
    if n < 2:
        raise DegreeBoundError("rank scan needs n >= 2")
    reports = []
    q = ring.ctx.q
    for k in range((n - 1) // 2 + 1):
        ring.check_cap(ring.cardinality(PolySet.MONIC, k), cap)
        for a in ring.enumerate(PolySet.MONIC, k, cap):
            mat = qa_matrix(ring, a, n)
            rank = matrix_rank(mat)
            mrank = monic_slice_rank(mat)
            bound = n - k - 1
            reports.append(RankReport(
                q=q, n=n, k=k, form="qa", a=ring.to_str(a), b=None,
                rank=rank, kernel_dim=mat.dim - rank, bound=bound,
                monic_rank=mrank, passed=rank >= bound,
            ))
    return reports


def scan_bab_ranks(ring: PolyRing, n: int, k: int, cap: int | None = None) -> dict:
    """Rank scan of h -> S(a h) - S(b h) over ordered monic pairs of degree k.

    Pairs whose reversal products coincide are excluded from the rank bound
    and collected per a as the coincidence set; every other pair is checked
    against the lower bound n - 2k - 1 (pass is rank >= bound), with the
    monic-slice rank recorded alongside.
    """
    if 2 * k >= n:
        raise DegreeBoundError(f"need 2k = {2 * k} < n = {n}")
    ring.check_cap(ring.cardinality(PolySet.MONIC, k) ** 2, cap)
    q = ring.ctx.q
    monics = list(ring.enumerate(PolySet.MONIC, k, cap))
    star = {a: ring.mul(ring.reverse(a, k), a) for a in monics}
    reports = []
    coincidence = []
    excluded = 0
    for a in monics:
        bset = [b for b in monics if star[b] == star[a]]
        coincidence.append({"a": ring.to_str(a), "size": len(bset)})
        for b in monics:
            if star[a] == star[b]:
                excluded += 1
                continue
            mat = bab_matrix(ring, a, b, n)
            rank = matrix_rank(mat)
            mrank = monic_slice_rank(mat)
            bound = n - 2 * k - 1
            reports.append(RankReport(
                q=q, n=n, k=k, form="bab", a=ring.to_str(a), b=ring.to_str(b),
                rank=rank, kernel_dim=mat.dim - rank, bound=bound,
                monic_rank=mrank, passed=rank >= bound,
            ))
    return {
        "reports": reports,
        "coincidence_sets": coincidence,
        "pairs_checked": len(reports),
        "pairs_excluded": excluded,
    }
