import pytest

from rsfq import (
    DegreeBoundError,
    FieldCtx,
    NotMonicError,
    PolyRing,
    PolySet,
    adjacent_pair_matrix,
    autocorrelation,
    bab_matrix,
    matrix_rank,
    monic_slice_rank,
    qa_matrix,
    qa_matrix_entrywise,
    quad_eval,
    scan_bab_ranks,
    scan_qa_ranks,
    sym_matrix,
)


# ---------------------------------------------------------------------------
# base form and rank
# ---------------------------------------------------------------------------

def test_base_matrix_frozen(f3):
    ctx = f3.ctx
    m2 = adjacent_pair_matrix(ctx, 2)
    assert m2.rows == ((0, 2), (2, 0))      # 1/2 = 2 in F_3
    assert adjacent_pair_matrix(ctx, 1).rows == ((0,),)


def test_base_matrix_evaluates_lag1(f3):
    ctx = f3.ctx
    for n in range(1, 5):
        base = adjacent_pair_matrix(ctx, n + 1)
        for f in f3.enumerate(PolySet.DEGREE_AT_MOST, n):
            x = tuple(f3.coeff(f, i) for i in range(n + 1))
            assert quad_eval(base, x) == autocorrelation(f3, f, 1, n)


def test_matrix_rank_frozen(f3):
    ctx = f3.ctx
    zero = ctx.zero()
    one = ctx.one()
    assert matrix_rank(sym_matrix(ctx, [[zero] * 3] * 3)) == 0
    ident = [[one if i == j else zero for j in range(3)] for i in range(3)]
    assert matrix_rank(sym_matrix(ctx, ident)) == 3
    assert matrix_rank(sym_matrix(ctx, [[0, 2], [2, 0]])) == 2


def test_sym_matrix_rejects_asymmetric(f3):
    with pytest.raises(ValueError):
        sym_matrix(f3.ctx, [[0, 1], [2, 0]])


def test_rank_plus_kernel_is_dim(f3):
    for n in range(2, 6):
        for k in range((n - 1) // 2 + 1):
            for a in f3.enumerate(PolySet.MONIC, k):
                mat = qa_matrix(f3, a, n)
                assert matrix_rank(mat) <= mat.dim


# ---------------------------------------------------------------------------
# multiplier forms
# ---------------------------------------------------------------------------

def test_qa_frozen_cases(f3):
    mat = qa_matrix(f3, f3.from_ints([0, 1]), 4)
    assert mat.rows == (
        (0, 2, 0, 0), (2, 0, 2, 0), (0, 2, 0, 2), (0, 0, 2, 0),
    )
    assert matrix_rank(mat) == 4
    base3 = qa_matrix(f3, f3.one, 2)
    assert matrix_rank(base3) == 2      # tridiagonal zero-diag 3x3 is singular


def test_qa_preconditions(f3):
    with pytest.raises(NotMonicError):
        qa_matrix(f3, f3.from_ints([1, 2]), 4)
    with pytest.raises(DegreeBoundError):
        qa_matrix(f3, f3.from_ints([0, 0, 1]), 2)


def test_qa_routes_agree_exhaustive():
    """Composition route equals the autocorrelation-entry route."""
    for p in (3, 5):
        ring = PolyRing(FieldCtx(p))
        for n in range(2, 8):
            for k in range(min((n - 1) // 2, 3) + 1):
                for a in ring.enumerate(PolySet.MONIC, k):
                    assert qa_matrix(ring, a, n).rows == \
                        qa_matrix_entrywise(ring, a, n).rows


def test_qa_evaluates_product_correlation(f3):
    for n in (3, 4, 5):
        for k in range((n - 1) // 2 + 1):
            for a in f3.enumerate(PolySet.MONIC, k):
                mat = qa_matrix(f3, a, n)
                for h in f3.enumerate(PolySet.DEGREE_AT_MOST, n - k):
                    x = tuple(f3.coeff(h, i) for i in range(n - k + 1))
                    want = autocorrelation(f3, f3.mul(a, h), 1, n)
                    assert quad_eval(mat, x) == want


def test_bab_is_difference_of_qa(f3):
    n = 5
    for k in (1, 2):
        monics = list(f3.enumerate(PolySet.MONIC, k))
        for a in monics:
            for b in monics:
                diff = bab_matrix(f3, a, b, n)
                qa = qa_matrix(f3, a, n)
                qb = qa_matrix(f3, b, n)
                for i in range(diff.dim):
                    for j in range(diff.dim):
                        want = f3.ctx.sub(qa.rows[i][j], qb.rows[i][j])
                        assert diff.rows[i][j] == want


def test_bab_same_multiplier_is_zero(f3):
    a = f3.from_ints([1, 1])
    mat = bab_matrix(f3, a, a, 5)
    assert matrix_rank(mat) == 0


def test_bab_evaluates_difference(f3):
    n = 5
    k = 1
    monics = list(f3.enumerate(PolySet.MONIC, k))
    for a in monics:
        for b in monics:
            mat = bab_matrix(f3, a, b, n)
            for h in f3.enumerate(PolySet.DEGREE_AT_MOST, n - k):
                x = tuple(f3.coeff(h, i) for i in range(n - k + 1))
                want = f3.ctx.sub(
                    autocorrelation(f3, f3.mul(a, h), 1, n),
                    autocorrelation(f3, f3.mul(b, h), 1, n),
                )
                assert quad_eval(mat, x) == want


# ---------------------------------------------------------------------------
# scans
# ---------------------------------------------------------------------------

def test_qa_scan_examples(f3):
    reports = {(r.k, r.a): r for r in scan_qa_ranks(f3, 5)}
    for a in ("0,1", "1,1", "2,1"):
        assert reports[(1, a)].rank >= 3
    for a in (r.a for r in reports.values() if r.k == 2):
        assert reports[(2, a)].rank >= 2


def test_qa_scan_known_boundary_counterexamples(f3):
    """The n - k - 1 lower bound fails at explicit boundary instances; the
    scan must report them honestly rather than assume an all-pass."""
    reports = {(r.k, r.a): r for r in scan_qa_ranks(f3, 6)}
    bad = reports[(2, "2,1,1")]             # t^2 + t + 2
    assert bad.rank == 2 and bad.bound == 3 and not bad.passed
    assert bad.kernel_dim == 3
    bad2 = reports[(2, "2,2,1")]            # t^2 + 2t + 2
    assert bad2.rank == 2 and not bad2.passed
    # and at n = 5 every form makes its rank bound
    assert all(r.passed for r in scan_qa_ranks(f3, 5))


def test_monic_slice_rank_behavior(f3):
    """Fixing the top coefficient can cost two ranks; frozen instances."""
    mat = qa_matrix(f3, f3.from_ints([0, 1]), 4)
    assert matrix_rank(mat) == 4
    assert monic_slice_rank(mat) == 2
    # t^2 + 1 at n = 5: the sliced quadratic part vanishes entirely
    mat2 = qa_matrix(f3, f3.from_ints([1, 0, 1]), 5)
    assert matrix_rank(mat2) == 2
    assert monic_slice_rank(mat2) == 0


def test_bab_scan_bounds_hold(f3):
    """Distinct reversal products force rank >= n - 2k - 1 throughout."""
    for n in range(2, 8):
        for k in range((n - 1) // 2 + 1):
            out = scan_bab_ranks(f3, n, k)
            assert all(r.passed for r in out["reports"])
            assert all(r.monic_rank >= r.bound - 1 for r in out["reports"])
            for entry in out["coincidence_sets"]:
                assert entry["size"] >= 1


def test_bab_scan_coincidence_sets(f3):
    out = scan_bab_ranks(f3, 5, 2)
    sizes = {entry["a"]: entry["size"] for entry in out["coincidence_sets"]}
    # reversal products collide for 2 of the 9 monic quadratics
    assert max(sizes.values()) == 2
    assert out["pairs_checked"] + out["pairs_excluded"] == 81


def test_q5_scan_has_boundary_counterexamples():
    ring = PolyRing(FieldCtx(5))
    fails = [r for r in scan_qa_ranks(ring, 6) if not r.passed]
    assert {r.a for r in fails} == {"2,0,1", "3,0,1"}
