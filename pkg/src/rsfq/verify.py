"""Verification matrix: every identity and bound check as a schedulable cell.

A cell is a small dict of primitives (field key, check name, degree), so it
can cross a process boundary; run_cell rebuilds the ring and returns a
JSON-ready result.  Results are sorted by (check, n, k) and aggregated into
one report whose only nondeterministic field is meta.elapsed_seconds: every
numeric value is derived from exact integer state, so the parallelism
degree never changes a byte of the payload.

Cell pass semantics are the mathematical claims themselves.  A failing cell
is a violated desk-scale instance of a stated bound and turns into exit
code 1 at the CLI; the rank-qa scan is known to contain such instances at
boundary degrees (see the scan reports for the inventory).
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import arith, quadform
from .charsum import CharSpec, scan_gauss_bound
from .dist import distribution
from .errors import ConfigError, ExactIdentityError
from .field import FieldCtx
from .poly import DEFAULT_CAP, PolyRing, PolySet
from .rudin import autocorrelation, reversal_product_correlations, rudin_shapiro
from .vaughan import (
    VaughanContext,
    character_rs_weight,
    default_cutoffs,
    random_weight_values,
    sigma1,
    sigma2,
    unit_weight,
)

CHECK_CHOICES = (
    "star", "lin-red", "tau", "tau-moment", "gauss",
    "rank-qa", "rank-bab", "vaughan", "all",
)


@dataclass
class RunConfig:
    """Resolved run parameters shared by the CLI subcommands."""

    p: int = 3
    e: int = 1
    modulus: tuple | None = None
    fmt: str = "json"
    jobs: int = 1
    cap: int = DEFAULT_CAP
    seed: int = 1
    weights: int = 3
    n_max: int | None = None

    def ctx(self) -> FieldCtx:
        return FieldCtx(self.p, self.e, self.modulus or None)

    def ring(self) -> PolyRing:
        return PolyRing(self.ctx(), self.cap)

    def public_dict(self) -> dict:
        # jobs intentionally omitted: it must not influence the payload.
        return {
            "p": self.p,
            "e": self.e,
            "modulus": list(self.modulus) if self.modulus else None,
            "cap": self.cap,
            "seed": self.seed,
            "weights": self.weights,
            "n_max": self.n_max,
        }


def _n_limit(q: int, budget: int, hard: int, n_max: int | None) -> int:
    n = 1
    while q ** (n + 1) <= budget and n + 1 <= hard:
        n += 1
    if n_max is not None:
        n = min(n, n_max)
    return n


def build_cells(cfg: RunConfig, checks) -> list:
    """Expand a selector set into concrete (check, n) cells."""
    q = cfg.p**cfg.e
    wanted = set(checks)
    if "all" in wanted:
        wanted = set(CHECK_CHOICES) - {"all"} | {"dist"}
    base = {
        "p": cfg.p, "e": cfg.e,
        "modulus": list(cfg.modulus) if cfg.modulus else None,
        "cap": cfg.cap, "seed": cfg.seed, "weights": cfg.weights,
    }
    cells = []

    def add(check, n_values):
        for n in n_values:
            cells.append(dict(base, check=check, n=n))

    nm = cfg.n_max
    if "star" in wanted:
        add("star", range(0, min(_n_limit(q, 20000, 6, nm), 5) + 1))
    if "lin-red" in wanted:
        add("lin-red", range(2, _n_limit(q, 1000, 6, nm) + 1))
    if "tau" in wanted:
        add("tau", range(1, min(_n_limit(q, 4000, 5, nm), 5) + 1))
    if "tau-moment" in wanted:
        add("tau-moment", range(1, _n_limit(q, 1000, 6, nm) + 1))
    if "gauss" in wanted:
        limit = 1
        while q ** (2 * (limit + 2)) <= 25_000_000:
            limit += 1
        if nm is not None:
            limit = min(limit, nm)
        add("gauss", range(2, limit + 1))
    if "rank-qa" in wanted:
        add("rank-qa", range(2, (min(8, nm) if nm else 8) + 1))
    if "rank-bab" in wanted:
        add("rank-bab", range(2, (min(7, nm) if nm else 7) + 1))
    if "vaughan" in wanted:
        top = _n_limit(q, 1000, 6, nm)
        add("vaughan", range(4, top + 1))
    if "dist" in wanted:
        add("dist", range(2, _n_limit(q, 2400, 7, nm) + 1))
    return cells


def run_cell(cell: dict) -> dict:
    ring = PolyRing(
        FieldCtx(cell["p"], cell["e"], cell["modulus"] or None), cell["cap"]
    )
    runner = _RUNNERS[cell["check"]]
    passed, detail = runner(ring, cell)
    return {
        "check": cell["check"],
        "q": ring.ctx.q,
        "n": cell["n"],
        "pass": passed,
        "detail": detail,
    }


def _run_star(ring: PolyRing, cell: dict):
    n = cell["n"]
    checked = 0
    failures = []
    for a in ring.enumerate(PolySet.DEGREE_AT_MOST, n, cell["cap"]):
        corr = reversal_product_correlations(ring, a, n)
        for lag in range(n + 1):
            if corr[lag] != autocorrelation(ring, a, lag, n):
                failures.append({"a": ring.to_str(a), "lag": lag})
        checked += 1
    return not failures, {"checked": checked, "failures": failures}


def _run_lin_red(ring: PolyRing, cell: dict):
    n = cell["n"]
    ctx = ring.ctx
    checked = 0
    failures = []
    for f in ring.enumerate(PolySet.MONIC, n, cell["cap"]):
        want = ctx.sub(autocorrelation(ring, f, 1, n), ring.coeff(f, n - 1))
        if rudin_shapiro(ring, f) != want:
            failures.append(ring.to_str(f))
        checked += 1
    return not failures, {"checked": checked, "failures": failures}


def _run_tau(ring: PolyRing, cell: dict):
    report = arith.check_tau_bound(ring, cell["n"], cap=cell["cap"])
    return report["pass"], report


def _run_tau_moment(ring: PolyRing, cell: dict):
    report = arith.check_tau_second_moment(ring, cell["n"], cap=cell["cap"])
    return report["pass"], report


def _run_gauss(ring: PolyRing, cell: dict):
    reports = scan_gauss_bound(ring, cell["n"], cap=cell["cap"])
    failures = [r for r in reports if not r["pass"]]
    worst = max((r["max_magnitude"] / r["bound"] for r in reports), default=0.0)
    return not failures, {
        "forms": len(reports),
        "worst_ratio": worst,
        "failures": failures,
    }


def _run_rank_qa(ring: PolyRing, cell: dict):
    reports = quadform.scan_qa_ranks(ring, cell["n"], cell["cap"])
    rank_failures = [r.as_dict() for r in reports if r.rank < r.bound]
    monic_failures = [
        r.as_dict() for r in reports if r.monic_rank < r.bound - 1
    ]
    kernel_hist: dict[str, int] = {}
    for r in reports:
        key = str(r.kernel_dim)
        kernel_hist[key] = kernel_hist.get(key, 0) + 1
    passed = not rank_failures and not monic_failures
    return passed, {
        "forms": len(reports),
        "kernel_dims": dict(sorted(kernel_hist.items())),
        "rank_failures": rank_failures,
        "monic_failures": monic_failures,
    }


def _run_rank_bab(ring: PolyRing, cell: dict):
    n = cell["n"]
    q = ring.ctx.q
    detail = {"levels": [], "rank_failures": []}
    passed = True
    for k in range((n - 1) // 2 + 1):
        if q ** (2 * k) > 8000:
            break
        out = quadform.scan_bab_ranks(ring, n, k, cell["cap"])
        fails = [r.as_dict() for r in out["reports"] if r.rank < r.bound]
        detail["rank_failures"].extend(fails)
        detail["levels"].append({
            "k": k,
            "pairs_checked": out["pairs_checked"],
            "pairs_excluded": out["pairs_excluded"],
            "max_coincidence": max(c["size"] for c in out["coincidence_sets"]),
        })
        if fails:
            passed = False
    return passed, detail


def _run_vaughan(ring: PolyRing, cell: dict):
    n = cell["n"]
    q = ring.ctx.q
    vc = VaughanContext(ring, n, cap=cell["cap"])
    chi = CharSpec(ring.ctx, ring.ctx.scalar(1))
    weights = [("unit", vc.tabulate(unit_weight)),
               ("char-rs", vc.tabulate(character_rs_weight(ring, chi)))]
    for j in range(cell["weights"]):
        weights.append(
            (f"random-{j}",
             random_weight_values(ring, n, cell["seed"] * 1000 + j, cell["cap"]))
        )
    worst_residual = 0.0
    unit_error = 0.0
    combos = 0
    failures = []
    for u in range(1, n):
        for v in range(1, n - u):
            for name, values in weights:
                try:
                    rep = vc.decompose(u, v, values)
                except ExactIdentityError as err:
                    failures.append({"u": u, "v": v, "weight": name,
                                     "error": str(err)})
                    continue
                worst_residual = max(worst_residual, rep.residual)
                if name == "unit":
                    total = rep.s1 - rep.s2 + rep.s3
                    unit_error = max(unit_error, abs(total - q**n))
                combos += 1
    passed = not failures and unit_error < 1e-9
    du, dv = default_cutoffs(n)
    s1 = sigma1(ring, n, du, dv, chi, cell["cap"])
    s2 = sigma2(ring, n, du, dv, chi, cell["cap"])
    rep = vc.decompose(du, dv, vc.tabulate(character_rs_weight(ring, chi)))
    rep.sigma1, rep.sigma1_bound = s1["value"], s1["bound"]
    rep.sigma2, rep.sigma2_bound = s2["value"], s2["bound"]
    return passed, {
        "combos": combos,
        "worst_residual": worst_residual,
        "unit_weight_error": unit_error,
        "failures": failures,
        "default_cutoffs": [du, dv],
        "char_rs_report": rep.as_dict(),
    }


def _run_dist(ring: PolyRing, cell: dict):
    try:
        table = distribution(ring, cell["n"], cell["cap"])
    except ExactIdentityError as err:
        return False, {"error": str(err)}
    return True, table.as_dict()


_RUNNERS = {
    "star": _run_star,
    "lin-red": _run_lin_red,
    "tau": _run_tau,
    "tau-moment": _run_tau_moment,
    "gauss": _run_gauss,
    "rank-qa": _run_rank_qa,
    "rank-bab": _run_rank_bab,
    "vaughan": _run_vaughan,
    "dist": _run_dist,
}


def run_cells(cells: list, jobs: int = 1) -> list:
    if jobs > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_cell, cells))
    else:
        results = [run_cell(cell) for cell in cells]
    results.sort(key=lambda r: (r["check"], r["n"]))
    return results


def verify_all(cfg: RunConfig, checks=("all",)) -> dict:
    for check in checks:
        if check not in CHECK_CHOICES:
            raise ConfigError(f"unknown check {check!r}")
    started = time.time()
    cells = build_cells(cfg, checks)
    results = run_cells(cells, cfg.jobs)
    return {
        "config": cfg.public_dict(),
        "checks": sorted(set(checks)),
        "passed": all(r["pass"] for r in results),
        "cells": results,
        "meta": {"elapsed_seconds": time.time() - started},
    }
