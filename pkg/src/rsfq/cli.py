"""Command-line front end.

Subcommands: distribution, trend, verify, sigma, nf-count.  Global flags
select the field (--p, --e, --modulus), output format, parallelism, caps
and seeds; RSFQ_JOBS overrides the default parallelism and a key=value
--config file supplies defaults, with explicit flags taking precedence.

Exit codes: 0 all checks passed, 1 a mathematical assertion failed,
2 usage or configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .arith import count_reversal_solutions, scan_reversal_counts
from .charsum import CharSpec
from .dist import deviation_trend, distribution
from .errors import ExactIdentityError, RsfqError
from .poly import DEFAULT_CAP
from .vaughan import sigma1, sigma2, validate_cutoffs
from .verify import CHECK_CHOICES, RunConfig, verify_all


def _add_global_flags(parser: argparse.ArgumentParser) -> None:
    # SUPPRESS keeps unset occurrences from clobbering values parsed at the
    # other position; flags work both before and after the subcommand.
    sup = argparse.SUPPRESS
    parser.add_argument("--p", type=int, default=sup, help="odd prime (default 3)")
    parser.add_argument("--e", type=int, default=sup, help="extension degree")
    parser.add_argument("--modulus", default=sup,
                        help="comma-separated residues, constant term first")
    parser.add_argument("--format", choices=("json", "csv"), default=sup)
    parser.add_argument("--jobs", type=int, default=sup,
                        help="worker processes (env RSFQ_JOBS)")
    parser.add_argument("--cap", type=int, default=sup,
                        help="enumeration cap (default 10^8)")
    parser.add_argument("--seed", type=int, default=sup,
                        help="seed for generated weights")
    parser.add_argument("--weights", type=int, default=sup,
                        help="number of random weights in the vaughan check")
    parser.add_argument("--n-max", type=int, default=sup,
                        help="clamp the verification degree ranges")
    parser.add_argument("--config", default=sup,
                        help="key=value file with defaults for the flags above")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsfq",
        description="Exhaustive desk-scale checks for Rudin-Shapiro sums "
                    "over F_q[t].",
    )
    _add_global_flags(parser)

    sub = parser.add_subparsers(dest="command", required=True)

    p_dist = sub.add_parser("distribution", help="per-value counts over "
                                                 "monic irreducibles of degree n")
    p_dist.add_argument("-n", type=int, required=True)
    _add_global_flags(p_dist)

    p_trend = sub.add_parser("trend", help="relative deviations for n = 2..n-max")
    p_trend.add_argument("--trend-max", type=int, default=None)
    _add_global_flags(p_trend)

    p_verify = sub.add_parser("verify", help="run verification cells")
    p_verify.add_argument("selector", choices=CHECK_CHOICES)
    _add_global_flags(p_verify)

    p_sigma = sub.add_parser("sigma", help="type-I / type-II aggregates")
    p_sigma.add_argument("which", choices=("sigma1", "sigma2"))
    p_sigma.add_argument("-n", type=int, required=True)
    p_sigma.add_argument("-u", type=int, required=True)
    p_sigma.add_argument("-v", type=int, required=True)
    p_sigma.add_argument("--beta", default="1", help="character parameter")
    _add_global_flags(p_sigma)

    p_nf = sub.add_parser("nf-count", help="reversal-equation solution counts")
    p_nf.add_argument("-n", type=int, required=True)
    p_nf.add_argument("--poly", default=None,
                      help="single f as c0,c1,...; omit to scan all of degree 2n")
    _add_global_flags(p_nf)

    return parser


def _load_config_file(path: str) -> dict:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise RsfqError(f"bad config line {line!r}")
            key, value = line.split("=", 1)
            out[key.strip()] = value.strip()
    return out


def resolve_config(args) -> RunConfig:
    """Merge defaults, config file, environment and flags (flags win)."""
    config_path = getattr(args, "config", None)
    file_cfg = _load_config_file(config_path) if config_path else {}

    def pick(name, cast, default):
        flag = getattr(args, name, None)
        if flag is not None:
            return flag
        if name in file_cfg:
            return cast(file_cfg[name])
        return default

    jobs_default = 1
    env_jobs = os.environ.get("RSFQ_JOBS")
    if env_jobs is not None:
        jobs_default = int(env_jobs)
    elif "jobs" in file_cfg:
        jobs_default = int(file_cfg["jobs"])

    modulus = pick("modulus", str, None)
    modulus_tuple = None
    if modulus:
        modulus_tuple = tuple(int(part) for part in str(modulus).split(","))
    return RunConfig(
        p=pick("p", int, 3),
        e=pick("e", int, 1),
        modulus=modulus_tuple,
        fmt=pick("format", str, "json"),
        jobs=getattr(args, "jobs", None) or jobs_default,
        cap=pick("cap", int, DEFAULT_CAP),
        seed=pick("seed", int, 1),
        weights=pick("weights", int, 3),
        n_max=pick("n_max", int, None),
    )


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2))
    sys.stdout.write("\n")


def _emit_kv_csv(obj: dict) -> None:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key in sorted(obj):
        value = obj[key]
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        writer.writerow([key, value])
    sys.stdout.write(out.getvalue())


def _cmd_distribution(cfg: RunConfig, args) -> int:
    table = distribution(cfg.ring(), args.n, cfg.cap, cfg.jobs)
    if cfg.fmt == "csv":
        sys.stdout.write(table.to_csv())
    else:
        _emit_json(table.as_dict())
    return 0


def _cmd_trend(cfg: RunConfig, args) -> int:
    q = cfg.p**cfg.e
    top = args.trend_max or cfg.n_max
    if top is None:
        top = 2
        while q ** (top + 1) <= 2400:
            top += 1
    rows = deviation_trend(cfg.ring(), top, cfg.cap, cfg.jobs)
    if cfg.fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n", "total", "expected", "max_abs_dev", "relative_dev"])
        for row in rows:
            writer.writerow([row["n"], row["total"], row["expected"],
                             row["max_abs_dev"], row["relative_dev"]])
        sys.stdout.write(out.getvalue())
    else:
        _emit_json(rows)
    return 0


def _cmd_verify(cfg: RunConfig, args) -> int:
    report = verify_all(cfg, (args.selector,))
    if cfg.fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["check", "q", "n", "pass"])
        for cell in report["cells"]:
            writer.writerow([cell["check"], cell["q"], cell["n"], cell["pass"]])
        sys.stdout.write(out.getvalue())
    else:
        _emit_json(report)
    return 0 if report["passed"] else 1


def _cmd_sigma(cfg: RunConfig, args) -> int:
    ring = cfg.ring()
    validate_cutoffs(args.n, args.u, args.v)
    beta = ring.ctx.parse_element(args.beta)
    chi = CharSpec(ring.ctx, beta)
    fn = sigma1 if args.which == "sigma1" else sigma2
    report = fn(ring, args.n, args.u, args.v, chi, cfg.cap)
    if cfg.fmt == "csv":
        _emit_kv_csv(report)
    else:
        _emit_json(report)
    return 0


def _cmd_nf_count(cfg: RunConfig, args) -> int:
    ring = cfg.ring()
    if args.poly is not None:
        f = ring.parse(args.poly)
        report = count_reversal_solutions(ring, f, args.n, cap=cfg.cap)
    else:
        report = scan_reversal_counts(ring, args.n, cap=cfg.cap)
    if cfg.fmt == "csv":
        _emit_kv_csv(report)
    else:
        _emit_json(report)
    return 0 if report["pass"] else 1


_COMMANDS = {
    "distribution": _cmd_distribution,
    "trend": _cmd_trend,
    "verify": _cmd_verify,
    "sigma": _cmd_sigma,
    "nf-count": _cmd_nf_count,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        return _COMMANDS[args.command](cfg, args)
    except ExactIdentityError as err:
        print(f"rsfq: identity violated: {err}", file=sys.stderr)
        return 1
    except RsfqError as err:
        print(f"rsfq: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"rsfq: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
