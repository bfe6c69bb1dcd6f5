#!/usr/bin/env python3
"""Standalone brute-force generator for the golden distribution tables.

Deliberately independent of the rsfq package: its own representation (plain
little-endian int tuples mod p), its own long division, its own trial
division for irreducibility, and the statistic computed straight from its
definition.  The committed outputs pin the library's distribution tables;
the two code paths must agree exactly.

Usage:
    python scripts/make_golden.py [--p 3] [--n-min 2] [--n-max 7] [--out tests/golden]
"""

import argparse
import json
import os


def poly_mod(f, g, p):
    """Remainder of f by g (little-endian int lists, g monic)."""
    rem = list(f)
    dg = len(g) - 1
    while len(rem) - 1 >= dg and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dg:
            break
        c = rem[-1]
        shift = len(rem) - 1 - dg
        for i, gi in enumerate(g):
            rem[shift + i] = (rem[shift + i] - c * gi) % p
        while rem and rem[-1] == 0:
            rem.pop()
    return rem


def monic_polys(p, deg):
    for idx in range(p**deg):
        coeffs = []
        k = idx
        for _ in range(deg):
            coeffs.append(k % p)
            k //= p
        coeffs.append(1)
        yield coeffs


def is_irreducible(f, p):
    deg = len(f) - 1
    for d in range(1, deg // 2 + 1):
        for g in monic_polys(p, d):
            if not poly_mod(f, g, p):
                return False
    return True


def rs_value(f, p):
    """Sum of adjacent coefficient products f_i * f_(i-1), i = 1..deg-1."""
    total = 0
    for i in range(1, len(f) - 1):
        total += f[i] * f[i - 1]
    return total % p


def table(p, n):
    counts = {str(gamma): 0 for gamma in range(p)}
    total = 0
    for f in monic_polys(p, n):
        if is_irreducible(f, p):
            counts[str(rs_value(f, p))] += 1
            total += 1
    return {"q": p, "n": n, "counts": counts, "total": total}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=3)
    ap.add_argument("--n-min", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=7)
    ap.add_argument("--out", default=os.path.join("tests", "golden"))
    args = ap.parse_args()
    os.makedirs(args.out, exist_ok=True)
    for n in range(args.n_min, args.n_max + 1):
        data = table(args.p, n)
        path = os.path.join(args.out, f"dist_q{args.p}_n{n}.json")
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(data, fh, sort_keys=True, indent=2)
            fh.write("\n")
        print(f"wrote {path}: total={data['total']} counts={data['counts']}")


if __name__ == "__main__":
    main()
