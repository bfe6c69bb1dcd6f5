"""Polynomials over F_q as canonical coefficient tuples.

Coefficient tuples are little-endian (index i holds the coefficient of t^i)
with no trailing zeros; the zero polynomial is the empty tuple.  The degree
of the zero polynomial is the sentinel None, and norm/degree arithmetic on
it raises instead of inventing -1.

Polynomial sets are enumerated in counting order: coefficient vectors read
as base-q integers with the constant term as the least significant digit,
so the constant term varies fastest.  Enumeration supports contiguous
index-range partitioning, which slices the set by coefficient prefix so
scans can be mapped across workers and merged associatively.
"""

from __future__ import annotations

import enum
from itertools import product

from .errors import (
    ConfigError,
    DegreeBoundError,
    EnumerationCapError,
    PolyDivisionError,
    ZeroPolynomialError,
)
from .field import FieldCtx

DEFAULT_CAP = 10**8


class PolySet(enum.Enum):
    """Families of polynomials indexed by a degree parameter n."""

    DEGREE_EXACT = "degree-exact"        # degree n, any nonzero leading coeff
    MONIC = "monic"                      # monic of degree n
    MONIC_IRREDUCIBLE = "monic-irreducible"
    DEGREE_AT_MOST = "degree-at-most"    # the (n+1)-dimensional space deg <= n


class PolyRing:
    """Operations on F_q[t] bound to a FieldCtx."""

    zero = ()

    def __init__(self, ctx: FieldCtx, cap: int = DEFAULT_CAP):
        if cap < 1:
            raise ConfigError("enumeration cap must be positive")
        self.ctx = ctx
        self.cap = cap
        self.one = (ctx.one(),)

    def __repr__(self):
        return f"PolyRing({self.ctx!r})"

    # -- construction and inspection ------------------------------------

    def poly(self, coeffs) -> tuple:
        """Canonicalize a coefficient sequence (validates elements)."""
        ctx = self.ctx
        out = list(coeffs)
        for c in out:
            if not ctx.is_element(c):
                raise ConfigError(f"{c!r} is not an element of F_{ctx.q}")
        while out and out[-1] == ctx.zero():
            out.pop()
        return tuple(out)

    def from_ints(self, ints) -> tuple:
        """Build a polynomial from integer residues (scalars for e > 1)."""
        return self.poly([self.ctx.scalar(c) for c in ints])

    def degree(self, f):
        """Degree of f, or None for the zero polynomial."""
        return len(f) - 1 if f else None

    def coeff(self, f, i: int):
        if 0 <= i < len(f):
            return f[i]
        return self.ctx.zero()

    def is_monic(self, f) -> bool:
        return bool(f) and f[-1] == self.ctx.one()

    def leading(self, f):
        if not f:
            raise ZeroPolynomialError("zero polynomial has no leading coefficient")
        return f[-1]

    # -- ring operations ---------------------------------------------------

    def add(self, f, g):
        ctx = self.ctx
        if len(f) < len(g):
            f, g = g, f
        out = list(f)
        for i, c in enumerate(g):
            out[i] = ctx.add(out[i], c)
        while out and out[-1] == ctx.zero():
            out.pop()
        return tuple(out)

    def sub(self, f, g):
        return self.add(f, self.neg(g))

    def neg(self, f):
        ctx = self.ctx
        return tuple(ctx.neg(c) for c in f)

    def scale(self, c, f):
        ctx = self.ctx
        if c == ctx.zero():
            return ()
        return tuple(ctx.mul(c, x) for x in f)

    def mul(self, f, g):
        if not f or not g:
            return ()
        ctx = self.ctx
        if ctx.e == 1:
            p = ctx.p
            out = [0] * (len(f) + len(g) - 1)
            for i, fi in enumerate(f):
                if fi:
                    for j, gj in enumerate(g):
                        out[i + j] += fi * gj
            return tuple(c % p for c in out)
        out = [ctx.zero()] * (len(f) + len(g) - 1)
        for i, fi in enumerate(f):
            if fi != ctx.zero():
                for j, gj in enumerate(g):
                    out[i + j] = ctx.add(out[i + j], ctx.mul(fi, gj))
        # Leading product of two nonzero leading coefficients is nonzero.
        return tuple(out)

    def divmod(self, f, g):
        """Quotient and remainder with deg r < deg g."""
        if not g:
            raise PolyDivisionError("division by the zero polynomial")
        if not f or len(f) < len(g):
            return (), f
        ctx = self.ctx
        dg = len(g) - 1
        if ctx.e == 1:
            p = ctx.p
            rem = list(f)
            inv_lead = pow(g[-1], p - 2, p)
            quot = [0] * (len(f) - dg)
            for sh in range(len(f) - dg - 1, -1, -1):
                c = rem[sh + dg]
                if c:
                    c = (c * inv_lead) % p
                    quot[sh] = c
                    for i, gi in enumerate(g):
                        if gi:
                            rem[sh + i] = (rem[sh + i] - c * gi) % p
            while rem and rem[-1] == 0:
                rem.pop()
            while quot and quot[-1] == 0:
                quot.pop()
            return tuple(quot), tuple(rem)
        rem = list(f)
        inv_lead = ctx.inv(g[-1])
        quot = [ctx.zero()] * (len(f) - dg)
        zero = ctx.zero()
        for sh in range(len(f) - dg - 1, -1, -1):
            c = rem[sh + dg]
            if c != zero:
                c = ctx.mul(c, inv_lead)
                quot[sh] = c
                for i, gi in enumerate(g):
                    if gi != zero:
                        rem[sh + i] = ctx.sub(rem[sh + i], ctx.mul(c, gi))
        while rem and rem[-1] == zero:
            rem.pop()
        while quot and quot[-1] == zero:
            quot.pop()
        return tuple(quot), tuple(rem)

    def mod(self, f, g):
        return self.divmod(f, g)[1]

    def divides(self, g, f) -> bool:
        return not self.mod(f, g)

    def gcd(self, f, g):
        """Monic gcd; gcd(0, 0) = 0."""
        while g:
            f, g = g, self.mod(f, g)
        return self.monic(f) if f else ()

    def monic(self, f):
        if not f:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        ctx = self.ctx
        if f[-1] == ctx.one():
            return f
        return self.scale(ctx.inv(f[-1]), f)

    # -- reversal and norm ---------------------------------------------------

    def reverse(self, f, n: int):
        """Coefficient reversal relative to the degree bound n.

        Entry i of the result is the coefficient of t^(n-i) in f; the result
        has degree exactly n iff the constant term of f is nonzero.
        """
        deg = self.degree(f)
        if deg is not None and deg > n:
            raise DegreeBoundError(f"deg f = {deg} exceeds the reversal bound {n}")
        if not f:
            return ()
        out = [self.coeff(f, n - i) for i in range(n + 1)]
        ctx = self.ctx
        while out and out[-1] == ctx.zero():
            out.pop()
        return tuple(out)

    def norm_exponent(self, f) -> int:
        """deg f, so that |f| = q^deg f; errors on the zero polynomial."""
        if not f:
            raise ZeroPolynomialError("norm of the zero polynomial is undefined")
        return len(f) - 1

    # -- irreducibility ---------------------------------------------------

    def is_irreducible(self, f) -> bool:
        """Trial division by every monic polynomial of degree <= deg f / 2."""
        deg = self.degree(f)
        if deg is None or deg < 1:
            raise DegreeBoundError("irreducibility needs degree >= 1")
        for d in range(1, deg // 2 + 1):
            for g in self.enumerate(PolySet.MONIC, d):
                if not self.mod(f, g):
                    return False
        return True

    # -- enumeration -------------------------------------------------------

    def cardinality(self, kind: PolySet, n: int) -> int:
        q = self.ctx.q
        if n < 0:
            raise DegreeBoundError("degree parameter must be >= 0")
        if kind is PolySet.DEGREE_EXACT:
            return (q - 1) * q**n
        if kind is PolySet.MONIC:
            return q**n
        if kind is PolySet.DEGREE_AT_MOST:
            return q ** (n + 1)
        if kind is PolySet.MONIC_IRREDUCIBLE:
            # Counted by filtering; the monic superset governs the cap.
            return q**n
        raise ConfigError(f"unknown set kind {kind!r}")

    def check_cap(self, count: int, cap: int | None = None) -> None:
        limit = self.cap if cap is None else cap
        if count > limit:
            raise EnumerationCapError(
                f"enumeration of {count} elements exceeds the cap {limit}"
            )

    def enumerate(self, kind: PolySet, n: int, cap: int | None = None):
        """Yield the set members in counting order (cap-checked)."""
        self.check_cap(self.cardinality(kind, n), cap)
        if kind is PolySet.MONIC:
            yield from self._monic(n, 0, self.ctx.q**n)
        elif kind is PolySet.MONIC_IRREDUCIBLE:
            if n < 1:
                return
            for f in self._monic(n, 0, self.ctx.q**n):
                if self.is_irreducible(f):
                    yield f
        elif kind is PolySet.DEGREE_EXACT:
            elements = self.ctx.elements()
            q = self.ctx.q
            for lead in elements[1:]:
                for idx in range(q**n):
                    coeffs = []
                    k = idx
                    for _ in range(n):
                        coeffs.append(elements[k % q])
                        k //= q
                    coeffs.append(lead)
                    yield tuple(coeffs)
        elif kind is PolySet.DEGREE_AT_MOST:
            for vec in self._vectors(n + 1):
                yield vec
        else:
            raise ConfigError(f"unknown set kind {kind!r}")

    def monic_range(self, n: int, lo: int, hi: int):
        """Monic degree-n polynomials with counting index in [lo, hi)."""
        return self._monic(n, lo, hi)

    def _monic(self, n: int, lo: int, hi: int):
        one = self.ctx.one()
        if n == 0:
            if lo <= 0 < hi:
                yield (one,)
            return
        elements = self.ctx.elements()
        q = self.ctx.q
        for idx in range(lo, hi):
            coeffs = []
            k = idx
            for _ in range(n):
                coeffs.append(elements[k % q])
                k //= q
            coeffs.append(one)
            yield tuple(coeffs)

    def _vectors(self, width: int):
        """All canonical polynomials with < width coefficients, counting order."""
        if width <= 0:
            yield ()
            return
        elements = self.ctx.elements()
        zero = self.ctx.zero()
        for rev in product(elements, repeat=width):
            vec = rev[::-1]
            k = width
            while k and vec[k - 1] == zero:
                k -= 1
            yield vec[:k]

    def index_of(self, f) -> int:
        """Counting index of f within its coefficient-width block."""
        ctx = self.ctx
        idx = 0
        for c in reversed(f):
            idx = idx * ctx.q + ctx.element_index(c)
        return idx

    # -- parsing and formatting ---------------------------------------------

    def to_str(self, f) -> str:
        if not f:
            return self.ctx.element_str(self.ctx.zero())
        return ",".join(self.ctx.element_str(c) for c in f)

    def parse(self, s: str) -> tuple:
        parts = [part.strip() for part in s.split(",")]
        if parts == [""]:
            raise ConfigError("empty polynomial string")
        return self.poly([self.ctx.parse_element(part) for part in parts])

    def pretty(self, f) -> str:
        """Human-readable form for logs only, e.g. 't^3+2t+1'."""
        if not f:
            return "0"
        ctx = self.ctx
        terms = []
        for i in range(len(f) - 1, -1, -1):
            c = f[i]
            if c == ctx.zero():
                continue
            cs = ctx.element_str(c)
            if ctx.e > 1 and i > 0:
                cs = f"({cs})"
            if i == 0:
                terms.append(cs)
            elif i == 1:
                terms.append("t" if cs == "1" else f"{cs}t")
            else:
                terms.append(f"t^{i}" if cs == "1" else f"{cs}t^{i}")
        return "+".join(terms)


def _mobius_int(n: int) -> int:
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def irreducible_count_formula(q: int, n: int) -> int:
    """Number of monic irreducibles of degree n: (1/n) sum_{d|n} mu(d) q^(n/d)."""
    if n < 1:
        raise DegreeBoundError("degree must be >= 1")
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius_int(d) * q ** (n // d)
    if total % n:
        raise ArithmeticError(f"necklace count not divisible by n for q={q}, n={n}")
    return total // n
