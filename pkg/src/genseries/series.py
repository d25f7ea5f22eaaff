"""Generalized power series: lazy coefficient oracles with finitary support.

A series is a function from a monoid carrier to a coefficient ring,
carried as a memoized oracle plus a support descriptor.  Coefficients
outside the descriptor are zero by construction (the oracle is masked),
which makes support soundness an invariant rather than a hope.

The product is convolution over finite decompositions:

    coeff(f * g, m)  =  sum of f(m1) * g(m2)
                        over all (m1, m2) with m1 * m2 = m,
                        m1 in supp(f), m2 in supp(g)

with factors multiplied as f-value times g-value (safe for noncommutative
coefficient rings) and the summation following the canonical pair order,
so renders and tests are reproducible.  Extensional equality of lazy
series is undecidable; the honest surrogate is ``agree_on``, which
compares coefficients over every carrier element in a finite window.

Series may be shared across threads: the memo fill is idempotent, so
concurrent queries can at worst duplicate work, never disagree.
"""

from __future__ import annotations

from .catalog import ALL, finite
from .errors import InputError, SizeBoundError
from .monoids import Monoid, nat, posnat_mul
from .rings import Ring


class GenSeries:
    """An element of the generalized power series ring over (monoid, ring)."""

    __slots__ = ("monoid", "ring", "support", "_fn", "_memo")

    def __init__(self, monoid: Monoid, ring: Ring, fn, support):
        monoid.require_admitted(support)
        self.monoid = monoid
        self.ring = ring
        self.support = support
        self._fn = fn
        self._memo = {}

    # -- observation ---------------------------------------------------------

    def coeff(self, m):
        self.monoid.check_element(m)
        memo = self._memo
        if m not in memo:
            if self.monoid.member(self.support, m):
                value = self._fn(m)
            else:
                value = self.ring.zero
            memo[m] = value
        return memo[m]

    def agree_on(self, other: "GenSeries", region: int) -> bool:
        """Coefficientwise equality over every carrier element in the window."""
        _check_compatible(self, other)
        return all(
            self.ring.eq(self.coeff(m), other.coeff(m))
            for m in self.monoid.window(region)
        )

    def is_zero_on(self, region: int) -> bool:
        return all(self.ring.is_zero(self.coeff(m)) for m in self.monoid.window(region))

    # -- arithmetic ------------------------------------------------------------

    def add(self, other: "GenSeries") -> "GenSeries":
        _check_compatible(self, other)
        ring = self.ring
        return GenSeries(
            self.monoid, ring,
            lambda m: ring.add(self.coeff(m), other.coeff(m)),
            self.monoid.union_bound(self.support, other.support),
        )

    def neg(self) -> "GenSeries":
        ring = self.ring
        return GenSeries(self.monoid, ring, lambda m: ring.neg(self.coeff(m)), self.support)

    def sub(self, other: "GenSeries") -> "GenSeries":
        return self.add(other.neg())

    def mul(self, other: "GenSeries") -> "GenSeries":
        _check_compatible(self, other)
        monoid, ring = self.monoid, self.ring
        s, t = self.support, other.support

        def convolve(m):
            total = ring.zero
            for m1, m2 in monoid.decompose_within(m, s, t):
                total = ring.add(total, ring.mul(self.coeff(m1), other.coeff(m2)))
            return total

        return GenSeries(monoid, ring, convolve, monoid.mul_bound(s, t))

    __add__ = add
    __neg__ = neg
    __sub__ = sub
    __mul__ = mul

    # -- rendering ---------------------------------------------------------------

    def terms_on(self, region: int) -> list:
        """Nonzero (element, coefficient) pairs on the support window."""
        out = []
        for m in self.monoid.enumerate_desc(self.support, region):
            c = self.coeff(m)
            if not self.ring.is_zero(c):
                out.append((m, c))
        return out

    def render(self, region: int) -> str:
        parts = []
        for m, c in self.terms_on(region):
            text = self.ring.render(c)
            if text.startswith("-") or " " in text:
                text = f"({text})"
            if m == self.monoid.unit:
                parts.append(text)
            else:
                parts.append(f"{text}·{self.monoid.monomial(m)}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"<series over {self.monoid.describe()} / {self.ring!r}>"


def _check_compatible(f: GenSeries, g: GenSeries):
    if f.monoid != g.monoid:
        raise InputError(
            f"series monoids differ: {f.monoid.describe()} vs {g.monoid.describe()}")
    if f.ring != g.ring:
        raise InputError(f"series rings differ: {f.ring!r} vs {g.ring!r}")


# ---------------------------------------------------------------------------
# constructors


def from_terms(monoid: Monoid, ring: Ring, terms) -> GenSeries:
    """A series with explicit finite support; zero coefficients are dropped."""
    table = {}
    seen = set()
    for m, c in terms:
        monoid.check_element(m)
        ring.check_element(c)
        if m in seen:
            raise InputError(f"duplicate term at {m!r}")
        seen.add(m)
        if not ring.is_zero(c):
            table[m] = c
    return GenSeries(monoid, ring, table.__getitem__, finite(table))


def zero_series(monoid: Monoid, ring: Ring) -> GenSeries:
    return from_terms(monoid, ring, [])


def unit_series(monoid: Monoid, ring: Ring) -> GenSeries:
    """Coefficient one at the monoid unit, zero elsewhere."""
    return from_terms(monoid, ring, [(monoid.unit, ring.one)])


def from_function(monoid: Monoid, ring: Ring, support, fn) -> GenSeries:
    """A lazy series: fn is consulted only inside the support descriptor."""
    return GenSeries(monoid, ring, fn, support)


# ---------------------------------------------------------------------------
# named builtins


def geometric(ring: Ring) -> GenSeries:
    """1 + T + T^2 + ... over the naturals."""
    return from_function(nat(), ring, ALL, lambda m: ring.one)


def zeta(ring: Ring) -> GenSeries:
    """The arithmetic function that is constantly one (Dirichlet zeta)."""
    return from_function(posnat_mul(), ring, ALL, lambda m: ring.one)


def moebius(ring: Ring, bound: int) -> GenSeries:
    """The Moebius function, precomputed up to a declared bound.

    Queries beyond the bound raise ``SizeBoundError``: a lazy sieve without
    a bound would silently hide the cost model, so the bound is explicit.
    """
    if bound < 1:
        raise InputError("moebius bound must be at least 1")
    values = _moebius_table(bound)

    def mu(n):
        if n > bound:
            raise SizeBoundError(f"moebius precomputed up to {bound}, asked for {n}")
        return ring.from_int(values[n])

    return from_function(posnat_mul(), ring, ALL, mu)


def _moebius_table(bound: int) -> list[int]:
    # smallest-prime-factor factorization: -1 per distinct prime, 0 on squares
    spf = list(range(bound + 1))
    for p in range(2, int(bound ** 0.5) + 1):
        if spf[p] == p:
            for q in range(p * p, bound + 1, p):
                if spf[q] == q:
                    spf[q] = p
    out = [0] * (bound + 1)
    if bound >= 1:
        out[1] = 1
    for n in range(2, bound + 1):
        m, sign = n, 1
        square_free = True
        while m > 1:
            p = spf[m]
            m //= p
            if m % p == 0:
                square_free = False
                break
            sign = -sign
        out[n] = sign if square_free else 0
    return out
