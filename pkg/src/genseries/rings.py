"""Coefficient rings.

Every ring here is exact: arbitrary-precision integers and rationals,
residues mod n, and 2x2 integer matrices as the stock noncommutative
example.  Exactness is not cosmetic -- the convolution tests and the
ring-axiom checker rely on decidable equality, and a coefficient-zero
test drives support filtering in the series module.

Elements are plain hashable Python values (int, Fraction, or a flat
row-major 4-tuple for matrices); the ring object carries the operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .catalog import _is_int, parse_rational
from .errors import InputError


class Ring:
    """Unital ring interface.  Commutativity is not assumed."""

    name = "?"

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def eq(self, a, b) -> bool:
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero)

    def from_int(self, n: int):
        """The canonical image of an integer: the n-fold sum of one."""
        raise NotImplementedError

    def is_element(self, a) -> bool:
        raise NotImplementedError

    def check_element(self, a):
        if not self.is_element(a):
            raise InputError(f"{a!r} is not an element of ring {self.name}")

    def render(self, a) -> str:
        return str(a)

    def element_to_json(self, a):
        raise NotImplementedError

    def element_from_json(self, obj):
        raise NotImplementedError

    def __repr__(self):
        return self.name


@dataclass(frozen=True)
class IntRing(Ring):
    """Arbitrary-precision integers."""

    name = "int"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def eq(self, a, b):
        return a == b

    def from_int(self, n):
        return n

    def is_element(self, a):
        return _is_int(a)

    def element_to_json(self, a):
        # decimal strings survive any JSON consumer at arbitrary precision
        return str(a)

    def element_from_json(self, obj):
        if _is_int(obj):
            return obj
        if isinstance(obj, str):
            try:
                return int(obj, 10)
            except ValueError as exc:
                raise InputError(f"bad integer literal {obj!r}") from exc
        raise InputError(f"bad integer literal {obj!r}")


@dataclass(frozen=True)
class RationalRing(Ring):
    """Arbitrary-precision rationals, always in lowest terms.

    ``fractions.Fraction`` keeps the canonical form (positive denominator,
    reduced), so two constructions of the same rational compare equal.
    """

    name = "rational"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def eq(self, a, b):
        return a == b

    def from_int(self, n):
        return Fraction(n)

    def is_element(self, a):
        return isinstance(a, Fraction) or _is_int(a)

    def element_to_json(self, a):
        q = Fraction(a)
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    def element_from_json(self, obj):
        return parse_rational(obj)


@dataclass(frozen=True)
class ModRing(Ring):
    """Integers modulo n, for n >= 2."""

    modulus: int

    name = "mod"

    def __post_init__(self):
        if not _is_int(self.modulus) or self.modulus < 2:
            raise InputError("modulus must be an integer >= 2")

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def eq(self, a, b):
        return a == b

    def from_int(self, n):
        return n % self.modulus

    def is_element(self, a):
        return _is_int(a) and 0 <= a < self.modulus

    def element_to_json(self, a):
        return {"mod": self.modulus, "val": a}

    def element_from_json(self, obj):
        if _is_int(obj):
            return obj % self.modulus
        if isinstance(obj, dict) and set(obj) == {"mod", "val"}:
            if obj["mod"] != self.modulus:
                raise InputError(f"residue has modulus {obj['mod']}, ring has {self.modulus}")
            return obj["val"] % self.modulus
        raise InputError(f"bad residue literal {obj!r}")

    def __repr__(self):
        return f"mod{self.modulus}"


@dataclass(frozen=True)
class Mat2Ring(Ring):
    """2x2 matrices over the integers, stored as flat row-major 4-tuples.

    The stock noncommutative coefficient ring: e12 * e21 != e21 * e12.
    """

    name = "mat2"

    @property
    def zero(self):
        return (0, 0, 0, 0)

    @property
    def one(self):
        return (1, 0, 0, 1)

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    def neg(self, a):
        return (-a[0], -a[1], -a[2], -a[3])

    def mul(self, a, b):
        a11, a12, a21, a22 = a
        b11, b12, b21, b22 = b
        return (
            a11 * b11 + a12 * b21,
            a11 * b12 + a12 * b22,
            a21 * b11 + a22 * b21,
            a21 * b12 + a22 * b22,
        )

    def eq(self, a, b):
        return a == b

    def from_int(self, n):
        return (n, 0, 0, n)

    def is_element(self, a):
        return isinstance(a, tuple) and len(a) == 4 and all(_is_int(v) for v in a)

    def render(self, a):
        return f"[[{a[0]}, {a[1]}], [{a[2]}, {a[3]}]]"

    def element_to_json(self, a):
        return list(a)

    def element_from_json(self, obj):
        if isinstance(obj, (list, tuple)) and len(obj) == 4 and all(_is_int(v) for v in obj):
            return tuple(obj)
        raise InputError(f"bad matrix literal {obj!r}; expected 4 row-major integers")


# ---------------------------------------------------------------------------
# axiom checking


def check_ring_axioms(ring: Ring, samples) -> list[str]:
    """Exhaustively test the ring axioms on all triples drawn from samples.

    Returns a list of human-readable violations; empty means every axiom
    held.  Commutativity of multiplication is deliberately not among the
    axioms -- probe it separately with :func:`find_noncommuting_pair`.
    """
    samples = list(samples)
    if not samples:
        raise InputError("samples must be nonempty")
    for a in samples:
        ring.check_element(a)

    bad = []

    def expect(cond, msg):
        if not cond:
            bad.append(msg)

    zero, one = ring.zero, ring.one
    for a in samples:
        expect(ring.eq(a, a), f"eq not reflexive at {a!r}")
        expect(ring.eq(ring.add(a, zero), a), f"a + 0 != a at {a!r}")
        expect(ring.eq(ring.add(zero, a), a), f"0 + a != a at {a!r}")
        expect(ring.eq(ring.add(a, ring.neg(a)), zero), f"a + (-a) != 0 at {a!r}")
        expect(ring.eq(ring.mul(a, one), a), f"a * 1 != a at {a!r}")
        expect(ring.eq(ring.mul(one, a), a), f"1 * a != a at {a!r}")
    for a in samples:
        for b in samples:
            expect(ring.eq(ring.add(a, b), ring.add(b, a)),
                   f"addition not commutative at ({a!r}, {b!r})")
    for a in samples:
        for b in samples:
            for c in samples:
                expect(ring.eq(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c))),
                       f"addition not associative at ({a!r}, {b!r}, {c!r})")
                expect(ring.eq(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c))),
                       f"multiplication not associative at ({a!r}, {b!r}, {c!r})")
                expect(ring.eq(ring.mul(a, ring.add(b, c)),
                               ring.add(ring.mul(a, b), ring.mul(a, c))),
                       f"left distributivity fails at ({a!r}, {b!r}, {c!r})")
                expect(ring.eq(ring.mul(ring.add(a, b), c),
                               ring.add(ring.mul(a, c), ring.mul(b, c))),
                       f"right distributivity fails at ({a!r}, {b!r}, {c!r})")
    return bad


def find_noncommuting_pair(ring: Ring, samples):
    """Return some (a, b) with a*b != b*a among the samples, or None."""
    samples = list(samples)
    for a in samples:
        for b in samples:
            if not ring.eq(ring.mul(a, b), ring.mul(b, a)):
                return (a, b)
    return None


# ---------------------------------------------------------------------------
# CLI ring specs


def ring_from_spec(spec) -> Ring:
    """Decode "int" | "rational" | "mat2" | {"mod": n}."""
    if isinstance(spec, str):
        if spec == "int":
            return IntRing()
        if spec == "rational":
            return RationalRing()
        if spec == "mat2":
            return Mat2Ring()
        raise InputError(f"unknown ring {spec!r}")
    if isinstance(spec, dict) and set(spec) == {"mod"}:
        return ModRing(spec["mod"])
    raise InputError(f"bad ring spec {spec!r}")


def ring_to_spec(ring: Ring):
    if isinstance(ring, ModRing):
        return {"mod": ring.modulus}
    return ring.name
