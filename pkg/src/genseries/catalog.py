"""Carrier catalog and support descriptors.

A carrier is an ordered ground set that can index a power series: the
exponents of ordinary, Laurent, Dirichlet, Puiseux or word series all live
on one of the nine variants below.  The catalog is deliberately closed.
Order-theoretic classification (artinian / noetherian / narrow) of infinite
sets is undecidable for black-box predicates but is a small rule table over
these variants, and that is what keeps support tracking and decomposition
enumeration exact.

Support descriptors are symbolic over-approximations of a series support:

* ``FiniteSet`` -- an explicit finite set, valid on every carrier;
* ``All``      -- the whole carrier, valid where the carrier itself is
  artinian and narrow;
* ``GridTail(a, n)`` -- the rationals ``{i/n : i >= a}`` (Puiseux tails);
* ``TailGE(a)``      -- the integers ``{i : i >= a}`` (Laurent tails).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CarrierError, DescriptorError, InputError

# ---------------------------------------------------------------------------
# support descriptors


@dataclass(frozen=True)
class FiniteSet:
    elements: frozenset


@dataclass(frozen=True)
class All:
    pass


@dataclass(frozen=True)
class GridTail:
    """The set {i/n : i integer, i >= a} on the fixed denominator grid n."""

    a: int
    n: int

    def __post_init__(self):
        if not _is_int(self.a) or not _is_int(self.n) or self.n < 1:
            raise DescriptorError("grid tail needs integer offset and denominator >= 1")


@dataclass(frozen=True)
class TailGE:
    """The set of integers {i : i >= a}."""

    a: int

    def __post_init__(self):
        if not _is_int(self.a):
            raise DescriptorError("integer tail needs an integer offset")


Descriptor = FiniteSet | All | GridTail | TailGE

ALL = All()


def finite(elements=()) -> FiniteSet:
    """Build an explicit finite-support descriptor."""
    return FiniteSet(frozenset(elements))


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


# ---------------------------------------------------------------------------
# carriers


class Carrier:
    """Base class for catalog carriers.

    Concrete variants are frozen dataclasses so carriers compare by value.
    ``leq`` is the carrier's partial order, used for subsequence extraction
    and display; the monoid operation lives in :mod:`genseries.monoids`.
    """

    name = "?"

    def is_element(self, x) -> bool:
        raise NotImplementedError

    def check_element(self, x):
        if not self.is_element(x):
            raise CarrierError(f"{x!r} is not an element of carrier {self.name}")

    def leq(self, a, b) -> bool:
        raise NotImplementedError

    def sort_key(self, x):
        """Canonical display key: numeric ascending, words shortlex."""
        return x

    def window(self, region: int) -> list:
        """All carrier elements inside the finite window, display order."""
        raise NotImplementedError

    def monomial(self, x) -> str:
        return _exp_text(x)

    def element_to_json(self, x):
        return x

    def element_from_json(self, obj):
        if not self.is_element(obj):
            raise InputError(f"{obj!r} is not a valid {self.name} element")
        return obj

    def __repr__(self):
        return self.name


def _check_region(region):
    if not _is_int(region) or region < 0:
        raise InputError(f"window must be a nonnegative integer, got {region!r}")


def _exp_text(e) -> str:
    s = str(e)
    if s.startswith("-") or "/" in s:
        return f"T^({s})"
    return f"T^{s}"


@dataclass(frozen=True)
class NatUsual(Carrier):
    name = "nat"

    def is_element(self, x):
        return _is_int(x) and x >= 0

    def leq(self, a, b):
        return a <= b

    def window(self, region):
        _check_region(region)
        return list(range(region + 1))


@dataclass(frozen=True)
class NatDiscrete(Carrier):
    name = "nat-discrete"

    def is_element(self, x):
        return _is_int(x) and x >= 0

    def leq(self, a, b):
        return a == b

    def window(self, region):
        _check_region(region)
        return list(range(region + 1))


@dataclass(frozen=True)
class IntUsual(Carrier):
    name = "int"

    def is_element(self, x):
        return _is_int(x)

    def leq(self, a, b):
        return a <= b

    def window(self, region):
        _check_region(region)
        return list(range(-region, region + 1))


@dataclass(frozen=True)
class IntDiscrete(Carrier):
    name = "int-discrete"

    def is_element(self, x):
        return _is_int(x)

    def leq(self, a, b):
        return a == b

    def window(self, region):
        _check_region(region)
        return list(range(-region, region + 1))


@dataclass(frozen=True)
class PosNatMulUsual(Carrier):
    """Positive naturals under multiplication, usual numeric order."""

    name = "posnat-mul"

    def is_element(self, x):
        return _is_int(x) and x >= 1

    def leq(self, a, b):
        return a <= b

    def window(self, region):
        _check_region(region)
        return list(range(1, region + 1))


@dataclass(frozen=True)
class PosNatDivisibility(Carrier):
    """Positive naturals under multiplication, divisibility order."""

    name = "posnat-div"

    def is_element(self, x):
        return _is_int(x) and x >= 1

    def leq(self, a, b):
        return b % a == 0

    def window(self, region):
        _check_region(region)
        return list(range(1, region + 1))


@dataclass(frozen=True)
class RationalGrid(Carrier):
    """The rationals under addition, usual order.

    Windows enumerate every rational with denominator and absolute value
    bounded by the region, which is enough to probe any fixed-grid tail.
    """

    name = "rational-grid"

    def is_element(self, x):
        return isinstance(x, Fraction) or _is_int(x)

    def leq(self, a, b):
        return a <= b

    def window(self, region):
        _check_region(region)
        out = set()
        for den in range(1, max(region, 1) + 1):
            for num in range(-region * den, region * den + 1):
                out.add(Fraction(num, den))
        return sorted(out)

    def element_to_json(self, x):
        q = Fraction(x)
        return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"

    def element_from_json(self, obj):
        return parse_rational(obj)


@dataclass(frozen=True)
class FreeWords(Carrier):
    """Words over a finite alphabet, ordered by length then lexicographically.

    Shortlex is a well order, so every subset of the carrier is artinian and
    narrow: all supports are finitary, matching classical noncommutative
    formal power series.
    """

    alphabet: tuple

    name = "free-words"

    def __post_init__(self):
        if not self.alphabet:
            raise InputError("free-words carrier needs a nonempty alphabet")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("alphabet symbols must be distinct")
        for sym in self.alphabet:
            if not isinstance(sym, str) or len(sym) != 1:
                raise InputError("alphabet symbols must be single characters")

    def is_element(self, x):
        return isinstance(x, str) and set(x) <= set(self.alphabet)

    def leq(self, a, b):
        return self.sort_key(a) <= self.sort_key(b)

    def sort_key(self, x):
        return (len(x), x)

    def window(self, region):
        _check_region(region)
        out = [""]
        frontier = [""]
        for _ in range(region):
            frontier = [w + ch for w in frontier for ch in self.alphabet]
            out.extend(frontier)
        return sorted(out, key=self.sort_key)

    def monomial(self, x):
        return x


@dataclass(frozen=True)
class Truncated(Carrier):
    """The finite carrier {0, ..., n} for degree-capped polynomials."""

    n: int

    name = "truncated"

    def __post_init__(self):
        if not _is_int(self.n) or self.n < 0:
            raise InputError("truncation degree must be a natural number")

    def is_element(self, x):
        return _is_int(x) and 0 <= x <= self.n

    def leq(self, a, b):
        return a <= b

    def window(self, region):
        _check_region(region)
        return list(range(min(self.n, region) + 1))


def parse_rational(obj) -> Fraction:
    """Parse "p/q" / "p" / int into an exact rational."""
    if _is_int(obj):
        return Fraction(obj)
    if isinstance(obj, str):
        try:
            return Fraction(obj)
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"bad rational literal {obj!r}") from exc
    raise InputError(f"bad rational literal {obj!r}")


# ---------------------------------------------------------------------------
# CLI carrier specs

_NAMED_CARRIERS = {
    "nat": NatUsual,
    "nat-discrete": NatDiscrete,
    "int": IntUsual,
    "int-discrete": IntDiscrete,
    "posnat-mul": PosNatMulUsual,
    "posnat-div": PosNatDivisibility,
    "rational-grid": RationalGrid,
}


def carrier_from_spec(spec) -> Carrier:
    """Decode a carrier spec: a name, {"trunc": n} or {"words": [...]}."""
    if isinstance(spec, str):
        if spec in _NAMED_CARRIERS:
            return _NAMED_CARRIERS[spec]()
        raise InputError(f"unknown carrier {spec!r}; expected one of "
                         f"{sorted(_NAMED_CARRIERS)} or an object spec")
    if isinstance(spec, dict):
        if set(spec) == {"trunc"}:
            return Truncated(spec["trunc"])
        if set(spec) == {"words"}:
            syms = spec["words"]
            if isinstance(syms, str):
                syms = list(syms)
            return FreeWords(tuple(syms))
    raise InputError(f"bad carrier spec {spec!r}")


def carrier_to_spec(carrier: Carrier):
    if isinstance(carrier, Truncated):
        return {"trunc": carrier.n}
    if isinstance(carrier, FreeWords):
        return {"words": list(carrier.alphabet)}
    return carrier.name


def descriptor_from_json(carrier: Carrier, obj) -> Descriptor:
    """Decode {"finite": [...]}, {"all": true}, {"gridtail": {...}} or
    {"tailge": {...}}."""
    if not isinstance(obj, dict) or len(obj) != 1:
        raise InputError(f"bad descriptor {obj!r}")
    key, val = next(iter(obj.items()))
    if key == "finite":
        return finite(carrier.element_from_json(e) for e in val)
    if key == "all":
        if val is not True:
            raise InputError('descriptor {"all": ...} must carry true')
        return ALL
    if key == "gridtail":
        return GridTail(val["a"], val["n"])
    if key == "tailge":
        return TailGE(val["a"])
    raise InputError(f"unknown descriptor kind {key!r}")


def descriptor_to_json(carrier: Carrier, desc: Descriptor):
    if isinstance(desc, FiniteSet):
        elems = sorted(desc.elements, key=carrier.sort_key)
        return {"finite": [carrier.element_to_json(e) for e in elems]}
    if isinstance(desc, All):
        return {"all": True}
    if isinstance(desc, GridTail):
        return {"gridtail": {"a": desc.a, "n": desc.n}}
    if isinstance(desc, TailGE):
        return {"tailge": {"a": desc.a}}
    raise DescriptorError(f"unknown descriptor {desc!r}")
