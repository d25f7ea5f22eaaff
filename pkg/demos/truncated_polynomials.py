"""Polynomials of degree at most n, via a partial monoid.

The carrier {0..n} carries addition that is undefined past n, so monomial
products above the cap vanish instead of wrapping or clamping.  Where a
total "capped" addition stops being strictly ordered -- and, on infinite
carriers, stops having finite decomposition sets -- the partial operation
keeps the ring exact.
"""

from genseries import (ALL, FinitePomonoid, FinitePoset, IntRing,
                       StrictnessError, embed_finite_pomonoid, from_terms,
                       is_strict_pomonoid, truncated)

Z = IntRing()

print("== degree-capped multiplication ==")
M = truncated(2)
t = from_terms(M, Z, [(1, 1)])
t2 = from_terms(M, Z, [(2, 5)])
print("T * 5T^2 with cap 2:", (t * t2).render(2))
one_plus_t = from_terms(M, Z, [(0, 1), (1, 1)])
print("(1 + T)^2 with cap 2:", (one_plus_t * one_plus_t).render(2))
short = from_terms(truncated(1), Z, [(0, 1), (1, 1)])
print("(1 + T)^2 with cap 1:", (short * short).render(1))

print()
print("== why the partial operation, not a clamp ==")


def capped(a, b, cap):
    return min(a + b, cap)


print("clamped addition collapses 2 < 3:", capped(2, 1, 3), "==", capped(3, 1, 3))
chain = FinitePoset.from_le(list(range(4)), lambda a, b: a <= b)
table = tuple(tuple(capped(i, j, 3) for j in range(4)) for i in range(4))
pomonoid = FinitePomonoid(chain, table, 0)
print("clamped table is a pomonoid but strict?", is_strict_pomonoid(pomonoid))
try:
    embed_finite_pomonoid(pomonoid)
except StrictnessError as exc:
    print("embedding refused:", exc)

print()
print("on the infinite carrier the clamp breaks decomposition finiteness:")
for window in (5, 10, 20):
    count = sum(1 for a in range(window) for b in range(window)
                if capped(a, b, 3) == 3)
    print(f"  splits of the cap point seen in window {window}: {count}")
print("whereas the partial monoid is window-stable:",
      len(M.decompose_within(2, ALL, ALL)), "splits of the top degree, always")
