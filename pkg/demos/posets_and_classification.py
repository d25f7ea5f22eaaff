"""Order theory under the series rings: chains, antichains, classification.

Which supports make convolution well-defined is an order-theoretic
question: a support works exactly when it is artinian (no infinite
descent) and narrow (no infinite antichain).  The classifier answers this
as a rule table over the closed carrier catalog, and finite posets get
constructive chain and antichain witnesses.
"""

from genseries import (ALL, FinitePomonoid, FinitePoset, GridTail, IntRing,
                       NatDiscrete, NatUsual, PosNatDivisibility,
                       RationalGrid, catalog_monoids, classify_subset,
                       embed_finite_pomonoid, finite, from_terms,
                       increasing_subsequence, is_strict_pomonoid,
                       largest_antichain, longest_chain, unit_series)

print("== classification of full carriers ==")
for monoid in catalog_monoids():
    c = classify_subset(monoid.carrier, ALL)
    print(f"  {monoid.describe():14s} artinian={c.artinian!s:5} "
          f"noetherian={c.noetherian!s:5} narrow={c.narrow!s:5} finite={c.finite}")

print()
print("== descriptors are admitted exactly when artinian and narrow ==")
cases = [
    (NatUsual(), ALL), (NatDiscrete(), ALL), (PosNatDivisibility(), ALL),
    (RationalGrid(), GridTail(-3, 2)), (NatUsual(), finite([0, 5, 7])),
]
for carrier, desc in cases:
    c = classify_subset(carrier, desc)
    print(f"  {carrier.name:12s} {desc!r:24s} admitted={c.artinian and c.narrow}")

print()
print("== finite posets: divisors of 36 under divisibility ==")
divisors = [d for d in range(1, 37) if 36 % d == 0]
poset = FinitePoset.from_le(divisors, lambda a, b: b % a == 0)
print("longest chain:", longest_chain(poset))
print("largest antichain:", largest_antichain(poset))

print()
print("== longest non-decreasing subsequences per carrier order ==")
seq = [3, 1, 4, 1, 5, 9, 2, 6]
idx = increasing_subsequence(NatUsual(), seq)
print(f"usual order on {seq}: values {[seq[i] for i in idx]}")
idx = increasing_subsequence(NatDiscrete(), [3, 1, 3, 3])
print(f"discrete order on [3, 1, 3, 3]: {len(idx)} equal values chain")

print()
print("== a strict finite pomonoid becomes a series index ==")
n = 3
table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
discrete = FinitePoset.build(list(range(n)), [[i == j for j in range(n)] for i in range(n)])
cyclic = FinitePomonoid(discrete, table, 0)
print("Z/3 with the discrete order is strict:", is_strict_pomonoid(cyclic))
monoid = embed_finite_pomonoid(cyclic)
x = from_terms(monoid, IntRing(), [(1, 1)])
cube = (x * x) * x
print("x^3 over the embedded Z/3 equals the unit:",
      cube.agree_on(unit_series(monoid, IntRing()), 0))
