"""Ordinary and Laurent power series as lazy coefficient oracles.

Every series is a memoized function from exponents to coefficients plus a
symbolic support descriptor; products enumerate the finitely many
decompositions of each exponent.
"""

from fractions import Fraction

from genseries import (IntRing, Mat2Ring, RationalRing, TailGE,
                       from_function, from_terms, geometric, integers, nat,
                       unit_series)

Z = IntRing()
N = nat()

print("== the geometric series and its inverse ==")
g = geometric(Z)
print("geometric:", g.render(8), "...")
one_minus_t = from_terms(N, Z, [(0, 1), (1, -1)])
print("(1 - T) * geometric:", (one_minus_t * g).render(30))
print("agrees with 1 up to T^50:", (one_minus_t * g).agree_on(unit_series(N, Z), 50))

print()
print("== squaring: coefficient of T^n counts the n+1 splits ==")
g2 = g * g
print("geometric^2:", g2.render(6), "...")
print("coefficient at T^5:", g2.coeff(5))

print()
print("== Laurent series: integer exponents with tail supports ==")
L = integers()
Q = RationalRing()
inv_t = from_terms(L, Q, [(-1, Fraction(1))])
poly = from_terms(L, Q, [(0, Fraction(1)), (2, Fraction(-3, 2))])
product = inv_t * poly
print("T^-1 * (1 - 3/2 T^2):", product.render(4))
print("support descriptor:", product.support)

lazy_tail = from_function(L, Q, TailGE(-2), lambda m: Fraction(1, 2) ** (m + 2))
print("a lazy tail from T^-2:", lazy_tail.render(2), "...")

print()
print("== noncommutative coefficients ==")
M = Mat2Ring()
e12 = (0, 1, 0, 0)
e21 = (0, 0, 1, 0)
f = from_terms(nat(), M, [(1, e12)])
h = from_terms(nat(), M, [(1, e21)])
print("f*h at T^2:", M.render((f * h).coeff(2)))
print("h*f at T^2:", M.render((h * f).coeff(2)))
print("equal?", (f * h).agree_on(h * f, 4))
