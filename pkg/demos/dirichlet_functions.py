"""Arithmetic functions under Dirichlet convolution.

The positive naturals under multiplication index these series; products
enumerate divisor pairs, so zeta * zeta tabulates divisor counts and the
Moebius function inverts zeta exactly.
"""

from genseries import IntRing, moebius, posnat_mul, unit_series, zeta

Z = IntRing()
P = posnat_mul()

print("== zeta * zeta: the divisor-count function ==")
z = zeta(Z)
zz = z * z
for n in (1, 2, 6, 12, 36, 60):
    print(f"  d({n}) = {zz.coeff(n)}")

print()
print("== triple convolution: ordered factorizations into three parts ==")
zzz = zz * z
for n in (4, 8, 12):
    print(f"  n={n}: {zzz.coeff(n)} ordered 3-factorizations")

print()
print("== Moebius inversion ==")
mu = moebius(Z, 200)
print("mu(1..12):", [mu.coeff(n) for n in range(1, 13)])
inverted = z * mu
e = unit_series(P, Z)
print("zeta * moebius agrees with the convolution unit up to 200:",
      inverted.agree_on(e, 200))

print()
print("== the declared bound is a hard edge ==")
try:
    mu.coeff(201)
except Exception as exc:
    print("mu(201):", type(exc).__name__, "-", exc)
