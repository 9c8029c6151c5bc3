"""A quick tour of exact truncated q-series arithmetic.

Every coefficient below is an exact integer; series carry their own
truncation order and binary operations return the smaller window.
"""

from gapfree import (
    QSeries, one, monomial, geometric,
    poch_finite, poch_inf, phi,
    Q, MINUS_Q, MINUS_ONE, ZERO, Z,
    HypergeometricSpec,
)

order = 16

print("geometric pieces q^m/(1 - q^m):")
for m in (1, 2, 3):
    print(f"  m={m}:", geometric(m, 10))

print("\ninversion (constant term must be +-1):")
s = one(10) - monomial(1, 1, 10) - monomial(1, 2, 10)
print("  s      =", s)
print("  1/s    =", s.inverse())
print("  s * 1/s =", s * s.inverse())

print("\nEuler products:")
print("  (q; q)_inf      =", poch_inf(Q, order))
print("  (-q; q)_inf     =", poch_inf(MINUS_Q, order))
print("  (-1; q)_inf     =", poch_inf(MINUS_ONE, order), " (note the factor 2)")

print("\nthe partition generating function, as 1/(q; q)_inf:")
p_gf = poch_inf(Q, order).inverse()
print("  p(n) for n < 16:", list(p_gf.coeffs))

print("\nfinite Pochhammer symbols:")
print("  (-q; q)_3 =", poch_finite(MINUS_Q, 3, order), "  [(1+q)(1+q^2)(1+q^3)]")
print("  (-1; q)_3 =", poch_finite(MINUS_ONE, 3, order), "  [= 2(-q; q)_2]")

print("\na basic hypergeometric sum with z as a formal variable:")
spec = HypergeometricSpec((ZERO, Q), (MINUS_Q,), Z)
f = phi(spec, 8, zdeg=3)
print("  2phi1(0, q; -q; q, z), rows are z^0..z^3:")
for j in range(4):
    print(f"    z^{j}: {f.row(j)}")
print("  (row m is 1/(-q; q)_m, the distinct-partition count by largest part)")
