#!/usr/bin/env python3
# Truncated generalized power series with exact exponents.
#
# Terms are (rational exponent, exact coefficient) pairs; every series
# carries a truncation bound marking where knowledge stops, and binary
# operations compute the tightest sound bound for the result.

from fractions import Fraction

from ratval import FiniteField, HahnSeries, artin_schreier_root, kummer_root, GroupElement

F2 = FiniteField(2)
F4 = FiniteField(2, (1, 1, 1))  # F_2[u] / (u^2 + u + 1)

print("== arithmetic in characteristic 2 ==")
s = HahnSeries.make(F2, [(Fraction(-1, 2), 1), (Fraction(-1, 4), 1)])
print("s      =", s)
print("s^2    =", s * s, "   (the cross term has coefficient 2 = 0)")

print()
print("== truncated inversion ==")
geom = HahnSeries.make(F2, [(0, 1), (1, 1)])  # 1 + t
print("1/(1+t) to 4 terms:", geom.invert(4))

print()
print("== Artin-Schreier roots, termwise p-th roots ==")
u = HahnSeries.monomial(F2, -1, 1)  # x^(-1)
a = artin_schreier_root(u, 4)
print("root of X^2 - X - x^(-1), depth 4:", a)
resid = a * a - a - u
print("residual a^2 - a - u =", resid, "  value:", resid.value())
print("v(a) = v(u)/2:", a.value())

# coefficients go through the inverse of Frobenius
t = F4.gen()
b = artin_schreier_root(HahnSeries.monomial(F4, -1, t), 1)
print("over F_4 with coefficient u: first term", b, "(coefficient is sqrt(u))")

print()
print("== Kummer roots are monomials ==")
r = kummer_root(GroupElement.of(-2), FiniteField(3).one(), 2)
print("square root of t^(-2) over F_3:", r, "  squared:", r * r)
