#!/usr/bin/env python3
# Valuations on K(x) from a center and a value.
#
# Fix a valued base field K, a center a in K, and a value gamma for
# x - a in an ordered extension of the value group.  A polynomial's
# value is the minimum of v(c_i) + i*gamma over its Taylor coefficients
# at the center; quotients subtract.  Everything below is exact.

from fractions import Fraction

from ratval import (
    CenteredValuation,
    GroupElement,
    PAdicRationals,
    RationalFunction,
    substitution_value,
    taylor_shift,
)

Q3 = PAdicRationals(3)  # Q with the 3-adic valuation

print("== evaluating a centered valuation ==")
w = CenteredValuation(Q3, 0, GroupElement.of(1))  # center 0, v(x) = 1
g = [9, 3, 1]  # 9 + 3x + x^2
print("Taylor coefficients of g at 0:", taylor_shift([Fraction(c) for c in g], Fraction(0), Fraction(0)))
print("v(g) = min(v(9)+0, v(3)+1, v(1)+2) =", w.of_poly(g))

f = RationalFunction.over(Q3, g, [0, 1])  # g / x
print("v(g/x) =", w.of_fraction(f))

print()
print("== the substitution oracle agrees ==")
# Expand g(a + u*s) in a fresh unit marker u and a symbol s of value
# gamma; the minimum over monomials is the same valuation, computed by
# a completely different route.
print("oracle value:", substitution_value(w, g, [0, 1]))

print()
print("== classification: torsion gamma vs fresh gamma ==")
w_half = CenteredValuation(Q3, 0, GroupElement.of("1/2"))
print("gamma = 1/2 over vK = Z:", w_half.classify())

w_lex = CenteredValuation(Q3, 0, GroupElement.of(0, 1))  # rank-2 lex, fresh axis
print("gamma = (0,1) over vK = <(1,0)>:", w_lex.classify())

print()
print("== residues land in a rational function field ==")
# gamma = 1/2 has torsion order e = 2; with d = 1/3 of value -2*gamma,
# the residue of a value-zero quotient is a rational function in the
# residue ybar of d*(x-a)^2.
h = RationalFunction.over(Q3, [3, 0, 1], [3])  # (x^2 + 3) / 3, value 0
print("v((x^2+3)/3) =", w_half.of_fraction(h))
print("residue:", w_half.residue_of(h))
