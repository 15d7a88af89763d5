#!/usr/bin/env python3
# Homogeneous sequences: reading a field extension off a power series.
#
# Scan a series term by term; whenever a term's exponent leaves the
# value group generated so far, or its coefficient leaves the residue
# field, the partial sum through that term is a homogeneous
# approximation (its Krasner constant equals its value), and the chain
# of partial sums is pseudo Cauchy with the series as pseudo limit.
# The generated data gives a certified degree lower bound.

from fractions import Fraction

from ratval import (
    FiniteField,
    HahnSeries,
    Subgroup,
    TowerState,
    check_pseudo_cauchy,
    extract_homogeneous_sequence,
    implicit_constant_report,
    krasner_kummer,
    kummer_conjugate_differences,
    min_poly,
)

F2 = FiniteField(2)
state = TowerState(Subgroup.generated_by(1), residue_degree=1, residue_char=2)

print("== exponent novelty: z = sum t^(1 - 3^-i) over F_2((t^Z)) ==")
terms = [(Fraction(1) - Fraction(1, 3 ** i), 1) for i in range(1, 5)]
z = HahnSeries.make(F2, terms, trunc=1)
seq = extract_homogeneous_sequence(z, state)
for inc in seq.increments:
    print(f"  increment {inc.index}: novel exponent {inc.exponent}, "
          f"(e, f) = ({inc.e}, {inc.f}), kras = {inc.kras}")
report = implicit_constant_report(seq, z)
print("value group generators:", report["value_group_generators"])
print("degree lower bound:", report["degree_lower_bound"])

pcs = check_pseudo_cauchy(seq.partial_sums(), limit=z)
print("pseudo Cauchy chain with z as pseudo limit:", "pass" if pcs.ok else pcs.findings)

print()
print("== residue novelty: coefficients of growing degree ==")
F256 = FiniteField(2, (1, 0, 1, 1, 1, 0, 0, 0, 1))
def of_degree(d):
    return next(x for x in F256.elements() if len(min_poly(x)) - 1 == d)
z2 = HahnSeries.make(F256, [(i, of_degree(2 ** i)) for i in (1, 2, 3)], trunc=4)
seq2 = extract_homogeneous_sequence(z2, state)
print("residue degrees along the tower:",
      [seq2.base_state.residue_degree] + [i.state_after.residue_degree for i in seq2.increments])

print()
print("== Krasner constants, closed form vs enumeration ==")
F4 = FiniteField(2, (1, 1, 1))
c = HahnSeries.monomial(F4, 1, 1)
print("closed form for a cube root of t:", krasner_kummer(c, 3))
print("all conjugate differences, enumerated in F_4:",
      kummer_conjugate_differences(c, 3, F4))
