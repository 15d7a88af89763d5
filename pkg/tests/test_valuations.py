import random
from fractions import Fraction

import pytest

from ratval.errors import PreconditionError
from ratval.fields import FiniteField, FunctionFieldElement
from ratval.groups import GroupElement
from ratval.series import HahnSeries
from ratval.valuations import (
    RESIDUE_TRANSCENDENTAL,
    VALUATION_ALGEBRAIC,
    VALUE_TRANSCENDENTAL,
    CenteredValuation,
    PAdicRationals,
    PseudoCauchyValuation,
    RatFunc,
    RationalFunction,
    SeriesValuedField,
    TAdicRationalFunctions,
    TriviallyValued,
    classify_summary,
    expand_about,
    substitution_value,
    taylor_shift,
)

F2 = FiniteField(2)
Q3 = PAdicRationals(3)
T2 = TAdicRationalFunctions(F2)
TRIV2 = TriviallyValued(F2)


def rand_poly(base, rng, max_deg=5):
    while True:
        coeffs = [base.sample(rng) for _ in range(rng.randint(1, max_deg + 1))]
        f = RationalFunction.over(base, coeffs)
        if not f.is_zero():
            return list(f.num)


def poly_mul(f, g, base):
    out = [base.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return out


class TestTaylorShift:
    def test_binomial(self):
        assert taylor_shift([Fraction(0), Fraction(0), Fraction(1)], Fraction(1), Fraction(0)) == [
            Fraction(1), Fraction(2), Fraction(1)
        ]

    def test_identity_shift(self):
        got = taylor_shift([Fraction(9), Fraction(3), Fraction(1)], Fraction(0), Fraction(0))
        assert got == [Fraction(9), Fraction(3), Fraction(1)]

    def test_cube_over_f2(self):
        cs = [F2.zero(), F2.zero(), F2.zero(), F2.one()]
        got = taylor_shift(cs, F2.element(-1), F2.zero())
        assert got == [F2.one()] * 4

    def test_reexpansion_oracle(self):
        rng = random.Random(11)
        for _ in range(100):
            coeffs = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(rng.randint(1, 6))]
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 5))
            shifted = taylor_shift(coeffs, a, Fraction(0))
            back = expand_about(shifted, a, Fraction(0), Fraction(1))
            trimmed = list(coeffs)
            while trimmed and trimmed[-1] == 0:
                trimmed.pop()
            while back and back[-1] == 0:
                back.pop()
            assert back == trimmed


class TestEvalCentered:
    def test_3adic_example(self):
        w = CenteredValuation(Q3, 0, GroupElement.of(1))
        assert w.of_poly([9, 3, 1]) == GroupElement.of(2)

    def test_gauss_valuation_constant(self):
        w = CenteredValuation(Q3, 0, GroupElement.of(0))
        assert w.of_poly([Fraction(9)]) == GroupElement.of(2)

    def test_trivial_base_fresh_z(self):
        w = CenteredValuation(TRIV2, 0, GroupElement.of(1))
        assert w.of_poly([0, 1, 1]) == GroupElement.of(1)

    def test_zero_polynomial_rejected(self):
        w = CenteredValuation(Q3, 0, GroupElement.of(1))
        with pytest.raises(PreconditionError):
            w.of_poly([0])

    def test_rational_function_examples(self):
        w = CenteredValuation(Q3, 0, GroupElement.of(1))
        f = RationalFunction.over(Q3, [9, 3, 1], [0, 1])
        assert w.of_fraction(f) == GroupElement.of(1)
        g = RationalFunction.over(Q3, [9, 3, 1], [9, 3, 1])
        assert w.of_fraction(g) == GroupElement.zero(1)
        w2 = CenteredValuation(Q3, 0, GroupElement.of("1/2"))
        h = RationalFunction.over(Q3, [1], [0, 1])
        assert w2.of_fraction(h) == GroupElement.of("-1/2")

    @pytest.mark.parametrize("base,gamma", [
        (Q3, GroupElement.of(1)),
        (T2, GroupElement.of("1/2")),
        (TRIV2, GroupElement.of(1)),
    ])
    def test_valuation_axioms(self, base, gamma):
        rng = random.Random(17)
        w = CenteredValuation(base, base.element(0), gamma)
        for _ in range(300):
            f = rand_poly(base, rng, 3)
            g = rand_poly(base, rng, 3)
            assert w.of_poly(poly_mul(f, g, base)) == w.of_poly(f) + w.of_poly(g)

    def test_representative_independence(self):
        rng = random.Random(23)
        w = CenteredValuation(Q3, Fraction(1), GroupElement.of("1/2"))
        for _ in range(100):
            g = rand_poly(Q3, rng, 3)
            g2 = rand_poly(Q3, rng, 3)
            h = rand_poly(Q3, rng, 2)
            lhs = w.of_fraction(RationalFunction.over(Q3, poly_mul(g, h, Q3), poly_mul(g2, h, Q3)))
            rhs = w.of_fraction(RationalFunction.over(Q3, g, g2))
            assert lhs == rhs


class TestSubstitutionOracle:
    def test_matches_direct_examples(self):
        w = CenteredValuation(Q3, 0, GroupElement.of(1))
        assert substitution_value(w, [9, 3, 1]) == w.of_poly([9, 3, 1])
        assert substitution_value(w, [9, 3, 1], [0, 1]) == GroupElement.of(1)

    def test_x_minus_center(self):
        w = CenteredValuation(Q3, Fraction(7), GroupElement.of("3/2"))
        assert substitution_value(w, [Fraction(-7), Fraction(1)]) == GroupElement.of("3/2")

    @pytest.mark.parametrize("gamma", [
        GroupElement.of(0),
        GroupElement.of(1),
        GroupElement.of("1/2"),
        GroupElement.of(0, 1),
    ])
    def test_random_rational_functions(self, gamma):
        rng = random.Random(31)
        w = CenteredValuation(Q3, Fraction(2), gamma)
        for _ in range(200):
            num, den = rand_poly(Q3, rng), rand_poly(Q3, rng)
            direct = w.of_fraction(RationalFunction(tuple(num), tuple(den)))
            assert substitution_value(w, num, den) == direct

    def test_t_adic_base(self):
        rng = random.Random(37)
        w = CenteredValuation(T2, T2.element({"num": [1]}), GroupElement.of("1/3"))
        for _ in range(100):
            num, den = rand_poly(T2, rng, 3), rand_poly(T2, rng, 3)
            direct = w.of_fraction(RationalFunction(tuple(num), tuple(den)))
            assert substitution_value(w, num, den) == direct


class TestValueGroupStructure:
    def test_values_lie_in_vk_plus_z_gamma_nontorsion(self):
        # rank-2 lex, gamma fresh: values decompose over vK + Z*gamma
        rng = random.Random(41)
        gamma = GroupElement.of(0, 1)
        w = CenteredValuation(Q3, 0, gamma)
        sub = w.base_value_subgroup.extended(gamma)
        for _ in range(100):
            f = rand_poly(Q3, rng)
            assert sub.witness(w.of_poly(f)) is not None

    def test_torsion_index_divides_e(self):
        rng = random.Random(43)
        gamma = GroupElement.of("1/2")
        w = CenteredValuation(Q3, 0, gamma)
        e = w.torsion_order()
        assert e == 2
        base = w.base_value_subgroup
        values = [w.of_poly(rand_poly(Q3, rng)) for _ in range(60)]
        gen = base.extended(*values)
        idx = gen.index_over(base)
        assert idx is not None and e % idx == 0


class TestResidue:
    def test_torsion_residue_lands_in_generator_field(self):
        w = CenteredValuation(Q3, 0, GroupElement.of("1/2"))
        f = RationalFunction.over(Q3, [3, 0, 1], [3])
        res = w.residue_of(f)
        assert isinstance(res, FunctionFieldElement)
        k = res.field
        assert res == k.gen() + 1

    def test_constant_one(self):
        w = CenteredValuation(Q3, 0, GroupElement.of("1/2"))
        f = RationalFunction.over(Q3, [1], [1])
        assert w.residue_of(f) == Q3.residue_field.one()

    def test_nonzero_value_rejected_lex(self):
        w = CenteredValuation(Q3, 0, GroupElement.of(0, 1))
        f = RationalFunction.over(Q3, [3, 0, 1], [3])
        # min(2*gamma - 1, 0): 2*gamma - 1 = (-1, 2) < 0 lexicographically
        assert w.of_fraction(f) == GroupElement.of(-1, 2)
        with pytest.raises(PreconditionError):
            w.residue_of(f)

    def test_residue_is_multiplicative(self):
        rng = random.Random(47)
        w = CenteredValuation(Q3, 0, GroupElement.of("1/2"))
        for _ in range(30):
            f = rand_poly(Q3, rng, 4)
            g = rand_poly(Q3, rng, 4)
            fg = poly_mul(f, g, Q3)
            assert w.residue_of(RationalFunction(tuple(f), tuple(f))) == Q3.residue_field.one()
            # (f*g)/(g*f) has residue 1 however the minimum spreads over terms
            a = w.residue_of(RationalFunction(tuple(fg), tuple(poly_mul(g, f, Q3))))
            assert a == Q3.residue_field.one()

    def test_gauss_valuation_residue_generator(self):
        # gamma = 0: the residue of x itself is the transcendental generator
        w = CenteredValuation(Q3, 0, GroupElement.of(0))
        f = RationalFunction.over(Q3, [0, 1], [1])
        res = w.residue_of(f)
        assert isinstance(res, FunctionFieldElement)
        assert res == res.field.gen()


class TestClassification:
    def test_lex_non_torsion(self):
        w = CenteredValuation(Q3, 0, GroupElement.of(0, 1))
        assert w.classify() == VALUE_TRANSCENDENTAL

    def test_half_over_z(self):
        w = CenteredValuation(Q3, 0, GroupElement.of("1/2"))
        assert w.classify() == RESIDUE_TRANSCENDENTAL

    def test_undecided_at_bound_is_not_a_label(self):
        from ratval.errors import UndecidedError

        w = CenteredValuation(Q3, 0, GroupElement.of("1/7"))
        with pytest.raises(UndecidedError):
            w.classify(bound=3)
        assert w.classify(bound=7) == RESIDUE_TRANSCENDENTAL

    def test_pseudo_cauchy_descriptor(self):
        base = SeriesValuedField(F2)
        elems = [
            HahnSeries.make(F2, [(Fraction(1) - Fraction(1, 3 ** j), 1) for j in range(1, i + 1)],
                            trunc=1)
            for i in range(1, 5)
        ]
        v = PseudoCauchyValuation(base, elems)
        assert v.classify() == VALUATION_ALGEBRAIC

    def test_pcs_rejects_non_pcs(self):
        base = SeriesValuedField(F2)
        a = HahnSeries.monomial(F2, 1, 1)
        with pytest.raises(PreconditionError):
            PseudoCauchyValuation(base, [a, a + HahnSeries.monomial(F2, 2, 1), a])

    def test_values_along_stabilization(self):
        base = SeriesValuedField(F2)
        elems = [
            HahnSeries.make(F2, [(Fraction(1) - Fraction(1, 3 ** j), 1) for j in range(1, i + 1)],
                            trunc=1)
            for i in range(1, 5)
        ]
        v = PseudoCauchyValuation(base, elems)
        # g(x) = x: v(a_nu) = 2/3 for every nu: stabilized from the start
        report = v.values_along([base.zero(), base.one()])
        assert report["stabilized_at_depth"]
        assert report["stable_from"] == 0
        assert report["values"][0] == Fraction(2, 3)

    def test_summary_trichotomy(self):
        assert classify_summary(True, True) == VALUATION_ALGEBRAIC
        assert classify_summary(False, True) == VALUE_TRANSCENDENTAL
        assert classify_summary(True, False) == RESIDUE_TRANSCENDENTAL
        with pytest.raises(PreconditionError):
            classify_summary(False, False)


class TestBases:
    @pytest.mark.parametrize("base", [
        PAdicRationals(3), PAdicRationals(2), T2,
        TAdicRationalFunctions(FiniteField(5)),
        TRIV2, SeriesValuedField(F2),
    ])
    def test_base_valuation_axioms(self, base):
        from ratval.valuations import _is_zero

        rng = random.Random(59)
        for _ in range(200):
            a, b = base.sample(rng), base.sample(rng)
            if _is_zero(a) or _is_zero(b):
                continue
            prod = a * b
            if not _is_zero(prod):
                assert base.val(prod) == base.val(a) + base.val(b)
            s = a + b
            if not _is_zero(s):
                assert base.val(s) >= min(base.val(a), base.val(b))

    def test_padic_val_and_residue(self):
        assert Q3.val(Fraction(9, 2)) == 2
        assert Q3.val(Fraction(2, 27)) == -3
        assert Q3.residue(Fraction(7, 2)).to_json() == 2  # 7 * inv(2) = 7*2 = 14 = 2 mod 3

    def test_tadic(self):
        f = RatFunc(F2, [F2.zero(), F2.one()], [F2.one(), F2.one()])  # t/(1+t)
        assert T2.val(f) == 1
        g = RatFunc(F2, [F2.one(), F2.one()], [F2.one()])
        assert T2.residue(g) == F2.one()

    def test_series_base(self):
        base = SeriesValuedField(F2)
        s = HahnSeries.make(F2, [(Fraction(-1, 2), 1), (0, 1)])
        assert base.val(s) == Fraction(-1, 2)
        assert base.residue(HahnSeries.make(F2, [(0, 1), (1, 1)])) == F2.one()

    def test_element_of_value(self):
        assert Q3.val(Q3.element_of_value(Fraction(-2))) == -2
        assert T2.val(T2.element_of_value(Fraction(3))) == 3
        base = SeriesValuedField(F2)
        assert base.val(base.element_of_value(Fraction(-5, 2))) == Fraction(-5, 2)

    def test_json_round_trip(self):
        from ratval.valuations import ValuedField

        for base in (Q3, T2, TRIV2, SeriesValuedField(F2)):
            back = ValuedField.from_json(base.to_json())
            assert back.to_json() == base.to_json()
