import random
from fractions import Fraction

import pytest

from ratval.errors import PreconditionError
from ratval.fields import RATIONALS, FiniteField
from ratval.groups import GroupElement
from ratval.series import HahnSeries, artin_schreier_root, kummer_root

F2 = FiniteField(2)
F3 = FiniteField(3)
F4 = FiniteField(2, (1, 1, 1))
F9 = FiniteField(3, (1, 0, 1))


def S(field, pairs, trunc=None):
    return HahnSeries.make(field, pairs, trunc)


def rand_series(field, rng, allow_zero=True):
    n = rng.randint(0 if allow_zero else 1, 4)
    terms = []
    for _ in range(n):
        expo = Fraction(rng.randint(-8, 8), rng.choice([1, 2, 3, 4]))
        terms.append((expo, field.sample(rng)))
    s = S(field, terms)
    if not allow_zero and s.is_zero():
        return rand_series(field, rng, allow_zero)
    return s


class TestValue:
    def test_least_exponent(self):
        s = S(RATIONALS, [(Fraction(1, 2), 1), (1, 1)])
        assert s.value() == GroupElement.of("1/2")

    def test_zero_series_above_truncation(self):
        s = HahnSeries.zero(RATIONALS, trunc=GroupElement.of(5))
        assert s.value() is None
        assert s.value_bound() == GroupElement.of(5)

    def test_constant_plus_t(self):
        assert S(RATIONALS, [(0, 3), (1, 1)]).value() == GroupElement.zero(1)


class TestRingOps:
    def test_char_2_square(self):
        s = S(F2, [(Fraction(-1, 2), 1), (Fraction(-1, 4), 1)])
        assert (s * s) == S(F2, [(-1, 1), (Fraction(-1, 2), 1)])

    def test_additive_inverse(self):
        rng = random.Random(1)
        for _ in range(50):
            s = rand_series(F9, rng)
            assert (s + (-s)).is_zero()

    def test_product_of_conjugates(self):
        one_plus = S(RATIONALS, [(0, 1), (1, 1)])
        one_minus = S(RATIONALS, [(0, 1), (1, -1)])
        assert one_plus * one_minus == S(RATIONALS, [(0, 1), (2, -1)])

    def test_field_mismatch(self):
        with pytest.raises(PreconditionError):
            S(F2, [(0, 1)]) + S(F3, [(0, 1)])

    def test_ultrametric_random(self):
        rng = random.Random(2)
        for field in (RATIONALS, F4, F9):
            for _ in range(334):
                s, r = rand_series(field, rng), rand_series(field, rng)
                total = s + r
                vs, vr = s.value(), r.value()
                if vs is None or vr is None or total.value() is None:
                    continue
                assert total.value() >= min(vs, vr)
                if vs != vr:
                    assert total.value() == min(vs, vr)

    def test_multiplicativity_random(self):
        rng = random.Random(3)
        for field in (RATIONALS, F4, F9):
            for _ in range(334):
                s = rand_series(field, rng, allow_zero=False)
                r = rand_series(field, rng, allow_zero=False)
                assert (s * r).value() == s.value() + r.value()

    def test_truncation_min_for_addition(self):
        a = S(RATIONALS, [(0, 1)], trunc=3)
        b = S(RATIONALS, [(1, 1)], trunc=2)
        assert (a + b).trunc == GroupElement.of(2)

    def test_truncation_for_products(self):
        # min over v(s) + trunc(r), v(r) + trunc(s)
        s = S(RATIONALS, [(1, 1)], trunc=4)
        r = S(RATIONALS, [(2, 1)], trunc=3)
        assert (s * r).trunc == GroupElement.of(4)  # min(1+3, 2+4)



class TestInvert:
    def test_monomial_is_exact(self):
        t = S(RATIONALS, [(1, 1)])
        inv = t.invert(1)
        assert inv == S(RATIONALS, [(-1, 1)])
        assert inv.trunc is None

    def test_geometric_series(self):
        s = S(RATIONALS, [(0, 1), (1, -1)])
        inv = s.invert(3)
        assert [(e.coords[0], c.value) for e, c in inv.terms] == [
            (0, Fraction(1)), (1, Fraction(1)), (2, Fraction(1))
        ]

    def test_f3_example(self):
        s = S(F3, [(Fraction(1, 2), 1), (1, 1)])
        inv = s.invert(2)
        assert [(e.coords[0], c.value[0]) for e, c in inv.terms] == [
            (Fraction(-1, 2), 1), (Fraction(0), 2)
        ]
        prod = s * inv
        one = S(F3, [(0, 1)])
        resid = prod - one
        # the residual vanishes below the truncation implied by the depth
        assert resid.value() is None

    def test_inverse_property_random(self):
        rng = random.Random(4)
        for field in (RATIONALS, F4):
            for _ in range(100):
                s = rand_series(field, rng, allow_zero=False)
                depth = rng.randint(1, 4)
                inv = s.invert(depth)
                resid = s * inv - HahnSeries.constant(field, field.one())
                if resid.value() is None:
                    continue  # vanished within knowledge
                assert inv.trunc is not None
                # residual sits at or above trunc(inv) + v(s)
                assert resid.value() >= inv.trunc + s.value()

    def test_zero_rejected(self):
        with pytest.raises(PreconditionError):
            HahnSeries.zero(F2).invert(2)


class TestFrobeniusPower:
    def test_char_2_square_matches_mul(self):
        s = S(F2, [(Fraction(-1, 2), 1), (Fraction(-1, 4), 1)])
        assert s.frobenius_power(1) == s * s

    def test_identity_power(self):
        s = S(F9, [(1, F9.gen()), (2, 1)])
        assert s.frobenius_power(0) == s

    def test_exponent_map_example(self):
        e = [1, 2, 4]
        s = S(F2, [(-Fraction(1, 2 ** ei), 1) for ei in e])
        out = s.frobenius_power(e[1])
        assert [t[0].coords[0] for t in out.terms] == [
            Fraction(-2), Fraction(-1), Fraction(-1, 4)
        ]

    def test_matches_repeated_multiplication(self):
        rng = random.Random(5)
        for field in (F2, F4, F9):
            p = field.characteristic
            for _ in range(30):
                s = rand_series(field, rng)
                e = rng.randint(0, 2)
                brute = HahnSeries.constant(field, field.one())
                for _ in range(p ** e):
                    brute = brute * s
                fast = s.frobenius_power(e)
                assert fast.terms == brute.terms

    def test_char_zero_rejected(self):
        with pytest.raises(PreconditionError):
            S(RATIONALS, [(0, 1)]).frobenius_power(1)


class TestArtinSchreierRoot:
    def test_closed_form_example(self):
        u = HahnSeries.monomial(F2, -1, 1)
        a = artin_schreier_root(u, 4)
        assert [t[0].coords[0] for t in a.terms] == [
            Fraction(-1, 2), Fraction(-1, 4), Fraction(-1, 8), Fraction(-1, 16)
        ]
        resid = a * a - a - u
        assert resid.value() == GroupElement.of("-1/16")
        # strictly above the depth-3 level
        assert resid.value() > GroupElement.of("-1/8")

    def test_value_property_random(self):
        rng = random.Random(6)
        for _ in range(20):
            u = rand_series(F4, rng, allow_zero=False)
            if not u.value() < GroupElement.zero(1):
                continue
            a = artin_schreier_root(u, 3)
            assert a.value() == u.value().scaled(Fraction(1, 2))

    def test_coefficient_frobenius_inverse(self):
        u = HahnSeries.monomial(F4, -1, F4.gen())
        a = artin_schreier_root(u, 1)
        expo, coeff = a.terms[0]
        assert expo == GroupElement.of("-1/2")
        assert coeff == F4.gen().frobenius_inverse()
        assert coeff * coeff == F4.gen()

    def test_nonnegative_value_rejected(self):
        with pytest.raises(PreconditionError):
            artin_schreier_root(HahnSeries.monomial(F2, 1, 1), 2)

    def test_char_zero_rejected(self):
        with pytest.raises(PreconditionError):
            artin_schreier_root(HahnSeries.monomial(RATIONALS, -1, 1), 2)


class TestKummerRoot:
    def test_cube_root_of_t(self):
        r = kummer_root(GroupElement.of(1), RATIONALS.one(), 3)
        assert r == HahnSeries.monomial(RATIONALS, Fraction(1, 3), 1)

    def test_square_root_in_f3(self):
        r = kummer_root(GroupElement.of(-2), F3.one(), 2)
        assert (r * r) == HahnSeries.monomial(F3, -2, 1)

    def test_rational_constant(self):
        r = kummer_root(GroupElement.zero(1), RATIONALS.element(4), 2)
        assert r == HahnSeries.constant(RATIONALS, 2)

    def test_missing_root_rejected(self):
        with pytest.raises(PreconditionError):
            kummer_root(GroupElement.zero(1), RATIONALS.element(2), 2)
        with pytest.raises(PreconditionError):
            kummer_root(GroupElement.zero(1), F3.element(2), 2)  # 2 is not a square mod 3


class TestSerialization:
    def test_round_trip(self):
        s = S(F9, [(Fraction(-1, 2), F9.gen()), (2, 1)], trunc=5)
        back = HahnSeries.from_json(s.to_json())
        assert back == s

    def test_rational_coefficients_round_trip(self):
        s = S(RATIONALS, [(Fraction(1, 3), Fraction(2, 7))])
        assert HahnSeries.from_json(s.to_json()) == s
