"""Valuations on rational function fields K(x).

A base valued field (p-adic rationals, t-adic rational functions, a
trivially valued field, or a truncated series field) is extended to
K(x) by a centered valuation: fixing a center a in K and a value gamma
for x - a in an ordered group extension of the value group, the value of
a polynomial is the minimum of v(c_i) + i*gamma over its Taylor
coefficients at the center, and values of quotients are differences.

An independent substitution oracle evaluates the same valuation by
expanding g(a + u*s) in a fresh transcendental unit marker u and a
symbol s of value gamma, then taking the minimum over all monomials;
valuation independence of the monomials makes that minimum exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError
from .fields import (
    Field,
    FieldElement,
    FiniteField,
    FunctionField,
    FunctionFieldElement,
)
from .groups import GroupElement, Subgroup
from .series import HahnSeries

__all__ = [
    "ValuedField",
    "PAdicRationals",
    "TAdicRationalFunctions",
    "TriviallyValued",
    "SeriesValuedField",
    "RatFunc",
    "RationalFunction",
    "CenteredValuation",
    "taylor_shift",
    "expand_about",
    "substitution_value",
    "PseudoCauchyValuation",
    "classify_summary",
    "VALUE_TRANSCENDENTAL",
    "RESIDUE_TRANSCENDENTAL",
    "VALUATION_ALGEBRAIC",
]

VALUE_TRANSCENDENTAL = "value-transcendental"
RESIDUE_TRANSCENDENTAL = "residue-transcendental"
VALUATION_ALGEBRAIC = "valuation-algebraic"


def _is_zero(a) -> bool:
    if isinstance(a, Fraction):
        return a == 0
    if isinstance(a, (FieldElement, HahnSeries, RatFunc, FunctionFieldElement)):
        return a.is_zero()
    raise TypeError(f"unsupported element type {type(a).__name__}")


# ---------------------------------------------------------------------------
# base valued fields

class ValuedField:
    """A field K with an exactly computable rank-1 valuation."""

    residue_field: Field

    def val(self, a) -> Fraction:
        """Value of a nonzero element, as an exact rational."""
        raise NotImplementedError

    def residue(self, a):
        """Residue of an element of value zero."""
        raise NotImplementedError

    def residue_quot(self, a, b):
        """Residue of a/b for elements with val(a) == val(b)."""
        raise NotImplementedError

    def element_of_value(self, v: Fraction):
        """A canonical element with the given value in the value group."""
        raise NotImplementedError

    def value_generators(self) -> list[Fraction]:
        """Generators of the value group vK inside Q."""
        raise NotImplementedError

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def element(self, data):
        """Coerce JSON data (or a raw value) to a field element."""
        raise NotImplementedError

    def sample(self, rng):
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    @staticmethod
    def from_json(data: dict) -> "ValuedField":
        kind = data.get("kind")
        if kind == "p-adic":
            return PAdicRationals(int(data["p"]))
        if kind == "t-adic":
            return TAdicRationalFunctions(Field.from_json(data.get("coefficients", {"char": 0})))
        if kind == "trivial":
            return TriviallyValued(Field.from_json(data["coefficients"]))
        if kind == "series":
            gens = [Fraction(g) for g in data.get("value_group", ["1"])]
            return SeriesValuedField(Field.from_json(data["coefficients"]), gens)
        raise PreconditionError(f"unknown base valued field kind {kind!r}")


class PAdicRationals(ValuedField):
    """Q with the p-adic valuation; elements are exact Fractions."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise PreconditionError(f"{p} is not prime")
        self.p = p
        self.residue_field = FiniteField(p)

    @staticmethod
    def _intval(n: int, p: int) -> int:
        v = 0
        while n % p == 0:
            n //= p
            v += 1
        return v

    def val(self, a) -> Fraction:
        a = Fraction(a)
        if a == 0:
            raise PreconditionError("the zero element has no value")
        return Fraction(self._intval(a.numerator, self.p) - self._intval(a.denominator, self.p))

    def residue(self, a) -> FieldElement:
        a = Fraction(a)
        if self.val(a) != 0:
            raise PreconditionError("residue is defined for elements of value zero")
        return self.residue_field.element(
            a.numerator * pow(a.denominator, -1, self.p)
        )

    def residue_quot(self, a, b) -> FieldElement:
        return self.residue(Fraction(a) / Fraction(b))

    def element_of_value(self, v: Fraction):
        v = Fraction(v)
        if v.denominator != 1:
            raise PreconditionError(f"{v} is not in the value group Z")
        return Fraction(self.p) ** v.numerator

    def value_generators(self):
        return [Fraction(1)]

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def element(self, data):
        return Fraction(data)

    def sample(self, rng):
        num = rng.randint(-40, 40)
        den = rng.randint(1, 40)
        return Fraction(num, den)

    def to_json(self):
        return {"kind": "p-adic", "p": self.p}

    def __repr__(self):
        return f"Q ({self.p}-adic)"


class RatFunc:
    """A rational function in t over an exact coefficient field.

    Dense num/den coefficient tuples; arithmetic is exact and the t-adic
    value (order of vanishing at t = 0) is read off the trailing terms.
    """

    __slots__ = ("field", "num", "den")

    def __init__(self, field: Field, num, den=None):
        def conv(cs):
            out = [field.element(c) if not isinstance(c, FieldElement) else c for c in cs]
            n = len(out)
            while n and out[n - 1].is_zero():
                n -= 1
            return tuple(out[:n])

        self.field = field
        self.num = conv(num)
        self.den = conv(den if den is not None else [field.one()])
        if not self.den:
            raise PreconditionError("zero denominator")

    def is_zero(self) -> bool:
        return not self.num

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise PreconditionError("coefficient field mismatch")
            return other
        return RatFunc(self.field, [other])

    def _mul_lists(self, a, b):
        if not a or not b:
            return ()
        zero = self.field.zero()
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return tuple(out)

    def _add_lists(self, a, b):
        zero = self.field.zero()
        n = max(len(a), len(b))
        return tuple(
            (a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero) for i in range(n)
        )

    def __add__(self, other):
        other = self._coerce(other)
        return RatFunc(
            self.field,
            self._add_lists(self._mul_lists(self.num, other.den), self._mul_lists(other.num, self.den)),
            self._mul_lists(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        out = RatFunc.__new__(RatFunc)
        out.field = self.field
        out.num = tuple(-c for c in self.num)
        out.den = self.den
        return out

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFunc(self.field, self._mul_lists(self.num, other.num),
                       self._mul_lists(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise PreconditionError("division by zero")
        return RatFunc(self.field, self._mul_lists(self.num, other.den),
                       self._mul_lists(self.den, other.num))

    def __pow__(self, n: int):
        if n < 0:
            return (RatFunc(self.field, [self.field.one()]) / self) ** (-n)
        out = RatFunc(self.field, [self.field.one()])
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self._mul_lists(self.num, other.den) == self._mul_lists(other.num, self.den)

    def _trail(self, cs) -> int:
        for i, c in enumerate(cs):
            if not c.is_zero():
                return i
        raise PreconditionError("zero polynomial has no t-adic order")

    def tadic_val(self) -> Fraction:
        return Fraction(self._trail(self.num) - self._trail(self.den))

    def tadic_residue(self):
        i, j = self._trail(self.num), self._trail(self.den)
        if i != j:
            raise PreconditionError("residue is defined for elements of value zero")
        return self.num[i] / self.den[j]

    def to_json(self):
        return {"num": [c.to_json() for c in self.num], "den": [c.to_json() for c in self.den]}

    def __repr__(self):
        def side(cs):
            parts = []
            for i, c in enumerate(cs):
                if c.is_zero():
                    continue
                if i == 0:
                    parts.append(repr(c))
                else:
                    head = "" if repr(c) == "1" else f"({c!r})*"
                    parts.append(f"{head}t" + (f"^{i}" if i > 1 else ""))
            return " + ".join(parts) if parts else "0"

        if len(self.den) == 1 and self.den[0] == self.field.one():
            return side(self.num)
        return f"({side(self.num)})/({side(self.den)})"


class TAdicRationalFunctions(ValuedField):
    """k(t) with the t-adic valuation, k an exact coefficient field."""

    def __init__(self, coefficients: Field):
        self.coefficients = coefficients
        self.residue_field = coefficients

    def val(self, a: RatFunc) -> Fraction:
        if a.is_zero():
            raise PreconditionError("the zero element has no value")
        return a.tadic_val()

    def residue(self, a: RatFunc):
        return a.tadic_residue()

    def residue_quot(self, a: RatFunc, b: RatFunc):
        return (a / b).tadic_residue()

    def element_of_value(self, v: Fraction):
        v = Fraction(v)
        if v.denominator != 1:
            raise PreconditionError(f"{v} is not in the value group Z")
        n = v.numerator
        one = self.coefficients.one()
        zero = self.coefficients.zero()
        if n >= 0:
            return RatFunc(self.coefficients, [zero] * n + [one])
        return RatFunc(self.coefficients, [one], [zero] * (-n) + [one])

    def value_generators(self):
        return [Fraction(1)]

    def zero(self):
        return RatFunc(self.coefficients, [])

    def one(self):
        return RatFunc(self.coefficients, [self.coefficients.one()])

    def element(self, data):
        if isinstance(data, RatFunc):
            return data
        if isinstance(data, dict):
            return RatFunc(self.coefficients, data.get("num", []), data.get("den", None))
        return RatFunc(self.coefficients, [data])

    def sample(self, rng):
        deg_n = rng.randrange(0, 3)
        num = [self.coefficients.sample(rng) for _ in range(deg_n + 1)]
        den = [self.coefficients.sample(rng) for _ in range(rng.randrange(0, 2) + 1)]
        f = RatFunc(self.coefficients, num, den if any(not c.is_zero() for c in den) else None)
        return f

    def to_json(self):
        return {"kind": "t-adic", "coefficients": self.coefficients.to_json()}

    def __repr__(self):
        return f"{self.coefficients!r}(t) (t-adic)"


class TriviallyValued(ValuedField):
    """A field k with the trivial valuation: v = 0 on all nonzero elements."""

    def __init__(self, field: Field):
        self.field = field
        self.residue_field = field

    def val(self, a: FieldElement) -> Fraction:
        if _is_zero(a):
            raise PreconditionError("the zero element has no value")
        return Fraction(0)

    def residue(self, a):
        return a

    def residue_quot(self, a, b):
        return a / b

    def element_of_value(self, v: Fraction):
        if Fraction(v) != 0:
            raise PreconditionError("the trivial value group contains only 0")
        return self.field.one()

    def value_generators(self):
        return []

    def zero(self):
        return self.field.zero()

    def one(self):
        return self.field.one()

    def element(self, data):
        return self.field.element(data)

    def sample(self, rng):
        return self.field.sample(rng)

    def to_json(self):
        return {"kind": "trivial", "coefficients": self.field.to_json()}

    def __repr__(self):
        return f"{self.field!r} (trivial valuation)"


class SeriesValuedField(ValuedField):
    """A truncated power series field k((G)) with the min-support valuation.

    `value_generators` describes the value group of the subfield being
    modelled (e.g. Z inside its p-divisible hull); elements are
    HahnSeries over the coefficient field.
    """

    def __init__(self, coefficients: Field, value_gens=(Fraction(1),)):
        self.coefficients = coefficients
        self.residue_field = coefficients
        self._gens = [Fraction(g) for g in value_gens]

    def val(self, a: HahnSeries) -> Fraction:
        v = a.value()
        if v is None:
            raise PreconditionError("series with empty support: value lies above the truncation bound")
        return v.coords[0]

    def residue(self, a: HahnSeries):
        if self.val(a) != 0:
            raise PreconditionError("residue is defined for elements of value zero")
        return a.coeff_at(GroupElement.zero(a.rank))

    def residue_quot(self, a: HahnSeries, b: HahnSeries):
        va, vb = a.value(), b.value()
        if va is None or vb is None or va != vb:
            raise PreconditionError("residue quotient needs equal finite values")
        return a.leading_coeff() / b.leading_coeff()

    def element_of_value(self, v: Fraction):
        return HahnSeries.monomial(self.coefficients, Fraction(v), self.coefficients.one())

    def value_generators(self):
        return list(self._gens)

    def value_subgroup(self) -> Subgroup:
        if not self._gens:
            return Subgroup(1, ())
        return Subgroup.generated_by(*[GroupElement.of(g) for g in self._gens])

    def zero(self):
        return HahnSeries.zero(self.coefficients)

    def one(self):
        return HahnSeries.constant(self.coefficients, self.coefficients.one())

    def element(self, data):
        if isinstance(data, HahnSeries):
            return data
        if isinstance(data, dict):
            return HahnSeries.from_json(data, field=self.coefficients)
        return HahnSeries.constant(self.coefficients, self.coefficients.element(data))

    def sample(self, rng):
        n = rng.randrange(0, 4)
        terms = []
        for _ in range(n):
            expo = Fraction(rng.randint(-6, 6), rng.choice([1, 2, 3, 4]))
            terms.append((GroupElement.of(expo), self.coefficients.sample(rng)))
        return HahnSeries.make(self.coefficients, terms)

    def to_json(self):
        return {
            "kind": "series",
            "coefficients": self.coefficients.to_json(),
            "value_group": [str(g) for g in self._gens],
        }

    def __repr__(self):
        return f"{self.coefficients!r}((t^G))"


# ---------------------------------------------------------------------------
# polynomials and rational functions over K

def taylor_shift(coeffs: list, center, zero) -> list:
    """Coefficients c_i with g(x) = sum c_i (x - a)^i, by repeated
    synthetic division of g by (x - a)."""
    cs = list(coeffs)
    while cs and _is_zero(cs[-1]):
        cs.pop()
    out = []
    while cs:
        acc = None
        folded = []
        for c in reversed(cs):
            acc = c if acc is None else c + acc * center
            folded.append(acc)
        out.append(folded[-1])
        cs = list(reversed(folded[:-1]))
    return out if out else [zero]


def expand_about(shifted: list, center, zero, one) -> list:
    """Inverse of taylor_shift: standard coefficients of
    sum c_i (x - a)^i, by brute-force expansion."""

    def padd(a, b):
        n = max(len(a), len(b))
        return [
            (a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero)
            for i in range(n)
        ]

    def pmul(a, b):
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return out

    result = [zero]
    xa = [zero - center, one]
    power = [one]
    for c in shifted:
        result = padd(result, [c * q for q in power])
        power = pmul(power, xa)
    return result


def substitution_value(valn: "CenteredValuation", num: list, den: list | None = None) -> GroupElement:
    """Substitution oracle: expand g(a + u*s) with u a fresh
    transcendental-marked unit and s a symbol of value gamma, in the
    bivariate polynomial ring K[u, s]; the value is the minimum of
    v(coefficient) + i*gamma over all monomials u^j s^i.

    This is exact: monomials in a fresh unit with transcendental residue
    and in powers of s are valuation-independent, so no cancellation can
    hide the minimum.  Values of quotients are differences.
    """

    def poly_value(coeffs: list) -> GroupElement:
        cs = [valn.base.element(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        if not cs:
            raise PreconditionError("the zero polynomial has no value")
        table: dict[tuple[int, int], object] = {}
        for c in reversed(cs):
            new: dict[tuple[int, int], object] = {}
            for (j, i), b in table.items():
                key = (j, i)
                prod = b * valn.center
                new[key] = new[key] + prod if key in new else prod
                key_u = (j + 1, i + 1)
                new[key_u] = new[key_u] + b if key_u in new else b
            key0 = (0, 0)
            new[key0] = new[key0] + c if key0 in new else c
            table = new
        best: GroupElement | None = None
        for (j, i), b in table.items():
            if _is_zero(b):
                continue
            v = valn.embed_base_value(valn.base.val(b)) + valn.gamma.scaled(i)
            if best is None or v < best:
                best = v
        if best is None:
            raise PreconditionError("the zero polynomial has no value")
        return best

    v = poly_value(num)
    if den is not None:
        v = v - poly_value(den)
    return v


@dataclass(frozen=True)
class RationalFunction:
    """A quotient of polynomials over K, as dense coefficient lists.

    No common-factor reduction is performed: values of quotients are
    representative-independent, so none is required.
    """

    num: tuple
    den: tuple

    @staticmethod
    def over(base: ValuedField, num, den=None) -> "RationalFunction":
        num = tuple(base.element(c) for c in num)
        den = tuple(base.element(c) for c in den) if den is not None else (base.one(),)
        if all(_is_zero(c) for c in den):
            raise PreconditionError("denominator is the zero polynomial")
        return RationalFunction(num, den)

    def is_zero(self) -> bool:
        return all(_is_zero(c) for c in self.num)


# ---------------------------------------------------------------------------
# centered valuations v on K(x) with v(x - a) = gamma

class CenteredValuation:
    """The extension of the base valuation to K(x) determined by a
    center a in K and a value gamma for x - a.

    gamma lives in Q^r under the lexicographic order; the base value
    group embeds into the coordinate `base_coord` (the first, by
    default).  gamma torsion over vK gives a residue-transcendental
    extension, non-torsion gives a value-transcendental one.
    """

    def __init__(self, base: ValuedField, center, gamma: GroupElement,
                 base_coord: int = 0):
        self.base = base
        self.center = base.element(center)
        self.gamma = gamma if isinstance(gamma, GroupElement) else GroupElement.from_json(gamma)
        if not 0 <= base_coord < self.gamma.rank:
            raise PreconditionError("base_coord must index a coordinate of gamma")
        self.base_coord = base_coord
        gens = [self.embed_base_value(g) for g in base.value_generators()]
        self.base_value_subgroup = Subgroup(self.gamma.rank, tuple(gens))

    @property
    def rank(self) -> int:
        return self.gamma.rank

    def embed_base_value(self, v: Fraction) -> GroupElement:
        coords = [Fraction(0)] * self.rank
        coords[self.base_coord] = Fraction(v)
        return GroupElement(tuple(coords))

    # -- evaluation ---------------------------------------------------------

    def of_poly(self, coeffs: list) -> GroupElement:
        """min over i of v(c_i) + i*gamma, c_i the Taylor coefficients of
        the polynomial at the center."""
        cs = [self.base.element(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        if not cs:
            raise PreconditionError("the zero polynomial has no value")
        shifted = taylor_shift(cs, self.center, self.base.zero())
        best: GroupElement | None = None
        for i, c in enumerate(shifted):
            if _is_zero(c):
                continue
            v = self.embed_base_value(self.base.val(c)) + self.gamma.scaled(i)
            if best is None or v < best:
                best = v
        return best

    def of_fraction(self, f: RationalFunction) -> GroupElement:
        if f.is_zero():
            raise PreconditionError("the zero rational function has no value")
        return self.of_poly(list(f.num)) - self.of_poly(list(f.den))

    def __call__(self, f) -> GroupElement:
        if isinstance(f, RationalFunction):
            return self.of_fraction(f)
        return self.of_poly(list(f))

    # -- classification -------------------------------------------------------

    def torsion_order(self, bound: int | None = None) -> int | None:
        return self.base_value_subgroup.torsion_order(self.gamma, bound)

    def classify(self, bound: int | None = None) -> str:
        """value-transcendental if gamma is non-torsion over vK,
        residue-transcendental if torsion."""
        e = self.torsion_order(bound)
        return VALUE_TRANSCENDENTAL if e is None else RESIDUE_TRANSCENDENTAL

    def trichotomy_flags(self, bound: int | None = None) -> tuple[bool, bool, bool]:
        """(value-transcendental, residue-transcendental,
        valuation-algebraic) booleans; exactly one holds."""
        e = self.torsion_order(bound)
        return (e is None, e is not None, False)

    # -- residues --------------------------------------------------------------

    def residue_of(self, f: RationalFunction):
        """Residue of a rational function of value zero.

        For gamma of torsion order e over vK and d in K of value
        -e*gamma, the residue lies in the rational function field
        Kv(ybar), ybar the residue of d*(x-a)^e; constants are returned
        as plain residue field elements.
        """
        e = self.torsion_order()
        if e is None:
            raise PreconditionError(
                "gamma is non-torsion over the base value group: residues of "
                "value-zero elements already lie in the base residue field, and "
                "the generator construction does not apply"
            )
        total = self.of_fraction(f)
        if not total.is_zero():
            raise PreconditionError(f"residue needs value 0, got {total!r}")
        e_gamma = self.gamma.scaled(e)
        d_elt = self.base.element_of_value(-e_gamma.coords[self.base_coord])
        func_field = FunctionField(self.base.residue_field)

        num_cs = [self.base.element(c) for c in f.num]
        den_cs = [self.base.element(c) for c in f.den]
        sh_num = taylor_shift(num_cs, self.center, self.base.zero())
        sh_den = taylor_shift(den_cs, self.center, self.base.zero())

        def min_value(shifted) -> GroupElement:
            best = None
            for i, c in enumerate(shifted):
                if _is_zero(c):
                    continue
                v = self.embed_base_value(self.base.val(c)) + self.gamma.scaled(i)
                if best is None or v < best:
                    best = v
            return best

        v_num = min_value(sh_num)
        j0 = None
        for j, c in enumerate(sh_den):
            if _is_zero(c):
                continue
            if self.embed_base_value(self.base.val(c)) + self.gamma.scaled(j) == v_num:
                j0 = j
                break
        if j0 is None:
            raise AssertionError("internal error: denominator does not attain the minimum")
        b0 = sh_den[j0]

        def laurent_residues(shifted, vmin) -> dict[int, FieldElement]:
            out: dict[int, FieldElement] = {}
            for i, c in enumerate(shifted):
                if _is_zero(c):
                    continue
                if self.embed_base_value(self.base.val(c)) + self.gamma.scaled(i) != vmin:
                    continue
                k = i - j0
                if k % e != 0:
                    raise AssertionError("internal error: minimal term outside the e-grading")
                m = k // e
                unit_num = c * (d_elt ** (-m))
                kappa = self.base.residue_quot(unit_num, b0)
                out[m] = out[m] + kappa if m in out else kappa
            return out

        lau_num = laurent_residues(sh_num, v_num)
        lau_den = laurent_residues(sh_den, v_num)
        res = func_field.from_laurent(lau_num) / func_field.from_laurent(lau_den)
        if res.is_constant():
            return res.constant_value()
        return res


# ---------------------------------------------------------------------------
# pseudo-Cauchy-sequence descriptors

class PseudoCauchyValuation:
    """Descriptor of a valuation given by a pseudo Cauchy sequence.

    The valuation is not evaluated directly: values v(g(a_nu)) are
    computed for all sequence members, and reports state stabilization
    or non-stabilization at the available depth.
    """

    def __init__(self, base: ValuedField, elems: list):
        if len(elems) < 3:
            raise PreconditionError("a pseudo Cauchy descriptor needs at least three elements")
        self.base = base
        self.elems = [base.element(a) for a in elems]
        diffs = []
        for prev, nxt in zip(self.elems, self.elems[1:]):
            d = nxt - prev
            if _is_zero(d):
                raise PreconditionError("consecutive elements must differ")
            diffs.append(base.val(d))
        for d1, d2 in zip(diffs, diffs[1:]):
            if not d2 > d1:
                raise PreconditionError(
                    "not a pseudo Cauchy sequence: consecutive difference values must strictly increase"
                )

    def classify(self) -> str:
        return VALUATION_ALGEBRAIC

    def trichotomy_flags(self) -> tuple[bool, bool, bool]:
        return (False, False, True)

    def values_along(self, coeffs: list) -> dict:
        """v(g(a_nu)) for every sequence member; reports whether the
        values stabilized within the available depth."""
        values = []
        for a in self.elems:
            acc = None
            for c in reversed([self.base.element(c) for c in coeffs]):
                acc = c if acc is None else c + acc * a
            if acc is None or _is_zero(acc):
                values.append(None)  # zero within knowledge: unbounded value
            else:
                values.append(self.base.val(acc))
        stable_from = None
        for i in range(len(values) - 1):
            tail = values[i:]
            if tail[0] is not None and all(t == tail[0] for t in tail):
                stable_from = i
                break
        return {
            "values": values,
            "depth": len(self.elems),
            "stabilized_at_depth": stable_from is not None,
            "stable_from": stable_from,
        }


def classify_summary(value_group_torsion: bool, residue_algebraic: bool) -> str:
    """Trichotomy from quotient data: exactly one of the three labels.

    (torsion, algebraic) is valuation-algebraic; (non-torsion, algebraic)
    is value-transcendental; (torsion, transcendental) is
    residue-transcendental.  Both-transcendental is impossible for K(x)
    by the rank inequality.
    """
    if value_group_torsion and residue_algebraic:
        return VALUATION_ALGEBRAIC
    if not value_group_torsion and residue_algebraic:
        return VALUE_TRANSCENDENTAL
    if value_group_torsion and not residue_algebraic:
        return RESIDUE_TRANSCENDENTAL
    raise PreconditionError(
        "impossible for K(x): the value group quotient and the residue extension "
        "cannot both be transcendental (rank inequality)"
    )
