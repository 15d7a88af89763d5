"""Exact coefficient and residue field arithmetic.

Two families of fields are supported: the rationals, and finite fields
F_{p^n} represented as F_p[X] modulo a stored irreducible polynomial
(verified irreducible at construction by brute-force factor search).
Elements are canonical: reduced fractions over Q, coefficient tuples of
degree < deg(modulus) over F_{p^n}.

Residue fields of residue-transcendental valuations are rational
function fields in one tagged transcendental generator over such a
field; see FunctionField.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError

__all__ = [
    "Field",
    "Rationals",
    "RATIONALS",
    "FiniteField",
    "FieldElement",
    "min_poly",
    "build_extension",
    "FunctionField",
    "FunctionFieldElement",
]


# ---------------------------------------------------------------------------
# polynomials over F_p, coefficient lists low-to-high

def _pstrip(cs: list[int]) -> tuple[int, ...]:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _pstrip([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                    for i in range(n)])


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _pstrip(out)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    binv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = (a[k + len(b) - 1] * binv) % p
        if c:
            q[k] = c
            for j, bj in enumerate(b):
                a[k + j] = (a[k + j] - c * bj) % p
    return _pstrip(q), _pstrip(a[: len(b) - 1])


def _pxgcd(a, b, p):
    """Extended gcd over F_p[X]: returns (g, s, t) with s*a + t*b = g."""
    r0, r1 = _pstrip(list(a)), _pstrip(list(b))
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        q, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _padd(s0, _pmul(tuple((-c) % p for c in q), s1, p), p)
        t0, t1 = t1, _padd(t0, _pmul(tuple((-c) % p for c in q), t1, p), p)
    return r0, s0, t0


def _pmonic(a, p):
    if not a:
        return a
    inv = pow(a[-1], -1, p)
    return tuple((c * inv) % p for c in a)


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Brute-force irreducibility over F_p: trial division by every monic
    polynomial of degree up to deg(poly)/2."""
    poly = _pstrip(list(poly))
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            trial = tuple(tail) + (1,)
            _, rem = _pdivmod(poly, trial, p)
            if not rem:
                return False
    return True


# ---------------------------------------------------------------------------
# field descriptors

class Field:
    """Common interface of coefficient/residue fields."""

    characteristic: int

    def element(self, value) -> "FieldElement":
        raise NotImplementedError

    def zero(self) -> "FieldElement":
        raise NotImplementedError

    def one(self) -> "FieldElement":
        raise NotImplementedError

    def to_json(self) -> dict:
        raise NotImplementedError

    @staticmethod
    def from_json(data: dict) -> "Field":
        char = int(data.get("char", 0))
        if char == 0:
            return RATIONALS
        modulus = tuple(int(c) for c in data.get("modulus", []))
        return FiniteField(char, modulus)


class Rationals(Field):
    """The field Q with exact Fraction arithmetic."""

    characteristic = 0

    def element(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise PreconditionError("descriptor mismatch: expected a rational")
            return value
        return FieldElement(self, Fraction(value))

    def zero(self) -> "FieldElement":
        return FieldElement(self, Fraction(0))

    def one(self) -> "FieldElement":
        return FieldElement(self, Fraction(1))

    def sample(self, rng) -> "FieldElement":
        return FieldElement(self, Fraction(rng.randint(-9, 9), rng.randint(1, 9)))

    def to_json(self) -> dict:
        return {"char": 0, "modulus": []}

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash(("Q",))

    def __repr__(self):
        return "Q"


RATIONALS = Rationals()


class FiniteField(Field):
    """F_{p^n} as F_p[X] mod an irreducible monic modulus.

    The prime field F_p itself has an empty modulus and degree 1; its
    elements are length-1 coefficient tuples.
    """

    def __init__(self, p: int, modulus: tuple[int, ...] = ()):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise PreconditionError(f"characteristic {p} is not prime")
        modulus = _pstrip([c % p for c in modulus])
        if modulus:
            if modulus[-1] != 1:
                raise PreconditionError("modulus must be monic")
            if len(modulus) - 1 < 2:
                raise PreconditionError("modulus must have degree >= 2 (omit it for the prime field)")
            if not is_irreducible(modulus, p):
                raise PreconditionError(f"modulus {list(modulus)} is reducible over F_{p}")
        self.characteristic = p
        self.modulus = modulus

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1 if self.modulus else 1

    @property
    def order(self) -> int:
        return self.characteristic ** self.degree

    def element(self, value) -> "FieldElement":
        p = self.characteristic
        if isinstance(value, FieldElement):
            if value.field != self:
                raise PreconditionError("descriptor mismatch between field elements")
            return value
        if isinstance(value, int):
            coeffs = (value % p,) + (0,) * (self.degree - 1)
            return FieldElement(self, coeffs)
        coeffs = [int(c) % p for c in value]
        if len(coeffs) > self.degree:
            coeffs = list(_pdivmod(_pstrip(coeffs), self.modulus, p)[1])
        coeffs += [0] * (self.degree - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.degree)

    def one(self) -> "FieldElement":
        return self.element(1)

    def gen(self) -> "FieldElement":
        """The residue of X, a generator of the extension over F_p."""
        if not self.modulus:
            raise PreconditionError("the prime field has no extension generator")
        return FieldElement(self, (0, 1) + (0,) * (self.degree - 2))

    def elements(self):
        for tup in itertools.product(range(self.characteristic), repeat=self.degree):
            yield FieldElement(self, tup)

    def sample(self, rng) -> "FieldElement":
        return FieldElement(
            self, tuple(rng.randrange(self.characteristic) for _ in range(self.degree))
        )

    def to_json(self) -> dict:
        return {"char": self.characteristic, "modulus": list(self.modulus)}

    def __eq__(self, other):
        return (
            isinstance(other, FiniteField)
            and other.characteristic == self.characteristic
            and other.modulus == self.modulus
        )

    def __hash__(self):
        return hash((self.characteristic, self.modulus))

    def __repr__(self):
        return f"F_{self.order}"


@dataclass(frozen=True)
class FieldElement:
    """An element of a Field, in canonical form."""

    field: Field
    value: object  # Fraction over Q, coefficient tuple over F_{p^n}

    def is_zero(self) -> bool:
        if isinstance(self.value, Fraction):
            return self.value == 0
        return not any(self.value)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise PreconditionError("descriptor mismatch between field elements")
            return other
        return self.field.element(other)

    def __add__(self, other):
        other = self._coerce(other)
        if isinstance(self.value, Fraction):
            return FieldElement(self.field, self.value + other.value)
        p = self.field.characteristic
        return FieldElement(
            self.field, tuple((a + b) % p for a, b in zip(self.value, other.value))
        )

    __radd__ = __add__

    def __neg__(self):
        if isinstance(self.value, Fraction):
            return FieldElement(self.field, -self.value)
        p = self.field.characteristic
        return FieldElement(self.field, tuple((-a) % p for a in self.value))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        if isinstance(self.value, Fraction):
            return FieldElement(self.field, self.value * other.value)
        f: FiniteField = self.field
        prod = _pmul(_pstrip(list(self.value)), _pstrip(list(other.value)), f.characteristic)
        if f.modulus:
            prod = _pdivmod(prod, f.modulus, f.characteristic)[1]
        return f.element(list(prod))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise PreconditionError("division by zero")
        if isinstance(self.value, Fraction):
            return FieldElement(self.field, 1 / self.value)
        f: FiniteField = self.field
        p = f.characteristic
        if not f.modulus:
            return f.element(pow(self.value[0], -1, p))
        g, s, _ = _pxgcd(_pstrip(list(self.value)), f.modulus, p)
        # g is a nonzero constant since the modulus is irreducible
        ginv = pow(g[0], -1, p)
        return f.element([c * ginv % p for c in s])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def frobenius_inverse(self) -> "FieldElement":
        """The unique p-th root: inverse of x -> x^p on F_{p^n}.

        Uses x^(p^(n-1)), a two-sided inverse of Frobenius since
        x^(p^n) = x for every element.
        """
        if self.field.characteristic == 0:
            raise PreconditionError("p-th roots of coefficients need positive characteristic")
        f: FiniteField = self.field
        return self ** (f.characteristic ** (f.degree - 1))

    def to_json(self):
        if isinstance(self.value, Fraction):
            return str(self.value)
        if self.field.degree == 1:
            return self.value[0]
        return list(self.value)

    def __repr__(self):
        if isinstance(self.value, Fraction):
            return str(self.value)
        if self.field.degree == 1:
            return str(self.value[0])
        parts = []
        for i, c in enumerate(self.value):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else str(c) + "*"
                parts.append(f"{head}u" + (f"^{i}" if i > 1 else ""))
        return " + ".join(parts) if parts else "0"


def min_poly(a: FieldElement, base: Field | None = None) -> tuple[int, ...]:
    """Monic minimal polynomial of a finite-field element over F_p.

    Computed as the product of (X - c) over the Frobenius orbit of `a`;
    the coefficients are verified to land in the prime field, the result
    to be irreducible, and the degree to divide the ambient degree.
    """
    field = a.field
    if field.characteristic == 0:
        raise PreconditionError("min_poly is defined over finite fields")
    if base is not None and base.characteristic != field.characteristic:
        raise PreconditionError("base field has the wrong characteristic")
    p = field.characteristic
    orbit = [a]
    nxt = a ** p
    while nxt != a:
        orbit.append(nxt)
        nxt = nxt ** p
    # expand prod (X - c) with coefficients in the ambient field
    coeffs = [field.one()]
    for c in orbit:
        new = [field.zero()] * (len(coeffs) + 1)
        for i, k in enumerate(coeffs):
            new[i + 1] = new[i + 1] + k
            new[i] = new[i] - k * c
        coeffs = new
    out = []
    for k in coeffs:
        vec = k.value
        if any(vec[1:]):
            raise AssertionError("internal error: minimal polynomial not over the prime field")
        out.append(vec[0])
    poly = tuple(out)
    if len(poly) - 1 and not is_irreducible(poly, p):
        raise AssertionError("internal error: minimal polynomial reducible")
    if field.degree % (len(poly) - 1) != 0:
        raise AssertionError("internal error: orbit size does not divide the field degree")
    return poly


def min_poly_degree(a: FieldElement) -> int:
    """Degree of `a` over the prime field (Frobenius orbit size)."""
    if a.field.characteristic == 0:
        return 1
    p = a.field.characteristic
    d = 1
    nxt = a ** p
    while nxt != a:
        d += 1
        nxt = nxt ** p
    return d


def build_extension(base: Field, poly) -> tuple[FiniteField, "object"]:
    """Extension base[X]/(poly) of a prime field, with the embedding map.

    `poly` is a monic irreducible given by its coefficient list over the
    prime field F_p.  Returns the new field and the map sending base
    elements to their images (constants).
    """
    if not isinstance(base, FiniteField) or base.modulus:
        raise PreconditionError("extensions are built over a prime field F_p")
    p = base.characteristic
    poly = tuple(int(c) % p for c in poly)
    ext = FiniteField(p, poly)  # irreducibility verified by the constructor

    def embed(c: FieldElement) -> FieldElement:
        if c.field != base:
            raise PreconditionError("descriptor mismatch: element not in the base field")
        return ext.element(c.value[0])

    return ext, embed


def find_root(poly: tuple[int, ...], field: FiniteField) -> FieldElement | None:
    """A root in `field` of a polynomial over F_p, by exhaustive scan."""
    coeffs = [field.element(int(c)) for c in poly]
    for x in field.elements():
        acc = field.zero()
        for c in reversed(coeffs):
            acc = acc * x + c
        if acc.is_zero():
            return x
    return None


# ---------------------------------------------------------------------------
# rational functions in one tagged transcendental generator

def _fstrip(cs: list[FieldElement]) -> tuple[FieldElement, ...]:
    n = len(cs)
    while n and cs[n - 1].is_zero():
        n -= 1
    return tuple(cs[:n])


def _fadd(a, b, zero):
    n = max(len(a), len(b))
    return _fstrip([(a[i] if i < len(a) else zero) + (b[i] if i < len(b) else zero)
                    for i in range(n)])


def _fmul(a, b, zero):
    if not a or not b:
        return ()
    out = [zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = out[i + j] + ai * bj
    return _fstrip(out)


def _fdivmod(a, b, zero):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    binv = b[-1].inverse()
    q = [zero] * max(0, len(a) - len(b) + 1)
    for k in range(len(a) - len(b), -1, -1):
        c = a[k + len(b) - 1] * binv
        if not c.is_zero():
            q[k] = c
            for j, bj in enumerate(b):
                a[k + j] = a[k + j] - c * bj
    return _fstrip(q), _fstrip(a[: len(b) - 1])


def _fgcd(a, b, zero):
    a, b = _fstrip(list(a)), _fstrip(list(b))
    while b:
        a, b = b, _fdivmod(a, b, zero)[1]
    if a:
        inv = a[-1].inverse()
        a = tuple(c * inv for c in a)
    return a


class FunctionField:
    """Rational functions over a coefficient field in one tagged generator.

    This is the symbolic residue field Kv(y) of residue-transcendental
    valuations: arithmetic is exact on num/den pairs, kept in canonical
    form (gcd-reduced, monic denominator).
    """

    def __init__(self, base: Field, gen_name: str = "y"):
        self.base = base
        self.gen_name = gen_name

    def element(self, num, den=None) -> "FunctionFieldElement":
        zero = self.base.zero()
        num = _fstrip([self.base.element(c) if not isinstance(c, FieldElement) else c
                       for c in num])
        den = _fstrip([self.base.element(c) if not isinstance(c, FieldElement) else c
                       for c in (den if den is not None else [self.base.one()])])
        if not den:
            raise PreconditionError("zero denominator")
        g = _fgcd(num, den, zero)
        if len(g) > 1 or (g and not (g[0] == self.base.one())):
            num = _fdivmod(num, g, zero)[0]
            den = _fdivmod(den, g, zero)[0]
        if den and den[-1] != self.base.one():
            inv = den[-1].inverse()
            num = tuple(c * inv for c in num)
            den = tuple(c * inv for c in den)
        return FunctionFieldElement(self, num, den)

    def from_laurent(self, coeffs: dict[int, FieldElement]) -> "FunctionFieldElement":
        """Element from a Laurent-monomial dict {power: coefficient}."""
        if not coeffs:
            return self.element([])
        shift = min(0, min(coeffs))
        num = [self.base.zero()] * (max(coeffs) - shift + 1)
        for k, c in coeffs.items():
            num[k - shift] = num[k - shift] + c
        den = [self.base.zero()] * (-shift) + [self.base.one()]
        return self.element(num, den)

    def gen(self) -> "FunctionFieldElement":
        return self.element([self.base.zero(), self.base.one()])

    def __eq__(self, other):
        return (
            isinstance(other, FunctionField)
            and other.base == self.base
            and other.gen_name == self.gen_name
        )

    def __hash__(self):
        return hash((self.base, self.gen_name))

    def __repr__(self):
        return f"{self.base!r}({self.gen_name})"


@dataclass(frozen=True)
class FunctionFieldElement:
    field: FunctionField
    num: tuple[FieldElement, ...]
    den: tuple[FieldElement, ...]

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def constant_value(self) -> FieldElement:
        if not self.is_constant():
            raise PreconditionError("not a constant: residue needs the transcendental generator")
        if not self.num:
            return self.field.base.zero()
        return self.num[0] / self.den[0]

    def _coerce(self, other) -> "FunctionFieldElement":
        if isinstance(other, FunctionFieldElement):
            if other.field != self.field:
                raise PreconditionError("descriptor mismatch between function fields")
            return other
        return self.field.element([other])

    def __add__(self, other):
        other = self._coerce(other)
        zero = self.field.base.zero()
        num = _fadd(_fmul(self.num, other.den, zero), _fmul(other.num, self.den, zero), zero)
        return self.field.element(num, _fmul(self.den, other.den, zero))

    def __neg__(self):
        return FunctionFieldElement(self.field, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        other = self._coerce(other)
        zero = self.field.base.zero()
        return self.field.element(
            _fmul(self.num, other.num, zero), _fmul(self.den, other.den, zero)
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise PreconditionError("division by zero")
        zero = self.field.base.zero()
        return self.field.element(
            _fmul(self.num, other.den, zero), _fmul(self.den, other.num, zero)
        )

    def __repr__(self):
        def side(cs):
            parts = []
            for i, c in enumerate(cs):
                if c.is_zero():
                    continue
                name = self.field.gen_name
                if i == 0:
                    parts.append(repr(c))
                else:
                    head = "" if c == self.field.base.one() else f"({c!r})*"
                    parts.append(f"{head}{name}" + (f"^{i}" if i > 1 else ""))
            return " + ".join(parts) if parts else "0"

        if len(self.den) == 1 and self.den[0] == self.field.base.one():
            return side(self.num)
        return f"({side(self.num)}) / ({side(self.den)})"
