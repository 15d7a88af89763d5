"""Exact arithmetic in lexicographically ordered rational vector groups.

Value groups are modelled as finitely generated subgroups of Q^r under
the lexicographic order.  Group elements are fixed-length vectors of
exact rationals; subgroups are given by finite generator lists.
Membership, torsion order and subgroup index are decided by integer
linear algebra on a Hermite-style row reduction of the scaled generator
matrix, so every positive answer carries an integer witness vector and
every negative answer is backed by a rank argument over Q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import PreconditionError, UndecidedError

__all__ = [
    "GroupElement",
    "Subgroup",
    "compare",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


@dataclass(frozen=True)
class GroupElement:
    """A vector in Q^r, ordered lexicographically.

    Addition is componentwise; comparison is the lexicographic order on
    the coordinate tuple, which is a total order compatible with
    addition.  Rank-1 elements are the common case.
    """

    coords: tuple[Fraction, ...]

    @staticmethod
    def of(*coords) -> "GroupElement":
        return GroupElement(tuple(_frac(c) for c in coords))

    @staticmethod
    def zero(rank: int = 1) -> "GroupElement":
        return GroupElement((Fraction(0),) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def _check_rank(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected GroupElement, got {type(other).__name__}")
        if self.rank != other.rank:
            raise PreconditionError(
                f"rank mismatch: {self.rank} vs {other.rank}"
            )

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check_rank(other)
        return GroupElement(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        self._check_rank(other)
        return GroupElement(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(tuple(-a for a in self.coords))

    def scaled(self, q) -> "GroupElement":
        """Scalar multiple by an exact rational (or integer)."""
        q = _frac(q)
        return GroupElement(tuple(q * a for a in self.coords))

    def __mul__(self, n: int) -> "GroupElement":
        if not isinstance(n, int):
            return NotImplemented
        return self.scaled(n)

    __rmul__ = __mul__

    def __lt__(self, other):
        self._check_rank(other)
        return self.coords < other.coords

    def __le__(self, other):
        self._check_rank(other)
        return self.coords <= other.coords

    def __gt__(self, other):
        self._check_rank(other)
        return self.coords > other.coords

    def __ge__(self, other):
        self._check_rank(other)
        return self.coords >= other.coords

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @staticmethod
    def from_json(data) -> "GroupElement":
        if isinstance(data, (str, int)):
            return GroupElement.of(data)
        return GroupElement.of(*data)

    def __repr__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def compare(a: GroupElement, b: GroupElement) -> int:
    """Lexicographic comparison: -1 if a < b, 0 if equal, 1 if a > b."""
    a._check_rank(b)
    if a.coords < b.coords:
        return -1
    if a.coords > b.coords:
        return 1
    return 0


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) = x*a + y*b, g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _hermite_rows(mat: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Row Hermite form with transform.

    Returns (rows, exprs, pivots): `rows` are the nonzero rows of the
    Hermite form (pivot columns strictly increasing, pivots positive,
    entries above each pivot reduced into [0, pivot)); exprs[i] gives the
    integer combination of the input rows producing rows[i]; pivots[i] is
    the pivot column of rows[i].  The nonzero rows form a Z-basis of the
    row lattice of `mat`.
    """
    m = len(mat)
    r = len(mat[0]) if m else 0
    rows = [list(row) for row in mat]
    exprs = [[int(i == j) for j in range(m)] for i in range(m)]
    top = 0
    pivots: list[int] = []
    for col in range(r):
        if top == m:
            break
        for i in range(top + 1, m):
            if rows[i][col] == 0:
                continue
            a, b = rows[top][col], rows[i][col]
            if a == 0:
                rows[top], rows[i] = rows[i], rows[top]
                exprs[top], exprs[i] = exprs[i], exprs[top]
                continue
            g, x, y = _xgcd(a, b)
            u, v = -(b // g), a // g
            for vec in (rows, exprs):
                new_top = [x * p + y * q for p, q in zip(vec[top], vec[i])]
                new_i = [u * p + v * q for p, q in zip(vec[top], vec[i])]
                vec[top], vec[i] = new_top, new_i
        if rows[top][col] != 0:
            if rows[top][col] < 0:
                rows[top] = [-v for v in rows[top]]
                exprs[top] = [-v for v in exprs[top]]
            # reduce entries above the pivot for a canonical form
            piv = rows[top][col]
            for i in range(top):
                q = rows[i][col] // piv
                if q:
                    rows[i] = [p - q * s for p, s in zip(rows[i], rows[top])]
                    exprs[i] = [p - q * s for p, s in zip(exprs[i], exprs[top])]
            pivots.append(col)
            top += 1
    return rows[:top], exprs[:top], pivots


@dataclass(frozen=True)
class Subgroup:
    """Finitely generated subgroup of Q^r, with decidable membership."""

    ambient_rank: int
    generators: tuple[GroupElement, ...]

    @staticmethod
    def generated_by(*gens, ambient_rank: int | None = None) -> "Subgroup":
        elems = tuple(
            g if isinstance(g, GroupElement) else GroupElement.of(*g) if isinstance(g, (tuple, list)) else GroupElement.of(g)
            for g in gens
        )
        if ambient_rank is None:
            if not elems:
                raise ValueError("ambient_rank required for the trivial subgroup")
            ambient_rank = elems[0].rank
        for g in elems:
            if g.rank != ambient_rank:
                raise PreconditionError(
                    f"rank mismatch: generator {g!r} has rank {g.rank}, ambient is {ambient_rank}"
                )
        return Subgroup(ambient_rank, elems)

    @cached_property
    def _lattice(self):
        """(denominator D, Hermite basis rows over Z, exprs, pivot cols).

        The subgroup equals { (z . A) / D : z in Z^m } for the integer
        matrix A of scaled generators; the Hermite rows are a Z-basis.
        """
        if not self.generators:
            return 1, [], [], []
        dens = [c.denominator for g in self.generators for c in g.coords]
        d = math.lcm(*dens) if dens else 1
        mat = [[int(c * d) for c in g.coords] for g in self.generators]
        rows, exprs, pivots = _hermite_rows(mat)
        return d, rows, exprs, pivots

    def _scaled_target(self, g: GroupElement) -> list[int] | None:
        """g scaled by the lattice denominator, or None if not integral."""
        d = self._lattice[0]
        scaled = [c * d for c in g.coords]
        if any(s.denominator != 1 for s in scaled):
            return None
        return [int(s) for s in scaled]

    def _check_ambient(self, g: GroupElement) -> None:
        if g.rank != self.ambient_rank:
            raise PreconditionError(
                f"rank mismatch: element rank {g.rank}, ambient rank {self.ambient_rank}"
            )

    def witness(self, g: GroupElement) -> list[int] | None:
        """Integer coefficients w with sum(w_i * gen_i) == g, or None.

        Every returned witness is re-verified against the generators
        before it is handed out.
        """
        self._check_ambient(g)
        d, rows, exprs, pivots = self._lattice
        if not rows:
            return [] if g.is_zero() else None
        target = self._scaled_target(g)
        if target is None:
            return None
        w = list(target)
        coeffs = [0] * len(rows)
        for i, col in enumerate(pivots):
            piv = rows[i][col]
            if w[col] % piv != 0:
                return None
            q = w[col] // piv
            coeffs[i] = q
            if q:
                w = [a - q * b for a, b in zip(w, rows[i])]
        if any(w):
            return None
        m = len(self.generators)
        z = [sum(coeffs[i] * exprs[i][j] for i in range(len(rows))) for j in range(m)]
        # exact re-verification of the witness
        acc = GroupElement.zero(self.ambient_rank)
        for zi, gen in zip(z, self.generators):
            acc = acc + gen.scaled(zi)
        if acc != g:
            raise AssertionError("internal error: witness failed re-verification")
        return z

    def __contains__(self, g: GroupElement) -> bool:
        return self.witness(g) is not None

    def _rational_coords(self, g: GroupElement) -> list[Fraction] | None:
        """Coordinates of g over the Hermite basis (over Q), or None if
        g lies outside the rational span of the generators."""
        d, rows, _, pivots = self._lattice
        if not rows:
            return [] if g.is_zero() else None
        w = [c * d for c in g.coords]
        coords: list[Fraction] = []
        for i, col in enumerate(pivots):
            q = Fraction(w[col], rows[i][col])
            coords.append(q)
            if q:
                w = [a - q * b for a, b in zip(w, rows[i])]
        if any(w):
            return None
        return coords

    def in_rational_span(self, g: GroupElement) -> bool:
        self._check_ambient(g)
        return self._rational_coords(g) is not None

    def torsion_order(self, g: GroupElement, bound: int | None = None) -> int | None:
        """Least e >= 1 with e*g in the subgroup, or None if non-torsion.

        None is only returned with a rank proof (g outside the rational
        span of the generators).  If `bound` is given and the exact
        order exceeds it, UndecidedError is raised: that outcome is
        distinct from a proven non-torsion answer.
        """
        self._check_ambient(g)
        coords = self._rational_coords(g)
        if coords is None:
            return None
        e = math.lcm(*(q.denominator for q in coords)) if coords else 1
        if bound is not None and e > bound:
            raise UndecidedError(
                f"torsion order {e} exceeds the search bound {bound}"
            )
        return e

    def index_over(self, sub: "Subgroup") -> int | None:
        """Index (self : sub) for sub a subgroup of self.

        Returns None when the rational spans differ in dimension (the
        index is infinite).  Raises PreconditionError if some generator
        of `sub` is not a member of self.
        """
        if sub.ambient_rank != self.ambient_rank:
            raise PreconditionError("rank mismatch between subgroups")
        d, rows, _, pivots = self._lattice
        k = len(rows)
        coord_rows: list[list[int]] = []
        for t in sub.generators:
            if self.witness(t) is None:
                raise PreconditionError(
                    f"not a subgroup: generator {t!r} lies outside the bigger group"
                )
            target = self._scaled_target(t)
            w = list(target)
            coords = [0] * k
            for i, col in enumerate(pivots):
                q = w[col] // rows[i][col]
                coords[i] = q
                if q:
                    w = [a - q * b for a, b in zip(w, rows[i])]
            coord_rows.append(coords)
        if k == 0:
            return 1
        sub_rows, _, sub_pivots = _hermite_rows(coord_rows) if coord_rows else ([], [], [])
        if len(sub_rows) < k:
            return None
        det = 1
        for i, col in enumerate(sub_pivots):
            det *= sub_rows[i][col]
        return abs(det)

    def extended(self, *new_gens: GroupElement) -> "Subgroup":
        """Subgroup generated by this one together with new elements."""
        for g in new_gens:
            self._check_ambient(g)
        return Subgroup(self.ambient_rank, self.generators + tuple(new_gens))

    def basis(self) -> list[GroupElement]:
        """Canonical Z-basis (Hermite rows over the common denominator)."""
        d, rows, _, _ = self._lattice
        return [GroupElement(tuple(Fraction(v, d) for v in row)) for row in rows]

    def with_fresh_coordinate(self, placement: str = "small") -> tuple["Subgroup", "object"]:
        """Extend the ambient group by one lexicographic coordinate.

        placement="small" appends the new coordinate (the fresh generator
        is infinitesimal against every old positive element);
        placement="large" prepends it (the fresh generator dominates).
        Returns the embedded subgroup and the embedding map for elements.
        """
        if placement not in ("small", "large"):
            raise ValueError("placement must be 'small' or 'large'")
        if placement == "small":
            def embed(g: GroupElement) -> GroupElement:
                return GroupElement(g.coords + (Fraction(0),))
        else:
            def embed(g: GroupElement) -> GroupElement:
                return GroupElement((Fraction(0),) + g.coords)
        new = Subgroup(self.ambient_rank + 1, tuple(embed(g) for g in self.generators))
        return new, embed

    def to_json(self) -> list[list[str]]:
        return [g.to_json() for g in self.generators]

    def __repr__(self) -> str:
        gens = ", ".join(repr(g) for g in self.generators)
        return f"Subgroup(rank {self.ambient_rank}: <{gens}>)"
