"""Builders and re-checkable certificates for the headline constructions.

Every certificate is a plain JSON-serializable structure whose numeric
claims carry their witnesses (exponent sets, subgroup indices, value
chains, lcm decompositions); validate_certificate re-checks a loaded
certificate from those witnesses alone, without re-running the original
construction.  Certificate kinds: defect-tower, degree-lower-bound,
classification, fundamental-inequality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, SchemaError
from .fields import Field, FiniteField
from .groups import GroupElement, Subgroup
from .homogeneous import (
    TowerState,
    krasner_artin_schreier,
    krasner_kummer,
    strongly_homogeneous_test,
)
from .series import HahnSeries, artin_schreier_root, kummer_root
from .valuations import (
    RESIDUE_TRANSCENDENTAL,
    VALUE_TRANSCENDENTAL,
    CenteredValuation,
    PseudoCauchyValuation,
    SeriesValuedField,
    ValuedField,
)

__all__ = [
    "Certificate",
    "fund_ineq_check",
    "build_defect_tower",
    "ExtensionStep",
    "ExtensionTower",
    "build_extension_step",
    "build_extension_tower",
    "build_ic_valuation",
    "build_degree_bound",
    "classification_certificate",
    "ValidationResult",
    "validate_certificate",
]

CERTIFICATE_VERSION = 1


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class Certificate:
    kind: str
    payload: dict
    version: int = CERTIFICATE_VERSION

    def to_dict(self) -> dict:
        return {"kind": self.kind, "schema_version": self.version, **self.payload}

    @staticmethod
    def from_dict(data: dict) -> "Certificate":
        if not isinstance(data, dict) or "kind" not in data:
            raise SchemaError("certificate must be an object with a 'kind' field")
        payload = {k: v for k, v in data.items() if k not in ("kind", "schema_version")}
        return Certificate(data["kind"], payload, data.get("schema_version", CERTIFICATE_VERSION))


# ---------------------------------------------------------------------------
# fundamental inequality

def fund_ineq_check(n: int, pairs: list[tuple[int, int]]) -> dict:
    """Check n >= sum of e_i * f_i over the extensions of the valuation.

    Returns the slack and whether equality holds (the defectless datum).
    """
    if n < 1 or any(e < 1 or f < 1 for e, f in pairs):
        raise PreconditionError("degrees, ramification indices and inertia degrees must be >= 1")
    total = sum(e * f for e, f in pairs)
    return {
        "n": n,
        "pairs": [[e, f] for e, f in pairs],
        "sum_ef": total,
        "ok": n >= total,
        "slack": n - total,
        "equality": n == total,
    }


# ---------------------------------------------------------------------------
# the characteristic-p defect tower

def build_defect_tower(p: int, schedule: list[int], depth: int,
                       eta_levels: int = 5, as_depth: int = 3,
                       multipliers: list[int] | None = None) -> Certificate:
    """Certificate for the defect tower over the x-adic series model in
    characteristic p.

    y is the truncation of sum x^(n_i * p^(-e_i)) over the exponent
    schedule (all multipliers n_i = -1 by default); for each level
    j <= depth the residual series
    L_j = y^(p^(e_j)) - sum_(i<=j) x^(n_i * p^(e_j-e_i)) is computed by
    series arithmetic and its value verified to be
    n_(j+1) * p^(e_j - e_(j+1)), whose coprime numerator witnesses
    1/p^(e_(j+1)-e_j) inside the value group generated with Z (at least
    1/p^j under the default growth rule e_(i+1) >= e_i + i).  The
    Artin-Schreier tower eta_i (roots of X^p - X - eta_(i-1) above
    eta_0 = 1/x) is built alongside with v(eta_i) = -1/p^i.
    """
    if not _is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    n = len(schedule)
    if n < 2:
        raise PreconditionError("the exponent schedule needs at least two entries")
    default_shape = multipliers is None
    mults = [-1] * n if multipliers is None else [int(m) for m in multipliers]
    if len(mults) != n:
        raise PreconditionError("multipliers must match the schedule length")
    exponents = [Fraction(mults[i], p ** schedule[i]) for i in range(n)]
    for i, m in enumerate(mults, start=1):
        if math.gcd(abs(m), p) != 1:
            raise PreconditionError(
                f"multiplier n_{i} = {m} must be prime to p = {p}"
            )
    if default_shape:
        for i in range(1, n):
            if schedule[i] < schedule[i - 1] + i:
                raise PreconditionError(
                    f"schedule violation at position {i + 1}: "
                    f"e_{i + 1} = {schedule[i]} < e_{i} + {i} = {schedule[i - 1] + i}"
                )
    else:
        for i in range(1, n):
            if not exponents[i - 1] < exponents[i]:
                raise PreconditionError(
                    f"schedule violation at position {i + 1}: the exponents "
                    f"n_i * p^(-e_i) must be strictly increasing"
                )
    if depth > n - 1:
        raise PreconditionError(
            f"truncation too shallow to witness level {depth}: the schedule "
            f"provides witnesses only up to level {n - 1}"
        )
    coeffs = FiniteField(p)
    # with the default growth rule the unknown tail starts no earlier than
    # -p^(-(e_n + n)); explicit multipliers certify the n scheduled terms
    # exactly (later terms of any admissible continuation only add higher
    # exponents and cannot disturb the level values)
    trunc = -Fraction(1, p ** (schedule[-1] + n)) if default_shape else None
    y = HahnSeries.make(coeffs, [(g, 1) for g in exponents], trunc=trunc)
    levels = []
    for j in range(1, depth + 1):
        e_j = schedule[j - 1]
        lhs = y.frobenius_power(e_j)
        for i in range(1, j + 1):
            lhs = lhs - HahnSeries.monomial(coeffs, exponents[i - 1] * p ** e_j, 1)
        expected_value = exponents[j] * p ** e_j
        got = lhs.value()
        if got is None or got.coords[0] != expected_value:
            raise AssertionError(
                f"internal error: level {j} residual value {got!r}, expected {expected_value}"
            )
        # independent exponent-arithmetic oracle: no series multiplication
        lhs_trunc = None if trunc is None else Fraction(p ** e_j) * trunc
        oracle = sorted(
            exponents[i - 1] * p ** e_j
            for i in range(j + 1, n + 1)
            if lhs_trunc is None or exponents[i - 1] * p ** e_j < lhs_trunc
        )
        support = [e.coords[0] for e in lhs.support()]
        if support != oracle:
            raise AssertionError(f"internal error: level {j} support mismatch with the oracle")
        denom_power = schedule[j] - e_j
        target = Fraction(1, p ** denom_power)
        member_group = Subgroup.generated_by(1, expected_value)
        witness = member_group.witness(GroupElement.of(target))
        if witness is None:
            raise AssertionError(
                f"internal error: level {j} fails to witness 1/p^{denom_power}"
            )
        if default_shape and denom_power < j:
            raise AssertionError(f"internal error: level {j} grants less than 1/p^{j}")
        levels.append(
            {
                "j": j,
                "frobenius_exponent": e_j,
                "witness_exponents": [str(v) for v in support],
                "value": str(expected_value),
                "grants_denominator_exponent": denom_power,
                "membership_target": str(target),
                "membership_witness": witness,
            }
        )
    eta = []
    eta_series = HahnSeries.monomial(coeffs, -1, 1)
    chain_values = [Fraction(-1)]
    for i in range(1, eta_levels + 1):
        nxt = artin_schreier_root(eta_series, as_depth)
        v_nxt = nxt.value().coords[0]
        if v_nxt != Fraction(-1, p ** i):
            raise AssertionError(f"internal error: v(eta_{i}) = {v_nxt}, expected -1/p^{i}")
        chain = (nxt ** p) - eta_series
        if chain.value() is None or chain.value().coords[0] != v_nxt:
            raise AssertionError(f"internal error: value chain broken at eta_{i}")
        eta.append({"i": i, "value": str(v_nxt), "chain_ok": True})
        eta_series = nxt
        chain_values.append(v_nxt)
    per_level = []
    for i in range(1, eta_levels + 1):
        deg = p ** i
        fi = fund_ineq_check(deg, [(1, 1)])
        per_level.append(
            {
                "i": i,
                "degree": deg,
                "ramification_index": 1,
                "inertia_degree": 1,
                "defect": deg,
                "fund_ineq_slack": fi["slack"],
            }
        )
    payload = {
        "p": p,
        "schedule": list(schedule),
        "multipliers": mults,
        "depth": depth,
        "series_truncation": None if trunc is None else str(trunc),
        "levels": levels,
        "eta_tower": eta,
        "defect_claims": per_level,
        "assumptions": [
            "ambient coefficient field algebraically closed (residue field of the "
            "composite equals it, so every inertia degree is 1)",
            "uniqueness of the valuation extension along the tower (linear "
            "disjointness from the henselization), certifying defect = degree",
        ],
    }
    return Certificate("defect-tower", payload)


# ---------------------------------------------------------------------------
# prescribed extension steps

@dataclass(frozen=True)
class ExtensionStep:
    """One prescribed step: kummer (value-group), residue (inertia), or
    artin-schreier, with its parameters."""

    kind: str
    alpha: Fraction | None = None          # kummer: new value
    modulus: tuple[int, ...] = ()          # residue: monic irreducible over F_p
    c_exponent: Fraction | None = None     # artin-schreier: exponent of c = t^(c_exponent)

    @staticmethod
    def from_json(data: dict) -> "ExtensionStep":
        kind = data.get("kind")
        if kind == "kummer":
            return ExtensionStep("kummer", alpha=Fraction(data["alpha"]))
        if kind == "residue":
            return ExtensionStep("residue", modulus=tuple(int(c) for c in data["modulus"]))
        if kind == "artin-schreier":
            return ExtensionStep("artin-schreier", c_exponent=Fraction(data["c"]))
        raise SchemaError(f"unknown extension step kind {kind!r}")


@dataclass
class ExtensionTower:
    """A tower of prescribed steps over a series-model base field."""

    residue_char: int
    coefficient_field: Field
    value_subgroup: Subgroup
    residue_degree: int = 1
    steps: tuple[dict, ...] = ()
    top_witness: HahnSeries | None = None
    top_family: dict | None = None
    base_value_subgroup: Subgroup | None = None

    def __post_init__(self):
        if self.base_value_subgroup is None:
            self.base_value_subgroup = self.value_subgroup

    @staticmethod
    def over(p: int, value_gens=(1,), residue_degree: int = 1,
             coefficient_field: Field | None = None) -> "ExtensionTower":
        if not _is_prime(p):
            raise PreconditionError(f"{p} is not prime")
        field = coefficient_field if coefficient_field is not None else FiniteField(p)
        gens = tuple(GroupElement.of(g) for g in value_gens)
        group = Subgroup(1, gens)
        return ExtensionTower(p, field, group, residue_degree, base_value_subgroup=group)

    def total_e(self) -> int:
        out = 1
        for s in self.steps:
            out *= s["e"]
        return out

    def total_f(self) -> int:
        out = 1
        for s in self.steps:
            out *= s["f"]
        return out

    def total_degree(self) -> int:
        out = 1
        for s in self.steps:
            out *= s["degree"]
        return out


def build_extension_step(step: ExtensionStep, tower: ExtensionTower,
                         as_depth: int = 3) -> ExtensionTower:
    """Apply one prescribed step to the tower, verifying the claimed
    (e, f) from the step's own witness data.

    kummer: adjoin t^alpha for alpha of prime torsion order e over the
    current value group (verified by subgroup index), giving (e, 1).
    residue: adjoin a root of a monic irreducible over F_p, giving
    (1, lcm(d, deg)/d) for current residue degree d.
    artin-schreier: adjoin a root of X^p - X - c for v(c) < 0 in the
    current value group, verifying the value chain
    0 > v(a^p - c) = v(a) > p v(a) = v(c); the step has (p, 1) when
    v(a) leaves the value group and is immediate with defect p when the
    group is already p-divisible there.
    """
    p = tower.residue_char
    if step.kind == "kummer":
        alpha = GroupElement.of(step.alpha)
        e = tower.value_subgroup.torsion_order(alpha)
        if e is None:
            raise PreconditionError(
                f"kummer step: {step.alpha} lies outside the rational span of the value group"
            )
        if e == 1:
            raise PreconditionError(f"kummer step: {step.alpha} already lies in the value group")
        if not _is_prime(e) and math.gcd(e, p) != 1:
            raise PreconditionError(
                f"kummer step: torsion order {e} is neither prime nor coprime "
                f"to the residue characteristic {p}"
            )
        root = kummer_root(alpha.scaled(e), tower.coefficient_field.one(), e)
        power_exponent = root.terms[0][0].scaled(e)
        if tower.value_subgroup.witness(power_exponent) is None:
            raise AssertionError("internal error: e-th power of the root left the value group")
        new_group = tower.value_subgroup.extended(alpha)
        index = new_group.index_over(tower.value_subgroup)
        if index != e:
            raise AssertionError(f"internal error: group index {index}, expected {e}")
        record = {
            "kind": "kummer",
            "alpha": str(step.alpha),
            "e": e,
            "f": 1,
            "degree": e,
            "defect": 1,
            "witness": {
                "root_exponent": str(root.terms[0][0].coords[0]),
                "e_th_power_exponent": str(power_exponent.coords[0]),
                "group_index": index,
            },
        }
        return ExtensionTower(
            p, tower.coefficient_field, new_group, tower.residue_degree,
            tower.steps + (record,), root,
            {"kind": "kummer", "e": e, "c_exponent": str(step.alpha * e)},
            tower.base_value_subgroup,
        )

    if step.kind == "residue":
        ext = FiniteField(p, step.modulus)  # verifies monic irreducible
        m = ext.degree
        new_degree = math.lcm(tower.residue_degree, m)
        f = new_degree // tower.residue_degree
        if f == 1:
            raise PreconditionError(
                "residue step: the reduction has a root in the current residue field, "
                "so it is not a minimal polynomial of a new residue"
            )
        record = {
            "kind": "residue",
            "modulus": list(step.modulus),
            "e": 1,
            "f": f,
            "degree": f,
            "defect": 1,
            "witness": {
                "root_degree_over_prime": m,
                "residue_degree_before": tower.residue_degree,
                "residue_degree_after": new_degree,
            },
            # finite residue fields are perfect, so the reduction is already
            # separable and the lift needs no perturbation
            "separable_lift": "exact",
        }
        return ExtensionTower(
            p, tower.coefficient_field, tower.value_subgroup, new_degree,
            tower.steps + (record,), None, None, tower.base_value_subgroup,
        )

    if step.kind == "artin-schreier":
        ce = GroupElement.of(step.c_exponent)
        if not ce < GroupElement.zero(1):
            raise PreconditionError("artin-schreier step requires v(c) < 0")
        if tower.value_subgroup.witness(ce) is None:
            raise PreconditionError(
                f"artin-schreier step: exponent {step.c_exponent} is not in the value group"
            )
        c = HahnSeries.monomial(tower.coefficient_field, ce, 1)
        a = artin_schreier_root(c, as_depth)
        va = a.value()
        chain = (a ** p) - c
        vchain = chain.value()
        chain_ok = (
            va < GroupElement.zero(1)
            and vchain is not None
            and vchain == va
            and va.scaled(p) == ce
        )
        if not chain_ok:
            raise AssertionError("internal error: Artin-Schreier value chain failed")
        alpha = va
        if tower.value_subgroup.witness(alpha) is None:
            new_group = tower.value_subgroup.extended(alpha)
            index = new_group.index_over(tower.value_subgroup)
            if index != p:
                raise AssertionError(f"internal error: group index {index}, expected {p}")
            e, defect = p, 1
        else:
            new_group = tower.value_subgroup
            e, defect = 1, p
        record = {
            "kind": "artin-schreier",
            "c_exponent": str(step.c_exponent),
            "e": e,
            "f": 1,
            "degree": p,
            "defect": defect,
            "witness": {
                "root_value": str(va.coords[0]),
                "chain": {
                    "v_a": str(va.coords[0]),
                    "v_a_pow_p_minus_c": str(vchain.coords[0]),
                    "v_c": str(ce.coords[0]),
                },
            },
        }
        return ExtensionTower(
            p, tower.coefficient_field, new_group, tower.residue_degree,
            tower.steps + (record,), a,
            {"kind": "artin-schreier", "c_exponent": str(step.c_exponent)},
            tower.base_value_subgroup,
        )

    raise SchemaError(f"unknown extension step kind {step.kind!r}")


def build_extension_tower(p: int, steps: list[ExtensionStep], value_gens=(1,),
                          as_depth: int = 3) -> tuple[ExtensionTower, Certificate]:
    """Apply a list of prescribed steps and emit the tower's
    fundamental-inequality certificate with multiplicative (e, f)
    accounting."""
    tower = ExtensionTower.over(p, value_gens)
    for step in steps:
        tower = build_extension_step(step, tower, as_depth)
    n = tower.total_degree()
    check = fund_ineq_check(n, [(tower.total_e(), tower.total_f())])
    payload = {
        "base": {
            "residue_char": p,
            "value_group": [g.to_json() for g in Subgroup(1, tuple(GroupElement.of(g) for g in value_gens)).generators],
            "residue_degree": 1,
        },
        "steps": list(tower.steps),
        "totals": {
            "degree": n,
            "e": tower.total_e(),
            "f": tower.total_f(),
            "defect": n // (tower.total_e() * tower.total_f()),
        },
        "fund_ineq": check,
    }
    return tower, Certificate("fundamental-inequality", payload)


def build_ic_valuation(tower: ExtensionTower, beta, variant: str = "v1",
                       placement: str = "small") -> tuple[CenteredValuation, dict]:
    """A centered valuation v with center the tower's top root and
    v(x - a) = gamma = alpha + beta above the root's Krasner constant,
    so the root generates part of the implicit constant field.

    variant "v1" places beta as a fresh lexicographic unit (the result
    is value-transcendental); variant "v2" takes beta in the base value
    group (residue-transcendental).  alpha is the least nonnegative
    multiple of the value-group generator dominating the Krasner
    constant.
    """
    if tower.top_witness is None or tower.top_family is None:
        raise PreconditionError(
            "the tower's top step has no root witness (a residue step); "
            "Krasner constants are computed for kummer and artin-schreier families only"
        )
    fam = tower.top_family
    if fam["kind"] == "artin-schreier":
        c = HahnSeries.monomial(tower.coefficient_field, Fraction(fam["c_exponent"]), 1)
        kras = krasner_artin_schreier(c, tower.residue_char)
    else:
        c = HahnSeries.monomial(tower.coefficient_field, Fraction(fam["c_exponent"]), 1)
        kras = krasner_kummer(c, fam["e"])
    base_group = tower.base_value_subgroup
    gens = base_group.basis()
    if not gens:
        raise PreconditionError("the base value group is trivial; no alpha dominates the constant")
    gen = gens[0].coords[0]
    kras_q = kras.coords[0]
    k = 0
    while k * gen < kras_q:
        k += 1
    alpha = k * gen
    base = SeriesValuedField(tower.coefficient_field,
                             [g.coords[0] for g in tower.value_subgroup.generators])
    if variant == "v1":
        beta_q = Fraction(beta) if beta is not None else Fraction(1)
        if beta_q <= 0:
            raise PreconditionError("beta must be positive")
        if placement == "small":
            gamma = GroupElement.of(alpha, beta_q)
            base_coord = 0
        elif placement == "large":
            gamma = GroupElement.of(beta_q, alpha)
            base_coord = 1
        else:
            raise ValueError("placement must be 'small' or 'large'")
        valn = CenteredValuation(base, tower.top_witness, gamma, base_coord=base_coord)
        label = VALUE_TRANSCENDENTAL
    elif variant == "v2":
        beta_q = Fraction(beta)
        if beta_q <= 0 or tower.base_value_subgroup.witness(GroupElement.of(beta_q)) is None:
            raise PreconditionError("beta must be a positive element of the base value group")
        gamma = GroupElement.of(alpha + beta_q)
        valn = CenteredValuation(base, tower.top_witness, gamma)
        label = RESIDUE_TRANSCENDENTAL
    else:
        raise PreconditionError(f"unknown variant {variant!r}")
    got = valn.classify()
    if got != label:
        raise AssertionError(f"internal error: classified {got}, expected {label}")
    kras_embedded = valn.embed_base_value(kras_q)
    if not valn.gamma > kras_embedded:
        raise AssertionError("internal error: gamma fails to dominate the Krasner constant")
    info = {
        "kras": str(kras_q),
        "alpha": str(alpha),
        "beta": str(beta_q),
        "gamma": gamma.to_json(),
        "classification": label,
        "ic_statement": "the center generates a subfield of the implicit constant field "
                        "(v(x - a) exceeds the Krasner constant of a)",
    }
    return valn, info


# ---------------------------------------------------------------------------
# p-adic degree lower bounds

def build_degree_bound(p: int, indices: list[int], depth: int | None = None) -> Certificate:
    """Degree-lower-bound certificate in the p-exponent series model.

    With gamma_i = i + 1/n_i for indices n_i > 1 coprime to p and
    strictly increasing, the partial sums b_i of sum p^(gamma_i) form a
    Cauchy sequence whose increments are strongly homogeneous with
    ramification indices n_i; any z with v(z - b_depth) > gamma_depth
    has degree at least lcm(n_1..n_depth) over the p-adic base, by the
    fundamental inequality applied to the value-group index.  The
    pseudo-Cauchy variant with gamma_i = 1 - 1/n_i (bounded above,
    no limit in a spherically incomplete field) is emitted alongside.
    """
    if not _is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if not indices:
        raise PreconditionError("at least one index is required")
    for i, nv in enumerate(indices, start=1):
        if nv <= 1:
            raise PreconditionError(f"index n_{i} = {nv} must exceed 1")
        if math.gcd(nv, p) != 1:
            raise PreconditionError(
                f"index n_{i} = {nv} shares a factor with p = {p}; "
                f"indices must be coprime to the residue characteristic"
            )
        if i >= 2 and indices[i - 2] >= nv:
            raise PreconditionError(f"indices must be strictly increasing (position {i})")
    if depth is None:
        depth = len(indices)
    if not 1 <= depth <= len(indices):
        raise PreconditionError(f"depth must be between 1 and {len(indices)}")
    coeffs = FiniteField(p)
    state = TowerState(Subgroup.generated_by(1), 1, p)
    gammas = [Fraction(i) + Fraction(1, nv) for i, nv in enumerate(indices[:depth], start=1)]
    increments = []
    for i, (nv, g) in enumerate(zip(indices, gammas), start=1):
        mono = HahnSeries.monomial(coeffs, g, 1)
        witness = strongly_homogeneous_test(mono, state)
        if not witness.ok or witness.e != nv:
            raise AssertionError(
                f"internal error: increment {i} not strongly homogeneous with e = {nv}"
            )
        increments.append(
            {"i": i, "gamma": str(g), "e": witness.e, "f": witness.f, "coprime_ok": True}
        )
        state = state.extended(GroupElement.of(g), coeffs.one())
    bound = math.lcm(*indices[:depth])
    prefix_bounds = [math.lcm(*indices[:k]) for k in range(1, depth + 1)]
    big = Subgroup.generated_by(*([1] + [GroupElement.of(g) for g in gammas]))
    index = big.index_over(Subgroup.generated_by(1))
    if index != bound:
        raise AssertionError(f"internal error: subgroup index {index}, lcm says {bound}")
    variant_gammas = [Fraction(1) - Fraction(1, nv) for nv in indices[:depth]]
    payload = {
        "p": p,
        "indices": list(indices[:depth]),
        "depth": depth,
        "exponents": [str(g) for g in gammas],
        "increments": increments,
        "cauchy": {
            "strictly_increasing": True,
            "cofinal": True,
            "note": "exponents grow beyond every integer, so the partial sums are Cauchy",
        },
        "bound": bound,
        "bound_by_prefix": prefix_bounds,
        "group_index_witness": {
            "generators": ["1"] + [str(g) for g in gammas],
            "hermite_basis": [str(b.coords[0]) for b in big.basis()],
            "index_over_base": index,
        },
        "statement": (
            "any z with v(z - b_depth) > gamma_depth generates an extension of "
            "degree >= bound over the p-adic base field"
        ),
        "model_note": (
            "exponent and residue bookkeeping in the p-exponent series model; "
            "coefficients are residue representatives, which is faithful for "
            "value-group indices and lcm bounds"
        ),
        "pseudo_cauchy_variant": {
            "exponents": [str(g) for g in variant_gammas],
            "strictly_increasing": all(
                a < b for a, b in zip(variant_gammas, variant_gammas[1:])
            ),
            "bounded_above_by": "1",
            "cauchy": False,
            "pseudo_cauchy": True,
            "note": "bounded exponents: a pseudo Cauchy sequence whose nest of balls "
                    "has empty intersection in a spherically incomplete field",
        },
    }
    return Certificate("degree-lower-bound", payload)


# ---------------------------------------------------------------------------
# classification certificates

def classification_certificate(descriptor, descriptor_json: dict) -> Certificate:
    """Certificate recording a classification with its torsion witness."""
    if isinstance(descriptor, PseudoCauchyValuation):
        payload = {
            "descriptor": descriptor_json,
            "label": descriptor.classify(),
            "witness": {"pseudo_cauchy": True},
            "trichotomy_flags": list(descriptor.trichotomy_flags()),
        }
        return Certificate("classification", payload)
    e = descriptor.torsion_order()
    witness = (
        {"torsion_order": e}
        if e is not None
        else {"non_torsion_rank_proof": True}
    )
    payload = {
        "descriptor": descriptor_json,
        "label": descriptor.classify(),
        "witness": witness,
        "trichotomy_flags": list(descriptor.trichotomy_flags()),
    }
    return Certificate("classification", payload)


# ---------------------------------------------------------------------------
# re-validation

@dataclass(frozen=True)
class ValidationResult:
    ok: bool
    findings: tuple[str, ...]

    def first_failure(self) -> str | None:
        return self.findings[0] if self.findings else None

    def to_json(self) -> dict:
        return {"ok": self.ok, "findings": list(self.findings)}


def validate_certificate(data) -> ValidationResult:
    """Re-check a certificate from its own witnesses.

    The first broken invariant is reported by name; no part of the
    original construction is re-run, only the recorded witness data is
    re-verified.
    """
    cert = data if isinstance(data, Certificate) else Certificate.from_dict(data)
    findings: list[str] = []
    try:
        if cert.kind == "defect-tower":
            _validate_defect_tower(cert.payload, findings)
        elif cert.kind == "degree-lower-bound":
            _validate_degree_bound(cert.payload, findings)
        elif cert.kind == "fundamental-inequality":
            _validate_fund_ineq(cert.payload, findings)
        elif cert.kind == "classification":
            _validate_classification(cert.payload, findings)
        else:
            findings.append(f"unknown certificate kind {cert.kind!r}")
    except (KeyError, TypeError, ValueError) as exc:
        findings.append(f"malformed certificate: {exc}")
    return ValidationResult(not findings, tuple(findings))


def _validate_defect_tower(payload: dict, findings: list[str]) -> None:
    p = payload["p"]
    schedule = payload["schedule"]
    depth = payload["depth"]
    n = len(schedule)
    mults = payload.get("multipliers", [-1] * n)
    default_shape = all(m == -1 for m in mults)
    exponents = [Fraction(mults[i], p ** schedule[i]) for i in range(n)]
    if not _is_prime(p):
        findings.append(f"p = {p} is not prime")
        return
    if any(math.gcd(abs(m), p) != 1 for m in mults):
        findings.append("a multiplier shares a factor with p")
        return
    if default_shape:
        for i in range(1, n):
            if schedule[i] < schedule[i - 1] + i:
                findings.append(f"schedule violation at position {i + 1}")
                return
    elif any(not a < b for a, b in zip(exponents, exponents[1:])):
        findings.append("schedule exponents fail to increase strictly")
        return
    levels = payload["levels"]
    if depth > len(levels):
        findings.append(
            f"depth field {depth} exceeds the {len(levels)} witnessed levels"
        )
        return
    if depth > n - 1:
        findings.append(f"depth {depth} cannot be witnessed by a schedule of length {n}")
        return
    recorded_trunc = payload["series_truncation"]
    if default_shape:
        if recorded_trunc is None or Fraction(recorded_trunc) != -Fraction(1, p ** (schedule[-1] + n)):
            findings.append("series truncation does not match the schedule")
            return
    trunc = None if recorded_trunc is None else Fraction(recorded_trunc)
    for level in levels[:depth]:
        j = level["j"]
        e_j = schedule[j - 1]
        if level["frobenius_exponent"] != e_j:
            findings.append(f"level {j}: Frobenius exponent mismatch")
            return
        lhs_trunc = None if trunc is None else Fraction(p ** e_j) * trunc
        oracle = sorted(
            exponents[i - 1] * p ** e_j
            for i in range(j + 1, n + 1)
            if lhs_trunc is None or exponents[i - 1] * p ** e_j < lhs_trunc
        )
        witnessed = [Fraction(v) for v in level["witness_exponents"]]
        if witnessed != oracle:
            findings.append(f"level {j}: witness exponents disagree with the schedule formula")
            return
        value = Fraction(level["value"])
        if not witnessed or min(witnessed) != value:
            findings.append(f"level {j}: recorded value is not the least witness exponent")
            return
        if value != exponents[j] * p ** e_j:
            findings.append(f"level {j}: value differs from n_(j+1) * p^(e_j - e_(j+1))")
            return
        denom_power = level["grants_denominator_exponent"]
        if denom_power != schedule[j] - e_j:
            findings.append(f"level {j}: granted denominator exponent mismatch")
            return
        if default_shape and denom_power < j:
            findings.append(f"level {j}: grant falls short of 1/p^{j}")
            return
        target_q = Fraction(level["membership_target"])
        if target_q != Fraction(1, p ** denom_power):
            findings.append(f"level {j}: membership target mismatch")
            return
        group = Subgroup.generated_by(1, value)
        target = GroupElement.of(target_q)
        w = level["membership_witness"]
        acc = GroupElement.zero(1)
        for zi, gen in zip(w, group.generators):
            acc = acc + gen.scaled(zi)
        if acc != target:
            findings.append(f"level {j}: membership witness does not verify")
            return
    prev = Fraction(-1)
    for entry in payload["eta_tower"]:
        i = entry["i"]
        v = Fraction(entry["value"])
        if v != prev / p:
            findings.append(f"eta tower: v(eta_{i}) = {v} is not v(eta_{i-1})/p")
            return
        if not entry.get("chain_ok"):
            findings.append(f"eta tower: value chain not verified at level {i}")
            return
        prev = v
    for claim in payload["defect_claims"]:
        i = claim["i"]
        if claim["degree"] != p ** i:
            findings.append(f"defect claim {i}: degree is not p^{i}")
            return
        if claim["ramification_index"] != 1 or claim["inertia_degree"] != 1:
            findings.append(f"defect claim {i}: (e, f) must be (1, 1) for an immediate extension")
            return
        if claim["defect"] != claim["degree"]:
            findings.append(f"defect claim {i}: defect must equal the degree")
            return
        if claim["fund_ineq_slack"] != claim["degree"] - 1:
            findings.append(f"defect claim {i}: fundamental-inequality slack mismatch")
            return


def _validate_degree_bound(payload: dict, findings: list[str]) -> None:
    p = payload["p"]
    indices = payload["indices"]
    depth = payload["depth"]
    if not _is_prime(p):
        findings.append(f"p = {p} is not prime")
        return
    if depth != len(indices) or depth != len(payload["exponents"]):
        findings.append("depth field disagrees with the witnessed indices")
        return
    for i, nv in enumerate(indices, start=1):
        if nv <= 1 or math.gcd(nv, p) != 1:
            findings.append(f"index n_{i} = {nv} violates the coprimality precondition")
            return
        if i >= 2 and indices[i - 2] >= nv:
            findings.append(f"indices fail to increase strictly at position {i}")
            return
    gammas = [Fraction(g) for g in payload["exponents"]]
    base = Subgroup.generated_by(1)
    for i, (nv, g) in enumerate(zip(indices, gammas), start=1):
        if g != Fraction(i) + Fraction(1, nv):
            findings.append(f"exponent gamma_{i} does not equal i + 1/n_i")
            return
        if base.torsion_order(GroupElement.of(g)) != nv:
            findings.append(f"torsion order of gamma_{i} over Z is not n_{i}")
            return
    expected = math.lcm(*indices)
    if payload["bound"] != expected:
        findings.append(f"bound {payload['bound']} differs from lcm = {expected}")
        return
    prefixes = payload["bound_by_prefix"]
    if prefixes != [math.lcm(*indices[:k]) for k in range(1, depth + 1)]:
        findings.append("prefix bounds disagree with the lcm recurrence")
        return
    if any(a > b for a, b in zip(prefixes, prefixes[1:])):
        findings.append("prefix bounds are not monotone non-decreasing")
        return
    big = Subgroup.generated_by(*([1] + [GroupElement.of(g) for g in gammas]))
    if big.index_over(base) != payload["bound"]:
        findings.append("subgroup index witness does not verify against the bound")
        return
    basis = [str(b.coords[0]) for b in big.basis()]
    if basis != payload["group_index_witness"]["hermite_basis"]:
        findings.append("recorded Hermite basis does not verify")
        return
    variant = payload["pseudo_cauchy_variant"]
    vg = [Fraction(g) for g in variant["exponents"]]
    if any(a >= b for a, b in zip(vg, vg[1:])):
        findings.append("pseudo-Cauchy variant exponents fail to increase strictly")
        return
    if any(g >= 1 for g in vg):
        findings.append("pseudo-Cauchy variant exponents must stay below 1")
        return


def _validate_fund_ineq(payload: dict, findings: list[str]) -> None:
    check = payload["fund_ineq"] if "fund_ineq" in payload else payload
    n = check["n"]
    pairs = [tuple(pr) for pr in check["pairs"]]
    fresh = fund_ineq_check(n, pairs)
    for key in ("sum_ef", "ok", "slack", "equality"):
        if fresh[key] != check.get(key):
            findings.append(f"fundamental inequality field {key!r} does not verify")
            return
    if not fresh["ok"]:
        findings.append("the fundamental inequality fails: n < sum of e_i * f_i")
        return
    if "steps" in payload:
        e = f = n_prod = 1
        for i, s in enumerate(payload["steps"], start=1):
            if s["degree"] != s["e"] * s["f"] * s.get("defect", 1):
                findings.append(f"step {i}: degree is not e * f * defect")
                return
            e *= s["e"]
            f *= s["f"]
            n_prod *= s["degree"]
        totals = payload["totals"]
        if (totals["e"], totals["f"], totals["degree"]) != (e, f, n_prod):
            findings.append("totals are not the products of the step data")
            return
        if n != n_prod or pairs != [(e, f)]:
            findings.append("fundamental-inequality data disagrees with the tower totals")
            return
        for i, s in enumerate(payload["steps"], start=1):
            if s["kind"] == "kummer":
                alpha = Fraction(s["alpha"])
                w = s["witness"]
                if Fraction(w["root_exponent"]) * s["e"] != Fraction(w["e_th_power_exponent"]):
                    findings.append(f"step {i}: root exponent witness mismatch")
                    return
                if Fraction(w["root_exponent"]) != alpha:
                    findings.append(f"step {i}: root exponent is not alpha")
                    return
                if w["group_index"] != s["e"]:
                    findings.append(f"step {i}: group index witness mismatch")
                    return
            elif s["kind"] == "residue":
                w = s["witness"]
                if math.lcm(w["residue_degree_before"], w["root_degree_over_prime"]) != w["residue_degree_after"]:
                    findings.append(f"step {i}: residue degree lcm mismatch")
                    return
                if s["f"] * w["residue_degree_before"] != w["residue_degree_after"]:
                    findings.append(f"step {i}: inertia degree witness mismatch")
                    return
            elif s["kind"] == "artin-schreier":
                w = s["witness"]["chain"]
                va = Fraction(w["v_a"])
                vc = Fraction(w["v_c"])
                if not (Fraction(0) > Fraction(w["v_a_pow_p_minus_c"]) == va > vc):
                    findings.append(f"step {i}: value chain does not verify")
                    return
                if va * payload["base"]["residue_char"] != vc:
                    findings.append(f"step {i}: p * v(a) != v(c)")
                    return


def _validate_classification(payload: dict, findings: list[str]) -> None:
    label = payload["label"]
    flags = payload["trichotomy_flags"]
    if sum(bool(b) for b in flags) != 1:
        findings.append("trichotomy flags must mark exactly one case")
        return
    expected = {
        0: VALUE_TRANSCENDENTAL,
        1: RESIDUE_TRANSCENDENTAL,
        2: "valuation-algebraic",
    }[flags.index(True)]
    if label != expected:
        findings.append(f"label {label!r} disagrees with the trichotomy flags")
        return
    witness = payload["witness"]
    desc = payload["descriptor"]
    if witness.get("pseudo_cauchy"):
        if label != "valuation-algebraic":
            findings.append("pseudo Cauchy descriptors are valuation-algebraic")
        return
    gamma = GroupElement.from_json(desc["gamma"])
    base = ValuedField.from_json(desc["base"])
    base_coord = desc.get("base_coord", 0)
    gens = []
    for v in base.value_generators():
        coords = [Fraction(0)] * gamma.rank
        coords[base_coord] = Fraction(v)
        gens.append(GroupElement(tuple(coords)))
    e = Subgroup(gamma.rank, tuple(gens)).torsion_order(gamma)
    if "torsion_order" in witness:
        if e != witness["torsion_order"]:
            findings.append("torsion-order witness does not verify")
            return
        if label != RESIDUE_TRANSCENDENTAL:
            findings.append("torsion gamma must classify as residue-transcendental")
    else:
        if e is not None:
            findings.append("non-torsion rank proof does not verify")
            return
        if label != VALUE_TRANSCENDENTAL:
            findings.append("non-torsion gamma must classify as value-transcendental")
