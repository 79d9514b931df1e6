"""Weak bialgebras and weak Hopf algebras given by structure constants.

Axioms are checked on basis tuples; by multilinearity that is the same as the
universally quantified statement. Sweedler legs are read off the sparse
structure constants of the comultiplication, ``Δ²`` by composition.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

import numpy as np

from .errors import AxiomError, ShapeError
from .linalg import (
    SCALARS,
    BilinearMap,
    Field,
    FinSpace,
    LinearSystem,
    LinMap,
    Scalar,
    Subspace,
    image_of_idempotent,
    inverse,
    outer,
    tensor_space,
)
from .report import ConditionReport, Tally, Verdict, tally_report

logger = logging.getLogger(__name__)

Side = Literal["L", "R"]

Leg = tuple[Scalar, int, int]
Leg3 = tuple[Scalar, int, int, int]

WEAK_BIALGEBRA_IDS = (
    "assoc",
    "unit",
    "coassoc",
    "counit",
    "comult-multiplicative",
    "comult-unit",
    "counit-product",
)
ANTIPODE_IDS = (
    "antipode-left",
    "antipode-right",
    "antipode-sandwich",
    "antipode-bijective",
    "antipode-inverse",
    "antipode-antimultiplicative",
    "antipode-anticomultiplicative",
    "antipode-unit",
    "antipode-counit",
)
COUNITAL_IDS = (
    "projector-idempotent",
    "projector-section",
    "counital-closure",
    "counital-dims",
)
# dim H^L = dim H^R is recorded but never blocks construction
OBSERVATIONAL_IDS = ("counital-dims",)


def _frozen(values: np.ndarray) -> np.ndarray:
    values = values.copy()
    values.flags.writeable = False
    return values


@dataclass(frozen=True, eq=False)
class StructuredAlgebra:
    """``mult[i, j]`` holds the coordinates of ``e_i e_j``."""

    space: FinSpace
    mult: np.ndarray
    unit: np.ndarray
    field: Field

    def __post_init__(self):
        n = self.space.dim
        mult = self.field.coerce(self.mult)
        unit = self.field.coerce(self.unit)
        if mult.shape != (n, n, n) or unit.shape != (n,):
            raise ShapeError(
                f"Algebra tables of shapes {mult.shape}, {unit.shape} do not fit dim {n}"
            )
        object.__setattr__(self, "mult", _frozen(mult))
        object.__setattr__(self, "unit", _frozen(unit))

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def product(self) -> BilinearMap:
        return BilinearMap(self.space, self.space, self.space, self.mult, self.field)

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.product(u, v)

    def left_matrix(self, u: np.ndarray) -> np.ndarray:
        """Matrix of ``v ↦ uv``."""
        return self.product.left_matrix(u)

    def right_matrix(self, v: np.ndarray) -> np.ndarray:
        """Matrix of ``u ↦ uv``."""
        return self.product.right_matrix(v)


@dataclass(frozen=True, eq=False)
class StructuredCoalgebra:
    """``comult[i, j, k]`` is the coefficient of ``e_j ⊗ e_k`` in ``Δ(e_i)``."""

    space: FinSpace
    comult: np.ndarray
    counit: np.ndarray
    field: Field

    def __post_init__(self):
        n = self.space.dim
        comult = self.field.coerce(self.comult)
        counit = self.field.coerce(self.counit)
        if comult.shape != (n, n, n) or counit.shape != (n,):
            raise ShapeError(
                f"Coalgebra tables of shapes {comult.shape}, {counit.shape} do not fit dim {n}"
            )
        object.__setattr__(self, "comult", _frozen(comult))
        object.__setattr__(self, "counit", _frozen(counit))

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def legs(self) -> tuple[tuple[Leg, ...], ...]:
        """Nonzero terms ``(c, j, k)`` of ``Δ(e_i) = Σ c e_j ⊗ e_k``."""
        out = []
        for i in range(self.dim):
            nonzero = np.argwhere(
                np.asarray([[not self.field.is_zero(x) for x in row] for row in self.comult[i]])
            )
            out.append(tuple((self.comult[i, j, k], int(j), int(k)) for j, k in nonzero))
        return tuple(out)

    @cached_property
    def legs3(self) -> tuple[tuple[Leg3, ...], ...]:
        """Nonzero terms of ``Δ²(e_i) = (Δ ⊗ id)Δ(e_i)``."""
        out = []
        for i in range(self.dim):
            terms: dict[tuple[int, int, int], Scalar] = {}
            for c, j, k in self.legs[i]:
                for d, a, b in self.legs[j]:
                    key = (a, b, k)
                    terms[key] = terms[key] + c * d if key in terms else c * d
            out.append(
                tuple(
                    (coefficient, *key)
                    for key, coefficient in sorted(terms.items())
                    if not self.field.is_zero(coefficient)
                )
            )
        return tuple(out)

    def comultiply(self, u: np.ndarray) -> np.ndarray:
        """``Δ(u)`` as an ``n × n`` coefficient matrix."""
        n = self.dim
        return self.field.matmul(u.reshape(1, -1), self.comult.reshape(n, n * n)).reshape(n, n)

    def counit_of(self, u: np.ndarray) -> Scalar:
        return self.field.matmul(self.counit.reshape(1, -1), u.reshape(-1, 1))[0, 0]


@dataclass(frozen=True, eq=False)
class WeakBialgebra:
    algebra: StructuredAlgebra
    coalgebra: StructuredCoalgebra

    def __post_init__(self):
        if self.algebra.space != self.coalgebra.space:
            raise ShapeError("Algebra and coalgebra must share a space")
        if self.algebra.field != self.coalgebra.field:
            raise ShapeError("Algebra and coalgebra must share a field")

    @property
    def space(self) -> FinSpace:
        return self.algebra.space

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def unit(self) -> np.ndarray:
        return self.algebra.unit

    @property
    def legs(self) -> tuple[tuple[Leg, ...], ...]:
        return self.coalgebra.legs

    @property
    def legs3(self) -> tuple[tuple[Leg3, ...], ...]:
        return self.coalgebra.legs3

    def multiply(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        return self.algebra.multiply(u, v)

    @cached_property
    def counit_pairing(self) -> np.ndarray:
        """``E[i, j] = ε(e_i e_j)``."""
        n = self.dim
        return self.field.matmul(
            self.algebra.mult.reshape(n * n, n), self.coalgebra.counit.reshape(-1, 1)
        ).reshape(n, n)

    @cached_property
    def unit_legs(self) -> np.ndarray:
        """``Δ(1)`` as a coefficient matrix."""
        return self.coalgebra.comultiply(self.unit)

    @property
    def tensor_square(self) -> FinSpace:
        return tensor_space(self.space, self.space)


def verify_algebra(algebra: StructuredAlgebra) -> ConditionReport:
    """Associativity and unit laws on every basis triple and basis element."""
    n, field, labels = algebra.dim, algebra.field, algebra.space.labels
    mult = algebra.mult
    flat = mult.reshape(n * n, n)
    left = field.matmul(flat, mult.reshape(n, n * n)).reshape(n, n, n, n)
    right = (
        field.matmul(flat, np.transpose(mult, (1, 0, 2)).reshape(n, n * n))
        .reshape(n, n, n, n)
        .transpose(2, 0, 1, 3)
    )
    assoc = Tally("assoc", algebra.space, field)
    for i, j, k in np.ndindex(n, n, n):
        assoc.compare(left[i, j, k], right[i, j, k], (i, j, k), (labels[i], labels[j], labels[k]))

    unit = Tally("unit", algebra.space, field)
    on_left = field.matmul(algebra.unit.reshape(1, -1), mult.reshape(n, n * n)).reshape(n, n)
    on_right = field.matmul(
        np.transpose(mult, (0, 2, 1)).reshape(n * n, n), algebra.unit.reshape(-1, 1)
    ).reshape(n, n)
    identity = field.identity(n)
    for i in range(n):
        unit.compare(on_left[i], identity[i], (i,), (labels[i],), note="1·h")
        unit.compare(on_right[i], identity[i], (i,), (labels[i],), note="h·1")
    return tally_report(assoc, unit)


def verify_coalgebra(coalgebra: StructuredCoalgebra) -> ConditionReport:
    n, field, labels = coalgebra.dim, coalgebra.field, coalgebra.space.labels
    comult = coalgebra.comult
    cube = tensor_space(tensor_space(coalgebra.space, coalgebra.space), coalgebra.space)
    coassoc = Tally("coassoc", cube, field)
    counit = Tally("counit", coalgebra.space, field)
    flat = comult.reshape(n, n * n)
    identity = field.identity(n)
    for i in range(n):
        d = comult[i]
        left = field.matmul(flat.T, d).reshape(n, n, n)
        right = field.matmul(d, flat).reshape(n, n, n)
        coassoc.compare(left.reshape(-1), right.reshape(-1), (i,), (labels[i],))
        counit.compare(
            field.matmul(coalgebra.counit.reshape(1, -1), d).reshape(-1),
            identity[i],
            (i,),
            (labels[i],),
            note="(ε⊗id)Δ",
        )
        counit.compare(
            field.matmul(d, coalgebra.counit.reshape(-1, 1)).reshape(-1),
            identity[i],
            (i,),
            (labels[i],),
            note="(id⊗ε)Δ",
        )
    return tally_report(coassoc, counit)


def verify_weak_bialgebra(b: WeakBialgebra) -> ConditionReport:
    """Algebra, coalgebra and weak compatibility axioms, one verdict per group."""
    n, field, labels = b.dim, b.field, b.space.labels
    mult, comult = b.algebra.mult, b.coalgebra.comult
    report = verify_algebra(b.algebra) + verify_coalgebra(b.coalgebra)

    multiplicative = Tally("comult-multiplicative", b.tensor_square, field)
    image_of_products = field.matmul(mult.reshape(n * n, n), comult.reshape(n, n * n))
    for i, j in np.ndindex(n, n):
        rhs = field.zeros(n * n)
        for c, a, b_ in b.legs[i]:
            for d, p, q in b.legs[j]:
                rhs = rhs + (c * d) * outer(mult[a, p], mult[b_, q])
        multiplicative.compare(image_of_products[i * n + j], rhs, (i, j), (labels[i], labels[j]))

    # Δ²(1) against both middle products of two copies of Δ(1)
    d1 = b.unit_legs
    twice = field.matmul(comult.reshape(n, n * n).T, d1).reshape(n, n, n)
    first = field.matmul(d1, mult.reshape(n, n * n)).reshape(n, n, n)
    middle_one = field.matmul(
        np.transpose(first, (0, 2, 1)).reshape(n * n, n), d1
    ).reshape(n, n, n)
    second = field.matmul(d1, np.transpose(mult, (1, 0, 2)).reshape(n, n * n)).reshape(n, n, n)
    middle_two = field.matmul(
        np.transpose(second, (0, 2, 1)).reshape(n * n, n), d1
    ).reshape(n, n, n)
    unit_tally = Tally("comult-unit", SCALARS, field)
    for a, x, c in np.ndindex(n, n, n):
        names = (labels[a], labels[x], labels[c])
        unit_tally.compare(
            twice[a, x, c : c + 1], middle_one[a, x, c : c + 1], (a, x, c), names,
            note="1(1) ⊗ 1(2)1(1') ⊗ 1(2')",
        )
        unit_tally.compare(
            twice[a, x, c : c + 1], middle_two[a, x, c : c + 1], (a, x, c), names,
            note="1(1) ⊗ 1(1')1(2) ⊗ 1(2')",
        )

    pairing = b.counit_pairing
    triple = field.matmul(mult.reshape(n * n, n), pairing).reshape(n, n, n)
    counit_tally = Tally("counit-product", SCALARS, field)
    for ell in range(n):
        split = field.matmul(field.matmul(pairing, comult[ell]), pairing)
        swapped = field.matmul(field.matmul(pairing, comult[ell].T), pairing)
        for h, m in np.ndindex(n, n):
            names = (labels[h], labels[ell], labels[m])
            counit_tally.compare(
                triple[h, ell, m : m + 1], split[h, m : m + 1], (h, ell, m), names,
                note="ε(hl(1))ε(l(2)m)",
            )
            counit_tally.compare(
                triple[h, ell, m : m + 1], swapped[h, m : m + 1], (h, ell, m), names,
                note="ε(hl(2))ε(l(1)m)",
            )
    report = report + tally_report(multiplicative, unit_tally, counit_tally)
    logger.debug(f"Weak bialgebra of dim {n}: {len(report.failed())} failing axiom groups")
    return report


def canonical_projector(b: WeakBialgebra, side: Side) -> LinMap:
    """``Π^L(h) = ε(1(1)h)1(2)`` or ``Π^R(h) = 1(1)ε(h1(2))``; checked idempotent."""
    projector = LinMap(b.space, b.space, canonical_projector_matrix(b, side), b.field)
    column = projector.compose(projector).first_mismatch(projector)
    if column is not None:
        verdict = Verdict(
            condition="projector-idempotent",
            passed=False,
            note=f"Π^{side} is not idempotent at {b.space.labels[column]}",
        )
        raise AxiomError(verdict.note or "", ConditionReport.single(verdict))
    return projector


def _closure_tally(b: WeakBialgebra, sub: Subspace, side: Side, tally: Tally):
    rows = sub.rows()
    for r, u in enumerate(rows):
        for s, v in enumerate(rows):
            product = b.multiply(u, v)
            tally.compare(
                sub.residue(product),
                b.field.zeros(b.dim),
                (r, s),
                (f"H^{side}[{r}]", f"H^{side}[{s}]"),
                note="product leaves the subspace",
            )
    tally.compare(
        sub.residue(b.unit), b.field.zeros(b.dim), (), ("1",), note=f"unit not in H^{side}"
    )


def counital_subalgebra(b: WeakBialgebra, side: Side) -> Subspace:
    """``H^L`` or ``H^R`` in echelon form, after checking it is a unital subalgebra."""
    sub, _, _ = image_of_idempotent(canonical_projector(b, side))
    tally = Tally("counital-closure", b.space, b.field)
    _closure_tally(b, sub, side, tally)
    if tally.failures:
        raise AxiomError(
            f"H^{side} is not closed under multiplication", tally_report(tally)
        )
    return sub


def verify_counital(b: WeakBialgebra) -> ConditionReport:
    """Projector identities and the two counital subalgebras."""
    field, labels, n = b.field, b.space.labels, b.dim
    projectors = {}
    idempotent = Tally("projector-idempotent", b.space, field)
    for side in ("L", "R"):
        matrix = canonical_projector_matrix(b, side)
        projectors[side] = LinMap(b.space, b.space, matrix, field)
        square = field.matmul(matrix, matrix)
        for h in range(n):
            idempotent.compare(square[:, h], matrix[:, h], (h,), (labels[h],), note=f"Π^{side}")

    section = Tally("projector-section", b.space, field)
    pi_l, pi_r = projectors["L"].matrix, projectors["R"].matrix
    identity = field.identity(n)
    for h in range(n):
        left = field.zeros(n)
        right = field.zeros(n)
        for c, j, k in b.legs[h]:
            left = left + c * b.algebra.product.right_fixed(pi_l[:, j], k)
            right = right + c * b.algebra.product.left_fixed(j, pi_r[:, k])
        section.compare(left, identity[h], (h,), (labels[h],), note="Π^L(h(1))h(2)")
        section.compare(right, identity[h], (h,), (labels[h],), note="h(1)Π^R(h(2))")

    closure = Tally("counital-closure", b.space, field)
    dims = []
    if idempotent.failures == 0:
        for side in ("L", "R"):
            sub, _, _ = image_of_idempotent(projectors[side])
            dims.append(sub.dim)
            _closure_tally(b, sub, side, closure)
    report = tally_report(idempotent, section, closure)
    if len(dims) == 2:
        dims_verdict = Verdict(
            condition="counital-dims",
            passed=dims[0] == dims[1],
            checked=1,
            failures=int(dims[0] != dims[1]),
            note=f"dim H^L = {dims[0]}, dim H^R = {dims[1]}",
        )
    else:
        dims_verdict = Verdict(condition="counital-dims", passed=None, note="projectors not idempotent")
    return report + ConditionReport.single(dims_verdict)


@dataclass(frozen=True, kw_only=True, eq=False)
class HopfData:
    """Unverified weak Hopf algebra data."""

    bialgebra: WeakBialgebra
    antipode: LinMap
    antipode_inv: LinMap | None = None

    def __post_init__(self):
        space = self.bialgebra.space
        for name in ("antipode", "antipode_inv"):
            linmap = getattr(self, name)
            if linmap is not None and (linmap.domain != space or linmap.codomain != space):
                raise ShapeError(f"The {name} must be an endomorphism of H")


def verify_antipode(h: "HopfData | WeakHopfAlgebra") -> ConditionReport:
    """The three antipode axioms, bijectivity and the standard consequences."""
    data = h.data if isinstance(h, WeakHopfAlgebra) else h
    b = data.bialgebra
    n, field, labels = b.dim, b.field, b.space.labels
    s = data.antipode.matrix
    product = b.algebra.product
    pi_l = canonical_projector_matrix(b, "L")
    pi_r = canonical_projector_matrix(b, "R")

    left = Tally("antipode-left", b.space, field)
    right = Tally("antipode-right", b.space, field)
    sandwich = Tally("antipode-sandwich", b.space, field)
    for x in range(n):
        lhs_left = field.zeros(n)
        lhs_right = field.zeros(n)
        for c, j, k in b.legs[x]:
            lhs_left = lhs_left + c * product.left_fixed(j, s[:, k])
            lhs_right = lhs_right + c * product.right_fixed(s[:, j], k)
        left.compare(lhs_left, pi_l[:, x], (x,), (labels[x],))
        right.compare(lhs_right, pi_r[:, x], (x,), (labels[x],))
        lhs = field.zeros(n)
        for c, j, k, m in b.legs3[x]:
            lhs = lhs + c * product(product.right_fixed(s[:, j], k), s[:, m])
        sandwich.compare(lhs, s[:, x], (x,), (labels[x],))

    computed = inverse(s, field)
    bijective = Verdict(
        condition="antipode-bijective",
        passed=computed is not None,
        checked=1,
        failures=int(computed is None),
        note=None if computed is not None else "antipode matrix is singular",
    )
    inverse_tally = Tally("antipode-inverse", b.space, field)
    if data.antipode_inv is not None:
        supplied = data.antipode_inv.matrix
        identity = field.identity(n)
        one_way = field.matmul(s, supplied)
        other_way = field.matmul(supplied, s)
        for x in range(n):
            inverse_tally.compare(one_way[:, x], identity[:, x], (x,), (labels[x],), note="S∘S⁻¹")
            inverse_tally.compare(other_way[:, x], identity[:, x], (x,), (labels[x],), note="S⁻¹∘S")
        inverse_verdict = inverse_tally.verdict()
    else:
        inverse_verdict = Verdict(
            condition="antipode-inverse", passed=None, note="no inverse supplied"
        )

    anti = Tally("antipode-antimultiplicative", b.space, field)
    mult = b.algebra.mult
    for i, j in np.ndindex(n, n):
        anti.compare(
            field.matmul(s, mult[i, j].reshape(-1, 1)).reshape(-1),
            product(s[:, j], s[:, i]),
            (i, j),
            (labels[i], labels[j]),
        )
    anticomult = Tally("antipode-anticomultiplicative", b.tensor_square, field)
    for x in range(n):
        rhs = field.zeros(n * n)
        for c, j, k in b.legs[x]:
            rhs = rhs + c * outer(s[:, k], s[:, j])
        anticomult.compare(b.coalgebra.comultiply(s[:, x]).reshape(-1), rhs, (x,), (labels[x],))
    unit = Tally("antipode-unit", b.space, field)
    unit.compare(field.matmul(s, b.unit.reshape(-1, 1)).reshape(-1), b.unit, (), ("1",))
    counit = Tally("antipode-counit", SCALARS, field)
    image = field.matmul(b.coalgebra.counit.reshape(1, -1), s).reshape(-1)
    for x in range(n):
        counit.compare(image[x : x + 1], b.coalgebra.counit[x : x + 1], (x,), (labels[x],))

    return (
        tally_report(left, right, sandwich)
        + ConditionReport((bijective, inverse_verdict))
        + tally_report(anti, anticomult, unit, counit)
    )


def canonical_projector_matrix(b: WeakBialgebra, side: Side) -> np.ndarray:
    """The projector matrix without the idempotence check."""
    if side == "L":
        return b.field.matmul(b.unit_legs.T, b.counit_pairing)
    return b.field.matmul(b.unit_legs, b.counit_pairing.T)


def derive_antipode(b: WeakBialgebra) -> LinMap | None:
    """Solve for the antipode; ``None`` when ``b`` has none.

    Given ``S(h(1))h(2) = Π^R(h)``, the third axiom reads ``Π^R(h(1))S(h(2)) = S(h)``,
    so all three axioms are linear in the entries of ``S``.
    """
    n, field, labels = b.dim, b.field, b.space.labels
    unknowns = FinSpace(tuple(f"S({labels[k]})[{labels[y]}]" for k in range(n) for y in range(n)))
    system = LinearSystem(unknowns, field)
    mult = b.algebra.mult
    pi_l = canonical_projector_matrix(b, "L")
    pi_r = canonical_projector_matrix(b, "R")
    for h in range(n):
        left = field.zeros((n, n * n))
        right = field.zeros((n, n * n))
        third = field.zeros((n, n * n))
        for c, j, k in b.legs[h]:
            # (e_j S(e_k))_y = Σ_x S[x, k] mult[j, x, y]
            left[:, k * n : (k + 1) * n] = left[:, k * n : (k + 1) * n] + c * mult[j].T
            right[:, j * n : (j + 1) * n] = right[:, j * n : (j + 1) * n] + c * mult[:, k, :].T
            third[:, k * n : (k + 1) * n] = third[:, k * n : (k + 1) * n] + c * (
                b.algebra.left_matrix(pi_r[:, j])
            )
        third[:, h * n : (h + 1) * n] = third[:, h * n : (h + 1) * n] - field.identity(n)
        for y in range(n):
            system.add(left[y], pi_l[y, h])
            system.add(right[y], pi_r[y, h])
            system.add(third[y], field.zero)
    solution = system.solve()
    if solution is None:
        logger.info("No antipode: the linear antipode system is inconsistent")
        return None
    antipode = LinMap(b.space, b.space, solution.reshape(n, n).T, field)
    report = verify_antipode(HopfData(bialgebra=b, antipode=antipode)).only(
        "antipode-left", "antipode-right", "antipode-sandwich"
    )
    if not report.all_passed():
        logger.warning("Derived antipode candidate fails the antipode axioms")
        return None
    if system.nullity:
        logger.warning(f"Antipode system has nullity {system.nullity}; returning one solution")
    return antipode


@dataclass(frozen=True, eq=False)
class WeakHopfAlgebra:
    """A weak Hopf algebra whose axioms have been verified.

    Build one with ``WeakHopfAlgebra.verified``; raw data stays in ``HopfData``.
    """

    data: HopfData
    antipode_inv: LinMap
    report: ConditionReport

    @classmethod
    def verified(cls, data: HopfData) -> "WeakHopfAlgebra":
        b = data.bialgebra
        report = verify_weak_bialgebra(b) + verify_antipode(data) + verify_counital(b)
        if not report.all_passed(ignore=OBSERVATIONAL_IDS):
            failing = ", ".join(v.condition for v in report.failed())
            raise AxiomError(f"Not a weak Hopf algebra with bijective antipode: {failing}", report)
        if not report.passed("counital-dims"):
            logger.warning(f"Counital subalgebras differ in dimension: {report['counital-dims'].note}")
        antipode_inv = data.antipode_inv
        if antipode_inv is None:
            matrix = inverse(data.antipode.matrix, b.field)
            assert matrix is not None
            antipode_inv = LinMap(b.space, b.space, matrix, b.field)
        logger.info(f"Verified weak Hopf algebra of dim {b.dim} over {b.field}")
        return cls(data=data, antipode_inv=antipode_inv, report=report)

    @property
    def bialgebra(self) -> WeakBialgebra:
        return self.data.bialgebra

    @property
    def algebra(self) -> StructuredAlgebra:
        return self.data.bialgebra.algebra

    @property
    def coalgebra(self) -> StructuredCoalgebra:
        return self.data.bialgebra.coalgebra

    @property
    def antipode(self) -> LinMap:
        return self.data.antipode

    @property
    def space(self) -> FinSpace:
        return self.bialgebra.space

    @property
    def field(self) -> Field:
        return self.bialgebra.field

    @property
    def dim(self) -> int:
        return self.bialgebra.dim

    @cached_property
    def pi_left(self) -> LinMap:
        return canonical_projector(self.bialgebra, "L")

    @cached_property
    def pi_right(self) -> LinMap:
        return canonical_projector(self.bialgebra, "R")

    @cached_property
    def h_left(self) -> Subspace:
        return counital_subalgebra(self.bialgebra, "L")

    @cached_property
    def h_right(self) -> Subspace:
        return counital_subalgebra(self.bialgebra, "R")

    def subalgebra(self, side: Side) -> Subspace:
        return self.h_left if side == "L" else self.h_right
