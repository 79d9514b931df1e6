"""The two crossed product constructions on ``A ⊗ H``.

Both multiply representatives with

    (a ⊗ h)(b ⊗ k) = a(h1·b)τ(h2, k1) ⊗ h3 k2

and differ in the carrier: the quotient of ``A ⊗ H`` by the ``H^L``-balancing
relations, or the image of the idempotent ``∇_ρ``.
"""

import logging

import numpy as np

from ..errors import CrossedError, NotIdempotentError
from ..hopf import StructuredAlgebra, verify_algebra
from ..linalg import (
    BilinearMap,
    FinSpace,
    LinMap,
    Vec,
    image_of_idempotent,
    outer,
    quotient_by,
    tensor_space,
)
from ..report import ConditionReport, Tally, Verdict, summary_verdict, tally_report
from .base import CocycleTable, CrossedProduct, Measuring, Variant
from .conditions import (
    AG_HYPOTHESES,
    BB_HYPOTHESES,
    check_ag_cocycle,
    check_bb_cocycle,
    check_measuring,
)

logger = logging.getLogger(__name__)

BB_PRODUCT_IDS = (
    "well-defined",
    "hypotheses",
    "assoc",
    "unit",
    "comodule",
    "delta-well-defined",
)
AG_PRODUCT_IDS = ("nabla-idempotent", "well-defined", "hypotheses", "assoc", "unit", "comodule")


def ambient_space(m: Measuring) -> FinSpace:
    """``A ⊗ H``, indexed ``a * dim H + h``."""
    return tensor_space(m.a_space, m.h_space)


def ambient_product(m: Measuring, c: CocycleTable) -> BilinearMap:
    """The crossed product formula on basis tensors of ``A ⊗ H``."""
    n_a, n_h, field = m.n_a, m.n_h, m.field
    space = ambient_space(m)
    size = space.dim
    bialgebra = m.hopf.bialgebra
    h_mult = bialgebra.algebra.mult
    a_product = m.algebra.product
    table = field.zeros((size, size, size))
    for h in range(n_h):
        for k in range(n_h):
            terms = [
                (c3 * d, h1, c.table[h2, k1], h_mult[h3, k2])
                for c3, h1, h2, h3 in bialgebra.legs3[h]
                for d, k1, k2 in bialgebra.legs[k]
            ]
            if not terms:
                continue
            for b in range(n_a):
                acted = [
                    (coefficient, m.act_basis(h1, m.a_basis(b)), sigma, hk)
                    for coefficient, h1, sigma, hk in terms
                ]
                for a in range(n_a):
                    value = field.zeros(size)
                    for coefficient, x, sigma, hk in acted:
                        value = value + coefficient * outer(
                            m.amul(a_product.left_fixed(a, x), sigma), hk
                        )
                    table[a * n_h + h, b * n_h + k] = value
    return BilinearMap(space, space, space, table, field)


def ambient_delta(m: Measuring) -> np.ndarray:
    """``a ⊗ h ↦ (a ⊗ h1) ⊗ h2`` as a matrix ``A⊗H → (A⊗H)⊗H``."""
    n_a, n_h, field = m.n_a, m.n_h, m.field
    size = n_a * n_h
    matrix = field.zeros((size * n_h, size))
    legs = m.hopf.bialgebra.legs
    for a in range(n_a):
        for h in range(n_h):
            column = field.zeros(size * n_h)
            for coefficient, h1, h2 in legs[h]:
                column = column + coefficient * outer(
                    field.unit_vector(size, a * n_h + h1), m.h_basis(h2)
                )
            matrix[:, a * n_h + h] = column
    return matrix


def _carrier_delta(
    m: Measuring, carrier: FinSpace, embedding: LinMap, projection: LinMap
) -> LinMap:
    """``(projection ⊗ id) ∘ Δ_amb ∘ embedding``."""
    field, n_h = m.field, m.n_h
    lifted = field.matmul(ambient_delta(m), embedding.matrix)
    matrix = field.zeros((carrier.dim * n_h, carrier.dim))
    for x in range(carrier.dim):
        legs = lifted[:, x].reshape(-1, n_h)
        matrix[:, x] = field.matmul(projection.matrix, legs).reshape(-1)
    return LinMap(carrier, tensor_space(carrier, m.h_space), matrix, field)


def check_comodule(m: Measuring, delta: LinMap) -> ConditionReport:
    """Coassociativity and counitality of ``δ`` against ``Δ_H`` and ``ε``."""
    field, n_h = m.field, m.n_h
    carrier = delta.domain
    d = carrier.dim
    comult = m.hopf.coalgebra.comult
    counit = m.hopf.coalgebra.counit
    images = delta.matrix.T.reshape(d, d, n_h)
    flat = images.reshape(d, d * n_h)
    cube = tensor_space(delta.codomain, m.h_space)
    coassoc = Tally("comodule-coassoc", cube, field)
    counital = Tally("comodule-counit", carrier, field)
    identity = field.identity(d)
    for x in range(d):
        legs = images[x]
        twice = (
            field.matmul(legs.T, flat).reshape(n_h, d, n_h).transpose(1, 2, 0).reshape(-1)
        )
        split = field.matmul(legs, comult.reshape(n_h, n_h * n_h)).reshape(-1)
        coassoc.compare(twice, split, (x,), (carrier.labels[x],))
        counital.compare(
            field.matmul(legs, counit.reshape(-1, 1)).reshape(-1),
            identity[x],
            (x,),
            (carrier.labels[x],),
        )
    parts = tally_report(coassoc, counital)
    return ConditionReport.single(
        summary_verdict("comodule", parts, ("comodule-coassoc", "comodule-counit"))
    )


def balancing_relations(m: Measuring) -> list[np.ndarray]:
    """``a(l·1_A) ⊗ h − a ⊗ lh`` for basis ``a``, ``h`` and ``l`` in ``H^L``."""
    relations = []
    for ell in m.hl_basis:
        l_one = m.one_of(ell)
        for a in range(m.n_a):
            shifted = m.amul(m.a_basis(a), l_one)
            for h in range(m.n_h):
                relations.append(
                    outer(shifted, m.h_basis(h)) - outer(m.a_basis(a), m.hmul(ell, m.h_basis(h)))
                )
    return relations


def _well_defined(
    product: BilinearMap,
    generators: list[np.ndarray],
    kills,
    space: FinSpace,
    target: FinSpace,
    condition: str = "well-defined",
) -> Tally:
    """``kills(g·x)`` and ``kills(x·g)`` vanish for every generator and basis ``x``."""
    field = product.field
    tally = Tally(condition, target, field)
    zero = field.zeros(target.dim)
    for r, g in enumerate(generators):
        for x in range(space.dim):
            e_x = field.unit_vector(space.dim, x)
            tally.compare(
                kills(product(g, e_x)), zero, (r, x), (f"relation[{r}]", space.labels[x]),
                note="left argument shifted",
            )
            tally.compare(
                kills(product(e_x, g)), zero, (r, x), (f"relation[{r}]", space.labels[x]),
                note="right argument shifted",
            )
    return tally


def build_bb(
    m: Measuring, c: CocycleTable, conditions: ConditionReport | None = None
) -> CrossedProduct:
    """The crossed product on ``A ⊗_{H^L} H``.

    Well-definedness, the algebra laws and the comodule axioms are recorded in
    the product's report; call ``raise_for_failure`` to turn them into errors.
    Verified only when (1)–(9) and balance over ``H^R`` hold as well;
    ``conditions`` may carry reports already computed for them.
    """
    if c.variant != Variant.BB:
        logger.warning(f"Building the balanced crossed product from a {c.variant} table")
    field = m.field
    space = ambient_space(m)
    quotient = quotient_by(space, balancing_relations(m), field)
    carrier = quotient.quotient
    product = ambient_product(m, c)
    relations = quotient.relations.rows()

    well_defined = _well_defined(product, relations, quotient.project.apply, space, carrier)

    section = quotient.section.matrix
    mult = field.zeros((carrier.dim, carrier.dim, carrier.dim))
    for i in range(carrier.dim):
        for j in range(carrier.dim):
            mult[i, j] = quotient.project.apply(product(section[:, i], section[:, j]))
    unit = quotient.project.apply(outer(m.algebra.unit, m.unit_h))
    algebra = StructuredAlgebra(carrier, mult, unit, field)

    lifted_delta = ambient_delta(m)
    delta_tally = Tally("delta-well-defined", tensor_space(carrier, m.h_space), field)
    zero = field.zeros(carrier.dim * m.n_h)
    for r, g in enumerate(relations):
        legs = field.matmul(lifted_delta, g.reshape(-1, 1)).reshape(-1, m.n_h)
        delta_tally.compare(
            field.matmul(quotient.project.matrix, legs).reshape(-1),
            zero,
            (r,),
            (f"relation[{r}]",),
        )
    delta = _carrier_delta(m, carrier, quotient.section, quotient.project)

    if conditions is None or not all(c_id in conditions for c_id in BB_HYPOTHESES):
        conditions = check_measuring(m) + check_bb_cocycle(c)
    hypotheses = summary_verdict("hypotheses", conditions, BB_HYPOTHESES)
    report = (
        tally_report(well_defined)
        + ConditionReport.single(hypotheses)
        + verify_algebra(algebra)
        + check_comodule(m, delta)
        + tally_report(delta_tally)
    )
    logger.info(
        f"Built the balanced crossed product: dim {carrier.dim}, "
        f"{quotient.relations.dim} relations, verified={report.all_passed()}"
    )
    return CrossedProduct(
        provenance=Variant.BB,
        algebra=algebra,
        ambient=space,
        embedding=quotient.section,
        projection=quotient.project,
        delta=delta,
        report=report,
        measuring=m,
    )


def nabla(m: Measuring) -> LinMap:
    """``∇_ρ(a ⊗ h) = a(h1·1_A) ⊗ h2``."""
    field = m.field
    space = ambient_space(m)
    matrix = field.zeros((space.dim, space.dim))
    legs = m.hopf.bialgebra.legs
    for a in range(m.n_a):
        for h in range(m.n_h):
            column = field.zeros(space.dim)
            for coefficient, h1, h2 in legs[h]:
                column = column + coefficient * outer(
                    m.amul(m.a_basis(a), m.ones[h1]), m.h_basis(h2)
                )
            matrix[:, a * m.n_h + h] = column
    return LinMap(space, space, matrix, field)


def preunit(m: Measuring) -> Vec:
    """``ν(1) = 1(1)·1_A ⊗ 1(2)``."""
    field = m.field
    value = field.zeros(m.n_a * m.n_h)
    for coefficient, u1, u2 in m.unit_legs:
        value = value + coefficient * outer(m.ones[u1], m.h_basis(u2))
    return Vec(ambient_space(m), value, field)


def check_nabla(m: Measuring) -> ConditionReport:
    """Idempotence of ``∇_ρ`` and ``ν(1) = ∇_ρ(1_A ⊗ 1)``."""
    field = m.field
    nab = nabla(m)
    space = nab.domain
    idempotent = Tally("nabla-idempotent", space, field)
    square = nab.compose(nab)
    for x in range(space.dim):
        idempotent.compare(square.matrix[:, x], nab.matrix[:, x], (x,), (space.labels[x],))
    unit = Tally("preunit", space, field)
    unit.compare(
        preunit(m).coords, nab.apply(outer(m.algebra.unit, m.unit_h)), (), ("1_A⊗1",)
    )
    return tally_report(idempotent, unit)


def build_ag(
    m: Measuring, c: CocycleTable, conditions: ConditionReport | None = None
) -> CrossedProduct:
    """The crossed product on the image of ``∇_ρ``.

    Verified only when the algebra laws and the hypotheses (2), (4), (11),
    (17)–(22) hold; ``conditions`` may carry reports already computed for them.
    Raises ``CrossedError`` only when ``∇_ρ`` is not idempotent.
    """
    if c.variant != Variant.AG:
        logger.warning(f"Building the crossed product on H⊗H from a {c.variant} table")
    field = m.field
    nab = nabla(m)
    try:
        sub, incl, retr = image_of_idempotent(nab)
    except NotIdempotentError as e:
        report = check_nabla(m).only("nabla-idempotent")
        raise CrossedError(f"∇_ρ is not idempotent: {e.message}", report) from e
    space = nab.domain
    carrier = incl.domain
    product = ambient_product(m, c)

    # representatives x and ∇(x) must give the same product
    well_defined = _well_defined(
        product,
        [nab.matrix[:, x] - field.unit_vector(space.dim, x) for x in range(space.dim)],
        nab.apply,
        space,
        space,
    )

    mult = field.zeros((carrier.dim, carrier.dim, carrier.dim))
    for i in range(carrier.dim):
        for j in range(carrier.dim):
            mult[i, j] = retr.apply(product(incl.matrix[:, i], incl.matrix[:, j]))
    unit = retr.apply(outer(m.algebra.unit, m.unit_h))
    algebra = StructuredAlgebra(carrier, mult, unit, field)
    delta = _carrier_delta(m, carrier, incl, retr)

    if conditions is None or not all(c_id in conditions for c_id in AG_HYPOTHESES):
        conditions = check_measuring(m).only("2", "4") + check_ag_cocycle(c)
    hypotheses = summary_verdict("hypotheses", conditions, AG_HYPOTHESES)
    report = (
        ConditionReport.single(
            Verdict(condition="nabla-idempotent", passed=True, checked=1, note=f"rank {sub.dim}")
        )
        + tally_report(well_defined)
        + ConditionReport.single(hypotheses)
        + verify_algebra(algebra)
        + check_comodule(m, delta)
    )
    logger.info(
        f"Built the crossed product on the image of ∇_ρ: dim {carrier.dim}, "
        f"verified={report.all_passed()}"
    )
    return CrossedProduct(
        provenance=Variant.AG,
        algebra=algebra,
        ambient=space,
        embedding=incl,
        projection=retr,
        delta=delta,
        report=report,
        measuring=m,
    )
