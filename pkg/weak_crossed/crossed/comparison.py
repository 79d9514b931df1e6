"""The comparison map between the two crossed products.

Under (1)–(10) the composite ``ψ = π ∘ i`` of the inclusion of the image of
``∇_ρ`` into ``A ⊗ H`` and the projection onto ``A ⊗_{H^L} H`` is an algebra
isomorphism, left ``A``-linear and right ``H``-colinear, with inverse ``φ``
given by ``i ∘ φ ∘ π = ∇_ρ``.
"""

import logging
from dataclasses import dataclass

from ..errors import CrossedError
from ..linalg import LinMap
from ..report import ConditionReport, Tally, tally_report
from .base import CocycleTable, CrossedProduct, Measuring
from .conditions import check_bb_cocycle, check_equiv_10_12, check_measuring
from .inverses import induce
from .products import build_ag, build_bb, nabla

logger = logging.getLogger(__name__)

STANDING_IDS = ("1", "2", "3", "4", "5", "6", "7", "8", "9")
ISO_IDS = (
    "psi-phi-identity",
    "phi-psi-identity",
    "psi-multiplicative",
    "psi-unital",
    "psi-left-linear",
    "psi-colinear",
    "pi-nabla",
    "nabla-incl",
)


def _identity_tally(condition: str, composite: LinMap) -> Tally:
    space = composite.domain
    tally = Tally(condition, composite.codomain, composite.field)
    identity = composite.field.identity(space.dim)
    for x in range(space.dim):
        tally.compare(composite.matrix[:, x], identity[:, x], (x,), (space.labels[x],))
    return tally


def verify_comparison(
    m: Measuring, bb: CrossedProduct, ag: CrossedProduct, psi: LinMap, phi: LinMap
) -> ConditionReport:
    """The isomorphism contract of ``ψ`` and the two identities with ``∇_ρ``."""
    field = m.field
    source, target = ag.space, bb.space

    multiplicative = Tally("psi-multiplicative", target, field)
    for x in range(source.dim):
        for y in range(source.dim):
            multiplicative.compare(
                psi.apply(ag.algebra.mult[x, y]),
                bb.algebra.multiply(psi.matrix[:, x], psi.matrix[:, y]),
                (x, y),
                (source.labels[x], source.labels[y]),
            )
    unital = Tally("psi-unital", target, field)
    unital.compare(psi.apply(ag.unit), bb.unit, (), ("1",))

    linear = Tally("psi-left-linear", target, field)
    for a in range(m.n_a):
        e_a = m.a_basis(a)
        for x in range(source.dim):
            linear.compare(
                psi.apply(ag.left_action(e_a, field.unit_vector(source.dim, x))),
                bb.left_action(e_a, psi.matrix[:, x]),
                (a, x),
                (m.a_space.labels[a], source.labels[x]),
            )

    colinear = Tally("psi-colinear", bb.delta.codomain, field)
    for x in range(source.dim):
        legs = ag.delta.matrix[:, x].reshape(source.dim, m.n_h)
        colinear.compare(
            bb.delta.apply(psi.matrix[:, x]),
            field.matmul(psi.matrix, legs).reshape(-1),
            (x,),
            (source.labels[x],),
        )

    nab = nabla(m)
    pi_nabla = Tally("pi-nabla", target, field)
    composite = bb.projection.compose(nab)
    for x in range(nab.domain.dim):
        pi_nabla.compare(
            composite.matrix[:, x],
            bb.projection.matrix[:, x],
            (x,),
            (nab.domain.labels[x],),
        )
    nabla_incl = Tally("nabla-incl", ag.ambient, field)
    fixed = nab.compose(ag.embedding)
    for x in range(source.dim):
        nabla_incl.compare(
            fixed.matrix[:, x], ag.embedding.matrix[:, x], (x,), (source.labels[x],)
        )

    return tally_report(
        _identity_tally("psi-phi-identity", psi.compose(phi)),
        _identity_tally("phi-psi-identity", phi.compose(psi)),
        multiplicative,
        unital,
        linear,
        colinear,
        pi_nabla,
        nabla_incl,
    )


def comparison_iso(
    m: Measuring, c: CocycleTable, conditions: ConditionReport | None = None
) -> tuple[LinMap, LinMap, ConditionReport]:
    """Build ``ψ`` and ``φ`` and verify the isomorphism contract.

    Refuses with a ``CrossedError`` unless (1)–(10) all hold.
    """
    if conditions is None:
        conditions = check_measuring(m) + check_bb_cocycle(c)
    failing = [c_id for c_id in STANDING_IDS if not conditions.passed(c_id)]
    if failing:
        raise CrossedError(
            f"The comparison needs (1)–(10); failing: {', '.join(failing)}",
            conditions.only(*STANDING_IDS),
        )
    equivalence = check_equiv_10_12(m, c, conditions)
    if not equivalence.passed("10"):
        witness = equivalence["10"].witness
        raise CrossedError(
            "The comparison needs (10), which fails"
            + (f" at {witness.render()}" if witness else "")
            + "; the construction on the image of ∇_ρ does not exist",
            conditions + equivalence,
        )
    bb = build_bb(m, c, conditions)
    ag = build_ag(m, induce(c))
    psi = bb.projection.compose(ag.embedding)
    phi = ag.projection.compose(bb.embedding)
    report = verify_comparison(m, bb, ag, psi, phi)
    logger.info(f"Comparison map of dim {ag.dim} → {bb.dim}: verified={report.all_passed()}")
    return psi, phi, report


@dataclass(frozen=True, kw_only=True, eq=False)
class ComparisonOutcome:
    """What ``compare_constructions`` found.

    ``confirmed`` says the instance agrees with the comparison theorem: either
    (10) holds and ``ψ`` verifies, or (10) fails and only the balanced
    construction verifies.
    """

    report: ConditionReport
    confirmed: bool
    stage: str
    message: str
    psi: LinMap | None = None
    bb: CrossedProduct | None = None
    ag: CrossedProduct | None = None


def compare_constructions(m: Measuring, c: CocycleTable) -> ComparisonOutcome:
    """Run (1)–(10), both constructions and, when (10) holds, the comparison map."""
    conditions = check_measuring(m) + check_bb_cocycle(c)
    failing = [c_id for c_id in STANDING_IDS if not conditions.passed(c_id)]
    if failing:
        first = conditions[failing[0]]
        witness = f" at {first.witness.render()}" if first.witness else ""
        return ComparisonOutcome(
            report=conditions,
            confirmed=False,
            stage="conditions",
            message=f"({failing[0]}) fails{witness}",
        )
    report = conditions + check_equiv_10_12(m, c, conditions)
    bb = build_bb(m, c, conditions)
    ag = build_ag(m, induce(c))
    if report.passed("10"):
        psi = bb.projection.compose(ag.embedding)
        iso = verify_comparison(m, bb, ag, psi, ag.projection.compose(bb.embedding))
        report = report + iso
        confirmed = bb.verified and ag.verified and iso.all_passed()
        message = (
            "ψ is a left A-linear, right H-colinear algebra isomorphism"
            if confirmed
            else "the comparison map fails to verify"
        )
        return ComparisonOutcome(
            report=report,
            confirmed=confirmed,
            stage="comparison",
            message=message,
            psi=psi,
            bb=bb,
            ag=ag,
        )
    witness = report["10"].witness
    confirmed = bb.verified and not ag.verified
    message = (
        "(10) fails"
        + (f" at {witness.render()}" if witness else "")
        + ": the balanced crossed product exists, the ×-construction does not"
    )
    if not confirmed:
        message += "; the constructions do not behave as predicted"
    return ComparisonOutcome(
        report=report, confirmed=confirmed, stage="constructions", message=message, bb=bb, ag=ag
    )

