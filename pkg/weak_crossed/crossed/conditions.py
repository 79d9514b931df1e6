"""Checkers for the numbered crossed-product conditions.

Conditions are identified by the strings ``"1"`` to ``"24"`` plus a few named
identities. Quantifiers over ``H^L`` or ``H^R`` run over the echelon bases of
those subspaces; everything else runs over basis tuples. Two-part conditions
produce one verdict whose witness notes the failing half.
"""

import logging

import numpy as np

from ..errors import CrossedError
from ..hopf import Side
from ..linalg import outer, tensor_space
from ..report import ConditionReport, Tally, Verdict, tally_report
from .base import CocycleTable, Measuring, Variant
from .evaluate import (
    absorb_left,
    absorb_right,
    cocycle_sides,
    convolve,
    left_row,
    pair_legs,
    product_one,
    right_row,
    table_at,
    twisted_sides,
)

logger = logging.getLogger(__name__)

MEASURING_IDS = ("1", "2", "3", "4", "hl-hr-action")
BB_COCYCLE_IDS = ("balance-R", "5", "6", "7", "8", "9", "cocycle-absorption")
EQUIV_IDS = ("10", "11", "12", "10-12-agree")
BB_INVERSE_IDS = ("13", "14", "15", "16", "balance-L")
AG_COCYCLE_IDS = ("11", "17", "18", "19", "20", "21", "22", "normality", "cocycle-absorption-left")
AG_INVERSE_IDS = ("23", "24")
AUX_IDS = ("base-action", "unit-absorption", "counit-absorption", "inverse-left-action")

# hypotheses of the equivalence of (10), (11) and (12)
EQUIV_PRECONDITIONS = ("1", "2", "6", "7")
# hypotheses of the balanced construction
BB_HYPOTHESES = ("1", "2", "3", "4", "balance-R", "5", "6", "7", "8", "9")
# hypotheses of the construction on the image of ∇_ρ
AG_HYPOTHESES = ("2", "4", "11", "17", "18", "19", "20", "21", "22")


def _tally(m: Measuring, condition: str, codomain=None) -> Tally:
    return Tally(condition, codomain or m.a_space, m.field)


def check_measuring(m: Measuring) -> ConditionReport:
    """Conditions (1)–(4) and ``h·(k·a) = hk·a`` for ``h`` in ``H^L H^R``."""
    h_labels, a_labels = m.h_space.labels, m.a_space.labels
    legs = m.hopf.bialgebra.legs
    pi_l = m.hopf.pi_left.matrix

    one = _tally(m, "1")
    for h in range(m.n_h):
        one.compare(m.ones[h], m.one_of(pi_l[:, h]), (h,), (h_labels[h],))

    two = _tally(m, "2")
    for h in range(m.n_h):
        for a in range(m.n_a):
            for b in range(m.n_a):
                rhs = m.field.zeros(m.n_a)
                for c, h1, h2 in legs[h]:
                    rhs = rhs + c * m.amul(
                        m.act_basis(h1, m.a_basis(a)), m.act_basis(h2, m.a_basis(b))
                    )
                two.compare(
                    m.act_basis(h, m.algebra.mult[a, b]),
                    rhs,
                    (h, a, b),
                    (h_labels[h], a_labels[a], a_labels[b]),
                )

    three = _tally(m, "3")
    for r, ell in enumerate(m.hl_basis):
        l_one = m.one_of(ell)
        l_name = m.h_name(ell)
        twisted = m.sinv(ell)
        for h in range(m.n_h):
            for a in range(m.n_a):
                acted = m.act_basis(h, m.a_basis(a))
                names = (l_name, h_labels[h], a_labels[a])
                three.compare(
                    m.act(m.hmul(twisted, m.h_basis(h)), m.a_basis(a)),
                    m.amul(acted, l_one),
                    (r, h, a),
                    names,
                    note="first half: S⁻¹(l)h·a = (h·a)(l·1)",
                )
                three.compare(
                    m.act(m.hmul(ell, m.h_basis(h)), m.a_basis(a)),
                    m.amul(l_one, acted),
                    (r, h, a),
                    names,
                    note="second half: lh·a = (l·1)(h·a)",
                )

    four = _tally(m, "4")
    for a in range(m.n_a):
        four.compare(m.act(m.unit_h, m.a_basis(a)), m.a_basis(a), (a,), (a_labels[a],))

    hl_hr = _tally(m, "hl-hr-action")
    for r, ell in enumerate(m.hl_basis):
        for s, right in enumerate(m.hr_basis):
            h = m.hmul(ell, right)
            for k in range(m.n_h):
                for a in range(m.n_a):
                    hl_hr.compare(
                        m.act(h, m.act_basis(k, m.a_basis(a))),
                        m.act(m.hmul(h, m.h_basis(k)), m.a_basis(a)),
                        (r, s, k, a),
                        (m.h_name(ell), m.h_name(right), h_labels[k], a_labels[a]),
                    )

    report = tally_report(one, two, three, four, hl_hr)
    logger.debug(f"Measuring conditions: {len(report.failed())} failing")
    return report


def _normal_pair(m: Measuring, table: np.ndarray, tally: Tally):
    labels = m.h_space.labels
    for h in range(m.n_h):
        tally.compare(left_row(m, table, m.unit_h, h), m.ones[h], (h,), (labels[h],), note="τ(1, h)")
        tally.compare(right_row(m, table, h, m.unit_h), m.ones[h], (h,), (labels[h],), note="τ(h, 1)")


def _cocycle_tally(m: Measuring, table: np.ndarray, condition: str) -> Tally:
    labels = m.h_space.labels
    tally = _tally(m, condition)
    for h in range(m.n_h):
        for k in range(m.n_h):
            for n in range(m.n_h):
                lhs, rhs = cocycle_sides(m, table, h, k, n)
                tally.compare(lhs, rhs, (h, k, n), (labels[h], labels[k], labels[n]))
    return tally


def _twisted_tally(m: Measuring, table: np.ndarray, condition: str) -> Tally:
    h_labels, a_labels = m.h_space.labels, m.a_space.labels
    tally = _tally(m, condition)
    for h in range(m.n_h):
        for k in range(m.n_h):
            for a in range(m.n_a):
                lhs, rhs = twisted_sides(m, table, h, k, m.a_basis(a))
                tally.compare(lhs, rhs, (h, k, a), (h_labels[h], h_labels[k], a_labels[a]))
    return tally


def _balance_tally(
    m: Measuring, table: np.ndarray, basis: list[np.ndarray], condition: str
) -> Tally:
    """``τ(h x, k) = τ(h, x k)`` for ``x`` over ``basis``."""
    labels = m.h_space.labels
    tally = _tally(m, condition)
    for h in range(m.n_h):
        for r, x in enumerate(basis):
            hx = m.hmul(m.h_basis(h), x)
            for k in range(m.n_h):
                tally.compare(
                    left_row(m, table, hx, k),
                    right_row(m, table, h, m.hmul(x, m.h_basis(k))),
                    (h, r, k),
                    (labels[h], m.h_name(x), labels[k]),
                )
    return tally


def check_balance(m: Measuring, table: np.ndarray, side: Side) -> ConditionReport:
    """``τ(hx, k) = τ(h, xk)`` for ``x`` in ``H^R`` (side ``"R"``) or ``H^L``."""
    basis = m.hr_basis if side == "R" else m.hl_basis
    return tally_report(_balance_tally(m, table, basis, f"balance-{side}"))


def _left_linear_tally(m: Measuring, table: np.ndarray, condition: str) -> Tally:
    """``τ(lh, k) = (l·1)τ(h, k)`` and ``τ(S⁻¹(l)h, k) = τ(h, k)(l·1)``."""
    labels = m.h_space.labels
    tally = _tally(m, condition)
    for r, ell in enumerate(m.hl_basis):
        l_one = m.one_of(ell)
        twisted = m.sinv(ell)
        for h in range(m.n_h):
            lh = m.hmul(ell, m.h_basis(h))
            sh = m.hmul(twisted, m.h_basis(h))
            for k in range(m.n_h):
                names = (m.h_name(ell), labels[h], labels[k])
                tally.compare(
                    left_row(m, table, lh, k),
                    m.amul(l_one, table[h, k]),
                    (r, h, k),
                    names,
                    note="first half: τ(lh, k) = (l·1)τ(h, k)",
                )
                tally.compare(
                    left_row(m, table, sh, k),
                    m.amul(table[h, k], l_one),
                    (r, h, k),
                    names,
                    note="second half: τ(S⁻¹(l)h, k) = τ(h, k)(l·1)",
                )
    return tally


def _absorption_tally(m: Measuring, table: np.ndarray, condition: str, side: str) -> Tally:
    labels = m.h_space.labels
    absorb = absorb_left if side == "left" else absorb_right
    tally = _tally(m, condition)
    for h in range(m.n_h):
        for k in range(m.n_h):
            tally.compare(table[h, k], absorb(m, table, h, k), (h, k), (labels[h], labels[k]))
    return tally


def check_bb_cocycle(c: CocycleTable) -> ConditionReport:
    """Balance over ``H^R``, the normal cocycle conditions (5)–(8) and the twisted
    module condition (9), plus ``σ(h, k) = σ(h1, k1)(h2 k2 · 1_A)``.
    """
    if c.variant != Variant.BB:
        logger.warning(f"Checking a {c.variant} table against the conditions on H⊗_{{H^R}}H")
    m, sigma = c.measuring, c.table
    labels = m.h_space.labels
    legs = m.hopf.bialgebra.legs

    six = _tally(m, "6")
    for r, ell in enumerate(m.hl_basis):
        l_one = m.one_of(ell)
        for h in range(m.n_h):
            for k in range(m.n_h):
                lhs = m.field.zeros(m.n_a)
                for coefficient, h1, h2 in legs[h]:
                    lhs = lhs + coefficient * m.amul(m.act_basis(h1, l_one), sigma[h2, k])
                rhs = right_row(m, sigma, h, m.hmul(ell, m.h_basis(k)))
                six.compare(lhs, rhs, (h, r, k), (labels[h], m.h_name(ell), labels[k]))

    seven = _tally(m, "7")
    _normal_pair(m, sigma, seven)

    report = tally_report(
        _balance_tally(m, sigma, m.hr_basis, "balance-R"),
        _left_linear_tally(m, sigma, "5"),
        six,
        seven,
        _cocycle_tally(m, sigma, "8"),
        _twisted_tally(m, sigma, "9"),
        _absorption_tally(m, sigma, "cocycle-absorption", "right"),
    )
    logger.debug(f"Cocycle conditions: {len(report.failed())} failing")
    return report


def _condition_10(m: Measuring) -> Tally:
    labels = m.h_space.labels
    tally = _tally(m, "10")
    for h in range(m.n_h):
        for r, ell in enumerate(m.hl_basis):
            tally.compare(
                m.act_basis(h, m.one_of(ell)),
                m.one_of(m.hmul(m.h_basis(h), ell)),
                (h, r),
                (labels[h], m.h_name(ell)),
            )
    return tally


def _condition_11(m: Measuring) -> Tally:
    labels = m.h_space.labels
    tally = _tally(m, "11")
    for h in range(m.n_h):
        for k in range(m.n_h):
            tally.compare(
                m.act_basis(h, m.ones[k]), product_one(m, h, k), (h, k), (labels[h], labels[k])
            )
    return tally


def check_condition_11(m: Measuring) -> ConditionReport:
    """Condition (11) on its own; it needs no cocycle."""
    return tally_report(_condition_11(m))


def _condition_12(c: CocycleTable) -> Tally:
    m = c.measuring
    labels = m.h_space.labels
    tally = _tally(m, "12")
    for h in range(m.n_h):
        for r, ell in enumerate(m.hl_basis):
            tally.compare(
                c(m.h_basis(h), ell),
                c(m.hmul(m.h_basis(h), ell), m.unit_h),
                (h, r),
                (labels[h], m.h_name(ell)),
            )
    return tally


def check_equiv_10_12(
    m: Measuring, c: CocycleTable, prerequisites: ConditionReport | None = None
) -> ConditionReport:
    """Conditions (10), (11), (12) and whether the three verdicts agree.

    Refuses with a ``CrossedError`` unless (1), (2), (6) and (7) hold; pass the
    reports already computed for them as ``prerequisites`` to avoid re-checking.
    """
    if prerequisites is None or not all(c_id in prerequisites for c_id in EQUIV_PRECONDITIONS):
        prerequisites = check_measuring(m) + check_bb_cocycle(c)
    failing = [c_id for c_id in EQUIV_PRECONDITIONS if not prerequisites.passed(c_id)]
    if failing:
        raise CrossedError(
            "The equivalence of (10), (11) and (12) needs (1), (2), (6) and (7); "
            f"failing: {', '.join(failing)}",
            prerequisites.only(*EQUIV_PRECONDITIONS),
        )
    report = tally_report(_condition_10(m), _condition_11(m), _condition_12(c))
    outcomes = {report[c_id].passed for c_id in ("10", "11", "12")}
    agree = Verdict(
        condition="10-12-agree",
        passed=len(outcomes) == 1,
        checked=1,
        failures=int(len(outcomes) != 1),
        note=", ".join(f"({c_id}) {report[c_id].status}" for c_id in ("10", "11", "12")),
    )
    return report + ConditionReport.single(agree)


def check_ag_cocycle(c: CocycleTable) -> ConditionReport:
    """Condition (11), the cocycle conditions (17)–(22), normality and
    ``(h1 k1 · 1_A) ς(h2, k2) = ς(h, k)``.
    """
    if c.variant != Variant.AG:
        logger.warning(f"Checking a {c.variant} table against the conditions on H⊗H")
    m, varsigma = c.measuring, c.table
    labels, a_labels = m.h_space.labels, m.a_space.labels
    legs = m.hopf.bialgebra.legs
    unit_legs = m.unit_legs

    twenty = _tally(m, "20")
    twenty_one = _tally(m, "21")
    for h in range(m.n_h):
        rhs = m.field.zeros(m.n_a)
        for c_h, h1, h2 in legs[h]:
            for c_u, u1, u2 in unit_legs:
                rhs = rhs + (c_h * c_u) * m.amul(m.act_basis(h1, m.ones[u1]), varsigma[h2, u2])
        twenty.compare(m.ones[h], rhs, (h,), (labels[h],))
        rhs = m.field.zeros(m.n_a)
        for c_u, u1, u2 in unit_legs:
            rhs = rhs + c_u * m.amul(m.ones[u1], varsigma[u2, h])
        twenty_one.compare(m.ones[h], rhs, (h,), (labels[h],))

    twenty_two = Tally("22", tensor_space(m.a_space, m.h_space), m.field)
    for a in range(m.n_a):
        lhs = m.field.zeros(m.n_a * m.n_h)
        rhs = m.field.zeros(m.n_a * m.n_h)
        for c_u, u1, u2 in unit_legs:
            leg = m.h_basis(u2)
            lhs = lhs + c_u * outer(m.amul(m.a_basis(a), m.ones[u1]), leg)
            rhs = rhs + c_u * outer(m.act_basis(u1, m.a_basis(a)), leg)
        twenty_two.compare(lhs, rhs, (a,), (a_labels[a],))

    normality = _tally(m, "normality")
    _normal_pair(m, varsigma, normality)

    report = tally_report(
        _condition_11(m),
        _cocycle_tally(m, varsigma, "17"),
        _twisted_tally(m, varsigma, "18"),
        _absorption_tally(m, varsigma, "19", "right"),
        twenty,
        twenty_one,
        twenty_two,
        normality,
        _absorption_tally(m, varsigma, "cocycle-absorption-left", "left"),
    )
    logger.debug(f"Cocycle conditions on H⊗H: {len(report.failed())} failing")
    return report


def check_bb_inverse(c: CocycleTable, bar: np.ndarray) -> ConditionReport:
    """Items (13)–(16) and balance over ``H^L`` for a candidate ``σ̄``."""
    m, sigma = c.measuring, c.table
    bar = m.field.coerce(bar)
    labels = m.h_space.labels
    legs = m.hopf.bialgebra.legs

    fifteen = _tally(m, "15")
    for r, ell in enumerate(m.hl_basis):
        l_one = m.one_of(ell)
        twisted = m.sinv(ell)
        for h in range(m.n_h):
            for k in range(m.n_h):
                lhs = m.field.zeros(m.n_a)
                for coefficient, h1, h2 in legs[h]:
                    lhs = lhs + coefficient * m.amul(bar[h1, k], m.act_basis(h2, l_one))
                fifteen.compare(
                    lhs,
                    right_row(m, bar, h, m.hmul(twisted, m.h_basis(k))),
                    (h, r, k),
                    (labels[h], m.h_name(ell), labels[k]),
                )

    sixteen = _tally(m, "16")
    for h in range(m.n_h):
        for k in range(m.n_h):
            names = (labels[h], labels[k])
            sixteen.compare(
                convolve(m, table_at(sigma), table_at(bar), h, k),
                m.act_basis(h, m.ones[k]),
                (h, k),
                names,
                note="first half: σ(h1, k1)σ̄(h2, k2) = h·(k·1)",
            )
            sixteen.compare(
                convolve(m, table_at(bar), table_at(sigma), h, k),
                product_one(m, h, k),
                (h, k),
                names,
                note="second half: σ̄(h1, k1)σ(h2, k2) = hk·1",
            )

    return tally_report(
        _absorption_tally(m, bar, "13", "left"),
        _left_linear_tally(m, bar, "14"),
        fifteen,
        sixteen,
        _balance_tally(m, bar, m.hl_basis, "balance-L"),
    )


def check_ag_inverse(c: CocycleTable, bar: np.ndarray) -> ConditionReport:
    """Items (23) and (24) for a candidate ``ς̄``."""
    m, varsigma = c.measuring, c.table
    bar = m.field.coerce(bar)
    labels = m.h_space.labels
    twenty_four = _tally(m, "24")
    for h in range(m.n_h):
        for k in range(m.n_h):
            target = product_one(m, h, k)
            names = (labels[h], labels[k])
            twenty_four.compare(
                convolve(m, table_at(varsigma), table_at(bar), h, k),
                target,
                (h, k),
                names,
                note="first half: ς(h1, k1)ς̄(h2, k2) = hk·1",
            )
            twenty_four.compare(
                convolve(m, table_at(bar), table_at(varsigma), h, k),
                target,
                (h, k),
                names,
                note="second half: ς̄(h1, k1)ς(h2, k2) = hk·1",
            )
    return tally_report(_absorption_tally(m, bar, "23", "left"), twenty_four)


def check_aux_lemmas(m: Measuring, c: CocycleTable) -> ConditionReport:
    """Identities that hold under the conditions on ``H⊗H`` and are used to
    factor ``ς`` through ``H ⊗_{H^R} H``.
    """
    if c.variant != Variant.AG:
        logger.warning("Auxiliary identities are stated for a cocycle on H⊗H")
    varsigma = c.table
    labels, a_labels = m.h_space.labels, m.a_space.labels
    legs = m.hopf.bialgebra.legs
    pairing = m.hopf.bialgebra.counit_pairing

    base = _tally(m, "base-action")
    named = [(f"H^L[{r}]", x) for r, x in enumerate(m.hl_basis)]
    named += [(f"H^R[{r}]", x) for r, x in enumerate(m.hr_basis)]
    for r, (side, x) in enumerate(named):
        for h in range(m.n_h):
            for a in range(m.n_a):
                base.compare(
                    m.act(x, m.act_basis(h, m.a_basis(a))),
                    m.act(m.hmul(x, m.h_basis(h)), m.a_basis(a)),
                    (r, h, a),
                    (f"{side} = {m.h_name(x)}", labels[h], a_labels[a]),
                )

    absorption = _tally(m, "unit-absorption")
    counit = _tally(m, "counit-absorption")
    for h in range(m.n_h):
        for k in range(m.n_h):
            before = m.field.zeros(m.n_a)
            after = m.field.zeros(m.n_a)
            for coefficient, h1, h2 in legs[h]:
                before = before + coefficient * m.amul(m.ones[h1], varsigma[h2, k])
                after = after + coefficient * m.amul(varsigma[h1, k], m.ones[h2])
            names = (labels[h], labels[k])
            absorption.compare(before, varsigma[h, k], (h, k), names, note="(h1·1)ς(h2, k)")
            absorption.compare(after, varsigma[h, k], (h, k), names, note="ς(h1, k)(h2·1)")
            lhs = m.field.zeros(m.n_a)
            for coefficient, h1, h2, k1, k2 in pair_legs(m, h, k):
                lhs = lhs + (coefficient * pairing[h1, k1]) * varsigma[h2, k2]
            counit.compare(lhs, varsigma[h, k], (h, k), names)

    inverse_action = _tally(m, "inverse-left-action")
    for r, ell in enumerate(m.hl_basis):
        l_one = m.one_of(ell)
        twisted = m.sinv(ell)
        for h in range(m.n_h):
            for a in range(m.n_a):
                acted = m.act_basis(h, m.a_basis(a))
                inverse_action.compare(
                    m.amul(acted, l_one),
                    m.act(twisted, acted),
                    (r, h, a),
                    (m.h_name(ell), labels[h], a_labels[a]),
                )

    return tally_report(base, absorption, counit, inverse_action)
