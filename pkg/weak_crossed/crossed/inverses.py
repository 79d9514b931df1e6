"""Convolution inverses of cocycles, and moving tables between ``H ⊗_{H^R} H``
and ``H ⊗ H``.

Every defining identity of an inverse is linear in the unknown table, so the
inverse is found by one exact solve over all entries ``X(e_h, e_k)[w]``.
"""

import logging

import numpy as np

from ..errors import CrossedError
from ..linalg import FinSpace, LinearSystem
from ..report import ConditionReport, Verdict
from .base import CocycleInverse, CocycleTable, Measuring, Variant
from .conditions import (
    AG_INVERSE_IDS,
    BB_INVERSE_IDS,
    check_ag_inverse,
    check_balance,
    check_bb_inverse,
)
from .evaluate import absorb_left, pair_legs, product_one

logger = logging.getLogger(__name__)


class _TableSystem:
    """Linear identities in the entries of an unknown ``H × H → A`` table.

    An identity is assembled as a block of ``dim A`` rows from terms
    ``coefficient · u X(p, q) v`` with ``p``, ``q`` in ``H`` and ``u``, ``v`` in ``A``.
    """

    def __init__(self, m: Measuring, symbol: str):
        self.m = m
        h_labels, a_labels = m.h_space.labels, m.a_space.labels
        self.unknowns = FinSpace(
            tuple(
                f"{symbol}({h_labels[h]}, {h_labels[k]})[{a_labels[w]}]"
                for h in range(m.n_h)
                for k in range(m.n_h)
                for w in range(m.n_a)
            )
        )
        self.system = LinearSystem(self.unknowns, m.field)
        self._identity = m.field.identity(m.n_a)

    def block(self) -> np.ndarray:
        return self.m.field.zeros((self.m.n_a, self.unknowns.dim))

    def _sandwich(self, left: np.ndarray | None, right: np.ndarray | None) -> np.ndarray:
        """Matrix of ``w ↦ left · w · right``."""
        algebra = self.m.algebra
        matrix = self._identity if left is None else algebra.left_matrix(left)
        if right is not None:
            matrix = self.m.field.matmul(algebra.right_matrix(right), matrix)
        return matrix

    def put(
        self,
        block: np.ndarray,
        coefficient,
        p: np.ndarray,
        q: np.ndarray,
        left: np.ndarray | None = None,
        right: np.ndarray | None = None,
    ):
        m = self.m
        matrix = self._sandwich(left, right)
        for x in np.flatnonzero(p):
            for z in np.flatnonzero(q):
                start = (int(x) * m.n_h + int(z)) * m.n_a
                block[:, start : start + m.n_a] = block[:, start : start + m.n_a] + (
                    coefficient * p[x] * q[z]
                ) * matrix

    def add(self, block: np.ndarray, rhs: np.ndarray | None = None):
        for y in range(self.m.n_a):
            self.system.add(block[y], self.m.field.zero if rhs is None else rhs[y])

    def solve(self, free_value=None) -> np.ndarray | None:
        m = self.m
        free = None
        if free_value is not None:
            free = m.field.zeros(self.unknowns.dim)
            for j in range(self.unknowns.dim):
                free[j] = m.field.scalar(free_value)
        solution = self.system.solve(free)
        return None if solution is None else solution.reshape(m.n_h, m.n_h, m.n_a)


def _uniqueness(system: _TableSystem, table: np.ndarray, condition: str) -> Verdict:
    """Re-solve with every free variable set to one and compare tables."""
    reseeded = system.solve(free_value=1)
    nullity = system.system.nullity
    same = reseeded is not None and np.array_equal(reseeded, table)
    return Verdict(
        condition=condition,
        passed=nullity == 0 and same,
        checked=1,
        failures=int(not (nullity == 0 and same)),
        note=f"nullity {nullity}",
    )


def _absorption_rows(ts: _TableSystem, h: int, k: int, left_factor: bool):
    """``X(h, k) − Σ (h1k1·1) X(h2, k2)`` or ``X(h, k) − Σ X(h1, k1)(h2·(k2·1))``."""
    m = ts.m
    block = ts.block()
    ts.put(block, m.field.one, m.h_basis(h), m.h_basis(k))
    for coefficient, h1, h2, k1, k2 in pair_legs(m, h, k):
        if left_factor:
            ts.put(block, -coefficient, m.h_basis(h2), m.h_basis(k2), left=product_one(m, h1, k1))
        else:
            ts.put(
                block,
                -coefficient,
                m.h_basis(h1),
                m.h_basis(k1),
                right=m.act_basis(h2, m.ones[k2]),
            )
    ts.add(block)


def invert_bb(m: Measuring, c: CocycleTable) -> CocycleInverse | None:
    """Solve for ``σ̄`` on ``H ⊗_{H^L} H``; ``None`` when no inverse exists.

    Besides items (13)–(16) and ``H^L``-balance the system carries the
    normalization ``σ̄(h, k) = σ̄(h1, k1)(h2·(k2·1_A))``, which pins the solution.
    """
    sigma = c.table
    ts = _TableSystem(m, "σ̄")
    one = m.field.one
    for h in range(m.n_h):
        for k in range(m.n_h):
            _absorption_rows(ts, h, k, left_factor=True)
            _absorption_rows(ts, h, k, left_factor=False)

            first, second = ts.block(), ts.block()
            for coefficient, h1, h2, k1, k2 in pair_legs(m, h, k):
                ts.put(first, coefficient, m.h_basis(h2), m.h_basis(k2), left=sigma[h1, k1])
                ts.put(second, coefficient, m.h_basis(h1), m.h_basis(k1), right=sigma[h2, k2])
            ts.add(first, m.act_basis(h, m.ones[k]))
            ts.add(second, product_one(m, h, k))

    legs = m.hopf.bialgebra.legs
    for ell in m.hl_basis:
        l_one = m.one_of(ell)
        twisted = m.sinv(ell)
        for h in range(m.n_h):
            lh = m.hmul(ell, m.h_basis(h))
            sh = m.hmul(twisted, m.h_basis(h))
            hl = m.hmul(m.h_basis(h), ell)
            for k in range(m.n_h):
                e_h, e_k = m.h_basis(h), m.h_basis(k)
                left_linear = ts.block()
                ts.put(left_linear, one, lh, e_k)
                ts.put(left_linear, -one, e_h, e_k, left=l_one)
                ts.add(left_linear)

                right_linear = ts.block()
                ts.put(right_linear, one, sh, e_k)
                ts.put(right_linear, -one, e_h, e_k, right=l_one)
                ts.add(right_linear)

                fifteen = ts.block()
                for coefficient, h1, h2 in legs[h]:
                    ts.put(fifteen, coefficient, m.h_basis(h1), e_k, right=m.act_basis(h2, l_one))
                ts.put(fifteen, -one, e_h, m.hmul(twisted, e_k))
                ts.add(fifteen)

                balance = ts.block()
                ts.put(balance, one, hl, e_k)
                ts.put(balance, -one, e_h, m.hmul(ell, e_k))
                ts.add(balance)

    table = ts.solve()
    if table is None:
        logger.info("σ has no inverse: the defining system is inconsistent")
        return None
    report = check_bb_inverse(c, table) + ConditionReport.single(
        _uniqueness(ts, table, "bb-inverse-unique")
    )
    if ts.system.nullity:
        logger.warning(f"Inverse of σ is not pinned down: nullity {ts.system.nullity}")
    return CocycleInverse(cocycle=c, table=table, variant=Variant.BB, report=report)


def invert_ag(m: Measuring, c: CocycleTable) -> CocycleInverse | None:
    """Solve for ``ς̄`` from items (23) and (24); ``None`` when no inverse exists."""
    varsigma = c.table
    ts = _TableSystem(m, "ς̄")
    for h in range(m.n_h):
        for k in range(m.n_h):
            _absorption_rows(ts, h, k, left_factor=True)
            target = product_one(m, h, k)
            first, second = ts.block(), ts.block()
            for coefficient, h1, h2, k1, k2 in pair_legs(m, h, k):
                ts.put(first, coefficient, m.h_basis(h2), m.h_basis(k2), left=varsigma[h1, k1])
                ts.put(second, coefficient, m.h_basis(h1), m.h_basis(k1), right=varsigma[h2, k2])
            ts.add(first, target)
            ts.add(second, target)

    table = ts.solve()
    if table is None:
        logger.info("ς has no inverse: the defining system is inconsistent")
        return None
    report = check_ag_inverse(c, table) + ConditionReport.single(
        _uniqueness(ts, table, "ag-inverse-unique")
    )
    return CocycleInverse(cocycle=c, table=table, variant=Variant.AG, report=report)


def missing_inverse_report(variant: Variant) -> ConditionReport:
    """Failing verdicts for the items of an inverse that does not exist."""
    ids = BB_INVERSE_IDS if variant == Variant.BB else AG_INVERSE_IDS
    return ConditionReport(
        tuple(Verdict(condition=c_id, passed=False, note="no inverse exists") for c_id in ids)
    )


def tilde_from_bar(m: Measuring, bar: CocycleInverse) -> CocycleInverse:
    """``σ̃(h, k) = (h1k1·1_A) σ̄(h2, k2)``, verified against items (13)–(16)."""
    table = m.field.zeros((m.n_h, m.n_h, m.n_a))
    for h in range(m.n_h):
        for k in range(m.n_h):
            table[h, k] = absorb_left(m, bar.table, h, k)
    report = check_bb_inverse(bar.cocycle, table)
    if not report.all_passed():
        failing = report.first_failure()
        raise CrossedError(
            f"σ̃ fails item ({failing.condition}); the input does not satisfy (14)–(16)",
            report,
        )
    return CocycleInverse(cocycle=bar.cocycle, table=table, variant=Variant.BB, report=report)


def induce(c: CocycleTable) -> CocycleTable:
    """``ς = σ ∘ p``: the same table read on ``H ⊗ H``."""
    return c.retag(Variant.AG)


def descend(c: CocycleTable) -> tuple[CocycleTable | None, ConditionReport]:
    """Factor ``ς`` through ``H ⊗_{H^R} H`` when it is ``H^R``-balanced."""
    m = c.measuring
    report = check_balance(m, c.table, "R")
    if not report.passed("balance-R"):
        witness = report["balance-R"].witness
        logger.info(f"ς does not factor through H⊗_{{H^R}}H: {witness.render() if witness else ''}")
        return None, report
    return c.retag(Variant.BB), report


def transfer_inverse(bar: CocycleInverse) -> CocycleInverse | None:
    """Carry an inverse across the two notions of invertibility.

    ``σ̄ ↦ σ̄ ∘ q`` is checked against (23)–(24); an inverse of ``ς`` must be
    ``H^L``-balanced and satisfy (13)–(16) for the descended ``σ``.
    """
    c = bar.cocycle
    if bar.variant == Variant.BB:
        target = induce(c)
        report = check_ag_inverse(target, bar.table)
        variant = Variant.AG
    else:
        target, _ = descend(c)
        if target is None:
            logger.info("ς̄ does not transfer: ς is not H^R-balanced")
            return None
        report = check_bb_inverse(target, bar.table)
        variant = Variant.BB
    if not report.all_passed():
        failing = report.first_failure()
        logger.info(f"Inverse does not transfer: item ({failing.condition}) fails")
        return None
    return CocycleInverse(cocycle=target, table=bar.table, variant=variant, report=report)
