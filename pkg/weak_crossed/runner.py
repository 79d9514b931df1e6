"""Concurrent evaluation of independent condition checks.

Checks run in worker threads under a semaphore; their reports are merged in
submission order, so the result does not depend on the number of workers.
"""

import asyncio
import logging
import os
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Literal

from .crossed import (
    AG_COCYCLE_IDS,
    AG_INVERSE_IDS,
    AUX_IDS,
    BB_COCYCLE_IDS,
    BB_INVERSE_IDS,
    EQUIV_IDS,
    EQUIV_PRECONDITIONS,
    CocycleTable,
    Measuring,
    Variant,
    check_ag_cocycle,
    check_aux_lemmas,
    check_bb_cocycle,
    check_condition_11,
    check_equiv_10_12,
    check_measuring,
    induce,
    invert_ag,
    invert_bb,
    missing_inverse_report,
)
from .errors import WeakCrossedError
from .report import ConditionReport, Verdict

logger = logging.getLogger(__name__)

ConditionSet = Literal["bb", "ag", "all"]
CONDITION_SETS: tuple[ConditionSet, ...] = ("bb", "ag", "all")

MAX_WORKERS_ENV = "WEAK_CROSSED_MAX_WORKERS"


@dataclass(frozen=True, kw_only=True)
class RunConfig:
    max_workers: int = 1
    parallel: bool = False

    @classmethod
    def from_env(cls) -> "RunConfig":
        raw = os.getenv(MAX_WORKERS_ENV, "1")
        try:
            workers = int(raw)
        except ValueError:
            logger.warning(f"Ignoring {MAX_WORKERS_ENV}={raw!r}: not an integer")
            workers = 1
        if workers < 1:
            logger.warning(f"Ignoring {MAX_WORKERS_ENV}={raw!r}: must be at least 1")
            workers = 1
        return cls(max_workers=workers, parallel=workers > 1)

    @classmethod
    def with_workers(cls, workers: int) -> "RunConfig":
        return cls(max_workers=workers, parallel=workers > 1)


@dataclass(frozen=True)
class NamedCheck:
    name: str
    run: Callable[[], ConditionReport]


async def _run_one(check: NamedCheck, semaphore: asyncio.Semaphore) -> ConditionReport:
    async with semaphore:
        try:
            report = await asyncio.to_thread(check.run)
        except WeakCrossedError as e:
            logger.warning(f"Check {check.name} failed: {e.message}")
            return ConditionReport.error(check.name, e.message)
        except Exception as e:
            logger.exception(f"Check {check.name} raised")
            return ConditionReport.error(check.name, f"{type(e).__name__}: {e}")
    logger.debug(f"Check {check.name}: {len(report)} verdicts, {len(report.failed())} failing")
    return report


async def run_checks(checks: Sequence[NamedCheck], config: RunConfig) -> ConditionReport:
    """Run ``checks`` and merge their reports in the order given."""
    semaphore = asyncio.Semaphore(config.max_workers if config.parallel else 1)
    reports = await asyncio.gather(*(_run_one(check, semaphore) for check in checks))
    merged = ConditionReport()
    for report in reports:
        merged = merged + report
    return merged


def _skipped(ids: Sequence[str], note: str) -> ConditionReport:
    return ConditionReport(tuple(Verdict(condition=c_id, passed=None, note=note) for c_id in ids))


def _bb_inverse(m: Measuring, c: CocycleTable) -> ConditionReport:
    bar = invert_bb(m, c)
    return missing_inverse_report(Variant.BB) if bar is None else bar.report


def _ag_inverse(m: Measuring, c: CocycleTable) -> ConditionReport:
    bar = invert_ag(m, c)
    return missing_inverse_report(Variant.AG) if bar is None else bar.report


def _equivalence(
    m: Measuring, c: CocycleTable | None, prior: ConditionReport, selection: ConditionSet
) -> ConditionReport:
    """(10)–(12), or (11) alone with the others skipped when their hypotheses fail.

    Without a cocycle nothing is checked here; the ``all`` set still gets (11)
    from the conditions on ``H⊗H``.
    """
    if c is None:
        ids = tuple(c_id for c_id in EQUIV_IDS if selection == "bb" or c_id != "11")
        return _skipped(ids, "not checked: no cocycle")
    missing = [c_id for c_id in EQUIV_PRECONDITIONS if not prior.passed(c_id)]
    if not missing:
        return check_equiv_10_12(m, c, prior)
    note = f"needs ({'), ('.join(missing)})"
    return (
        _skipped(("10",), f"not checked: {note}")
        + check_condition_11(m)
        + _skipped(("12", "10-12-agree"), f"not checked: {note}")
    )


async def run_conditions(
    m: Measuring, c: CocycleTable | None, selection: ConditionSet, config: RunConfig
) -> ConditionReport:
    """Every condition in ``selection``; cocycle ids are skipped when ``c`` is ``None``."""
    as_bb = None if c is None else c.retag(Variant.BB)
    as_ag = None if c is None else induce(c)
    no_cocycle = "not checked: no cocycle"

    first: list[NamedCheck] = [NamedCheck("measuring", lambda: check_measuring(m))]
    if selection in ("bb", "all"):
        if as_bb is None:
            first.append(NamedCheck("bb-cocycle", lambda: _skipped(BB_COCYCLE_IDS, no_cocycle)))
        else:
            first.append(NamedCheck("bb-cocycle", lambda: check_bb_cocycle(as_bb)))
    prior = await run_checks(first, config)

    second: list[NamedCheck] = []
    if selection in ("bb", "all"):
        second.append(
            NamedCheck("equivalence", lambda: _equivalence(m, as_bb, prior, selection))
        )
        if as_bb is None:
            second.append(NamedCheck("bb-inverse", lambda: _skipped(BB_INVERSE_IDS, no_cocycle)))
        else:
            second.append(NamedCheck("bb-inverse", lambda: _bb_inverse(m, as_bb)))
    if selection in ("ag", "all"):
        if as_ag is None:
            ag_ids = tuple(c_id for c_id in AG_COCYCLE_IDS if c_id != "11")
            second.append(
                NamedCheck(
                    "ag-cocycle",
                    lambda: check_condition_11(m) + _skipped(ag_ids, no_cocycle),
                )
            )
            second.append(NamedCheck("ag-inverse", lambda: _skipped(AG_INVERSE_IDS, no_cocycle)))
            second.append(NamedCheck("aux", lambda: _skipped(AUX_IDS, no_cocycle)))
        else:
            second.append(NamedCheck("ag-cocycle", lambda: check_ag_cocycle(as_ag)))
            second.append(NamedCheck("ag-inverse", lambda: _ag_inverse(m, as_ag)))
            second.append(NamedCheck("aux", lambda: check_aux_lemmas(m, as_ag)))
    report = prior + await run_checks(second, config)
    logger.info(
        f"Condition set {selection}: {len(report)} verdicts, {len(report.failed())} failing"
    )
    return report


def check_conditions(
    m: Measuring,
    c: CocycleTable | None,
    selection: ConditionSet = "all",
    config: RunConfig | None = None,
) -> ConditionReport:
    """Blocking wrapper around ``run_conditions``."""
    return asyncio.run(run_conditions(m, c, selection, config or RunConfig.from_env()))
