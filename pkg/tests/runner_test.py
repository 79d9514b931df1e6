import os

import pytest

from weak_crossed.crossed import AG_COCYCLE_IDS, BB_COCYCLE_IDS, MEASURING_IDS
from weak_crossed.errors import CrossedError
from weak_crossed.report import ConditionReport, ReportDocument, Verdict
from weak_crossed.runner import (
    MAX_WORKERS_ENV,
    NamedCheck,
    RunConfig,
    check_conditions,
    run_checks,
    run_conditions,
)


@pytest.fixture(params=[1, 4])
def config(request):
    return RunConfig.with_workers(request.param)


def test_config_from_env():
    assert RunConfig.from_env() == RunConfig(max_workers=1, parallel=False)
    os.environ[MAX_WORKERS_ENV] = "3"
    assert RunConfig.from_env() == RunConfig(max_workers=3, parallel=True)


@pytest.mark.parametrize("raw", ["many", "0", "-2"])
def test_config_ignores_invalid_workers(raw, caplog):
    os.environ[MAX_WORKERS_ENV] = raw
    assert RunConfig.from_env().max_workers == 1
    assert f"Ignoring {MAX_WORKERS_ENV}" in caplog.text


@pytest.mark.asyncio
async def test_run_checks_keeps_submission_order(config):
    checks = [
        NamedCheck(name, lambda name=name: ConditionReport.single(Verdict(condition=name, passed=True)))
        for name in ("c", "a", "b")
    ]
    report = await run_checks(checks, config)
    assert report.ids == ("c", "a", "b")


@pytest.mark.asyncio
async def test_run_checks_turns_errors_into_verdicts(config):
    def refuse():
        raise CrossedError("needs (10)")

    def crash():
        raise RuntimeError("boom")

    report = await run_checks([NamedCheck("refuse", refuse), NamedCheck("crash", crash)], config)
    assert report["refuse"].passed is False
    assert report["refuse"].note == "needs (10)"
    assert report["crash"].note == "RuntimeError: boom"


@pytest.mark.asyncio
async def test_worker_count_does_not_change_the_report(groupoid2):
    m, c = groupoid2.measuring, groupoid2.cocycle
    serial = await run_conditions(m, c, "all", RunConfig.with_workers(1))
    parallel = await run_conditions(m, c, "all", RunConfig.with_workers(4))
    assert serial.ids == parallel.ids
    assert serial.outcomes() == parallel.outcomes()
    rendered = [
        ReportDocument(version="test", digest="-", report=report).render_text()
        for report in (serial, parallel)
    ]
    assert rendered[0] == rendered[1]
    assert groupoid2.mismatches(groupoid2.hopf.report + serial) == []


def test_condition_sets(paper):
    bb = check_conditions(paper.measuring, paper.cocycle, "bb")
    ag = check_conditions(paper.measuring, paper.cocycle, "ag")
    assert set(MEASURING_IDS + BB_COCYCLE_IDS) <= set(bb.ids)
    assert not set(AG_COCYCLE_IDS) - {"11"} & set(bb.ids)
    assert set(AG_COCYCLE_IDS) <= set(ag.ids)
    assert "10" not in ag.ids


def test_without_a_cocycle_only_condition_11_is_checked(paper):
    report = check_conditions(paper.measuring, None)
    assert report["11"].passed is False
    for c_id in ("5", "10", "12", "13", "17", "23", "base-action"):
        assert report[c_id].status == "SKIP"
    assert report.passed(*MEASURING_IDS)


def test_bb_set_without_a_cocycle_checks_only_measuring(paper):
    report = check_conditions(paper.measuring, None, "bb")
    assert report["11"].status == "SKIP"
    for c_id in ("5", "10", "12", "13"):
        assert report[c_id].status == "SKIP"
    assert report.passed(*MEASURING_IDS)
    assert report.all_passed()
