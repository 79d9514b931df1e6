import numpy as np
import pytest

from weak_crossed.crossed import (
    AUX_IDS,
    BB_COCYCLE_IDS,
    EQUIV_IDS,
    MEASURING_IDS,
    CocycleTable,
    check_ag_cocycle,
    check_aux_lemmas,
    check_balance,
    check_bb_cocycle,
    check_condition_11,
    check_equiv_10_12,
    check_measuring,
    induce,
)
from weak_crossed.errors import CrossedError
from weak_crossed.report import ConditionReport, Verdict


def _mutated(c: CocycleTable, index, value) -> CocycleTable:
    table = np.array(c.table)
    table[index] = c.measuring.field.array(value)
    return CocycleTable(c.measuring, table, c.variant)


@pytest.fixture(params=["paper", "smash", "groupoid2", "groupoid3"])
def bundle(request):
    return request.getfixturevalue(request.param)


def test_measuring_conditions_hold(bundle):
    report = check_measuring(bundle.measuring)
    assert report.ids == MEASURING_IDS
    assert report.all_passed()


def test_bb_cocycle_conditions_hold(bundle):
    report = check_bb_cocycle(bundle.cocycle)
    assert report.ids == BB_COCYCLE_IDS
    assert report.all_passed()
    assert check_balance(bundle.measuring, bundle.cocycle.table, "R").all_passed()


def test_paper_fails_the_equivalent_conditions(paper):
    report = check_equiv_10_12(paper.measuring, paper.cocycle)
    assert report.ids == EQUIV_IDS
    assert report.outcomes() == {"10": False, "11": False, "12": False, "10-12-agree": True}
    witness = report["10"].witness
    assert witness.indices == (5, 0)
    assert witness.labels[0] == "G_10^01"
    assert witness.lhs.format_coords() == "(1, 0)"
    assert witness.rhs.format_coords() == "(0, 0)"


def test_condition_11_needs_no_cocycle(paper, groupoid2):
    assert not check_condition_11(paper.measuring).passed("11")
    assert check_condition_11(groupoid2.measuring).passed("11")


def test_equivalence_needs_its_preconditions(paper):
    prerequisites = ConditionReport(
        tuple(
            Verdict(condition=c_id, passed=c_id != "6")
            for c_id in ("1", "2", "6", "7")
        )
    )
    with pytest.raises(CrossedError, match="failing: 6") as e:
        check_equiv_10_12(paper.measuring, paper.cocycle, prerequisites)
    assert e.value.report.ids == ("1", "2", "6", "7")


def test_groupoid_satisfies_every_condition(groupoid2):
    report = check_equiv_10_12(groupoid2.measuring, groupoid2.cocycle)
    assert report.all_passed()
    induced = induce(groupoid2.cocycle)
    assert check_ag_cocycle(induced).all_passed()
    aux = check_aux_lemmas(groupoid2.measuring, induced)
    assert aux.ids == AUX_IDS
    assert aux.all_passed()


def test_paper_ag_cocycle_failures(paper):
    report = check_ag_cocycle(induce(paper.cocycle))
    assert [v.condition for v in report.failed()] == ["11", "cocycle-absorption-left"]


def test_broken_groupoid_cocycle_fails_left_linearity(groupoid2):
    broken = _mutated(groupoid2.cocycle, (0, 0), [0, 1])
    report = check_bb_cocycle(broken)
    assert report["5"].passed is False
    assert report["5"].witness is not None


def test_unnormalized_ag_cocycle_fails_condition_21(groupoid2):
    # ς(1, E_01) = ς(E_00, E_01) + ς(E_11, E_01) = 0
    broken = _mutated(induce(groupoid2.cocycle), (0, 1), [0, 0])
    report = check_ag_cocycle(broken)
    assert report["21"].passed is False
    assert report["21"].witness.labels == ("E_01",)
    assert report.passed("20")


def test_zeroing_sigma_on_g_pairs_keeps_condition_8(paper):
    table = np.array(paper.cocycle.table)
    table[4:8, 4:8] = paper.field.zeros((4, 4, 2))
    zeroed = CocycleTable(paper.measuring, table, paper.cocycle.variant)
    report = check_bb_cocycle(zeroed)
    assert report.passed(*BB_COCYCLE_IDS)
