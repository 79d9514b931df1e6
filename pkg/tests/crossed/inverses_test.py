import numpy as np
import pytest

from weak_crossed.crossed import (
    AG_INVERSE_IDS,
    BB_INVERSE_IDS,
    CocycleInverse,
    CocycleTable,
    Variant,
    descend,
    induce,
    invert_ag,
    invert_bb,
    missing_inverse_report,
    tilde_from_bar,
    transfer_inverse,
)
from weak_crossed.errors import CrossedError


@pytest.fixture(scope="module")
def paper_bar(paper):
    bar = invert_bb(paper.measuring, paper.cocycle)
    assert bar is not None
    return bar


def test_paper_bb_inverse(paper_bar):
    assert paper_bar.variant == Variant.BB
    assert paper_bar.report.passed(*BB_INVERSE_IDS)
    assert paper_bar.report.passed("bb-inverse-unique")
    assert list(paper_bar.table[0, 0]) == [1, 0]


def test_paper_has_no_ag_inverse(paper):
    assert invert_ag(paper.measuring, induce(paper.cocycle)) is None
    report = missing_inverse_report(Variant.AG)
    assert report.ids == AG_INVERSE_IDS
    assert all(v.note == "no inverse exists" for v in report.failed())


def test_tilde_from_bar(paper, paper_bar):
    tilde = tilde_from_bar(paper.measuring, paper_bar)
    assert tilde.report.all_passed()


def test_tilde_from_broken_bar(paper, paper_bar):
    table = np.array(paper_bar.table)
    table[0, 0] = paper.field.zeros(2)
    broken = CocycleInverse(
        cocycle=paper_bar.cocycle, table=table, variant=Variant.BB, report=paper_bar.report
    )
    with pytest.raises(CrossedError, match="σ̃ fails item"):
        tilde_from_bar(paper.measuring, broken)


def test_inverse_does_not_transfer_on_paper(paper_bar):
    assert transfer_inverse(paper_bar) is None


def test_groupoid_inverses_exist(groupoid2):
    m, c = groupoid2.measuring, groupoid2.cocycle
    bar = invert_bb(m, c)
    assert bar is not None and bar.report.passed(*BB_INVERSE_IDS)
    ag_bar = invert_ag(m, induce(c))
    assert ag_bar is not None and ag_bar.report.passed(*AG_INVERSE_IDS)


def test_descend_balanced_cocycle(paper):
    descended, report = descend(induce(paper.cocycle))
    assert descended is not None
    assert descended.variant == Variant.BB
    assert descended.same_table(paper.cocycle)
    assert report.passed("balance-R")


def test_descend_unbalanced_cocycle(paper):
    table = np.array(paper.cocycle.table)
    table[5, 5] = paper.field.array([1, 0])
    unbalanced = CocycleTable(paper.measuring, table, Variant.AG)
    descended, report = descend(unbalanced)
    assert descended is None
    assert report["balance-R"].witness.indices == (5, 0, 5)


def test_groupoid_inverse_is_unique(groupoid2):
    bar = invert_bb(groupoid2.measuring, groupoid2.cocycle)
    assert bar.report.passed("bb-inverse-unique")
    # σ̄ coincides with σ on the pair groupoid
    assert groupoid2.cocycle.same_table(bar)
