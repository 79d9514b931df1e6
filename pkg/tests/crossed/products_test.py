import numpy as np
import pytest

from weak_crossed.crossed import (
    AG_PRODUCT_IDS,
    BB_HYPOTHESES,
    BB_PRODUCT_IDS,
    CocycleTable,
    Measuring,
    Variant,
    ambient_space,
    build_ag,
    build_bb,
    check_bb_cocycle,
    check_measuring,
    check_nabla,
    induce,
    nabla,
    preunit,
)
from weak_crossed.errors import CrossedError


def test_ambient_space_is_a_tensor_h(paper):
    space = ambient_space(paper.measuring)
    assert space.dim == 16
    # index a * dim H + h
    assert space.labels[1 * 8 + 5] == "(0,1)⊗G_10^01"


def test_paper_balanced_product_verifies(paper):
    bb = build_bb(paper.measuring, paper.cocycle)
    assert bb.dim == 8
    assert bb.report.ids == BB_PRODUCT_IDS
    assert bb.verified
    bb.raise_for_failure()


def test_paper_ag_product_misses_hypotheses(paper):
    ag = build_ag(paper.measuring, induce(paper.cocycle))
    assert ag.dim == 8
    assert ag.report.ids == AG_PRODUCT_IDS
    assert ag.report.passed("nabla-idempotent", "assoc", "unit")
    assert ag.report["hypotheses"].passed is False
    assert ag.report["hypotheses"].note == "failing: 11"
    assert not ag.verified
    with pytest.raises(CrossedError, match="does not verify"):
        ag.raise_for_failure()


def test_nabla_is_idempotent(paper, groupoid2):
    for bundle in (paper, groupoid2):
        report = check_nabla(bundle.measuring)
        assert report.passed("nabla-idempotent", "preunit")
        nab = nabla(bundle.measuring)
        assert nab(preunit(bundle.measuring)) == preunit(bundle.measuring)


@pytest.mark.parametrize("n", [2, 3])
def test_groupoid_products_verify(request, n):
    bundle = request.getfixturevalue(f"groupoid{n}")
    m = bundle.measuring
    bb = build_bb(m, bundle.cocycle)
    ag = build_ag(m, induce(bundle.cocycle))
    assert bb.verified
    assert ag.verified
    assert bb.dim == ag.dim


def test_left_action_of_the_unit(groupoid2):
    bb = build_bb(groupoid2.measuring, groupoid2.cocycle)
    one = groupoid2.algebra.unit
    for x in range(bb.dim):
        e_x = bb.field.unit_vector(bb.dim, x)
        assert list(bb.left_action(one, e_x)) == list(e_x)


def test_smash_constructions_share_tables(smash):
    bb = build_bb(smash.measuring, smash.cocycle)
    ag = build_ag(smash.measuring, induce(smash.cocycle))
    assert bb.verified and ag.verified
    assert bb.dim == ag.dim == 4
    assert bb.algebra.space.labels == ag.algebra.space.labels
    assert np.array_equal(bb.algebra.mult, ag.algebra.mult)
    assert np.array_equal(bb.unit, ag.unit)


def _balanced_product(m: Measuring, c: CocycleTable):
    """Build the product and check it verifies exactly when (1)–(9) hold."""
    report = check_measuring(m) + check_bb_cocycle(c)
    bb = build_bb(m, c)
    assert bb.report.ids == BB_PRODUCT_IDS
    assert bb.verified == report.only(*BB_HYPOTHESES).all_passed()
    return report, bb


def _shifted_cocycle(c: CocycleTable, index, value) -> CocycleTable:
    table = np.array(c.table)
    table[index] = table[index] + c.measuring.field.array(value)
    return CocycleTable(c.measuring, table, c.variant)


def _shifted_action(m: Measuring, index, value) -> Measuring:
    action = np.array(m.action)
    action[index] = action[index] + m.field.array(value)
    return Measuring(m.hopf, m.algebra, action)


# every entry sits in a λ row or pairs a G row with a λ column, except the
# two G×G entries, so normality or the cocycle identity breaks
SIGMA_MUTATIONS = [(0, 0), (0, 5), (1, 2), (2, 7), (3, 3), (4, 1), (5, 5), (6, 0), (7, 6), (2, 2), (1, 4)]


@pytest.mark.parametrize("h,k", SIGMA_MUTATIONS)
def test_mutated_cocycle_breaks_the_balanced_product(paper, h, k):
    mutated = _shifted_cocycle(paper.cocycle, (h, k), [1, 0])
    report, bb = _balanced_product(paper.measuring, mutated)
    assert not report.only(*BB_HYPOTHESES).all_passed()
    assert bb.report["hypotheses"].passed is False
    assert not bb.verified


@pytest.mark.parametrize(
    "index,value,condition",
    [
        # λ rows: 1·a picks up the shift
        ((0, 0), [1, 0], "4"),
        ((1, 0), [1, 0], "4"),
        ((2, 1), [0, 1], "4"),
        ((3, 1), [1, 0], "4"),
        # G_10^01 · 1_A no longer equals Π^L(G_10^01) · 1_A
        ((5, 0), [0, 1], "1"),
    ],
)
def test_mutated_action_breaks_the_balanced_product(paper, index, value, condition):
    m = _shifted_action(paper.measuring, index, value)
    report, bb = _balanced_product(m, CocycleTable(m, paper.cocycle.table, Variant.BB))
    assert report[condition].passed is False
    assert not bb.verified


def test_action_of_g_by_the_lambda_formula_breaks_measuring(paper):
    action = np.array(paper.measuring.action)
    action[4:8] = action[0:4]
    m = Measuring(paper.hopf, paper.algebra, action)
    report, bb = _balanced_product(m, CocycleTable(m, paper.cocycle.table, Variant.BB))
    assert report["2"].passed is False
    assert report["2"].witness.labels[0].startswith("G_")
    assert not bb.verified


@pytest.mark.parametrize(
    "index,value,condition",
    [
        # σ(E_00, E_00) = e_0 + e_1
        ((0, 0), [0, 1], "5"),
        # σ(E_01, E_10) = 2 e_0
        ((1, 2), [1, 0], "8"),
    ],
)
def test_balanced_groupoid_mutations_break_the_product(groupoid2, index, value, condition):
    mutated = _shifted_cocycle(groupoid2.cocycle, index, value)
    report, bb = _balanced_product(groupoid2.measuring, mutated)
    assert report.passed("balance-R")
    assert report[condition].passed is False
    assert not bb.verified


def test_zeroing_sigma_on_g_pairs_keeps_the_balanced_product(paper):
    table = np.array(paper.cocycle.table)
    table[4:8, 4:8] = paper.field.zeros((4, 4, 2))
    zeroed = CocycleTable(paper.measuring, table, Variant.BB)
    report, bb = _balanced_product(paper.measuring, zeroed)
    assert report.all_passed()
    assert bb.verified


@pytest.mark.parametrize("name", ["paper", "smash", "groupoid2"])
def test_unmutated_fixtures_build_the_balanced_product(request, name):
    bundle = request.getfixturevalue(name)
    report, bb = _balanced_product(bundle.measuring, bundle.cocycle)
    assert report.only(*BB_HYPOTHESES).all_passed()
    assert bb.report.passed("hypotheses")
    assert bb.verified
