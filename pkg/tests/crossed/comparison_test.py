import pytest

from weak_crossed.crossed import (
    ISO_IDS,
    compare_constructions,
    comparison_iso,
)
from weak_crossed.errors import CrossedError


def test_comparison_refused_without_condition_10(paper):
    with pytest.raises(CrossedError, match="needs \\(10\\), which fails") as e:
        comparison_iso(paper.measuring, paper.cocycle)
    assert e.value.report["10"].passed is False


def test_paper_outcome_is_a_confirmed_negative(paper):
    outcome = compare_constructions(paper.measuring, paper.cocycle)
    assert outcome.confirmed
    assert outcome.stage == "constructions"
    assert "the balanced crossed product exists, the ×-construction does not" in outcome.message
    assert outcome.psi is None
    assert outcome.bb.verified
    assert not outcome.ag.verified


@pytest.mark.parametrize("name", ["smash", "groupoid2", "groupoid3"])
def test_comparison_map_is_an_isomorphism(request, name):
    bundle = request.getfixturevalue(name)
    psi, phi, report = comparison_iso(bundle.measuring, bundle.cocycle)
    assert report.ids == ISO_IDS
    assert report.all_passed()
    assert (phi @ psi).is_identity()
    assert (psi @ phi).is_identity()


def test_groupoid_outcome(groupoid2):
    outcome = compare_constructions(groupoid2.measuring, groupoid2.cocycle)
    assert outcome.confirmed
    assert outcome.stage == "comparison"
    assert outcome.psi is not None
    assert outcome.report.passed(*ISO_IDS)
