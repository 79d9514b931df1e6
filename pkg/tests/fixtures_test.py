import pytest

from weak_crossed.crossed import AUX_IDS
from weak_crossed.errors import FixtureError
from weak_crossed.fixtures import (
    FIXTURES_BY_NAME,
    HOPF_IDS,
    fixture_by_name,
    groupoid_fixture,
    hopf_smash_fixture,
)
from weak_crossed.linalg import PrimeField
from weak_crossed.runner import check_conditions


@pytest.mark.parametrize("name", ["paper8", "smash-c2", "groupoid-2"])
def test_fixture_reproduces_expected_verdicts(name):
    bundle = fixture_by_name(name)
    report = bundle.hopf.report + check_conditions(bundle.measuring, bundle.cocycle)
    assert bundle.mismatches(report) == []


def test_paper_expectations(paper):
    assert paper.paper
    assert not any(c_id in paper.expected for c_id in AUX_IDS)
    failing = sorted(c_id for c_id, passed in paper.expected.items() if not passed)
    assert failing == sorted(["10", "11", "12", "cocycle-absorption-left", "23", "24"])
    assert all(paper.expected[c_id] for c_id in HOPF_IDS)


def test_registry():
    assert list(FIXTURES_BY_NAME) == ["paper8", "smash-c2", "groupoid-2", "groupoid-3", "groupoid-4"]
    assert FIXTURES_BY_NAME["paper8"].paper
    bundle = fixture_by_name("groupoid-4")
    assert (bundle.hopf.dim, bundle.algebra.dim) == (16, 4)
    assert bundle.hopf.space.labels[1 * 4 + 2] == "E_12"
    with pytest.raises(FixtureError, match="Unknown fixture 'nope'"):
        fixture_by_name("nope")


@pytest.mark.parametrize("n", [1, 5])
def test_groupoid_size_is_bounded(n):
    with pytest.raises(FixtureError, match="groupoid fixture needs 2 <= n <= 4"):
        groupoid_fixture(n)


def test_smash_needs_odd_characteristic():
    with pytest.raises(FixtureError, match="characteristic other than 2"):
        hopf_smash_fixture(PrimeField(2))
    assert hopf_smash_fixture(PrimeField(3)).field == PrimeField(3)


def test_mismatches_name_the_disagreement(paper, smash):
    report = paper.hopf.report + check_conditions(paper.measuring, paper.cocycle, "bb")
    mismatches = smash.mismatches(report)
    assert "10: expected True, got FAIL" in mismatches
    assert "17: not checked" in mismatches
