import numpy as np
import pytest

from weak_crossed.errors import AxiomError, ShapeError
from weak_crossed.fixtures import paper_example
from weak_crossed.hopf import (
    ANTIPODE_IDS,
    COUNITAL_IDS,
    WEAK_BIALGEBRA_IDS,
    HopfData,
    StructuredAlgebra,
    StructuredCoalgebra,
    WeakBialgebra,
    WeakHopfAlgebra,
    canonical_projector,
    counital_subalgebra,
    derive_antipode,
    verify_algebra,
    verify_antipode,
    verify_coalgebra,
    verify_counital,
    verify_weak_bialgebra,
)
from weak_crossed.linalg import LinMap, PrimeField


def _with_tables(b: WeakBialgebra, mult=None, comult=None) -> WeakBialgebra:
    """A copy of ``b`` with the algebra or coalgebra table replaced."""
    algebra, coalgebra = b.algebra, b.coalgebra
    if mult is not None:
        algebra = StructuredAlgebra(b.space, mult, algebra.unit, b.field)
    if comult is not None:
        coalgebra = StructuredCoalgebra(b.space, comult, coalgebra.counit, b.field)
    return WeakBialgebra(algebra, coalgebra)


def test_paper_weak_bialgebra_passes(paper):
    b = paper.hopf.bialgebra
    assert verify_algebra(b.algebra).passed("assoc", "unit")
    assert verify_coalgebra(b.coalgebra).passed("coassoc", "counit")
    report = verify_weak_bialgebra(b)
    assert report.ids == WEAK_BIALGEBRA_IDS
    assert report.all_passed()


def test_paper_counital_subalgebras(paper):
    hopf = paper.hopf
    h_left = [list(row) for row in hopf.h_left.rows()]
    h_right = [list(row) for row in hopf.h_right.rows()]
    assert h_left == [[1, 1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 1, 0, 0, 0, 0]]
    assert h_right == [[1, 0, 1, 0, 0, 0, 0, 0], [0, 1, 0, 1, 0, 0, 0, 0]]
    assert hopf.subalgebra("R") == hopf.h_right


def test_projectors_are_idempotent(paper):
    b = paper.hopf.bialgebra
    for side in ("L", "R"):
        pi = canonical_projector(b, side)
        assert pi @ pi == pi
        assert counital_subalgebra(b, side) == paper.hopf.subalgebra(side)


def test_verify_counital_records_dimensions(paper):
    report = verify_counital(paper.hopf.bialgebra)
    assert report.ids == COUNITAL_IDS
    assert report.all_passed()
    assert report["counital-dims"].note == "dim H^L = 2, dim H^R = 2"


def test_paper_antipode_passes(paper):
    report = verify_antipode(paper.hopf)
    assert report.ids == ANTIPODE_IDS
    assert report.all_passed()


def test_identity_is_not_an_antipode(paper):
    b = paper.hopf.bialgebra
    identity = LinMap.identity(b.space, b.field)
    data = HopfData(bialgebra=b, antipode=identity, antipode_inv=identity)
    assert verify_antipode(data)["antipode-left"].passed is False
    with pytest.raises(AxiomError, match="antipode-left") as e:
        WeakHopfAlgebra.verified(data)
    assert "antipode-left" in e.value.report


def test_derived_antipode_is_the_antipode(paper, smash, groupoid2):
    for bundle in (paper, smash, groupoid2):
        derived = derive_antipode(bundle.hopf.bialgebra)
        assert derived is not None
        assert derived == bundle.hopf.antipode


def test_broken_product_fails_comultiplicativity(paper):
    b = paper.hopf.bialgebra
    mult = np.array(b.algebra.mult)
    mult[0, 0, 0] = -mult[0, 0, 0]
    report = verify_weak_bialgebra(_with_tables(b, mult=mult))
    assert report["comult-multiplicative"].passed is False
    assert report["comult-multiplicative"].witness is not None


def test_dropped_comult_entry_fails_counit(paper):
    b = paper.hopf.bialgebra
    comult = np.array(b.coalgebra.comult)
    comult[0, 0, 0] = b.field.zero
    report = verify_coalgebra(_with_tables(b, comult=comult).coalgebra)
    assert report["counit"].passed is False


def test_gf3_paper_example_verifies():
    bundle = paper_example(PrimeField(3))
    assert bundle.hopf.report.all_passed()


def test_shapes_are_checked(paper):
    b = paper.hopf.bialgebra
    with pytest.raises(ShapeError, match="do not fit"):
        StructuredAlgebra(b.space, b.field.zeros((2, 2, 2)), b.unit, b.field)
    smaller = LinMap.identity(paper.algebra.space, b.field)
    with pytest.raises(ShapeError, match="endomorphism"):
        HopfData(bialgebra=b, antipode=smaller)


def _lambda(p, q):
    """Coordinates of λ_p^q in the 8-dimensional fixture basis, index x * 2 + y."""
    return [p[x] * q[y] for x in range(2) for y in range(2)] + [0, 0, 0, 0]


def test_paper_projector_tables(paper):
    bits = ((1, 0), (0, 1))
    pi_left = paper.hopf.pi_left
    pi_right = paper.hopf.pi_right
    for i in range(8):
        t, x, y = i // 4, (i // 2) % 2, i % 2
        (a, b), (c, d) = bits[x], bits[y]
        if t == 0:
            left, right = _lambda((a * c, b * d), (1, 1)), _lambda((1, 1), (a * c, b * d))
        else:
            left, right = _lambda((a * d, b * c), (1, 1)), _lambda((1, 1), (b * c, a * d))
        assert list(pi_left.matrix[:, i]) == left
        assert list(pi_right.matrix[:, i]) == right
