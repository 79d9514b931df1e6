import pytest

from weak_crossed.errors import NotIdempotentError, ShapeError
from weak_crossed.linalg import (
    FinSpace,
    LinearSystem,
    LinMap,
    Subspace,
    Vec,
    image_of_idempotent,
    inverse,
    quotient_by,
    rank,
    rref,
    solve_linear,
)


@pytest.fixture
def abc():
    return FinSpace(("a", "b", "c"))


def test_rref_normalizes_pivots(field):
    reduced, pivots = rref(field.array([[2, 4], [1, 2]]), field)
    assert pivots == (0,)
    assert reduced.shape == (1, 2)
    assert reduced[0, 0] == field.one
    assert rank(field.array([[1, 0], [0, 1]]), field) == 2


def test_inverse(field):
    matrix = field.array([[1, 1], [0, 1]])
    inv = inverse(matrix, field)
    assert inv is not None
    assert list(inv.reshape(-1)) == list(field.array([1, -1, 0, 1]))
    assert inverse(field.array([[1, 1], [1, 1]]), field) is None
    with pytest.raises(ShapeError, match="non-square"):
        inverse(field.zeros((2, 3)), field)


def test_subspace_membership(abc, field):
    sub = Subspace.span(abc, [field.array([1, 1, 0]), field.array([2, 2, 0])], field)
    assert sub.dim == 1
    assert sub.contains(field.array([3, 3, 0]))
    assert not sub.contains(Vec(abc, field.array([1, 0, 0]), field))
    with pytest.raises(ShapeError):
        Subspace.span(abc, [field.array([1, 0])], field)


def test_subspace_equality_ignores_spanning_set(abc, field):
    one = Subspace.span(abc, [field.array([1, 0, 1]), field.array([0, 1, 0])], field)
    other = Subspace.span(abc, [field.array([1, 1, 1]), field.array([0, 1, 0])], field)
    assert one == other


def test_quotient_by_relation(abc, field):
    q = quotient_by(abc, [field.array([1, -1, 0])], field)
    assert q.quotient.labels == ("b", "c")
    # a and b become equal in the quotient
    assert list(q.project.apply(field.array([1, 0, 0]))) == [field.one, field.zero]
    assert (q.project @ q.section).is_identity()
    assert q.relations.dim == 1


def test_image_of_idempotent(field):
    plane = FinSpace(("x", "y"))
    e = LinMap(plane, plane, field.array([[1, 1], [0, 0]]), field)
    sub, incl, retr = image_of_idempotent(e)
    assert sub.dim == 1
    assert incl.codomain == plane
    assert incl.domain.labels == ("x",)
    assert (retr @ incl).is_identity()
    assert incl @ retr == e


def test_image_of_non_idempotent(field):
    plane = FinSpace(("x", "y"))
    nilpotent = LinMap(plane, plane, field.array([[0, 1], [0, 0]]), field)
    with pytest.raises(NotIdempotentError, match="'y'") as e:
        image_of_idempotent(nilpotent)
    assert e.value.column == 1


def test_linear_system_free_variables(abc, field):
    system = LinearSystem(abc, field)
    system.add(field.array([1, 1, 0]), 1)
    system.add(field.array([0, 1, -1]), 0)
    # a redundant row is absorbed
    system.add(field.array([1, 2, -1]), 1)
    assert len(system) == 3
    assert system.rank == 2
    assert system.nullity == 1
    assert system.pivots == (0, 1)
    assert list(system.solve()) == list(field.array([1, 0, 0]))
    assert list(system.solve(field.array([0, 0, 1]))) == list(field.array([0, 1, 1]))


def test_linear_system_inconsistent(abc, field):
    system = LinearSystem(abc, field)
    system.add(field.array([1, 0, 0]), 1)
    system.add(field.array([1, 0, 0]), 2)
    assert not system.consistent
    assert system.solve() is None
    with pytest.raises(ShapeError, match="unknowns"):
        system.add(field.array([1, 0]), 0)


def test_solve_linear(abc, field):
    rows = [
        (Vec(abc, field.array([1, 0, 0]), field), 1),
        (Vec(abc, field.array([0, 1, 1]), field), 2),
    ]
    solution = solve_linear(rows, abc, field)
    assert solution == Vec(abc, field.array([1, 2, 0]), field)
    plane = FinSpace(("x", "y"))
    with pytest.raises(ShapeError, match="not over the space"):
        solve_linear([(Vec(plane, field.zeros(2), field), 0)], abc, field)
