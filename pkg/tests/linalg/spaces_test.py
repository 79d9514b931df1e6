import pytest

from weak_crossed.errors import ShapeError
from weak_crossed.linalg import BilinearMap, FinSpace, LinMap, Vec, outer, tensor_space


@pytest.fixture
def plane():
    return FinSpace(("x", "y"))


def test_labels_must_be_distinct():
    with pytest.raises(ShapeError, match="repeated"):
        FinSpace(("a", "b", "a"))


def test_index_of_unknown_label(plane):
    assert plane.index("y") == 1
    with pytest.raises(ShapeError, match="Unknown basis label"):
        plane.index("z")


def test_tensor_space_is_row_major(plane):
    square = tensor_space(plane, FinSpace(("1", "g")))
    assert square.dim == 4
    assert square.labels == ("x⊗1", "x⊗g", "y⊗1", "y⊗g")
    assert square.factors[0] == plane


def test_outer_matches_tensor_indexing(field):
    u = field.array([1, 2])
    v = field.array([0, 1, 1])
    w = outer(u, v)
    # index a*3 + b holds u[a] * v[b]
    assert w[1 * 3 + 2] == field.scalar(2)
    assert field.is_zero(w[3])


def test_vec_arithmetic_and_rendering(plane, field):
    v = Vec(plane, field.array([1, -1]), field)
    w = Vec(plane, field.array([0, 1]), field)
    assert (v + w) == Vec(plane, field.array([1, 0]), field)
    assert (v - v).is_zero()
    assert str(Vec(plane, field.array([1, 0]), field)) == "x"
    assert str(Vec(plane, field.zeros(2), field)) == "0"
    with pytest.raises(ShapeError):
        Vec(plane, field.zeros(3), field)


def test_vec_in_other_space_is_rejected(plane, field):
    other = FinSpace(("p", "q"))
    with pytest.raises(ShapeError, match="different spaces"):
        _ = Vec(plane, field.zeros(2), field) + Vec(other, field.zeros(2), field)


def test_vectors_are_read_only(plane, field):
    v = Vec(plane, field.array([1, 2]), field)
    with pytest.raises(ValueError):
        v.coords[0] = field.zero


def test_linmap_compose_and_mismatch(plane, field):
    swap = LinMap(plane, plane, field.array([[0, 1], [1, 0]]), field)
    assert (swap @ swap).is_identity()
    assert swap.first_mismatch(LinMap.identity(plane, field)) == 0
    assert swap.first_mismatch(swap) is None
    assert list(swap.apply(field.array([1, 0]))) == [field.zero, field.one]


def test_linmap_shape_is_checked(plane, field):
    line = FinSpace(("t",))
    with pytest.raises(ShapeError, match="does not map"):
        LinMap(plane, line, field.identity(2), field)
    with pytest.raises(ShapeError, match="Cannot compose"):
        LinMap.zero(line, line, field).compose(LinMap.identity(plane, field))


def test_bilinear_map_agrees_with_its_matrices(plane, field):
    table = field.zeros((2, 2, 2))
    # a commutative product with x as unit and y*y = x + y
    table[0, 0, 0] = field.one
    table[0, 1, 1] = field.one
    table[1, 0, 1] = field.one
    table[1, 1, 0] = field.one
    table[1, 1, 1] = field.one
    mult = BilinearMap(plane, plane, plane, table, field)
    u = field.array([1, 2])
    v = field.array([3, 1])
    expected = mult(u, v)
    assert list(field.matmul(mult.left_matrix(u), v.reshape(-1, 1)).reshape(-1)) == list(
        expected
    )
    assert list(field.matmul(mult.right_matrix(v), u.reshape(-1, 1)).reshape(-1)) == list(
        expected
    )
    assert list(mult.left_fixed(1, v)) == list(mult(field.unit_vector(2, 1), v))


def test_bilinear_table_shape_is_checked(plane, field):
    with pytest.raises(ShapeError, match="expected"):
        BilinearMap(plane, plane, plane, field.zeros((2, 2)), field)
