from fractions import Fraction

import pytest

from weak_crossed.errors import FieldError
from weak_crossed.linalg import QQ, PrimeField, field_from_name
from weak_crossed.linalg.fields import parse_fraction


def test_parse_fraction_accepts_exact_forms():
    assert parse_fraction(3) == Fraction(3)
    assert parse_fraction("-2/4") == Fraction(-1, 2)
    assert parse_fraction(" 7 ") == Fraction(7)
    assert parse_fraction(Fraction(1, 3)) == Fraction(1, 3)


@pytest.mark.parametrize("value", [0.5, "1.5", "1/0", "x", None])
def test_parse_fraction_rejects(value):
    with pytest.raises(FieldError):
        parse_fraction(value)


def test_field_from_name():
    assert field_from_name("QQ") is QQ
    assert field_from_name("GF(5)") == PrimeField(5)
    with pytest.raises(FieldError, match="Unknown field"):
        field_from_name("RR")
    with pytest.raises(FieldError, match="not a prime field"):
        field_from_name("GF(4)")


def test_identity_and_unit_vector(field):
    eye = field.identity(3)
    assert field.owns(eye)
    assert eye[1, 1] == field.one
    assert field.is_zero(eye[0, 1])
    assert list(field.unit_vector(3, 2)) == [field.zero, field.zero, field.one]


def test_rational_wire_format():
    assert QQ.to_wire(QQ.scalar("6/3")) == 2
    assert QQ.to_wire(QQ.scalar("-1/2")) == "-1/2"
    assert QQ.format(QQ.scalar(4)) == "4"


def test_prime_field_reduces_fractions():
    gf5 = PrimeField(5)
    # 1/2 is 3 modulo 5
    assert gf5.to_wire(gf5.scalar("1/2")) == 3
    assert gf5.to_wire(gf5.scalar(-1)) == 4
    with pytest.raises(FieldError, match="Division by zero"):
        gf5.scalar("1/5")


def test_inverse_of_zero_raises(field):
    with pytest.raises(FieldError, match="Division by zero"):
        field.inverse(field.zero)


def test_matmul_with_empty_inner_dimension(field):
    product = field.matmul(field.zeros((2, 0)), field.zeros((0, 3)))
    assert product.shape == (2, 3)
    assert field.owns(product)
    with pytest.raises(FieldError, match="Cannot multiply"):
        field.matmul(field.zeros((2, 2)), field.zeros((3, 1)))


def test_cannot_mix_prime_fields():
    with pytest.raises(FieldError, match="Cannot mix"):
        PrimeField(3).array(PrimeField(5).identity(2))
