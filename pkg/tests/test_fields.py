from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from leibnizalg.errors import BadSpec, FieldParseError
from leibnizalg.fields import (QQ, ExtensionField, PrimeField, default_modulus,
                               field_from_doc, field_to_doc, gf,
                               parse_field_name)

FINITE_SIZES = (2, 3, 4, 5, 7, 8, 9, 25, 27)


def elements_of(F):
    return list(F.elements())


# ---------------------------------------------------------------- rationals

def test_rationals_basic():
    assert QQ.add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert QQ.inv(Fraction(-3, 7)) == Fraction(-7, 3)
    assert QQ.is_zero(QQ.sub(QQ.one, Fraction(1)))
    assert not QQ.is_finite


@given(st.fractions(), st.fractions())
def test_rationals_field_ops(a, b):
    assert QQ.sub(QQ.add(a, b), b) == a
    if not QQ.is_zero(b):
        assert QQ.mul(QQ.div(a, b), b) == a


@given(st.fractions())
def test_rationals_scalar_round_trip(a):
    assert QQ.parse_scalar(QQ.serialize_scalar(a)) == a


def test_rationals_parse_forms():
    assert QQ.parse_scalar("3/4") == Fraction(3, 4)
    assert QQ.parse_scalar(-2) == Fraction(-2)
    assert QQ.parse_scalar("-1/2") == Fraction(-1, 2)
    with pytest.raises(FieldParseError):
        QQ.parse_scalar("x")
    with pytest.raises(FieldParseError):
        QQ.parse_scalar([1, 2])


# ------------------------------------------------------------- finite fields

@pytest.mark.parametrize("q", FINITE_SIZES)
def test_finite_field_axioms_exhaustive(q):
    F = gf(q)
    elems = elements_of(F)
    assert len(elems) == q == F.size
    assert len(set(elems)) == q
    for a in elems:
        assert F.add(a, F.zero) == a
        assert F.mul(a, F.one) == a
        assert F.is_zero(F.add(a, F.neg(a)))
        if not F.is_zero(a):
            assert F.mul(a, F.inv(a)) == F.one


@pytest.mark.parametrize("q", (4, 9, 27))
def test_extension_distributivity(q):
    F = gf(q)
    elems = elements_of(F)
    for a in elems:
        for b in elems:
            assert F.mul(a, b) == F.mul(b, a)
            for c in elems[:3]:
                lhs = F.mul(a, F.add(b, c))
                rhs = F.add(F.mul(a, b), F.mul(a, c))
                assert lhs == rhs


def test_characteristic():
    assert gf(2).char == 2
    assert gf(9).char == 3
    assert gf(8).char == 2
    assert QQ.char == 0


def test_gf4_multiplication_table():
    # modulus 1 + x + x^2, elements coded base 2: 2 = x, 3 = x + 1
    F = gf(4)
    assert F.mul(2, 2) == 3       # x^2 = x + 1
    assert F.mul(2, 3) == 1       # x(x+1) = x^2 + x = 1
    assert F.inv(2) == 3


def test_gf9_multiplication_table():
    # modulus 1 + x^2, elements coded base 3: 3 = x
    F = gf(9)
    assert F.mul(3, 3) == 2       # x^2 = -1 = 2
    assert F.mul(F.from_int(2), F.from_int(2)) == 1


def test_from_int_wraps():
    F = gf(5)
    assert F.from_int(7) == 2
    assert F.from_int(-1) == 4
    F4 = gf(4)
    assert F4.from_int(-1) == F4.one


def test_default_modulus_known():
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(3, 2) == (1, 0, 1)


def test_gf_cached_identity():
    assert gf(4) is gf(4)
    assert gf(3) is gf(3)


def test_gf_rejects_non_prime_power():
    with pytest.raises(BadSpec):
        gf(6)
    with pytest.raises(BadSpec):
        gf(1)


def test_large_field_beyond_tables():
    # 625 > the lookup-table cutoff, exercises the slow path
    F = gf(625)
    assert isinstance(F, ExtensionField)
    a, b, c = F.from_int(17), F.from_int(123), F.from_int(598)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(a, F.inv(a)) == F.one


@pytest.mark.parametrize("q", (3, 9))
def test_finite_scalar_round_trip(q):
    F = gf(q)
    for a in elements_of(F):
        assert F.parse_scalar(F.serialize_scalar(a)) == a


def test_finite_parse_forms():
    F = gf(9)
    # bare ints are read through from_int (reduced mod the characteristic)
    assert F.parse_scalar(5) == F.from_int(5) == 2
    assert F.parse_scalar([2, 1]) == 2 + 3  # digits little-endian base 3
    assert F.parse_scalar([5, 4]) == F.parse_scalar([2, 1])
    with pytest.raises(FieldParseError):
        F.parse_scalar([0, 0, 1])
    with pytest.raises(FieldParseError):
        F.parse_scalar("2")
    with pytest.raises(FieldParseError):
        F.parse_scalar(True)
    P = gf(3)
    assert P.parse_scalar([2]) == 2
    assert P.parse_scalar(4) == 1


# ------------------------------------------------------------ names and docs

def test_parse_field_name():
    assert parse_field_name("Q") is QQ
    assert parse_field_name("rationals") is QQ
    assert parse_field_name("gf4") is gf(4)
    assert parse_field_name("GF(9)") is gf(9)
    assert parse_field_name("gf(3,2)") == gf(9)
    assert parse_field_name("gf2") is gf(2)
    with pytest.raises(BadSpec):
        parse_field_name("gf6")
    with pytest.raises(BadSpec):
        parse_field_name("octonions")


@pytest.mark.parametrize("q", (None, 2, 3, 4, 9, 25))
def test_field_doc_round_trip(q):
    F = QQ if q is None else gf(q)
    G = field_from_doc(field_to_doc(F))
    assert G == F
    if isinstance(F, (PrimeField, ExtensionField)):
        assert G.char == F.char and G.size == F.size


def test_field_doc_rejects_garbage():
    with pytest.raises(FieldParseError):
        field_from_doc({"kind": "quaternions"})
