from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leibnizalg.errors import UnsupportedFactorization, ZeroPolynomial
from leibnizalg.fields import QQ, gf
from leibnizalg.linalg import is_nilpotent_operator
from leibnizalg.poly import (Poly, companion_matrix, format_poly,
                             is_irreducible, poly, poly_factor,
                             poly_from_ints, poly_gcd, rational_roots,
                             x_power)


def gf_poly_simple(q, max_deg=6):
    F = gf(q)
    ints = st.integers(0, q - 1)
    return st.lists(ints, max_size=max_deg + 1).map(
        lambda cs: Poly(F, tuple(_trim(F, cs))))


def _trim(F, cs):
    out = list(cs)
    while out and F.is_zero(out[-1]):
        out.pop()
    return out


def qq_poly(max_deg=4):
    fr = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))
    return st.lists(fr, max_size=max_deg + 1).map(
        lambda cs: Poly(QQ, tuple(_trim(QQ, cs))))


# ----------------------------------------------------------------- ring ops

@given(gf_poly_simple(5), gf_poly_simple(5))
def test_divmod_round_trip_gf5(f, g):
    if g.is_zero():
        return
    quo, rem = f.divmod(g)
    assert quo * g + rem == f
    assert rem.is_zero() or rem.degree < g.degree


@given(qq_poly(), qq_poly())
def test_divmod_round_trip_qq(f, g):
    if g.is_zero():
        return
    quo, rem = f.divmod(g)
    assert quo * g + rem == f


@given(gf_poly_simple(3, 4), gf_poly_simple(3, 4), gf_poly_simple(3, 3))
def test_gcd_divides_both(f, g, h):
    if f.is_zero() or g.is_zero() or h.is_zero():
        return
    d = poly_gcd(f * h, g * h)
    assert d.is_monic
    assert (f * h % d).is_zero()
    assert (g * h % d).is_zero()
    # the common factor h divides the gcd
    assert (d % h.monic()).is_zero()


def test_gcd_zero_inputs():
    F = gf(3)
    f = poly_from_ints(F, [1, 1])
    assert poly_gcd(f, Poly(F, ())) == f.monic()
    assert poly_gcd(Poly(F, ()), Poly(F, ())).is_zero()


def test_pow_matches_repeated_mul():
    F = gf(2)
    f = poly_from_ints(F, [1, 1])
    assert f ** 3 == f * f * f
    assert f ** 0 == poly_from_ints(F, [1])


# -------------------------------------------------------------- factorization

@pytest.mark.parametrize("q", (2, 3, 4, 9))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_factor_remultiplies_finite(q, data):
    F = gf(q)
    coeffs = data.draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=7))
    f = Poly(F, tuple(_trim(F, coeffs)))
    if f.is_zero():
        return
    unit, factors = poly_factor(f)
    prod = Poly(F, (unit,))
    for g, mult in factors:
        assert g.is_monic
        assert is_irreducible(g)
        prod = prod * g ** mult
    assert prod == f


def test_factor_known_rationals():
    
    x = x_power(QQ, 1)
    one = poly(QQ, [Fraction(1)])

    f = x * x - one  # x^2 - 1
    unit, factors = poly_factor(f)
    assert unit == 1
    assert [(format_poly(g), m) for g, m in factors] == [("x - 1", 1), ("x + 1", 1)]

    g = x * x + one  # x^2 + 1 irreducible
    _, factors = poly_factor(g)
    assert factors == [(g, 1)]
    assert is_irreducible(g)

    h = poly(QQ, [Fraction(0), Fraction(-2), Fraction(0), Fraction(2)])  # 2x^3 - 2x
    unit, factors = poly_factor(h)
    assert unit == 2
    # sorted by degree then ascending coefficient tuple
    assert [(format_poly(p), m) for p, m in factors] == [
        ("x - 1", 1), ("x", 1), ("x + 1", 1)]

    quartic = x ** 4 + one  # irreducible over Q
    _, factors = poly_factor(quartic)
    assert factors == [(quartic, 1)]

    biquad = x ** 4 - one
    _, factors = poly_factor(biquad)
    assert sorted(format_poly(p) for p, _ in factors) == ["x + 1", "x - 1", "x^2 + 1"]


def test_factor_rational_degree_cap():
    
    x = x_power(QQ, 1)
    f = x ** 5 - x - poly(QQ, [Fraction(1)])
    with pytest.raises(UnsupportedFactorization):
        poly_factor(f)
    # but a quintic that splits off rational roots down to degree <= 4 is fine
    g = (x ** 4 + poly(QQ, [Fraction(1)])) * x
    _, factors = poly_factor(g)
    assert len(factors) == 2


def test_factor_zero_raises():
    
    with pytest.raises(ZeroPolynomial):
        poly_factor(Poly(QQ, ()))


def test_rational_roots():
    x = x_power(QQ, 1)
    f = (poly(QQ, [Fraction(-1), Fraction(2)])) * (x + poly(QQ, [Fraction(3)]))
    roots = rational_roots(f)
    assert set(roots) == {Fraction(1, 2), Fraction(-3)}
    assert rational_roots(x * x - poly(QQ, [Fraction(2)])) == []


@pytest.mark.parametrize("q,deg,count", [(2, 2, 1), (2, 3, 2), (3, 2, 3)])
def test_irreducible_counts(q, deg, count):
    # number of monic irreducibles of degree d over GF(q): d=2 -> (q^2-q)/2, d=3 -> (q^3-q)/3
    from leibnizalg.poly import monic_polys
    F = gf(q)
    found = [f for f in monic_polys(F, deg) if is_irreducible(f)]
    assert len(found) == count


# ----------------------------------------------------------------- companion

def test_companion_matrix_shape_and_action():
    F = gf(5)
    p = poly_from_ints(F, [2, 3, 0, 1])  # x^3 + 3x + 2
    C = companion_matrix(p)
    assert len(C) == 3 and all(len(row) == 3 for row in C)
    # column 0 maps e_0 to e_1, column 1 maps e_1 to e_2
    col = [C[r][0] for r in range(3)]
    assert col == [0, 1, 0]
    col = [C[r][1] for r in range(3)]
    assert col == [0, 0, 1]
    # last column carries -(low coefficients)
    col = [C[r][2] for r in range(3)]
    assert col == [F.neg(F.from_int(2)), F.neg(F.from_int(3)), F.neg(F.zero)]


def test_companion_nilpotent_iff_power_of_x():
    F = gf(3)
    assert is_nilpotent_operator(F, companion_matrix(poly_from_ints(F, [0, 0, 0, 1])))
    assert not is_nilpotent_operator(F, companion_matrix(poly_from_ints(F, [0, 1, 0, 1])))


# ------------------------------------------------------------------- display

def test_format_poly():
    F = gf(3)
    assert format_poly(poly_from_ints(F, [1, 2, 1])) == "x^2 + 2*x + 1"
    assert format_poly(Poly(F, ())) == "0"
    assert format_poly(poly(QQ, [Fraction(-1, 2), Fraction(1)])) == "x - 1/2"
