from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fpc.arith import (Cmp, ParamPoly, PolySyntaxError, Sign, cmp_with_cuberoot, eval_poly,
                       format_poly, format_rat, icbrt_floor, negative_for_all_ge, nonneg_for_all_ge,
                       parse_poly, parse_rat, poly)

polys = st.lists(st.integers(-50, 50), max_size=4).map(lambda c: ParamPoly(tuple(c)))


def test_eval_examples():
    assert eval_poly(poly("12m-1"), 3) == 35
    assert eval_poly(poly("54n^2+1"), 1) == 55
    assert poly("-4r+29")(8) == -3


def test_parse_reports_variable():
    p, var = parse_poly("3r-2")
    assert var == "r" and p == ParamPoly.linear(3, -2)
    assert parse_poly("-15") == (ParamPoly.const(-15), None)


@pytest.mark.parametrize("bad", ["", "3m+", "m^", "2x+3y", "4**m"])
def test_parse_rejects(bad):
    with pytest.raises(PolySyntaxError):
        parse_poly(bad)


def test_nonneg_examples():
    v = nonneg_for_all_ge(ParamPoly.const(-15), 1)
    assert v.verdict is Sign.NO and v.witness == 1
    assert nonneg_for_all_ge(poly("8m-3"), 1).verdict is Sign.YES
    v = nonneg_for_all_ge(poly("29-4r"), 5)
    assert v.verdict is Sign.NO and v.witness == 8


def test_nonneg_quadratic_dip():
    # (m-5)^2 - 1 is negative only at m = 5
    p = (poly("m") - 5) ** 2 - 1
    v = nonneg_for_all_ge(p, 0)
    assert v.verdict is Sign.NO and p(v.witness) < 0
    assert nonneg_for_all_ge(p, 6).verdict is Sign.YES


def test_strict_sign_helpers():
    assert negative_for_all_ge(poly("-m-8"), 1)
    assert not negative_for_all_ge(poly("-m+1"), 1)


def test_cuberoot_comparisons():
    assert cmp_with_cuberoot(Fraction(3, 7), 0, 6, Fraction(7787, 10 ** 4)) is Cmp.LT
    assert cmp_with_cuberoot(1, 0, 27, 3) is Cmp.GE
    assert cmp_with_cuberoot(1, 0, 28, 3) is Cmp.LT
    assert cmp_with_cuberoot(2, Fraction(11, 5), 390, 18) is Cmp.GE


def test_rationals():
    assert parse_rat("107/39") == Fraction(107, 39)
    assert parse_rat("4.3") == Fraction(43, 10)
    assert format_rat(Fraction(126, 57)) == "42/19"
    with pytest.raises(ValueError):
        parse_rat("1/0")


def test_large_integers_exact():
    big = 10 ** 200 + 7
    p = ParamPoly((big, 3))
    assert p(10 ** 100) == big + 3 * 10 ** 100
    assert icbrt_floor(big ** 3) == big
    assert icbrt_floor(big ** 3 - 1) == big - 1


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ParamPoly()


@given(polys, st.integers(-20, 20), st.integers(-20, 20))
def test_eval_is_homomorphism(a, v, s):
    assert (a * a)(v) == a(v) ** 2
    assert a.shift(s)(v) == a(v + s)


@given(polys)
def test_format_parse_round_trip(a):
    assert poly(format_poly(a)) == a if a.degree >= 1 else parse_poly(format_poly(a))[0] == a


@given(polys, st.integers(0, 10))
def test_nonneg_verdicts_are_sound(p, m0):
    v = nonneg_for_all_ge(p, m0)
    if v.verdict is Sign.NO:
        assert v.witness >= m0 and p(v.witness) < 0
    elif v.verdict is Sign.YES:
        assert all(p(x) >= 0 for x in range(m0, m0 + 200))
    else:
        assert p.degree >= 3
