import pytest
from hypothesis import given, strategies as st

from fpc.arith import ParamPoly, poly
from fpc.systems import (FatPointSystem, SystemError_, conditions_count, drop_nonpositive,
                         format_system, instantiate, parse_system, projective_vdim)


def test_conditions_count():
    assert conditions_count(4) == 20
    assert conditions_count(0) == 0
    assert conditions_count(-3) == 0
    assert conditions_count(7) == 84


def test_projective_vdim():
    assert projective_vdim(15, [4] * 57) == -325
    assert projective_vdim(9, [4] * 11) == -1
    assert projective_vdim(0, []) == 0
    with pytest.raises(ValueError):
        projective_vdim(-1, [])


def test_instantiate():
    s = parse_system("system deg=12m-1 mults=7m*6 m0=1")
    i = instantiate(s, 3)
    assert i.constants() == (35, (21,) * 6)
    with pytest.raises(SystemError_):
        instantiate(s, 0)


def test_drop_nonpositive():
    s = parse_system("system deg=-15 mults=-m-8*6,-m-4 m0=1")
    assert drop_nonpositive(s).mults == ()
    s = parse_system("system deg=4m-5 mults=3m-2*2,-m-4*2,3m-2*2 m0=1")
    assert drop_nonpositive(s).n == 4


def test_drop_refuses_uncertified():
    s = parse_system("system deg=1 mults=m-3 m0=1")
    with pytest.raises(SystemError_, match="positive at m=4"):
        drop_nonpositive(s)


def test_parse_with_other_parameter():
    s = parse_system("system deg=6r-3 mults=4r-2,3r-2*7 m0=3")
    assert s.var == "r" and s.n == 8 and s.m0 == 3
    assert format_system(s) == "system deg=6r-3 mults=4r-2,3r-2*7 m0=3"


def test_parse_errors():
    with pytest.raises(ValueError):
        parse_system("deg=1 mults=2")
    with pytest.raises(ValueError):
        parse_system("system mults=2")
    with pytest.raises(ValueError):
        parse_system("system deg=2m mults=3r")


lin = st.tuples(st.integers(-30, 30), st.integers(-30, 30)).map(lambda p: ParamPoly.linear(*p))


@given(lin, st.lists(lin, max_size=9), st.integers(0, 5))
def test_format_round_trip(d, ms, m0):
    s = FatPointSystem.of(d, ms, m0=m0)
    assert parse_system(format_system(s)) == s


@given(st.lists(st.integers(-10, 10), max_size=8))
def test_drop_idempotent(ms):
    s = FatPointSystem.of(5, ms, m0=0)
    once = drop_nonpositive(s)
    assert drop_nonpositive(once) == once
    assert all(x.constant > 0 for x in once.mults)
