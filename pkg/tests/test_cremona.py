import pytest
from hypothesis import given, strategies as st

from fpc.arith import ParamPoly, poly
from fpc.cremona import (CremonaError, DivergenceFailure, DivergenceProof, Pairs8, TriBlock10,
                         certify_divergence, cremona_k, cremona_step, pairs8_closed_form,
                         pairs8_recurrence, triblock10_closed_form)
from fpc.systems import FatPointSystem, parse_system


def sys_(text):
    return parse_system("system " + text)


def test_step_examples():
    s = FatPointSystem.of(28, [15] * 7)
    assert cremona_k(s, (1, 2, 3, 4)) == ParamPoly.const(-4)
    assert cremona_step(s, (1, 2, 3, 4)).constants() == (24, (11, 11, 11, 11, 15, 15, 15))

    s = FatPointSystem.of(7, [5, 3, 3, 3, 3])
    assert cremona_step(s, (1, 2, 3, 4)) == s

    s = sys_("deg=12m-1 mults=7m*6")
    assert cremona_k(s, (1, 2, 3, 4)) == poly("-4m-2")
    assert cremona_step(s, (1, 2, 3, 4)) == sys_("deg=8m-3 mults=3m-2*4,7m*2")


@pytest.mark.parametrize("idx", [(1, 2, 3), (1, 1, 2, 3), (1, 2, 3, 9)])
def test_bad_indices(idx):
    with pytest.raises(CremonaError):
        cremona_step(FatPointSystem.of(5, [1] * 6), idx)


mult = st.tuples(st.integers(-9, 9), st.integers(-20, 20)).map(lambda p: ParamPoly.linear(*p))


@given(mult, st.lists(mult, min_size=4, max_size=10), st.data())
def test_involution(d, ms, data):
    s = FatPointSystem.of(d, ms)
    idx = data.draw(st.permutations(range(1, len(ms) + 1)))[:4]
    assert cremona_step(cremona_step(s, idx), idx) == s


def test_pairs8_examples():
    t, s1, s2 = ParamPoly((0, 1)), ParamPoly.const(5), ParamPoly.const(7)
    assert pairs8_closed_form(t, s1, s2, 0) == (t, s1, s2)
    assert pairs8_closed_form(t, s1, s2, 1) == (9 * t - 3 * s1 - s2, 8 * t - 3 * s1, 24 * t - 8 * s1 - 3 * s2)
    T, _, _ = pairs8_closed_form(1, 0, 0, 3)
    assert T == ParamPoly.const(73)


def _iterate_pairs8(n):
    s = FatPointSystem.of(1, [0] * 8, m0=0)
    for _ in range(n):
        s = cremona_step(cremona_step(s, (1, 2, 3, 4)), (5, 6, 7, 8))
    t, m = s.constants()
    return t, sum(m[:4]), sum(m[4:])


def test_pairs8_matches_iteration():
    for n in range(12):
        T, S1, S2 = pairs8_closed_form(1, 0, 0, n)
        assert (T.constant, S1.constant, S2.constant) == _iterate_pairs8(n)


def test_pairs8_recurrence_identity():
    # polynomial identity in t, s1, s2 checked on a grid of integer values
    for n in range(1, 6):
        for t, s1, s2 in [(1, 0, 0), (0, 1, 0), (0, 0, 1), (3, -2, 5)]:
            assert pairs8_recurrence(*pairs8_closed_form(t, s1, s2, n - 1)) == pairs8_closed_form(t, s1, s2, n)


def test_triblock10_examples():
    assert triblock10_closed_form(0) == FatPointSystem.of(1, [0] * 10, m0=0)
    assert triblock10_closed_form(1).constants() == (55, (54, 12, 12, 12, 18, 18, 18, 24, 24, 24))
    s = FatPointSystem.of(1, [0] * 10, m0=0)
    pat = TriBlock10(1, ((2, 3, 4), (5, 6, 7), (8, 9, 10)))
    for _ in range(2):
        for idx in pat.steps():
            s = cremona_step(s, idx)
    assert s == triblock10_closed_form(2)


def test_divergence_n8():
    proof = certify_divergence(sys_("deg=2m-1 mults=m*8"), Pairs8(tuple(range(1, 9))))
    assert isinstance(proof, DivergenceProof)
    assert proof.drift < 0 and len(proof.first_round) == 2


def test_divergence_n14():
    s = sys_("deg=7m-1 mults=5m,3m*9")
    proof = certify_divergence(s, TriBlock10(1, ((2, 3, 4), (5, 6, 7), (8, 9, 10))))
    assert isinstance(proof, DivergenceProof)


def test_divergence_failures():
    # free part (1; 0^8) grows instead of shrinking
    r = certify_divergence(sys_("deg=2m+1 mults=m*8"), Pairs8(tuple(range(1, 9))))
    assert isinstance(r, DivergenceFailure) and "8t-2s1-2s2" in r.reason
    # slope part is not fixed by the steps
    r = certify_divergence(sys_("deg=3m-1 mults=m*8"), Pairs8(tuple(range(1, 9))))
    assert not r and "parametric" in r.reason
    r = certify_divergence(sys_("deg=2m-1 mults=m*7"), Pairs8(tuple(range(1, 9))))
    assert not r
