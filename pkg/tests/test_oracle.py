import random
from math import comb

import pytest

from fpc.oracle import (DEFAULT_PRIME, OracleError, PointSet, alpha_bounds, conditions_matrix,
                        cross_check_cremona, dimension, dimension_info, is_prime, parse_mults_spec)


def test_no_conditions():
    for t in range(6):
        assert dimension([], t) == comb(t + 3, 3)


def test_simple_points():
    assert dimension([1] * 5, 1) == 0
    assert dimension([1] * 5, 2) == 5
    assert alpha_bounds([1] * 5, 5).alpha_est == 2


@pytest.mark.parametrize("t", range(1, 13))
def test_single_point_exact(t):
    for m in range(1, t + 1):
        assert dimension([m], t) == comb(t + 3, 3) - comb(m + 2, 3)


def test_matrix_shape():
    cm = conditions_matrix([3, 2], 4, PointSet.generate(2))
    assert cm.shape == (10 + 4, 35)


def test_monotone_in_multiplicity():
    rng = random.Random(3)
    for _ in range(100):
        n = rng.randint(1, 6)
        mults = [rng.randint(0, 4) for _ in range(n)]
        t = rng.randint(2, 7)
        pts = PointSet.generate(n, seed=rng.randint(1, 10 ** 6))
        base = dimension(mults, t, pts)
        j = rng.randrange(n)
        bumped = mults[:j] + [mults[j] + 1] + mults[j + 1:]
        assert dimension(bumped, t, pts) <= base


def test_deterministic():
    a = dimension_info([4] * 9, 8, PointSet.generate(9, seed=5)).as_dict()
    b = dimension_info([4] * 9, 8, PointSet.generate(9, seed=5)).as_dict()
    assert a == b and a["seed"] == 5 and a["prime"] == DEFAULT_PRIME


def test_zero_is_seed_stable():
    for seed in range(1, 6):
        assert dimension([4] * 11, 9, PointSet.generate(11, seed=seed)) == 0


def test_cross_check_cremona():
    chk = cross_check_cremona(12, [7] * 5, (1, 2, 3, 4))
    assert chk.image == (8, (3, 3, 3, 3, 7)) and chk.equal
    chk = cross_check_cremona(7, [5, 3, 3, 3], (1, 2, 3, 4))
    assert chk.image == chk.source and chk.equal
    chk = cross_check_cremona(24, [11] * 4 + [15] * 3, (1, 2, 3, 4))
    assert chk.image == (28, (15,) * 7) and chk.equal


def test_cross_check_statistics():
    rng = random.Random(11)
    trials = agree = 0
    while trials < 40:
        n = rng.randint(4, 7)
        mults = [rng.randint(1, 4) for _ in range(n)]
        t = rng.randint(max(mults), 8)
        k = 2 * t - sum(mults[:4])
        if t + k < 0 or min(mults[:4]) + k < 0:
            continue
        trials += 1
        agree += cross_check_cremona(t, mults, (1, 2, 3, 4), seed=rng.randint(1, 999)).equal
    assert agree / trials >= 0.95


def test_errors():
    with pytest.raises(OracleError):
        dimension([1, 1], 3, PointSet.generate(3))
    with pytest.raises(OracleError):
        dimension([1], 3, PointSet.generate(1, prime=32000))
    with pytest.raises(OracleError):
        dimension([1], 7, PointSet.generate(1, prime=7))
    assert not is_prime(32000) and is_prime(32003)


def test_parse_mults_spec():
    assert parse_mults_spec("14,14,7x5") == [14, 14] + [7] * 5
