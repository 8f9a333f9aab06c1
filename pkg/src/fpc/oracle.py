"""Finite-field interpolation oracle.

Computes ``dim I(m_1, ..., m_n)_t`` at explicit points over ``F_p`` by exact
Gaussian elimination on the conditions matrix.  A zero answer certifies
emptiness for generic points in characteristic zero; a positive answer is
evidence only.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

DEFAULT_PRIME = 32003
DEFAULT_SEED = 1

Point = Tuple[int, int, int, int]


class OracleError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


FUNDAMENTAL: Tuple[Point, ...] = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


@dataclass(frozen=True)
class PointSet:
    points: Tuple[Point, ...]
    prime: int
    seed: Optional[int] = None

    def __len__(self) -> int:
        return len(self.points)

    @classmethod
    def generate(cls, n: int, prime: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED,
                 fundamental: bool = True) -> "PointSet":
        """Coordinate points first (up to four), then seeded random points ``(a:b:c:1)``."""
        pts: List[Point] = list(FUNDAMENTAL[: min(n, 4)]) if fundamental else []
        rng = random.Random(seed)
        seen = {_normalize(p, prime) for p in pts}
        while len(pts) < n:
            p = (rng.randrange(prime), rng.randrange(prime), rng.randrange(prime), 1)
            key = _normalize(p, prime)
            if key in seen:
                continue
            seen.add(key)
            pts.append(p)
        return cls(tuple(pts), prime, seed)

    def validate(self) -> None:
        seen = set()
        for p in self.points:
            if all(c % self.prime == 0 for c in p):
                raise OracleError(f"point {p} has all coordinates zero mod {self.prime}")
            key = _normalize(p, self.prime)
            if key in seen:
                raise OracleError(f"point {p} repeated")
            seen.add(key)


def _normalize(p: Sequence[int], prime: int) -> Point:
    h = max(i for i, c in enumerate(p) if c % prime)
    inv = pow(p[h], prime - 2, prime)
    return tuple((c * inv) % prime for c in p)  # type: ignore[return-value]


@lru_cache(maxsize=None)
def monomials(t: int) -> Tuple[Tuple[int, int, int, int], ...]:
    """Exponent vectors of degree-``t`` monomials in four variables, lexicographic."""
    out = []
    for a in range(t, -1, -1):
        for b in range(t - a, -1, -1):
            for c in range(t - a - b, -1, -1):
                out.append((a, b, c, t - a - b - c))
    return tuple(out)


@lru_cache(maxsize=None)
def _local_exponents(m: int) -> Tuple[Tuple[int, int, int], ...]:
    return tuple((i, j, k) for d in range(m) for i in range(d + 1)
                 for j in range(d - i + 1) for k in (d - i - j,))


def _binom_table(t: int, prime: int) -> np.ndarray:
    tab = np.zeros((t + 1, t + 1), dtype=np.int64)
    for a in range(t + 1):
        for e in range(a + 1):
            tab[a, e] = comb(a, e) % prime
    return tab


def _fundamental_index(p: Point) -> Optional[int]:
    nz = [i for i, c in enumerate(p) if c]
    return nz[0] if len(nz) == 1 else None


@dataclass
class ConditionsMatrix:
    """Vanishing conditions (rows) against degree-``t`` monomials (columns) over ``F_p``.

    Coordinate points impose unit rows; they are kept as a set of killed columns
    instead of explicit rows.
    """

    t: int
    prime: int
    rows: np.ndarray
    killed_columns: frozenset
    n_condition_rows: int

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_condition_rows, comb(self.t + 3, 3)


def conditions_matrix(mults: Sequence[int], t: int, pts: PointSet) -> ConditionsMatrix:
    prime = pts.prime
    mons = monomials(t)
    ncols = len(mons)
    exps = np.array(mons, dtype=np.int64).reshape(ncols, 4)
    binom = _binom_table(t, prime)
    killed = set()
    blocks = []
    nrows = 0
    for m, p in zip(mults, pts.points):
        if m <= 0:
            continue
        nrows += comb(m + 2, 3)
        h = _fundamental_index(p)
        if h is not None:
            # order >= m at e_h  <=>  exponent of x_h at most t - m
            killed.update(np.nonzero(exps[:, h] > t - m)[0].tolist())
            continue
        h = max(i for i, c in enumerate(p) if c % prime)
        inv = pow(p[h], prime - 2, prime)
        coords = [(c * inv) % prime for c in p]
        others = [j for j in range(4) if j != h]
        # powers[j][a] = coords[j]**a mod p
        powers = np.ones((3, t + 1), dtype=np.int64)
        for r, j in enumerate(others):
            for a in range(1, t + 1):
                powers[r, a] = powers[r, a - 1] * coords[j] % prime
        loc = _local_exponents(m)
        block = np.ones((len(loc), ncols), dtype=np.int64)
        for r, j in enumerate(others):
            a = exps[:, j]  # exponent of x_j in each monomial
            e = np.array([le[r] for le in loc], dtype=np.int64)[:, None]
            diff = a[None, :] - e
            ok = diff >= 0
            dclip = np.where(ok, diff, 0)
            factor = binom[a[None, :].repeat(len(loc), 0), np.minimum(e, t).repeat(ncols, 1)]
            factor = factor * powers[r, dclip] % prime
            factor = np.where(ok, factor, 0)
            block = block * factor % prime
        blocks.append(block)
    rows = np.vstack(blocks) if blocks else np.zeros((0, ncols), dtype=np.int64)
    return ConditionsMatrix(t, prime, rows, frozenset(killed), nrows)


def _panel_pivots(s: np.ndarray, prime: int) -> Tuple[List[int], List[int]]:
    """Pivot rows and columns of a narrow panel, by plain elimination on a copy."""
    s = s.copy()
    order = np.arange(s.shape[0])
    prow: List[int] = []
    pcol: List[int] = []
    r = 0
    for col in range(s.shape[1]):
        if r == s.shape[0]:
            break
        nz = np.nonzero(s[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            s[[r, piv]] = s[[piv, r]]
            order[[r, piv]] = order[[piv, r]]
        inv = pow(int(s[r, col]), prime - 2, prime)
        s[r, col:] = s[r, col:] * inv % prime
        below = r + 1 + np.nonzero(s[r + 1:, col])[0]
        if below.size:
            f = s[below, col][:, None]
            s[below, col:] = (s[below, col:] - f * s[r, col:][None, :]) % prime
        prow.append(int(order[r]))
        pcol.append(col)
        r += 1
    return prow, pcol


def _inverse_mod_p(a: np.ndarray, prime: int) -> np.ndarray:
    k = a.shape[0]
    aug = np.concatenate([a % prime, np.eye(k, dtype=np.int64)], axis=1)
    for c in range(k):
        piv = c + int(np.nonzero(aug[c:, c])[0][0])
        if piv != c:
            aug[[c, piv]] = aug[[piv, c]]
        aug[c] = aug[c] * pow(int(aug[c, c]), prime - 2, prime) % prime
        f = aug[:, c].copy()
        f[c] = 0
        aug = (aug - f[:, None] * aug[c][None, :]) % prime
    return aug[:, k:]


def _matmul_mod(a: np.ndarray, b: np.ndarray, prime: int) -> np.ndarray:
    # exact in float64 while the inner length times prime^2 stays below 2^53
    return np.mod(a.astype(np.float64) @ b.astype(np.float64), prime).astype(np.int64)


def rank_mod_p(a: np.ndarray, prime: int, block: int = 128) -> int:
    """Rank over ``F_p`` by blocked elimination.

    Each column panel is reduced on its own; the pivot rows then eliminate the
    panel from the remaining rows through one Schur-complement update done as
    floating-point matrix products, which stay exact for ``prime < 2^20``.
    """
    if prime >= 1 << 20 or block * prime * prime >= 1 << 53:
        return rank_mod_p_simple(a, prime)
    a = np.array(a, dtype=np.int64) % prime
    rank = 0
    while a.shape[0] and a.shape[1]:
        w = min(block, a.shape[1])
        prow, pcol = _panel_pivots(a[:, :w], prime)
        k = len(prow)
        rank += k
        if k == 0:
            a = a[:, w:]
            continue
        rest = np.setdiff1d(np.arange(a.shape[0]), prow)
        if rest.size == 0 or w == a.shape[1]:
            break
        x = _matmul_mod(a[np.ix_(rest, pcol)], _inverse_mod_p(a[np.ix_(prow, pcol)], prime), prime)
        a = (a[rest, w:] - _matmul_mod(x, a[prow, w:], prime)) % prime
    return rank


def rank_mod_p_simple(a: np.ndarray, prime: int) -> int:
    """Rank over ``F_p`` by dense elimination with row pivoting."""
    a = np.array(a, dtype=np.int64) % prime
    nrows, ncols = a.shape
    rank = 0
    for col in range(ncols):
        if rank == nrows:
            break
        nz = np.nonzero(a[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), prime - 2, prime)
        a[rank, col:] = a[rank, col:] * inv % prime
        below = rank + 1 + np.nonzero(a[rank + 1:, col])[0]
        if below.size:
            f = a[below, col][:, None]
            a[below, col:] = (a[below, col:] - f * a[rank, col:][None, :]) % prime
        rank += 1
    return rank


@dataclass
class DimensionResult:
    dimension: int
    rank: int
    shape: Tuple[int, int]
    prime: int
    seed: Optional[int]
    t: int
    mults: Tuple[int, ...]

    def as_dict(self) -> Dict[str, object]:
        return {
            "dimension": self.dimension,
            "rank": self.rank,
            "rows": self.shape[0],
            "cols": self.shape[1],
            "prime": self.prime,
            "seed": self.seed,
            "t": self.t,
            "mults": list(self.mults),
        }


def _check_inputs(mults: Sequence[int], t: int, pts: PointSet) -> None:
    if len(mults) != len(pts):
        raise OracleError(f"{len(mults)} multiplicities but {len(pts)} points")
    if not is_prime(pts.prime):
        raise OracleError(f"{pts.prime} is not prime")
    if pts.prime <= t:
        raise OracleError(f"prime {pts.prime} too small for degree {t}")
    pts.validate()


def dimension_info(mults: Sequence[int], t: int, pts: PointSet) -> DimensionResult:
    mults = tuple(int(m) for m in mults)
    if t < 0:
        return DimensionResult(0, 0, (0, 0), pts.prime, pts.seed, t, mults)
    _check_inputs(mults, t, pts)
    cm = conditions_matrix(mults, t, pts)
    ncols = comb(t + 3, 3)
    keep = [c for c in range(ncols) if c not in cm.killed_columns]
    rank = len(cm.killed_columns)
    if keep and cm.rows.shape[0]:
        rank += rank_mod_p(cm.rows[:, keep], pts.prime)
    return DimensionResult(ncols - rank, rank, cm.shape, pts.prime, pts.seed, t, mults)


def dimension(mults: Sequence[int], t: int, pts: Optional[PointSet] = None,
              prime: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED) -> int:
    """Dimension of the degree-``t`` piece of the fat-point ideal at the given points."""
    if pts is None:
        pts = PointSet.generate(len(mults), prime, seed)
    return dimension_info(mults, t, pts).dimension


@dataclass
class AlphaResult:
    alpha_low: int
    alpha_est: Optional[int]
    dims: Dict[int, int] = field(default_factory=dict)


def alpha_bounds(mults: Sequence[int], t_max: int, pts: Optional[PointSet] = None,
                 prime: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED,
                 t_min: int = 0) -> AlphaResult:
    """Scan degrees upward until the first nonzero piece.

    ``alpha_low`` is rigorous for generic points in characteristic zero;
    ``alpha_est`` is the measured first nonzero degree (``None`` if not reached).
    Degrees below ``max(mults)`` are skipped: a nonzero form of degree ``t``
    cannot vanish to order above ``t``.
    """
    if pts is None:
        pts = PointSet.generate(len(mults), prime, seed)
    dims: Dict[int, int] = {}
    start = max(t_min, max(mults, default=0))
    for t in range(start, t_max + 1):
        d = dimension_info(mults, t, pts).dimension
        dims[t] = d
        if d > 0:
            return AlphaResult(t, t, dims)
    return AlphaResult(t_max + 1, None, dims)


@dataclass
class CremonaCheck:
    source: Tuple[int, Tuple[int, ...]]
    image: Tuple[int, Tuple[int, ...]]
    dim_source: int
    dim_image: int
    seeds: List[int]

    @property
    def equal(self) -> bool:
        return self.dim_source == self.dim_image


def cross_check_cremona(degree: int, mults: Sequence[int], indices: Sequence[int],
                        prime: int = DEFAULT_PRIME, seed: int = DEFAULT_SEED,
                        retries: int = 2) -> CremonaCheck:
    """Compare dimensions of a constant system and its Cremona image at fresh random points."""
    from .cremona import cremona_step
    from .systems import FatPointSystem

    s = FatPointSystem.of(degree, mults, m0=0)
    img = cremona_step(s, indices)
    t2, m2 = img.constants()
    if degree < 0 or t2 < 0 or min(mults, default=0) < 0 or min(m2, default=0) < 0:
        raise OracleError("cross-check needs nonnegative degrees and multiplicities")
    seeds = []
    for attempt in range(retries + 1):
        sd = seed + 1000 * attempt
        seeds.append(sd)
        # four general points can be moved to the coordinate frame, so this
        # stays generic while the coordinate points cost no matrix rows
        pts = PointSet.generate(len(mults), prime, sd)
        d1 = dimension(mults, degree, pts)
        d2 = dimension(m2, t2, pts)
        if d1 == d2:
            break
    return CremonaCheck((degree, tuple(mults)), (t2, tuple(m2)), d1, d2, seeds)


def parse_mults_spec(text: str) -> List[int]:
    """``7x11`` or ``14,14,7x5`` into a list of integers."""
    out: List[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if "x" in item:
            v, c = item.split("x", 1)
            out.extend([int(v)] * int(c))
        else:
            out.append(int(item))
    return out
