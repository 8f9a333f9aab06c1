"""Monomial ideals of at most ``N+1`` coordinate points in ``P^N``.

With points ``e_0, ..., e_{n-1}`` the ideal ``I`` is generated by ``x_j``
(``j >= n``) and ``x_j x_k`` (``j < k < n``), and ``I^(m)`` is spanned in degree
``t`` by the monomials with ``a_k <= t - m`` for every ``k < n``.  This module
checks ``I^(3r-2) in M^(2r-2) I^r`` two independent ways: the explicit
factorization and a brute-force product membership search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

Monomial = Tuple[int, ...]


def degree(a: Monomial) -> int:
    return sum(a)


def divides(g: Monomial, a: Monomial) -> bool:
    return all(x <= y for x, y in zip(g, a))


def quotient(a: Monomial, g: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(g, a))


def product(ms: Iterable[Monomial], nvars: int) -> Monomial:
    out = [0] * nvars
    for m in ms:
        for i, e in enumerate(m):
            out[i] += e
    return tuple(out)


def unit(j: int, nvars: int) -> Monomial:
    return tuple(1 if i == j else 0 for i in range(nvars))


def format_monomial(a: Monomial) -> str:
    parts = []
    for i, e in enumerate(a):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts) or "1"


def monomials_of_degree(t: int, nvars: int) -> Iterator[Monomial]:
    if nvars == 1:
        yield (t,)
        return
    for a in range(t, -1, -1):
        for rest in monomials_of_degree(t - a, nvars - 1):
            yield (a,) + rest


@dataclass(frozen=True)
class MonomialIdealBasis:
    """Minimal monomial generators (an antichain under divisibility)."""

    gens: Tuple[Monomial, ...]

    @classmethod
    def of(cls, gens: Iterable[Monomial]) -> "MonomialIdealBasis":
        gs = sorted(set(gens), key=lambda g: (degree(g), tuple(-x for x in g)))
        minimal: List[Monomial] = []
        for g in gs:
            if not any(divides(h, g) for h in minimal):
                minimal.append(g)
        return cls(tuple(minimal))

    @property
    def nvars(self) -> int:
        return len(self.gens[0]) if self.gens else 0

    def contains(self, a: Monomial) -> bool:
        return any(divides(g, a) for g in self.gens)

    def is_maximal_ideal(self) -> bool:
        n = self.nvars
        return n > 0 and set(self.gens) == {unit(j, n) for j in range(n)}


def maximal_ideal(N: int = 3) -> MonomialIdealBasis:
    return MonomialIdealBasis.of(unit(j, N + 1) for j in range(N + 1))


def points_ideal(n: int, N: int = 3) -> MonomialIdealBasis:
    """Ideal of the first ``n`` coordinate points of ``P^N``."""
    if not 1 <= n <= N + 1:
        raise ValueError(f"need 1 <= n <= {N + 1}")
    nv = N + 1
    gens = [unit(j, nv) for j in range(n, nv)]
    gens += [product((unit(j, nv), unit(k, nv)), nv) for j in range(n) for k in range(j + 1, n)]
    return MonomialIdealBasis.of(gens)


def in_symbolic_power(a: Monomial, n: int, m: int) -> bool:
    """Vanishing to order ``m`` at each of ``e_0..e_{n-1}``."""
    t = degree(a)
    return all(a[k] <= t - m for k in range(n))


def symbolic_power_generators(n: int, m: int, t: int, N: int = 3) -> FrozenSet[Monomial]:
    """All degree-``t`` monomials of ``I^(m)`` for ``n`` coordinate points."""
    if not 1 <= n <= N + 1:
        raise ValueError(f"need 1 <= n <= {N + 1}")
    if m < 1 or t < 0:
        raise ValueError("need m >= 1 and t >= 0")
    if t < m:
        return frozenset()
    return frozenset(a for a in monomials_of_degree(t, N + 1) if in_symbolic_power(a, n, m))


# --- the factorization ------------------------------------------------------

@dataclass(frozen=True)
class Factorization:
    y: Tuple[Monomial, ...]  # r generators of I
    z: Monomial              # cofactor, degree >= 2r - 2

    def __bool__(self) -> bool:
        return True

    def recompose(self) -> Monomial:
        return product(self.y + (self.z,), len(self.z))


@dataclass(frozen=True)
class Failure:
    reason: str

    def __bool__(self) -> bool:
        return False


def case5_factorize(a: Monomial, n: int, r: int, strict: bool = True) -> Union[Factorization, Failure]:
    """Split ``x^a = y_1 ... y_r z`` with ``y_i`` generators of ``I`` and ``deg z >= 2r - 2``.

    Uses as many single variables ``x_j`` (``j >= n``) as possible, then pairs of
    distinct first-block variables taken from the two largest remaining exponents.
    With ``strict`` the input must lie in ``I^(3r-2)``; a failure then means the
    construction is wrong.
    """
    nv = len(a)
    if not 1 <= n <= nv:
        raise ValueError(f"need 1 <= n <= {nv}")
    if r < 1:
        raise ValueError("r must be positive")
    if strict and not in_symbolic_power(a, n, 3 * r - 2):
        return Failure(f"{format_monomial(a)} is not in I^({3 * r - 2})")
    rest = list(a)
    y: List[Monomial] = []
    # singles, round-robin over x_n, ..., x_N
    while len(y) < r:
        avail = [j for j in range(n, nv) if rest[j] > 0]
        if not avail:
            break
        for j in avail:
            if len(y) == r:
                break
            rest[j] -= 1
            y.append(unit(j, nv))
    while len(y) < r:
        first = sorted(range(n), key=lambda j: (-rest[j], j))
        if len(first) < 2 or rest[first[1]] == 0:
            return Failure(f"{format_monomial(a)}: not enough distinct first-block variables for pairs")
        j, k = sorted(first[:2])
        rest[j] -= 1
        rest[k] -= 1
        y.append(product((unit(j, nv), unit(k, nv)), nv))
    z = tuple(rest)
    if degree(z) < 2 * r - 2:
        return Failure(f"{format_monomial(a)}: cofactor degree {degree(z)} < {2 * r - 2}")
    return Factorization(tuple(y), z)


# --- brute-force membership ---------------------------------------------------

def member_of_product(a: Monomial, factors: Sequence[MonomialIdealBasis]) -> bool:
    """Whether ``x^a`` lies in the product of the given monomial ideals.

    Depth-first over generator choices; repeated factors are chosen in
    nondecreasing generator order and copies of ``M`` are settled by degree.
    """
    if not factors:
        return True
    nmax = sum(1 for f in factors if f.is_maximal_ideal())
    rest = [f for f in factors if not f.is_maximal_ideal()]
    if any(not f.gens for f in rest):
        return False
    mindeg = [0] * (len(rest) + 1)
    for i in range(len(rest) - 1, -1, -1):
        mindeg[i] = mindeg[i + 1] + min(degree(g) for g in rest[i].gens)

    @lru_cache(maxsize=None)
    def go(x: Monomial, i: int, lo: int) -> bool:
        if degree(x) < mindeg[i] + nmax:
            return False
        if i == len(rest):
            return True
        same = i > 0 and rest[i] == rest[i - 1]
        start = lo if same else 0
        for gi in range(start, len(rest[i].gens)):
            g = rest[i].gens[gi]
            if divides(g, x) and go(quotient(x, g), i + 1, gi):
                return True
        return False

    return go(tuple(a), 0, 0)


def containment_factors(n: int, r: int, N: int = 3) -> List[MonomialIdealBasis]:
    """Factors of ``M^(2r-2) I^r``."""
    return [points_ideal(n, N)] * r + [maximal_ideal(N)] * (2 * r - 2)


@dataclass
class Case5Report:
    n: int
    r: int
    t_max: int
    checked: int = 0
    factorized: int = 0
    members: int = 0
    agree: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures and self.factorized == self.checked == self.members == self.agree

    @property
    def agreement_rate(self) -> float:
        return self.agree / self.checked if self.checked else 1.0

    def summary(self) -> str:
        state = "pass" if self.ok else "FAIL"
        return (f"case5 n={self.n} r={self.r} t<={self.t_max}: {state}; {self.checked} generators, "
                f"{self.factorized} factorized, {self.members} members, agreement {self.agreement_rate:.0%}")


def verify_case5(n: int, r: int, t_max: int, N: int = 3) -> Case5Report:
    """Every degree-``t`` generator of ``I^(3r-2)`` (``t <= t_max``) factors and is a member."""
    rep = Case5Report(n, r, t_max)
    factors = containment_factors(n, r, N)
    m = 3 * r - 2
    for t in range(m, t_max + 1):
        for a in sorted(symbolic_power_generators(n, m, t, N)):
            rep.checked += 1
            f = case5_factorize(a, n, r)
            mem = member_of_product(a, factors)
            ok_f = bool(f) and f.recompose() == a and all(points_ideal(n, N).contains(y) for y in f.y)
            rep.factorized += ok_f
            rep.members += mem
            rep.agree += ok_f == mem
            if not ok_f:
                rep.failures.append(f.reason if isinstance(f, Failure) else f"bad factorization of {a}")
            elif not mem:
                rep.failures.append(f"{format_monomial(a)} factorized but not found by search")
    return rep


__all__ = [
    "Case5Report", "Factorization", "Failure", "Monomial", "MonomialIdealBasis", "case5_factorize",
    "containment_factors", "degree", "divides", "format_monomial", "in_symbolic_power", "maximal_ideal",
    "member_of_product", "monomials_of_degree", "points_ideal", "product", "symbolic_power_generators",
    "verify_case5",
]
