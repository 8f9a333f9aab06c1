"""The Cremona operation and the two divergent iteration patterns."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union

from .arith import ParamPoly
from .systems import FatPointSystem


class CremonaError(ValueError):
    pass


def _check_indices(indices: Sequence[int], n: int, arity: int) -> None:
    if len(indices) != arity:
        raise CremonaError(f"expected {arity} indices, got {len(indices)}")
    if len(set(indices)) != arity:
        raise CremonaError(f"indices {list(indices)} are not distinct")
    bad = [i for i in indices if not 1 <= i <= n]
    if bad:
        raise CremonaError(f"indices {bad} out of range 1..{n}")


def cremona_k(s: FatPointSystem, indices: Sequence[int]) -> ParamPoly:
    """``k = 2t - m_a - m_b - m_c - m_d`` for the 1-based positions given."""
    _check_indices(indices, s.n, 4)
    k = s.degree * 2
    for i in indices:
        k = k - s.mults[i - 1]
    return k


def cremona_step(s: FatPointSystem, indices: Sequence[int]) -> FatPointSystem:
    k = cremona_k(s, indices)
    sel = set(indices)
    mults = tuple(m + k if i in sel else m for i, m in enumerate(s.mults, start=1))
    return s.with_(degree=s.degree + k, mults=mults)


def _step_vec(t: int, mults: List[int], indices: Sequence[int]) -> Tuple[int, int]:
    k = 2 * t - sum(mults[i - 1] for i in indices)
    for i in indices:
        mults[i - 1] += k
    return t + k, k


# --- closed forms ----------------------------------------------------------

def pairs8_closed_form(t, s1, s2, n: int) -> Tuple[ParamPoly, ParamPoly, ParamPoly]:
    """Degree and the two block sums after ``n`` rounds of Cremona on (1..4) then (5..8)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    t, s1, s2 = (ParamPoly.coerce(x) for x in (t, s1, s2))
    nn = n * n
    T = t * (8 * nn + 1) - s1 * (2 * nn + n) - s2 * (2 * nn - n)
    S1 = t * (16 * nn - 8 * n) - s1 * (4 * nn - 1) - s2 * (4 * nn - 4 * n)
    S2 = t * (16 * nn + 8 * n) - s1 * (4 * nn + 4 * n) - s2 * (4 * nn - 1)
    return T, S1, S2


def pairs8_recurrence(t, s1, s2) -> Tuple[ParamPoly, ParamPoly, ParamPoly]:
    """One round of the double Cremona written as the linear recurrence."""
    t, s1, s2 = (ParamPoly.coerce(x) for x in (t, s1, s2))
    return t * 9 - s1 * 3 - s2, t * 8 - s1 * 3, t * 24 - s1 * 8 - s2 * 3


def triblock10_closed_form(n: int) -> FatPointSystem:
    """The system reached from ``I(0^10)_1`` after ``n`` rounds of the six-step triple-block pattern."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    nn = n * n
    mults = [54 * nn] + [18 * nn - 6 * n] * 3 + [18 * nn] * 3 + [18 * nn + 6 * n] * 3
    return FatPointSystem.of(54 * nn + 1, mults, m0=0)


# --- divergence patterns ---------------------------------------------------

@dataclass(frozen=True)
class Pairs8:
    indices: Tuple[int, ...]

    def steps(self) -> List[Tuple[int, ...]]:
        return [self.indices[:4], self.indices[4:]]

    def validate(self, n: int) -> None:
        _check_indices(self.indices, n, 8)


@dataclass(frozen=True)
class TriBlock10:
    pivot: int
    triples: Tuple[Tuple[int, int, int], ...]

    @property
    def indices(self) -> Tuple[int, ...]:
        return (self.pivot,) + tuple(i for tr in self.triples for i in tr)

    def steps(self) -> List[Tuple[int, ...]]:
        one = [(self.pivot,) + tuple(tr) for tr in self.triples]
        return one + one

    def validate(self, n: int) -> None:
        if len(self.triples) != 3 or any(len(tr) != 3 for tr in self.triples):
            raise CremonaError("triblock10 needs three triples")
        _check_indices(self.indices, n, 10)


DivergencePattern = Union[Pairs8, TriBlock10]


@dataclass
class DivergenceProof:
    pattern: DivergencePattern
    slope_steps_checked: int
    free_start: Tuple[int, Tuple[int, ...]]
    first_round: List[Tuple[int, Tuple[int, ...], int]] = field(default_factory=list)
    drift: int = 0
    summary: str = ""


@dataclass
class DivergenceFailure:
    reason: str

    def __bool__(self) -> bool:
        return False


def certify_divergence(s: FatPointSystem, pattern: DivergencePattern):
    """Certify that iterating ``pattern`` drives the degree below zero for every parameter value.

    Every non-constant coefficient vector must be fixed by each step (zero
    parametric part of ``k``); the constant part then follows the closed-form
    recurrence and must drift to minus infinity.
    """
    try:
        pattern.validate(s.n)
    except CremonaError as exc:
        return DivergenceFailure(str(exc))

    steps = pattern.steps()
    checked = 0
    for power in range(1, s.param_degree + 1):
        t, mults = s.coefficient_vector(power)
        for idx in steps:
            k = 2 * t - sum(mults[i - 1] for i in idx)
            if k != 0:
                return DivergenceFailure(
                    f"step on {list(idx)} has parametric k-part {k} (m^{power}); not slope-invariant"
                )
            checked += 1

    t0, free = s.coefficient_vector(0)
    free = list(free)
    replay: List[Tuple[int, Tuple[int, ...], int]] = []

    if isinstance(pattern, Pairs8):
        i1, i2 = pattern.indices[:4], pattern.indices[4:]
        s1 = sum(free[i - 1] for i in i1)
        s2 = sum(free[i - 1] for i in i2)
        t = t0
        for idx in steps:
            t, k = _step_vec(t, free, idx)
            replay.append((t, tuple(free), k))
        want = pairs8_closed_form(t0, s1, s2, 1)
        got = (t, sum(free[i - 1] for i in i1), sum(free[i - 1] for i in i2))
        if tuple(w.constant for w in want) != got:
            return DivergenceFailure(f"replayed round {got} disagrees with closed form")
        drift = 8 * t0 - 2 * s1 - 2 * s2
        if drift >= 0:
            return DivergenceFailure(
                f"free part does not diverge downward: 8t-2s1-2s2 = {drift} >= 0 "
                f"(t={t0}, s1={s1}, s2={s2})"
            )
        summary = (f"free degree after n rounds = {drift}n^2 + ...; "
                   f"t={t0}, s1={s1}, s2={s2}")
    else:
        outside = [free[i - 1] for i in pattern.indices]
        if any(outside) or t0 >= 0:
            return DivergenceFailure(
                "triblock10 needs a free part c*(1; 0^10) with c < 0 on the pattern, "
                f"got degree {t0} and entries {outside}"
            )
        c = t0
        unit = [0] * s.n
        t = 1
        for idx in steps:
            t, k = _step_vec(t, unit, idx)
            replay.append((t, tuple(unit), k))
        closed = triblock10_closed_form(1)
        want_deg, want_mults = closed.constants()
        got_mults = tuple(unit[i - 1] for i in pattern.indices)
        if (t, got_mults) != (want_deg, want_mults):
            return DivergenceFailure("replayed round disagrees with the triple-block closed form")
        drift = 54 * c
        summary = f"free degree after n rounds = {c}*(54n^2+1)"

    return DivergenceProof(pattern, checked, (t0, tuple(s.coefficient_vector(0)[1])),
                           replay, drift, summary)
