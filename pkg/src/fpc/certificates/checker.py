"""Replays certificates step by step against the fact ledger."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Union

from ..arith import ParamPoly, format_poly, format_rat, nonneg_for_all_ge
from ..cremona import CremonaError, DivergenceProof, certify_divergence, cremona_k, cremona_step
from ..systems import FatPointSystem, SystemError_, drop_nonpositive, format_multlist
from .ledger import EmptinessFact, FactLedger, GammaFact, gamma_name
from .syntax import (Certificate, Conclude, Cremona, Diverge, Drop, EmptyGoal, Expect,
                     GammaGoal, Glue, Permute, Scale)


@dataclass
class Verified:
    cert: Certificate
    trace: List[str] = field(default_factory=list)
    divergence: Optional[DivergenceProof] = None
    ks: List[ParamPoly] = field(default_factory=list)

    def __bool__(self) -> bool:
        return True


@dataclass
class Falsified:
    cert: Certificate
    step_index: int  # 0-based into cert.steps; -1 for certificate-level problems
    reason: str

    def __bool__(self) -> bool:
        return False

    @property
    def line(self) -> int:
        if 0 <= self.step_index < len(self.cert.lines):
            return self.cert.lines[self.step_index]
        return 0

    def __str__(self) -> str:
        where = f"step {self.step_index + 1} (line {self.line})" if self.step_index >= 0 else "certificate"
        return f"{self.cert.source}: {self.cert.name}: falsified at {where}: {self.reason}"


class _Fail(Exception):
    pass


def _fmt(s: FatPointSystem) -> str:
    return f"({format_poly(s.degree, s.var)}; {format_multlist(s.mults, s.var)})"


def _oracle_empty(s: FatPointSystem) -> str:
    from ..oracle import DEFAULT_PRIME, DEFAULT_SEED, PointSet, dimension_info

    if not s.is_constant:
        raise _Fail("oracle conclusion needs a parameter-free system")
    t, mults = s.constants()
    mults = [m for m in mults if m > 0]
    if t < 0:
        return "negative degree"
    pts = PointSet.generate(len(mults), DEFAULT_PRIME, DEFAULT_SEED)
    res = dimension_info(mults, t, pts)
    if res.dimension != 0:
        raise _Fail(f"oracle dimension {res.dimension} > 0 at degree {t}")
    return f"oracle: rank {res.rank} = {res.shape[1]} monomials mod {res.prime} (seed {DEFAULT_SEED})"


def check(cert: Certificate, ledger: FactLedger) -> Union[Verified, Falsified]:
    """Replay ``cert``; the first violated side condition falsifies it."""
    for u in cert.uses:
        if u not in ledger:
            return Falsified(cert, -1, f"uses unknown fact {u!r}")
        if u == cert.name:
            return Falsified(cert, -1, "certificate uses its own conclusion")
    if isinstance(cert.goal, GammaGoal):
        return _check_gamma(cert, ledger)

    state = cert.goal.system
    m0 = state.m0
    out = Verified(cert, [f"goal {_fmt(state)} for {state.var} >= {m0}"])
    concluded = False
    for i, step in enumerate(cert.steps):
        try:
            if concluded:
                raise _Fail("step after conclusion")
            if isinstance(step, Expect):
                if state.degree != step.degree or state.mults != step.mults:
                    got = _fmt(state)
                    want = _fmt(state.with_(degree=step.degree, mults=step.mults))
                    raise _Fail(f"expected {want}, have {got}")
            elif isinstance(step, Cremona):
                try:
                    k = cremona_k(state, step.indices)
                    state = cremona_step(state, step.indices)
                except CremonaError as exc:
                    raise _Fail(str(exc))
                out.ks.append(k)
                out.trace.append(f"cremona {list(step.indices)} k={format_poly(k, state.var)} -> {_fmt(state)}")
            elif isinstance(step, Permute):
                state = _permute(state, step)
                out.trace.append(f"permute -> {_fmt(state)}")
            elif isinstance(step, Drop):
                try:
                    state = drop_nonpositive(state)
                except SystemError_ as exc:
                    raise _Fail(str(exc))
                out.trace.append(f"drop -> {_fmt(state)}")
            elif isinstance(step, Glue):
                state, note = _glue(state, step, cert, ledger)
                out.trace.append(f"{note} -> {_fmt(state)}")
            elif isinstance(step, Diverge):
                proof = certify_divergence(state, step.pattern)
                if not proof:
                    raise _Fail(proof.reason)
                out.divergence = proof
                out.trace.append(f"diverge: {proof.summary}")
                concluded = True
            elif isinstance(step, Conclude):
                out.trace.append(_conclude(state, step.how))
                concluded = True
            elif isinstance(step, Scale):
                raise _Fail("scale steps belong to gamma goals")
            else:  # pragma: no cover
                raise _Fail(f"unsupported step {step!r}")
        except _Fail as exc:
            return Falsified(cert, i, str(exc))
    if not concluded:
        return Falsified(cert, len(cert.steps) - 1, "no concluding step")
    return out


def _permute(state: FatPointSystem, step: Permute) -> FatPointSystem:
    n = state.n
    src = [a for a, _ in step.mapping]
    dst = [b for _, b in step.mapping]
    if sorted(src) != sorted(dst) or len(set(src)) != len(src):
        raise _Fail("permutation is not a bijection on the listed positions")
    if any(not 1 <= x <= n for x in src):
        raise _Fail(f"permutation position out of range 1..{n}")
    new = list(state.mults)
    for a, b in step.mapping:
        new[b - 1] = state.mults[a - 1]
    return state.with_(mults=tuple(new))


def _glue(state: FatPointSystem, step: Glue, cert: Certificate, ledger: FactLedger):
    if step.fact not in cert.uses:
        raise _Fail(f"fact {step.fact!r} not declared with 'use'")
    fact = ledger.get(step.fact)
    if fact is None:
        raise _Fail(f"unknown fact {step.fact!r}")
    a, c = step.at, step.count
    if c < 1 or a < 1 or a + c - 1 > state.n:
        raise _Fail(f"block {a}..{a + c - 1} out of range 1..{state.n}")
    block = state.mults[a - 1: a + c - 1]
    m0, var = state.m0, state.var
    if isinstance(fact, GammaFact):
        if step.deg is None:
            raise _Fail("glue against a gamma bound needs deg=")
        if c < fact.n:
            raise _Fail(f"gamma({fact.n}) bound needs at least {fact.n} points, block has {c}")
        mult = block[0]
        if any(x != mult for x in block):
            raise _Fail("glued block must have equal multiplicities")
        if not nonneg_for_all_ge(mult - 1, m0):
            raise _Fail(f"multiplicity {format_poly(mult, var)} not certified >= 1")
        p, q = fact.bound.numerator, fact.bound.denominator
        # deg < bound * mult  <=>  p*mult - q*deg - 1 >= 0
        margin = mult * p - step.deg * q - 1
        if not nonneg_for_all_ge(margin, m0):
            raise _Fail(f"deg {format_poly(step.deg, var)} not below "
                        f"{format_rat(fact.bound)}*({format_poly(mult, var)})")
        k = step.deg
        note = (f"glue {c} x {format_poly(mult, var)} via gamma({fact.n}) >= {format_rat(fact.bound)}: "
                f"empty at {format_poly(k, var)}")
    elif isinstance(fact, EmptinessFact):
        fs = fact.system
        if step.deg is not None and step.deg != fs.degree:
            raise _Fail("deg= disagrees with the fact's degree")
        if c != fs.n or sorted(block, key=lambda p: p.coeffs) != sorted(fs.mults, key=lambda p: p.coeffs):
            raise _Fail(f"block does not match the multiplicities of {fact.name!r}")
        if not fs.is_constant and m0 < fs.m0:
            raise _Fail(f"fact {fact.name!r} only holds for parameter >= {fs.m0}")
        k = fs.degree
        note = f"glue {c} points via {fact.name}: empty at {format_poly(k, var)}"
    else:
        raise _Fail(f"fact {fact.name!r} cannot be glued")
    new = state.mults[: a - 1] + (k + 1,) + state.mults[a + c - 1:]
    return state.with_(mults=new), note


def _conclude(state: FatPointSystem, how: str) -> str:
    m0, var = state.m0, state.var
    if how == "negative-degree":
        if not nonneg_for_all_ge(-state.degree - 1, m0):
            raise _Fail(f"degree {format_poly(state.degree, var)} not certified negative for {var} >= {m0}")
        return f"degree {format_poly(state.degree, var)} < 0 for {var} >= {m0}: empty"
    if how == "excess-multiplicity":
        for i, e in enumerate(state.mults, start=1):
            if nonneg_for_all_ge(e - state.degree - 1, m0):
                return (f"multiplicity {format_poly(e, var)} at point {i} exceeds degree "
                        f"{format_poly(state.degree, var)} for {var} >= {m0}: empty")
        raise _Fail("no multiplicity certified to exceed the degree")
    if how == "oracle":
        return _oracle_empty(state)
    raise _Fail(f"conclusion {how!r} does not apply to emptiness goals")


def _check_gamma(cert: Certificate, ledger: FactLedger) -> Union[Verified, Falsified]:
    goal = cert.goal
    n_cur: Optional[int] = None
    bound = Fraction(0)
    out = Verified(cert, [f"goal gamma({goal.n}) >= {format_rat(goal.bound)}"])
    concluded = False
    for i, step in enumerate(cert.steps):
        try:
            if concluded:
                raise _Fail("step after conclusion")
            if isinstance(step, Scale):
                if step.fact not in cert.uses:
                    raise _Fail(f"fact {step.fact!r} not declared with 'use'")
                f = ledger.get(step.fact)
                if not isinstance(f, GammaFact):
                    raise _Fail(f"{step.fact!r} is not a gamma bound")
                if step.k < 0:
                    raise _Fail("k must be nonnegative")
                n_cur, bound = f.n * 8 ** step.k, f.bound * 2 ** step.k
                out.trace.append(f"gamma({n_cur}) >= 2^{step.k}*gamma({f.n}) >= {format_rat(bound)}")
            elif isinstance(step, Conclude) and step.how == "bound":
                if n_cur is None:
                    raise _Fail("nothing to conclude from")
                # the claim must be exactly what was derived, not a weakening
                if n_cur != goal.n:
                    raise _Fail(f"derived a bound for gamma({n_cur}), goal is gamma({goal.n})")
                if bound != goal.bound:
                    raise _Fail(f"derived {format_rat(bound)}, goal claims {format_rat(goal.bound)}")
                out.trace.append(f"gamma({goal.n}) >= {format_rat(goal.bound)}")
                concluded = True
            else:
                raise _Fail("gamma goals accept only scale and 'conclude bound' steps")
        except _Fail as exc:
            return Falsified(cert, i, str(exc))
    if not concluded:
        return Falsified(cert, len(cert.steps) - 1, "no concluding step")
    return out


# --- facts exported by certificates ----------------------------------------

class GoalShapeError(ValueError):
    pass


def gamma_shape(cert: Certificate):
    """``(n, d/c)`` when the goal is ``empty deg=d*m+e mults=(c*m)^n``, else ``None``."""
    if not isinstance(cert.goal, EmptyGoal):
        return None
    s = cert.goal.system
    if s.n == 0 or s.degree.degree != 1 or any(x != s.mults[0] for x in s.mults):
        return None
    c = s.mults[0]
    if c.degree != 1 or c.constant != 0 or c.leading <= 0 or s.degree.leading <= 0:
        return None
    return s.n, Fraction(s.degree.leading, c.leading)


def derive_gamma(result: Verified) -> GammaFact:
    """Waldschmidt bound from a verified emptiness family ``I((c m)^n)_{d m + e} = 0``.

    Emptiness gives ``alpha(I^{(cm)}) >= d m + e + 1``; dividing by ``cm`` and
    letting ``m`` grow yields ``gamma(n) >= d / c``.
    """
    if not isinstance(result, Verified):
        raise GoalShapeError("certificate not verified")
    shape = gamma_shape(result.cert)
    if shape is None:
        raise GoalShapeError(f"goal of {result.cert.name!r} is not of the form (c*m)^n at degree d*m+e")
    n, b = shape
    return GammaFact(gamma_name(n), n, b, result.cert.name, (result.cert.name,))


def exported_names(cert: Certificate) -> List[str]:
    if isinstance(cert.goal, GammaGoal):
        return [gamma_name(cert.goal.n)]
    names = [cert.name]
    shape = gamma_shape(cert)
    if shape is not None:
        names.append(gamma_name(shape[0]))
    return names


def record(result: Verified, ledger: FactLedger) -> List[str]:
    """Add the facts a verified certificate establishes; returns their names."""
    cert = result.cert
    if isinstance(cert.goal, GammaGoal):
        f = GammaFact(gamma_name(cert.goal.n), cert.goal.n, cert.goal.bound, cert.name, tuple(cert.uses))
        ledger.add(f)
        return [f.name]
    ledger.add(EmptinessFact(cert.name, cert.goal.system, cert.name, tuple(cert.uses)))
    names = [cert.name]
    if gamma_shape(cert) is not None:
        g = derive_gamma(result)
        ledger.add(g)
        names.append(g.name)
    return names
