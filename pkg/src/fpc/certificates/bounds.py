"""Waldschmidt-constant bookkeeping: 8-point scaling and the bound for n >= 512."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Tuple

from ..arith import Cmp, cmp_with_cuberoot, cuberoot_sign, format_rat
from .ledger import DeltaFact, FactLedger, GammaFact, LedgerError, gamma_name

DELTA_SLOPE = Fraction(3, 7)      # delta(n) = (3/7) cbrt(6n) + 43/70
DELTA_FREE = Fraction(43, 10)     # the constant 4.3 before division by 7
FINAL_SLOPE = Fraction(7787, 10 ** 4)
FINAL_FREE = Fraction(6142, 10 ** 4)
BASE_K = 3


def scale_bound(n_base: int, k: int, ledger: FactLedger, record: bool = True) -> GammaFact:
    """``gamma(n_base * 8^k) >= 2^k * gamma(n_base)``; recorded unless ``k == 0``."""
    base = ledger.get(gamma_name(n_base))
    if not isinstance(base, GammaFact):
        raise LedgerError(f"no bound for gamma({n_base})")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return base
    n = n_base * 8 ** k
    fact = GammaFact(gamma_name(n), n, base.bound * 2 ** k, f"scale(gamma({n_base}), k={k})",
                     (base.name,))
    if record:
        existing = ledger.get(fact.name)
        if isinstance(existing, GammaFact) and existing.bound >= fact.bound:
            return existing
        ledger.add(fact)
    return fact


@dataclass(frozen=True)
class DeltaCase:
    """``n in [lo*8^k, hi*8^k]``: gamma(n) >= 2^(k-e) * b(base) >= 2^k * c >= delta(hi*8^k)."""

    lo: Fraction
    hi: int | Fraction
    base: int
    shift: int       # e: the base index is base * 8^(k - e)
    c: Fraction      # the rational compared with the cube-root expression

    @property
    def radicand(self) -> int:
        r = 6 * Fraction(self.hi)
        assert r.denominator == 1
        return int(r)


DELTA_CASES: Tuple[DeltaCase, ...] = (
    DeltaCase(Fraction(1), Fraction(3, 2), 1, 0, Fraction(1)),
    DeltaCase(Fraction(3, 2), 2, 12, 1, Fraction(63, 57)),
    DeltaCase(Fraction(2), 3, 16, 1, Fraction(11, 9)),
    DeltaCase(Fraction(3), 4, 24, 1, Fraction(4, 3)),
    DeltaCase(Fraction(4), 6, 30, 1, Fraction(3, 2)),
    DeltaCase(Fraction(6), 8, 5, 0, Fraction(5, 3)),
)


@dataclass
class DeltaReport:
    ok: bool
    lines: List[str] = field(default_factory=list)
    failure: str = ""
    fact: DeltaFact | None = None


def verify_delta_cases(ledger: FactLedger, k: int = BASE_K, record: bool = True) -> DeltaReport:
    """Check the six interval cases covering ``[8^k, 8^(k+1)]`` and the final constants."""
    rep = DeltaReport(ok=True)
    deps = set()

    def fail(msg: str) -> DeltaReport:
        rep.ok = False
        rep.failure = msg
        rep.lines.append("FAIL " + msg)
        return rep

    prev_hi = Fraction(1)
    for case in DELTA_CASES:
        if case.lo != prev_hi:
            return fail(f"intervals do not chain at {case.lo}")
        prev_hi = Fraction(case.hi)
        g = ledger.get(gamma_name(case.base))
        if not isinstance(g, GammaFact):
            return fail(f"missing gamma({case.base})")
        deps.add(g.name)
        # base * 8^(k-e) <= lo * 8^k
        if Fraction(case.base) > case.lo * 8 ** case.shift:
            return fail(f"gamma({case.base}*8^(k-{case.shift})) is not below the interval start {case.lo}*8^k")
        # 2^(k-e) b >= 2^k c
        if g.bound < case.c * 2 ** case.shift:
            return fail(f"b({case.base}) = {format_rat(g.bound)} < 2^{case.shift}*{format_rat(case.c)}")
        b = DELTA_FREE / (7 * 2 ** k)
        verdict = cmp_with_cuberoot(DELTA_SLOPE, b, case.radicand, case.c)
        line = (f"n in [{format_rat(case.lo)}*8^k, {format_rat(Fraction(case.hi))}*8^k]: "
                f"{format_rat(case.c)} >= (3/7)cbrt({case.radicand}) + 4.3/(7*2^{k})  "
                f"[{verdict.value}; via b({case.base}) = {format_rat(g.bound)}]")
        rep.lines.append(line)
        if verdict is not Cmp.GE:
            return fail(line)
    rep.lines.append(f"right-hand sides decrease in k (4.3/(7*2^k) is decreasing): holds for all k >= {k}")

    # (3 cbrt 6)/7 >= 0.7787  and  4.3/7 >= 0.6142
    if cuberoot_sign(DELTA_SLOPE, 0, 6, FINAL_SLOPE) > 0:
        return fail("(3*cbrt(6))/7 < 0.7787")
    rep.lines.append("(3*cbrt(6))/7 >= 7787/10^4 [exact cube comparison]")
    if DELTA_FREE / 7 < FINAL_FREE:
        return fail("43/70 < 0.6142")
    rep.lines.append("43/70 >= 6142/10^4")

    fact = DeltaFact("delta512", 8 ** k, "verify_delta_cases", tuple(sorted(deps)))
    rep.fact = fact
    if record and "delta512" not in ledger:
        ledger.add(fact)
    return rep


def gamma_upper_sanity(ledger: FactLedger) -> List[str]:
    """Bounds above ``cbrt(n)`` would contradict the known upper bound; list any offenders."""
    bad = []
    for f in ledger.gamma_facts():
        if f.bound ** 3 > f.n:
            bad.append(f"{f.name}: {format_rat(f.bound)} exceeds cbrt({f.n})")
    return bad
