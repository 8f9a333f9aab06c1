"""Append-only store of proven facts with provenance."""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Tuple, Union

from ..arith import format_rat
from ..systems import FatPointSystem, format_system


class LedgerError(ValueError):
    pass


@dataclass(frozen=True)
class EmptinessFact:
    """``I(mults)_deg = 0`` for all parameter values ``>= m0``."""

    name: str
    system: FatPointSystem
    provenance: str
    deps: Tuple[str, ...] = ()

    def describe(self) -> str:
        return f"empty {format_system(self.system)}"


@dataclass(frozen=True)
class GammaFact:
    """Lower bound for the Waldschmidt constant of ``n`` generic simple points."""

    name: str
    n: int
    bound: Fraction
    provenance: str
    deps: Tuple[str, ...] = ()

    def describe(self) -> str:
        return f"gamma({self.n}) >= {format_rat(self.bound)}"


@dataclass(frozen=True)
class DeltaFact:
    """``gamma(n) >= (3*cbrt(6n) + 43/10)/7`` for every ``n >= n_min``."""

    name: str
    n_min: int
    provenance: str
    deps: Tuple[str, ...] = ()
    slope: Fraction = Fraction(3, 7)
    offset: Fraction = Fraction(43, 70)

    def describe(self) -> str:
        return f"gamma(n) >= (3*cbrt(6n)+4.3)/7 >= 0.7787*cbrt(n)+0.6142 for n >= {self.n_min}"


Fact = Union[EmptinessFact, GammaFact, DeltaFact]


def gamma_name(n: int) -> str:
    return f"gamma{n}"


class FactLedger:
    """Facts keyed by name; each fact's dependencies must already be present."""

    def __init__(self) -> None:
        self._facts: Dict[str, Fact] = {}
        self._order: List[str] = []
        self._lock = threading.Lock()

    def __contains__(self, name: str) -> bool:
        return name in self._facts

    def __getitem__(self, name: str) -> Fact:
        return self._facts[name]

    def get(self, name: str) -> Optional[Fact]:
        return self._facts.get(name)

    def __iter__(self) -> Iterator[Fact]:
        return (self._facts[n] for n in self._order)

    def __len__(self) -> int:
        return len(self._facts)

    def add(self, fact: Fact) -> Fact:
        with self._lock:
            if fact.name in fact.deps:
                raise LedgerError(f"fact {fact.name!r} depends on itself")
            missing = [d for d in fact.deps if d not in self._facts]
            if missing:
                raise LedgerError(f"fact {fact.name!r} depends on unknown or later facts {missing}")
            if fact.name in self._facts:
                raise LedgerError(f"fact {fact.name!r} already recorded")
            self._facts[fact.name] = fact
            self._order.append(fact.name)
            return fact

    def gamma_facts(self) -> List[GammaFact]:
        return [f for f in self if isinstance(f, GammaFact)]

    def emptiness_facts(self) -> List[EmptinessFact]:
        return [f for f in self if isinstance(f, EmptinessFact)]

    def delta_fact(self) -> Optional[DeltaFact]:
        for f in self:
            if isinstance(f, DeltaFact):
                return f
        return None

    def gamma_table(self) -> Dict[int, Fraction]:
        return {f.n: f.bound for f in self.gamma_facts()}

    def best_gamma(self, n: int) -> Tuple[Fraction, Optional[str], Optional[str]]:
        """Best bound for ``gamma(n)`` using monotonicity in ``n`` and ``gamma(8b) >= 2 gamma(b)``.

        Returns ``(bound, explanation, fact name)``; the bound is 0 when nothing applies.
        """
        best, how, used = Fraction(0), None, None
        for f in self.gamma_facts():
            base, k = f.n, 0
            while base <= n:
                cand = f.bound * 2 ** k
                if cand > best:
                    best, used = cand, f.name
                    via = f"gamma({n}) >= gamma({base})" if base != n else f"gamma({n})"
                    scaled = f" >= 2^{k}*gamma({f.n})" if k else ""
                    how = f"{via}{scaled} >= {format_rat(cand)} [{f.name}]"
                base *= 8
                k += 1
        return best, how, used

    def lines(self) -> List[str]:
        out = []
        for f in self:
            deps = f" (uses {', '.join(f.deps)})" if f.deps else ""
            out.append(f"{f.name}: {f.describe()}  <- {f.provenance}{deps}")
        return out
