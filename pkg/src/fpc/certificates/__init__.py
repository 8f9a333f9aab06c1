"""Certificate language, checker, fact ledger and corpus loader."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Union

from .bounds import DELTA_CASES, DeltaReport, scale_bound, verify_delta_cases
from .checker import (Falsified, Verified, check, derive_gamma, exported_names, gamma_shape,
                      record)
from .ledger import DeltaFact, EmptinessFact, FactLedger, GammaFact, LedgerError, gamma_name
from .syntax import Certificate, CertSyntaxError, parse, parse_file

__all__ = [
    "Certificate", "CertSyntaxError", "CorpusError", "CorpusReport", "DELTA_CASES", "DeltaFact",
    "DeltaReport", "EmptinessFact", "FactLedger", "Falsified", "GammaFact", "LedgerError",
    "Verified", "check", "corpus_paths", "default_ledger", "derive_gamma", "exported_names", "gamma_name",
    "gamma_shape", "load_corpus", "order_certificates", "parse", "parse_file", "record",
    "scale_bound", "verify_all", "verify_delta_cases",
]


class CorpusError(ValueError):
    """Unresolvable dependencies or duplicate exports among certificates."""


def corpus_paths() -> List[Path]:
    root = resources.files("fpc") / "corpus"
    return sorted(Path(str(p)) for p in root.iterdir() if p.name.endswith(".cert"))


def load_corpus(paths: Optional[Iterable[Union[str, Path]]] = None) -> List[Certificate]:
    return [parse_file(p) for p in (corpus_paths() if paths is None else paths)]


def order_certificates(certs: List[Certificate], known: Iterable[str] = ()) -> List[Certificate]:
    """Order so that every ``use`` is exported by an earlier certificate (or already known)."""
    exporter: Dict[str, str] = {}
    for c in certs:
        for name in exported_names(c):
            if name in exporter:
                raise CorpusError(f"{name!r} exported by both {exporter[name]!r} and {c.name!r}")
            exporter[name] = c.name
    have = set(known)
    pending = list(certs)
    out: List[Certificate] = []
    while pending:
        ready = [c for c in pending if all(u in have for u in c.uses)]
        if not ready:
            c = pending[0]
            missing = sorted(u for u in c.uses if u not in have)
            why = "cyclic" if all(u in exporter for u in missing) else "missing"
            raise CorpusError(f"{c.name}: {why} dependencies {missing}")
        for c in ready:
            out.append(c)
            pending.remove(c)
            have.update(exported_names(c))
    return out


@dataclass
class CorpusReport:
    ledger: FactLedger
    results: List[Union[Verified, Falsified]] = field(default_factory=list)
    delta: Optional[DeltaReport] = None

    @property
    def ok(self) -> bool:
        return all(self.results) and (self.delta is None or self.delta.ok)

    def failures(self) -> List[Falsified]:
        return [r for r in self.results if not r]


def verify_all(certs: Optional[List[Certificate]] = None, ledger: Optional[FactLedger] = None,
               with_delta: bool = True) -> CorpusReport:
    """Check certificates in dependency order, recording facts from each success.

    A falsified certificate records nothing, so dependents fail on the missing fact.
    """
    ledger = FactLedger() if ledger is None else ledger
    certs = load_corpus() if certs is None else certs
    rep = CorpusReport(ledger)
    for cert in order_certificates(certs, known=[f.name for f in ledger]):
        res = check(cert, ledger)
        rep.results.append(res)
        if res:
            record(res, ledger)
    if with_delta:
        rep.delta = verify_delta_cases(ledger)
    return rep


@lru_cache(maxsize=1)
def default_ledger() -> FactLedger:
    """Ledger built from the shipped corpus; shared, so treat it as read-only."""
    rep = verify_all()
    if not rep.ok:
        bad = rep.failures()
        raise CorpusError(str(bad[0]) if bad else (rep.delta.failure if rep.delta else "corpus failed"))
    return rep.ledger
