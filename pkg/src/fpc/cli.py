"""Command-line interface: ``fpc <subcommand> ...``.

Exit codes: 0 success, 1 a certificate was falsified, 2 parse, configuration
or dependency error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence

from . import __version__
from .arith import format_poly
from .certificates import (CertSyntaxError, CorpusError, corpus_paths, load_corpus, verify_all)
from .oracle import DEFAULT_PRIME, DEFAULT_SEED, OracleError, is_prime

EXIT_OK, EXIT_FALSIFIED, EXIT_USAGE = 0, 1, 2


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    prime: int = DEFAULT_PRIME
    seed: int = DEFAULT_SEED
    t_max: int = 0
    corpus: Optional[Path] = None
    fmt: str = "text"

    def validate(self) -> "RunConfig":
        if not is_prime(self.prime):
            raise ConfigError(f"{self.prime} is not prime")
        if self.prime <= self.t_max:
            raise ConfigError(f"prime {self.prime} must exceed the degree {self.t_max}")
        return self


def _default_seed() -> int:
    raw = os.environ.get("FPC_SEED")
    if raw is None or raw == "":
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"FPC_SEED={raw!r} is not an integer")


def _cert_paths(items: Sequence[str]) -> List[Path]:
    if not items:
        return corpus_paths()
    out: List[Path] = []
    for item in items:
        p = Path(item)
        if p.is_dir():
            out.extend(sorted(p.glob("*.cert")))
        elif p.exists():
            out.append(p)
        else:
            raise ConfigError(f"no such file: {item}")
    if not out:
        raise ConfigError("no certificate files given")
    return out


def _emit(obj, as_json: bool, text: str) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True) if as_json else text)


# --- subcommands -----------------------------------------------------------

def cmd_verify(args) -> int:
    from .errata import errata_report

    certs = load_corpus(_cert_paths(args.files))
    rep = verify_all(certs, with_delta=not args.files or args.delta)
    for res in rep.results:
        if res:
            print(f"verified  {res.cert.name}")
            if args.trace:
                for line in res.trace:
                    print(f"    {line}")
        else:
            print(f"FALSIFIED {res.cert.name}")
            print(str(res), file=sys.stderr)
    if rep.delta is not None:
        for line in rep.delta.lines:
            print(f"  {line}")
        if not rep.delta.ok:
            print(f"delta bound failed: {rep.delta.failure}", file=sys.stderr)
    print()
    print("ledger:")
    for line in rep.ledger.lines():
        print(f"  {line}")
    if not args.files:
        print()
        print("errata (reported, not failures):")
        for e in errata_report(rep.ledger, measure=not args.no_oracle):
            print(f"  {e.line()}")
    return EXIT_OK if rep.ok else EXIT_FALSIFIED


def cmd_ledger(args) -> int:
    rep = verify_all(load_corpus(_cert_paths(args.files)))
    if args.json:
        facts = [{"name": f.name, "fact": f.describe(), "provenance": f.provenance, "deps": list(f.deps)}
                 for f in rep.ledger]
        print(json.dumps(facts, indent=2))
    else:
        for line in rep.ledger.lines():
            print(line)
    return EXIT_OK if rep.ok else EXIT_FALSIFIED


def cmd_containment(args) -> int:
    from .containment import dispatch, format_report

    rep = dispatch(args.n, args.r)
    _emit(rep.as_dict(), args.json, format_report(rep))
    return EXIT_OK


def cmd_survey(args) -> int:
    from .containment import format_report, survey

    sv = survey(args.nmax, args.rmax)
    if args.json:
        print(json.dumps({"counts": sv.counts(), "exceptions": [r.as_dict() for r in sv.exceptions()]},
                         indent=2, sort_keys=True))
        return EXIT_OK
    print(f"survey n <= {args.nmax}, r <= {args.rmax}: {len(sv.reports)} cells")
    for key, count in sorted(sv.counts().items()):
        print(f"  {key}: {count}")
    exc = sv.exceptions()
    print(f"exceptions ({len(exc)}):")
    for rep in exc:
        print(format_report(rep))
    return EXIT_OK


def cmd_case5(args) -> int:
    from .monomials import verify_case5

    rep = verify_case5(args.n, args.r, args.tmax)
    print(rep.summary())
    for f in rep.failures[:20]:
        print(f"  {f}", file=sys.stderr)
    return EXIT_OK if rep.ok else EXIT_FALSIFIED


def _write_sidecar(path: Optional[str], payload: dict) -> None:
    if not path:
        return
    Path(path).write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def cmd_dim(args) -> int:
    from .oracle import PointSet, dimension_info, parse_mults_spec

    mults = parse_mults_spec(args.mults)
    cfg = RunConfig(args.prime, args.seed, args.t).validate()
    pts = PointSet.generate(len(mults), cfg.prime, cfg.seed)
    res = dimension_info(mults, args.t, pts)
    print(res.dimension)
    _write_sidecar(args.sidecar, res.as_dict())
    return EXIT_OK


def cmd_alpha(args) -> int:
    from .oracle import alpha_bounds, parse_mults_spec

    mults = parse_mults_spec(args.mults)
    cfg = RunConfig(args.prime, args.seed, args.tmax).validate()
    res = alpha_bounds(mults, args.tmax, prime=cfg.prime, seed=cfg.seed, t_min=args.tmin)
    print(res.alpha_low)
    if res.alpha_est is None:
        print(f"no nonzero degree up to {args.tmax}; alpha >= {res.alpha_low}", file=sys.stderr)
    _write_sidecar(args.sidecar, {
        "alpha_low": res.alpha_low, "alpha_est": res.alpha_est,
        "dims": {str(t): d for t, d in res.dims.items()},
        "prime": cfg.prime, "seed": cfg.seed, "mults": mults,
    })
    return EXIT_OK


def cmd_cremona(args) -> int:
    from .cremona import cremona_k, cremona_step
    from .systems import format_system, parse_system

    s = parse_system("system " + " ".join(args.system))
    k = cremona_k(s, args.indices)
    img = cremona_step(s, args.indices)
    print(f"k = {format_poly(k, s.var)}")
    print(format_system(img))
    return EXIT_OK


def cmd_errata(args) -> int:
    from .certificates import default_ledger
    from .errata import errata_report

    for e in errata_report(default_ledger(), measure=not args.no_oracle):
        print(e.line())
    return EXIT_OK


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    seed = _default_seed()
    p = argparse.ArgumentParser(prog="fpc", description="Fat-point certificates and containment checks.")
    p.add_argument("--version", action="version", version=f"fpc {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="check certificates (default: the shipped corpus)")
    v.add_argument("files", nargs="*", help="certificate files or directories")
    v.add_argument("--trace", action="store_true", help="print every replayed step")
    v.add_argument("--delta", action="store_true", help="also check the large-n bound for explicit files")
    v.add_argument("--no-oracle", action="store_true", help="skip oracle measurements in the errata")
    v.set_defaults(func=cmd_verify)

    led = sub.add_parser("ledger", help="print all facts with provenance")
    led.add_argument("files", nargs="*")
    led.add_argument("--json", action="store_true")
    led.set_defaults(func=cmd_ledger)

    c = sub.add_parser("containment", help="certify the containment for one (n, r)")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_containment)

    sv = sub.add_parser("survey", help="run containment over a grid")
    sv.add_argument("--nmax", type=int, required=True)
    sv.add_argument("--rmax", type=int, required=True)
    sv.add_argument("--json", action="store_true")
    sv.set_defaults(func=cmd_survey)

    c5 = sub.add_parser("case5", help="exhaustive monomial check for at most four points")
    c5.add_argument("--n", type=int, required=True, choices=[1, 2, 3, 4])
    c5.add_argument("--r", type=int, required=True)
    c5.add_argument("--tmax", type=int, required=True)
    c5.set_defaults(func=cmd_case5)

    d = sub.add_parser("dim", help="dimension of I(mults)_t over a prime field")
    d.add_argument("--mults", required=True, help="e.g. 7x11 or 14,14,7x5")
    d.add_argument("--t", type=int, required=True)
    d.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    d.add_argument("--seed", type=int, default=seed)
    d.add_argument("--sidecar", default="fpc-dim.json", help="JSON report path ('' to skip)")
    d.set_defaults(func=cmd_dim)

    a = sub.add_parser("alpha", help="first degree with a nonzero form")
    a.add_argument("--mults", required=True)
    a.add_argument("--tmax", type=int, required=True)
    a.add_argument("--tmin", type=int, default=0)
    a.add_argument("--prime", type=int, default=DEFAULT_PRIME)
    a.add_argument("--seed", type=int, default=seed)
    a.add_argument("--sidecar", default="fpc-alpha.json", help="JSON report path ('' to skip)")
    a.set_defaults(func=cmd_alpha)

    cr = sub.add_parser("cremona", help="apply one Cremona step, e.g. deg=12m-1 mults=7m*6 --at 1 2 3 4")
    cr.add_argument("system", nargs="+", help="deg=<poly> mults=<list> [m0=<int>]")
    cr.add_argument("--at", dest="indices", type=int, nargs=4, required=True, metavar="I")
    cr.set_defaults(func=cmd_cremona)

    e = sub.add_parser("errata", help="list known discrepancies with printed values")
    e.add_argument("--no-oracle", action="store_true")
    e.set_defaults(func=cmd_errata)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        parser = build_parser()
    except ConfigError as exc:
        print(f"fpc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CertSyntaxError as exc:
        print(f"fpc: parse error: {exc}", file=sys.stderr)
    except CorpusError as exc:
        print(f"fpc: dependency error: {exc}", file=sys.stderr)
    except (ConfigError, OracleError, ValueError) as exc:
        print(f"fpc: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
