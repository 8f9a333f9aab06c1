"""Parser for the line-oriented certificate format."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Tuple, Union

from ..arith import ParamPoly, PolySyntaxError, parse_poly, parse_rat
from ..cremona import Pairs8, TriBlock10
from ..systems import FatPointSystem, SystemError_, parse_multlist, parse_system_fields


class CertSyntaxError(ValueError):
    def __init__(self, msg: str, line: int = 0, col: int = 0, source: str = "<string>"):
        self.msg, self.line, self.col, self.source = msg, line, col, source
        super().__init__(f"{source}:{line}:{col}: {msg}")


@dataclass(frozen=True)
class EmptyGoal:
    system: FatPointSystem


@dataclass(frozen=True)
class GammaGoal:
    n: int
    bound: Fraction


Goal = Union[EmptyGoal, GammaGoal]


# --- steps -----------------------------------------------------------------

@dataclass(frozen=True)
class Cremona:
    indices: Tuple[int, int, int, int]


@dataclass(frozen=True)
class Permute:
    mapping: Tuple[Tuple[int, int], ...]


@dataclass(frozen=True)
class Drop:
    pass


@dataclass(frozen=True)
class Glue:
    fact: str
    count: int
    at: int
    deg: Optional[ParamPoly] = None


@dataclass(frozen=True)
class Diverge:
    pattern: Union[Pairs8, TriBlock10]


@dataclass(frozen=True)
class Expect:
    degree: ParamPoly
    mults: Tuple[ParamPoly, ...]


@dataclass(frozen=True)
class Conclude:
    how: str  # negative-degree | excess-multiplicity | oracle | bound


@dataclass(frozen=True)
class Scale:
    fact: str
    k: int


Step = Union[Cremona, Permute, Drop, Glue, Diverge, Expect, Conclude, Scale]

CONCLUSIONS = ("negative-degree", "excess-multiplicity", "oracle", "bound")


@dataclass
class Certificate:
    name: str
    goal: Goal
    uses: List[str] = field(default_factory=list)
    steps: List[Step] = field(default_factory=list)
    lines: List[int] = field(default_factory=list)  # source line of each step
    source: str = "<string>"

    @property
    def var(self) -> str:
        return self.goal.system.var if isinstance(self.goal, EmptyGoal) else "m"


def _int(tok: str, what: str, line: int, col: int, source: str) -> int:
    if not re.fullmatch(r"-?\d+", tok):
        raise CertSyntaxError(f"expected integer {what}, got {tok!r}", line, col, source)
    return int(tok)


def _kv(tokens: List[Tuple[str, int]], line: int, source: str) -> dict:
    out = {}
    for tok, col in tokens:
        if "=" not in tok:
            raise CertSyntaxError(f"expected key=value, got {tok!r}", line, col, source)
        k, v = tok.split("=", 1)
        out[k] = (v, col)
    return out


def _tokens(text: str) -> List[Tuple[str, int]]:
    return [(m.group(0), m.start() + 1) for m in re.finditer(r"\S+", text)]


def parse(text: str, source: str = "<string>") -> Certificate:
    name: Optional[str] = None
    goal: Optional[Goal] = None
    uses: List[str] = []
    steps: List[Step] = []
    lines: List[int] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].rstrip()
        toks = _tokens(body)
        if not toks:
            continue
        head, hcol = toks[0]
        rest = toks[1:]

        def err(msg: str, col: int = hcol) -> CertSyntaxError:
            return CertSyntaxError(msg, lineno, col, source)

        try:
            if head == "cert":
                if name is not None:
                    raise err("duplicate 'cert' line")
                if len(rest) != 1:
                    raise err("usage: cert <name>")
                name = rest[0][0]
            elif head == "goal":
                if goal is not None:
                    raise err("duplicate 'goal' line")
                if not rest:
                    raise err("usage: goal empty ... | goal gamma <n> >= <rat>")
                kind = rest[0][0]
                if kind == "empty":
                    kv = {k: v for k, (v, _) in _kv(rest[1:], lineno, source).items()}
                    unknown = set(kv) - {"deg", "mults", "m0"}
                    if unknown:
                        raise err(f"unknown goal fields {sorted(unknown)}")
                    goal = EmptyGoal(parse_system_fields(kv))
                elif kind == "gamma":
                    if len(rest) != 4 or rest[2][0] != ">=":
                        raise err("usage: goal gamma <n> >= <rat>")
                    goal = GammaGoal(_int(rest[1][0], "n", lineno, rest[1][1], source),
                                     parse_rat(rest[3][0]))
                else:
                    raise err(f"unknown goal kind {kind!r}", rest[0][1])
            elif head == "use":
                if len(rest) != 1:
                    raise err("usage: use <factname>")
                uses.append(rest[0][0])
            elif head == "expect":
                kv = {k: v for k, (v, _) in _kv(rest, lineno, source).items()}
                if set(kv) != {"deg", "mults"}:
                    raise err("usage: expect deg=<poly> mults=<multlist>")
                deg, _ = parse_poly(kv["deg"])
                mults, _ = parse_multlist(kv["mults"])
                steps.append(Expect(deg, tuple(mults)))
                lines.append(lineno)
            elif head == "step":
                if not rest:
                    raise err("missing step kind")
                steps.append(_parse_step(rest, lineno, source))
                lines.append(lineno)
            else:
                raise err(f"unknown directive {head!r}")
        except (PolySyntaxError, SystemError_, ValueError) as exc:
            if isinstance(exc, CertSyntaxError):
                raise
            raise CertSyntaxError(str(exc), lineno, hcol, source) from exc

    if name is None:
        raise CertSyntaxError("missing 'cert <name>' line", 1, 1, source)
    if goal is None:
        raise CertSyntaxError("missing 'goal' line", 1, 1, source)
    return Certificate(name, goal, uses, steps, lines, source)


def _parse_step(toks: List[Tuple[str, int]], line: int, source: str) -> Step:
    kind, kcol = toks[0]
    args = toks[1:]

    def err(msg: str, col: int = kcol) -> CertSyntaxError:
        return CertSyntaxError(msg, line, col, source)

    if kind == "cremona":
        if len(args) != 4:
            raise err(f"cremona takes 4 indices, got {len(args)}")
        return Cremona(tuple(_int(t, "index", line, c, source) for t, c in args))
    if kind == "permute":
        if len(args) != 1:
            raise err("usage: step permute i->j,...")
        pairs = []
        for item in args[0][0].split(","):
            m = re.fullmatch(r"(\d+)->(\d+)", item)
            if not m:
                raise err(f"bad permutation item {item!r}", args[0][1])
            pairs.append((int(m.group(1)), int(m.group(2))))
        return Permute(tuple(pairs))
    if kind == "drop":
        if args:
            raise err("drop takes no arguments")
        return Drop()
    if kind == "glue":
        kv = _kv(args, line, source)
        missing = {"fact", "count", "at"} - set(kv)
        if missing:
            raise err(f"glue missing {sorted(missing)}")
        deg = parse_poly(kv["deg"][0])[0] if "deg" in kv else None
        return Glue(kv["fact"][0],
                    _int(kv["count"][0], "count", line, kv["count"][1], source),
                    _int(kv["at"][0], "position", line, kv["at"][1], source),
                    deg)
    if kind == "diverge":
        if not args:
            raise err("diverge needs a pattern")
        pat, pcol = args[0]
        if pat == "pairs8":
            idx = tuple(_int(t, "index", line, c, source) for t, c in args[1:])
            if len(idx) != 8:
                raise err(f"pairs8 takes 8 indices, got {len(idx)}")
            return Diverge(Pairs8(idx))
        if pat == "triblock10":
            kv = _kv(args[1:], line, source)
            if set(kv) != {"pivot", "triples"}:
                raise err("usage: diverge triblock10 pivot=<i> triples=a,b,c/d,e,f/g,h,i")
            pivot = _int(kv["pivot"][0], "pivot", line, kv["pivot"][1], source)
            triples = []
            for grp in kv["triples"][0].split("/"):
                items = grp.split(",")
                triples.append(tuple(_int(x, "index", line, kv["triples"][1], source) for x in items))
            if len(triples) != 3 or any(len(t) != 3 for t in triples):
                raise err("triblock10 needs three triples", kv["triples"][1])
            return Diverge(TriBlock10(pivot, tuple(triples)))
        raise err(f"unknown divergence pattern {pat!r}", pcol)
    if kind == "conclude":
        if len(args) != 1 or args[0][0] not in CONCLUSIONS:
            raise err(f"usage: step conclude {'|'.join(CONCLUSIONS)}")
        return Conclude(args[0][0])
    if kind == "scale":
        kv = _kv(args, line, source)
        if set(kv) != {"fact", "k"}:
            raise err("usage: step scale fact=<gammaN> k=<int>")
        return Scale(kv["fact"][0], _int(kv["k"][0], "k", line, kv["k"][1], source))
    raise err(f"unknown step kind {kind!r}")


def parse_file(path: Union[str, Path]) -> Certificate:
    p = Path(path)
    return parse(p.read_text(encoding="utf-8"), source=str(p))
