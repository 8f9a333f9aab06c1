"""Fat-point linear systems ``I(m_1, ..., m_n)_t`` in projective 3-space."""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from math import comb
from typing import Iterable, List, Optional, Sequence, Tuple

from .arith import ParamPoly, format_poly, nonneg_for_all_ge, parse_poly, PolySyntaxError


class SystemError_(ValueError):
    """Raised for malformed systems and refused operations."""


@dataclass(frozen=True)
class FatPointSystem:
    """A degree and an ordered multiplicity sequence, quantified over ``param >= m0``.

    Entries may be nonpositive; such points impose no condition.
    ``var`` only names the parameter for printing.
    """

    degree: ParamPoly
    mults: Tuple[ParamPoly, ...]
    m0: int = 1
    var: str = field(default="m", compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "degree", ParamPoly.coerce(self.degree))
        object.__setattr__(self, "mults", tuple(ParamPoly.coerce(x) for x in self.mults))

    @classmethod
    def of(cls, degree, mults: Iterable, m0: int = 1, var: str = "m") -> "FatPointSystem":
        return cls(ParamPoly.coerce(degree), tuple(ParamPoly.coerce(x) for x in mults), m0, var)

    @property
    def n(self) -> int:
        return len(self.mults)

    @property
    def is_constant(self) -> bool:
        return self.degree.is_constant and all(x.is_constant for x in self.mults)

    def coefficient_vector(self, power: int) -> Tuple[int, Tuple[int, ...]]:
        """The ``m**power`` part as ``(degree_coeff, mult_coeffs)``."""
        return self.degree.coeff(power), tuple(x.coeff(power) for x in self.mults)

    @property
    def param_degree(self) -> int:
        return max([self.degree.degree] + [x.degree for x in self.mults] + [0])

    def with_(self, **kw) -> "FatPointSystem":
        return replace(self, **kw)

    def constants(self) -> Tuple[int, Tuple[int, ...]]:
        if not self.is_constant:
            raise SystemError_("system depends on the parameter")
        return self.degree.constant, tuple(x.constant for x in self.mults)

    def __str__(self) -> str:
        return format_system(self)


def conditions_count(m: int) -> int:
    """Number of linear conditions imposed by a general point of multiplicity ``m``."""
    return comb(m + 2, 3) if m >= 1 else 0


def monomial_count(t: int) -> int:
    return comb(t + 3, 3) if t >= 0 else 0


def projective_vdim(t: int, mults: Iterable[int]) -> int:
    """Virtual dimension with the projective ``-1`` shift."""
    if t < 0:
        raise ValueError("degree must be nonnegative")
    return monomial_count(t) - 1 - sum(conditions_count(m) for m in mults)


def instantiate(s: FatPointSystem, v: int) -> FatPointSystem:
    if v < s.m0:
        raise SystemError_(f"parameter value {v} below m0={s.m0}")
    return FatPointSystem(
        ParamPoly.const(s.degree(v)),
        tuple(ParamPoly.const(x(v)) for x in s.mults),
        0,
        s.var,
    )


def drop_nonpositive(s: FatPointSystem) -> FatPointSystem:
    """Remove entries that are ``<= 0`` for every parameter value ``>= m0``.

    Candidates are entries nonpositive at ``m0``; each must be certified, otherwise
    the operation is refused.
    """
    kept: List[ParamPoly] = []
    for i, e in enumerate(s.mults, start=1):
        if e(s.m0) > 0:
            kept.append(e)
            continue
        verdict = nonneg_for_all_ge(-e, s.m0)
        if not verdict:
            raise SystemError_(
                f"entry {i} = {format_poly(e, s.var)} is not certified nonpositive "
                f"for {s.var} >= {s.m0}"
                + (f" (positive at {s.var}={verdict.witness})" if verdict.witness is not None else "")
            )
    return replace(s, mults=tuple(kept))


# --- text form -------------------------------------------------------------

_COUNT_RE = re.compile(r"^(.*?)\*(\d+)$")


def parse_multlist(text: str) -> Tuple[List[ParamPoly], Optional[str]]:
    """``7m*6``, ``95m,57m*7``, ``3r-2*11``: a trailing ``*<digits>`` is a repeat count."""
    out: List[ParamPoly] = []
    var: Optional[str] = None
    text = text.strip()
    if not text:
        return out, var
    for item in text.split(","):
        item = item.strip()
        m = _COUNT_RE.match(item)
        count = 1
        if m:
            item, count = m.group(1), int(m.group(2))
        p, v = parse_poly(item)
        if v is not None:
            if var is not None and v != var:
                raise PolySyntaxError(f"mixed parameters {var!r} and {v!r}")
            var = v
        out.extend([p] * count)
    return out, var


def format_multlist(mults: Sequence[ParamPoly], var: str = "m") -> str:
    parts = []
    i = 0
    while i < len(mults):
        j = i
        while j + 1 < len(mults) and mults[j + 1] == mults[i]:
            j += 1
        lit = format_poly(mults[i], var)
        count = j - i + 1
        parts.append(lit if count == 1 else f"{lit}*{count}")
        i = j + 1
    return ",".join(parts)


def parse_system_fields(fields: dict) -> FatPointSystem:
    """Build a system from ``deg=``, ``mults=``, ``m0=`` key/value strings."""
    if "deg" not in fields:
        raise SystemError_("missing deg=")
    deg, v1 = parse_poly(fields["deg"])
    mults, v2 = parse_multlist(fields.get("mults", ""))
    if v1 and v2 and v1 != v2:
        raise PolySyntaxError(f"mixed parameters {v1!r} and {v2!r}")
    m0 = int(fields.get("m0", 1))
    if m0 < 0:
        raise SystemError_("m0 must be nonnegative")
    return FatPointSystem(deg, tuple(mults), m0, v1 or v2 or "m")


def split_kv(tokens: Iterable[str]) -> dict:
    out = {}
    for tok in tokens:
        if "=" not in tok:
            raise SystemError_(f"expected key=value, got {tok!r}")
        k, v = tok.split("=", 1)
        out[k] = v
    return out


def parse_system(text: str) -> FatPointSystem:
    toks = text.split()
    if not toks or toks[0] != "system":
        raise SystemError_("expected 'system deg=... mults=... m0=...'")
    return parse_system_fields(split_kv(toks[1:]))


def format_system(s: FatPointSystem) -> str:
    return (
        f"system deg={format_poly(s.degree, s.var)} "
        f"mults={format_multlist(s.mults, s.var)} m0={s.m0}"
    )
