"""Exact arithmetic: integer polynomials in one parameter, and cube-root comparisons.

All parametric quantities (degrees, multiplicities, ``k`` values of Cremona steps)
are :class:`ParamPoly` instances.  Rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import enum
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Tuple, Union

Rat = Fraction
IntLike = Union[int, "ParamPoly"]


def _trim(coeffs: Iterable[int]) -> Tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class ParamPoly:
    """Polynomial with integer coefficients; ``coeffs[i]`` multiplies ``m**i``."""

    coeffs: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def const(cls, c: int) -> "ParamPoly":
        return cls((c,))

    @classmethod
    def linear(cls, slope: int, free: int = 0) -> "ParamPoly":
        return cls((free, slope))

    @classmethod
    def coerce(cls, x: IntLike) -> "ParamPoly":
        if isinstance(x, ParamPoly):
            return x
        if isinstance(x, int):
            return cls((x,))
        raise TypeError(f"cannot coerce {type(x).__name__} to ParamPoly")

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def constant(self) -> int:
        return self.coeff(0)

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: IntLike) -> "ParamPoly":
        o = ParamPoly.coerce(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return ParamPoly(tuple(self.coeff(i) + o.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self) -> "ParamPoly":
        return ParamPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntLike) -> "ParamPoly":
        return self + (-ParamPoly.coerce(other))

    def __rsub__(self, other: IntLike) -> "ParamPoly":
        return ParamPoly.coerce(other) - self

    def __mul__(self, other: IntLike) -> "ParamPoly":
        o = ParamPoly.coerce(other)
        if not self.coeffs or not o.coeffs:
            return ParamPoly()
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return ParamPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "ParamPoly":
        if e < 0:
            raise ValueError("negative exponent")
        out = ParamPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __call__(self, v: int) -> int:
        return eval_poly(self, v)

    def compose(self, inner: "ParamPoly") -> "ParamPoly":
        """``self(inner(m))`` by Horner's scheme."""
        out = ParamPoly()
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    def shift(self, a: int) -> "ParamPoly":
        """Taylor shift: the polynomial ``u -> self(u + a)``."""
        return self.compose(ParamPoly((a, 1)))

    def format(self, var: str = "m") -> str:
        return format_poly(self, var)

    def __str__(self) -> str:
        return format_poly(self, "m")

    def __repr__(self) -> str:
        return f"ParamPoly({format_poly(self, 'm')!r})"


ZERO = ParamPoly()
ONE = ParamPoly.const(1)
M = ParamPoly((0, 1))


def eval_poly(p: ParamPoly, v: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * v + c
    return acc


def format_poly(p: ParamPoly, var: str = "m") -> str:
    """Canonical whitespace-free text, e.g. ``12m-1``, ``54n^2+1``, ``-m-4``, ``0``."""
    if not p.coeffs:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += sign + body
    return out


_TERM_RE = re.compile(
    r"""(?P<sign>[+-])?
        (?:
          (?P<coef>\d+)(?:\*?(?P<v1>[a-z])(?:\^(?P<e1>\d+))?)?
        | (?P<v2>[a-z])(?:\^(?P<e2>\d+))?
        )""",
    re.VERBOSE,
)


class PolySyntaxError(ValueError):
    pass


def parse_poly(text: str) -> Tuple[ParamPoly, Optional[str]]:
    """Parse a literal such as ``12m-1`` or ``3*r^2-2``; returns the polynomial and its variable name."""
    s = text.strip().replace(" ", "")
    if not s:
        raise PolySyntaxError("empty polynomial literal")
    pos = 0
    coeffs: dict[int, int] = {}
    var: Optional[str] = None
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos or (not first and m.group("sign") is None):
            raise PolySyntaxError(f"malformed polynomial literal {text!r} at offset {pos}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("coef") is not None:
            c = int(m.group("coef"))
            v, e = m.group("v1"), m.group("e1")
        else:
            c = 1
            v, e = m.group("v2"), m.group("e2")
        if v is None:
            if e is not None:
                raise PolySyntaxError(f"exponent without variable in {text!r}")
            exp = 0
        else:
            if var is not None and v != var:
                raise PolySyntaxError(f"mixed parameters {var!r} and {v!r} in {text!r}")
            var = v
            exp = int(e) if e is not None else 1
        coeffs[exp] = coeffs.get(exp, 0) + sign * c
        pos = m.end()
        first = False
    n = max(coeffs) + 1
    return ParamPoly(tuple(coeffs.get(i, 0) for i in range(n))), var


def poly(text: str) -> ParamPoly:
    """Shorthand for ``parse_poly(text)[0]``."""
    return parse_poly(text)[0]


class Sign(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class SignVerdict:
    verdict: Sign
    witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.verdict is Sign.YES


def nonneg_for_all_ge(p: ParamPoly, m0: int) -> SignVerdict:
    """Decide whether ``p(m) >= 0`` for every integer ``m >= m0``.

    The Taylor-shifted coefficients give a sound sufficient test; degrees up to 2
    are then settled completely by exact root analysis.
    """
    if m0 < 0:
        raise ValueError("m0 must be nonnegative")
    if p(m0) < 0:
        return SignVerdict(Sign.NO, m0)
    q = p.shift(m0)  # q(u) = p(u + m0), u >= 0
    if all(c >= 0 for c in q.coeffs):
        return SignVerdict(Sign.YES)
    d = q.degree
    if d <= 0:
        return SignVerdict(Sign.YES)  # constant with q(0) >= 0
    if d == 1:
        a, b = q.coeff(1), q.coeff(0)
        # a < 0 here; first u with a*u + b < 0
        u = b // (-a) + 1
        return SignVerdict(Sign.NO, m0 + u)
    if d == 2:
        a, b, c = q.coeff(2), q.coeff(1), q.coeff(0)
        disc = b * b - 4 * a * c
        if a < 0:
            # eventually negative: search past the larger root
            u = _first_negative_quadratic(a, b, c)
            return SignVerdict(Sign.NO, m0 + u)
        if disc <= 0:
            return SignVerdict(Sign.YES)
        # a > 0: convex, so the minimum over integers sits next to the vertex
        v = (-b) // (2 * a)
        for u in (max(0, v), max(0, v + 1)):
            if a * u * u + b * u + c < 0:
                return SignVerdict(Sign.NO, m0 + u)
        return SignVerdict(Sign.YES)
    # higher degree: negative leading coefficient gives a witness, otherwise unknown
    if q.leading < 0:
        u = 1
        while q(u) >= 0:
            u *= 2
        return SignVerdict(Sign.NO, m0 + u)
    return SignVerdict(Sign.UNKNOWN)


def _first_negative_quadratic(a: int, b: int, c: int) -> int:
    # concave with q(0) >= 0: the negative integers form a suffix
    def q(u: int) -> int:
        return a * u * u + b * u + c

    hi = 1
    while q(hi) >= 0:
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if q(mid) < 0:
            hi = mid
        else:
            lo = mid
    return hi


def positive_for_all_ge(p: ParamPoly, m0: int) -> bool:
    """True iff ``p(m) > 0`` for all integers ``m >= m0`` is certified."""
    return bool(nonneg_for_all_ge(p - 1, m0))


def nonpositive_for_all_ge(p: ParamPoly, m0: int) -> bool:
    return bool(nonneg_for_all_ge(-p, m0))


def negative_for_all_ge(p: ParamPoly, m0: int) -> bool:
    return bool(nonneg_for_all_ge(-p - 1, m0))


class Cmp(enum.Enum):
    GE = "GE"
    LT = "LT"


def _as_rat(x: Union[int, Fraction]) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def cuberoot_sign(a: Union[int, Fraction], b: Union[int, Fraction], x: int,
                  c: Union[int, Fraction]) -> int:
    """Sign of ``c - (a * cbrt(x) + b)`` as -1, 0 or 1, in exact arithmetic."""
    a, b, c = _as_rat(a), _as_rat(b), _as_rat(c)
    if a < 0 or x < 0:
        raise ValueError("unsupported form: need a >= 0 and x >= 0")
    d = c - b
    lhs = d ** 3 if d > 0 else -((-d) ** 3)
    rhs = a ** 3 * x
    return (lhs > rhs) - (lhs < rhs)


def cmp_with_cuberoot(a: Union[int, Fraction], b: Union[int, Fraction], x: int,
                      c: Union[int, Fraction]) -> Cmp:
    """Decide ``c >= a * cbrt(x) + b`` exactly (``a >= 0``, ``x >= 0``)."""
    return Cmp.GE if cuberoot_sign(a, b, x, c) >= 0 else Cmp.LT


def parse_rat(text: str) -> Fraction:
    """``107/39``, ``5``, ``4.3`` all become exact fractions."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def format_rat(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def icbrt_floor(n: int) -> int:
    """Largest integer ``c`` with ``c**3 <= n`` (``n >= 0``)."""
    if n < 0:
        raise ValueError("negative argument")
    if n < 2:
        return n
    # integer Newton from above; floats overflow past ~1e308
    c = 1 << -(-n.bit_length() // 3)
    while True:
        d = (2 * c + n // (c * c)) // 3
        if d >= c:
            break
        c = d
    while c ** 3 > n:
        c -= 1
    while (c + 1) ** 3 <= n:
        c += 1
    return c
