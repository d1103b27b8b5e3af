"""Exact arithmetic in the cyclotomic field Q(w), w a primitive cube root of unity.

Elements are stored as ``c0 + c1*w`` with rational components; ``w**2`` is
always rewritten as ``-1 - w``.  Complex conjugation is the field
automorphism ``w -> w**2``.
"""

from __future__ import annotations

import cmath
import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "CycNum",
    "ZERO",
    "ONE",
    "Q",
    "Q2",
    "cyc",
    "cyc_add",
    "cyc_mul",
    "cyc_conj",
    "cyc_inv",
    "cyc_embed",
    "parse_cyc",
    "q_power",
]


def _norm_rat(x):
    """Keep integral values as ``int`` so the common case stays fast."""
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _norm_rat(Fraction(x.numerator, x.denominator))
    raise TypeError(f"not a rational number: {x!r}")


class CycNum:
    """An element ``c0 + c1*w`` of Q(w).  Immutable."""

    __slots__ = ("c0", "c1")

    def __init__(self, c0=0, c1=0):
        object.__setattr__(self, "c0", _norm_rat(c0))
        object.__setattr__(self, "c1", _norm_rat(c1))

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    @staticmethod
    def coerce(x) -> CycNum:
        if isinstance(x, CycNum):
            return x
        if isinstance(x, (int, Fraction)):
            return CycNum(x, 0)
        if isinstance(x, str):
            return parse_cyc(x)
        if isinstance(x, Rational):
            return CycNum(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNum")

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.c0 == 0 and self.c1 == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_rational(self) -> bool:
        return self.c1 == 0

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, CycNum):
            if isinstance(other, (int, Fraction)):
                return CycNum(self.c0 + other, self.c1)
            return NotImplemented
        return CycNum(self.c0 + other.c0, self.c1 + other.c1)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(-self.c0, -self.c1)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, CycNum):
            if isinstance(other, (int, Fraction)):
                return CycNum(self.c0 - other, self.c1)
            return NotImplemented
        return CycNum(self.c0 - other.c0, self.c1 - other.c1)

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(other - self.c0, -self.c1)
        return NotImplemented

    def __mul__(self, other):
        if not isinstance(other, CycNum):
            if isinstance(other, (int, Fraction)):
                return CycNum(self.c0 * other, self.c1 * other)
            return NotImplemented
        a0, a1, b0, b1 = self.c0, self.c1, other.c0, other.c1
        # w^2 = -1 - w
        t = a1 * b1
        return CycNum(a0 * b0 - t, a0 * b1 + a1 * b0 - t)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(w)")
            return CycNum(Fraction(self.c0) / other, Fraction(self.c1) / other)
        if isinstance(other, CycNum):
            return self * other.inv()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycNum(other, 0) * self.inv()
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> CycNum:
        # c0 + c1*w^2 = (c0 - c1) - c1*w
        return CycNum(self.c0 - self.c1, -self.c1)

    def norm(self):
        """``self * conj(self)``, a non-negative rational."""
        a0, a1 = self.c0, self.c1
        return _norm_rat(a0 * a0 - a0 * a1 + a1 * a1)

    def inv(self) -> CycNum:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        c = self.conj()
        return CycNum(Fraction(c.c0) / n, Fraction(c.c1) / n)

    # -- comparison / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycNum):
            return self.c0 == other.c0 and self.c1 == other.c1
        if isinstance(other, (int, Fraction)):
            return self.c1 == 0 and self.c0 == other
        return NotImplemented

    def __hash__(self):
        if self.c1 == 0:
            return hash(self.c0)
        return hash((self.c0, self.c1))

    # -- display ----------------------------------------------------------

    def embed(self) -> tuple[float, float]:
        z = float(self.c0) + float(self.c1) * cmath.exp(2j * math.pi / 3)
        return (z.real, z.imag)

    def literal(self) -> str:
        """Render in the ``p/q + r/s*w`` literal format."""
        if self.c1 == 0:
            return str(self.c0)
        w_part = "w" if abs(self.c1) == 1 else f"{abs(self.c1)}*w"
        if self.c0 == 0:
            return ("-" if self.c1 < 0 else "") + w_part
        sign = "-" if self.c1 < 0 else "+"
        return f"{self.c0} {sign} {w_part}"

    def __str__(self):
        return self.literal()

    def __repr__(self):
        return f"CycNum({self.literal()!r})"


ZERO = CycNum(0, 0)
ONE = CycNum(1, 0)
Q = CycNum(0, 1)
Q2 = CycNum(-1, -1)
_Q_POWERS = (ONE, Q, Q2)


def q_power(k: int) -> CycNum:
    """``q**k`` for any integer ``k``."""
    return _Q_POWERS[k % 3]


def cyc(x) -> CycNum:
    return CycNum.coerce(x)


def cyc_add(a: CycNum, b: CycNum) -> CycNum:
    return a + b


def cyc_mul(a: CycNum, b: CycNum) -> CycNum:
    return a * b


def cyc_conj(a: CycNum) -> CycNum:
    return a.conj()


def cyc_inv(a: CycNum) -> CycNum:
    return a.inv()


def cyc_embed(a: CycNum) -> tuple[float, float]:
    return a.embed()


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coef>\d+(?:/\d+)?)\s*(?:\*\s*(?P<w1>w))?
          | (?P<w2>w)
        )\s*""",
    re.VERBOSE,
)


def parse_cyc(text: str) -> CycNum:
    """Parse a literal such as ``-1/2 + 1*w``, ``w``, ``-w``, ``3`` or ``2 - 1/3*w``."""
    s = text.strip()
    if not s:
        raise ValueError("empty CycNum literal")
    pos = 0
    c0 = Fraction(0)
    c1 = Fraction(0)
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"bad CycNum literal: {text!r}")
        if m.group("sign") is None and not first:
            raise ValueError(f"missing operator in CycNum literal: {text!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("w2"):
            c1 += sign
        else:
            value = Fraction(m.group("coef"))
            if m.group("w1"):
                c1 += sign * value
            else:
                c0 += sign * value
        pos = m.end()
        first = False
    return CycNum(c0, c1)
