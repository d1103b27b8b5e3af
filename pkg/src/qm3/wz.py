"""Covariant (Wess-Zumino) differential calculus on the reduced quantum plane.

Forms are kept in left-normal form: plane coefficients on the left of the
differential words ``1, dx, dy, dx dy``.  In rewriting words the letters
``X`` and ``Y`` stand for ``dx`` and ``dy``.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Mapping

from . import hopf
from .hopf import HopfElt
from .qplane import MONOMIALS, PlaneElt, mono_index, mono_name
from .rewriting import RewriteSystem, add_into
from .scalars import ONE, ZERO, CycNum, q_power

q = q_power(1)
q2 = q_power(2)

# Commutation relations with differentials pushed to the right of
# coordinates (left-normal form).  The x-dy rule comes from solving
#   x dy = q dy x + (q^2 - 1) dx y,   y dx = q dx y
# for dy x.
WZ_RULES = {
    "yx": {"xy": q2},
    "xxx": {"": ONE},
    "yyy": {"": ONE},
    "Xx": {"xX": q},
    "Xy": {"yX": q2},
    "Yy": {"yY": q},
    "Yx": {"xY": q2, "yX": q - 1},
    "XX": {},
    "YY": {},
    "YX": {"XY": -q},
}

# The same relations oriented the other way (coordinates pushed right), in
# the form they are usually written.
WZ_RULES_RIGHT = {
    "yx": {"xy": q2},
    "xxx": {"": ONE},
    "yyy": {"": ONE},
    "xX": {"Xx": q2},
    "xY": {"Yx": q, "Xy": q2 - 1},
    "yX": {"Xy": q},
    "yY": {"Yy": q2},
    "XX": {},
    "YY": {},
    "YX": {"XY": -q},
}

DIFF_WORDS = ("", "X", "Y", "XY")
DIFF_NAMES = ("", "dx", "dy", "dx*dy")
DEGREES = (0, 1, 1, 2)


def _coord_word(r: int, s: int) -> str:
    return "x" * r + "y" * s


BASIS_WORDS = tuple(_coord_word(r, s) + dw for dw in DIFF_WORDS for r, s in MONOMIALS)
RIGHT_BASIS_WORDS = tuple(dw + _coord_word(r, s) for dw in DIFF_WORDS for r, s in MONOMIALS)
_INDEX = {w: i for i, w in enumerate(BASIS_WORDS)}


def basis_degree(i: int) -> int:
    return DEGREES[i // 9]


def basis_label(i: int) -> str:
    r, s = MONOMIALS[i % 9]
    dname = DIFF_NAMES[i // 9]
    mono = mono_name(r, s)
    if not dname:
        return mono
    return dname if mono == "1" else f"{mono}*{dname}"


@lru_cache(maxsize=None)
def left_system() -> RewriteSystem:
    return RewriteSystem(WZ_RULES)


@lru_cache(maxsize=None)
def right_system() -> RewriteSystem:
    return RewriteSystem(WZ_RULES_RIGHT)


def word_vec(word: str) -> dict:
    """Left-normal form of any word in ``x, y, X, Y`` as a sparse 36-vector."""
    out: dict = {}
    for w, c in left_system().reduce_cached({word: ONE}).items():
        add_into(out, _INDEX[w], c)
    return out


@lru_cache(maxsize=None)
def _mul_table() -> dict:
    return {(i, j): word_vec(wi + wj) for i, wi in enumerate(BASIS_WORDS) for j, wj in enumerate(BASIS_WORDS)}


def _leibniz_words(word: str) -> dict:
    """d of a word in the free algebra, as a combination of words."""
    out: dict = {}
    sign = 1
    for pos, letter in enumerate(word):
        if letter in "xy":
            new = word[:pos] + letter.upper() + word[pos + 1:]
            add_into(out, new, CycNum(sign))
        else:
            sign = -sign
    return out


def d_word(word: str) -> dict:
    out: dict = {}
    for w, c in _leibniz_words(word).items():
        for k, v in word_vec(w).items():
            add_into(out, k, c * v)
    return out


@lru_cache(maxsize=None)
def _d_table() -> tuple:
    return tuple(d_word(w) for w in BASIS_WORDS)


def mul_vec(u: Mapping, v: Mapping) -> dict:
    table = _mul_table()
    out: dict = {}
    for i, a in u.items():
        for j, b in v.items():
            ab = a * b
            for k, c in table[(i, j)].items():
                add_into(out, k, ab * c)
    return out


def d_vec(u: Mapping) -> dict:
    table = _d_table()
    out: dict = {}
    for i, a in u.items():
        for k, c in table[i].items():
            add_into(out, k, a * c)
    return out


class WZForm:
    """Element of the calculus, stored as four plane coefficients.

    ``d0 + d1x dx + d1y dy + d2 dx dy`` with every coefficient on the left.
    """

    __slots__ = ("d0", "d1x", "d1y", "d2")

    def __init__(self, d0=None, d1x=None, d1y=None, d2=None):
        z = PlaneElt()
        object.__setattr__(self, "d0", d0 if d0 is not None else z)
        object.__setattr__(self, "d1x", d1x if d1x is not None else z)
        object.__setattr__(self, "d1y", d1y if d1y is not None else z)
        object.__setattr__(self, "d2", d2 if d2 is not None else z)

    def __setattr__(self, name, value):
        raise AttributeError("WZForm is immutable")

    @classmethod
    def from_vector(cls, vec) -> WZForm:
        if isinstance(vec, Mapping):
            full = [ZERO] * 36
            for i, c in vec.items():
                full[i] = full[i] + CycNum.coerce(c)
            vec = full
        vec = list(vec)
        if len(vec) != 36:
            raise ValueError("a form has 36 coefficients")
        return cls(*(PlaneElt(vec[9 * b: 9 * b + 9]) for b in range(4)))

    @classmethod
    def basis_element(cls, i: int) -> WZForm:
        return cls.from_vector({i: ONE})

    @classmethod
    def coerce(cls, value) -> WZForm:
        if isinstance(value, WZForm):
            return value
        if isinstance(value, PlaneElt):
            return cls(d0=value)
        return cls(d0=PlaneElt.scalar(value))

    def vector(self) -> list[CycNum]:
        return list(self.d0.coeffs + self.d1x.coeffs + self.d1y.coeffs + self.d2.coeffs)

    def sparse(self) -> dict:
        return {i: c for i, c in enumerate(self.vector()) if not c.is_zero()}

    def component(self, p: int) -> WZForm:
        """The homogeneous part of degree ``p``."""
        if p == 0:
            return WZForm(d0=self.d0)
        if p == 1:
            return WZForm(d1x=self.d1x, d1y=self.d1y)
        if p == 2:
            return WZForm(d2=self.d2)
        return WZForm()

    def degrees(self) -> set[int]:
        return {basis_degree(i) for i in self.sparse()}

    def degree(self) -> int:
        """Degree of a nonzero homogeneous form."""
        degs = self.degrees()
        if len(degs) != 1:
            raise ValueError(f"form is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def is_zero(self) -> bool:
        return not self.sparse()

    def __add__(self, other):
        try:
            other = WZForm.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return WZForm(self.d0 + other.d0, self.d1x + other.d1x, self.d1y + other.d1y, self.d2 + other.d2)

    __radd__ = __add__

    def __neg__(self):
        return WZForm(-self.d0, -self.d1x, -self.d1y, -self.d2)

    def __sub__(self, other):
        return self + (-WZForm.coerce(other))

    def __rsub__(self, other):
        return WZForm.coerce(other) - self

    def scale(self, c) -> WZForm:
        c = CycNum.coerce(c)
        return WZForm(self.d0.scale(c), self.d1x.scale(c), self.d1y.scale(c), self.d2.scale(c))

    def __mul__(self, other):
        if isinstance(other, (WZForm, PlaneElt)):
            return wz_mul(self, WZForm.coerce(other))
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, PlaneElt):
            return wz_mul(WZForm.coerce(other), self)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    def __eq__(self, other):
        if isinstance(other, WZForm):
            return self.vector() == other.vector()
        if isinstance(other, PlaneElt) or (isinstance(other, int) and other == 0):
            return self.vector() == WZForm.coerce(other).vector()
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.vector()))

    def text(self) -> str:
        parts = [f"({c.literal()})*{basis_label(i)}" for i, c in sorted(self.sparse().items())]
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {
            "0": self.d0.to_json(),
            "1": {"dx": self.d1x.to_json(), "dy": self.d1y.to_json()},
            "2": self.d2.to_json(),
        }

    __str__ = text

    def __repr__(self):
        return f"WZForm({self.text()})"


def wz_mul(u: WZForm, v: WZForm) -> WZForm:
    return WZForm.from_vector(mul_vec(u.sparse(), v.sparse()))


def wz_d(u: WZForm) -> WZForm:
    return WZForm.from_vector(d_vec(u.sparse()))


def basis() -> list[WZForm]:
    return [WZForm.basis_element(i) for i in range(36)]


ONE_FORM = WZForm.coerce(ONE)
DX = WZForm.from_vector({_INDEX["X"]: ONE})
DY = WZForm.from_vector({_INDEX["Y"]: ONE})
DXDY = WZForm.from_vector({_INDEX["XY"]: ONE})


# ---------------------------------------------------------------------------
# action of H


def _letter_action(hidx: int, letter: str) -> dict:
    """h(x) = <h,a> x + <h,c> y,  h(y) = <h,b> x + <h,d> y; same for dx, dy."""
    P = hopf.default_pairing()
    F = P.F
    col = {"x": ("a", "c"), "y": ("b", "d"), "X": ("a", "c"), "Y": ("b", "d")}[letter]
    first, second = ("x", "y") if letter in "xy" else ("X", "Y")
    h = {hidx: ONE}
    out: dict = {}
    for f, target in zip(col, (first, second)):
        c = P.pair(h, F.word_vec(f))
        if not c.is_zero():
            add_into(out, _INDEX[target], c)
    return out


_act_cache: dict = {}


def act_word(hidx: int, word: str) -> dict:
    """Action of the basis element ``hidx`` of H on any word, via the coproduct."""
    key = (hidx, word)
    val = _act_cache.get(key)
    if val is not None:
        return val
    H = hopf.build_H()
    if not word:
        val = {0: H.counit[hidx]} if not H.counit[hidx].is_zero() else {}
    elif len(word) == 1:
        val = _letter_action(hidx, word)
    else:
        val = {}
        for (i, j), c in H.coproduct[hidx].items():
            left = act_word(i, word[0])
            if not left:
                continue
            right = act_word(j, word[1:])
            for k, v in mul_vec(left, right).items():
                add_into(val, k, c * v)
    _act_cache[key] = val
    return val


@lru_cache(maxsize=None)
def action_matrix(hidx: int) -> tuple:
    """Columns: the image of each of the 36 basis forms under a basis element of H."""
    return tuple(act_word(hidx, w) for w in BASIS_WORDS)


def act_vec(h: Mapping, u: Mapping) -> dict:
    out: dict = {}
    for hi, a in h.items():
        cols = action_matrix(hi)
        for j, b in u.items():
            ab = a * b
            for k, c in cols[j].items():
                add_into(out, k, ab * c)
    return out


def h_act_form(h: HopfElt, u) -> WZForm:
    return WZForm.from_vector(act_vec(h.coeffs, WZForm.coerce(u).sparse()))


# ---------------------------------------------------------------------------
# parsing of human-written forms

_TOKEN = re.compile(r"^(q|x|y|dx|dy|\d+)(?:\^(\d+))?$")


def parse_form(text: str) -> WZForm:
    """Parse e.g. ``"-q^2 x y^2 dx + x^2 y dy"``.

    Terms are products of space-separated factors taken left to right;
    ``q`` is the cube root of unity and ``1`` the unit.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty form")
    pieces = re.split(r"\s+([+-])\s+", text)
    signs = ["+"] + pieces[1::2]
    terms = pieces[0::2]
    total = WZForm()
    for sign, term in zip(signs, terms):
        term = term.strip()
        neg = sign == "-"
        if term.startswith("-"):
            neg = not neg
            term = term[1:].strip()
        value = WZForm.coerce(ONE)
        for tok in term.split():
            m = _TOKEN.match(tok)
            if not m:
                raise ValueError(f"cannot parse factor {tok!r} in {text!r}")
            base, exp = m.group(1), int(m.group(2) or 1)
            if base == "q":
                value = value.scale(q_power(exp))
            elif base.isdigit():
                value = value.scale(CycNum(int(base) ** exp))
            else:
                letter = {"x": "x", "y": "y", "dx": "X", "dy": "Y"}[base]
                factor = WZForm.from_vector(word_vec(letter * exp))
                value = value * factor
        total = total + (-value if neg else value)
    return total


# ---------------------------------------------------------------------------
# the action tables on one-forms


OMEGA_ROWS = {
    "omega-3o2": ("x^2 y", "x y^2", "1"),
    "omega-3e2": ("x", "y", "x^2 y^2"),
    "omega-3i2": ("x^2", "x y", "y^2"),
}


def omega_rows(name: str) -> list[WZForm]:
    coeffs = OMEGA_ROWS[name]
    return [parse_form(f"{z} dx") for z in coeffs] + [parse_form(f"{z} dy") for z in coeffs]


def omega_tables() -> dict:
    """The three 6x3 tables (K, X+, X-) on the one-form blocks ``3 (x) 2``."""
    Xp, Xm, K = hopf.H_gens()
    out = {}
    for name in OMEGA_ROWS:
        out[name] = [(row, [h_act_form(g, row) for g in (K, Xp, Xm)]) for row in omega_rows(name)]
    return out


def omega2_iso() -> dict:
    """Checks that ``z -> z dx dy`` intertwines the actions on M and on 2-forms."""
    Xp, Xm, K = hopf.H_gens()
    report = {
        "K(dxdy) = dxdy": h_act_form(K, DXDY) == DXDY,
        "X+(dxdy) = 0": h_act_form(Xp, DXDY).is_zero(),
        "X-(dxdy) = 0": h_act_form(Xm, DXDY).is_zero(),
    }
    ok = True
    for g, name in ((K, "K"), (Xp, "X+"), (Xm, "X-")):
        for (r, s) in MONOMIALS:
            z = WZForm(d0=PlaneElt.monomial(r, s))
            lhs = h_act_form(g, z * DXDY)
            rhs = h_act_form(g, z) * DXDY
            ok = ok and lhs == rhs
    report["intertwiner"] = ok
    return report
