"""The graded tensor product of an ordinary de Rham complex with the WZ calculus.

Ordinary forms live over ``n`` commuting coordinates ``x0 .. x{n-1}`` with
polynomial coefficients.  An element of the product is stored flat, as a
map ``(subset, exponents, wz_index) -> CycNum``: ``subset`` is the sorted
tuple of coordinate differentials, ``exponents`` the monomial in the
coordinates and ``wz_index`` a basis element of the WZ calculus.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from . import wz
from .qplane import MONOMIALS, PlaneElt, mono_name
from .rewriting import add_into
from .scalars import ONE, ZERO, CycNum

DEFAULT_N = 4


class GradeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# polynomials and ordinary forms


@dataclass(frozen=True)
class Poly:
    """Polynomial in commuting coordinates; ``terms`` maps exponent tuples to scalars."""

    n: int
    terms: tuple = ()  # sorted ((exps, coef), ...), no zero coefficients

    @classmethod
    def from_dict(cls, n: int, d: Mapping[tuple, CycNum]) -> Poly:
        return cls(n, tuple(sorted((e, CycNum.coerce(c)) for e, c in d.items() if not CycNum.coerce(c).is_zero())))

    @classmethod
    def const(cls, n: int, c=ONE) -> Poly:
        return cls.from_dict(n, {(0,) * n: c})

    @classmethod
    def coord(cls, n: int, mu: int) -> Poly:
        return cls.from_dict(n, {tuple(int(i == mu) for i in range(n)): ONE})

    def as_dict(self) -> dict:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: Poly) -> Poly:
        d = self.as_dict()
        for e, c in other.terms:
            add_into(d, e, c)
        return Poly.from_dict(self.n, d)

    def __neg__(self) -> Poly:
        return Poly(self.n, tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, c) -> Poly:
        c = CycNum.coerce(c)
        return Poly.from_dict(self.n, {e: c * v for e, v in self.terms})

    def __mul__(self, other: Poly) -> Poly:
        d: dict = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                add_into(d, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return Poly.from_dict(self.n, d)

    def partial(self, mu: int) -> Poly:
        d: dict = {}
        for e, c in self.terms:
            if e[mu]:
                e2 = list(e)
                e2[mu] -= 1
                add_into(d, tuple(e2), c * e[mu])
        return Poly.from_dict(self.n, d)

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            mono = "*".join(f"x{i}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(e) if k)
            parts.append(f"({c.literal()})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)


def _merge_sign(s1: tuple, s2: tuple) -> tuple[int, tuple] | None:
    """Sign and sorted union for ``dx^s1 dx^s2``; None if they overlap."""
    if set(s1) & set(s2):
        return None
    inversions = sum(1 for a in s1 for b in s2 if a > b)
    return (-1) ** inversions, tuple(sorted(s1 + s2))


@dataclass(frozen=True)
class ExtForm:
    """Ordinary differential form: ``terms`` maps a sorted subset to its coefficient polynomial."""

    n: int
    terms: tuple = ()  # sorted ((subset, Poly), ...)

    @classmethod
    def from_dict(cls, n: int, d: Mapping[tuple, Poly]) -> ExtForm:
        return cls(n, tuple(sorted((s, p) for s, p in d.items() if not p.is_zero())))

    @classmethod
    def dx(cls, n: int, mu: int) -> ExtForm:
        return cls.from_dict(n, {(mu,): Poly.const(n)})

    @classmethod
    def function(cls, p: Poly) -> ExtForm:
        return cls.from_dict(p.n, {(): p})

    def degrees(self) -> set:
        return {len(s) for s, _ in self.terms}


# ---------------------------------------------------------------------------
# the tensor product


@lru_cache(maxsize=None)
def _wz_product(i: int, j: int) -> tuple:
    return tuple(wz.mul_vec({i: ONE}, {j: ONE}).items())


@lru_cache(maxsize=None)
def _wz_derivative(i: int) -> tuple:
    return tuple(wz.d_vec({i: ONE}).items())


class XiElt:
    """Element of the graded tensor product, stored on the basis ``dx^S x^e (x) w_i``."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int = DEFAULT_N, coeffs: Mapping | None = None):
        self.n = n
        self.coeffs = {k: CycNum.coerce(c) for k, c in (coeffs or {}).items() if not CycNum.coerce(c).is_zero()}

    @classmethod
    def pure(cls, ext: ExtForm, form: wz.WZForm) -> XiElt:
        """``ext (x) form``."""
        out: dict = {}
        for s, p in ext.terms:
            for e, c in p.terms:
                for w, v in form.sparse().items():
                    add_into(out, (s, e, w), c * v)
        return cls(ext.n, out)

    @classmethod
    def scalar_field(cls, p: Poly) -> XiElt:
        return cls.pure(ExtForm.function(p), wz.ONE_FORM)

    @classmethod
    def one(cls, n: int = DEFAULT_N) -> XiElt:
        return cls.scalar_field(Poly.const(n))

    @classmethod
    def from_wz(cls, form, n: int = DEFAULT_N) -> XiElt:
        return cls.pure(ExtForm.function(Poly.const(n)), wz.WZForm.coerce(form))

    @classmethod
    def from_ext(cls, ext: ExtForm) -> XiElt:
        return cls.pure(ext, wz.ONE_FORM)

    def _check(self, other: XiElt) -> None:
        if self.n != other.n:
            raise ValueError("coordinate counts differ")

    def __add__(self, other: XiElt) -> XiElt:
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            add_into(out, k, c)
        return XiElt(self.n, out)

    def __neg__(self) -> XiElt:
        return XiElt(self.n, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other: XiElt) -> XiElt:
        return self + (-other)

    def scale(self, c) -> XiElt:
        c = CycNum.coerce(c)
        return XiElt(self.n, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, XiElt):
            return xi_mul(self, other)
        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        return isinstance(other, XiElt) and self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def grades(self) -> set:
        return {len(s) + wz.basis_degree(w) for s, _, w in self.coeffs}

    def grade(self) -> int:
        g = self.grades()
        if len(g) != 1:
            raise GradeError(f"not homogeneous: grades {sorted(g)}")
        return g.pop()

    @property
    def terms(self) -> list:
        """``(ExtForm, WZForm)`` pairs, one per WZ basis element present."""
        by_w: dict = {}
        for (s, e, w), c in self.coeffs.items():
            by_w.setdefault(w, {}).setdefault(s, {})[e] = c
        return [
            (ExtForm.from_dict(self.n, {s: Poly.from_dict(self.n, d) for s, d in sub.items()}),
             wz.WZForm.basis_element(w))
            for w, sub in sorted(by_w.items())
        ]

    def blocks(self) -> dict:
        """Split by ``(ordinary degree, WZ degree)``."""
        out: dict = {}
        for (s, e, w), c in self.coeffs.items():
            out.setdefault((len(s), wz.basis_degree(w)), {})[(s, e, w)] = c
        return {k: XiElt(self.n, v) for k, v in sorted(out.items())}

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        lines = []
        for (p, r), blk in self.blocks().items():
            parts = []
            for ext, form in blk.terms:
                for s, poly in ext.terms:
                    dxs = "".join(f"dx^{mu}" for mu in s)
                    head = f"[{poly.text()}]" + (f" {dxs}" if dxs else "")
                    parts.append(f"{head} (x) {wz.basis_label(form.sparse().popitem()[0])}")
            lines.append(f"({p},{r}): " + " + ".join(parts))
        return "\n".join(lines)

    def __repr__(self):
        return f"XiElt({self.text()!r})"


def xi_mul(u: XiElt, v: XiElt) -> XiElt:
    """``(w1 (x) r1)(w2 (x) r2) = (-1)^(deg r1 deg w2) w1 w2 (x) r1 r2``."""
    u._check(v)
    out: dict = {}
    for (s1, e1, w1), c1 in u.coeffs.items():
        r1 = wz.basis_degree(w1)
        for (s2, e2, w2), c2 in v.coeffs.items():
            merged = _merge_sign(s1, s2)
            if merged is None:
                continue
            sign, s = merged
            if r1 * len(s2) % 2:
                sign = -sign
            e = tuple(a + b for a, b in zip(e1, e2))
            c = c1 * c2 * sign
            for w, cw in _wz_product(w1, w2):
                add_into(out, (s, e, w), c * cw)
    return XiElt(u.n, out)


def xi_d(u: XiElt) -> XiElt:
    """``d(w (x) r) = dw (x) r + (-1)^(deg w) w (x) dr``."""
    out: dict = {}
    for (s, e, w), c in u.coeffs.items():
        for mu in range(u.n):
            if not e[mu] or mu in s:
                continue
            sign = (-1) ** sum(1 for nu in s if nu < mu)
            e2 = list(e)
            e2[mu] -= 1
            add_into(out, (tuple(sorted(s + (mu,))), tuple(e2), w), c * (e[mu] * sign))
        sign = (-1) ** len(s)
        for w2, cw in _wz_derivative(w):
            add_into(out, (s, e, w2), c * cw * sign)
    return XiElt(u.n, out)


def xi_grade_decompose(u: XiElt) -> dict:
    """``{total grade: {(ordinary degree, WZ degree): component}}``."""
    out: dict = {}
    for (p, r), blk in u.blocks().items():
        out.setdefault(p + r, {})[(p, r)] = blk
    return dict(sorted(out.items()))


def xi_slots(grade: int, n: int = DEFAULT_N) -> int:
    """Number of basis slots over scalar functions in a fixed total grade."""
    from math import comb

    return sum(comb(n, grade - wz.basis_degree(w)) for w in range(36) if 0 <= grade - wz.basis_degree(w) <= n)


# ---------------------------------------------------------------------------
# one-forms as triplets

MField = tuple  # nine polynomials, the coefficients of the plane monomials


def mfield_zero(n: int = DEFAULT_N) -> MField:
    return tuple(Poly(n) for _ in range(9))


def mfield_from_plane(z: PlaneElt, n: int = DEFAULT_N) -> MField:
    """Constant matrix-valued function."""
    return tuple(Poly.const(n, c) for c in z.coeffs)


@dataclass(frozen=True)
class XiOneForm:
    a_mu: tuple  # n matrix-valued functions
    phi_x: MField
    phi_y: MField

    @property
    def n(self) -> int:
        return len(self.a_mu)

    @classmethod
    def zero(cls, n: int = DEFAULT_N) -> XiOneForm:
        return cls(tuple(mfield_zero(n) for _ in range(n)), mfield_zero(n), mfield_zero(n))

    def to_json(self) -> dict:
        def field(f):
            return {mono_name(r, s): dict((str(e), c.literal()) for e, c in p.terms)
                    for (r, s), p in zip(MONOMIALS, f) if not p.is_zero()}

        return {"a": [field(f) for f in self.a_mu], "phi_x": field(self.phi_x), "phi_y": field(self.phi_y)}


def _field_terms(f: MField, s: tuple, offset: int) -> Iterable:
    for i, p in enumerate(f):
        for e, c in p.terms:
            yield (s, e, offset + i), c


def pack_oneform(t: XiOneForm) -> XiElt:
    """``sum a_mu dx^mu (x) 1 + 1 (x) (phi_x dx + phi_y dy)``."""
    out: dict = {}
    for mu, f in enumerate(t.a_mu):
        for k, c in _field_terms(f, (mu,), 0):
            add_into(out, k, c)
    for k, c in _field_terms(t.phi_x, (), 9):
        add_into(out, k, c)
    for k, c in _field_terms(t.phi_y, (), 18):
        add_into(out, k, c)
    return XiElt(t.n, out)


def unpack_oneform(u: XiElt) -> XiOneForm:
    if u.is_zero():
        return XiOneForm.zero(u.n)
    if u.grades() != {1}:
        raise GradeError(f"expected a grade-1 element, got grades {sorted(u.grades())}")
    a = [[{} for _ in range(9)] for _ in range(u.n)]
    phi = [[{} for _ in range(9)] for _ in range(2)]
    for (s, e, w), c in u.coeffs.items():
        if s:
            a[s[0]][w][e] = c
        else:
            phi[w // 9 - 1][w % 9][e] = c

    def field(ds):
        return tuple(Poly.from_dict(u.n, d) for d in ds)

    return XiOneForm(tuple(field(f) for f in a), field(phi[0]), field(phi[1]))
