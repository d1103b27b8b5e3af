"""The reduced quantum plane at a cube root of unity, i.e. ``M_3(C)``.

Elements are dense coefficient vectors over the monomials ``x^r y^s``
(``r, s`` in ``0..2``), index ``3*r + s``.  Generators satisfy
``x y = q y x`` and ``x^3 = y^3 = 1``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from . import linalg
from .scalars import ONE, ZERO, CycNum, q_power

MONOMIALS = tuple((r, s) for r in range(3) for s in range(3))


def mono_index(r: int, s: int) -> int:
    return 3 * (r % 3) + (s % 3)


def mono_name(r: int, s: int) -> str:
    parts = []
    if r:
        parts.append("x" if r == 1 else f"x^{r}")
    if s:
        parts.append("y" if s == 1 else f"y^{s}")
    return "*".join(parts) if parts else "1"


class PlaneElt:
    """Element of the reduced quantum plane.  Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence = None):
        if coeffs is None:
            coeffs = (ZERO,) * 9
        if len(coeffs) != 9:
            raise ValueError("a plane element has exactly 9 coefficients")
        object.__setattr__(self, "coeffs", tuple(CycNum.coerce(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("PlaneElt is immutable")

    @classmethod
    def monomial(cls, r: int, s: int, coef=ONE) -> PlaneElt:
        c = [ZERO] * 9
        c[mono_index(r, s)] = CycNum.coerce(coef)
        return cls(c)

    @classmethod
    def scalar(cls, c) -> PlaneElt:
        return cls.monomial(0, 0, c)

    @classmethod
    def from_dict(cls, d) -> PlaneElt:
        c = [ZERO] * 9
        for (r, s), v in d.items():
            i = mono_index(r, s)
            c[i] = c[i] + CycNum.coerce(v)
        return cls(c)

    def terms(self):
        """Nonzero ``((r, s), coef)`` pairs."""
        return [(MONOMIALS[i], c) for i, c in enumerate(self.coeffs) if not c.is_zero()]

    def coef(self, r: int, s: int) -> CycNum:
        return self.coeffs[mono_index(r, s)]

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, CycNum)) or type(other).__name__ == "Fraction":
            other = PlaneElt.scalar(other)
        if not isinstance(other, PlaneElt):
            return NotImplemented
        return PlaneElt([a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return PlaneElt([-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> PlaneElt:
        c = CycNum.coerce(c)
        return PlaneElt([c * a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, PlaneElt):
            return plane_mul(self, other)
        if isinstance(other, (int, CycNum)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, CycNum)) or type(other).__name__ == "Fraction":
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = UNIT
        for _ in range(n):
            out = plane_mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, PlaneElt):
            return self.coeffs == other.coeffs
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- rendering --------------------------------------------------------

    def text(self) -> str:
        parts = []
        for (r, s), c in self.terms():
            parts.append(f"({c.literal()})*{mono_name(r, s)}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> list[str]:
        return [c.literal() for c in self.coeffs]

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"PlaneElt({self.text()})"


UNIT = PlaneElt.monomial(0, 0)
X = PlaneElt.monomial(1, 0)
Y = PlaneElt.monomial(0, 1)
ZERO_PLANE = PlaneElt()


def basis() -> list[PlaneElt]:
    return [PlaneElt.monomial(r, s) for r, s in MONOMIALS]


def mono_product(r: int, s: int, t: int, u: int) -> tuple[CycNum, int]:
    """``x^r y^s * x^t y^u = coef * x^(r+t) y^(s+u)``; returns (coef, index)."""
    # y^s x^t = q^(-s t) x^t y^s
    return q_power(-s * t), mono_index(r + t, s + u)


def plane_mul(u: PlaneElt, v: PlaneElt) -> PlaneElt:
    out = [ZERO] * 9
    for (r, s), a in u.terms():
        for (t, w), b in v.terms():
            c, k = mono_product(r, s, t, w)
            out[k] = out[k] + c * a * b
    return PlaneElt(out)


# -- explicit 3x3 matrices ------------------------------------------------

Mat3 = tuple  # 3-tuple of 3-tuples of CycNum


def _mat(rows) -> Mat3:
    return tuple(tuple(CycNum.coerce(v) for v in row) for row in rows)


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    return _mat(linalg.matmul([list(r) for r in a], [list(r) for r in b]))


def mat_add(a: Mat3, b: Mat3) -> Mat3:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Mat3) -> Mat3:
    c = CycNum.coerce(c)
    return tuple(tuple(c * x for x in row) for row in a)


MAT_X = _mat([[1, 0, 0], [0, q_power(-1), 0], [0, 0, q_power(-2)]])
MAT_Y = _mat([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
MAT_ID = _mat([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
MAT_ZERO = _mat([[0] * 3] * 3)


def elementary(i: int, j: int) -> Mat3:
    return _mat([[1 if (a, b) == (i, j) else 0 for b in range(3)] for a in range(3)])


@lru_cache(maxsize=None)
def _monomial_matrices() -> tuple[Mat3, ...]:
    out = []
    for r, s in MONOMIALS:
        m = MAT_ID
        for _ in range(r):
            m = mat_mul(m, MAT_X)
        for _ in range(s):
            m = mat_mul(m, MAT_Y)
        out.append(m)
    return tuple(out)


def to_matrix(u: PlaneElt) -> Mat3:
    out = MAT_ZERO
    for (r, s), c in u.terms():
        out = mat_add(out, mat_scale(c, _monomial_matrices()[mono_index(r, s)]))
    return out


def change_of_basis() -> list[list[CycNum]]:
    """9x9 matrix whose column ``k`` is the flattened matrix of monomial ``k``."""
    cols = [[e for row in m for e in row] for m in _monomial_matrices()]
    return linalg.transpose(cols)


@lru_cache(maxsize=None)
def _inverse_change_of_basis():
    b = change_of_basis()
    assert not linalg.det(b).is_zero(), "monomial matrices are linearly dependent"
    return linalg.inverse(b)


def from_matrix(m: Mat3) -> PlaneElt:
    flat = [CycNum.coerce(e) for row in m for e in row]
    return PlaneElt(linalg.matvec(_inverse_change_of_basis(), flat))


def plane_from_json(data: Iterable[str]) -> PlaneElt:
    return PlaneElt([CycNum.coerce(s) for s in data])
