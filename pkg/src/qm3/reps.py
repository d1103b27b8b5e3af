"""Coaction of F on the plane, the induced H-action, and H-modules.

Modules are given by three matrices (``K``, ``X+``, ``X-``) in column
convention: ``M[i][j]`` is the coefficient of basis vector ``i`` in the image
of basis vector ``j``.  Indecomposables are recognized by a small invariant
fingerprint compared against reference copies cut out of the regular
representation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Optional, Sequence

from . import hopf, linalg, wz
from .hopf import HopfElt
from .qplane import MONOMIALS, PlaneElt, mono_index, mono_product
from .rewriting import add_into
from .scalars import ONE, ZERO, CycNum, q_power

q = q_power(1)
q2 = q_power(2)
GEN_NAMES = ("K", "X+", "X-")
WEIGHTS = (ONE, q, q2)


class NonInvariantError(ValueError):
    def __init__(self, generator: str, index: int, detail: str = ""):
        self.generator = generator
        self.index = index
        super().__init__(f"{generator} maps basis vector {index} out of the span{detail}")


class ModuleRelationError(ValueError):
    pass


class UnknownModuleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# coaction and action on the plane


def _tensor_mul_MF(s: dict, t: dict) -> dict:
    F = hopf.build_F()
    out: dict = {}
    for (m1, f1), a in s.items():
        r, u = MONOMIALS[m1]
        for (m2, f2), b in t.items():
            c, m = mono_product(r, u, *MONOMIALS[m2])
            for f, v in F.mul[(f1, f2)].items():
                add_into(out, (m, f), a * b * c * v)
    return out


def _tensor_mul_FM(s: dict, t: dict) -> dict:
    F = hopf.build_F()
    out: dict = {}
    for (f1, m1), a in s.items():
        r, u = MONOMIALS[m1]
        for (f2, m2), b in t.items():
            c, m = mono_product(r, u, *MONOMIALS[m2])
            for f, v in F.mul[(f1, f2)].items():
                add_into(out, (f, m), a * b * c * v)
    return out


def _f(word: str) -> dict:
    return hopf.build_F().word_vec(word)


@lru_cache(maxsize=None)
def _coact_right_basis() -> tuple:
    ix, iy = mono_index(1, 0), mono_index(0, 1)
    dx: dict = {}
    dy: dict = {}
    for m, f in ((ix, "a"), (iy, "c")):
        for k, c in _f(f).items():
            add_into(dx, (m, k), c)
    for m, f in ((ix, "b"), (iy, "d")):
        for k, c in _f(f).items():
            add_into(dy, (m, k), c)
    unit = {(mono_index(0, 0), hopf.build_F().unit): ONE}
    out = []
    for r, s in MONOMIALS:
        t = unit
        for _ in range(r):
            t = _tensor_mul_MF(t, dx)
        for _ in range(s):
            t = _tensor_mul_MF(t, dy)
        out.append(t)
    return tuple(out)


@lru_cache(maxsize=None)
def _coact_left_basis() -> tuple:
    ix, iy = mono_index(1, 0), mono_index(0, 1)
    dx: dict = {}
    dy: dict = {}
    for f, m in (("a", ix), ("b", iy)):
        for k, c in _f(f).items():
            add_into(dx, (k, m), c)
    for f, m in (("c", ix), ("d", iy)):
        for k, c in _f(f).items():
            add_into(dy, (k, m), c)
    unit = {(hopf.build_F().unit, mono_index(0, 0)): ONE}
    out = []
    for r, s in MONOMIALS:
        t = unit
        for _ in range(r):
            t = _tensor_mul_FM(t, dx)
        for _ in range(s):
            t = _tensor_mul_FM(t, dy)
        out.append(t)
    return tuple(out)


def coact_right(z: PlaneElt) -> dict:
    """``delta_R(z)`` as ``{(plane index, F index): coef}``."""
    table = _coact_right_basis()
    out: dict = {}
    for i, a in enumerate(z.coeffs):
        if a.is_zero():
            continue
        for key, c in table[i].items():
            add_into(out, key, a * c)
    return out


def coact_left(z: PlaneElt) -> dict:
    """``delta_L(z)`` as ``{(F index, plane index): coef}``."""
    table = _coact_left_basis()
    out: dict = {}
    for i, a in enumerate(z.coeffs):
        if a.is_zero():
            continue
        for key, c in table[i].items():
            add_into(out, key, a * c)
    return out


def act(h: HopfElt, z: PlaneElt) -> PlaneElt:
    """``(id (x) <h, .>)`` applied to the right coaction."""
    P = hopf.default_pairing()
    out = [ZERO] * 9
    for (m, f), c in coact_right(z).items():
        v = P.pair(h.coeffs, {f: ONE})
        if not v.is_zero():
            out[m] = out[m] + c * v
    return PlaneElt(out)


ACTION_ROWS = ("x^2", "x y", "y^2", "x", "y", "x^2 y^2", "x^2 y", "x y^2", "1")


def _plane(text: str) -> PlaneElt:
    return wz.parse_form(text).d0


def action_table() -> dict:
    """``{row: (K z, X+ z, X- z)}`` for the nine monomials."""
    Xp, Xm, K = hopf.H_gens()
    return {row: tuple(act(g, _plane(row)) for g in (K, Xp, Xm)) for row in ACTION_ROWS}


# ---------------------------------------------------------------------------
# modules

Matrix = list


@dataclass(frozen=True)
class HModule:
    dim: int
    K: Matrix
    Xp: Matrix
    Xm: Matrix
    labels: tuple = field(default=(), compare=False)

    def __post_init__(self):
        problems = module_relation_failures(self)
        if problems:
            raise ModuleRelationError("; ".join(problems))
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"e{i}" for i in range(self.dim)))

    def gen(self, name: str) -> Matrix:
        return {"K": self.K, "X+": self.Xp, "X-": self.Xm}[name]

    def rho(self, h: HopfElt) -> Matrix:
        """Matrix of an arbitrary element of H."""
        H = hopf.build_H()
        n = self.dim
        out = linalg.zeros(n, n)
        for idx, c in h.coeffs.items():
            m = linalg.identity(n)
            for letter in H.words[idx]:
                m = linalg.matmul(m, {"E": self.Xp, "F": self.Xm, "K": self.K}[letter])
            out = linalg.matadd(out, linalg.matscale(c, m))
        return out

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "K": [[c.literal() for c in row] for row in self.K],
            "X+": [[c.literal() for c in row] for row in self.Xp],
            "X-": [[c.literal() for c in row] for row in self.Xm],
        }


def module_relation_failures(m: HModule) -> list[str]:
    n = m.dim
    I = linalg.identity(n)
    K, Xp, Xm = m.K, m.Xp, m.Xm
    K2 = linalg.matmul(K, K)
    out = []
    if linalg.matmul(K2, K) != I:
        out.append("K^3 != 1")
    if not linalg.is_zero_matrix(linalg.matmul(Xp, linalg.matmul(Xp, Xp))):
        out.append("X+^3 != 0")
    if not linalg.is_zero_matrix(linalg.matmul(Xm, linalg.matmul(Xm, Xm))):
        out.append("X-^3 != 0")
    if linalg.matmul(K, Xp) != linalg.matscale(q2, linalg.matmul(Xp, K)):
        out.append("K X+ != q^2 X+ K")
    if linalg.matmul(K, Xm) != linalg.matscale(q, linalg.matmul(Xm, K)):
        out.append("K X- != q^-2 X- K")
    comm = linalg.matsub(linalg.matmul(Xp, Xm), linalg.matmul(Xm, Xp))
    rhs = linalg.matscale((q - q2).inv(), linalg.matsub(K, K2))
    if comm != rhs:
        out.append("[X+, X-] != (K - K^-1)/(q - q^-1)")
    return out


@dataclass(frozen=True)
class Space:
    """An ambient space with the three generator matrices acting on it."""

    name: str
    dim: int
    K: Matrix
    Xp: Matrix
    Xm: Matrix
    render: Callable = field(compare=False, default=None)

    def gen(self, name: str) -> Matrix:
        return {"K": self.K, "X+": self.Xp, "X-": self.Xm}[name]

    def as_module(self) -> HModule:
        return HModule(self.dim, self.K, self.Xp, self.Xm)


def _columns_to_matrix(cols: Sequence[Sequence[CycNum]]) -> Matrix:
    return linalg.transpose([list(c) for c in cols])


@lru_cache(maxsize=None)
def plane_space() -> Space:
    Xp, Xm, K = hopf.H_gens()
    mats = []
    for g in (K, Xp, Xm):
        cols = [act(g, PlaneElt.monomial(r, s)).coeffs for r, s in MONOMIALS]
        mats.append(_columns_to_matrix(cols))
    return Space("plane", 9, *mats, render=lambda v: PlaneElt(v).text())


@lru_cache(maxsize=None)
def form_space() -> Space:
    H = hopf.build_H()
    mats = []
    for w in ("K", "E", "F"):
        cols = wz.action_matrix(H.index_of_word(w))
        full = [[c.get(i, ZERO) for i in range(36)] for c in cols]
        mats.append(_columns_to_matrix(full))
    return Space("forms", 36, *mats, render=lambda v: wz.WZForm.from_vector(v).text())


def to_vector(obj, space: Space) -> list[CycNum]:
    if isinstance(obj, str):
        obj = wz.parse_form(obj)
    if isinstance(obj, wz.WZForm):
        return obj.d0.coeffs if space.dim == 9 else obj.vector()
    if isinstance(obj, PlaneElt):
        return list(obj.coeffs) if space.dim == 9 else wz.WZForm.coerce(obj).vector()
    vec = [CycNum.coerce(c) for c in obj]
    if len(vec) != space.dim:
        raise ValueError(f"vector of length {len(vec)} in a space of dimension {space.dim}")
    return vec


def restrict(space: Space, vectors: Sequence[Sequence[CycNum]], labels=None) -> HModule:
    """The module structure on the span of ``vectors`` (which must be invariant)."""
    vectors = [list(v) for v in vectors]
    if linalg.span_rank(vectors) != len(vectors):
        raise ValueError("basis vectors are linearly dependent")
    mats = {}
    for name in GEN_NAMES:
        g = space.gen(name)
        cols = []
        for j, v in enumerate(vectors):
            coords = linalg.coordinates(vectors, linalg.matvec(g, v))
            if coords is None:
                raise NonInvariantError(name, j, f" ({labels[j]})" if labels else "")
            cols.append(coords)
        mats[name] = _columns_to_matrix(cols)
    if labels is None and space.render is not None:
        labels = [space.render(v) for v in vectors]
    return HModule(len(vectors), mats["K"], mats["X+"], mats["X-"], tuple(labels or ()))


def module_from_action(basis: Iterable, space: Space | None = None) -> HModule:
    """Module on the span of ``basis`` (plane elements, forms, strings or raw vectors)."""
    basis = list(basis)
    if space is None:
        space = form_space() if any(_is_form(b) for b in basis) else plane_space()
    vectors = [to_vector(b, space) for b in basis]
    labels = [b if isinstance(b, str) else space.render(v) for b, v in zip(basis, vectors)]
    return restrict(space, vectors, labels)


def _is_form(b) -> bool:
    if isinstance(b, str):
        return "d" in b
    if isinstance(b, wz.WZForm):
        return not (b.component(1).is_zero() and b.component(2).is_zero())
    return False


def plane_module(basis: Iterable) -> HModule:
    return module_from_action(basis, plane_space())


def form_module(basis: Iterable) -> HModule:
    return module_from_action(basis, form_space())


def tensor_module(A: HModule, B: HModule) -> HModule:
    """``A (x) B`` through the coproduct; basis index ``i * dim B + j``."""
    IA, IB = linalg.identity(A.dim), linalg.identity(B.dim)
    KB2 = linalg.matmul(B.K, B.K)
    K = linalg.kron(A.K, B.K)
    Xp = linalg.matadd(linalg.kron(A.Xp, IB), linalg.kron(A.K, B.Xp))
    Xm = linalg.matadd(linalg.kron(A.Xm, KB2), linalg.kron(IA, B.Xm))
    labels = tuple(f"{a}(x){b}" for a in A.labels for b in B.labels)
    return HModule(A.dim * B.dim, K, Xp, Xm, labels)


def direct_sum(*mods: HModule) -> HModule:
    n = sum(m.dim for m in mods)
    out = {name: linalg.zeros(n, n) for name in GEN_NAMES}
    offset = 0
    for m in mods:
        for name in GEN_NAMES:
            g = m.gen(name)
            for i in range(m.dim):
                for j in range(m.dim):
                    out[name][offset + i][offset + j] = g[i][j]
        offset += m.dim
    labels = tuple(lbl for m in mods for lbl in m.labels)
    return HModule(n, out["K"], out["X+"], out["X-"], labels)


def trivial_module() -> HModule:
    return HModule(1, [[ONE]], [[ZERO]], [[ZERO]], ("1",))


def submodule(m: HModule, vectors: Sequence[Sequence[CycNum]], labels=None) -> HModule:
    return restrict(Space("sub", m.dim, m.K, m.Xp, m.Xm), vectors, labels)


def cyclic_span(m: HModule, v: Sequence[CycNum]) -> list[list[CycNum]]:
    """Basis of ``H v`` inside ``m``."""
    mats = [m.K, m.Xp, m.Xm]
    basis: list = []
    todo = [list(v)]
    while todo:
        w = todo.pop()
        if linalg.span_rank(basis + [w]) > len(basis):
            basis.append(w)
            todo.extend(linalg.matvec(g, w) for g in mats)
    return basis


def intertwiners(A: HModule, B: HModule) -> list[Matrix]:
    """Basis of the space of module maps ``A -> B`` (as ``dim B x dim A`` matrices)."""
    n, m = A.dim, B.dim
    rows = []
    for name in GEN_NAMES:
        ga, gb = A.gen(name), B.gen(name)
        # (T ga - gb T)[i][j] = sum_k T[i][k] ga[k][j] - sum_k gb[i][k] T[k][j]
        for i in range(m):
            for j in range(n):
                row = [ZERO] * (m * n)
                for k in range(n):
                    row[i * n + k] = row[i * n + k] + ga[k][j]
                for k in range(m):
                    row[k * n + j] = row[k * n + j] - gb[i][k]
                rows.append(row)
    sols = linalg.nullspace(rows, m * n)
    return [[sol[i * n:(i + 1) * n] for i in range(m)] for sol in sols]


def find_isomorphism(A: HModule, B: HModule, tries: int = 6) -> Optional[Matrix]:
    """An invertible intertwiner, searched among a few fixed combinations of a basis."""
    if A.dim != B.dim:
        return None
    maps = intertwiners(A, B)
    if not maps:
        return None
    for t in range(tries):
        coeffs = [CycNum((k + 1) ** (t + 1) % 97 + t) for k in range(len(maps))]
        T = linalg.zeros(B.dim, A.dim)
        for c, M in zip(coeffs, maps):
            T = linalg.matadd(T, linalg.matscale(c, M))
        if not linalg.det(T).is_zero():
            return T
    return None


def is_isomorphic(A: HModule, B: HModule) -> bool:
    return find_isomorphism(A, B) is not None


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    k_multiplicities: tuple  # eigenvalues 1, q, q^2
    ranks: tuple  # X+, X-, X+^2, X-^2, X+ X-
    joint_kernel: int
    socle_dim: int
    radical_dim: int

    def text(self) -> str:
        m1, mq, mq2 = self.k_multiplicities
        return (f"dim {self.dim}; K-weights 1:{m1} q:{mq} q^2:{mq2}; "
                f"ranks X+ {self.ranks[0]}, X- {self.ranks[1]}, X+^2 {self.ranks[2]}, "
                f"X-^2 {self.ranks[3]}, X+X- {self.ranks[4]}; joint kernel {self.joint_kernel}; "
                f"socle {self.socle_dim}; radical {self.radical_dim}")


def weight_space(m: HModule, weight: CycNum) -> list[list[CycNum]]:
    shifted = linalg.matsub(m.K, linalg.matscale(weight, linalg.identity(m.dim)))
    return linalg.nullspace(shifted, m.dim)


def fingerprint(m: HModule) -> Fingerprint:
    mult = tuple(len(weight_space(m, w)) for w in WEIGHTS)
    Xp2 = linalg.matmul(m.Xp, m.Xp)
    Xm2 = linalg.matmul(m.Xm, m.Xm)
    ranks = tuple(linalg.rank(a) for a in (m.Xp, m.Xm, Xp2, Xm2, linalg.matmul(m.Xp, m.Xm)))
    joint = len(linalg.nullspace(m.Xp + m.Xm, m.dim))
    return Fingerprint(m.dim, mult, ranks, joint, len(socle(m)), len(radical(m)))


def is_indecomposable(m: HModule) -> bool:
    """True when End(m) is local, i.e. End(m) / rad End(m) is one-dimensional.

    The radical of the endomorphism algebra is the kernel of the trace
    form ``(S, T) -> tr(S T)``.
    """
    ends = intertwiners(m, m)
    form = [[linalg.trace(linalg.matmul(S, T)) for T in ends] for S in ends]
    return len(ends) - len(linalg.nullspace(form, len(ends))) == 1


# ---------------------------------------------------------------------------
# regular representation and reference indecomposables


@lru_cache(maxsize=None)
def _left_mult_matrix(idx: int) -> tuple:
    H = hopf.build_H()
    m = linalg.zeros(27, 27)
    for j in range(27):
        for k, c in H.mul[(idx, j)].items():
            m[k][j] = c
    return tuple(tuple(r) for r in m)


def left_mult(h: HopfElt) -> Matrix:
    out = linalg.zeros(27, 27)
    for idx, c in h.coeffs.items():
        out = linalg.matadd(out, linalg.matscale(c, [list(r) for r in _left_mult_matrix(idx)]))
    return out


@lru_cache(maxsize=None)
def regular_space() -> Space:
    H = hopf.build_H()
    mats = [[list(r) for r in _left_mult_matrix(H.index_of_word(w))] for w in ("K", "E", "F")]
    return Space("regular", 27, *mats, render=lambda v: H.element(dict(enumerate(v))).text())


def regular_rep_H() -> HModule:
    H = hopf.build_H()
    return HModule(27, *(regular_space().gen(n) for n in GEN_NAMES), labels=H.labels)


def casimir() -> HopfElt:
    Xp, Xm, K = hopf.H_gens()
    return Xm * Xp + (q * K + q2 * (K * K)) * ((q - q2) ** 2).inv()


def _vec(h: HopfElt) -> list[CycNum]:
    return [h.coeffs.get(i, ZERO) for i in range(27)]


def _elt(v: Sequence[CycNum]) -> HopfElt:
    return hopf.build_H().element({i: c for i, c in enumerate(v)})


def _mat_pow(m: Matrix, e: int) -> Matrix:
    out = linalg.identity(len(m))
    base = m
    while e:
        if e & 1:
            out = linalg.matmul(out, base)
        base = linalg.matmul(base, base)
        e >>= 1
    return out


@dataclass(frozen=True)
class Blocks:
    """Central idempotents of H, from the generalized eigenspaces of the Casimir."""

    casimir_values: tuple  # (value on 3_i, value on the trivial module)
    idempotents: tuple  # (e_St, e_rest)
    dims: tuple


@lru_cache(maxsize=None)
def blocks() -> Blocks:
    C = casimir()
    steinberg = plane_module(("x^2", "x y", "y^2"))
    triv = trivial_module()
    c_st = steinberg.rho(C)[0][0]
    c_one = triv.rho(C)[0][0]
    LC = left_mult(C)
    spaces = []
    for c in (c_st, c_one):
        shifted = linalg.matsub(LC, linalg.matscale(c, linalg.identity(27)))
        spaces.append(linalg.nullspace(_mat_pow(shifted, 27), 27))
    basis = spaces[0] + spaces[1]
    if len(basis) != 27:
        raise AssertionError("Casimir generalized eigenspaces do not fill H")
    coords = linalg.coordinates(basis, _vec(hopf.build_H().element({hopf.build_H().unit: ONE})))
    n0 = len(spaces[0])
    idems = []
    for part, start in ((spaces[0], 0), (spaces[1], n0)):
        v = [ZERO] * 27
        for k, b in enumerate(part):
            v = [a + coords[start + k] * x for a, x in zip(v, b)]
        idems.append(_elt(v))
    return Blocks((c_st, c_one), tuple(idems), (len(spaces[0]), len(spaces[1])))


def weight_projector(weight: CycNum) -> HopfElt:
    """``(1/3) sum_j weight^-j K^j``: projects onto the K-eigenvalue ``weight``."""
    H = hopf.build_H()
    K = H.gen("K")
    out = H.element({})
    for j in range(3):
        out = out + (weight ** (-j)) * (K ** j)
    return out * CycNum(Fraction(1, 3))


def left_ideal(e: HopfElt) -> list[list[CycNum]]:
    return cyclic_span(regular_rep_H(), _vec(e))


@lru_cache(maxsize=None)
def radical_basis() -> tuple:
    """Basis of the Jacobson radical: the kernel of the trace form."""
    H = hopf.build_H()
    traces = [sum((_left_mult_matrix(k)[i][i] for i in range(27)), ZERO) for k in range(27)]
    form = []
    for a in range(27):
        row = []
        for b in range(27):
            acc = ZERO
            for k, c in H.mul[(a, b)].items():
                acc = acc + c * traces[k]
            row.append(acc)
        form.append(row)
    return tuple(_elt(v) for v in linalg.nullspace(form, 27))


def socle(m: HModule) -> list[list[CycNum]]:
    rows = []
    for j in radical_basis():
        rows.extend(m.rho(j))
    return linalg.nullspace(rows, m.dim) if rows else [list(r) for r in linalg.identity(m.dim)]


def radical(m: HModule) -> list[list[CycNum]]:
    vecs = []
    for j in radical_basis():
        r = m.rho(j)
        for col in linalg.transpose(r):
            vecs.append(col)
    return linalg.column_space(vecs)


@dataclass(frozen=True)
class RepLabel:
    tag: str
    lam: Optional[tuple] = None  # (l1, l2) with l2 in {0, 1}

    def __post_init__(self):
        if (self.lam is not None) != (self.tag in ("3_e", "3_o")):
            raise ValueError(f"parameter must be given exactly for 3_e and 3_o, not {self.tag}")

    @staticmethod
    def ratio(l1: CycNum, l2: CycNum) -> tuple:
        if l2.is_zero():
            if l1.is_zero():
                raise ValueError("0/0 is not a point of the projective line")
            return (ONE, ZERO)
        return (l1 / l2, ONE)

    @property
    def is_infinite(self) -> bool:
        return self.lam is not None and self.lam[1].is_zero()

    def lam_text(self) -> str:
        if self.lam is None:
            return ""
        return "inf" if self.is_infinite else self.lam[0].literal()

    def text(self) -> str:
        return f"{self.tag}(lambda={self.lam_text()})" if self.lam is not None else self.tag

    __str__ = text


def lambda_of(m: HModule, tag: str) -> tuple:
    """Parameter of a ``3_e`` or ``3_o`` module, normalized as ``(l1, l2)``."""
    if tag == "3_e":
        v = weight_space(m, ONE)[0]
        u = weight_space(m, q)[0]
        u2 = linalg.matvec(m.Xm, u)
        mu1 = _ratio_along(linalg.matvec(m.Xp, v), u2)
        mu2 = _ratio_along(linalg.matvec(m.Xm, v), u)
    elif tag == "3_o":
        w = weight_space(m, q)[0]
        s = weight_space(m, ONE)[0]
        w2 = linalg.matvec(m.Xm, w)
        mu1 = _ratio_along(linalg.matvec(m.Xp, w), s)
        mu2 = _ratio_along(linalg.matvec(m.Xm, w2), s)
    else:
        raise ValueError(f"{tag} has no parameter")
    return RepLabel.ratio(mu1, mu2)


def _ratio_along(v, base) -> CycNum:
    c = linalg.coordinates([base], v)
    if c is None:
        raise UnknownModuleError("image vector is not along the expected direction")
    return c[0]


@dataclass(frozen=True)
class Reference:
    tag: str
    module: HModule
    fingerprint: Fingerprint


@lru_cache(maxsize=None)
def references() -> tuple:
    """Reference copies of every indecomposable, cut out of the regular representation."""
    reg = regular_space()
    e_st, e_rest = blocks().idempotents
    refs: list[Reference] = []

    def add(tag, vectors, space=reg):
        mod = restrict(space, vectors)
        if not is_indecomposable(mod):
            raise AssertionError(f"reference {tag} is decomposable")
        refs.append(Reference(tag, mod, fingerprint(mod)))
        return mod

    add("3_i", left_ideal(e_st * weight_projector(ONE)))
    m6e = add("6_e", left_ideal(e_rest * weight_projector(q)))
    m6o = add("6_o", left_ideal(e_rest * weight_projector(ONE)))
    for tag, big in (("2", m6e), ("1", m6o)):
        add(tag, socle(big), Space("sub", big.dim, big.K, big.Xp, big.Xm))
    m4e = add("4_e", radical(m6e), Space("sub", m6e.dim, m6e.K, m6e.Xp, m6e.Xm))
    m5o = add("5_o", radical(m6o), Space("sub", m6o.dim, m6o.K, m6o.Xp, m6o.Xm))

    for tag, host, weight, killers in (
        ("3_e", m4e, ONE, (lambda m: m.Xp, lambda m: m.Xm)),
        ("3_o", m5o, q, (lambda m: m.Xp, lambda m: linalg.matmul(m.Xm, m.Xm))),
    ):
        plane = weight_space(host, weight)
        hs = Space("sub", host.dim, host.K, host.Xp, host.Xm)
        candidates = [[a + b for a, b in zip(plane[0], plane[1])]]
        for killer in killers:
            restricted = linalg.matmul(killer(host), linalg.transpose(plane))
            for coeffs in linalg.nullspace(restricted, len(plane)):
                candidates.append([sum((c * p[i] for c, p in zip(coeffs, plane)), ZERO) for i in range(host.dim)])
        for v in candidates:
            add(tag, cyclic_span(host, v), hs)
    _check_distinct(refs)
    return tuple(refs)


def _check_distinct(refs: Sequence[Reference]) -> None:
    by_fp: dict = {}
    for r in refs:
        by_fp.setdefault(r.fingerprint, set()).add(r.tag)
    clashes = {fp: tags for fp, tags in by_fp.items() if len(tags) > 1}
    if clashes:
        raise AssertionError(f"reference fingerprints collide: {clashes}")


def classify(m: HModule) -> RepLabel:
    if not is_indecomposable(m):
        raise UnknownModuleError("module is decomposable")
    fp = fingerprint(m)
    for ref in references():
        if ref.fingerprint == fp:
            if ref.tag in ("3_e", "3_o"):
                return RepLabel(ref.tag, lambda_of(m, ref.tag))
            return RepLabel(ref.tag)
    raise UnknownModuleError(f"no indecomposable matches fingerprint {fp.text()}")


# ---------------------------------------------------------------------------
# decompositions


@dataclass
class PartResult:
    label: str
    invariant: bool
    classified: Optional[str]
    ok: bool
    message: str = ""
    module: Optional[HModule] = None


@dataclass
class DecompositionReport:
    parts: list
    independent: bool
    spanning: bool

    @property
    def passed(self) -> bool:
        return self.independent and self.spanning and all(p.ok for p in self.parts)

    def failures(self) -> list[str]:
        out = [f"{p.label}: {p.message}" for p in self.parts if not p.ok]
        if not self.independent:
            out.append("parts are not linearly independent")
        if not self.spanning:
            out.append("parts do not span the module")
        return out


def _label_matches(claimed, got: RepLabel) -> bool:
    if isinstance(claimed, RepLabel):
        return claimed == got if claimed.lam is not None else claimed.tag == got.tag
    return str(claimed) == got.tag


def verify_decomposition(m: HModule, parts: Sequence, render_vec: Callable | None = None) -> DecompositionReport:
    """Check a claimed splitting ``m = sum of parts``.

    ``parts`` is a list of ``(label, vectors)`` with vectors in the
    coordinates of ``m``; ``render_vec`` names vectors in the output.
    """
    sub = Space("sub", m.dim, m.K, m.Xp, m.Xm)
    results = []
    every = []
    for label, vectors in parts:
        vectors = [list(v) for v in vectors]
        every.extend(vectors)
        name = label.text() if isinstance(label, RepLabel) else str(label)
        try:
            mod = restrict(sub, vectors, [render_vec(v) for v in vectors] if render_vec else None)
        except NonInvariantError as exc:
            results.append(PartResult(name, False, None, False, f"not invariant: {exc}"))
            continue
        except ValueError as exc:
            results.append(PartResult(name, False, None, False, str(exc)))
            continue
        try:
            got = classify(mod)
        except UnknownModuleError as exc:
            results.append(PartResult(name, True, None, False, str(exc), mod))
            continue
        ok = _label_matches(label, got)
        results.append(PartResult(name, True, got.text(), ok, "" if ok else f"classified as {got.text()}", mod))
    rank = linalg.span_rank(every) if every else 0
    return DecompositionReport(results, rank == len(every), rank == m.dim)


def verify_chain(m: HModule, chain: Sequence) -> list[tuple[str, bool, str]]:
    """Each step is a submodule of the next and classifies as claimed."""
    out = []
    prev: list = []
    for label, vectors in chain:
        vectors = [list(v) for v in vectors]
        try:
            mod = submodule(m, vectors)
            got = classify(mod)
            nested = all(linalg.coordinates(vectors, p) is not None for p in prev)
            ok = nested and _label_matches(label, got)
            out.append((str(label), ok, got.text() if nested else "not nested"))
        except (NonInvariantError, UnknownModuleError, ValueError) as exc:
            out.append((str(label), False, str(exc)))
        prev = vectors
    return out


def find_decomposition(m: HModule, coeffs=(ONE, q, q2, CycNum(-1))) -> Optional[list]:
    """Heuristic search for a splitting into classified cyclic submodules.

    Candidates are the cyclic submodules generated by small combinations of
    K-eigenvectors; this is not a general algorithm and may return ``None``.
    """
    if m.dim > 6:
        raise ValueError("the heuristic search is limited to dimension 6")
    gens: list = []
    for w in WEIGHTS:
        ws = weight_space(m, w)
        for combo in itertools.product((ZERO,) + tuple(coeffs), repeat=len(ws)):
            if all(c.is_zero() for c in combo):
                continue
            gens.append([sum((c * v[i] for c, v in zip(combo, ws)), ZERO) for i in range(m.dim)])
    candidates = []
    seen = set()
    for g in gens:
        span = cyclic_span(m, g)
        key = tuple(tuple(r) for r in linalg.rref([list(r) for r in span])[0] if any(not c.is_zero() for c in r))
        if key in seen:
            continue
        seen.add(key)
        try:
            label = classify(submodule(m, span))
        except UnknownModuleError:
            continue
        candidates.append((label, span))
    candidates.sort(key=lambda t: -len(t[1]))

    def search(chosen, vecs):
        if len(vecs) == m.dim:
            return chosen
        for label, span in candidates:
            if linalg.span_rank(vecs + span) == len(vecs) + len(span):
                found = search(chosen + [(label, span)], vecs + span)
                if found:
                    return found
        return None

    return search([], [])


# ---------------------------------------------------------------------------
# rendering


def render_part(mod: HModule, title: str) -> str:
    """Arrow listing: ``--X+-->`` solid for X+, ``..X-..>`` dashed for X-."""
    lines = [f"[{title}]"]
    for j, lbl in enumerate(mod.labels):
        lines.append(f"  v{j + 1} = {lbl}")
    for j in range(mod.dim):
        for name, arrow in (("X+", "--X+-->"), ("X-", "..X-..>")):
            col = [mod.gen(name)[i][j] for i in range(mod.dim)]
            image = " + ".join(f"({c.literal()})*v{i + 1}" for i, c in enumerate(col) if not c.is_zero()) or "0"
            lines.append(f"  v{j + 1} {arrow} {image}")
    return "\n".join(lines)


def render_decomposition(report: DecompositionReport) -> str:
    blocks_text = []
    for p in report.parts:
        status = "ok" if p.ok else f"FAIL ({p.message})"
        title = f"{p.label}: {status}"
        if p.module is None:
            blocks_text.append(f"[{title}]")
        else:
            blocks_text.append(render_part(p.module, title))
    return "\n\n".join(blocks_text)


# ---------------------------------------------------------------------------
# one-form blocks


def omega_block(name: str) -> tuple[HModule, list]:
    """The 6-dim module on the rows of an action table of one-forms, with the row vectors."""
    rows = [r.vector() for r in wz.omega_rows(name)]
    return restrict(form_space(), rows, [r.text() for r in wz.omega_rows(name)]), rows


def block_coordinates(rows: Sequence, forms: Iterable) -> list[list[CycNum]]:
    out = []
    for f in forms:
        vec = to_vector(f, form_space())
        c = linalg.coordinates(rows, vec)
        if c is None:
            raise ValueError(f"{f} is not in the block")
        out.append(c)
    return out


def decompose_block(name: str, parts: Sequence) -> DecompositionReport:
    """``verify_decomposition`` for one-form block ``name`` with parts given as forms."""
    mod, rows = omega_block(name)

    def render(coords):
        vec = [sum((c * r[i] for c, r in zip(coords, rows)), ZERO) for i in range(36)]
        return wz.WZForm.from_vector(vec).text()

    coords = [(label, block_coordinates(rows, forms)) for label, forms in parts]
    return verify_decomposition(mod, coords, render)
