"""Star structures, the invariant scalar product and hermitian one-forms.

A star is an antilinear involutive antihomomorphism.  It is stored through
its values on a basis; ``(c e_i)* = conj(c) e_i*``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from . import hopf, linalg, reps, wz
from .hopf import HopfData, HopfElt
from .qplane import MONOMIALS, PlaneElt, mono_index
from .reference import HERMITIAN_ONEFORMS
from .rewriting import add_into
from .scalars import ONE, ZERO, CycNum, q_power

q = q_power(1)
q2 = q_power(2)


class StarSolveError(ArithmeticError):
    pass


@dataclass(frozen=True)
class StarMap:
    target: str  # "F", "H", "M" or "Omega"
    images: tuple  # images[i] = star of basis element i, as a sparse vector

    @property
    def dim(self) -> int:
        return len(self.images)

    def apply_vec(self, v: Mapping[int, CycNum]) -> dict:
        out: dict = {}
        for i, c in v.items():
            cc = CycNum.coerce(c).conj()
            for k, d in self.images[i].items():
                add_into(out, k, cc * d)
        return out

    def __call__(self, elt):
        if isinstance(elt, HopfElt):
            return elt.algebra.element(self.apply_vec(elt.coeffs))
        if isinstance(elt, PlaneElt):
            vec = self.apply_vec({i: c for i, c in enumerate(elt.coeffs) if not c.is_zero()})
            return PlaneElt([vec.get(i, ZERO) for i in range(9)])
        if isinstance(elt, wz.WZForm):
            return wz.WZForm.from_vector(self.apply_vec(elt.sparse()))
        raise TypeError(f"cannot star {type(elt).__name__}")


def _hopf_star(hd: HopfData, gen_images: Mapping[str, dict], target: str) -> StarMap:
    images = []
    for w in hd.words:
        v = {hd.unit: ONE}
        for letter in w:
            v = hd.mul_vec(gen_images[letter], v)  # reversed order
        images.append(v)
    return StarMap(target, tuple(images))


@lru_cache(maxsize=None)
def star_F() -> StarMap:
    F = hopf.build_F()
    return _hopf_star(F, {s: F.word_vec(s) for s in "abcd"}, "F")


@lru_cache(maxsize=None)
def star_H() -> StarMap:
    H = hopf.build_H()
    gens = {
        "E": {k: -q2 * c for k, c in H.word_vec("E").items()},
        "F": {k: -q * c for k, c in H.word_vec("F").items()},
        "K": H.word_vec("K"),
    }
    return _hopf_star(H, gens, "H")


@lru_cache(maxsize=None)
def star_M(alpha: CycNum = ONE) -> StarMap:
    """``x* = alpha x``, ``y* = alpha y``; so ``(x^r y^s)* = alpha^(r+s) y^s x^r``."""
    alpha = CycNum.coerce(alpha)
    if alpha * alpha.conj() != ONE:
        raise ValueError("alpha must have modulus one")
    images = []
    for r, s in MONOMIALS:
        images.append({mono_index(r, s): (alpha ** (r + s)) * q_power(-r * s)})
    return StarMap("M", tuple(images))


def _form_star_from(dx_star: wz.WZForm, dy_star: wz.WZForm) -> StarMap:
    letters = {"x": wz.parse_form("x"), "y": wz.parse_form("y"), "X": dx_star, "Y": dy_star}
    images = []
    for w in wz.BASIS_WORDS:
        v = wz.WZForm.coerce(ONE)
        for letter in w:
            v = letters[letter] * v
        images.append(v.sparse())
    return StarMap("Omega", tuple(images))


# ---------------------------------------------------------------------------
# generic property checks


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    counterexample: object = None


def _first_failure(name, cases) -> CheckResult:
    n = 0
    for key, ok in cases:
        n += 1
        if not ok:
            return CheckResult(name, False, n, key)
    return CheckResult(name, True, n)


def verify_star_map(star: StarMap, mul) -> dict:
    """Involution and antihomomorphism on all basis elements and pairs."""
    n = star.dim
    out = {}
    out["involution"] = _first_failure(
        "involution", ((i, star.apply_vec(star.images[i]) == {i: ONE}) for i in range(n)))

    def anti():
        for i in range(n):
            for j in range(n):
                yield (i, j), star.apply_vec(mul({i: ONE}, {j: ONE})) == mul(star.images[j], star.images[i])

    out["antihomomorphism"] = _first_failure("antihomomorphism", anti())
    return out


def verify_hopf_star(hd: HopfData, star: StarMap) -> dict:
    """Extra *-Hopf conditions: coproduct commutes with star, ``S(S(h)*)* = h``."""
    def coproduct():
        for i in range(hd.dim):
            lhs = hd.coproduct_vec(star.images[i])
            rhs: dict = {}
            for (a, b), c in hd.coproduct[i].items():
                for k, u in star.images[a].items():
                    for l, v in star.images[b].items():
                        add_into(rhs, (k, l), c.conj() * u * v)
            yield i, lhs == rhs

    def antipode():
        for i in range(hd.dim):
            v = star.apply_vec(hd.antipode_vec(star.apply_vec(hd.antipode[i])))
            yield i, v == {i: ONE}

    return {
        "coproduct": _first_failure("coproduct", coproduct()),
        "antipode": _first_failure("antipode", antipode()),
    }


def verify_star_duality() -> CheckResult:
    """``<h*, f> = conj(<h, (S f)*>)`` on all 27 x 27 basis pairs."""
    P = hopf.default_pairing()
    F, H = P.F, P.H
    sH, sF = star_H(), star_F()

    def cases():
        for h in range(H.dim):
            for f in range(F.dim):
                lhs = P.pair(sH.images[h], {f: ONE})
                rhs = P.pair({h: ONE}, sF.apply_vec(F.antipode[f])).conj()
                yield (H.labels[h], F.labels[f]), lhs == rhs

    return _first_failure("star duality", cases())


def _sh_star(h: int) -> HopfElt:
    """``(S h)*`` for a basis element of H."""
    H = hopf.build_H()
    return H.element(star_H().apply_vec(H.antipode[h]))


def verify_action_star(space: str = "M", star: StarMap | None = None, all_basis: bool = False) -> CheckResult:
    """``h(z*) = ((S h)* z)*`` for generators (or all basis elements) h."""
    H = hopf.build_H()
    hs = range(H.dim) if all_basis else [H.index_of_word(w) for w in ("K", "E", "F")]
    if space == "M":
        star = star or star_M()
        zs = [PlaneElt.monomial(r, s) for r, s in MONOMIALS]
        action = reps.act
    elif space == "Omega":
        star = star or star_forms()
        zs = wz.basis()
        action = wz.h_act_form
    else:
        raise ValueError(f"unknown space {space!r}")

    def cases():
        for h in hs:
            he = H.element({h: ONE})
            for z in zs:
                yield (H.labels[h], z.text()), action(he, star(z)) == star(action(_sh_star(h), z))

    return _first_failure(f"action star ({space})", cases())


# ---------------------------------------------------------------------------
# star on forms


def _form_unknowns():
    """Basis for the ansatz: 18 one-form monomials for dx*, 18 for dy*."""
    return [wz.WZForm.basis_element(i) for i in range(9, 27)]


@dataclass(frozen=True)
class FormStarSolution:
    star: StarMap
    dx_star: wz.WZForm
    dy_star: wz.WZForm
    solution_dim: int


@lru_cache(maxsize=None)
def solve_star_on_forms() -> FormStarSolution:
    """Solve for ``dx*`` and ``dy*`` from compatibility with the H-action.

    Unknowns: the 36 coefficients of ``dx*`` and ``dy*`` in the one-form
    basis.  Equations: ``h(w*) = ((S h)* w)*`` for ``h`` in ``K, X+, X-``
    and ``w`` in ``dx, dy``, plus the star of ``dx x = q x dx``, which reads
    ``x* dx* = conj(q) dx* x*``.  All are linear in the unknowns because
    the star is antilinear.
    """
    H = hopf.build_H()
    unknown_forms = _form_unknowns()
    n = 2 * len(unknown_forms)
    rows: list = []

    def image(k: int) -> wz.WZForm:
        return unknown_forms[k % 18]

    def add_equations(terms):
        """``terms``: list of (coef, unknown index, form) summing to zero."""
        acc: dict = {}
        for c, k, f in terms:
            for pos, v in f.sparse().items():
                add_into(acc, (pos, k), c * v)
        by_pos: dict = {}
        for (pos, k), v in acc.items():
            by_pos.setdefault(pos, [ZERO] * n)[k] = v
        rows.extend(by_pos.values())

    dxdy = [wz.DX, wz.DY]
    for w in ("K", "E", "F"):
        h = H.index_of_word(w)
        he = H.element({h: ONE})
        sh = _sh_star(h)
        for slot, omega in enumerate(dxdy):
            terms = []
            # left side h(omega*), omega* = sum_k u_k basis_k over block `slot`
            for k in range(18):
                terms.append((ONE, slot * 18 + k, wz.h_act_form(he, image(k))))
            # right side ((S h)* omega)* = conj(c1) dx* + conj(c2) dy*
            moved = wz.h_act_form(sh, omega)
            c1, c2 = moved.d1x.coeffs[0], moved.d1y.coeffs[0]
            if moved != wz.DX.scale(c1) + wz.DY.scale(c2):
                raise StarSolveError("generator maps dx or dy outside span(dx, dy)")
            for k in range(18):
                terms.append((-c1.conj(), k, image(k)))
                terms.append((-c2.conj(), 18 + k, image(k)))
            add_equations(terms)
    x = wz.parse_form("x")
    c = wz.WZ_RULES["Xx"]["xX"].conj()
    add_equations([(ONE, k, x * image(k)) for k in range(18)] + [(-c, k, image(k) * x) for k in range(18)])

    sols = linalg.nullspace(rows, n)
    if not sols:
        raise StarSolveError("no nonzero star on one-forms is compatible")
    if len(sols) != 1:
        raise StarSolveError(f"star on one-forms is not unique: {len(sols)} free parameters")
    sol = sols[0]
    # normalize by (dx)* = d(x*) = dx
    dx_pos = 0  # coefficient of 1*dx in dx*
    if sol[dx_pos].is_zero():
        raise StarSolveError("solution has no dx component in dx*")
    scale = sol[dx_pos].inv()
    sol = [scale * c for c in sol]
    dx_star = sum((image(k).scale(sol[k]) for k in range(18)), wz.WZForm())
    dy_star = sum((image(k).scale(sol[18 + k]) for k in range(18)), wz.WZForm())
    return FormStarSolution(_form_star_from(dx_star, dy_star), dx_star, dy_star, len(sols))


def star_forms() -> StarMap:
    return solve_star_on_forms().star


def star_respects_relations(star: StarMap | None = None) -> bool:
    """The star is well defined on the quotient: each relation maps into the ideal."""
    star = star or star_forms()
    imgs = {c: wz.WZForm.from_vector(star.images[wz.BASIS_WORDS.index(w)]) for c, w in
            (("x", "x"), ("y", "y"), ("X", "X"), ("Y", "Y"))}

    def star_word(word: str) -> wz.WZForm:
        v = wz.WZForm.coerce(ONE)
        for letter in word:
            v = imgs[letter] * v
        return v

    for lhs, rhs in wz.WZ_RULES.items():
        expected = wz.WZForm()
        for w, c in rhs.items():
            expected = expected + star_word(w).scale(c.conj())
        if star_word(lhs) != expected:
            return False
    return True


def verify_d_star() -> dict:
    star = star_forms()
    out = {}
    out["(dz)* = d(z*)"] = _first_failure(
        "(dz)* = d(z*)",
        ((z.text(), star(wz.wz_d(z)) == wz.wz_d(star(z))) for z in wz.basis()[:9]),
    )

    def graded():
        for b in wz.basis():
            p = b.degree()
            lhs = wz.wz_d(star(b))
            rhs = star(wz.wz_d(b))
            yield b.text(), lhs == (rhs if p % 2 == 0 else -rhs)

    out["d(w*) = (-1)^p (dw)*"] = _first_failure("d(w*) = (-1)^p (dw)*", graded())
    return out


# ---------------------------------------------------------------------------
# invariant scalar product on the plane


@dataclass(frozen=True)
class GramMatrix:
    entries: tuple  # 9 x 9; entry [i][j] = (e_i, e_j)

    def inner(self, u: PlaneElt, v: PlaneElt) -> CycNum:
        acc = ZERO
        for i, a in enumerate(u.coeffs):
            if a.is_zero():
                continue
            ac = a.conj()
            for j, b in enumerate(v.coeffs):
                if not b.is_zero():
                    acc = acc + ac * b * self.entries[i][j]
        return acc

    def rows(self) -> list:
        return [list(r) for r in self.entries]

    def is_conjugate_symmetric(self) -> bool:
        return all(self.entries[i][j] == self.entries[j][i].conj() for i in range(9) for j in range(9))

    def to_json(self) -> dict:
        from .qplane import mono_name

        return {
            "basis": [mono_name(r, s) for r, s in MONOMIALS],
            "matrix": [[c.literal() for c in row] for row in self.entries],
        }


@lru_cache(maxsize=None)
def _plane_action_matrices() -> tuple:
    """9x9 column matrices of every basis element of H on the plane."""
    H = hopf.build_H()
    out = []
    for h in range(H.dim):
        he = H.element({h: ONE})
        cols = [reps.act(he, PlaneElt.monomial(r, s)).coeffs for r, s in MONOMIALS]
        out.append(tuple(tuple(row) for row in linalg.transpose([list(c) for c in cols])))
    return tuple(out)


def _act_plane_vec(h: Mapping[int, CycNum], v: Sequence[CycNum]) -> list:
    mats = _plane_action_matrices()
    out = [ZERO] * 9
    for idx, c in h.items():
        m = mats[idx]
        for i in range(9):
            acc = ZERO
            for j in range(9):
                if not v[j].is_zero() and not m[i][j].is_zero():
                    acc = acc + m[i][j] * v[j]
            out[i] = out[i] + c * acc
    return out


def _g(i: int, j: int) -> int:
    return 9 * i + j


def _sesq_row(u: Sequence[CycNum], v: Sequence[CycNum]) -> list:
    """Coefficients of ``(u, v)`` in the 81 unknowns ``G[i][j]``."""
    row = [ZERO] * 81
    for i, a in enumerate(u):
        if a.is_zero():
            continue
        for j, b in enumerate(v):
            if not b.is_zero():
                row[_g(i, j)] = row[_g(i, j)] + a.conj() * b
    return row


def _unit_vec(i: int) -> list:
    return [ONE if k == i else ZERO for k in range(9)]


def _gram_conditions() -> list:
    """Star-representation conditions for H (on (1, z)) and for left multiplication."""
    H = hopf.build_H()
    sM = star_M()
    rows = []
    one = _unit_vec(0)
    for w in ("K", "E", "F"):
        h = H.index_of_word(w)
        hstar = star_H().images[h]
        lhs_vec = _act_plane_vec(hstar, one)
        for z in range(9):
            lhs = _sesq_row(lhs_vec, _unit_vec(z))
            rhs = _sesq_row(one, _act_plane_vec({h: ONE}, _unit_vec(z)))
            rows.append([a - b for a, b in zip(lhs, rhs)])
    for i in range(9):
        zi_star = sM(PlaneElt.monomial(*MONOMIALS[i]))
        for j in range(9):
            prod = zi_star * PlaneElt.monomial(*MONOMIALS[j])
            row = _sesq_row(_unit_vec(i), _unit_vec(j))
            rhs = _sesq_row(one, list(prod.coeffs))
            rows.append([a - b for a, b in zip(row, rhs)])
    return rows


def _alternative_invariance_rows() -> list:
    """``eps(h)(u, v) = sum (S(h1*) u, h2 v)`` for generators h."""
    H = hopf.build_H()
    rows = []
    for w in ("K", "E", "F"):
        h = H.index_of_word(w)
        eps = H.counit[h]
        for u, v in itertools.product(range(9), repeat=2):
            total = [eps * c for c in _sesq_row(_unit_vec(u), _unit_vec(v))]
            for (i, j), c in H.coproduct[h].items():
                s_of_star = H.antipode_vec(star_H().images[i])
                left = _act_plane_vec(s_of_star, _unit_vec(u))
                right = _act_plane_vec({j: ONE}, _unit_vec(v))
                row = _sesq_row(left, right)
                total = [t - c * r for t, r in zip(total, row)]
            rows.append(total)
    return rows


@dataclass(frozen=True)
class GramSolution:
    gram: GramMatrix
    solution_dim: int
    unit_row: tuple  # (1, x^r y^s) for the nine monomials
    nonvanishing: tuple  # monomial indices with (1, z) != 0


def _gram_from_vector(sol) -> GramMatrix:
    return GramMatrix(tuple(tuple(sol[_g(i, j)] for j in range(9)) for i in range(9)))


@lru_cache(maxsize=None)
def solve_invariant_gram() -> GramSolution:
    rows = _gram_conditions()
    sols = linalg.nullspace(rows, 81)
    if not sols:
        raise StarSolveError("only the zero scalar product satisfies the conditions")
    if len(sols) > 1:
        raise StarSolveError(f"scalar product is underdetermined: {len(sols)} free parameters")
    sol = sols[0]
    xy = mono_index(1, 1)
    norm = sol[_g(xy, xy)]
    if norm.is_zero():
        raise StarSolveError("(xy, xy) vanishes on the solution; cannot normalize")
    sol = [c / norm for c in sol]
    gram = _gram_from_vector(sol)
    unit_row = tuple(gram.entries[0])
    return GramSolution(gram, len(sols), unit_row, tuple(i for i, c in enumerate(unit_row) if not c.is_zero()))


def verify_gram_invariance(gram: GramMatrix | None = None) -> CheckResult:
    """``eps(h)(u, v) = sum ((S h1)* u, h2 v)`` for all basis h and monomials u, v."""
    gram = gram or solve_invariant_gram().gram
    H = hopf.build_H()

    def inner(u, v):
        return gram.inner(PlaneElt(u), PlaneElt(v))

    def cases():
        for h in range(H.dim):
            for u, v in itertools.product(range(9), repeat=2):
                lhs = H.counit[h] * gram.entries[u][v]
                rhs = ZERO
                for (i, j), c in H.coproduct[h].items():
                    left = _act_plane_vec(_sh_star(i).coeffs, _unit_vec(u))
                    right = _act_plane_vec({j: ONE}, _unit_vec(v))
                    rhs = rhs + c * inner(left, right)
                yield (H.labels[h], u, v), lhs == rhs

    return _first_failure("invariance", cases())


@dataclass(frozen=True)
class AlternativeInvarianceReport:
    solution_dim: int  # with the alternative invariance imposed
    solution_dim_without: int  # star-representation conditions only
    normalized_inconsistent: bool  # adding (xy, xy) = 1 has no solution

    @property
    def passed(self) -> bool:
        return self.solution_dim == 0 and self.solution_dim_without >= 1 and self.normalized_inconsistent


def check_alternative_invariance_forces_zero() -> AlternativeInvarianceReport:
    base = _gram_conditions()
    alt = _alternative_invariance_rows()
    dim_with = len(linalg.nullspace(base + alt, 81))
    dim_without = len(linalg.nullspace(base, 81))
    xy = mono_index(1, 1)
    norm_row = [ZERO] * 81
    norm_row[_g(xy, xy)] = ONE
    try:
        linalg.solve(base + alt + [norm_row], [ZERO] * len(base + alt) + [ONE])
        inconsistent = False
    except linalg.InconsistentSystem:
        inconsistent = True
    return AlternativeInvarianceReport(dim_with, dim_without, inconsistent)


# ---------------------------------------------------------------------------
# hermitian one-forms


@dataclass(frozen=True)
class HermitianFamily:
    name: str
    forms: tuple  # WZForm generators, one per real coefficient
    hermitian: tuple  # bool per generator


@dataclass(frozen=True)
class HermitianReport:
    families: tuple
    rank: int  # complex rank of all generators together

    @property
    def all_hermitian(self) -> bool:
        return all(all(f.hermitian) for f in self.families)

    @property
    def spans(self) -> bool:
        # for star-fixed vectors, complex independence is real independence,
        # so rank 18 means the real span plus i times it is all of Omega^1
        return self.rank == 18


def hermitian_oneforms() -> HermitianReport:
    star = star_forms()
    fams = []
    vectors = []
    for name, texts in HERMITIAN_ONEFORMS.items():
        forms = tuple(wz.parse_form(t) for t in texts)
        fams.append(HermitianFamily(name, forms, tuple(star(f) == f for f in forms)))
        vectors.extend(f.vector() for f in forms)
    return HermitianReport(tuple(fams), linalg.span_rank(vectors))
