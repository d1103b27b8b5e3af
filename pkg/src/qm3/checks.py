"""Registry of named verification checks, grouped into suites."""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable

from . import derham, hopf, reps, star, wz
from .qplane import PlaneElt, basis, mat_mul, plane_mul, to_matrix
from .reference import ACTION_TABLE, CHAIN_6E, DECOMPOSITIONS, OMEGA_TABLES
from .rewriting import all_words, check_confluence
from .scalars import ONE, CycNum, parse_cyc

SUITES = ("hopf", "action", "wz", "star", "gram", "derham")
SEED = 20240601


@dataclass(frozen=True)
class Outcome:
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    run: Callable[[], Outcome]


@dataclass(frozen=True)
class Report:
    name: str
    suite: str
    status: str  # "pass" or "fail"
    detail: str
    elapsed: float

    def to_json(self) -> dict:
        return {"check": self.name, "suite": self.suite, "status": self.status,
                "detail": self.detail, "elapsed": round(self.elapsed, 3)}


REGISTRY: list[Check] = []


def check(name: str, suite: str):
    def deco(fn):
        REGISTRY.append(Check(name, suite, fn))
        return fn

    return deco


def _from_results(results) -> Outcome:
    bad = [f"{r.name}: {r.counterexample}" for r in results if not r.passed]
    total = sum(r.checked for r in results)
    return Outcome(not bad, "; ".join(bad) if bad else f"{total} cases")


# ---------------------------------------------------------------------------
# hopf


@check("hopf.F.axioms", "hopf")
def _f_axioms():
    return _from_results(hopf.verify_hopf(hopf.build_F()).values())


@check("hopf.H.axioms", "hopf")
def _h_axioms():
    return _from_results(hopf.verify_hopf(hopf.build_H()).values())


PAIRING_TABLE = {
    ("K", "a"): "w", ("K", "d"): "-1 - w", ("E", "b"): "1", ("F", "c"): "1",
}


@check("hopf.pairing.generators", "hopf")
def _pairing_generators():
    H, F = hopf.build_H(), hopf.build_F()
    P = hopf.default_pairing()
    bad = []
    for h, f in itertools.product("EFK", "abcd"):
        got = P.pair(H.word_vec(h), F.word_vec(f))
        want = parse_cyc(PAIRING_TABLE.get((h, f), "0"))
        if got != want:
            bad.append(f"<{h},{f}> = {got.literal()}")
    return Outcome(not bad, "; ".join(bad) or "12 entries")


@check("hopf.pairing.duality", "hopf")
def _pairing_duality():
    out = _from_results(hopf.verify_duality().values())
    return Outcome(out.passed, f"{out.detail}; rank {hopf.pairing_rank()}")


# ---------------------------------------------------------------------------
# plane and action


@check("plane.matrix_oracle", "action")
def _matrix_oracle():
    for u, v in itertools.product(basis(), repeat=2):
        if to_matrix(plane_mul(u, v)) != mat_mul(to_matrix(u), to_matrix(v)):
            return Outcome(False, f"{u.text()} * {v.text()}")
    x, y = PlaneElt.monomial(1, 0), PlaneElt.monomial(0, 1)
    q = CycNum(0, 1)
    ok = x * y == (y * x).scale(q) and x ** 3 == PlaneElt.scalar(1) and y ** 3 == PlaneElt.scalar(1)
    return Outcome(ok, "81 pairs and relations")


@check("action.table", "action")
def _action_table():
    table = reps.action_table()
    bad = [row for row, imgs in table.items()
           if [wz.parse_form(t).d0 for t in ACTION_TABLE[row]] != list(imgs)]
    return Outcome(not bad, f"mismatch in {bad}" if bad else "27 entries")


@check("action.module_algebra", "action")
def _module_algebra():
    H = hopf.build_H()
    n = 0
    for g in hopf.H_gens():
        delta = g.coproduct()
        for u, v in itertools.product(basis(), repeat=2):
            n += 1
            expected = PlaneElt()
            for (i, j), c in delta.items():
                expected = expected + plane_mul(reps.act(H.element({i: ONE}), u), reps.act(H.element({j: ONE}), v)).scale(c)
            if reps.act(g, plane_mul(u, v)) != expected:
                return Outcome(False, f"{g.text()} on {u.text()} * {v.text()}")
    one = PlaneElt.scalar(1)
    for h in H.basis():
        if reps.act(h, one) != one.scale(h.counit()):
            return Outcome(False, f"{h.text()} on 1")
    return Outcome(True, f"{n} products, 27 units")


@check("action.decompositions", "action")
def _decompositions():
    bad = []
    for name, parts in DECOMPOSITIONS.items():
        report = reps.decompose_block(name, parts)
        if not report.passed:
            bad.append(f"{name}: {report.failures()}")
    return Outcome(not bad, "; ".join(bad) or ", ".join(DECOMPOSITIONS))


@check("action.chain_6e", "action")
def _chain():
    mod, rows = reps.omega_block("omega-3i2")
    chain = [(label, reps.block_coordinates(rows, forms)) for label, forms in CHAIN_6E]
    result = reps.verify_chain(mod, chain)
    ok = all(r[1] for r in result)
    return Outcome(ok, " -> ".join(r[2] for r in result))


# ---------------------------------------------------------------------------
# calculus


def random_form(rng: random.Random, terms: int = 5) -> wz.WZForm:
    vec = {}
    for _ in range(terms):
        vec[rng.randrange(36)] = CycNum(rng.randint(-3, 3), rng.randint(-3, 3))
    return wz.WZForm.from_vector(vec)


@check("wz.confluence", "wz")
def _confluence():
    words = all_words("xyXY", 4)
    bad = check_confluence(wz.left_system(), words) + check_confluence(wz.right_system(), words)
    return Outcome(not bad, f"{len(bad)} failures" if bad else f"{len(words)} words, both orientations")


@check("wz.d_squared", "wz")
def _d_squared():
    bad = [b.text() for b in wz.basis() if not wz.wz_d(wz.wz_d(b)).is_zero()]
    return Outcome(not bad, ", ".join(bad) or "36 basis elements")


@check("wz.d_cubes", "wz")
def _d_cubes():
    x, y = wz.parse_form("x"), wz.parse_form("y")
    return Outcome(wz.wz_d(x * x * x).is_zero() and wz.wz_d(y * y * y).is_zero(), "d(x^3) = d(y^3) = 0")


@check("wz.leibniz", "wz")
def _leibniz():
    rng = random.Random(SEED)
    for k in range(1000):
        u = random_form(rng).component(rng.randrange(3))
        v = random_form(rng)
        sign = -1 if u.degrees() == {1} else 1
        if wz.wz_d(u * v) != wz.wz_d(u) * v + (u * wz.wz_d(v)).scale(sign):
            return Outcome(False, f"pair {k}: {u.text()} , {v.text()}")
    return Outcome(True, "1000 seeded pairs")


@check("wz.omega_tables", "wz")
def _omega_tables():
    bad = []
    for name, rows in wz.omega_tables().items():
        for row, imgs in rows:
            want = [wz.parse_form(t) for t in OMEGA_TABLES[name][_row_key(row)]]
            if want != imgs:
                bad.append(f"{name}/{row.text()}")
    return Outcome(not bad, ", ".join(bad) or "54 entries")


def _row_key(row: wz.WZForm) -> str:
    for key in itertools.chain.from_iterable(OMEGA_TABLES.values()):
        if wz.parse_form(key) == row:
            return key
    raise KeyError(row.text())


@check("wz.two_forms", "wz")
def _two_forms():
    rep = wz.omega2_iso()
    bad = [k for k, v in rep.items() if not v]
    return Outcome(not bad, ", ".join(bad) or "z -> z dxdy intertwines")


# ---------------------------------------------------------------------------
# stars


@check("star.structures", "star")
def _structures():
    H, F = hopf.build_H(), hopf.build_F()
    results = list(star.verify_star_map(star.star_F(), F.mul_vec).values())
    results += list(star.verify_star_map(star.star_H(), H.mul_vec).values())
    results += list(star.verify_hopf_star(F, star.star_F()).values())
    results += list(star.verify_hopf_star(H, star.star_H()).values())
    results += list(star.verify_star_map(star.star_forms(), wz.mul_vec).values())
    out = _from_results(results)
    ok = out.passed and star.star_respects_relations()
    return Outcome(ok, out.detail)


@check("star.duality", "star")
def _star_duality():
    return _from_results([star.verify_star_duality()])


@check("star.action_plane", "star")
def _star_plane():
    return _from_results([star.verify_action_star("M")])


@check("star.action_forms", "star")
def _star_forms():
    return _from_results([star.verify_action_star("Omega")])


@check("star.forms_solution", "star")
def _forms_solution():
    sol = star.solve_star_on_forms()
    ok = sol.dx_star == wz.DX and sol.dy_star == wz.DY and sol.solution_dim == 1
    return Outcome(ok, f"dx* = {sol.dx_star.text()}, dy* = {sol.dy_star.text()}")


@check("star.d_compatibility", "star")
def _d_star():
    return _from_results(star.verify_d_star().values())


@check("star.hermitian", "star")
def _hermitian():
    rep = star.hermitian_oneforms()
    bad = [f.name for f in rep.families if not all(f.hermitian)]
    return Outcome(not bad and rep.spans, ", ".join(bad) or f"18 forms, rank {rep.rank}")


# ---------------------------------------------------------------------------
# scalar product


@check("gram.solution", "gram")
def _gram_solution():
    sol = star.solve_invariant_gram()
    g = sol.gram
    xy = PlaneElt.monomial(1, 1)
    ok = (sol.solution_dim == 1 and sol.nonvanishing == (8,) and g.inner(xy, xy) == ONE
          and g.is_conjugate_symmetric())
    return Outcome(ok, f"(1, x^2 y^2) = {sol.unit_row[8].literal()}")


@check("gram.invariance", "gram")
def _gram_invariance():
    return _from_results([star.verify_gram_invariance()])


@check("gram.alternative_forces_zero", "gram")
def _gram_alt():
    rep = star.check_alternative_invariance_forces_zero()
    return Outcome(rep.passed, f"dim {rep.solution_dim} (without: {rep.solution_dim_without})")


# ---------------------------------------------------------------------------
# tensor complex


def random_xi(rng: random.Random, n: int = derham.DEFAULT_N, terms: int = 4) -> derham.XiElt:
    coeffs = {}
    for _ in range(terms):
        s = tuple(sorted(rng.sample(range(n), rng.randint(0, 2))))
        e = tuple(rng.randint(0, 2) for _ in range(n))
        coeffs[(s, e, rng.randrange(36))] = CycNum(rng.randint(-2, 2), rng.randint(-2, 2))
    return derham.XiElt(n, coeffs)


@check("derham.d_squared", "derham")
def _xi_d2():
    rng = random.Random(SEED)
    for k in range(200):
        u = random_xi(rng)
        if not derham.xi_d(derham.xi_d(u)).is_zero():
            return Outcome(False, f"sample {k}")
    return Outcome(True, "200 seeded elements")


@check("derham.leibniz", "derham")
def _xi_leibniz():
    rng = random.Random(SEED + 1)
    for k in range(200):
        u, v = random_xi(rng, terms=1), random_xi(rng)
        g = u.grade() if not u.is_zero() else 0
        lhs = derham.xi_d(u * v)
        rhs = derham.xi_d(u) * v + (u * derham.xi_d(v)).scale((-1) ** g)
        if lhs != rhs:
            return Outcome(False, f"sample {k}")
    return Outcome(True, "200 seeded pairs")


@check("derham.associative", "derham")
def _xi_assoc():
    rng = random.Random(SEED + 2)
    for k in range(100):
        u, v, w = (random_xi(rng) for _ in range(3))
        if (u * v) * w != u * (v * w):
            return Outcome(False, f"sample {k}")
    return Outcome(True, "100 seeded triples")


@check("derham.oneform_round_trip", "derham")
def _xi_pack():
    rng = random.Random(SEED + 3)
    n = derham.DEFAULT_N
    for k in range(100):
        coeffs = {}
        for _ in range(5):
            e = tuple(rng.randint(0, 2) for _ in range(n))
            if rng.random() < 0.5:
                key = ((rng.randrange(n),), e, rng.randrange(9))
            else:
                key = ((), e, rng.randrange(9, 27))
            coeffs[key] = CycNum(rng.randint(-2, 2), 1)
        u = derham.XiElt(n, coeffs)
        t = derham.unpack_oneform(u)
        if derham.pack_oneform(t) != u or derham.unpack_oneform(derham.pack_oneform(t)) != t:
            return Outcome(False, f"sample {k}")
    return Outcome(derham.xi_slots(1, n) == 54, f"100 seeded triplets; {derham.xi_slots(1, n)} slots")


@check("derham.grade_two_blocks", "derham")
def _xi_blocks():
    n = derham.DEFAULT_N
    dx0 = derham.XiElt.from_ext(derham.ExtForm.dx(n, 0))
    dx1 = derham.XiElt.from_ext(derham.ExtForm.dx(n, 1))
    u = derham.XiElt.from_wz(wz.DXDY) + dx0 * dx1 + dx0 * derham.XiElt.from_wz(wz.DX)
    parts = derham.xi_grade_decompose(u)
    ok = list(parts) == [2] and sorted(parts[2]) == [(0, 2), (1, 1), (2, 0)]
    return Outcome(ok, "blocks " + ", ".join(f"{p}+{r}" for p, r in sorted(parts.get(2, {}))))


# ---------------------------------------------------------------------------


def select(selector: str) -> list[Check]:
    if selector == "all":
        return list(REGISTRY)
    if selector not in SUITES:
        raise KeyError(selector)
    return [c for c in REGISTRY if c.suite == selector]


def run_check(c: Check) -> Report:
    start = time.perf_counter()
    try:
        out = c.run()
    except Exception as exc:  # a crashing check is a failing check
        out = Outcome(False, f"{type(exc).__name__}: {exc}")
    return Report(c.name, c.suite, "pass" if out.passed else "fail", out.detail, time.perf_counter() - start)


def run(selector: str = "all"):
    for c in select(selector):
        yield run_check(c)

