"""The thirteen acceptance criteria, one test each, all exact."""

import itertools
import subprocess
import sys
import time
from contextlib import contextmanager

import pytest

from qm3 import checks, derham, hopf, reps, star, wz
from qm3.qplane import PlaneElt, basis, mat_mul, plane_mul, to_matrix
from qm3.reference import ACTION_TABLE, CHAIN_6E, DECOMPOSITIONS, OMEGA_TABLES
from qm3.report import TABLES, build_report, render_table
from qm3.rewriting import all_words, check_confluence
from qm3.scalars import ONE, Q, Q2, CycNum


@pytest.fixture
def criterion(acceptance_log):
    @contextmanager
    def run(n, title):
        acceptance_log[n] = (title, False)
        yield
        acceptance_log[n] = (title, True)
        print(f"criterion {n}: PASS  {title}")

    return run


def test_01_matrix_oracle(criterion):
    with criterion(1, "plane product agrees with 3x3 matrices"):
        start = time.perf_counter()
        for u, v in itertools.product(basis(), repeat=2):
            assert to_matrix(plane_mul(u, v)) == mat_mul(to_matrix(u), to_matrix(v))
        x, y = PlaneElt.monomial(1, 0), PlaneElt.monomial(0, 1)
        assert x * y == (y * x).scale(Q)
        assert x ** 3 == PlaneElt.scalar(1) and y ** 3 == PlaneElt.scalar(1)
        assert time.perf_counter() - start < 1.0


def test_02_hopf_axioms(criterion):
    with criterion(2, "Hopf axioms for F and H"):
        start = time.perf_counter()
        for hd in (hopf.build_F(), hopf.build_H()):
            for name, res in hopf.verify_hopf(hd).items():
                assert res.passed, (hd.name, name, res.counterexample)
        assert time.perf_counter() - start < 30.0


def test_03_pairing(criterion):
    with criterion(3, "pairing duality and generator values"):
        for res in hopf.verify_duality().values():
            assert res.passed, res
        H, F = hopf.build_H(), hopf.build_F()
        P = hopf.default_pairing()
        table = {("K", "a"): Q, ("K", "d"): Q2, ("E", "b"): ONE, ("F", "c"): ONE}
        entries = 0
        for h, f in itertools.product("EFK", "abcd"):
            assert P.pair(H.word_vec(h), F.word_vec(f)) == table.get((h, f), CycNum(0))
            entries += 1
        assert entries == 12


def test_04_action_table(criterion):
    with criterion(4, "action table on the plane"):
        table = reps.action_table()
        n = 0
        for row, images in table.items():
            for got, text in zip(images, ACTION_TABLE[row]):
                assert got == wz.parse_form(text).d0, (row, text)
                n += 1
        assert n == 27


def test_05_module_algebra(criterion):
    with criterion(5, "module-algebra law"):
        H = hopf.build_H()
        for g in hopf.H_gens():
            delta = g.coproduct()
            for u, v in itertools.product(basis(), repeat=2):
                expected = PlaneElt()
                for (i, j), c in delta.items():
                    left = reps.act(H.element({i: ONE}), u)
                    right = reps.act(H.element({j: ONE}), v)
                    expected = expected + plane_mul(left, right).scale(c)
                assert reps.act(g, plane_mul(u, v)) == expected
        one = PlaneElt.scalar(1)
        for h in H.basis():
            assert reps.act(h, one) == one.scale(h.counit())


def test_06_one_form_tables(criterion):
    with criterion(6, "action tables on one-forms"):
        n = 0
        for name, rows in wz.omega_tables().items():
            ref = OMEGA_TABLES[name]
            assert len(rows) == 6
            by_row = {wz.parse_form(k): v for k, v in ref.items()}
            for row, images in rows:
                for got, text in zip(images, by_row[row]):
                    assert got == wz.parse_form(text), (name, row.text(), text)
                    n += 1
        assert n == 54


def test_07_decompositions(criterion):
    with criterion(7, "decompositions and the 6_e chain"):
        for name, parts in DECOMPOSITIONS.items():
            report = reps.decompose_block(name, parts)
            assert report.passed, (name, report.failures())
        mod, rows = reps.omega_block("omega-3i2")
        chain = reps.verify_chain(mod, [(lbl, reps.block_coordinates(rows, fs)) for lbl, fs in CHAIN_6E])
        assert [c[0] for c in chain] == ["2", "3_e", "4_e", "6_e"]
        assert all(c[1] for c in chain), chain


def test_08_calculus(criterion):
    with criterion(8, "d^2 = 0, Leibniz, d(x^3) = d(y^3) = 0, confluence"):
        for b in wz.basis():
            assert wz.wz_d(wz.wz_d(b)).is_zero()
        leibniz = next(c for c in checks.REGISTRY if c.name == "wz.leibniz").run()
        assert leibniz.passed, leibniz.detail
        x, y = wz.parse_form("x"), wz.parse_form("y")
        assert wz.wz_d(x * x * x).is_zero() and wz.wz_d(y * y * y).is_zero()
        words = all_words("xyXY", 4)
        assert check_confluence(wz.left_system(), words) == []
        assert check_confluence(wz.right_system(), words) == []


def test_09_stars(criterion):
    with criterion(9, "stars: duality, compatibility, forms, d"):
        res = star.verify_star_duality()
        assert res.passed and res.checked == 729
        res = star.verify_action_star("M")
        assert res.passed and res.checked == 27
        sol = star.solve_star_on_forms()
        assert sol.solution_dim == 1
        assert sol.dx_star == wz.DX and sol.dy_star == wz.DY
        res = star.verify_d_star()["d(w*) = (-1)^p (dw)*"]
        assert res.passed and res.checked == 36


def test_10_scalar_product(criterion):
    with criterion(10, "invariant scalar product"):
        sol = star.solve_invariant_gram()
        assert sol.solution_dim == 1
        for i, value in enumerate(sol.unit_row):
            assert value.is_zero() == (i != 8)
        xy = PlaneElt.monomial(1, 1)
        assert sol.gram.inner(xy, xy) == ONE
        assert star.verify_gram_invariance().passed
        alt = star.check_alternative_invariance_forces_zero()
        assert alt.solution_dim == 0 and alt.passed


def test_11_hermitian_forms(criterion):
    with criterion(11, "hermitian one-forms"):
        rep = star.hermitian_oneforms()
        for fam in rep.families:
            assert all(fam.hermitian), fam.name


def test_12_tensor_complex(criterion):
    with criterion(12, "tensor complex: d^2, Leibniz, triplets, grade-2 blocks"):
        for name in ("derham.d_squared", "derham.leibniz", "derham.oneform_round_trip", "derham.grade_two_blocks"):
            out = next(c for c in checks.REGISTRY if c.name == name).run()
            assert out.passed, (name, out.detail)
        assert derham.xi_slots(1, 4) == 54


def test_13_end_to_end(criterion, tmp_path):
    with criterion(13, "cli verify all and a byte-stable report"):
        start = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "qm3", "verify", "all"], capture_output=True, text=True)
        assert proc.returncode == 0, proc.stdout + proc.stderr
        assert time.perf_counter() - start < 120.0
        paths = [tmp_path / "a.md", tmp_path / "b.md"]
        for p in paths:
            subprocess.run([sys.executable, "-m", "qm3", "report", "--out", str(p)], check=True)
        first, second = (p.read_bytes() for p in paths)
        assert first == second
        text = first.decode()
        for name in TABLES:
            assert render_table(name) in text, name
        assert text == build_report()
