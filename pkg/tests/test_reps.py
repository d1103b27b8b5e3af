import itertools

import pytest

from qm3 import hopf, linalg, wz
from qm3.qplane import MONOMIALS, PlaneElt, basis, plane_mul
from qm3.reference import ACTION_TABLE, CHAIN_6E, DECOMPOSITIONS, PLANE_BLOCKS
from qm3.reps import (
    HModule,
    ModuleRelationError,
    NonInvariantError,
    RepLabel,
    UnknownModuleError,
    act,
    action_table,
    blocks,
    block_coordinates,
    casimir,
    classify,
    coact_left,
    coact_right,
    decompose_block,
    direct_sum,
    find_decomposition,
    find_isomorphism,
    fingerprint,
    form_module,
    is_indecomposable,
    is_isomorphic,
    left_ideal,
    omega_block,
    plane_module,
    radical_basis,
    references,
    regular_rep_H,
    render_decomposition,
    restrict,
    tensor_module,
    trivial_module,
    verify_chain,
    verify_decomposition,
    weight_projector,
)
from qm3.scalars import ONE, Q, Q2, ZERO, CycNum

F = hopf.build_F()
H = hopf.build_H()
Xp, Xm, K = hopf.H_gens()
x = PlaneElt.monomial(1, 0)
y = PlaneElt.monomial(0, 1)
ONE_P = PlaneElt.monomial(0, 0)


def P(text):
    return wz.parse_form(text).d0


def fidx(word):
    return F.index_of_word(word)


def test_coact_examples():
    assert coact_right(x) == {(3, fidx("a")): ONE, (1, fidx("c")): ONE}
    assert coact_right(ONE_P) == {(0, F.unit): ONE}
    assert coact_left(x) == {(fidx("a"), 3): ONE, (fidx("b"), 1): ONE}


def test_coaction_preserves_relation():
    # delta_R(xy - q yx) = 0
    assert coact_right(x * y - (y * x).scale(Q)) == {}


def _tensor_product(s, t):
    from qm3.reps import _tensor_mul_MF

    return _tensor_mul_MF(s, t)


def test_coaction_multiplicative_and_counital():
    for u, v in itertools.product(basis(), repeat=2):
        assert coact_right(plane_mul(u, v)) == _tensor_product(coact_right(u), coact_right(v))
    for z in basis():
        back = [ZERO] * 9
        for (m, f), c in coact_right(z).items():
            back[m] = back[m] + c * F.counit[f]
        assert PlaneElt(back) == z
        back = [ZERO] * 9
        for (f, m), c in coact_left(z).items():
            back[m] = back[m] + c * F.counit[f]
        assert PlaneElt(back) == z


def test_coaction_coassociative():
    for z in basis():
        left: dict = {}
        for (m, f), c in coact_right(z).items():
            for (m2, f2), d in coact_right(PlaneElt.monomial(*MONOMIALS[m])).items():
                key = (m2, f2, f)
                left[key] = left.get(key, ZERO) + c * d
        right: dict = {}
        for (m, f), c in coact_right(z).items():
            for (f1, f2), d in F.coproduct[f].items():
                key = (m, f1, f2)
                right[key] = right.get(key, ZERO) + c * d
        clean = lambda t: {k: v for k, v in t.items() if not v.is_zero()}
        assert clean(left) == clean(right)


def test_act_examples():
    assert act(Xm, x) == y
    assert act(Xp, P("x^2 y")) == ONE_P.scale(Q2)
    assert act(K, P("x^2 y^2")) == P("x^2 y^2")


def test_action_table_matches_reference():
    table = action_table()
    assert list(table) == list(ACTION_TABLE)
    for row, images in table.items():
        assert list(images) == [P(e) for e in ACTION_TABLE[row]], row


def test_action_table_spot_entries():
    table = action_table()
    assert table["y^2"][1] == P("-q^2 x y")
    assert table["1"][1] == PlaneElt()
    assert table["x y^2"][2] == ONE_P.scale(Q2)


def test_module_algebra_law():
    for g in (K, Xp, Xm):
        delta = g.coproduct()
        for u, v in itertools.product(basis(), repeat=2):
            expected = PlaneElt()
            for (i, j), c in delta.items():
                expected = expected + plane_mul(act(H.element({i: ONE}), u), act(H.element({j: ONE}), v)).scale(c)
            assert act(g, plane_mul(u, v)) == expected


def test_unit_acts_by_counit():
    for h in H.basis():
        assert act(h, ONE_P) == ONE_P.scale(h.counit())


def test_action_is_left_module():
    hs = H.basis()
    for h1, h2 in itertools.product(hs[::4], hs[::3]):
        for z in basis():
            assert act(h1 * h2, z) == act(h1, act(h2, z))


def test_agrees_with_action_on_forms():
    for h in H.basis():
        for z in basis():
            assert wz.h_act_form(h, z).d0 == act(h, z)


def test_K_multiplicities_on_plane():
    from qm3.reps import plane_space

    assert fingerprint(plane_space().as_module()).k_multiplicities == (3, 3, 3)


def test_module_from_action_examples():
    m = plane_module(PLANE_BLOCKS["3_i"])
    assert m.dim == 3
    assert m.K == [[Q2, ZERO, ZERO], [ZERO, ONE, ZERO], [ZERO, ZERO, Q]]
    t = plane_module(["1"])
    assert t.K == [[ONE]] and t.Xp == [[ZERO]] and t.Xm == [[ZERO]]
    with pytest.raises(NonInvariantError) as err:
        plane_module(["x", "x^2"])
    assert err.value.generator == "X-" and err.value.index == 0


def test_hmodule_rejects_bad_relations():
    with pytest.raises(ModuleRelationError):
        HModule(1, [[Q]], [[ZERO]], [[ZERO]])
    with pytest.raises(ModuleRelationError):
        HModule(2, [[ONE, ZERO], [ZERO, ONE]], [[ZERO, ONE], [ZERO, ZERO]], [[ZERO, ZERO], [ZERO, ZERO]])


def test_fingerprint_examples():
    fp = fingerprint(plane_module(PLANE_BLOCKS["3_i"]))
    assert fp.dim == 3 and fp.k_multiplicities == (1, 1, 1)
    triv = fingerprint(trivial_module())
    assert triv.dim == 1 and triv.ranks == (0, 0, 0, 0, 0)


def test_tensor_examples():
    two = form_module(["dx", "dy"])
    assert classify(two) == RepLabel("2")
    three_o = plane_module(PLANE_BLOCKS["3_o"])
    t = tensor_module(three_o, two)
    assert t.dim == 6 and not is_indecomposable(t)
    i_plus_e = direct_sum(plane_module(PLANE_BLOCKS["3_i"]), form_module(DECOMPOSITIONS["omega-3o2"][1][1]))
    assert is_isomorphic(t, i_plus_e)
    assert classify(tensor_module(plane_module(PLANE_BLOCKS["3_i"]), two)).tag == "6_e"
    assert is_isomorphic(tensor_module(trivial_module(), two), two)
    assert fingerprint(tensor_module(two, trivial_module())) == fingerprint(two)


@pytest.mark.parametrize("name, block", [("omega-3o2", "3_o"), ("omega-3e2", "3_e"), ("omega-3i2", "3_i")])
def test_forms_block_is_tensor_product(name, block):
    two = form_module(["dx", "dy"])
    mod, _ = omega_block(name)
    assert find_isomorphism(tensor_module(plane_module(PLANE_BLOCKS[block]), two), mod) is not None


def test_regular_representation():
    reg = regular_rep_H()
    assert reg.dim == 27
    assert blocks().dims == (9, 18)
    e_st, e_rest = blocks().idempotents
    assert e_st * e_st == e_st and e_rest * e_rest == e_rest and (e_st * e_rest).coeffs == {}
    assert e_st + e_rest == 1
    from qm3.reps import restrict, regular_space

    tags = []
    for e in (e_st, e_rest):
        for w in (ONE, Q, Q2):
            span = left_ideal(e * weight_projector(w))
            if span:
                tags.append((classify(restrict(regular_space(), span)).tag, len(span)))
    assert sorted(tags) == [("3_i", 3)] * 3 + [("6_e", 6)] * 2 + [("6_o", 6)]


def test_casimir_central():
    C = casimir()
    for h in H.basis():
        assert C * h == h * C
    c_st, c_one = blocks().casimir_values
    assert c_st != c_one


def test_radical_is_nilpotent_ideal():
    J = radical_basis()
    assert len(J) == 27 - (9 + 4 + 1)
    vecs = [[j.coeffs.get(i, ZERO) for i in range(27)] for j in J]
    for j in J[:4]:
        for h in H.basis()[::5]:
            prod = h * j
            assert linalg.coordinates(vecs, [prod.coeffs.get(i, ZERO) for i in range(27)]) is not None


def test_references_distinct_and_complete():
    refs = references()
    tags = {r.tag for r in refs}
    assert tags == {"1", "2", "3_i", "3_e", "3_o", "4_e", "5_o", "6_e", "6_o"}
    by_fp = {}
    for r in refs:
        by_fp.setdefault(r.fingerprint, set()).add(r.tag)
    assert all(len(t) == 1 for t in by_fp.values())


def test_classify_plane_blocks():
    assert classify(plane_module(PLANE_BLOCKS["3_i"])) == RepLabel("3_i")
    assert classify(plane_module(PLANE_BLOCKS["3_e"])).tag == "3_e"
    assert classify(plane_module(PLANE_BLOCKS["3_o"])).tag == "3_o"
    assert classify(plane_module(["1"])) == RepLabel("1")


def test_lambda_is_basis_independent():
    for block in ("3_e", "3_o"):
        m = plane_module(PLANE_BLOCKS[block])
        T = [[ONE, Q, ZERO], [ZERO, CycNum(2), ONE], [Q2, ZERO, ONE]]
        Ti = linalg.inverse(T)
        conj = lambda a: linalg.matmul(Ti, linalg.matmul(a, T))
        moved = HModule(3, conj(m.K), conj(m.Xp), conj(m.Xm))
        assert classify(moved) == classify(m)


def test_lambda_distinguishes_references():
    labels = [classify(r.module) for r in references() if r.tag == "3_e"]
    assert len(set(labels)) == 3
    assert any(lbl.is_infinite for lbl in labels)
    assert not is_isomorphic(*[r.module for r in references() if r.tag == "3_e"][:2])


def test_classify_rejects_decomposable():
    with pytest.raises(UnknownModuleError):
        classify(direct_sum(trivial_module(), trivial_module()))


def test_replabel_invariant():
    with pytest.raises(ValueError):
        RepLabel("3_e")
    with pytest.raises(ValueError):
        RepLabel("2", (ONE, ONE))
    assert RepLabel("3_o", RepLabel.ratio(ONE, ZERO)).text() == "3_o(lambda=inf)"


@pytest.mark.parametrize("name", sorted(DECOMPOSITIONS))
def test_reference_decompositions(name):
    report = decompose_block(name, DECOMPOSITIONS[name])
    assert report.passed, report.failures()


def test_wrong_split_fails():
    (l1, a), (l2, b) = DECOMPOSITIONS["omega-3o2"]
    swapped = [(l1, (b[0],) + a[1:]), (l2, (a[0],) + b[1:])]
    report = decompose_block("omega-3o2", swapped)
    assert not report.passed
    assert any("not invariant" in f for f in report.failures())


def test_chain_in_6e():
    mod, rows = omega_block("omega-3i2")
    chain = [(label, block_coordinates(rows, forms)) for label, forms in CHAIN_6E]
    result = verify_chain(mod, chain)
    assert [r[0] for r in result] == ["2", "3_e", "4_e", "6_e"]
    assert all(ok for _, ok, _ in result), result


def test_find_decomposition():
    two = form_module(["dx", "dy"])
    found = find_decomposition(tensor_module(plane_module(PLANE_BLOCKS["3_o"]), two))
    assert sorted(lbl.tag for lbl, _ in found) == ["3_e", "3_i"]
    found = find_decomposition(tensor_module(plane_module(PLANE_BLOCKS["3_i"]), two))
    assert [lbl.tag for lbl, _ in found] == ["6_e"]


def test_render():
    report = decompose_block("omega-3e2", DECOMPOSITIONS["omega-3e2"])
    text = render_decomposition(report)
    assert "--X+-->" in text and "..X-..>" in text
    assert "[3_i: ok]" in text
