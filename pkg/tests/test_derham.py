import pytest
from hypothesis import given, settings, strategies as st

from qm3 import wz
from qm3.derham import (
    ExtForm,
    GradeError,
    Poly,
    XiElt,
    XiOneForm,
    mfield_from_plane,
    pack_oneform,
    unpack_oneform,
    xi_d,
    xi_grade_decompose,
    xi_mul,
    xi_slots,
)
from qm3.qplane import PlaneElt
from qm3.scalars import ONE, CycNum

N = 4


def dxi(mu):
    return XiElt.from_ext(ExtForm.dx(N, mu))


def coord(mu):
    return XiElt.scalar_field(Poly.coord(N, mu))


one = XiElt.one(N)
x = XiElt.from_wz(wz.parse_form("x"))
y = XiElt.from_wz(wz.parse_form("y"))
DX = XiElt.from_wz(wz.DX)
DY = XiElt.from_wz(wz.DY)

small = st.integers(-2, 2)
scalars = st.builds(CycNum, small, small).filter(lambda c: not c.is_zero())
keys = st.tuples(
    st.sets(st.integers(0, N - 1), max_size=2).map(lambda s: tuple(sorted(s))),
    st.tuples(*[st.integers(0, 2)] * N),
    st.integers(0, 35),
)
elements = st.dictionaries(keys, scalars, max_size=4).map(lambda d: XiElt(N, d))


def test_exterior_anticommutes():
    assert dxi(0) * dxi(1) == -(dxi(1) * dxi(0))
    assert (dxi(2) * dxi(2)).is_zero()


def test_graded_sign():
    assert dxi(0) * DX == -(DX * dxi(0))
    assert dxi(0) * x == x * dxi(0)


def test_degree_zero_embedding():
    assert x * y == XiElt.from_wz(wz.parse_form("x y"))
    assert one * x == x


def test_d_examples():
    assert xi_d(x) == DX
    p = Poly.coord(N, 0) * Poly.coord(N, 0) * Poly.coord(N, 2)
    expected = XiElt.pure(ExtForm.from_dict(N, {(0,): p.partial(0), (2,): p.partial(2)}), wz.ONE_FORM)
    assert xi_d(XiElt.scalar_field(p)) == expected
    assert xi_d(coord(1)) == dxi(1)
    assert xi_d(one).is_zero()


def test_d_sign_on_mixed_term():
    # d(dx^0 (x) x) = -dx^0 (x) dx
    assert xi_d(dxi(0) * x) == -(dxi(0) * DX)


def test_poly_calculus():
    t0, t1 = Poly.coord(N, 0), Poly.coord(N, 1)
    p = t0 * t0 * t1
    assert p.partial(0) == (t0 * t1).scale(2)
    assert p.partial(3).is_zero()
    assert (p - p).is_zero()


@settings(max_examples=60, deadline=None)
@given(elements)
def test_d_squared_zero(u):
    assert xi_d(xi_d(u)).is_zero()


@settings(max_examples=60, deadline=None)
@given(elements, elements)
def test_graded_leibniz(u, v):
    for g, part in xi_grade_decompose(u).items():
        piece = sum(part.values(), XiElt(N))
        lhs = xi_d(xi_mul(piece, v))
        rhs = xi_mul(xi_d(piece), v) + xi_mul(piece, xi_d(v)).scale((-1) ** g)
        assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(elements, elements, elements)
def test_associative(u, v, w):
    assert xi_mul(xi_mul(u, v), w) == xi_mul(u, xi_mul(v, w))


@settings(max_examples=40, deadline=None)
@given(elements, elements)
def test_grade_additive(u, v):
    du, dv = xi_grade_decompose(u), xi_grade_decompose(v)
    for gu, bu in du.items():
        for gv, bv in dv.items():
            p = xi_mul(sum(bu.values(), XiElt(N)), sum(bv.values(), XiElt(N)))
            assert p.is_zero() or p.grade() == gu + gv


def test_xi1_slot_count():
    assert xi_slots(1, N) == 4 * 9 + 2 * 9 == 54
    assert xi_slots(0, N) == 9


def test_pack_examples():
    zero = XiOneForm.zero(N)
    assert pack_oneform(zero).is_zero()
    t = XiOneForm(zero.a_mu, mfield_from_plane(PlaneElt.scalar(1), N), zero.phi_y)
    assert pack_oneform(t) == DX
    z = PlaneElt.monomial(1, 2)
    t2 = XiOneForm(zero.a_mu[:1] + (mfield_from_plane(z, N),) + zero.a_mu[2:], zero.phi_x, zero.phi_y)
    assert pack_oneform(t2) == dxi(1) * XiElt.from_wz(wz.WZForm.coerce(z))


one_forms = st.dictionaries(
    st.one_of(
        st.tuples(st.integers(0, N - 1).map(lambda m: (m,)), st.tuples(*[st.integers(0, 2)] * N), st.integers(0, 8)),
        st.tuples(st.just(()), st.tuples(*[st.integers(0, 2)] * N), st.integers(9, 26)),
    ),
    scalars,
    max_size=6,
).map(lambda d: XiElt(N, d))


@settings(max_examples=60, deadline=None)
@given(one_forms)
def test_pack_round_trip(u):
    t = unpack_oneform(u)
    assert pack_oneform(t) == u
    assert unpack_oneform(pack_oneform(t)) == t


def test_unpack_rejects_other_grades():
    with pytest.raises(GradeError):
        unpack_oneform(x)
    with pytest.raises(GradeError):
        unpack_oneform(DX + dxi(0) * DX)


def test_grade_two_blocks():
    assert list(xi_grade_decompose(XiElt.from_wz(wz.DXDY))[2]) == [(0, 2)]
    assert list(xi_grade_decompose(dxi(0) * dxi(1))[2]) == [(2, 0)]
    assert list(xi_grade_decompose(dxi(0) * DX)[2]) == [(1, 1)]
    u = XiElt.from_wz(wz.DXDY) + dxi(0) * dxi(1) + dxi(2) * DY + x
    parts = xi_grade_decompose(u)
    assert sorted(parts) == [0, 2]
    assert sorted(parts[2]) == [(0, 2), (1, 1), (2, 0)]


def test_text_and_json():
    u = dxi(0) * DX + x
    assert "(1,1)" in u.text() and "(0,0)" in u.text()
    data = unpack_oneform(DX.scale(ONE) + dxi(3) * y).to_json()
    assert data["phi_x"] == {"1": {"(0, 0, 0, 0)": "1"}}
    assert list(data["a"][3]) == ["y"]
