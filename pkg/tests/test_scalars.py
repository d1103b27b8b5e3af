from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qm3.scalars import ONE, Q, Q2, ZERO, CycNum, cyc_embed, cyc_inv, parse_cyc

rationals = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 12))
cycnums = st.builds(CycNum, rationals, rationals)


def test_cyc_add_examples():
    assert CycNum(1, 0) + CycNum(0, 1) == CycNum(1, 1)
    assert Q + Q2 == CycNum(-1)
    assert CycNum(3, -2) + (-CycNum(3, -2)) == ZERO


def test_cyc_mul_examples():
    assert Q * Q * Q == ONE
    assert Q * Q2 == ONE
    # (1 + w)^2 = 1 + 2w + w^2 = w
    assert CycNum(1, 1) * CycNum(1, 1) == Q


def test_cyc_conj_examples():
    assert Q.conj() == Q2
    assert CycNum(Fraction(5, 7)).conj() == CycNum(Fraction(5, 7))


def test_cyc_inv_examples():
    assert cyc_inv(Q) == Q2
    assert cyc_inv(CycNum(2)) == CycNum(Fraction(1, 2))
    assert cyc_inv(CycNum(1, 1)) == -Q
    with pytest.raises(ZeroDivisionError):
        cyc_inv(ZERO)


def test_cyc_embed():
    assert cyc_embed(ONE) == (1.0, 0.0)
    re, im = cyc_embed(Q)
    assert re == pytest.approx(-0.5) and im == pytest.approx(0.8660254037844386)
    re, im = cyc_embed(Q2)
    assert re == pytest.approx(-0.5) and im == pytest.approx(-0.8660254037844386)


def test_root_of_unity_identities():
    assert ONE + Q + Q * Q == ZERO
    assert Q ** 3 == ONE
    assert Q ** -1 == Q2


@pytest.mark.parametrize(
    "text, expected",
    [
        ("-1/2 + 1*w", CycNum(Fraction(-1, 2), 1)),
        ("w", Q),
        ("-w", -Q),
        ("3", CycNum(3)),
        ("2 - 1/3*w", CycNum(2, Fraction(-1, 3))),
        ("-1 - w", Q2),
        ("1/2*w", CycNum(0, Fraction(1, 2))),
    ],
)
def test_parse(text, expected):
    assert parse_cyc(text) == expected


@pytest.mark.parametrize("bad", ["", "w w", "1 +", "x", "1 2"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_cyc(bad)


@given(cycnums)
def test_literal_round_trip(a):
    assert parse_cyc(a.literal()) == a


@given(cycnums, cycnums, cycnums)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if not a.is_zero():
        assert a * a.inv() == ONE


@given(cycnums, cycnums)
def test_conj_is_automorphism(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a + b).conj() == a.conj() + b.conj()
    assert a.conj().conj() == a


@given(cycnums)
def test_norm_is_rational(a):
    assert (a * a.conj()).c1 == 0
    assert a * a.conj() == CycNum(a.norm())


def test_hash_consistent_with_int():
    assert hash(CycNum(4)) == hash(4)
    assert CycNum(4) == 4
    assert {CycNum(1, 2), CycNum(Fraction(2, 2), 2)} == {CycNum(1, 2)}
