from __future__ import annotations

import random
from fractions import Fraction

import pytest

from twisted_doubles.scalars import field, phase_inv, phase_mul


def test_phase_arithmetic():
    assert phase_mul(Fraction(1, 2), Fraction(1, 2)) == 0
    assert phase_mul(Fraction(1, 8), Fraction(7, 8)) == 0
    assert phase_mul(Fraction(1, 3), Fraction(1, 2)) == Fraction(5, 6)
    assert phase_inv(Fraction(1, 8)) == Fraction(7, 8)


def test_roots_and_reduction():
    f4 = field(4)
    assert f4.embed_phase(Fraction(1, 2)) == -f4.one
    z = f4.root(1)
    assert z * z == -f4.one
    f3 = field(3)
    assert (f3.one + f3.root(1) + f3.root(2)).is_zero()


def test_conjugation():
    f8 = field(8)
    assert f8.root(1).conjugate() == f8.root(7)
    q = f8.rational(Fraction(3, 7))
    assert q.conjugate() == q


def _random(fld, rng):
    return fld.from_coeffs([Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                            for _ in range(fld.degree)])


@pytest.mark.parametrize("m", [3, 8, 12, 24])
def test_ring_axioms(m):
    fld = field(m)
    rng = random.Random(m)
    for _ in range(30):
        a, b, c = (_random(fld, rng) for _ in range(3))
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a and a * b == b * a
        assert (a - a).is_zero()
        if not a.is_zero():
            assert a * a.inverse() == fld.one


def test_embed_is_multiplicative():
    fld = field(24)
    for i in range(24):
        for j in range(24):
            a, b = Fraction(i, 24), Fraction(j, 24)
            assert fld.embed_phase(a + b) == fld.embed_phase(a) * fld.embed_phase(b)


def test_division_by_zero():
    fld = field(4)
    with pytest.raises(ZeroDivisionError):
        fld.one / fld.zero


def test_promotion_between_moduli():
    a = field(4).root(1)
    b = field(8).root(2)
    assert a.promote(8) == b
    assert (a + b) == b + b


def test_monomial_form():
    fld = field(8)
    c = fld.root(3) * Fraction(-2, 3)
    q, k = c.monomial()
    assert fld.root(k) * q == c
    assert (fld.one + fld.root(1)).monomial() is None
