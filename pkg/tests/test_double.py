from __future__ import annotations

from fractions import Fraction

import pytest

from twisted_doubles.algebra import verify_quasi_bialgebra, verify_quasi_hopf
from twisted_doubles.cocycle import Cocycle3, CocycleError, catalog, trivial_cocycle
from twisted_doubles.double import TwistedDouble, build_double
from twisted_doubles.groups import cyclic, dihedral

ABELIAN = ["c2c2-left", "c2c2-right", "z4-standard", "z6-inflated"]


def test_dimensions_and_unit(dbl):
    d = dbl("d8-quotient")
    assert d.dim == 64
    one = d.one()
    assert d.counit(one) == 1
    assert sorted(i for (i,) in one.terms) == [d.index(g, 0) for g in range(8)]


def test_trivial_cocycle_gives_drinfeld_double():
    g = dihedral(8)
    d = build_double(g, trivial_cocycle(g))
    for h in range(8):
        for x in range(8):
            for k in range(8):
                for y in range(8):
                    prod = d.mul(d.e(h, x), d.e(k, y))
                    if h == g.conj(x, k):
                        assert prod == d.e(h, g.mul(x, y))
                    else:
                        assert prod.is_zero()
    assert d.coassociator() == d.one(3)
    assert d.beta() == d.one()


def test_z4_products(dbl):
    d = dbl("z4-standard")
    g, w = d.group, d.cocycle
    ph, fld = w.phases, d.field
    eps = lambda x: sum((d.e(h, x) for h in range(4)), d.zero())
    lhs = d.mul(eps(1), eps(3))
    rhs = sum((d.e(h, 0).scale(fld.embed_phase(ph.theta(h, 1, 3))) for h in range(4)), d.zero())
    assert lhs == rhs
    assert d.mul(d.e(1, 1), d.e(1, 1)) == d.e(1, 2).scale(fld.embed_phase(ph.theta(1, 1, 1)))
    assert ph.theta(1, 1, 1) == 0
    assert d.mul(d.e(1, 1), d.e(2, 1)).is_zero()


def test_unit_and_counit_laws(dbl):
    d = dbl("d8-quotient")
    one = d.one()
    x = d.e(3, 5) + d.e(4, 1).scale(Fraction(2, 3))
    assert d.mul(one, x) == x == d.mul(x, one)
    for i in range(d.dim):
        cop = d.comultiply(d.basis(i))
        assert d.counit_at(cop, 0) == d.basis(i) == d.counit_at(cop, 1)
    g = d.group
    expected = sum((d.basis(d.index(g.inv(t), 0), d.index(t, 0)) for t in range(8)), d.zero(2))
    assert d.comultiply(d.e(0, 0)) == expected


def test_structure_elements(dbl):
    d = dbl("z4-standard")
    beta = d.beta()
    assert beta.coeff(d.index(1, 0)) == -d.field.one
    for name in ABELIAN + ["d8-quotient", "d8-eta"]:
        dd = dbl(name)
        phi, phi_inv = dd.coassociator(), dd.coassociator_inverse()
        assert dd.mul(phi, phi_inv) == dd.one(3)


def test_antipode(dbl):
    d = dbl("d8-quotient")
    assert d.antipode(d.one()) == d.one()
    targets = set()
    for i in range(d.dim):
        img = d.antipode(d.basis(i))
        assert len(img) == 1
        ((j,), c), = img.items()
        assert c.root_exponent() is not None
        targets.add(j)
    assert targets == set(range(d.dim))
    g = d.group
    plain = d.untwisted()
    for h in range(8):
        for x in range(8):
            xi = g.inv(x)
            assert plain.antipode(plain.e(h, x)) == plain.e(g.mul(g.mul(xi, g.inv(h)), x), xi)


@pytest.mark.parametrize("name", ABELIAN + ["d8-quotient", "d8-eta"])
def test_catalog_doubles_verify(dbl, name):
    d = dbl(name)
    assert verify_quasi_bialgebra(d).ok
    assert verify_quasi_hopf(d).ok


def test_trivial_z2_is_hopf():
    g = cyclic(2)
    d = build_double(g, trivial_cocycle(g))
    assert verify_quasi_bialgebra(d).ok and verify_quasi_hopf(d).ok
    assert d.coassociator() == d.one(3)


def test_comultiplication_multiplicative_z4(dbl):
    d = dbl("z4-standard")
    rep = verify_quasi_bialgebra(d)
    assert rep["comultiplication_multiplicative"].ok


def test_perturbed_cocycle_breaks_pentagon():
    g, w = catalog("z4-standard")
    vals = list(w.values)
    vals[(1 * 4 + 1) * 4 + 1] = Fraction(1, 8)
    bad = Cocycle3(g, vals)
    with pytest.raises(CocycleError):
        TwistedDouble(g, bad)
    d = TwistedDouble(g, bad, check=False)
    rep = verify_quasi_bialgebra(d)
    assert not rep["pentagon"].ok


def test_beta_replaced_by_unit_fails(dbl):
    d = dbl("z4-standard")
    bad = d.replace(beta={i: 0 for i in d.unit_support})
    rep = verify_quasi_hopf(bad)
    assert not rep["coassociator_beta_axiom"].ok
