from __future__ import annotations

from fractions import Fraction

import pytest

from twisted_doubles.groups import (Bicharacter, GroupError, GroupHom, FiniteGroup, bicharacters,
                                    cyclic, dihedral, direct_product, isomorphism, trivial_group)


def _assert_group_axioms(g):
    t, n = g.table, g.order
    for i in range(n):
        assert t[0][i] == i and t[i][0] == i
        assert t[i][g.inverse[i]] == 0
        for j in range(n):
            for k in range(n):
                assert t[t[i][j]][k] == t[i][t[j][k]]


@pytest.mark.parametrize("g", [cyclic(1), cyclic(4), cyclic(6), dihedral(8),
                               direct_product(cyclic(2), cyclic(2))])
def test_constructed_groups_satisfy_axioms(g):
    _assert_group_axioms(g)


def test_cyclic_basics():
    assert cyclic(1).order == 1
    z4 = cyclic(4)
    assert all(z4.table[i][j] == (i + j) % 4 for i in range(4) for j in range(4))
    z6 = cyclic(6)
    assert [x for x in range(6) if z6.element_order(x) == 2] == [3]


def test_direct_products():
    k = direct_product(cyclic(2), cyclic(2))
    assert k.order == 4 and k.exponent == 2
    g = cyclic(5)
    assert direct_product(trivial_group(), g).table == g.table
    assert isomorphism(direct_product(cyclic(2), cyclic(3)), cyclic(6)) is not None
    assert isomorphism(k, cyclic(4)) is None


def test_dihedral_structure():
    d = dihedral(8)
    a, b = d.index_of("a"), d.index_of("b")
    assert d.mul(a, b) != d.mul(b, a)
    assert d.center() == frozenset({0, d.index_of("a2")})
    assert d.commutator_subgroup() == d.center()
    with pytest.raises(GroupError):
        dihedral(7)


def test_center_of_abelian_is_everything():
    k = direct_product(cyclic(2), cyclic(2))
    assert k.center() == frozenset(range(4))


def test_quotients():
    d = dihedral(8)
    q, proj = d.quotient_by_normal(d.center())
    assert isomorphism(q, direct_product(cyclic(2), cyclic(2))) is not None
    assert proj.kernel() == d.center()
    assert set(proj.image) == set(range(q.order))
    z6 = cyclic(6)
    q6, _ = z6.quotient_by_normal(z6.generated([2]))
    assert q6.order == 2
    triv, p = d.quotient_by_normal({0})
    assert isomorphism(triv, d) is not None
    with pytest.raises(GroupError):
        d.quotient_by_normal({0, d.index_of("b")})


def test_linear_characters():
    z4 = cyclic(4)
    chars = z4.linear_characters()
    assert len(chars) == 4
    assert any(c(1) == Fraction(1, 2) for c in chars)
    assert len(trivial_group().linear_characters()) == 1
    d = dihedral(8)
    dchars = d.linear_characters()
    assert len(dchars) == 4
    for c in dchars:
        assert all(c(d.rconj(g, x)) == c(g) for g in range(8) for x in range(8))


def test_automorphisms():
    assert len(cyclic(2).automorphisms()) == 1
    assert len(cyclic(4).automorphisms()) == 2
    d = dihedral(8)
    auts = d.automorphisms()
    assert len(auts) == 8
    assert len(d.inner_automorphisms()) == 4
    aset = set(auts)
    assert all(a.compose(b) in aset for a in auts for b in auts)
    z = d.center()
    for h in d.central_automorphisms():
        assert all(d.mul(h(g), d.inv(g)) in z for g in range(8))


def test_bicharacters():
    k = direct_product(cyclic(2), cyclic(2))
    bs = bicharacters(k, k)
    assert len(bs) == 16 and len(set(bs)) == 16
    assert all(b.is_bicharacter() for b in bs)
    assert len(bicharacters(trivial_group(), trivial_group())) == 1
    assert len(bicharacters(cyclic(6), cyclic(6))) == 6


def test_hom_validation():
    z4 = cyclic(4)
    with pytest.raises(GroupError):
        GroupHom(z4, z4, [0, 2, 1, 3])
    with pytest.raises(GroupError):
        FiniteGroup([[0, 1], [1, 1]])
    assert not Bicharacter(z4, z4, [[Fraction(1, 3)] * 4] * 4).is_bicharacter()
