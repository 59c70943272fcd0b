from __future__ import annotations

from fractions import Fraction

import pytest

from twisted_doubles.algebra import verify_quasi_bialgebra, verify_quasi_hopf
from twisted_doubles.cocycle import catalog, trivial_cocycle
from twisted_doubles.components import (PROPERTY_FLAGS, ComponentError, T_elements, apply_p,
                                        beta_two_cocycle, build_embedding_algebra,
                                        build_quotient_algebra, chi_to_std, decompose,
                                        enumerate_p, ev1_projection, is_hopf, kappa_xi,
                                        p_from_bicharacter, property_report, quadruple_from_maps,
                                        reconstruct, std_to_chi, trivial_p, trivial_quadruple,
                                        validate_p)
from twisted_doubles.double import TwistedDouble
from twisted_doubles.examples import (c2c2_cases, c6_cases, dihedral_cases, dihedral_map,
                                      non_rigid_z4_case)
from twisted_doubles.groups import cyclic, dihedral
from twisted_doubles.morphism import DoubleMap, check_quasi_hopf_morphism
from twisted_doubles.scalars import field

HALF = Fraction(1, 2)


def _z2_p(sigma):
    g = cyclic(2)
    return p_from_bicharacter(g, g, (0, 1), (0, 1), [[0, 0], [0, sigma]])


# -- p components --------------------------------------------------------------------------

def test_validate_p_examples():
    g = cyclic(2)
    assert validate_p(trivial_p(g, g)).ok
    assert validate_p(_z2_p(HALF)).ok
    rep = validate_p(_z2_p(0))
    assert not rep["orthogonal"].ok


def test_validate_p_rejects_bad_shapes():
    d8 = dihedral(8)
    with pytest.raises(ComponentError):
        validate_p(p_from_bicharacter(d8, d8, range(8), range(8), [[0] * 8] * 8))
    z4 = cyclic(4)
    with pytest.raises(ComponentError):
        validate_p(p_from_bicharacter(z4, z4, (0, 2), (0, 1, 2, 3), [[0] * 4] * 2))


@pytest.mark.parametrize("G,H", [(cyclic(4), cyclic(4)), (cyclic(6), cyclic(6)),
                                 (dihedral(8), dihedral(8)), (cyclic(4), cyclic(2))])
def test_enumerated_p_are_valid(G, H):
    ps = enumerate_p(G, H)
    assert trivial_p(G, H) in ps
    for p in ps:
        fld = field(24)
        assert validate_p(p, fld).ok
        n = len(p.A)
        for a in p.A:
            for b in p.B:
                assert p.coeff(a, H.inv(b), fld) == p.coeff(a, b, fld).conjugate()
                s = p.coeff(a, b, fld) * n
                assert s * s.conjugate() == fld.one


def test_chi_std_conversions():
    p = _z2_p(HALF)
    fld = field(4)
    assert chi_to_std(p, 0, fld) == {0: fld.one, 1: fld.one}
    for a in p.A:
        back: dict = {}
        for b, c in std_to_chi(p, a, fld).items():
            for a2, c2 in chi_to_std(p, b, fld).items():
                back[a2] = back.get(a2, fld.zero) + c * c2
        assert {k: v for k, v in back.items() if v} == {a: fld.one}
    for b in p.B:
        assert apply_p(p, chi_to_std(p, b, fld), fld) == {b: fld.one}
    with pytest.raises(ComponentError):
        chi_to_std(trivial_p(cyclic(2), cyclic(2)), 1, fld)


# -- decomposition and reconstruction ----------------------------------------------------

@pytest.mark.parametrize("name", ["c2c2-left", "z4-standard", "d8-quotient"])
def test_identity_decomposes_trivially(dbl, name):
    d = dbl(name)
    q = decompose(DoubleMap.identity(d))
    assert q.p.is_trivial()
    assert q.u_star() == tuple(range(d.group.order)) == q.v_map()
    assert q.r_is_trivial()
    assert reconstruct(trivial_quadruple(d.group, d.field), d, d) == DoubleMap.identity(d)


def test_non_rigid_decomposition():
    c = non_rigid_z4_case()
    q = decompose(c.morphism())
    assert q.p.is_trivial()
    assert q.u_star() == (0, 1, 2, 3)
    assert q.v_map() == (0, 3, 2, 1)
    fld = q.field
    for x in range(4):
        for h in range(4):
            want = fld.one if x == 0 or h % 2 == 0 else -fld.one
            assert q.r_coeff(x, h) == want


def test_c2c2_decomposition_recovers_p():
    c = c2c2_cases()[0]
    q = decompose(c.morphism())
    g = q.G
    a, b = g.index_of("a"), g.index_of("b")
    assert q.p.A == (0, a) and q.p.B == (0, b)
    assert q.p.phase(a, b) == HALF


def test_dihedral_reconstruction_is_the_permutation():
    c = dihedral_cases()[0]
    assert c.morphism() == dihedral_map(c.source, c.target)


def test_decompose_rejects_non_pure_tensor(dbl):
    d = dbl("z4-standard")
    cols = [{i: d.field.one} for i in range(16)]
    cols[d.index(0, 1)] = {d.index(0, 1): d.field.one, d.index(1, 2): d.field.one}
    with pytest.raises(ComponentError):
        decompose(DoubleMap(d, d, cols), check=False)


def test_quadruple_biunitality():
    for c in c2c2_cases()[:3] + c6_cases()[:3] + dihedral_cases():
        assert c.quadruple.validate().ok


# -- property flags -----------------------------------------------------------------------

def test_property_flags_dihedral():
    c = dihedral_cases()[0]
    rep = property_report(c.quadruple, c.w, c.e)
    assert [ch.name for ch in rep.checks] == list(PROPERTY_FLAGS)
    assert rep.ok


def test_property_flags_non_rigid():
    c = non_rigid_z4_case()
    rep = property_report(c.quadruple, c.w, c.e)
    assert [ch.name for ch in rep.failures()] == ["r_alg"]


def test_property_flags_trivial():
    g = dihedral(8)
    w = trivial_cocycle(g)
    q = trivial_quadruple(g, field(8))
    assert all(ch.ok for ch in property_report(q, w, w).checks)


def test_flags_degrade_without_map_form():
    c = c6_cases()[0]
    q = c.quadruple
    fld = q.field
    v2 = dict(q.v)
    v2[(1, 1)] = v2.get((1, 1), fld.zero) + fld.rational(HALF)
    v2[(1, 5)] = v2.get((1, 5), fld.zero) - fld.rational(HALF)
    q2 = type(q)(q.p, q.u, q.r, v2, fld)
    rep = property_report(q2, c.w, c.e)
    assert rep["r_alg"].ok is None and rep["r_invertible"].ok is None


def test_derived_consequences_on_examples():
    cases = [c for c in c2c2_cases() + c6_cases() if c.morphism().is_bijective()]
    for c in cases[::5] + dihedral_cases():
        f = c.morphism()
        q = decompose(f)
        G, p = q.G, q.p
        assert G.is_normal(p.A)
        assert set(p.A) <= G.center()
        span = {G.mul(a, u) for a in p.A for u in q.u_star()}
        assert span == set(range(G.order))
        assert check_quasi_hopf_morphism(ev1_projection(f), stop_early=True).ok


def test_kappa_xi():
    c = dihedral_cases()[0]
    for x in range(8):
        kappa, xi, ok = kappa_xi(c.quadruple, c.w, c.e, x)
        assert ok
        if x == 0:
            assert not any(kappa.values()) and not any(xi.values())
        if property_report(c.quadruple, c.w, c.e)["uv_rel"].ok:
            assert not any(xi.values())


# -- auxiliary algebras ---------------------------------------------------------------------

def test_trivial_p_aux_algebras():
    g, w = catalog("z4-standard")
    p = trivial_p(g, g)
    quo = build_quotient_algebra(p, w)
    assert quo.algebra.dim == 4
    assert verify_quasi_bialgebra(quo.algebra).ok and verify_quasi_hopf(quo.algebra).ok
    emb = build_embedding_algebra(p, w)
    assert emb.algebra.dim == 4 and is_hopf(emb.algebra)


def test_c6_aux_algebras():
    c = c6_cases()[0]
    p, w = c.quadruple.p, c.w
    emb = build_embedding_algebra(p, w)
    assert is_hopf(emb.algebra)
    assert verify_quasi_bialgebra(emb.algebra).ok and verify_quasi_hopf(emb.algebra).ok
    assert check_quasi_hopf_morphism(emb.morphism).ok
    quo = build_quotient_algebra(p, c.e)
    assert verify_quasi_bialgebra(quo.algebra).ok and verify_quasi_hopf(quo.algebra).ok
    inc = quo.morphism
    assert check_quasi_hopf_morphism(inc).ok and inc.rank() == quo.algebra.dim


def test_embedding_requires_normal_A():
    g, w = catalog("d8-quotient")
    p = p_from_bicharacter(g, g, (0, 4), (0, 2), [[0, 0], [0, HALF]])
    with pytest.raises(ComponentError):
        build_embedding_algebra(p, w)


def test_beta_two_cocycle_and_T():
    g = cyclic(6)
    beta, rep = beta_two_cocycle(trivial_p(g, g), trivial_cocycle(g))
    assert rep.ok and all(v == {0: field(6).one} for v in beta.values())
    c = c6_cases()[0]
    _, rep = beta_two_cocycle(c.quadruple.p, c.w)
    assert rep.ok
    T, Ti, trep = T_elements(c.quadruple.p, c.w)
    assert trep.ok
