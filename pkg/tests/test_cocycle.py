from __future__ import annotations

import random
from fractions import Fraction

import pytest

from twisted_doubles.cocycle import (Cochain2, Cocycle3, CocycleError, act_by_automorphism, catalog,
                                     catalog_names, certificate_holds, coboundary, cohomologous,
                                     compute_phases, d8_reflection_automorphism, inflate,
                                     is_inflation_invariant, trivial_cocycle, validate_cocycle,
                                     verify_phase_identities)
from twisted_doubles.groups import GroupHom, cyclic, dihedral
from twisted_doubles.smith import smith_normal_form

HALF = Fraction(1, 2)


def _random_cochain(g, rng, den=4):
    n = g.order
    vals = [[Fraction(rng.randrange(den), den) if a and b else 0 for b in range(n)]
            for a in range(n)]
    return Cochain2(g, vals)


@pytest.mark.parametrize("name", catalog_names())
def test_catalog_entries_are_cocycles(name):
    g, w = catalog(name)
    assert validate_cocycle(w).ok
    assert verify_phase_identities(w).ok


def test_catalog_values():
    g, w = catalog("z4-standard")
    assert w(1, 3, 3) == HALF
    g2, w2 = catalog("z2-nontrivial")
    assert w2(1, 1, 1) == HALF
    assert sum(1 for v in w2.values if v) == 1
    assert catalog("d8-omega")[1] == catalog("d8-quotient")[1]
    with pytest.raises(KeyError):
        catalog("nope")


def test_d8_cocycle_values_and_inflation():
    g, w = catalog("d8-quotient")
    a, b = g.index_of("a"), g.index_of("b")
    assert w(a, a, a) == HALF and w(b, b, b) == HALF and w(a, b, a) == HALF
    assert w(g.index_of("ab"), a, a) == 0
    assert is_inflation_invariant(w, g.center())
    assert compute_phases(w).theta(a, a, b) == HALF


def test_perturbed_cocycle_fails_with_witness():
    g, w = catalog("d8-quotient")
    vals = list(w.values)
    vals[(1 * 8 + 1) * 8 + 4] += HALF
    rep = validate_cocycle(Cocycle3(g, vals))
    assert not rep.ok and rep["cocycle_law"].witness is not None
    assert validate_cocycle(trivial_cocycle(g)).ok


def test_phases_normalized_and_z4_symmetry():
    for name in catalog_names():
        g, w = catalog(name)
        ph = w.phases
        n = g.order
        assert all(ph.theta(x, 0, y) == 0 and ph.theta(x, y, 0) == 0 for x in range(n)
                   for y in range(n))
    g, w = catalog("z4-standard")
    ph = w.phases
    for x in range(4):
        for y in range(4):
            for z in range(4):
                assert ph.theta(x, y, z) == w(x, y, z) == ph.gamma(x, y, z)


def test_altered_theta_breaks_associativity():
    g, w = catalog("z4-standard")
    bad = w.phases.replace_theta(1, 1, 1, Fraction(1, 4))
    rep = verify_phase_identities(w, bad)
    assert not rep["theta_associativity"].ok
    assert verify_phase_identities(trivial_cocycle(g)).ok


def test_coboundaries():
    z2, z4 = cyclic(2), cyclic(4)
    assert coboundary(Cochain2(z4, [0] * 16)).is_trivial()
    for t in range(4):
        beta = Cochain2(z2, [[0, 0], [0, Fraction(t, 4)]])
        assert coboundary(beta).is_trivial()
    rng = random.Random(7)
    for _ in range(5):
        assert validate_cocycle(coboundary(_random_cochain(z4, rng))).ok
    d8 = dihedral(8)
    assert validate_cocycle(coboundary(_random_cochain(d8, rng))).ok


def test_cohomologous_decisions():
    g, w = catalog("z4-standard")
    dec = cohomologous(w, w)
    assert dec.cohomologous and all(v == 0 for v in dec.witness.values)
    rng = random.Random(3)
    beta = _random_cochain(g, rng, 8)
    w2 = w * coboundary(beta)
    dec = cohomologous(w, w2)
    assert dec.cohomologous and w * coboundary(dec.witness) == w2
    # symmetric, with the inverted witness
    back = cohomologous(w2, w)
    assert back.cohomologous and w2 * coboundary(-dec.witness) == w
    # transitive, with the summed witness
    w3 = w2 * coboundary(_random_cochain(g, rng, 8))
    d23 = cohomologous(w2, w3)
    assert w * coboundary(dec.witness + d23.witness) == w3
    with pytest.raises(CocycleError):
        cohomologous(w, catalog("z6-inflated")[1])


def test_d8_not_cohomologous_with_certificate():
    _, w = catalog("d8-quotient")
    _, e = catalog("d8-eta")
    dec = cohomologous(w, e)
    assert not dec.cohomologous
    assert certificate_holds(w, e, dec.certificate)
    assert dec.to_json()["certificate_row"] == dec.certificate_row


def test_inner_action_is_cohomologous():
    g, w = catalog("d8-quotient")
    inner = [h for h in g.inner_automorphisms() if h.image != tuple(range(8))]
    for h in inner:
        assert cohomologous(w, act_by_automorphism(w, h)).cohomologous


def test_inflation():
    z6, w6 = catalog("z6-inflated")
    assert validate_cocycle(w6).ok
    assert not w6.is_trivial()
    assert is_inflation_invariant(trivial_cocycle(z6), {0, 2, 4})
    z2, w2 = catalog("z2-nontrivial")
    proj = GroupHom(z6, z2, [x % 2 for x in range(6)])
    inf = inflate(w2, proj)
    assert inf == w6
    ker = proj.kernel()
    for a in range(6):
        for b in range(6):
            for c in range(6):
                for k in ker:
                    assert inf(z6.mul(k, a), b, c) == inf(a, b, c)
    with pytest.raises(CocycleError):
        inflate(w2, GroupHom(z6, z2, [0] * 6))


def test_automorphism_action():
    g, w = catalog("d8-quotient")
    ident = GroupHom(g, g, range(8))
    assert act_by_automorphism(w, ident) == w
    v = d8_reflection_automorphism(g)
    e = act_by_automorphism(w, v)
    assert e != w and e == catalog("d8-eta")[1]
    assert act_by_automorphism(e, v.inverse()) == w
    with pytest.raises(CocycleError):
        act_by_automorphism(w, GroupHom(g, g, [0] * 8, validate=False))


def test_smith_normal_form_certificate():
    mat = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    s, u, v = smith_normal_form(mat)

    def mm(a, b):
        return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
                for i in range(len(a))]
    assert mm(mm(u, mat), v) == s
    diag = [s[i][i] for i in range(3)]
    assert [abs(x) for x in diag] == [2, 6, 12]
    assert all(s[i][j] == 0 for i in range(3) for j in range(3) if i != j)
