from __future__ import annotations

import pytest

from twisted_doubles.classify import (ClassifyError, RIGID_CONDITIONS, bch_maps, bicharacter_to_aut,
                                      generate_subgroup, lambda_elements, perturbations,
                                      quot_isom_test, rigid_conditions, spautc_map, spautc_omega,
                                      stabilizer, five_condition_verdict)
from twisted_doubles.cocycle import catalog, d8_reflection_automorphism, trivial_cocycle
from twisted_doubles.components import decompose, reconstruct, trivial_quadruple
from twisted_doubles.double import TwistedDouble
from twisted_doubles.examples import dihedral_cases, non_rigid_z4_case
from twisted_doubles.groups import bicharacters, cyclic, dihedral
from twisted_doubles.morphism import (DoubleMap, check_quasi_bialgebra_morphism,
                                      check_quasi_hopf_morphism, is_automorphism, rigid_oracle)


def test_rigid_conditions_dihedral():
    for c in dihedral_cases():
        wit = rigid_conditions(c.quadruple, c.w, c.e, c.source, c.target)
        assert [ch.name for ch in wit.conditions.checks] == list(RIGID_CONDITIONS)
        assert wit.five_ok and wit.oracle and wit.agrees


def test_rigid_conditions_non_rigid():
    c = non_rigid_z4_case()
    wit = rigid_conditions(c.quadruple, c.w, c.e, c.source, c.target)
    assert [ch.name for ch in wit.conditions.failures()] == ["theta_uv"]
    assert wit.oracle is False and wit.agrees


def test_rigid_conditions_trivial(dbl):
    d = dbl("d8-quotient")
    wit = rigid_conditions(trivial_quadruple(d.group, d.field), d.cocycle, d.cocycle, d, d)
    assert wit.five_ok and wit.agrees


def test_five_condition_verdict_precondition(dbl):
    d = dbl("z4-standard")
    f = DoubleMap.identity(d, target=d.untwisted())
    ok, rep = five_condition_verdict(f)
    assert not ok and not rep["quasi_bialgebra_isomorphism"].ok


def test_bicharacter_maps(dbl):
    d = dbl("c2c2-right")
    maps = bch_maps(d)
    assert maps[0] == DoubleMap.identity(d)
    assert len(set(maps)) == 16
    z4 = dbl("z4-standard")
    bs = bicharacters(z4.group, z4.group)
    assert len(bs) == 4
    for r1 in bs:
        for r2 in bs:
            lhs = bicharacter_to_aut(r1 * r2, z4)
            assert lhs == bicharacter_to_aut(r1, z4).compose(bicharacter_to_aut(r2, z4))
    for f in bch_maps(z4):
        assert rigid_oracle(f).ok


def test_lambda_elements():
    s3 = dihedral(6)
    d = TwistedDouble(s3, trivial_cocycle(s3))
    lam = lambda_elements(d)
    assert lam == [DoubleMap.identity(d)]
    _, w = catalog("c2c2-left")
    k = TwistedDouble(w.group, w)
    lam = lambda_elements(k)
    shapes = {(len(decompose(f).p.A), decompose(f).p.is_trivial()) for f in lam}
    assert (2, False) in shapes
    for f in lam:
        assert check_quasi_hopf_morphism(f, stop_early=True).ok
    with pytest.raises(ClassifyError):
        lambda_elements(k, max_order=2)


def test_spautc_d8(dbl):
    d = dbl("d8-quotient")
    g, w = d.group, d.cocycle
    pairs = spautc_omega(d)
    ident = tuple(range(8))
    assert any(a.image == ident and b.image == ident for a, b, _ in pairs)
    assert all(is_automorphism(f) for _, _, f in pairs)
    stab = stabilizer(g, w)
    v = d8_reflection_automorphism(g)
    assert v not in stab
    bad = spautc_map(d, v, v)
    assert not check_quasi_bialgebra_morphism(bad)["coassociator"].ok


def test_spautc_precondition(dbl):
    with pytest.raises(ClassifyError):
        spautc_omega(dbl("z4-standard"))


def test_generate_subgroup_small(dbl):
    d = dbl("c2c2-left")
    rep = generate_subgroup([DoubleMap.identity(d)])
    assert rep.order == 1 and rep.checks.ok
    rep = generate_subgroup(bch_maps(d))
    assert rep.order == 16 and rep.checks.ok


def test_generate_subgroup_rejects_non_automorphisms(dbl):
    d = dbl("z4-standard")
    c = non_rigid_z4_case()
    bad = DoubleMap(d, d, [{0: d.field.one}] * 16)
    with pytest.raises(ClassifyError):
        generate_subgroup([bad])
    assert is_automorphism(c.morphism())


def test_quot_isom_test():
    c = dihedral_cases()[1]       # u* = v
    assert quot_isom_test(c.quadruple, c.w, c.e)
    assert rigid_oracle(c.morphism()).ok
    assert not quot_isom_test(c.quadruple, c.w, c.w)
    same = reconstruct(c.quadruple, c.source, c.source)
    rep = check_quasi_bialgebra_morphism(same)
    assert not rep["coassociator"].ok
    q0 = trivial_quadruple(c.source.group, c.source.field)
    assert quot_isom_test(q0, c.w, c.w)


def test_quot_isom_precondition():
    c = non_rigid_z4_case()
    with pytest.raises(ClassifyError):
        quot_isom_test(c.quadruple, c.w, c.e)


def test_perturbations_change_one_component():
    c = dihedral_cases()[0]
    q = c.quadruple
    for label, q2 in perturbations(q):
        changed = [name for name in ("p", "u", "r", "v") if getattr(q2, name) != getattr(q, name)]
        assert len(changed) == 1, label
