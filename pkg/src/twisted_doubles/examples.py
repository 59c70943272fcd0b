"""Worked examples: isomorphisms between concrete twisted doubles.

Each builder returns :class:`ExampleCase` objects carrying the quadruple, the two
doubles and the expected verdicts; :func:`run_example` checks them and returns a
report.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cocycle import Cocycle3, catalog, cohomologous, d8_reflection_automorphism, klein_four
from .components import (PComponent, Quadruple, decompose, p_from_bicharacter, property_report,
                         quadruple_from_maps, reconstruct, trivial_p)
from .double import TwistedDouble
from .groups import GroupHom, bicharacters, cyclic
from .morphism import (DoubleMap, check_quasi_hopf_morphism, rigid_oracle, transports_r_matrix)
from .reports import Report

EXAMPLE_NAMES = ("c2c2", "c6", "dihedral-64", "non-rigid-z4")


@dataclass
class ExampleCase:
    name: str
    quadruple: Quadruple
    source: TwistedDouble
    target: TwistedDouble
    w: Cocycle3
    e: Cocycle3
    rigid: bool = True

    def morphism(self) -> DoubleMap:
        return reconstruct(self.quadruple, self.source, self.target)


def _perm(group, images) -> GroupHom:
    return GroupHom(group, group, images)


# -- Klein four group -------------------------------------------------------------------

def c2c2_maps():
    """``(tau, shear)`` on ``<a> x <b>``: the swap and ``a^i b^j -> a^(i+j) b^j``."""
    g = klein_four()
    tau = _perm(g, [0, 2, 1, 3])
    shear = _perm(g, [0, 3, 2, 1])
    return g, tau, shear


def c2c2_cases() -> list[ExampleCase]:
    """Three quadruple families between ``D^{1 x w}`` and ``D^{w x 1}``, all 16 ``r`` each."""
    g, tau, shear = c2c2_maps()
    _, w_left = catalog("c2c2-left")        # w on the a-coordinate: "w x 1"
    _, w_right = catalog("c2c2-right")      # w on the b-coordinate: "1 x w"
    d_left, d_right = TwistedDouble(g, w_left), TwistedDouble(g, w_right)
    fld = d_left.field
    a, b = g.index_of("a"), g.index_of("b")
    half = Fraction(1, 2)
    p_ab = p_from_bicharacter(g, g, (0, a), (0, b), [[0, 0], [0, half]])
    p_ba = p_from_bicharacter(g, g, (0, b), (0, a), [[0, 0], [0, half]])
    specs = [
        ("(p,tau*,r,tau)", p_ab, tau, d_right, d_left, w_right, w_left),
        ("(p,tau*,r,tau.shear)", p_ab, tau.compose(shear), d_right, d_left, w_right, w_left),
        ("(p*,tau*,r,shear.tau)", p_ba, shear.compose(tau), d_left, d_right, w_left, w_right),
    ]
    cases = []
    for label, p, v, src, tgt, w, e in specs:
        for i, r in enumerate(bicharacters(g, g)):
            q = quadruple_from_maps(p, fld, u_star=tau, r=r, v=v)
            cases.append(ExampleCase(f"c2c2 {label} r#{i}", q, src, tgt, w, e))
    return cases


# -- cyclic group of order six -------------------------------------------------------------

def c6_cases(sigma_scale: int = 1) -> list[ExampleCase]:
    """``(p, v*, r, 1)``, ``(p, 1, r, v)``, ``(p, v*, r, v)`` on ``Z6`` with ``v`` inversion."""
    g, w = catalog("z6-inflated")
    d = TwistedDouble(g, w)
    fld = d.field
    A = (0, 2, 4)
    p = p_from_bicharacter(g, g, A, A, lambda x, y: Fraction(sigma_scale * (x // 2) * (y // 2), 3))
    inv = [g.inv(x) for x in range(6)]
    cases = []
    for i, r in enumerate(bicharacters(g, g)):
        for label, us, v in (("(p,v*,r,1)", inv, None), ("(p,1,r,v)", None, inv),
                             ("(p,v*,r,v)", inv, inv)):
            q = quadruple_from_maps(p, fld, u_star=us, r=r, v=v)
            cases.append(ExampleCase(f"c6 {label} r#{i}", q, d, d, w, w))
    return cases


# -- dihedral group of order eight -----------------------------------------------------------

def dihedral_setup():
    g, w = catalog("d8-quotient")
    _, e = catalog("d8-eta")
    v = d8_reflection_automorphism(g)
    return g, w, e, v


def dihedral_map(d_w: TwistedDouble | None = None, d_e: TwistedDouble | None = None) -> DoubleMap:
    """The permutation ``e_g # x -> e_{v(g)} # v(x)`` from ``D^w(D8)`` to ``D^e(D8)``."""
    g, w, e, v = dihedral_setup()
    d_w = d_w or TwistedDouble(g, w)
    d_e = d_e or TwistedDouble(g, e)
    n, one = g.order, d_e.field.one
    return DoubleMap(d_w, d_e, [{v(h) * n + v(x): one} for h in range(n) for x in range(n)])


def dihedral_cases() -> list[ExampleCase]:
    """``(0, v*, 0, v)`` in both readings of ``v*`` (``u* = v`` and ``u* = v^-1``)."""
    g, w, e, v = dihedral_setup()
    d_w, d_e = TwistedDouble(g, w), TwistedDouble(g, e)
    fld = d_e.field
    p = trivial_p(g, g)
    return [ExampleCase("dihedral (0,v*,0,v) u*=v^-1", quadruple_from_maps(p, fld, v.inverse(),
                                                                           None, v),
                        d_w, d_e, w, e),
            ExampleCase("dihedral (0,v*,0,v) u*=v", quadruple_from_maps(p, fld, v, None, v),
                        d_w, d_e, w, e)]


# -- the non-rigid automorphism of D^w(Z4) -----------------------------------------------------

def non_rigid_z4_case() -> ExampleCase:
    """``(0, id, r, inversion)`` with ``r(x) = `` the order-two character for ``x != 1``."""
    g, w = catalog("z4-standard")
    d = TwistedDouble(g, w)
    inv = [g.inv(x) for x in range(4)]
    q = quadruple_from_maps(trivial_p(g, g), d.field, None,
                            lambda x, h: Fraction(0) if x == 0 else Fraction(h, 2), inv)
    return ExampleCase("non-rigid z4 (0,id,r,inv)", q, d, d, w, w, rigid=False)


# -- runners ----------------------------------------------------------------------------------

def _rigid_iso_checks(rep: Report, cases: list[ExampleCase], round_trip: bool = True):
    bad_rigid, bad_rt = [], []
    for c in cases:
        f = c.morphism()
        if not rigid_oracle(f).ok or not check_quasi_hopf_morphism(f, stop_early=True).ok:
            bad_rigid.append(c.name)
        if round_trip and reconstruct(decompose(f), c.source, c.target) != f:
            bad_rt.append(c.name)
    rep.add(f"rigid_quasi_hopf_isomorphism[{len(cases)}]", not bad_rigid, bad_rigid or None)
    if round_trip:
        rep.add("decompose_round_trip", not bad_rt, bad_rt or None)


def run_example(name: str) -> Report:
    """Verify the claims made about one worked example."""
    if name == "c2c2":
        rep = Report("example c2c2")
        _rigid_iso_checks(rep, c2c2_cases())
        return rep
    if name == "c6":
        rep = Report("example c6")
        _rigid_iso_checks(rep, c6_cases())
        return rep
    if name == "dihedral-64":
        rep = Report("example dihedral-64")
        g, w, e, v = dihedral_setup()
        f = dihedral_map()
        qh = check_quasi_hopf_morphism(f)
        rep.add("quasi_hopf_morphism", qh.ok, [c.name for c in qh.failures()] or None)
        rep.add("bijective", f.is_bijective())
        rep.add("rigid", rigid_oracle(f).ok)
        rep.add("transports_R_matrix", transports_r_matrix(f))
        dec = cohomologous(w, e)
        rep.add("cocycles_not_cohomologous", not dec.cohomologous,
                {"certificate_row": dec.certificate_row})
        rep.add("cocycles_differ_as_tables", w != e)
        v2 = v.compose(v)
        ident = tuple(range(g.order))
        rep.add("v_has_order_4", v2.image != ident and v2.compose(v2).image == ident)
        q = decompose(f)
        rep.add("decompose_round_trip", reconstruct(q, f.source, f.target) == f)
        pr = property_report(q, w, e)
        rep.add("property_flags", pr.ok, [c.name for c in pr.failures()] or None)
        _rigid_iso_checks(rep, dihedral_cases(), round_trip=False)
        return rep
    if name == "non-rigid-z4":
        rep = Report("example non-rigid-z4")
        c = non_rigid_z4_case()
        f = c.morphism()
        qh = check_quasi_hopf_morphism(f)
        rep.add("quasi_hopf_morphism", qh.ok, [x.name for x in qh.failures()] or None)
        rep.add("bijective", f.is_bijective())
        rep.add("not_rigid", not rigid_oracle(f).ok)
        pr = property_report(c.quadruple, c.w, c.e)
        fails = [x.name for x in pr.failures()]
        rep.add("only_r_alg_fails", fails == ["r_alg"], fails)
        rep.add("decompose_round_trip", reconstruct(decompose(f), c.source, c.target) == f)
        return rep
    raise KeyError(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}")
