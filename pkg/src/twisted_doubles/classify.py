"""Rigid isomorphisms and a large explicit subgroup of ``Aut(D^w(G))``.

The five-condition criterion for rigidity is implemented independently of the
definition-level oracle in :mod:`twisted_doubles.morphism`, so the two can be
compared case by case.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .cocycle import Cocycle3, is_inflation_invariant, pullback
from .components import (ComponentError, Quadruple, decompose, enumerate_p, quadruple_from_maps,
                         reconstruct, trivial_p)
from .double import TwistedDouble
from .groups import Bicharacter, FiniteGroup, GroupError, GroupHom, bicharacters
from .morphism import (DoubleMap, check_quasi_bialgebra_morphism, is_automorphism, rigid_oracle)
from .reports import Report

CLOSURE_CAP = 10 ** 5
RIGID_CONDITIONS = ("inflation", "gamma_uv", "theta_uv", "theta_prime_vanish", "gamma_prime_B")


class ClassifyError(ValueError):
    pass


# -- the five conditions ---------------------------------------------------------------

@dataclass
class RigidWitness:
    quadruple: Quadruple
    conditions: Report
    oracle: bool | None = None

    @property
    def five_ok(self) -> bool:
        return self.conditions.ok

    @property
    def agrees(self) -> bool | None:
        return None if self.oracle is None else self.oracle == self.five_ok


def rigid_conditions(q: Quadruple, w: Cocycle3, e: Cocycle3,
                     source: TwistedDouble | None = None,
                     target: TwistedDouble | None = None) -> RigidWitness:
    """The five rigidity conditions on ``q``; optionally cross-checked against the oracle."""
    us, vm = q.u_star(), q.v_map()
    if us is None or vm is None:
        raise ClassifyError("u* and v are not set maps")
    G, H = q.G, q.H
    th, ga = w.phases.theta, w.phases.gamma
    thp, gap = e.phases.theta, e.phases.gamma
    Gs, Hs = range(G.order), range(H.order)
    B = q.p.B
    rep = Report("rigid conditions")
    rep.add("inflation", is_inflation_invariant(w, q.p.A))
    bad = next(((G.label(g), H.label(x), H.label(y)) for g in Gs for x in Hs for y in Hs
                if ga(g, us[x], us[y]) != gap(vm[g], x, y)), None)
    rep.add("gamma_uv", bad is None, bad)
    bad = next(((H.label(x), G.label(g), G.label(h)) for x in Hs for g in Gs for h in Gs
                if th(us[x], g, h) != thp(x, vm[g], vm[h])), None)
    rep.add("theta_uv", bad is None, bad)
    img = sorted(set(vm))
    pairs = {(y, z) for y in B for z in img} | {(y, z) for y in img for z in B} \
        | {(y, z) for y in B for z in B}
    bad = next(((H.label(x), H.label(y), H.label(z)) for x in Hs for y, z in sorted(pairs)
                if thp(x, y, z)), None)
    rep.add("theta_prime_vanish", bad is None, bad)
    bad = next(((H.label(b), H.label(x), H.label(y)) for b in B for x in Hs for y in Hs
                if gap(b, x, y)), None)
    rep.add("gamma_prime_B", bad is None, bad)
    oracle = None
    if source is not None and target is not None:
        oracle = rigid_oracle(reconstruct(q, source, target)).ok
    return RigidWitness(q, rep, oracle)


def five_condition_verdict(f: DoubleMap) -> tuple[bool, Report]:
    """Rigidity decided by the five conditions, for a map between twisted doubles.

    The criterion applies to quasi-bialgebra isomorphisms, so that precondition is
    checked first; the conditions are then read off ``decompose(f)``.
    """
    rep = Report("five-condition verdict")
    iso = f.is_bijective() and check_quasi_bialgebra_morphism(f, stop_early=True).ok
    rep.add("quasi_bialgebra_isomorphism", iso)
    if not iso:
        return False, rep
    q = decompose(f, check=False)
    wit = rigid_conditions(q, f.source.cocycle, f.target.cocycle)
    rep.extend(wit.conditions.checks)
    return rep.ok, rep


# -- generators of the automorphism group ----------------------------------------------------

def bicharacter_to_aut(r: Bicharacter, d: TwistedDouble) -> DoubleMap:
    """``(0, 1, r, 1)``: ``e_g # x -> r(x)(g) e_g # x``."""
    q = quadruple_from_maps(trivial_p(d.group, d.group), d.field, r=r)
    return reconstruct(q, d, d)


def bch_maps(d: TwistedDouble) -> list[DoubleMap]:
    return [bicharacter_to_aut(r, d) for r in bicharacters(d.group, d.group)]


def lambda_elements(d: TwistedDouble, max_order: int = 32) -> list[DoubleMap]:
    """``(p, 1, 0, 1)`` with central ``A``, ``B`` that are automorphisms of ``D(G)`` and ``D^w(G)``."""
    G = d.group
    if G.order > max_order:
        raise ClassifyError(f"|G| = {G.order} exceeds the bound {max_order}")
    z = G.center()
    out = []
    plain = d.untwisted()
    for p in enumerate_p(G, G):
        if not (set(p.A) <= z and set(p.B) <= z):
            continue
        q = quadruple_from_maps(p, d.field)
        f = reconstruct(q, d, d)
        if is_automorphism(f) and is_automorphism(f.reinterpret(plain, plain)):
            out.append(f)
    return out


def central_automorphisms(G: FiniteGroup) -> list[GroupHom]:
    return G.central_automorphisms()


def stabilizer(G: FiniteGroup, w: Cocycle3) -> list[GroupHom]:
    """``Aut(G)_w``: automorphisms fixing ``w`` as a table."""
    return [a for a in G.automorphisms() if pullback(w, a) == w]


def spautc_map(d: TwistedDouble, w_aut: GroupHom, v_aut: GroupHom) -> DoubleMap:
    """``(0, (w^-1)*, 0, v)``: ``e_g # x -> e_{w(g)} # v(x)``."""
    q = quadruple_from_maps(trivial_p(d.group, d.group), d.field, u_star=w_aut.inverse(), v=v_aut)
    return reconstruct(q, d, d)


def spautc_omega(d: TwistedDouble) -> list[tuple[GroupHom, GroupHom, DoubleMap]]:
    """Pairs ``(w, v)`` of ``Aut(G)_w`` with ``w^-1 v`` central, with their oracle-checked maps."""
    G, w = d.group, d.cocycle
    if not is_inflation_invariant(w, G.center()):
        raise ClassifyError("the cocycle is not inflated from G/Z(G)")
    stab = stabilizer(G, w)
    central = set(G.central_automorphisms())
    out = []
    for wa in stab:
        wi = wa.inverse()
        for va in stab:
            if wi.compose(va) in central:
                f = spautc_map(d, wa, va)
                if not is_automorphism(f):
                    raise ClassifyError("a SpAut_c element failed the automorphism oracle")
                out.append((wa, va, f))
    return out


# -- subgroup closure ----------------------------------------------------------------------

@dataclass
class AutGroupReport:
    generators: list
    elements: list
    tags: list = field(default_factory=list)
    checks: Report = field(default_factory=lambda: Report("automorphism subgroup"))

    @property
    def order(self) -> int:
        return len(self.elements)


def closure(gens: Sequence[DoubleMap], cap: int = CLOSURE_CAP) -> list[DoubleMap]:
    """All products of the generators (breadth first, deterministic order)."""
    if not gens:
        raise ClassifyError("no generators")
    ident = DoubleMap.identity(gens[0].source)
    seen = {ident: 0}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = g.compose(x)
                if y not in seen:
                    seen[y] = len(order)
                    order.append(y)
                    nxt.append(y)
                    if len(order) > cap:
                        raise ClassifyError(f"closure exceeds {cap} elements")
        frontier = nxt
    return order


def generate_subgroup(gens: Sequence[DoubleMap], factors: Sequence[Sequence[DoubleMap]] | None = None,
                      verify: bool = True, cap: int = CLOSURE_CAP) -> AutGroupReport:
    """Close ``gens`` under composition; optionally verify an exact factorization.

    ``factors`` lists subgroups ``L, S, C`` (as element lists); every element must
    then be ``l ∘ s ∘ c`` for exactly one triple.
    """
    gens = list(gens)
    if verify:
        bad = next((i for i, g in enumerate(gens) if not is_automorphism(g)), None)
        if bad is not None:
            raise ClassifyError(f"generator {bad} is not an automorphism")
    elems = closure(gens, cap)
    rep = AutGroupReport(gens, elems)
    index = {x: i for i, x in enumerate(elems)}
    bad = next(((i, j) for i, x in enumerate(elems) for j, g in enumerate(gens)
                if x.compose(g) not in index), None)
    rep.checks.add("closed", bad is None, bad)
    if verify:
        d = elems[0].source
        plain = d.untwisted()
        bad = next((i for i, x in enumerate(elems) if not is_automorphism(x)), None)
        rep.checks.add("twisted_oracle", bad is None, bad)
        bad = next((i for i, x in enumerate(elems)
                    if not is_automorphism(x.reinterpret(plain, plain))), None)
        rep.checks.add("untwisted_oracle", bad is None, bad)
    if factors is not None:
        found: dict = {}
        dup = None
        for i, l in enumerate(factors[0]):
            for j, s in enumerate(factors[1]):
                ls = l.compose(s)
                for k, c in enumerate(factors[2]):
                    x = ls.compose(c)
                    if x in found:
                        dup = dup or (found[x], (i, j, k))
                    found[x] = (i, j, k)
        rep.checks.add("factorization_unique", dup is None, dup)
        missing = next((i for i, x in enumerate(elems) if x not in found), None)
        rep.checks.add("every_element_factors", missing is None, missing)
        rep.checks.add("products_in_closure", all(x in index for x in found))
        rep.tags = []
        for x in elems:
            i, j, k = found.get(x, (None, None, None))
            q = decompose(x, check=False)
            rep.tags.append({"lambda": i, "spautc": j, "bch": k, "p_trivial": q.p.is_trivial(),
                             "u_star": q.u_star(), "v": q.v_map(),
                             "r_trivial": q.r_is_trivial()})
    return rep


def center_quotient_subgroup(d: TwistedDouble, verify: bool = True) -> AutGroupReport:
    """``Λ(G) (SpAut_c(G)_w ⋉ BCh(G))`` generated and factor-checked inside ``Aut(D^w(G))``."""
    lam = lambda_elements(d)
    sp = [f for _, _, f in spautc_omega(d)]
    bch = bch_maps(d)
    gens = _dedupe(lam + sp + bch)
    return generate_subgroup(gens, (lam, sp, bch), verify=verify)


def _dedupe(maps: Iterable[DoubleMap]) -> list[DoubleMap]:
    seen, out = set(), []
    for f in maps:
        if f not in seen:
            seen.add(f)
            out.append(f)
    return out


# -- the central-quotient isomorphism test ------------------------------------------------

def quot_isom_test(q: Quadruple, w: Cocycle3, e: Cocycle3) -> bool:
    """For ``w`` inflated from ``G/Z(G)``: is ``w^{u*} = e`` as tables?"""
    G = q.G
    if not is_inflation_invariant(w, G.center()):
        raise ClassifyError("the cocycle is not inflated from G/Z(G)")
    us = q.u_star()
    if us is None:
        raise ClassifyError("u* is not a set map")
    try:
        hom = GroupHom(q.H, G, us)
    except GroupError as exc:
        raise ClassifyError("u* is not a homomorphism") from exc
    return pullback(w, hom) == e


# -- structured negatives -----------------------------------------------------------------

def perturbations(q: Quadruple) -> list[tuple[str, Quadruple]]:
    """Quadruples differing from ``q`` in exactly one component."""
    G, H, fld = q.G, q.H, q.field
    us, vm = q.u_star(), q.v_map()
    out = []
    one = fld.one
    # v: precompose with each nontrivial automorphism of G
    if vm is not None:
        for a in G.automorphisms():
            if list(a.image) == list(range(G.order)):
                continue
            v2 = {(x, vm[a(x)]): one for x in range(G.order)}
            out.append((f"v∘{list(a.image)}", Quadruple(q.p, q.u, q.r, v2, fld)))
    # u*: postcompose with each nontrivial automorphism of G
    if us is not None:
        for a in G.automorphisms():
            if list(a.image) == list(range(G.order)):
                continue
            u2 = {(a(us[h]), h): one for h in range(H.order)}
            out.append((f"u*∘{list(a.image)}", Quadruple(q.p, u2, q.r, q.v, fld)))
    # r: multiply by each nontrivial bicharacter, and flip a single sign
    for i, b in enumerate(bicharacters(G, H)):
        if b.is_trivial():
            continue
        r2 = {(x, h): q.r_coeff(x, h) * fld.embed_phase(b(x, h))
              for x in range(G.order) for h in range(H.order)}
        out.append((f"r·bich#{i}", Quadruple(q.p, q.u, r2, q.v, fld)))
    x0, h0 = G.order - 1, H.order - 1
    r2 = dict(q.r)
    r2[(x0, h0)] = -q.r_coeff(x0, h0)
    out.append(("r sign flip", Quadruple(q.p, q.u, r2, q.v, fld)))
    # p: every other Hopf component
    for j, p2 in enumerate(enumerate_p(G, H)):
        if p2 != q.p:
            out.append((f"p#{j}", Quadruple(p2, q.u, q.r, q.v, fld)))
    return out


def structured_negatives(bases: Sequence[tuple[str, Quadruple, TwistedDouble, TwistedDouble]],
                         count: int = 20):
    """Up to ``count`` single-component perturbations rejected by the rigid oracle.

    Candidates are taken round-robin over bases and over the component perturbed,
    so the selection is deterministic and spread across all four components.
    """
    queues = []
    for name, q, src, tgt in bases:
        by_comp: dict = {}
        for label, q2 in perturbations(q):
            by_comp.setdefault(label[0], []).append((f"{name} / {label}", q2, src, tgt))
        queues.append(by_comp)
    chosen = []
    progress = True
    while len(chosen) < count and progress:
        progress = False
        for comp in ("v", "u", "r", "p"):
            for by_comp in queues:
                lst = by_comp.get(comp)
                while lst:
                    label, q2, src, tgt = lst.pop(0)
                    progress = True
                    f = reconstruct(q2, src, tgt)
                    if not rigid_oracle(f).ok:
                        chosen.append((label, q2, src, tgt, f))
                        break
                if len(chosen) >= count:
                    return chosen
    return chosen
