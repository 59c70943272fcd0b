"""The (p, u, r, v) description of morphisms ``D^w(G) -> D^e(H)``.

Every quasi-bialgebra morphism factors as

    psi(e_g # x) = (sum_k u(e_{g k^-1}) # p(e_k)) . (r(x) # v(x))

with ``p: k^G -> kH`` a Hopf map (given by abelian subgroups ``A``, ``B`` and an
orthogonal bicharacter ``sigma``), ``u: k^G -> k^H``, ``r: kG -> k^H`` and
``v: kG -> kH``.  This module converts between maps and quadruples, checks the
identities the components satisfy and builds the two auxiliary quasi-Hopf
algebras attached to ``p``.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .algebra import PhaseAlgebra, Tensor, _acc
from .cocycle import Cocycle3, is_inflation_invariant
from .double import TwistedDouble
from .groups import Bicharacter, FiniteGroup, GroupHom, bicharacters
from .morphism import DoubleMap, check_quasi_bialgebra_morphism
from .reports import Report
from .scalars import Cyclotomic, CyclotomicField, default_modulus, field


class ComponentError(ValueError):
    pass


# -- group algebra helpers --------------------------------------------------------

def _ga_mul(group: FiniteGroup, f: Mapping[int, Cyclotomic], g: Mapping[int, Cyclotomic]) -> dict:
    """Product in the group algebra, elements as ``{group element: coefficient}``."""
    t = group.table
    out: dict = {}
    for a, x in f.items():
        row = t[a]
        for b, y in g.items():
            _acc(out, row[b], x * y)
    return out


# -- the Hopf component p -----------------------------------------------------------

@dataclass(frozen=True)
class PComponent:
    """``p(e_a) = |A|^-1 sum_b sigma(a, b) b`` for ``a`` in ``A``; zero off ``A``."""

    G: FiniteGroup
    H: FiniteGroup
    A: tuple
    B: tuple
    sigma: tuple          # sigma[i][j] in Q/Z for A[i], B[j]
    _pos: tuple = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        A, B = tuple(sorted(self.A)), tuple(sorted(self.B))
        sig = tuple(tuple(Fraction(s) % 1 for s in row) for row in self.sigma)
        if len(sig) != len(A) or any(len(row) != len(B) for row in sig):
            raise ComponentError("sigma must be an |A| x |B| table")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "sigma", sig)
        object.__setattr__(self, "_pos", ({a: i for i, a in enumerate(A)},
                                          {b: j for j, b in enumerate(B)}))

    @property
    def order(self) -> int:
        return len(self.A)

    @property
    def modulus(self) -> int:
        return math.lcm(1, *(s.denominator for row in self.sigma for s in row))

    def phase(self, a: int, b: int) -> Fraction | None:
        """``sigma(a, b)`` as an exponent, None outside ``A x B``."""
        ia, ib = self._pos
        if a in ia and b in ib:
            return self.sigma[ia[a]][ib[b]]
        return None

    def coeff(self, a: int, b: int, fld: CyclotomicField) -> Cyclotomic:
        s = self.phase(a, b)
        if s is None:
            return fld.zero
        return fld.embed_phase(s) * Fraction(1, len(self.A))

    def table(self, fld: CyclotomicField) -> dict:
        """Nonzero coefficients ``{(g, h): p(g, h)}``."""
        return {(a, b): self.coeff(a, b, fld) for a in self.A for b in self.B}

    def row(self, g: int, fld: CyclotomicField) -> dict:
        """``p(e_g)`` as an element of ``kH``."""
        if g not in self._pos[0]:
            return {}
        return {b: self.coeff(g, b, fld) for b in self.B}

    def is_trivial(self) -> bool:
        return self.A == (0,) and self.B == (0,)

    def __hash__(self):
        return hash((self.A, self.B, self.sigma, self.G.order, self.H.order))


def trivial_p(G: FiniteGroup, H: FiniteGroup) -> PComponent:
    return PComponent(G, H, (0,), (0,), ((0,),))


def p_from_bicharacter(G: FiniteGroup, H: FiniteGroup, A: Iterable[int], B: Iterable[int],
                       sigma) -> PComponent:
    """Build ``p`` from ``A``, ``B`` and a pairing.

    ``sigma`` may be a :class:`Bicharacter` of the subgroups (indexed in sorted
    order), a callable ``(a, b) -> exponent`` on elements of ``G`` and ``H``, or a
    nested table.
    """
    A, B = sorted(set(A)), sorted(set(B))
    if isinstance(sigma, Bicharacter):
        table = [[sigma(i, j) for j in range(len(B))] for i in range(len(A))]
    elif callable(sigma):
        table = [[sigma(a, b) for b in B] for a in A]
    else:
        table = sigma
    return PComponent(G, H, tuple(A), tuple(B), tuple(tuple(r) for r in table))


def _inner(fld: CyclotomicField, xs: Sequence[Fraction], ys: Sequence[Fraction]) -> Cyclotomic:
    """``sum_k zeta^{x_k} conj(zeta^{y_k})``."""
    return fld.from_power_sum((fld.exponent(x - y), 1) for x, y in zip(xs, ys))


def orthogonality_failure(p: PComponent):
    """First pair violating row or column orthogonality of ``sigma``, or None."""
    fld = field(default_modulus(p.modulus))
    n = len(p.A)
    rows = p.sigma
    cols = list(zip(*rows))
    for i in range(n):
        for j in range(n):
            want = fld.integer(n if i == j else 0)
            if _inner(fld, rows[i], rows[j]) != want:
                return ("rows", p.G.label(p.A[i]), p.G.label(p.A[j]))
            if _inner(fld, cols[i], cols[j]) != want:
                return ("columns", p.H.label(p.B[i]), p.H.label(p.B[j]))
    return None


def p_identity_report(G: FiniteGroup, H: FiniteGroup, table: Mapping[tuple, Cyclotomic],
                      fld: CyclotomicField) -> Report:
    """The coefficient identities of a Hopf map ``k^G -> kH`` for an arbitrary table."""
    rep = Report("p identities")
    nz = {k: c for k, c in table.items() if c}
    A = sorted({g for g, _ in nz})
    B = sorted({h for _, h in nz})
    shape = G.is_subgroup(A) and H.is_subgroup(B) and len(nz) == len(A) * len(B) \
        and len(A) == len(B)
    rep.add("support", shape, None if shape else (A, B))

    def get(g, h):
        return nz.get((g, h), fld.zero)

    rows = {g: {h: c for (gg, h), c in nz.items() if gg == g} for g in range(G.order)}
    cols = {h: {g: c for (g, hh), c in nz.items() if hh == h} for h in range(H.order)}
    one = fld.one

    bad = None
    for h in range(H.order):
        s = sum(cols[h].values(), fld.zero)
        if s != (one if h == 0 else fld.zero):
            bad = H.label(h)
            break
    rep.add("unital", bad is None, bad)

    bad = None
    for g in range(G.order):
        s = sum(rows[g].values(), fld.zero)
        if s != (one if g == 0 else fld.zero):
            bad = G.label(g)
            break
    rep.add("counital", bad is None, bad)

    bad = None
    for x in range(G.order):
        for y in range(G.order):
            prod = _ga_mul(H, rows[x], rows[y])
            if prod != (rows[x] if x == y else {}):
                bad = (G.label(x), G.label(y))
                break
        if bad:
            break
    rep.add("multiplicative", bad is None, bad)

    bad = None
    for b in range(H.order):
        for c in range(H.order):
            prod = _ga_mul(G, cols[b], cols[c])
            if prod != (cols[b] if b == c else {}):
                bad = (H.label(b), H.label(c))
                break
        if bad:
            break
    rep.add("comultiplicative", bad is None, bad)

    bad = next(((G.label(g), H.label(h)) for g in range(G.order) for h in range(H.order)
                if get(g, H.inv(h)) != get(G.inv(g), h)), None)
    rep.add("antipode", bad is None, bad)
    return rep


def validate_p(p: PComponent, fld: CyclotomicField | None = None) -> Report:
    """Orthogonality, the coefficient identities and the product rules for ``p``."""
    G, H = p.G, p.H
    if not G.is_subgroup(p.A) or not H.is_subgroup(p.B):
        raise ComponentError("A and B must be subgroups")
    if not (G.subgroup(p.A)[0].is_abelian and H.subgroup(p.B)[0].is_abelian):
        raise ComponentError("A and B must be abelian")
    if len(p.A) != len(p.B):
        raise ComponentError("|A| and |B| differ")
    fld = fld or field(default_modulus(p.modulus))
    rep = Report("p component")
    sa, _ = G.subgroup(p.A)
    sb, _ = H.subgroup(p.B)
    bc = Bicharacter(sa, sb, p.sigma)
    rep.add("bicharacter", bc.is_bicharacter())
    orth = orthogonality_failure(p)
    rep.add("orthogonal", orth is None, orth)
    rep.extend(p_identity_report(G, H, p.table(fld), fld).checks)

    n = len(p.A)
    bad = None
    for a in p.A:
        for b in p.B:
            for c in p.B:
                lhs = p.coeff(a, H.mul(b, c), fld)
                rhs = p.coeff(a, b, fld) * p.coeff(a, c, fld) * n
                if lhs != rhs:
                    bad = (G.label(a), H.label(b), H.label(c))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("product_rule", bad is None, bad)

    bad = None
    inv_n = fld.rational(Fraction(1, n))
    for a in p.A:
        for b in p.B:
            s = p.coeff(a, b, fld) * n
            if s * s.conjugate() != fld.one:
                bad = ("modulus", G.label(a), H.label(b))
        if p.coeff(a, 0, fld) != inv_n:
            bad = ("p(a,1)", G.label(a))
    for b in p.B:
        if p.coeff(0, b, fld) != inv_n:
            bad = ("p(1,b)", H.label(b))
    rep.add("norms", bad is None, bad)
    return rep


def enumerate_p(G: FiniteGroup, H: FiniteGroup) -> list[PComponent]:
    """All Hopf maps ``k^G -> kH`` as (A, B, orthogonal sigma) triples."""
    out = []
    subs_g = [s for s in G.subgroups() if G.subgroup(s)[0].is_abelian]
    subs_h = [s for s in H.subgroups() if H.subgroup(s)[0].is_abelian]
    for A in subs_g:
        sa, _ = G.subgroup(A)
        for B in subs_h:
            if len(A) != len(B):
                continue
            sb, _ = H.subgroup(B)
            for bc in bicharacters(sa, sb):
                p = p_from_bicharacter(G, H, A, B, bc)
                if orthogonality_failure(p) is None:
                    out.append(p)
    return out


def canonical_table(table: Mapping[tuple, Cyclotomic]) -> tuple:
    return tuple(sorted((k, c) for k, c in table.items() if c))


def brute_force_p_tables(G: FiniteGroup, H: FiniteGroup, fld: CyclotomicField) -> set:
    """Every coefficient table of a Hopf map ``k^G -> kH`` for abelian ``H``, by exhaustion.

    Unital algebra maps ``k^G -> kH = k^(dual of H)`` are exactly functions from the
    character group of ``H`` to ``G``; each is expanded into its coefficient table and
    kept when the full identity list holds.
    """
    if not H.is_abelian:
        raise ComponentError("exhaustive search needs an abelian target group")
    _, chars = H.character_group
    m = H.order
    idem = []
    for chi in chars:       # E_chi = |H|^-1 sum_h chi(h)^-1 h
        idem.append({h: fld.embed_phase(-chi(h)) * Fraction(1, m) for h in range(m)})
    found = set()
    for assign in itertools.product(range(G.order), repeat=len(chars)):
        table: dict = {}
        for chi_i, g in enumerate(assign):
            for h, c in idem[chi_i].items():
                _acc(table, (g, h), c)
        if p_identity_report(G, H, table, fld).ok:
            found.add(canonical_table(table))
    return found


def chi_to_std(p: PComponent, b: int, fld: CyclotomicField) -> dict:
    """``chi_b = |A| sum_c p(c^-1, b) e_c`` as ``{c: coeff}``."""
    if b not in p.B:
        raise ComponentError("b is not in B")
    n = len(p.A)
    return {c: p.coeff(p.G.inv(c), b, fld) * n for c in p.A}


def std_to_chi(p: PComponent, a: int, fld: CyclotomicField) -> dict:
    """``e_a = sum_b p(a, b) chi_b`` as ``{b: coeff}``."""
    if a not in p.A:
        raise ComponentError("a is not in A")
    return {b: p.coeff(a, b, fld) for b in p.B}


def apply_p(p: PComponent, f: Mapping[int, Cyclotomic], fld: CyclotomicField) -> dict:
    """``p`` applied to a function on ``A`` given by ``{a: f(a)}``."""
    out: dict = {}
    for a, c in f.items():
        for b, pc in p.row(a, fld).items():
            _acc(out, b, c * pc)
    return out


# -- quadruples ------------------------------------------------------------------------

@dataclass
class Quadruple:
    """Coefficient tables ``u(g,h)``, ``r(x,h)``, ``v(x,y)`` together with ``p``."""

    p: PComponent
    u: dict
    r: dict
    v: dict
    field: CyclotomicField

    @property
    def G(self) -> FiniteGroup:
        return self.p.G

    @property
    def H(self) -> FiniteGroup:
        return self.p.H

    def u_coeff(self, g, h):
        return self.u.get((g, h), self.field.zero)

    def r_coeff(self, x, h):
        return self.r.get((x, h), self.field.zero)

    def v_coeff(self, x, y):
        return self.v.get((x, y), self.field.zero)

    def u_of(self, g: int) -> dict:
        """``u(e_g)`` as ``{h: coeff}``."""
        return {h: c for (gg, h), c in self.u.items() if gg == g and c}

    def r_of(self, x: int) -> dict:
        return {h: c for (xx, h), c in self.r.items() if xx == x and c}

    def v_of(self, x: int) -> dict:
        return {y: c for (xx, y), c in self.v.items() if xx == x and c}

    # recognizers: set maps hidden inside the matrices
    def u_star(self) -> tuple | None:
        """``u*`` as a tuple ``h -> g`` when ``u`` is dual to a set map, else None."""
        out = [None] * self.H.order
        one = self.field.one
        for (g, h), c in self.u.items():
            if not c:
                continue
            if c != one or out[h] is not None:
                return None
            out[h] = g
        return None if None in out else tuple(out)

    def v_map(self) -> tuple | None:
        """``v`` as a tuple ``x -> y`` when each ``v(x)`` is a group element, else None."""
        out = [None] * self.G.order
        one = self.field.one
        for (x, y), c in self.v.items():
            if not c:
                continue
            if c != one or out[x] is not None:
                return None
            out[x] = y
        return None if None in out else tuple(out)

    def u_star_hom(self) -> GroupHom | None:
        m = self.u_star()
        if m is None:
            return None
        f = GroupHom(self.H, self.G, m, validate=False)
        return f if f.is_hom() else None

    def v_hom(self) -> GroupHom | None:
        m = self.v_map()
        if m is None:
            return None
        f = GroupHom(self.G, self.H, m, validate=False)
        return f if f.is_hom() else None

    def r_is_trivial(self) -> bool:
        one = self.field.one
        return all(self.r_coeff(x, h) == one for x in range(self.G.order)
                   for h in range(self.H.order))

    def validate(self) -> Report:
        """Biunitality of ``u``, ``r``, ``v`` and cocommutation of ``p`` with ``u``."""
        G, H, fld = self.G, self.H, self.field
        one, zero = fld.one, fld.zero
        rep = Report("quadruple shape")
        rep.add("u_unital", all(sum((self.u_coeff(g, h) for g in range(G.order)), zero) == one
                                for h in range(H.order)))
        rep.add("u_counital", all(self.u_coeff(g, 0) == (one if g == 0 else zero)
                                  for g in range(G.order)))
        rep.add("r_unital", all(self.r_coeff(0, h) == one for h in range(H.order)))
        rep.add("r_counital", all(self.r_coeff(x, 0) == one for x in range(G.order)))
        rep.add("v_unital", all(self.v_coeff(0, y) == (one if y == 0 else zero)
                                for y in range(H.order)))
        rep.add("v_counital", all(sum((self.v_coeff(x, y) for y in range(H.order)), zero) == one
                                  for x in range(G.order)))
        bad = None
        for g in range(G.order):
            for t in self.p.A:
                if self.u_of(G.mul(g, G.inv(t))) != self.u_of(G.mul(G.inv(t), g)):
                    bad = (G.label(g), G.label(t))
                    break
            if bad:
                break
        rep.add("p_cocommutes_u", bad is None, bad)
        return rep


def _as_map(f, n: int) -> tuple:
    if f is None:
        return tuple(range(n))
    if isinstance(f, GroupHom):
        return tuple(f.image)
    return tuple(f)


def quadruple_from_maps(p: PComponent, fld: CyclotomicField, u_star=None, r=None,
                        v=None) -> Quadruple:
    """Quadruple from set maps ``u*: H -> G`` and ``v: G -> H`` and a phase table ``r``.

    ``None`` stands for the identity (``u*``, ``v``) or for ``r = ε``.  ``r`` may be a
    :class:`Bicharacter` of ``G x H`` or a callable ``(x, h) -> exponent``.
    """
    G, H = p.G, p.H
    us = _as_map(u_star, H.order)
    vs = _as_map(v, G.order)
    one = fld.one
    u = {(us[h], h): one for h in range(H.order)}
    vv = {(x, vs[x]): one for x in range(G.order)}
    if r is None:
        rr = {(x, h): one for x in range(G.order) for h in range(H.order)}
    else:
        rf = r if callable(r) else None
        rr = {(x, h): fld.embed_phase(rf(x, h)) for x in range(G.order) for h in range(H.order)}
    return Quadruple(p, u, rr, vv, fld)


def trivial_quadruple(G: FiniteGroup, fld: CyclotomicField) -> Quadruple:
    return quadruple_from_maps(trivial_p(G, G), fld)


# -- reconstruction and decomposition ------------------------------------------------------

def reconstruct(q: Quadruple, source: TwistedDouble, target: TwistedDouble) -> DoubleMap:
    """The morphism whose components are ``q``, evaluated as a product in ``target``."""
    G, H = source.group, target.group
    if q.G.order != G.order or q.H.order != H.order:
        raise ComponentError("quadruple does not match the doubles")
    fld = target.field
    m = H.order

    def conv(c):
        return c if c.field is fld else c.promote(fld.modulus)

    left = []
    for g in range(G.order):
        terms: dict = {}
        for k in q.p.A:
            uk = q.u_of(G.mul(g, G.inv(k)))
            if not uk:
                continue
            pk = q.p.row(k, fld)
            for h, uc in uk.items():
                for b, pc in pk.items():
                    _acc(terms, (h * m + b,), conv(uc) * pc)
        left.append(Tensor(target, 1, terms))
    right = []
    for x in range(G.order):
        terms = {}
        vx = q.v_of(x)
        for h, rc in q.r_of(x).items():
            for y, vc in vx.items():
                _acc(terms, (h * m + y,), conv(rc) * conv(vc))
        right.append(Tensor(target, 1, terms))
    cols = []
    for g in range(G.order):
        for x in range(G.order):
            t = target.mul(left[g], right[x])
            cols.append({k[0]: c for k, c in t.terms.items()})
    return DoubleMap(source, target, cols)


def decompose(f: DoubleMap, check: bool = True) -> Quadruple:
    """Read ``(p, u, r, v)`` off a quasi-bialgebra morphism of twisted doubles."""
    src, tgt = f.source, f.target
    if not isinstance(src, TwistedDouble) or not isinstance(tgt, TwistedDouble):
        raise ComponentError("decomposition needs twisted doubles on both sides")
    if check:
        rep = check_quasi_bialgebra_morphism(f, stop_early=True)
        if not rep.ok:
            raise ComponentError(f"not a quasi-bialgebra morphism: {rep.failures()[0]}")
    G, H = src.group, tgt.group
    n, m = G.order, H.order
    fld = tgt.field

    u: dict = {}
    ptab: dict = {}
    for g in range(n):
        col = f.cols[g * n]                       # psi(e_g # 1)
        for k, c in col.items():
            h, y = divmod(k, m)
            _acc(u, (g, h), c)
            if h == 0:
                ptab[(g, y)] = c
    r: dict = {}
    v: dict = {}
    for x in range(n):
        cx: dict = {}
        for g in range(n):
            for k, c in f.cols[g * n + x].items():
                _acc(cx, divmod(k, m), c)
        seed = {y: c for (h, y), c in cx.items() if h == 0}
        if not seed:
            raise ComponentError(f"psi(eps#{G.label(x)}) vanishes on e_1 # H")
        y0 = min(seed)
        inv = seed[y0].inverse()
        rx = {}
        for (h, y), c in cx.items():
            if y == y0:
                rx[h] = c * inv
        for h in range(m):
            for y in range(m):
                want = rx.get(h, fld.zero) * seed.get(y, fld.zero)
                if cx.get((h, y), fld.zero) != want:
                    raise ComponentError(
                        f"psi(eps#{G.label(x)}) is not a pure tensor r(x)#v(x)")
        for h, c in rx.items():
            r[(x, h)] = c
        for y, c in seed.items():
            v[(x, y)] = c

    A = sorted({g for g, _ in ptab})
    B = sorted({b for _, b in ptab})
    if len(A) != len(B) or len(ptab) != len(A) * len(B) or not G.is_subgroup(A) \
            or not H.is_subgroup(B):
        raise ComponentError("p does not have the shape of an (A, B, sigma) component")
    sigma = []
    for a in A:
        row = []
        for b in B:
            ph = (ptab[(a, b)] * len(A)).as_phase()
            if ph is None:
                raise ComponentError(f"|A| p({G.label(a)},{H.label(b)}) is not a root of unity")
            row.append(ph)
        sigma.append(row)
    p = PComponent(G, H, tuple(A), tuple(B), tuple(tuple(r_) for r_ in sigma))
    return Quadruple(p, u, r, v, fld)


# -- property flags ------------------------------------------------------------------------

def _first(it):
    return next(it, None)


def property_report(q: Quadruple, w: Cocycle3, e: Cocycle3) -> Report:
    """Exact pass / fail / not-applicable flags for the component properties."""
    G, H, p, fld = q.G, q.H, q.p, q.field
    if w.group.order != G.order or e.group.order != H.order:
        raise ComponentError("cocycles do not match the quadruple's groups")
    th, ga = w.phases.theta, w.phases.gamma
    thp, gap = e.phases.theta, e.phases.gamma
    Gs, Hs = range(G.order), range(H.order)
    A, B = p.A, p.B
    lg, lh = G.label, H.label
    us, vm = q.u_star(), q.v_map()
    rep = Report("component properties")

    def flag(name, witness, applicable=True):
        rep.add(name, (witness is None) if applicable else None, witness)

    flag("v_alg", _first((lg(a), lg(x), lg(y)) for a in A for x in Gs for y in Gs
                         if th(a, x, y)))
    flag("v_coalg", _first((lg(x), lg(a), lg(b)) for x in Gs for a in A for b in A
                           if ga(x, a, b)))
    flag("u_alg", _first((lh(j), lh(b), lh(c)) for j in Hs for b in B for c in B
                         if thp(j, b, c)))
    flag("u_coalg", _first((lh(b), lh(x), lh(y)) for b in B for x in Hs for y in Hs
                           if gap(b, x, y)))
    maps = us is not None and vm is not None
    if maps:
        tg = G.table
        flag("r_coalg", _first((lg(x), lh(mm), lh(nn), lg(k), lg(l))
                               for x in Gs for mm in Hs for nn in Hs for k in A for l in A
                               if ga(x, tg[us[mm]][k], tg[us[nn]][l]) != gap(vm[x], mm, nn)))
        flag("r_alg", _first((lh(h), lg(x), lg(y)) for h in Hs for x in Gs for y in Gs
                             if th(us[h], x, y) != thp(h, vm[x], vm[y])))
    else:
        flag("r_coalg", None, False)
        flag("r_alg", None, False)
    if us is not None:
        flag("eta_pullback", _first((lh(a), lh(b), lh(c)) for a in Hs for b in Hs for c in Hs
                                    if w(us[a], us[b], us[c]) != e(a, b, c)))
    else:
        flag("eta_pullback", None, False)
    flag("omega_trivial_on_A", _first((lg(a), lg(b), lg(c)) for a in A for b in A for c in A
                                      if w(a, b, c)))
    flag("omega_coset_invariant", None if is_inflation_invariant(w, A) else "see inflation_failure")

    # v(x) p(e_g) = p(e_{x g x^-1}) v(x) in kH
    bad = None
    for x in Gs:
        vx = q.v_of(x)
        for g in Gs:
            lhs = _ga_mul(H, vx, p.row(g, fld))
            rhs = _ga_mul(H, p.row(G.conj(x, g), fld), vx)
            if lhs != rhs:
                bad = (lg(x), lg(g))
                break
        if bad:
            break
    flag("vp_conjugation", bad)

    # v(x) acting by conjugation on u(e_g) equals u(e_{x g x^-1})
    bad = None
    for x in Gs:
        vx = q.v_of(x)
        for g in Gs:
            lhs: dict = {}
            for y, vc in vx.items():
                for h, uc in q.u_of(g).items():
                    _acc(lhs, H.conj(y, h), vc * uc)
            if lhs != q.u_of(G.conj(x, g)):
                bad = (lg(x), lg(g))
                break
        if bad:
            break
    flag("uv_rel", bad)

    inv = G.inv
    flag("antipode_cond", _first(
        (lg(a), lg(g), lg(x)) for a in A for g in Gs for x in Gs
        if th(G.mul(a, inv(g)), x, inv(x)) + ga(x, G.mul(g, inv(a)), G.mul(a, inv(g)))
        != th(inv(g), x, inv(x)) + ga(x, g, inv(g))))

    if maps:
        bad = None
        for x in Gs:
            y = vm[x]
            yi = vm[inv(x)]
            for j in Hs:
                val = q.r_coeff(x, j) * q.r_coeff(inv(x), H.rconj(j, y)) * fld.embed_phase(
                    thp(j, y, yi) - th(us[j], x, inv(x)))
                if val != fld.one:
                    bad = (lg(x), lh(j))
                    break
            if bad:
                break
        flag("r_invertible", bad)
    else:
        flag("r_invertible", None, False)
    return rep


PROPERTY_FLAGS = ("v_alg", "v_coalg", "u_alg", "u_coalg", "r_coalg", "r_alg", "eta_pullback",
                  "omega_trivial_on_A", "omega_coset_invariant", "vp_conjugation", "uv_rel",
                  "antipode_cond", "r_invertible")


def kappa_xi(q: Quadruple, w: Cocycle3, e: Cocycle3, x: int):
    """``kappa_x`` and ``xi_x`` as exponent tables plus the exhaustive relation check."""
    us, vm = q.u_star(), q.v_map()
    if us is None or vm is None:
        raise ComponentError("u* and v must be set maps")
    G, H = q.G, q.H
    ga, gap = w.phases.gamma, e.phases.gamma
    Hs = range(H.order)
    y = vm[x]
    kappa = {(m, n): (ga(x, us[m], us[n]) - gap(y, m, n)) % 1 for m in Hs for n in Hs}

    def num(m):
        return us[H.rconj(m, y)]

    def den(m):
        return G.rconj(us[m], x)

    xi = {(m, n, k): (w(num(m), num(n), num(k)) - w(den(m), den(n), den(k))) % 1
          for m in Hs for n in Hs for k in Hs}
    mul = H.mul
    ok = all((kappa[m, n] + kappa[mul(m, n), k] - kappa[n, k] - kappa[m, mul(n, k)]
              - xi[m, n, k]) % 1 == 0 for m in Hs for n in Hs for k in Hs)
    return kappa, xi, ok


# -- maps into and out of the auxiliary algebras ---------------------------------------------

def restrict_algebra(alg: PhaseAlgebra, keep: Sequence[int], labels: Sequence[str],
                     name: str) -> PhaseAlgebra:
    """Structure tables of ``alg`` restricted to the basis vectors ``keep``.

    Terms leaving ``keep`` are dropped, so this is a sub-algebra when the span is
    closed and a quotient when the complement is an ideal; the axiom suite decides.
    """
    pos = {k: i for i, k in enumerate(keep)}
    prod, cop, anti = [], [], []
    for i in keep:
        prod.append({pos[j]: (pos[k], ph) for j, (k, ph) in alg.prod[i].items()
                     if j in pos and k in pos})
        cop.append([(pos[j], pos[k], ph) for j, k, ph in alg.cop[i] if j in pos and k in pos])
        j, ph = alg.anti[i]
        if j not in pos:
            raise ComponentError("antipode leaves the retained basis")
        anti.append((pos[j], ph))

    def sub(d):
        return {tuple(pos[i] for i in k): ph for k, ph in d.items() if all(i in pos for i in k)}

    return PhaseAlgebra(
        alg.field, len(keep), prod=prod, key=[alg.key[i] for i in keep],
        need=[alg.need[i] for i in keep], unit=[pos[i] for i in alg.unit_support if i in pos],
        cop=cop, counit=[alg.counit_values[i] for i in keep], anti=anti,
        phi=sub(alg.phi_phases), phi_inv=sub(alg.phi_inv_phases),
        alpha={pos[i]: ph for i, ph in alg.alpha_phases.items() if i in pos},
        beta={pos[i]: ph for i, ph in alg.beta_phases.items() if i in pos},
        labels=labels, name=name)


@dataclass
class AuxAlgebra:
    kind: str              # "quotient" or "embedding"
    algebra: PhaseAlgebra
    morphism: DoubleMap    # id⊗p into D^e(H), or p⊗id out of D^w(G)
    double: TwistedDouble


def build_quotient_algebra(p: PComponent, e: Cocycle3, modulus: int | None = None) -> AuxAlgebra:
    """``k^H #_p^e k^A`` with basis ``e_h # chi_b`` and its embedding ``id⊗p``."""
    H = p.H
    d = TwistedDouble(H, e, modulus or default_modulus(e.denominator, p.modulus, H.order))
    m = H.order
    keep = [h * m + b for h in range(m) for b in p.B]
    labels = [f"e[{H.label(h)}]#chi[{H.label(b)}]" for h in range(m) for b in p.B]
    alg = restrict_algebra(d, keep, labels, "k^H #_p k^A")
    one = d.field.one
    f = DoubleMap(alg, d, [{k: one} for k in keep])
    return AuxAlgebra("quotient", alg, f, d)


def build_embedding_algebra(p: PComponent, w: Cocycle3, modulus: int | None = None) -> AuxAlgebra:
    """``kB #_p^w kG`` with basis ``p(e_a) # x`` and the surjection ``p⊗id``."""
    G = p.G
    if not G.is_normal(p.A):
        raise ComponentError("A is not normal in G")
    d = TwistedDouble(G, w, modulus or default_modulus(w.denominator, p.modulus, G.order))
    n = G.order
    keep = [a * n + x for a in p.A for x in range(n)]
    labels = [f"p(e[{G.label(a)}])#{G.label(x)}" for a in p.A for x in range(n)]
    alg = restrict_algebra(d, keep, labels, "kB #_p kG")
    pos = {k: i for i, k in enumerate(keep)}
    one = d.field.one
    f = DoubleMap(d, alg, [{pos[k]: one} if k in pos else {} for k in range(n * n)])
    return AuxAlgebra("embedding", alg, f, d)


def is_hopf(alg: PhaseAlgebra) -> bool:
    """Trivial coassociator, alpha and beta: an ordinary Hopf algebra."""
    return not any(alg.phi_phases.values()) and not any(alg.alpha_phases.values()) \
        and not any(alg.beta_phases.values()) \
        and set(alg.phi_phases) == set(itertools.product(alg.unit_support, repeat=3)) \
        and set(alg.beta_phases) == set(alg.unit_support)


def group_algebra(H: FiniteGroup, fld: CyclotomicField) -> PhaseAlgebra:
    """``kH`` as a quasi-Hopf algebra with trivial coassociator."""
    m = H.order
    return PhaseAlgebra(
        fld, m, prod=[{y: (H.mul(x, y), 0) for y in range(m)} for x in range(m)],
        key=[0] * m, need=[0] * m, unit=[0], cop=[[(x, x, 0)] for x in range(m)],
        counit=[1] * m, anti=[(H.inv(x), 0) for x in range(m)], phi={(0, 0, 0): 0},
        phi_inv={(0, 0, 0): 0}, alpha={0: 0}, beta={0: 0},
        labels=list(H.labels), name="kH")


def ev1_projection(f: DoubleMap) -> DoubleMap:
    """``(ev_1 ⊗ id) ∘ f``: the map ``e_g # x -> p(e_g) v(x)`` into ``kH``."""
    tgt = f.target
    m = tgt.group.order
    kh = group_algebra(tgt.group, tgt.field)
    cols = [{k: c for k, c in col.items() if k < m} for col in f.cols]
    return DoubleMap(f.source, kh, cols)


# -- the remarks' auxiliary data -----------------------------------------------------------

def _kb_from_A(p: PComponent, f: Mapping[int, Cyclotomic], fld) -> dict:
    return apply_p(p, f, fld)


def beta_two_cocycle(p: PComponent, w: Cocycle3, fld: CyclotomicField | None = None):
    """``beta(x, y) = p(sum_a theta_a(x, y) e_a)`` in ``kB`` and a check of its cocycle law.

    Returns ``(table, report)``; ``table[(x, y)]`` is ``{b: coeff}``.
    """
    G = p.G
    if not G.is_normal(p.A):
        raise ComponentError("A is not normal in G")
    fld = fld or field(default_modulus(w.denominator, p.modulus))
    th = w.phases.theta
    Gs = range(G.order)
    beta = {(x, y): apply_p(p, {a: fld.embed_phase(th(a, x, y)) for a in p.A}, fld)
            for x in Gs for y in Gs}
    # x acting on kB: x . p(e_a) = p(e_{x a x^-1}); on b use b = |A| sum_c p(c^-1, b) p(e_c)
    act_b = {}
    for x in Gs:
        for b in p.B:
            chi = chi_to_std(p, b, fld)
            act_b[(x, b)] = apply_p(p, {G.conj(x, c): k for c, k in chi.items()}, fld)

    def act(x, elem):
        out: dict = {}
        for b, c in elem.items():
            for b2, c2 in act_b[(x, b)].items():
                _acc(out, b2, c * c2)
        return out

    H = p.H
    rep = Report("beta 2-cocycle")
    bad = None
    for x in Gs:
        for y in Gs:
            for z in Gs:
                lhs = _ga_mul(H, beta[(x, y)], beta[(G.mul(x, y), z)])
                rhs = _ga_mul(H, beta[(x, G.mul(y, z))], act(x, beta[(y, z)]))
                if lhs != rhs:
                    bad = (G.label(x), G.label(y), G.label(z))
                    break
            if bad:
                break
        if bad:
            break
    rep.add("two_cocycle", bad is None, bad)
    unit = {0: fld.one}
    rep.add("normalized", all(beta[(0, x)] == unit and beta[(x, 0)] == unit for x in Gs))
    return beta, rep


def T_elements(p: PComponent, w: Cocycle3, fld: CyclotomicField | None = None):
    """``T(x) = sum gamma_x(g t^-1, t) p(e_{g t^-1}) ⊗ p(e_t)`` and its inverse.

    Returns ``(T, T_inv, report)`` with tensors as ``{(b1, b2): coeff}``.
    """
    G, H = p.G, p.H
    if not G.is_normal(p.A):
        raise ComponentError("A is not normal in G")
    fld = fld or field(default_modulus(w.denominator, p.modulus))
    ga = w.phases.gamma
    rows = {a: p.row(a, fld) for a in p.A}

    def build(x, sign):
        out: dict = {}
        for s in p.A:
            for t in p.A:
                c = fld.embed_phase(sign * ga(x, s, t))
                for b1, c1 in rows[s].items():
                    for b2, c2 in rows[t].items():
                        _acc(out, (b1, b2), c * c1 * c2)
        return out

    T = {x: build(x, 1) for x in range(G.order)}
    Ti = {x: build(x, -1) for x in range(G.order)}

    def mul2(s, t):
        out: dict = {}
        for (a1, a2), c in s.items():
            for (b1, b2), d in t.items():
                _acc(out, (H.mul(a1, b1), H.mul(a2, b2)), c * d)
        return out

    one = {(0, 0): fld.one}
    rep = Report("T elements")
    bad = next((G.label(x) for x in range(G.order)
                if mul2(T[x], Ti[x]) != one or mul2(Ti[x], T[x]) != one), None)
    rep.add("invertible", bad is None, bad)
    rep.add("T(1)=1⊗1", T[0] == one)
    return T, Ti, rep
