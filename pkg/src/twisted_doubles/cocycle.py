"""Normalized 3-cocycles with values in U(1), written additively in Q/Z.

Besides validation this module derives the multiplicative and
comultiplicative phases ``theta`` and ``gamma`` that drive the twisted
double, builds coboundaries, pulls cocycles back along homomorphisms, and
decides cohomologousness exactly with a Smith normal form.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .groups import FiniteGroup, GroupHom, cyclic, dihedral, direct_product
from .reports import Report
from .smith import smith_normal_form


class CocycleError(ValueError):
    """Malformed cocycle data."""


def _flatten3(values, n):
    if len(values) == n ** 3 and not isinstance(values[0], (list, tuple)):
        return [Fraction(v) % 1 for v in values]
    if len(values) != n:
        raise CocycleError("table shape does not match the group")
    out = []
    for plane in values:
        if len(plane) != n:
            raise CocycleError("table shape does not match the group")
        for row in plane:
            if len(row) != n:
                raise CocycleError("table shape does not match the group")
            out.extend(Fraction(v) % 1 for v in row)
    return out


class Cocycle3:
    """A function ``G^3 -> Q/Z``; the cocycle law is checked by :func:`validate_cocycle`."""

    __slots__ = ("group", "values", "__dict__")

    def __init__(self, group: FiniteGroup, values):
        self.group = group
        self.values = tuple(_flatten3(list(values), group.order))

    def __call__(self, a: int, b: int, c: int) -> Fraction:
        n = self.group.order
        return self.values[(a * n + b) * n + c]

    @cached_property
    def denominator(self) -> int:
        return math.lcm(1, *(v.denominator for v in self.values))

    def int_values(self, modulus: int) -> tuple[int, ...]:
        """Exponents scaled to integers mod ``modulus``."""
        if modulus % self.denominator:
            raise CocycleError(f"modulus {modulus} does not cover denominator {self.denominator}")
        return tuple(int(v * modulus) % modulus for v in self.values)

    def table(self) -> list:
        n = self.group.order
        return [[[self.values[(a * n + b) * n + c] for c in range(n)] for b in range(n)]
                for a in range(n)]

    def is_trivial(self) -> bool:
        return not any(self.values)

    def is_normalized(self) -> bool:
        n = self.group.order
        return all(self(a, b, c) == 0 for a in range(n) for b in range(n) for c in range(n)
                   if 0 in (a, b, c))

    def __mul__(self, other: Cocycle3) -> Cocycle3:
        return Cocycle3(self.group, [x + y for x, y in zip(self.values, other.values)])

    def inverse(self) -> Cocycle3:
        return Cocycle3(self.group, [-x for x in self.values])

    def __eq__(self, other):
        return isinstance(other, Cocycle3) and self.group == other.group \
            and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Cocycle3(order={self.group.order}, denominator={self.denominator})"

    @cached_property
    def phases(self) -> PhasePair:
        return compute_phases(self)


class Cochain2:
    """A normalized 2-cochain ``G^2 -> Q/Z``."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values):
        n = group.order
        vals = list(values)
        if len(vals) == n and isinstance(vals[0], (list, tuple)):
            vals = [v for row in vals for v in row]
        if len(vals) != n * n:
            raise CocycleError("cochain shape does not match the group")
        self.group = group
        self.values = tuple(Fraction(v) % 1 for v in vals)

    def __call__(self, a: int, b: int) -> Fraction:
        return self.values[a * self.group.order + b]

    def is_normalized(self) -> bool:
        n = self.group.order
        return all(self(0, a) == 0 and self(a, 0) == 0 for a in range(n))

    def table(self) -> list:
        n = self.group.order
        return [[self.values[a * n + b] for b in range(n)] for a in range(n)]

    def __neg__(self):
        return Cochain2(self.group, [-v for v in self.values])

    def __add__(self, other: Cochain2) -> Cochain2:
        return Cochain2(self.group, [x + y for x, y in zip(self.values, other.values)])

    def __eq__(self, other):
        return isinstance(other, Cochain2) and self.values == other.values

    def __hash__(self):
        return hash(self.values)


# -- validation -----------------------------------------------------------------

def cocycle_law_failure(w: Cocycle3) -> tuple[int, int, int, int] | None:
    """First quadruple violating the cocycle law, or None."""
    g = w.group
    n, t = g.order, g.table
    den = w.denominator
    v = [int(x * den) for x in w.values]
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            for c in range(n):
                bc = t[b][c]
                w_abc = v[(a * n + b) * n + c]
                for d in range(n):
                    cd = t[c][d]
                    lhs = w_abc + v[(a * n + bc) * n + d] + v[(b * n + c) * n + d]
                    rhs = v[(ab * n + c) * n + d] + v[(a * n + b) * n + cd]
                    if (lhs - rhs) % den:
                        return (a, b, c, d)
    return None


def validate_cocycle(w: Cocycle3) -> Report:
    rep = Report("cocycle")
    n = w.group.order
    if len(w.values) != n ** 3:
        raise CocycleError("table shape does not match the group")
    bad = next(((a, b, c) for a in range(n) for b in range(n) for c in range(n)
                if 0 in (a, b, c) and w(a, b, c)), None)
    rep.add("normalized", bad is None, bad)
    rep.add("cocycle_law", (q := cocycle_law_failure(w)) is None, q)
    return rep


# -- phases -------------------------------------------------------------------------

@dataclass(frozen=True)
class PhasePair:
    """``theta[g][x][y]`` and ``gamma[x][g][h]`` as flat tuples of exponents."""

    group: FiniteGroup
    theta_values: tuple
    gamma_values: tuple

    def theta(self, g: int, x: int, y: int) -> Fraction:
        n = self.group.order
        return self.theta_values[(g * n + x) * n + y]

    def gamma(self, x: int, g: int, h: int) -> Fraction:
        n = self.group.order
        return self.gamma_values[(x * n + g) * n + h]

    def replace_theta(self, g, x, y, value) -> PhasePair:
        n = self.group.order
        vals = list(self.theta_values)
        vals[(g * n + x) * n + y] = Fraction(value) % 1
        return PhasePair(self.group, tuple(vals), self.gamma_values)


def compute_phases(w: Cocycle3) -> PhasePair:
    g = w.group
    n, t, inv = g.order, g.table, g.inverse
    om = w.values
    theta = [Fraction(0)] * n ** 3
    gamma = [Fraction(0)] * n ** 3
    for a in range(n):
        for x in range(n):
            xinv = inv[x]
            ax = t[t[xinv][a]][x]            # x^-1 a x
            for y in range(n):
                xy = t[x][y]
                xyinv = inv[xy]
                conj = t[t[xyinv][a]][xy]    # (xy)^-1 a (xy)
                theta[(a * n + x) * n + y] = (om[(a * n + x) * n + y]
                                              + om[(x * n + y) * n + conj]
                                              - om[(x * n + ax) * n + y]) % 1
    for x in range(n):
        xinv = inv[x]
        for a in range(n):
            ax = t[t[xinv][a]][x]
            for b in range(n):
                bx = t[t[xinv][b]][x]
                gamma[(x * n + a) * n + b] = (om[(a * n + b) * n + x]
                                              + om[(x * n + ax) * n + bx]
                                              - om[(a * n + x) * n + bx]) % 1
    return PhasePair(g, tuple(theta), tuple(gamma))


def verify_phase_identities(w: Cocycle3, phases: PhasePair | None = None) -> Report:
    """Associativity, quasi-coassociativity and compatibility identities of the phases."""
    ph = phases or w.phases
    g = w.group
    n, t, inv = g.order, g.table, g.inverse
    den = math.lcm(w.denominator, *(v.denominator for v in ph.theta_values),
                   *(v.denominator for v in ph.gamma_values))
    th = [int(v * den) for v in ph.theta_values]
    ga = [int(v * den) for v in ph.gamma_values]
    om = [int(v * den) for v in w.values]
    rc = [[t[t[inv[x]][a]][x] for x in range(n)] for a in range(n)]   # rc[a][x] = a^x

    def first_assoc():
        for a in range(n):
            for x in range(n):
                ax = rc[a][x]
                for y in range(n):
                    xy = t[x][y]
                    base = th[(a * n + x) * n + y]
                    for z in range(n):
                        lhs = base + th[(a * n + xy) * n + z]
                        rhs = th[(a * n + x) * n + t[y][z]] + th[(ax * n + y) * n + z]
                        if (lhs - rhs) % den:
                            return (a, x, y, z)
        return None

    def first_coassoc():
        for x in range(n):
            for a in range(n):
                ax = rc[a][x]
                for b in range(n):
                    bx = rc[b][x]
                    ab = t[a][b]
                    for c in range(n):
                        cx = rc[c][x]
                        lhs = ga[(x * n + a) * n + b] + ga[(x * n + ab) * n + c] \
                            + om[(ax * n + bx) * n + cx]
                        rhs = ga[(x * n + b) * n + c] + ga[(x * n + a) * n + t[b][c]] \
                            + om[(a * n + b) * n + c]
                        if (lhs - rhs) % den:
                            return (x, a, b, c)
        return None

    def first_compat():
        for a in range(n):
            for b in range(n):
                ab = t[a][b]
                for x in range(n):
                    ax, bx = rc[a][x], rc[b][x]
                    for y in range(n):
                        xy = t[x][y]
                        lhs = th[(a * n + x) * n + y] + th[(b * n + x) * n + y] \
                            + ga[(x * n + a) * n + b] + ga[(y * n + ax) * n + bx]
                        rhs = th[(ab * n + x) * n + y] + ga[(xy * n + a) * n + b]
                        if (lhs - rhs) % den:
                            return (a, b, x, y)
        return None

    rep = Report("phase identities")
    unit_bad = next(((a, x, y) for a in range(n) for x in range(n) for y in range(n)
                     if 0 in (a, x, y) and (th[(a * n + x) * n + y] or ga[(a * n + x) * n + y])),
                    None)
    rep.add("phases_normalized", unit_bad is None, unit_bad)
    rep.add("theta_associativity", (q := first_assoc()) is None, q)
    rep.add("gamma_quasi_coassociativity", (q := first_coassoc()) is None, q)
    rep.add("theta_gamma_compatibility", (q := first_compat()) is None, q)
    return rep


# -- coboundaries and cohomology ------------------------------------------------------

def coboundary(beta: Cochain2) -> Cocycle3:
    """``d beta(a,b,c) = beta(b,c) + beta(a,bc) - beta(ab,c) - beta(a,b)``."""
    g = beta.group
    n, t = g.order, g.table
    vals = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                vals.append(beta(b, c) + beta(a, t[b][c]) - beta(t[a][b], c) - beta(a, b))
    return Cocycle3(g, vals)


def coboundary_matrix(g: FiniteGroup) -> list[list[int]]:
    """Integer matrix of ``d`` on normalized 2-cochains.

    Rows are all triples ``(a,b,c)`` in lexicographic order; columns are pairs
    ``(a,b)`` with ``a, b != 1`` in lexicographic order.
    """
    n, t = g.order, g.table
    m = n - 1

    def col(a, b):
        return (a - 1) * m + (b - 1) if a and b else None

    rows = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                row = [0] * (m * m)
                for (x, y, s) in ((b, c, 1), (a, t[b][c], 1), (t[a][b], c, -1), (a, b, -1)):
                    k = col(x, y)
                    if k is not None:
                        row[k] += s
                rows.append(row)
    return rows


@dataclass
class Decision:
    cohomologous: bool
    witness: Cochain2 | None = None
    certificate_row: int | None = None
    certificate: tuple[int, ...] | None = None
    invariant_factors: tuple[int, ...] = ()

    def to_json(self) -> dict:
        from .io import cochain_to_json
        return {"cohomologous": self.cohomologous,
                "witness": None if self.witness is None else cochain_to_json(self.witness),
                "certificate_row": self.certificate_row}


def cohomologous(w1: Cocycle3, w2: Cocycle3) -> Decision:
    """Decide whether ``w2 = w1 + d beta`` for a normalized 2-cochain ``beta``.

    Solves ``D x = t (mod 1)`` with ``t = w2 - w1`` through ``U D V = S``.
    A NO answer comes with a row ``u`` of ``U`` such that ``u D = 0`` and
    ``u . t`` is not an integer.
    """
    if w1.group != w2.group:
        raise CocycleError("cocycles live on different groups")
    g = w1.group
    n = g.order
    m = n - 1
    if m == 0:
        return Decision(True, Cochain2(g, [0]))
    d = coboundary_matrix(g)
    s, u, v = smith_normal_form(d)
    diag = [s[i][i] for i in range(min(len(s), len(s[0])))]
    rank = sum(1 for x in diag if x)
    diff = [b - a for a, b in zip(w1.values, w2.values)]
    den = math.lcm(1, *(x.denominator for x in diff))
    tint = [int(x * den) for x in diff]
    ut = [sum(r[k] * tint[k] for k in range(len(tint)) if r[k]) for r in u]
    for i in range(rank, len(ut)):
        if ut[i] % den:
            return Decision(False, certificate_row=i, certificate=tuple(u[i]),
                            invariant_factors=tuple(diag[:rank]))
    y = [Fraction(ut[i], den * diag[i]) for i in range(rank)] + [Fraction(0)] * (m * m - rank)
    x = [sum((v[j][k] * y[k] for k in range(m * m) if v[j][k]), Fraction(0)) for j in range(m * m)]
    vals = [[Fraction(0)] * n for _ in range(n)]
    for a in range(1, n):
        for b in range(1, n):
            vals[a][b] = x[(a - 1) * m + (b - 1)]
    beta = Cochain2(g, vals)
    if w1 * coboundary(beta) != w2:
        raise ArithmeticError("internal error: cohomology witness does not verify")
    return Decision(True, beta, invariant_factors=tuple(diag[:rank]))


def certificate_holds(w1: Cocycle3, w2: Cocycle3, row: Sequence[int]) -> bool:
    """Independent check of a NO certificate: ``u D = 0`` and ``u . (w2 - w1)`` not integral."""
    d = coboundary_matrix(w1.group)
    cols = len(d[0]) if d else 0
    if any(sum(row[i] * d[i][j] for i in range(len(d)) if row[i]) for j in range(cols)):
        return False
    val = sum((row[i] * (b - a) for i, (a, b) in enumerate(zip(w1.values, w2.values)) if row[i]),
              Fraction(0))
    return val.denominator != 1


# -- pullbacks ------------------------------------------------------------------------

def pullback(w: Cocycle3, f: GroupHom) -> Cocycle3:
    """``(x,y,z) -> w(f(x), f(y), f(z))`` on the source of ``f``."""
    if f.target != w.group:
        raise CocycleError("homomorphism target is not the cocycle's group")
    n = f.source.order
    im = f.image
    return Cocycle3(f.source, [w(im[a], im[b], im[c])
                               for a in range(n) for b in range(n) for c in range(n)])


def inflate(w: Cocycle3, proj: GroupHom) -> Cocycle3:
    """Inflation along a surjection ``G -> Q``."""
    if set(proj.image) != set(range(proj.target.order)):
        raise CocycleError("projection is not surjective")
    return pullback(w, proj)


def act_by_automorphism(w: Cocycle3, v: GroupHom) -> Cocycle3:
    """``w^v(x,y,z) = w(v(x), v(y), v(z))``."""
    if not v.is_bijective() or v.source != v.target:
        raise CocycleError("not an automorphism")
    return pullback(w, v)


def inflation_failure(w: Cocycle3, a: Iterable[int]) -> tuple | None:
    """First ``(a1,x,a2,y,a3,z)`` with ``w(a1 x, a2 y, a3 z) != w(x,y,z)``, or None."""
    g = w.group
    t, n = g.table, g.order
    a = sorted(set(a))
    for x in range(n):
        for y in range(n):
            for z in range(n):
                base = w(x, y, z)
                for a1 in a:
                    ax = t[a1][x]
                    for a2 in a:
                        by = t[a2][y]
                        for a3 in a:
                            if w(ax, by, t[a3][z]) != base:
                                return (a1, x, a2, y, a3, z)
    return None


def is_inflation_invariant(w: Cocycle3, a: Iterable[int]) -> bool:
    return inflation_failure(w, a) is None


def trivial_cocycle(g: FiniteGroup) -> Cocycle3:
    return Cocycle3(g, [0] * g.order ** 3)


# -- catalog --------------------------------------------------------------------------

def klein_four() -> FiniteGroup:
    """``<a> x <b>`` with ``a = (c,1)`` at index 2 and ``b = (1,c)`` at index 1."""
    g = direct_product(cyclic(2), cyclic(2))
    return FiniteGroup(g.table, ["1", "b", "a", "ab"], validate=False)


def d8_reflection_automorphism(g: FiniteGroup) -> GroupHom:
    """The automorphism ``a -> a, b -> ba`` of the dihedral group of order 8."""
    from .groups import extend_to_hom
    a, b = g.index_of("a"), g.index_of("b")
    ba = g.mul(b, a)
    img = extend_to_hom(g, (a, b), (a, ba), g)
    return GroupHom(g, g, img)


def _z2_nontrivial() -> tuple[FiniteGroup, Cocycle3]:
    g = cyclic(2)
    vals = [0] * 8
    vals[7] = Fraction(1, 2)
    return g, Cocycle3(g, vals)


def _z4_standard() -> tuple[FiniteGroup, Cocycle3]:
    g = cyclic(4)
    vals = [Fraction(l * (j + k - (j + k) % 4), 8) for l in range(4) for j in range(4)
            for k in range(4)]
    return g, Cocycle3(g, vals)


def _d8_quotient() -> tuple[FiniteGroup, Cocycle3]:
    g = dihedral(8)

    def cls(e):       # 1 for a-bar, 2 for b-bar, 0 otherwise
        i, j = e % 4, e // 4
        if j == 0 and i % 2:
            return 1
        if j == 1 and i % 2 == 0:
            return 2
        return 0

    vals = [Fraction(1, 2) if cls(x) and cls(y) and cls(z) else 0
            for x in range(8) for y in range(8) for z in range(8)]
    return g, Cocycle3(g, vals)


def catalog_names() -> list[str]:
    return ["z2-nontrivial", "c2c2-left", "c2c2-right", "z4-standard", "z6-inflated",
            "d8-quotient", "d8-eta"]


ALIASES = {"d8-omega": "d8-quotient"}


def catalog(name: str) -> tuple[FiniteGroup, Cocycle3]:
    name = ALIASES.get(name, name)
    if name == "z2-nontrivial":
        return _z2_nontrivial()
    if name in ("c2c2-left", "c2c2-right"):
        g = klein_four()
        _, w = _z2_nontrivial()
        # first coordinate is index // 2, second is index % 2
        coord = (lambda e: e // 2) if name == "c2c2-left" else (lambda e: e % 2)
        proj = GroupHom(g, w.group, [coord(e) for e in range(4)])
        return g, inflate(w, proj)
    if name == "z4-standard":
        return _z4_standard()
    if name == "z6-inflated":
        g = cyclic(6)
        _, w = _z2_nontrivial()
        q, proj = g.quotient_by_normal(g.generated([2]))
        # identify G/<c^2> with Z_2 via the coset of c
        iso = GroupHom(q, w.group, [0 if e == proj(0) else 1 for e in range(q.order)])
        return g, inflate(w, iso.compose(proj))
    if name == "d8-quotient":
        return _d8_quotient()
    if name == "d8-eta":
        g, w = _d8_quotient()
        return g, act_by_automorphism(w, d8_reflection_automorphism(g))
    raise KeyError(f"unknown catalog cocycle {name!r}")
