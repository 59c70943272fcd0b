"""Finite groups as Cayley tables.

Elements are dense indices ``0..n-1`` with the identity at index 0.  All
constructions validate their tables; homomorphisms, characters and
automorphisms are found by brute force over generator images, which is
adequate at desk scale.
"""
from __future__ import annotations

import itertools
import math
from collections import deque
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

# Enumeration bounds (group orders).
MAX_AUT_ORDER = 16
MAX_HOM_ORDER = 64


class GroupError(ValueError):
    """Invalid group data or an unsupported group operation."""


class FiniteGroup:
    """A finite group given by its multiplication table."""

    __slots__ = ("order", "table", "inverse", "labels", "__dict__")

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 validate: bool = True):
        n = len(table)
        if n == 0:
            raise GroupError("a group needs at least one element")
        self.order = n
        self.table = tuple(tuple(int(v) for v in row) for row in table)
        if labels is None:
            labels = [str(i) for i in range(n)]
        if len(labels) != n:
            raise GroupError("labels length does not match group order")
        self.labels = tuple(str(s) for s in labels)
        if validate:
            self._validate_shape()
        inv = [None] * n
        for i, row in enumerate(self.table):
            for j, v in enumerate(row):
                if v == 0:
                    inv[i] = j
                    break
        if any(v is None for v in inv):
            raise GroupError("some element has no inverse")
        self.inverse = tuple(inv)
        if validate:
            self.validate()

    def _validate_shape(self):
        n = self.order
        for row in self.table:
            if len(row) != n:
                raise GroupError("table is not square")
            for v in row:
                if not 0 <= v < n:
                    raise GroupError(f"table entry {v} out of range")

    def validate(self):
        """Check identity, inverse and associativity invariants exhaustively."""
        n, t = self.order, self.table
        for i in range(n):
            if t[0][i] != i or t[i][0] != i:
                raise GroupError("index 0 is not the identity")
            if t[i][self.inverse[i]] != 0 or t[self.inverse[i]][i] != 0:
                raise GroupError(f"element {i} has no two-sided inverse")
            if len(set(t[i])) != n:
                raise GroupError(f"row {i} is not a permutation")
        for i in range(n):
            ti = t[i]
            for j in range(n):
                tij = t[ti[j]]
                tj = t[j]
                for k in range(n):
                    if tij[k] != ti[tj[k]]:
                        raise GroupError(f"associativity fails at ({i}, {j}, {k})")

    # -- basic arithmetic -------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conj(self, x: int, g: int) -> int:
        """Return ``x g x^-1``."""
        t = self.table
        return t[t[x][g]][self.inverse[x]]

    def rconj(self, g: int, x: int) -> int:
        """Return ``g^x = x^-1 g x``."""
        t = self.table
        return t[t[self.inverse[x]][g]][x]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inverse[a], -k
        out = 0
        for _ in range(k):
            out = self.table[out][a]
        return out

    def product(self, elems: Iterable[int]) -> int:
        out = 0
        for e in elems:
            out = self.table[out][e]
        return out

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[i][j] == t[j][i] for i in range(self.order) for j in range(i))

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(self.element_order(a) for a in self.elements()))

    def label(self, a: int) -> str:
        return self.labels[a]

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    # -- subgroups ----------------------------------------------------------
    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        """Subgroup generated by ``gens``."""
        gens = [g for g in gens if g != 0]
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = self.table[x][g]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def is_subgroup(self, s: Iterable[int]) -> bool:
        s = set(s)
        if 0 not in s:
            return False
        return all(self.table[a][self.inverse[b]] in s for a in s for b in s)

    def is_normal(self, s: Iterable[int]) -> bool:
        s = set(s)
        return self.is_subgroup(s) and all(self.conj(x, a) in s for x in self.elements() for a in s)

    def center(self) -> frozenset[int]:
        t = self.table
        return frozenset(z for z in self.elements()
                         if all(t[z][x] == t[x][z] for x in self.elements()))

    def commutator_subgroup(self) -> frozenset[int]:
        t, inv = self.table, self.inverse
        comms = {t[t[a][b]][t[inv[a]][inv[b]]] for a in self.elements() for b in self.elements()}
        return self.generated(comms)

    def generating_set(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by descending element order."""
        span = frozenset([0])
        gens = []
        for a in sorted(self.elements(), key=lambda e: (-self.element_order(e), e)):
            if a not in span:
                gens.append(a)
                span = self.generated(gens)
                if len(span) == self.order:
                    break
        return tuple(gens)

    def subgroup(self, s: Iterable[int]) -> tuple[FiniteGroup, tuple[int, ...]]:
        """Return the subgroup ``s`` as a standalone group plus its embedding."""
        elems = sorted(set(s))
        if not self.is_subgroup(elems):
            raise GroupError("not a subgroup")
        pos = {e: i for i, e in enumerate(elems)}
        table = [[pos[self.table[a][b]] for b in elems] for a in elems]
        return FiniteGroup(table, [self.labels[e] for e in elems], validate=False), tuple(elems)

    def subgroups(self) -> list[frozenset[int]]:
        """All subgroups (by closing subsets of generators; fine at desk scale)."""
        found = {frozenset([0])}
        frontier = [frozenset([0])]
        while frontier:
            nxt = []
            for h in frontier:
                for a in self.elements():
                    if a not in h:
                        k = self.generated(set(h) | {a})
                        if k not in found:
                            found.add(k)
                            nxt.append(k)
            frontier = nxt
        return sorted(found, key=lambda h: (len(h), sorted(h)))

    def quotient_by_normal(self, n: Iterable[int]) -> tuple[FiniteGroup, GroupHom]:
        """Quotient group ``G/N`` with its canonical projection."""
        n = frozenset(n)
        if not self.is_subgroup(n):
            raise GroupError("not a subgroup")
        if not self.is_normal(n):
            raise GroupError("subgroup is not normal")
        coset_of = [-1] * self.order
        reps = []
        for g in self.elements():
            if coset_of[g] < 0:
                for m in n:
                    coset_of[self.table[g][m]] = len(reps)
                reps.append(g)
        table = [[coset_of[self.table[a][b]] for b in reps] for a in reps]
        labels = ["{" + ",".join(self.labels[self.table[r][m]] for m in sorted(n)) + "}"
                  for r in reps]
        q = FiniteGroup(table, labels)
        return q, GroupHom(self, q, coset_of)

    # -- characters ----------------------------------------------------------
    def linear_characters(self) -> list[Character]:
        """All one-dimensional characters, in a deterministic order."""
        m = self.exponent
        cyc = cyclic(m)
        out = []
        for hom in homomorphisms(self, cyc):
            out.append(Character(self, tuple(Fraction(v, m) for v in hom.image)))
        out.sort(key=lambda c: c.values)
        return out

    @cached_property
    def character_group(self) -> tuple[FiniteGroup, tuple[Character, ...]]:
        """The dual group of linear characters, indexed like ``linear_characters``."""
        chars = self.linear_characters()
        pos = {c.values: i for i, c in enumerate(chars)}
        table = [[pos[(a * b).values] for b in chars] for a in chars]
        labels = ["chi" + str(i) for i in range(len(chars))]
        return FiniteGroup(table, labels), tuple(chars)

    # -- automorphisms -------------------------------------------------------
    def automorphisms(self) -> list[GroupHom]:
        if self.order > MAX_AUT_ORDER:
            raise GroupError(f"automorphism enumeration is limited to order <= {MAX_AUT_ORDER}")
        out = [h for h in homomorphisms(self, self) if h.is_bijective()]
        out.sort(key=lambda h: h.image)
        return out

    def central_automorphisms(self) -> list[GroupHom]:
        z = self.center()
        return [h for h in self.automorphisms()
                if all(self.table[h.image[g]][self.inverse[g]] in z for g in self.elements())]

    def inner_automorphisms(self) -> list[GroupHom]:
        seen = {}
        for x in self.elements():
            img = tuple(self.conj(x, g) for g in self.elements())
            seen.setdefault(img, GroupHom(self, self, img))
        return sorted(seen.values(), key=lambda h: h.image)


class GroupHom:
    """A homomorphism given by the images of all source elements."""

    __slots__ = ("source", "target", "image")

    def __init__(self, source: FiniteGroup, target: FiniteGroup, image: Sequence[int],
                 validate: bool = True):
        self.source, self.target = source, target
        self.image = tuple(int(i) for i in image)
        if validate:
            if len(self.image) != source.order:
                raise GroupError("image length does not match source order")
            if not self.is_hom():
                raise GroupError("map is not a homomorphism")

    def __call__(self, g: int) -> int:
        return self.image[g]

    def is_hom(self) -> bool:
        s, t, f = self.source.table, self.target.table, self.image
        if f[0] != 0:
            return False
        n = self.source.order
        return all(f[s[i][j]] == t[f[i]][f[j]] for i in range(n) for j in range(n))

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.image)) == self.source.order

    def kernel(self) -> frozenset[int]:
        return frozenset(g for g, v in enumerate(self.image) if v == 0)

    def compose(self, other: GroupHom) -> GroupHom:
        """``self ∘ other``: apply ``other`` first."""
        return GroupHom(other.source, self.target, [self.image[g] for g in other.image],
                        validate=False)

    def inverse(self) -> GroupHom:
        if not self.is_bijective():
            raise GroupError("homomorphism is not invertible")
        inv = [0] * self.source.order
        for g, h in enumerate(self.image):
            inv[h] = g
        return GroupHom(self.target, self.source, inv, validate=False)

    def __eq__(self, other):
        return isinstance(other, GroupHom) and self.image == other.image \
            and self.source == other.source and self.target == other.target

    def __hash__(self):
        return hash(self.image)

    def __repr__(self):
        return f"GroupHom({list(self.image)})"


class Character:
    """A linear character, stored as exponents in Q/Z."""

    __slots__ = ("group", "values")

    def __init__(self, group: FiniteGroup, values: Sequence[Fraction]):
        self.group = group
        self.values = tuple(Fraction(v) % 1 for v in values)

    def __call__(self, g: int) -> Fraction:
        return self.values[g]

    def __mul__(self, other: Character) -> Character:
        return Character(self.group, [a + b for a, b in zip(self.values, other.values)])

    def is_character(self) -> bool:
        g, v = self.group, self.values
        return v[0] == 0 and all((v[g.mul(a, b)] - v[a] - v[b]) % 1 == 0
                                 for a in g.elements() for b in g.elements())

    def order(self) -> int:
        return math.lcm(*(v.denominator for v in self.values))

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Character({[str(v) for v in self.values]})"


class Bicharacter:
    """A map ``A x B -> Q/Z`` additive in each argument."""

    __slots__ = ("left", "right", "values")

    def __init__(self, left: FiniteGroup, right: FiniteGroup, values):
        self.left, self.right = left, right
        self.values = tuple(tuple(Fraction(v) % 1 for v in row) for row in values)

    def __call__(self, a: int, b: int) -> Fraction:
        return self.values[a][b]

    def __mul__(self, other: Bicharacter) -> Bicharacter:
        return Bicharacter(self.left, self.right,
                           [[x + y for x, y in zip(r1, r2)]
                            for r1, r2 in zip(self.values, other.values)])

    def is_bicharacter(self) -> bool:
        l, r, v = self.left, self.right, self.values
        for a in l.elements():
            for b in r.elements():
                for c in r.elements():
                    if (v[a][r.mul(b, c)] - v[a][b] - v[a][c]) % 1:
                        return False
        for a in l.elements():
            for c in l.elements():
                for b in r.elements():
                    if (v[l.mul(a, c)][b] - v[a][b] - v[c][b]) % 1:
                        return False
        return True

    def is_trivial(self) -> bool:
        return all(v == 0 for row in self.values for v in row)

    def __eq__(self, other):
        return isinstance(other, Bicharacter) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"Bicharacter({[[str(v) for v in row] for row in self.values]})"


# -- constructors -------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    """The cyclic group Z_n, element ``i`` standing for ``c^i``."""
    if n < 1:
        raise GroupError("cyclic order must be positive")
    labels = ["1"] + ["c" if i == 1 else f"c{i}" for i in range(1, n)]
    return FiniteGroup([[(i + j) % n for j in range(n)] for i in range(n)], labels,
                       validate=False)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Row-major product: the pair ``(i, j)`` has index ``i * |b| + j``."""
    nb = b.order
    table = [[a.table[i1][i2] * nb + b.table[j1][j2]
              for i2 in range(a.order) for j2 in range(nb)]
             for i1 in range(a.order) for j1 in range(nb)]
    labels = [f"({a.labels[i]},{b.labels[j]})" for i in range(a.order) for j in range(nb)]
    return FiniteGroup(table, labels, validate=False)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``n`` with rotation ``a`` and reflection ``b``.

    ``a^i b^j`` has index ``i + (n/2) j``; ``b a = a^-1 b``.
    """
    if n < 4 or n % 2:
        raise GroupError("dihedral order must be even and at least 4")
    m = n // 2

    def idx(i, j):
        return i % m + m * (j % 2)

    table = []
    for j in range(2):
        for i in range(m):
            row = []
            for l in range(2):
                for k in range(m):
                    row.append(idx(i + (-1) ** j * k, j + l))
            table.append(row)
    # reorder rows: index i + m j must match row order (i inner, j outer) -- already so
    labels = []
    for j in range(2):
        for i in range(m):
            s = "" if i == 0 else ("a" if i == 1 else f"a{i}")
            s += "b" if j else ""
            labels.append(s or "1")
    return FiniteGroup(table, labels, validate=False)


def trivial_group() -> FiniteGroup:
    return cyclic(1)


# -- homomorphism search --------------------------------------------------------

def extend_to_hom(source: FiniteGroup, gens: Sequence[int], images: Sequence[int],
                  target: FiniteGroup) -> tuple[int, ...] | None:
    """Extend generator images to a homomorphism, or return None if inconsistent.

    Walks the Cayley graph from the identity and checks every edge, which is
    enough to certify the homomorphism property.
    """
    img = [-1] * source.order
    img[0] = 0
    queue = deque([0])
    st, tt = source.table, target.table
    while queue:
        x = queue.popleft()
        fx = img[x]
        for g, h in zip(gens, images):
            y = st[x][g]
            fy = tt[fx][h]
            if img[y] < 0:
                img[y] = fy
                queue.append(y)
            elif img[y] != fy:
                return None
    if min(img) < 0:
        return None
    return tuple(img)


def homomorphisms(source: FiniteGroup, target: FiniteGroup) -> list[GroupHom]:
    """All homomorphisms ``source -> target`` by brute force over generator images."""
    if source.order > MAX_HOM_ORDER or target.order > MAX_HOM_ORDER:
        raise GroupError(f"homomorphism enumeration is limited to order <= {MAX_HOM_ORDER}")
    gens = source.generating_set()
    candidates = []
    for g in gens:
        og = source.element_order(g)
        candidates.append([h for h in target.elements() if og % target.element_order(h) == 0])
    out = []
    for images in itertools.product(*candidates):
        img = extend_to_hom(source, gens, images, target)
        if img is not None:
            out.append(GroupHom(source, target, img, validate=False))
    return out


def bicharacters(left: FiniteGroup, right: FiniteGroup) -> list[Bicharacter]:
    """All bicharacters ``left x right -> Q/Z`` (homomorphisms into the dual of ``right``)."""
    dual, chars = right.character_group
    out = []
    for hom in homomorphisms(left, dual):
        out.append(Bicharacter(left, right, [chars[hom.image[a]].values
                                             for a in left.elements()]))
    out.sort(key=lambda b: b.values)
    return out


def isomorphism(a: FiniteGroup, b: FiniteGroup) -> GroupHom | None:
    """Some isomorphism ``a -> b`` if one exists (generator matching)."""
    if a.order != b.order:
        return None
    for hom in homomorphisms(a, b):
        if hom.is_bijective():
            return hom
    return None
