"""Linear maps between monomial quasi-Hopf algebras and the morphism checkers.

A :class:`DoubleMap` is stored column by column: column ``i`` is the image of
source basis element ``i``.  The checkers test the defining identities of a
quasi-bialgebra / quasi-Hopf morphism directly on basis elements, and so act
as oracles that do not depend on any component decomposition.
"""
from __future__ import annotations

import hashlib
import itertools
import math
from typing import Callable, Iterable, Mapping

from .algebra import PhaseAlgebra, Tensor, _acc
from .reports import Report
from .scalars import Cyclotomic


class DoubleMap:
    """A linear map ``source -> target`` given by sparse exact columns."""

    __slots__ = ("source", "target", "cols", "_items", "_mono", "_den", "_hash")

    def __init__(self, source: PhaseAlgebra, target: PhaseAlgebra,
                 cols: Iterable[Mapping[int, Cyclotomic]]):
        self.source, self.target = source, target
        self.cols = [{r: c for r, c in col.items() if c} for col in cols]
        if len(self.cols) != source.dim:
            raise ValueError("number of columns does not match the source dimension")
        for col in self.cols:
            for r in col:
                if not 0 <= r < target.dim:
                    raise ValueError(f"row {r} outside the target")
        self._items = [sorted(col.items()) for col in self.cols]
        # integer monomial form: entry = (n / den) * zeta^k, per column (None if impossible)
        monos = [[(r, c.monomial()) for r, c in col] for col in self._items]
        den = math.lcm(1, *(mq[0].denominator for col in monos for _, mq in col if mq))
        self._den = den
        self._mono = [None if any(mq is None for _, mq in col) else
                      [(r, int(mq[0] * den), mq[1]) for r, mq in col] for col in monos]
        self._hash = None

    # -- constructors --------------------------------------------------------
    @classmethod
    def identity(cls, alg: PhaseAlgebra, target: PhaseAlgebra | None = None) -> DoubleMap:
        one = alg.field.one
        return cls(alg, target or alg, [{i: one} for i in range(alg.dim)])

    @classmethod
    def from_images(cls, source: PhaseAlgebra, target: PhaseAlgebra,
                    image: Callable[[int], Tensor]) -> DoubleMap:
        return cls(source, target, [{k[0]: c for k, c in image(i).terms.items()}
                                    for i in range(source.dim)])

    def reinterpret(self, source: PhaseAlgebra, target: PhaseAlgebra) -> DoubleMap:
        """The same matrix between other algebras of the same dimensions."""
        return DoubleMap(source, target, self.cols)

    # -- basic queries ---------------------------------------------------------
    def column(self, i: int) -> Tensor:
        return Tensor(self.target, 1, {(r,): c for r, c in self.cols[i].items()})

    def entry(self, row: int, col: int) -> Cyclotomic:
        return self.cols[col].get(row, self.target.field.zero)

    def entries(self):
        for i, col in enumerate(self._items):
            for r, c in col:
                yield r, i, c

    def is_monomial(self) -> bool:
        return all(len(c) == 1 for c in self.cols)

    def __eq__(self, other):
        return isinstance(other, DoubleMap) and self.source.dim == other.source.dim \
            and self.target.dim == other.target.dim and self.cols == other.cols

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(tuple(sorted(c.items())) for c in self.cols))
        return self._hash

    def content_hash(self) -> str:
        """Stable digest of the exact matrix entries."""
        h = hashlib.sha256()
        for r, i, c in self.entries():
            h.update(f"{i}:{r}:{c.field.modulus}:{c.num}:{c.den};".encode())
        return h.hexdigest()[:16]

    def first_difference(self, other: DoubleMap):
        for i in range(len(self.cols)):
            if self.cols[i] != other.cols[i]:
                return self.source.label(i)
        return None

    def __repr__(self):
        return f"DoubleMap({self.source.dim}->{self.target.dim}, nnz={sum(map(len, self.cols))})"

    # -- linear algebra ----------------------------------------------------------
    def apply(self, x: Tensor) -> Tensor:
        """``f^{⊗k}`` applied to a tensor of arity ``k``."""
        fld = self.target.field
        m = fld.modulus
        mono = self._mono
        fast, slow = [], []
        for key, c in x.terms.items():
            if c.field is not fld:
                c = c.promote(m)
            mc = c.monomial()
            if mc is not None and all(mono[i] is not None for i in key):
                fast.append((key, mc))
            else:
                slow.append((key, c))
        out: dict = {}
        if fast:
            lc = math.lcm(1, *(q.denominator for _, (q, _) in fast))
            sums: dict = {}
            for key, (q, k0) in fast:
                base = q.numerator * (lc // q.denominator)
                _accumulate(sums, [mono[i] for i in key], base, k0, m)
            den = self._den ** x.arity * lc
            red = fld.red_sparse
            for rows, bucket in sums.items():
                vec = [0] * fld.degree
                for k, n in bucket.items():
                    if n:
                        for i, r in red[k]:
                            vec[i] += n * r
                _acc(out, rows, Cyclotomic(fld, vec, den))
        items = self._items
        for key, c in slow:
            for combo in itertools.product(*(items[i] for i in key)):
                coeff = c
                for _, v in combo:
                    coeff = coeff * v
                _acc(out, tuple(r for r, _ in combo), coeff)
        return Tensor(self.target, x.arity, out)

    __call__ = apply

    def compose(self, other: DoubleMap) -> DoubleMap:
        """``self ∘ other``: apply ``other`` first."""
        if other.target.dim != self.source.dim:
            raise ValueError("dimension mismatch in composition")
        cols = []
        for col in other._items:
            t = Tensor(other.target, 1, {(r,): c for r, c in col})
            cols.append({k[0]: c for k, c in self.apply(t).terms.items()})
        return DoubleMap(other.source, self.target, cols)

    def rank(self) -> int:
        """Exact rank by division-free elimination over the cyclotomic field."""
        rows: dict[int, dict[int, Cyclotomic]] = {}
        for i, col in enumerate(self.cols):        # work with the transpose: one row per column
            rows[i] = dict(col)
        pending = [r for r in rows.values() if r]
        rank = 0
        while pending:
            piv_row = min(pending, key=lambda r: (len(r), min(r)))
            pending.remove(piv_row)
            pc = min(piv_row)
            pv = piv_row[pc]
            rank += 1
            nxt = []
            for r in pending:
                a = r.get(pc)
                if a is not None:
                    new = {}
                    for k in set(r) | set(piv_row):
                        v = r.get(k, None)
                        w = piv_row.get(k, None)
                        val = (v * pv if v is not None else None)
                        if w is not None:
                            val = (val - a * w) if val is not None else -(a * w)
                        if val:
                            new[k] = val
                    r = new
                if r:
                    nxt.append(r)
            pending = nxt
        return rank

    def is_bijective(self) -> bool:
        if self.source.dim != self.target.dim:
            return False
        if self.is_monomial():
            return len({next(iter(c)) for c in self.cols}) == self.source.dim
        return self.rank() == self.source.dim

    def inverse(self) -> DoubleMap:
        """Exact inverse by Gauss-Jordan elimination."""
        n = self.source.dim
        if self.target.dim != n:
            raise ValueError("non-square map has no inverse")
        fld = self.target.field
        # dense augmented rows of the matrix (rows = target index)
        mat = [[self.entry(r, c) for c in range(n)] + [fld.one if r == k else fld.zero
                                                       for k in range(n)]
               for r in range(n)]
        for c in range(n):
            piv = next((r for r in range(c, n) if mat[r][c]), None)
            if piv is None:
                raise ValueError("map is not invertible")
            mat[c], mat[piv] = mat[piv], mat[c]
            pinv = mat[c][c].inverse()
            mat[c] = [v * pinv if v else v for v in mat[c]]
            for r in range(n):
                if r != c and mat[r][c]:
                    f = mat[r][c]
                    mat[r] = [v - f * w if w else v for v, w in zip(mat[r], mat[c])]
        cols = [{r: mat[r][n + c] for r in range(n) if mat[r][n + c]} for c in range(n)]
        return DoubleMap(self.target, self.source, cols)


def _accumulate(sums: dict, lists, base: int, k0: int, m: int):
    """Add every product of one entry per list into ``sums[rows][exponent]``."""
    if len(lists) == 1:
        for r, n, k in lists[0]:
            b = sums.setdefault((r,), {})
            kk = (k0 + k) % m
            b[kk] = b.get(kk, 0) + base * n
    elif len(lists) == 2:
        l1, l2 = lists
        for r1, n1, k1 in l1:
            b1, e1 = base * n1, k0 + k1
            for r2, n2, k2 in l2:
                b = sums.setdefault((r1, r2), {})
                kk = (e1 + k2) % m
                b[kk] = b.get(kk, 0) + b1 * n2
    elif len(lists) == 3:
        l1, l2, l3 = lists
        for r1, n1, k1 in l1:
            b1, e1 = base * n1, k0 + k1
            for r2, n2, k2 in l2:
                b2, e2 = b1 * n2, e1 + k2
                for r3, n3, k3 in l3:
                    b = sums.setdefault((r1, r2, r3), {})
                    kk = (e2 + k3) % m
                    b[kk] = b.get(kk, 0) + b2 * n3
    else:
        for combo in itertools.product(*lists):
            n, k = base, k0
            for _, ni, ki in combo:
                n *= ni
                k += ki
            b = sums.setdefault(tuple(t[0] for t in combo), {})
            kk = k % m
            b[kk] = b.get(kk, 0) + n


def apply(f: DoubleMap, x: Tensor) -> Tensor:
    return f.apply(x)


def compose(f: DoubleMap, g: DoubleMap) -> DoubleMap:
    return f.compose(g)


def is_bijective(f: DoubleMap) -> bool:
    return f.is_bijective()


# -- checkers ----------------------------------------------------------------------

QB_FLAGS = ("unital", "algebra", "coassociator", "comultiplication", "counit")
QH_FLAGS = QB_FLAGS + ("antipode", "alpha", "beta")


class MorphismReport(Report):
    """Named flags for the morphism axioms, each with a witness on failure."""

    @property
    def quasi_bialgebra(self) -> bool:
        return all(self[n].ok for n in QB_FLAGS if n in self)

    @property
    def quasi_hopf(self) -> bool:
        return all(self[n].ok for n in QH_FLAGS if n in self) and "antipode" in self


def _check_qb(f: DoubleMap, rep: MorphismReport, stop_early: bool = False):
    src, tgt = f.source, f.target
    dim = src.dim
    lab = src.label
    imgs = [f.column(i) for i in range(dim)]

    rep.add("unital", f.apply(src.one()) == tgt.one())

    bad = None
    prod = src.prod
    zero = tgt.zero()
    for i in range(dim):
        fi = imgs[i]
        pi = prod[i]
        for j in range(dim):
            e = pi.get(j)
            lhs = imgs[e[0]].scale(src.field.root(e[1])) if e is not None else zero
            rhs = tgt.mul(fi, imgs[j])
            if lhs != rhs:
                bad = (lab(i), lab(j))
                break
        if bad:
            break
    rep.add("algebra", bad is None, bad)
    if stop_early and bad:
        return

    ok = f.apply(src.coassociator()) == tgt.coassociator()
    rep.add("coassociator", ok, None if ok else "phi")
    if stop_early and not ok:
        return

    bad = None
    for i in range(dim):
        if f.apply(src.comultiply(src.basis(i))) != tgt.comultiply(imgs[i]):
            bad = lab(i)
            break
    rep.add("comultiplication", bad is None, bad)

    bad = None
    for i in range(dim):
        if tgt.counit(imgs[i]) != src.counit_values[i]:
            bad = lab(i)
            break
    rep.add("counit", bad is None, bad)


def check_quasi_bialgebra_morphism(f: DoubleMap, stop_early: bool = False) -> MorphismReport:
    rep = MorphismReport("quasi-bialgebra morphism")
    _check_qb(f, rep, stop_early)
    return rep


def check_quasi_hopf_morphism(f: DoubleMap, stop_early: bool = False,
                              include_bijective: bool = False) -> MorphismReport:
    rep = MorphismReport("quasi-Hopf morphism")
    _check_qb(f, rep, stop_early)
    if stop_early and not rep.ok:
        return rep
    src, tgt = f.source, f.target
    bad = None
    for i in range(src.dim):
        if f.apply(src.antipode(src.basis(i))) != tgt.antipode(f.column(i)):
            bad = src.label(i)
            break
    rep.add("antipode", bad is None, bad)
    rep.add("alpha", f.apply(src.alpha()) == tgt.alpha())
    rep.add("beta", f.apply(src.beta()) == tgt.beta())
    if include_bijective:
        rep.add("bijective", f.is_bijective())
    return rep


def is_automorphism(f: DoubleMap) -> bool:
    """Definition-level oracle: bijective quasi-Hopf morphism."""
    if not f.is_bijective():
        return False
    return check_quasi_hopf_morphism(f, stop_early=True).ok


def transports_r_matrix(f: DoubleMap) -> bool:
    return f.apply(f.source.r_matrix()) == f.target.r_matrix()


def rigid_oracle(f: DoubleMap) -> Report:
    """Bijective quasi-bialgebra morphism whose matrix is also a Hopf map of untwisted doubles."""
    rep = Report("rigid isomorphism")
    rep.add("bijective", f.is_bijective())
    qb = check_quasi_bialgebra_morphism(f, stop_early=True)
    rep.add("quasi_bialgebra", qb.ok, [c.name for c in qb.failures()] or None)
    plain = f.reinterpret(f.source.untwisted(), f.target.untwisted())
    hopf = check_quasi_hopf_morphism(plain, stop_early=True)
    rep.add("untwisted_hopf", hopf.ok, [c.name for c in hopf.failures()] or None)
    return rep


def check_rigid(f: DoubleMap) -> Report:
    """Rigidity of a quasi-bialgebra isomorphism of twisted doubles."""
    rep = rigid_oracle(f)
    if not (rep["bijective"].ok and rep["quasi_bialgebra"].ok):
        raise ValueError("map is not a quasi-bialgebra isomorphism")
    return rep


def is_rigid(f: DoubleMap) -> bool:
    return rigid_oracle(f).ok
