"""Finite-dimensional quasi-Hopf algebras with monomial structure constants.

Every structure map of a twisted double (and of the auxiliary algebras
built from a Hopf map ``p``) sends basis elements to a root of unity times a
basis element, or to a sum of such terms.  :class:`PhaseAlgebra` stores those
tables with phases as integer exponents of ``zeta_M``, and :class:`Tensor` is
a sparse element of a tensor power with exact cyclotomic coefficients.

``key``/``need`` give a bucketing hint for sparse products: the product of
basis elements ``i`` and ``j`` can only be non-zero when
``need[i] == key[j]``.
"""
from __future__ import annotations

import itertools
from collections import defaultdict
from typing import Callable, Iterable, Mapping, Sequence

from .reports import Report
from .scalars import Cyclotomic, CyclotomicField


class Tensor:
    """Sparse element of ``A^{⊗arity}``; arity 1 is an ordinary element."""

    __slots__ = ("alg", "arity", "terms")

    def __init__(self, alg: PhaseAlgebra, arity: int, terms: Mapping | None = None):
        self.alg = alg
        self.arity = arity
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    # -- accessors -----------------------------------------------------------
    def coeff(self, *idx: int) -> Cyclotomic:
        return self.terms.get(tuple(idx), self.alg.field.zero)

    def items(self):
        return self.terms.items()

    def __len__(self):
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> list:
        return sorted(self.terms)

    # -- linear structure ------------------------------------------------------
    def __add__(self, other: Tensor) -> Tensor:
        self._same(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        return Tensor(self.alg, self.arity, out)

    def __neg__(self):
        return Tensor(self.alg, self.arity, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: Tensor) -> Tensor:
        return self + (-other)

    def scale(self, c) -> Tensor:
        return Tensor(self.alg, self.arity, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Tensor):
            return self.alg.mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __matmul__(self, other: Tensor) -> Tensor:
        """Tensor product."""
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[k1 + k2] = v1 * v2
        return Tensor(self.alg, self.arity + other.arity, out)

    def _same(self, other: Tensor):
        if other.arity != self.arity or other.alg.dim != self.alg.dim:
            raise ValueError("tensors live in different spaces")

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def first_difference(self, other: Tensor):
        for k in sorted(set(self.terms) | set(other.terms)):
            if self.coeff(*k) != other.coeff(*k):
                return k
        return None

    def __repr__(self):
        lab = self.alg.label
        parts = []
        for k in sorted(self.terms):
            parts.append(f"({self.terms[k]})·" + "⊗".join(lab(i) for i in k))
        return " + ".join(parts) if parts else "0"


def _acc(out: dict, key, val):
    if key in out:
        s = out[key] + val
        if s:
            out[key] = s
        else:
            del out[key]
    elif val:
        out[key] = val


class PhaseAlgebra:
    """A quasi-Hopf algebra whose structure maps are monomial in a fixed basis."""

    def __init__(self, fld: CyclotomicField, dim: int, *, prod: Sequence[Mapping[int, tuple]],
                 key: Sequence, need: Sequence, unit: Sequence[int],
                 cop: Sequence[Sequence[tuple]], counit: Sequence[int],
                 anti: Sequence[tuple], phi: Mapping[tuple, int], phi_inv: Mapping[tuple, int],
                 alpha: Mapping[int, int], beta: Mapping[int, int],
                 labels: Sequence[str] | None = None, name: str = "algebra"):
        self.field = fld
        self.dim = dim
        self.prod = [dict(p) for p in prod]
        self.key = list(key)
        self.need = list(need)
        self.unit_support = list(unit)
        self.cop = [list(c) for c in cop]
        self.counit_values = list(counit)
        self.anti = list(anti)
        self.phi_phases = dict(phi)
        self.phi_inv_phases = dict(phi_inv)
        self.alpha_phases = dict(alpha)
        self.beta_phases = dict(beta)
        self.labels = list(labels) if labels else [f"b{i}" for i in range(dim)]
        self.name = name

    def __repr__(self):
        return f"<{self.name} dim={self.dim} M={self.field.modulus}>"

    def label(self, i: int) -> str:
        return self.labels[i]

    def replace(self, **changes) -> PhaseAlgebra:
        """A copy with some structure tables swapped out (used for negative tests)."""
        kw = dict(prod=self.prod, key=self.key, need=self.need, unit=self.unit_support,
                  cop=self.cop, counit=self.counit_values, anti=self.anti, phi=self.phi_phases,
                  phi_inv=self.phi_inv_phases, alpha=self.alpha_phases, beta=self.beta_phases,
                  labels=self.labels, name=self.name)
        kw.update(changes)
        return PhaseAlgebra(self.field, self.dim, **kw)

    # -- constructors for elements ------------------------------------------
    def _phase_element(self, phases: Mapping, arity: int) -> Tensor:
        root = self.field.root
        if arity == 1:
            return Tensor(self, 1, {(i,): root(p) for i, p in phases.items()})
        return Tensor(self, arity, {k: root(p) for k, p in phases.items()})

    def zero(self, arity: int = 1) -> Tensor:
        return Tensor(self, arity)

    def basis(self, *idx: int) -> Tensor:
        return Tensor(self, len(idx), {tuple(idx): self.field.one})

    def element(self, coeffs: Mapping[int, object]) -> Tensor:
        f = self.field
        return Tensor(self, 1, {(i,): c if isinstance(c, Cyclotomic) else f.rational(c)
                                for i, c in coeffs.items()})

    def one(self, arity: int = 1) -> Tensor:
        u = self.unit_support
        return Tensor(self, arity, {k: self.field.one for k in itertools.product(u, repeat=arity)})

    def coassociator(self) -> Tensor:
        return self._phase_element(self.phi_phases, 3)

    def coassociator_inverse(self) -> Tensor:
        return self._phase_element(self.phi_inv_phases, 3)

    def alpha(self) -> Tensor:
        return self._phase_element(self.alpha_phases, 1)

    def beta(self) -> Tensor:
        return self._phase_element(self.beta_phases, 1)

    # -- multiplication ------------------------------------------------------
    def basis_product(self, i: int, j: int):
        """``(k, phase)`` or None."""
        return self.prod[i].get(j)

    def mul(self, x: Tensor, y: Tensor) -> Tensor:
        if x.arity != y.arity:
            raise ValueError("arity mismatch in product")
        key, need, prod = self.key, self.need, self.prod
        buckets = defaultdict(list)
        for jt, c in y.terms.items():
            buckets[tuple(key[j] for j in jt)].append((jt, c))
        out: dict = {}
        for it, a in x.terms.items():
            bucket = buckets.get(tuple(need[i] for i in it))
            if not bucket:
                continue
            rows = [prod[i] for i in it]
            for jt, b in bucket:
                ph = 0
                ks = []
                for r, j in zip(rows, jt):
                    e = r.get(j)
                    if e is None:
                        break
                    ks.append(e[0])
                    ph += e[1]
                else:
                    _acc(out, tuple(ks), (a * b).mul_root(ph))
        return Tensor(self, x.arity, out)

    def mul_many(self, *xs: Tensor) -> Tensor:
        out = xs[0]
        for x in xs[1:]:
            out = self.mul(out, x)
        return out

    # -- comultiplication, counit, antipode ----------------------------------
    def comultiply(self, x: Tensor) -> Tensor:
        return self.delta_at(x, 0)

    def delta_at(self, x: Tensor, pos: int) -> Tensor:
        """Apply ``Δ`` to tensor factor ``pos``."""
        cop = self.cop
        out: dict = {}
        for k, c in x.terms.items():
            pre, mid, post = k[:pos], k[pos], k[pos + 1:]
            for j, l, ph in cop[mid]:
                _acc(out, pre + (j, l) + post, c.mul_root(ph))
        return Tensor(self, x.arity + 1, out)

    def counit(self, x: Tensor):
        """``ε`` on an element (returns a scalar)."""
        if x.arity != 1:
            raise ValueError("counit of a non-element; use counit_at")
        out = self.field.zero
        for (i,), c in x.terms.items():
            if self.counit_values[i]:
                out = out + c * self.counit_values[i]
        return out

    def counit_at(self, x: Tensor, pos: int) -> Tensor:
        eps = self.counit_values
        out: dict = {}
        for k, c in x.terms.items():
            e = eps[k[pos]]
            if e:
                _acc(out, k[:pos] + k[pos + 1:], c * e)
        return Tensor(self, x.arity - 1, out)

    def antipode(self, x: Tensor) -> Tensor:
        return self.antipode_at(x, 0)

    def antipode_at(self, x: Tensor, pos: int) -> Tensor:
        anti = self.anti
        out: dict = {}
        for k, c in x.terms.items():
            j, ph = anti[k[pos]]
            _acc(out, k[:pos] + (j,) + k[pos + 1:], c.mul_root(ph))
        return Tensor(self, x.arity, out)

    def slice(self, x: Tensor, pos: int) -> list[tuple[tuple, Tensor]]:
        """Split ``x`` as a sum of (other factors, element in factor ``pos``)."""
        groups: dict = defaultdict(dict)
        for k, c in x.terms.items():
            groups[k[:pos] + k[pos + 1:]][(k[pos],)] = c
        return [(rest, Tensor(self, 1, t)) for rest, t in groups.items()]


# -- axiom verification -------------------------------------------------------------

def _basis_failure(alg: PhaseAlgebra, pred: Callable[[int], bool]):
    for i in range(alg.dim):
        if not pred(i):
            return alg.label(i)
    return None


def verify_quasi_bialgebra(alg: PhaseAlgebra, exhaustive_associativity: bool = True) -> Report:
    """Check every quasi-bialgebra axiom on basis elements, pairs and triples."""
    rep = Report(f"quasi-bialgebra axioms for {alg.name}")
    dim, lab = alg.dim, alg.label
    one = alg.one()
    b = [alg.basis(i) for i in range(dim)]

    # associativity on all basis triples, with integer phases
    bad = None
    if exhaustive_associativity:
        M = alg.field.modulus
        prod = alg.prod
        for i in range(dim):
            pi = prod[i]
            for j in range(dim):
                ij = pi.get(j)
                pj = prod[j]
                for l in range(dim):
                    jl = pj.get(l)
                    left = None
                    if ij is not None:
                        e = prod[ij[0]].get(l)
                        if e is not None:
                            left = (e[0], (ij[1] + e[1]) % M)
                    right = None
                    if jl is not None:
                        e = pi.get(jl[0])
                        if e is not None:
                            right = (e[0], (jl[1] + e[1]) % M)
                    if left != right:
                        bad = (lab(i), lab(j), lab(l))
                        break
                if bad:
                    break
            if bad:
                break
        rep.add("associativity", bad is None, bad)
    rep.add("unit", (w := _basis_failure(alg, lambda i: alg.mul(one, b[i]) == b[i]
                                           and alg.mul(b[i], one) == b[i])) is None, w)

    # counit
    rep.add("counit_unital", alg.counit(one) == 1, None)
    bad = None
    for i in range(dim):
        for j in range(dim):
            if alg.counit(alg.mul(b[i], b[j])) != alg.counit(b[i]) * alg.counit(b[j]):
                bad = (lab(i), lab(j))
                break
        if bad:
            break
    rep.add("counit_multiplicative", bad is None, bad)

    deltas = [alg.comultiply(x) for x in b]
    rep.add("counit_laws", (w := _basis_failure(
        alg, lambda i: alg.counit_at(deltas[i], 0).terms == b[i].terms
        and alg.counit_at(deltas[i], 1).terms == b[i].terms)) is None, w)

    # comultiplication is a unital algebra map
    rep.add("comultiplication_unital", alg.comultiply(one) == alg.one(2), None)
    bad = None
    for i in range(dim):
        for j in range(dim):
            if alg.comultiply(alg.mul(b[i], b[j])) != alg.mul(deltas[i], deltas[j]):
                bad = (lab(i), lab(j))
                break
        if bad:
            break
    rep.add("comultiplication_multiplicative", bad is None, bad)

    # coassociator
    phi, phi_inv = alg.coassociator(), alg.coassociator_inverse()
    one3 = alg.one(3)
    rep.add("coassociator_invertible",
            alg.mul(phi, phi_inv) == one3 and alg.mul(phi_inv, phi) == one3, None)
    bad = None
    for i in range(dim):
        lhs = alg.delta_at(deltas[i], 1)
        rhs = alg.mul_many(phi, alg.delta_at(deltas[i], 0), phi_inv)
        if lhs != rhs:
            bad = lab(i)
            break
    rep.add("quasi_coassociativity", bad is None, bad)
    rep.add("coassociator_counit", alg.counit_at(phi, 1) == alg.one(2), None)

    one1 = alg.one()
    lhs = alg.mul(alg.delta_at(phi, 2), alg.delta_at(phi, 0))
    rhs = alg.mul_many(one1 @ phi, alg.delta_at(phi, 1), phi @ one1)
    rep.add("pentagon", lhs == rhs, None if lhs == rhs else
            tuple(lab(i) for i in lhs.first_difference(rhs)))
    return rep


def verify_quasi_hopf(alg: PhaseAlgebra) -> Report:
    """Antipode axioms, checked on every basis element (and pair for anti-multiplicativity)."""
    rep = Report(f"quasi-Hopf axioms for {alg.name}")
    dim, lab = alg.dim, alg.label
    b = [alg.basis(i) for i in range(dim)]
    alpha, beta = alg.alpha(), alg.beta()

    targets = [j for j, _ in alg.anti]
    rep.add("antipode_bijective", sorted(targets) == list(range(dim)), None)
    bad = None
    for i in range(dim):
        si = alg.antipode(b[i])
        for j in range(dim):
            if alg.antipode(alg.mul(b[i], b[j])) != alg.mul(alg.antipode(b[j]), si):
                bad = (lab(i), lab(j))
                break
        if bad:
            break
    rep.add("antipode_anti_multiplicative", bad is None, bad)

    bad_alpha = bad_beta = None
    for i in range(dim):
        d = alg.comultiply(b[i])
        ta = alg.zero()
        tb = alg.zero()
        for (j, k), c in d.terms.items():
            ta = ta + alg.mul_many(alg.antipode(b[j]), alpha, b[k]).scale(c)
            tb = tb + alg.mul_many(b[j], beta, alg.antipode(b[k])).scale(c)
        eps = alg.counit(b[i])
        if bad_alpha is None and ta != alpha.scale(eps):
            bad_alpha = lab(i)
        if bad_beta is None and tb != beta.scale(eps):
            bad_beta = lab(i)
    rep.add("alpha_axiom", bad_alpha is None, bad_alpha)
    rep.add("beta_axiom", bad_beta is None, bad_beta)

    one = alg.one()
    total = alg.zero()
    for (i, j, k), c in alg.coassociator().terms.items():
        total = total + alg.mul_many(b[i], beta, alg.antipode(b[j]), alpha, b[k]).scale(c)
    rep.add("coassociator_beta_axiom", total == one, None)
    total = alg.zero()
    for (i, j, k), c in alg.coassociator_inverse().terms.items():
        total = total + alg.mul_many(alg.antipode(b[i]), alpha, b[j], beta,
                                     alg.antipode(b[k])).scale(c)
    rep.add("coassociator_inverse_alpha_axiom", total == one, None)
    return rep

