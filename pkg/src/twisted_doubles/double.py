"""The twisted Drinfeld double ``D^w(G)`` with its full quasi-Hopf structure.

The basis element ``e_g # x`` has flat index ``g * |G| + x``.
"""
from __future__ import annotations

from .algebra import PhaseAlgebra, Tensor, verify_quasi_bialgebra, verify_quasi_hopf
from .cocycle import Cocycle3, CocycleError, PhasePair, compute_phases, trivial_cocycle, \
    validate_cocycle
from .groups import FiniteGroup
from .scalars import default_modulus, field


class TwistedDouble(PhaseAlgebra):
    """``D^w(G)``: multiplication twisted by ``theta``, comultiplication by ``gamma``."""

    def __init__(self, group: FiniteGroup, cocycle: Cocycle3, modulus: int | None = None,
                 check: bool = True, phases: PhasePair | None = None):
        if cocycle.group != group:
            raise CocycleError("cocycle lives on a different group")
        if check:
            rep = validate_cocycle(cocycle)
            if not rep.ok:
                raise CocycleError(f"invalid cocycle: {rep.failures()[0]}")
        m = modulus or default_modulus(cocycle.denominator, group.order)
        if m % cocycle.denominator:
            raise CocycleError(f"modulus {m} does not cover the cocycle denominator")
        fld = field(m)
        ph = phases or compute_phases(cocycle)
        self.group = group
        self.cocycle = cocycle
        self.phases = ph
        self._untwisted = None
        n, t, inv = group.order, group.table, group.inverse

        def ex(q):
            return int(q * m) % m

        th = [ex(q) for q in ph.theta_values]
        ga = [ex(q) for q in ph.gamma_values]
        om = cocycle.int_values(m)

        prod, key, need, cop, anti, counit = [], [], [], [], [], []
        for g in range(n):
            for x in range(n):
                h = t[t[inv[x]][g]][x]                       # x^-1 g x
                row = {}
                for y in range(n):
                    row[h * n + y] = (g * n + t[x][y], th[(g * n + x) * n + y])
                prod.append(row)
                key.append(g)
                need.append(h)
                terms = []
                for s in range(n):
                    gs = t[g][inv[s]]
                    terms.append((gs * n + x, s * n + x, ga[(x * n + gs) * n + s]))
                cop.append(terms)
                gi, xi = inv[g], inv[x]
                target = t[t[xi][gi]][x]
                anti.append((target * n + xi,
                             (-th[(gi * n + x) * n + xi] - ga[(x * n + g) * n + gi]) % m))
                counit.append(1 if g == 0 else 0)
        phi = {}
        phi_inv = {}
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    w = om[(a * n + b) * n + c]
                    phi[(a * n, b * n, c * n)] = (-w) % m
                    phi_inv[(a * n, b * n, c * n)] = w
        unit = [g * n for g in range(n)]
        alpha = {g * n: 0 for g in range(n)}
        beta = {g * n: om[(g * n + inv[g]) * n + g] for g in range(n)}
        labels = [f"e[{group.labels[g]}]#{group.labels[x]}" for g in range(n) for x in range(n)]
        super().__init__(fld, n * n, prod=prod, key=key, need=need, unit=unit, cop=cop,
                         counit=counit, anti=anti, phi=phi, phi_inv=phi_inv, alpha=alpha,
                         beta=beta, labels=labels, name=f"D^w(G) |G|={n}")

    def index(self, g: int, x: int) -> int:
        return g * self.group.order + x

    def pair(self, i: int) -> tuple[int, int]:
        return divmod(i, self.group.order)

    def e(self, g: int, x: int) -> Tensor:
        """Basis element ``e_g # x``."""
        return self.basis(self.index(g, x))

    def eps_hash(self, x: int) -> Tensor:
        """``ε # x = Σ_g e_g # x``."""
        n = self.group.order
        return Tensor(self, 1, {(g * n + x,): self.field.one for g in range(n)})

    def r_matrix(self) -> Tensor:
        """``R = Σ_g e_g#1 ⊗ ε#g``."""
        n = self.group.order
        one = self.field.one
        return Tensor(self, 2, {(g * n, h * n + g): one for g in range(n) for h in range(n)})

    def untwisted(self) -> TwistedDouble:
        """``D(G)`` over the same cyclotomic field (built once, then cached)."""
        if self._untwisted is None:
            if self.cocycle.is_trivial():
                self._untwisted = self
            else:
                self._untwisted = TwistedDouble(self.group, trivial_cocycle(self.group),
                                                self.field.modulus, check=False)
        return self._untwisted

    def with_modulus(self, m: int) -> TwistedDouble:
        return TwistedDouble(self.group, self.cocycle, m)


def build_double(group: FiniteGroup, cocycle: Cocycle3, modulus: int | None = None) -> TwistedDouble:
    return TwistedDouble(group, cocycle, modulus)


def verify_double(d: PhaseAlgebra):
    """Quasi-bialgebra and quasi-Hopf reports."""
    return verify_quasi_bialgebra(d), verify_quasi_hopf(d)
