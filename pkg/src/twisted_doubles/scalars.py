"""Exact arithmetic in cyclotomic fields Q(zeta_M).

A :class:`Cyclotomic` is an integer vector over the power basis
``1, z, ..., z^(phi(M)-1)`` of ``Q(z)``, ``z = exp(2 pi i / M)``, together with
a positive common denominator.  The representation is canonical, so equality
is a plain tuple comparison.  Roots of unity are written additively as
exponents in Q/Z (:func:`phase`).
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

Phase = Fraction


def phase(q) -> Fraction:
    """Normalize an exponent to ``0 <= q < 1``."""
    return Fraction(q) % 1


def phase_mul(a, b) -> Fraction:
    return (Fraction(a) + Fraction(b)) % 1


def phase_inv(a) -> Fraction:
    return (-Fraction(a)) % 1


def format_fraction(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_fraction(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if not isinstance(s, str):
        raise ValueError(f"expected a 'num/den' string, got {s!r}")
    return Fraction(s.strip())


# -- polynomial helpers (integer coefficient lists, low degree first) ---------

def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    lead = den[-1]
    for k in range(len(out) - 1, -1, -1):
        c, r = divmod(num[k + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Phi_m by exact division of ``x^m - 1`` by the Phi_d, d | m, d < m."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class CyclotomicField:
    """Context object for ``Q(zeta_M)``: reduction tables and caches."""

    def __init__(self, modulus: int):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        self.modulus = m = modulus
        self.poly = cyclotomic_polynomial(m)
        self.degree = d = len(self.poly) - 1
        # red[k] = coefficients of z^k in the power basis, 0 <= k < m
        red = []
        vec = [0] * d
        vec[0] = 1
        for _ in range(m):
            red.append(tuple(vec))
            top = vec[-1]
            vec = [0] + vec[:-1]
            if top:
                for i in range(d):
                    vec[i] -= top * self.poly[i]
        self.red = tuple(red)
        # sparse form of each z^k for fast accumulation
        self.red_sparse = tuple(tuple((i, c) for i, c in enumerate(r) if c) for r in red)
        self.root_index = {r: k for k, r in enumerate(red)}
        self._inverse_cache: dict = {}
        self.zero = Cyclotomic(self, (0,) * d, 1, _canonical=True)
        self.one = self.root(0)
        self._roots = tuple(Cyclotomic(self, r, 1, _canonical=True) for r in red)

    def __repr__(self):
        return f"CyclotomicField({self.modulus})"

    def __reduce__(self):
        return (field, (self.modulus,))

    def root(self, k: int) -> Cyclotomic:
        """``zeta_M^k``."""
        try:
            return self._roots[k % self.modulus]
        except AttributeError:
            return Cyclotomic(self, self.red[k % self.modulus], 1, _canonical=True)

    def exponent(self, q) -> int:
        """Integer ``k`` with ``exp(2 pi i q) = zeta_M^k``."""
        q = Fraction(q)
        k = q * self.modulus
        if k.denominator != 1:
            raise ValueError(f"phase {q} is not an M-th root of unity for M={self.modulus}")
        return int(k) % self.modulus

    def embed_phase(self, q) -> Cyclotomic:
        return self.root(self.exponent(q))

    def rational(self, q) -> Cyclotomic:
        q = Fraction(q)
        return Cyclotomic(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    def integer(self, n: int) -> Cyclotomic:
        return Cyclotomic(self, (int(n),) + (0,) * (self.degree - 1), 1, _canonical=True)

    def from_coeffs(self, coeffs: Sequence) -> Cyclotomic:
        fr = [Fraction(c) for c in coeffs]
        if len(fr) != self.degree:
            raise ValueError(f"expected {self.degree} coefficients, got {len(fr)}")
        den = math.lcm(*(f.denominator for f in fr)) if fr else 1
        return Cyclotomic(self, tuple(int(f * den) for f in fr), den)

    def from_power_sum(self, terms) -> Cyclotomic:
        """Sum of ``coeff * zeta^k`` for integer ``coeff`` over ``(k, coeff)`` pairs."""
        vec = [0] * self.degree
        for k, c in terms:
            if c:
                for i, r in self.red_sparse[k % self.modulus]:
                    vec[i] += c * r
        return Cyclotomic(self, tuple(vec), 1)

    def from_rational_power_sum(self, terms: Mapping[int, Fraction]) -> Cyclotomic:
        """Sum of ``q * zeta^k`` over a mapping ``k -> q`` with rational ``q``."""
        den = math.lcm(1, *(q.denominator for q in terms.values()))
        vec = [0] * self.degree
        for k, q in terms.items():
            if q:
                c = q.numerator * (den // q.denominator)
                for i, r in self.red_sparse[k % self.modulus]:
                    vec[i] += c * r
        return Cyclotomic(self, tuple(vec), den)


@lru_cache(maxsize=None)
def field(modulus: int) -> CyclotomicField:
    return CyclotomicField(modulus)


class Cyclotomic:
    """An element of ``Q(zeta_M)`` in canonical form ``num / den``."""

    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, fld: CyclotomicField, num: Sequence[int], den: int = 1,
                 _canonical: bool = False):
        self.field = fld
        if not _canonical:
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            if den < 0:
                num, den = [-c for c in num], -den
            g = math.gcd(den, *num)
            if g > 1:
                num = [c // g for c in num]
                den //= g
            elif not any(num):
                den = 1
            num = tuple(num)
        self.num = num
        self.den = den
        self._hash = None

    # -- predicates --------------------------------------------------------
    @property
    def modulus(self) -> int:
        return self.field.modulus

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self):
        return any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.num[0], self.den)

    def root_exponent(self) -> int | None:
        """``k`` if this equals ``zeta_M^k``, else None."""
        if self.den != 1:
            return None
        return self.field.root_index.get(self.num)

    def monomial(self) -> tuple[Fraction, int] | None:
        """``(q, k)`` with ``self = q * zeta^k`` and ``q`` rational, else None."""
        g = math.gcd(*self.num)
        if g == 0:
            return None
        prim = tuple(c // g for c in self.num)
        idx = self.field.root_index
        k = idx.get(prim)
        if k is not None:
            return Fraction(g, self.den), k
        k = idx.get(tuple(-c for c in prim))
        if k is not None:
            return Fraction(-g, self.den), k
        return None

    def as_phase(self) -> Fraction | None:
        k = self.root_exponent()
        return None if k is None else Fraction(k, self.field.modulus)

    # -- coercion ------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is self.field:
                return self, other
            m = math.lcm(self.field.modulus, other.field.modulus)
            return self.promote(m), other.promote(m)
        if isinstance(other, (int, Fraction)):
            return self, self.field.rational(other)
        return NotImplemented

    def promote(self, modulus: int) -> Cyclotomic:
        """Re-express in ``Q(zeta_modulus)``, a field containing this one."""
        if modulus == self.field.modulus:
            return self
        if modulus % self.field.modulus:
            raise ValueError("target modulus must be a multiple of the current one")
        big = field(modulus)
        step = modulus // self.field.modulus
        val = big.from_power_sum((i * step, c) for i, c in enumerate(self.num))
        return Cyclotomic(big, val.num, self.den)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        if a.den == b.den:
            return Cyclotomic(a.field, [x + y for x, y in zip(a.num, b.num)], a.den)
        return Cyclotomic(a.field, [x * b.den + y * a.den for x, y in zip(a.num, b.num)],
                          a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.field, tuple(-x for x in self.num), self.den, _canonical=True)

    def __sub__(self, other):
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return Cyclotomic(self.field, [x * other.numerator for x in self.num],
                              self.den * other.denominator)
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        fld = a.field
        d = fld.degree
        an = [(i, x) for i, x in enumerate(a.num) if x]
        bn = [(j, y) for j, y in enumerate(b.num) if y]
        if len(an) == 1 and an[0][0] == 0:
            x = an[0][1]
            return Cyclotomic(fld, [x * y for y in b.num], a.den * b.den)
        if len(bn) == 1 and bn[0][0] == 0:
            y = bn[0][1]
            return Cyclotomic(fld, [x * y for x in a.num], a.den * b.den)
        prod = [0] * (2 * d)
        for i, x in an:
            for j, y in bn:
                prod[i + j] += x * y
        vec = prod[:d]
        m, red = fld.modulus, fld.red_sparse
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for i, r in red[k % m]:
                    vec[i] += c * r
        return Cyclotomic(fld, vec, a.den * b.den)

    __rmul__ = __mul__

    def mul_root(self, k: int) -> Cyclotomic:
        """Multiply by ``zeta_M^k``."""
        fld = self.field
        m = fld.modulus
        k %= m
        if k == 0:
            return self
        d = fld.degree
        vec = [0] * d
        red = fld.red_sparse
        for i, x in enumerate(self.num):
            if x:
                for j, r in red[(i + k) % m]:
                    vec[j] += x * r
        return Cyclotomic(fld, tuple(vec), self.den, _canonical=True)

    def conjugate(self) -> Cyclotomic:
        """Complex conjugate: ``zeta -> zeta^-1``."""
        fld = self.field
        return fld.from_power_sum((-i, x) for i, x in enumerate(self.num)).__truediv__(self.den)

    def inverse(self) -> Cyclotomic:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        k = self.root_exponent()
        if k is not None:
            return self.field.root(-k)
        if self.is_rational():
            return self.field.rational(Fraction(self.den, self.num[0]))
        cache = self.field._inverse_cache
        key = (self.num, self.den)
        if key in cache:
            return cache[key]
        out = self._solve_inverse()
        cache[key] = out
        return out

    def _solve_inverse(self) -> Cyclotomic:
        # columns of the multiplication-by-self matrix are self * z^j
        fld = self.field
        d = fld.degree
        cols = [self.mul_root(j) for j in range(d)]
        mat = [[Fraction(cols[j].num[i], cols[j].den) for j in range(d)] + [Fraction(int(i == 0))]
               for i in range(d)]
        for c in range(d):
            piv = next(r for r in range(c, d) if mat[r][c])
            mat[c], mat[piv] = mat[piv], mat[c]
            pv = mat[c][c]
            mat[c] = [v / pv for v in mat[c]]
            for r in range(d):
                if r != c and mat[r][c]:
                    f = mat[r][c]
                    mat[r] = [x - f * y for x, y in zip(mat[r], mat[c])]
        return fld.from_coeffs([mat[i][d] for i in range(d)])

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return Cyclotomic(self.field, [x * other.denominator for x in self.num],
                              self.den * other.numerator)
        pair = self._coerce(other)
        if pair is NotImplemented:
            return NotImplemented
        a, b = pair
        return a * b.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = self.field.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison ----------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Cyclotomic):
            if other.field is self.field:
                return self.num == other.num and self.den == other.den
            a, b = self._coerce(other)
            return a.num == b.num and a.den == b.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.modulus, self.num, self.den))
        return self._hash

    # -- display -------------------------------------------------------------
    def coefficients(self) -> list[Fraction]:
        return [Fraction(x, self.den) for x in self.num]

    def __complex__(self):
        m = self.field.modulus
        z = complex(math.cos(2 * math.pi / m), math.sin(2 * math.pi / m))
        return sum(x * z ** i for i, x in enumerate(self.num)) / self.den

    def __str__(self):
        k = self.root_exponent()
        m = self.field.modulus
        if self.is_rational():
            return str(Fraction(self.num[0], self.den))
        if k is not None:
            g = math.gcd(k, m)
            return f"exp(2πi·{k // g}/{m // g})"
        parts = []
        for i, x in enumerate(self.num):
            if x:
                c = Fraction(x, self.den)
                parts.append(f"{c}" if i == 0 else f"{c}·z{m}^{i}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Cyclotomic({self.field.modulus}, {self})"


def default_modulus(*denominators: int) -> int:
    """Context modulus: lcm of the given denominators/orders and 8."""
    return math.lcm(8, *[int(d) for d in denominators if d])
