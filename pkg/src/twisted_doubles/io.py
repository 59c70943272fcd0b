"""JSON codecs for groups, scalars, cocycles, elements, morphisms and quadruples.

Exponents are written as ``"num/den"`` strings so that files stay exact.  Places
that expect a group, cocycle or double also accept a *reference*: a catalog
cocycle name (``"d8-quotient"``), a path to a JSON file, or an inline object.
"""
from __future__ import annotations

import hashlib
import json
import math
import os
from fractions import Fraction
from typing import Any

from .cocycle import Cochain2, Cocycle3, catalog, catalog_names, ALIASES
from .components import PComponent, Quadruple
from .double import TwistedDouble
from .groups import FiniteGroup, cyclic, dihedral, direct_product, trivial_group
from .scalars import Cyclotomic, CyclotomicField, field, format_fraction, parse_fraction


class FormatError(ValueError):
    """Malformed or inconsistent input file."""


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _frac(s) -> Fraction:
    try:
        return parse_fraction(s)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise FormatError(f"not an exact rational: {s!r}") from exc


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise FormatError(f"{what} must be an integer, got {x!r}")
    return x


# -- groups ---------------------------------------------------------------------------

def group_to_json(g: FiniteGroup) -> dict:
    return {"order": g.order, "table": [list(r) for r in g.table], "labels": list(g.labels)}


def group_from_json(obj: dict) -> FiniteGroup:
    if not isinstance(obj, dict) or "table" not in obj:
        raise FormatError("a group needs a 'table'")
    table = obj["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise FormatError("'table' must be a list of rows")
    rows = [[_int(v, "table entry") for v in r] for r in table]
    if "order" in obj and _int(obj["order"], "order") != len(rows):
        raise FormatError(f"order {obj['order']} does not match a table with {len(rows)} rows")
    if rows and rows[0] != list(range(len(rows))):
        raise FormatError("the identity must be element 0 (row 0 must be 0..n-1)")
    try:
        return FiniteGroup(rows, obj.get("labels"))
    except ValueError as exc:
        raise FormatError(f"invalid group table: {exc}") from exc


def named_group(spec: str) -> FiniteGroup:
    """``Z<n>``, ``D<n>`` (dihedral of order n), products like ``Z2xZ2``, or ``1``."""
    s = spec.strip()
    if s == "1":
        return trivial_group()
    if "x" in s:
        parts = [named_group(p) for p in s.split("x")]
        g = parts[0]
        for h in parts[1:]:
            g = direct_product(g, h)
        return g
    try:
        if s[0] in "ZC":
            return cyclic(int(s[1:]))
        if s[0] == "D" and int(s[1:]) % 2 == 0:
            return dihedral(int(s[1:]))
    except (ValueError, IndexError):
        pass
    raise FormatError(f"unknown group name {spec!r}")


def resolve_group(ref) -> FiniteGroup:
    if isinstance(ref, dict):
        return group_from_json(ref)
    if isinstance(ref, str):
        if _is_catalog(ref):
            return catalog(ref)[0]
        if os.path.exists(ref):
            return group_from_json(load_json(ref))
        return named_group(ref)
    raise FormatError(f"cannot interpret group reference {ref!r}")


def _is_catalog(name: str) -> bool:
    return name in catalog_names() or name in ALIASES


# -- scalars --------------------------------------------------------------------------

def cyclotomic_to_json(c: Cyclotomic) -> dict:
    return {"modulus": c.modulus, "coeffs": [format_fraction(q) for q in c.coefficients()]}


def cyclotomic_from_json(obj, fld: CyclotomicField | None = None) -> Cyclotomic:
    """Read a scalar; a bare ``"num/den"`` string or integer is a rational."""
    if isinstance(obj, (str, int)) and not isinstance(obj, bool):
        q = _frac(obj)
        return (fld or field(1)).rational(q)
    if not isinstance(obj, dict) or "coeffs" not in obj:
        raise FormatError(f"not a cyclotomic number: {obj!r}")
    m = _int(obj.get("modulus", 1), "modulus")
    if m < 1:
        raise FormatError("modulus must be positive")
    try:
        c = field(m).from_coeffs([_frac(s) for s in obj["coeffs"]])
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if fld is not None and fld.modulus != m:
        if fld.modulus % m:
            raise FormatError(f"modulus {m} does not divide the working modulus {fld.modulus}")
        c = c.promote(fld.modulus)
    return c


# -- cocycles -------------------------------------------------------------------------

def cocycle_to_json(w: Cocycle3, group_ref=None) -> dict:
    n = w.group.order
    ex = [[[format_fraction(w(a, b, c)) for c in range(n)] for b in range(n)] for a in range(n)]
    return {"group": group_to_json(w.group) if group_ref is None else group_ref, "exponents": ex}


def cocycle_from_json(obj) -> Cocycle3:
    if not isinstance(obj, dict) or "exponents" not in obj or "group" not in obj:
        raise FormatError("a cocycle needs 'group' and 'exponents'")
    g = resolve_group(obj["group"])
    n = g.order
    ex = obj["exponents"]
    ok = isinstance(ex, list) and len(ex) == n and all(
        isinstance(r, list) and len(r) == n and all(isinstance(s, list) and len(s) == n for s in r)
        for r in ex)
    if not ok:
        raise FormatError(f"'exponents' must be an {n}x{n}x{n} array")
    return Cocycle3(g, [[[_frac(v) % 1 for v in s] for s in r] for r in ex])


def resolve_cocycle(ref) -> Cocycle3:
    if isinstance(ref, dict):
        return cocycle_from_json(ref)
    if isinstance(ref, str):
        if _is_catalog(ref):
            return catalog(ref)[1]
        if os.path.exists(ref):
            return cocycle_from_json(load_json(ref))
        raise FormatError(f"{ref!r} is neither a catalog name nor a file")
    raise FormatError(f"cannot interpret cocycle reference {ref!r}")


def cochain_to_json(beta: Cochain2) -> list:
    n = beta.group.order
    return [[format_fraction(beta(a, b)) for b in range(n)] for a in range(n)]


def cochain_from_json(group: FiniteGroup, rows) -> Cochain2:
    return Cochain2(group, [[_frac(v) for v in r] for r in rows])


# -- doubles and elements ---------------------------------------------------------------

def resolve_double(ref, modulus: int | None = None, check: bool = True) -> TwistedDouble:
    """A double from a cocycle reference, or ``{"cocycle": ref, "modulus": M}``.

    With ``check=False`` the cocycle law is not enforced, so that a broken input
    can still be built and handed to the axiom checkers.
    """
    if isinstance(ref, dict) and "cocycle" in ref:
        modulus = modulus or ref.get("modulus")
        ref = ref["cocycle"]
    w = resolve_cocycle(ref)
    try:
        return TwistedDouble(w.group, w, modulus, check=check)
    except ValueError as exc:
        raise FormatError(f"cannot build the double: {exc}") from exc


def element_to_json(d: TwistedDouble, x) -> list:
    out = []
    for (i,), c in sorted(x.items()):
        g, y = d.pair(i)
        out.append({"g": g, "x": y, "coeff": cyclotomic_to_json(c)})
    return out


def element_from_json(d: TwistedDouble, rows):
    if not isinstance(rows, list):
        raise FormatError("an element is a list of {g, x, coeff} records")
    n = d.group.order
    terms: dict = {}
    for r in rows:
        g, y = _int(r.get("g"), "g"), _int(r.get("x"), "x")
        if not (0 <= g < n and 0 <= y < n):
            raise FormatError(f"basis index ({g}, {y}) out of range")
        key = d.index(g, y)
        terms[key] = terms.get(key, d.field.zero) + cyclotomic_from_json(r["coeff"], d.field)
    return d.element(terms)


# -- morphisms ------------------------------------------------------------------------

def morphism_to_json(f, source_ref=None, target_ref=None) -> dict:
    src, tgt = f.source, f.target
    entries = []
    for row, col, c in f.entries():
        rg, rx = tgt.pair(row)
        cg, cx = src.pair(col)
        entries.append({"row_g": rg, "row_x": rx, "col_g": cg, "col_x": cx,
                        "coeff": cyclotomic_to_json(c)})
    return {"source": source_ref if source_ref is not None else _double_ref(src),
            "target": target_ref if target_ref is not None else _double_ref(tgt),
            "entries": entries}


def _double_ref(d: TwistedDouble) -> dict:
    return {"cocycle": cocycle_to_json(d.cocycle), "modulus": d.field.modulus}


def morphism_from_json(obj, modulus: int | None = None):
    from .morphism import DoubleMap
    if not isinstance(obj, dict) or not {"source", "target", "entries"} <= set(obj):
        raise FormatError("a morphism needs 'source', 'target' and 'entries'")
    src = resolve_double(obj["source"], modulus)
    tgt = resolve_double(obj["target"], modulus)
    m = math.lcm(src.field.modulus, tgt.field.modulus)
    src, tgt = _at(src, m), _at(tgt, m)
    n, k = src.group.order, tgt.group.order
    cols = [dict() for _ in range(n * n)]
    for e in obj["entries"]:
        rg, rx = _int(e.get("row_g"), "row_g"), _int(e.get("row_x"), "row_x")
        cg, cx = _int(e.get("col_g"), "col_g"), _int(e.get("col_x"), "col_x")
        if not (0 <= rg < k and 0 <= rx < k and 0 <= cg < n and 0 <= cx < n):
            raise FormatError("morphism entry index out of range")
        row = tgt.index(rg, rx)
        col = cols[src.index(cg, cx)]
        col[row] = col.get(row, tgt.field.zero) + cyclotomic_from_json(e["coeff"], tgt.field)
    return DoubleMap(src, tgt, cols)


def _at(d: TwistedDouble, m: int) -> TwistedDouble:
    return d if d.field.modulus == m else d.with_modulus(m)


# -- quadruples -----------------------------------------------------------------------

def _sparse_to_json(table: dict) -> list:
    return [[i, j, cyclotomic_to_json(c)] for (i, j), c in sorted(table.items()) if c]


def _sparse_from_json(rows, fld: CyclotomicField) -> dict:
    if not isinstance(rows, list):
        raise FormatError("a sparse matrix is a list of [i, j, coeff] triples")
    out = {}
    for r in rows:
        if not isinstance(r, list) or len(r) != 3:
            raise FormatError("sparse matrix entries are [i, j, coeff]")
        out[(_int(r[0], "index"), _int(r[1], "index"))] = cyclotomic_from_json(r[2], fld)
    return out


def quadruple_to_json(q: Quadruple) -> dict:
    p = q.p
    return {"p": {"A": list(p.A), "B": list(p.B),
                  "sigma": [[format_fraction(s) for s in row] for row in p.sigma]},
            "u": _sparse_to_json(q.u), "r": _sparse_to_json(q.r), "v": _sparse_to_json(q.v),
            "modulus": q.field.modulus}


def quadruple_from_json(obj, G: FiniteGroup, H: FiniteGroup, fld: CyclotomicField | None = None
                        ) -> Quadruple:
    if not isinstance(obj, dict) or not {"p", "u", "r", "v"} <= set(obj):
        raise FormatError("a quadruple needs 'p', 'u', 'r' and 'v'")
    fld = fld or field(_int(obj.get("modulus", 1), "modulus"))
    pj = obj["p"]
    try:
        p = PComponent(G, H, tuple(pj["A"]), tuple(pj["B"]),
                       tuple(tuple(_frac(s) for s in row) for row in pj["sigma"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"invalid p component: {exc}") from exc
    return Quadruple(p, _sparse_from_json(obj["u"], fld), _sparse_from_json(obj["r"], fld),
                     _sparse_from_json(obj["v"], fld), fld)


# -- automorphism subgroup ---------------------------------------------------------------

def aut_group_report_to_json(rep) -> dict:
    """Elements by content hash, plus order, tags and checks."""
    def tag(t):
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in t.items()}
    return {"order": rep.order,
            "generators": [f.content_hash() for f in rep.generators],
            "elements": [f.content_hash() for f in rep.elements],
            "tags": [tag(t) for t in rep.tags],
            "checks": rep.checks.records()}


def content_digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True).encode()).hexdigest()[:16]
