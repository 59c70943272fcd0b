"""Command-line front end.

Exit status: 0 when every check passes, 1 when a mathematical check fails, 2 for
invalid input (bad files, unknown names, malformed arguments).
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

from . import io
from .cocycle import (CocycleError, act_by_automorphism, catalog, catalog_names, certificate_holds,
                      cohomologous, inflate, validate_cocycle, verify_phase_identities)
from .components import (ComponentError, decompose, property_report, reconstruct)
from .double import verify_double
from .groups import GroupError, GroupHom
from .morphism import check_quasi_hopf_morphism, rigid_oracle
from .reports import Report

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class _Out:
    """Collects printed text and report records for one invocation."""

    def __init__(self, args):
        self.args = args
        self.records: list[dict] = []

    def report(self, rep: Report):
        print(rep)
        self.records.extend(rep.records())
        return rep.ok

    def emit(self, text: str):
        """Write to ``--out`` if given, otherwise print."""
        path = getattr(self.args, "out", None)
        if path:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)

    def flush(self):
        path = getattr(self.args, "report", None)
        if path:
            with open(path, "w", encoding="utf-8") as fh:
                for r in self.records:
                    fh.write(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n")


def _status(ok: bool) -> int:
    return EXIT_OK if ok else EXIT_FAIL


def _images(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError as exc:
        raise io.FormatError(f"images must be integers: {text!r}") from exc


# -- group ----------------------------------------------------------------------------------

def cmd_group(args, out: _Out) -> int:
    if args.action == "make":
        out.emit(io.dumps(io.group_to_json(io.named_group(args.name))))
        return EXIT_OK
    g = io.resolve_group(args.group)
    info = {"order": g.order, "abelian": g.is_abelian, "exponent": g.exponent,
            "center": sorted(g.center()), "labels": list(g.labels)}
    out.emit(io.dumps(info))
    return EXIT_OK


# -- cocycle --------------------------------------------------------------------------------

def cmd_cocycle(args, out: _Out) -> int:
    a = args.action
    if a == "catalog":
        if args.name is None:
            print("\n".join(catalog_names()))
        else:
            g, w = catalog(args.name)
            out.emit(io.dumps(io.cocycle_to_json(w)))
        return EXIT_OK
    if a == "verify":
        w = io.resolve_cocycle(args.cocycle)
        rep = validate_cocycle(w)
        if rep.ok:
            rep.extend(verify_phase_identities(w).checks)
        return _status(out.report(rep))
    if a == "phases":
        w = io.resolve_cocycle(args.cocycle)
        n, ph = w.group.order, w.phases
        fmt = io.format_fraction
        out.emit(io.dumps({
            "theta": [[[fmt(ph.theta(g, x, y)) for y in range(n)] for x in range(n)] for g in range(n)],
            "gamma": [[[fmt(ph.gamma(x, g, h)) for h in range(n)] for g in range(n)] for x in range(n)],
        }))
        return EXIT_OK
    if a == "cohomologous":
        w1, w2 = io.resolve_cocycle(args.first), io.resolve_cocycle(args.second)
        if w1.group != w2.group:
            raise io.FormatError("the cocycles live on different groups")
        dec = cohomologous(w1, w2)
        print("cohomologous" if dec.cohomologous else "NOT cohomologous")
        rep = Report("cohomology decision")
        if dec.cohomologous:
            rep.add("witness_verified", True, {"witness": io.cochain_to_json(dec.witness)})
        else:
            rep.add("certificate_verified", certificate_holds(w1, w2, dec.certificate),
                    {"certificate_row": dec.certificate_row})
        out.records.append({"check": "cohomologous", "status": "pass",
                            "witness": dec.to_json()})
        return _status(out.report(rep))
    if a == "inflate":
        w = io.resolve_cocycle(args.cocycle)
        g = io.resolve_group(args.group)
        proj = GroupHom(g, w.group, _images(args.map))
        out.emit(io.dumps(io.cocycle_to_json(inflate(w, proj))))
        return EXIT_OK
    if a == "act":
        w = io.resolve_cocycle(args.cocycle)
        v = GroupHom(w.group, w.group, _images(args.aut))
        out.emit(io.dumps(io.cocycle_to_json(act_by_automorphism(w, v))))
        return EXIT_OK
    raise AssertionError(a)


# -- double ---------------------------------------------------------------------------------

def cmd_double(args, out: _Out) -> int:
    if args.action == "build":
        d = io.resolve_double(args.cocycle, args.modulus)
        print(f"D^w({d.group.order}): dimension {d.dim}, modulus {d.field.modulus}")
        if getattr(args, "out", None):
            out.emit(io.dumps({"cocycle": io.cocycle_to_json(d.cocycle),
                               "modulus": d.field.modulus}))
        return EXIT_OK
    d = io.resolve_double(args.cocycle, args.modulus, check=False)
    rep = Report("double axioms")
    rep.extend(validate_cocycle(d.cocycle).checks)
    qb, qh = verify_double(d)
    rep.extend(qb.checks)
    rep.extend(qh.checks)
    return _status(out.report(rep))


# -- morphism -------------------------------------------------------------------------------

def _double_pair(src_ref, tgt_ref, modulus):
    """Source and target doubles over a common cyclotomic field."""
    src = io.resolve_double(src_ref, modulus)
    tgt = io.resolve_double(tgt_ref, modulus)
    m = math.lcm(src.field.modulus, tgt.field.modulus)
    if src.field.modulus != m:
        src = src.with_modulus(m)
    if tgt.field.modulus != m:
        tgt = tgt.with_modulus(m)
    return src, tgt


def _load_morphism(path: str, modulus):
    return io.morphism_from_json(io.load_json(path), modulus)


def cmd_morphism(args, out: _Out) -> int:
    a = args.action
    if a == "check":
        f = _load_morphism(args.file, args.modulus)
        rep = check_quasi_hopf_morphism(f, include_bijective=True)
        return _status(out.report(rep))
    if a == "rigid":
        f = _load_morphism(args.file, args.modulus)
        return _status(out.report(rigid_oracle(f)))
    if a == "decompose":
        f = _load_morphism(args.file, args.modulus)
        q = decompose(f)
        out.emit(io.dumps(io.quadruple_to_json(q)))
        if args.properties:
            out.report(property_report(q, f.source.cocycle, f.target.cocycle))
        return EXIT_OK
    if a == "reconstruct":
        src, tgt = _double_pair(args.source, args.target, args.modulus)
        q = io.quadruple_from_json(io.load_json(args.file), src.group, tgt.group, tgt.field)
        f = reconstruct(q, src, tgt)
        out.emit(io.dumps(io.morphism_to_json(f, args.source, args.target)))
        return EXIT_OK
    if a == "compose":
        f = _load_morphism(args.first, args.modulus)
        g = _load_morphism(args.second, args.modulus)
        if g.target.group != f.source.group or g.target.cocycle != f.source.cocycle:
            raise io.FormatError("the second map's target is not the first map's source")
        h = f.compose(g.reinterpret(g.source, f.source))
        out.emit(io.dumps(io.morphism_to_json(h)))
        return EXIT_OK
    raise AssertionError(a)


# -- classify -------------------------------------------------------------------------------

def cmd_classify(args, out: _Out) -> int:
    from . import classify as cl
    a = args.action
    if a == "rigid-conditions":
        src, tgt = _double_pair(args.source, args.target, args.modulus)
        q = io.quadruple_from_json(io.load_json(args.file), src.group, tgt.group, tgt.field)
        wit = cl.rigid_conditions(q, src.cocycle, tgt.cocycle, src, tgt)
        rep = wit.conditions
        rep.add("oracle_agrees", wit.agrees, {"oracle": wit.oracle})
        out.report(rep)
        print(f"five conditions: {'PASS' if wit.five_ok else 'FAIL'}; "
              f"oracle: {'PASS' if wit.oracle else 'FAIL'}")
        return _status(wit.five_ok and wit.agrees)
    if a == "bichar-auts":
        d = io.resolve_double(args.cocycle, args.modulus)
        maps = cl.bch_maps(d)
        rep = Report(f"bicharacter automorphisms ({len(maps)})")
        rep.add("pairwise_distinct", len(set(maps)) == len(maps))
        bad = next((i for i, f in enumerate(maps) if not rigid_oracle(f).ok), None)
        rep.add("rigid_automorphisms", bad is None, bad)
        return _status(out.report(rep))
    if a == "generate":
        d = io.resolve_double(args.cocycle, args.modulus)
        res = cl.center_quotient_subgroup(d)
        print(f"order {res.order}")
        ok = out.report(res.checks)
        if getattr(args, "out", None):
            out.emit(io.dumps(io.aut_group_report_to_json(res)))
        return _status(ok)
    raise AssertionError(a)


# -- examples -------------------------------------------------------------------------------

def cmd_examples(args, out: _Out) -> int:
    from .examples import run_example
    return _status(out.report(run_example(args.name)))


# -- parser ---------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--modulus", type=int, default=None,
                        help="order of the root of unity used for scalars")
    common.add_argument("--report", metavar="PATH", help="write JSON-lines check records here")

    p = argparse.ArgumentParser(prog="twisted-doubles",
                                description="Exact computations with twisted Drinfeld doubles.")
    sub = p.add_subparsers(dest="command", required=True)

    def action(parent, name, help_, *, out=False):
        sp = parent.add_parser(name, help=help_, parents=[common])
        if out:
            sp.add_argument("--out", metavar="PATH", help="write the result here")
        return sp

    g = sub.add_parser("group", help="finite groups").add_subparsers(dest="action", required=True)
    action(g, "make", "write a named group (Z4, D8, Z2xZ2)", out=True).add_argument("name")
    action(g, "inspect", "summarize a group", out=True).add_argument("group")

    c = sub.add_parser("cocycle", help="3-cocycles").add_subparsers(dest="action", required=True)
    action(c, "verify", "check normalization, the cocycle law and phase identities").add_argument(
        "cocycle")
    action(c, "phases", "print theta and gamma", out=True).add_argument("cocycle")
    sp = action(c, "cohomologous", "decide whether two cocycles are cohomologous")
    sp.add_argument("first")
    sp.add_argument("second")
    sp = action(c, "inflate", "inflate along a surjection given by images", out=True)
    sp.add_argument("cocycle")
    sp.add_argument("--group", required=True)
    sp.add_argument("--map", required=True, help="images of the group elements, e.g. '0,1,0,1'")
    sp = action(c, "act", "act by an automorphism given by images", out=True)
    sp.add_argument("cocycle")
    sp.add_argument("--aut", required=True)
    action(c, "catalog", "list catalog cocycles or write one", out=True).add_argument(
        "name", nargs="?")

    d = sub.add_parser("double", help="twisted doubles").add_subparsers(dest="action",
                                                                        required=True)
    action(d, "build", "build a double", out=True).add_argument("cocycle")
    action(d, "verify", "check the quasi-bialgebra and quasi-Hopf axioms").add_argument("cocycle")

    m = sub.add_parser("morphism", help="maps between doubles").add_subparsers(dest="action",
                                                                               required=True)
    action(m, "check", "quasi-Hopf morphism axioms").add_argument("file")
    action(m, "rigid", "rigidity oracle").add_argument("file")
    sp = action(m, "decompose", "extract (p, u, r, v)", out=True)
    sp.add_argument("file")
    sp.add_argument("--properties", action="store_true", help="also report component properties")
    sp = action(m, "reconstruct", "build a map from (p, u, r, v)", out=True)
    sp.add_argument("file")
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    sp = action(m, "compose", "first ∘ second", out=True)
    sp.add_argument("first")
    sp.add_argument("second")

    k = sub.add_parser("classify", help="rigid isomorphisms and automorphisms").add_subparsers(
        dest="action", required=True)
    sp = action(k, "rigid-conditions", "five-condition rigidity test with oracle cross-check")
    sp.add_argument("file")
    sp.add_argument("--source", required=True)
    sp.add_argument("--target", required=True)
    action(k, "bichar-auts", "automorphisms from bicharacters").add_argument("cocycle")
    action(k, "generate", "close the center-quotient subgroup", out=True).add_argument("cocycle")

    e = sub.add_parser("examples", help="worked examples").add_subparsers(dest="action",
                                                                         required=True)
    action(e, "run", "verify one worked example").add_argument("name")
    return p


HANDLERS = {"group": cmd_group, "cocycle": cmd_cocycle, "double": cmd_double,
            "morphism": cmd_morphism, "classify": cmd_classify, "examples": cmd_examples}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = _Out(args)
    try:
        code = HANDLERS[args.command](args, out)
    except (io.FormatError, KeyError, GroupError, CocycleError, ComponentError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
