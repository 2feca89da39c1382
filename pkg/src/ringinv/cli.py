"""Command-line front end.

Exit codes: 0 for a computed result or a passing verification, 1 when the
requested inverse does not exist or a theorem check fails, 2 for usage errors
(malformed ring, element or flag; exhaustive request on an infinite ring).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from . import along as al
from . import geninv as gi
from .errors import ConsistencyError, NotEnumerableError, NotRegularError, RingInvError
from .ideals import is_idempotent, is_unit
from .rings import Element, Ring, make_ring
from .verify import CATALOG, census, verify_theorem

EXIT_OK, EXIT_NONE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _show(x) -> Optional[str]:
    if x is None:
        return None
    if isinstance(x, Element):
        return str(x)
    return x


def _witnesses(w: dict) -> dict:
    return {k: _show(v) if isinstance(v, Element) else v for k, v in w.items()}


# --- subcommand handlers: each returns (document, exit code) -----------------

def _inverse_along(ring: Ring, args) -> tuple[dict, int]:
    a, d = ring(args.a), ring(args.d)
    dbar = ring(args.dbar) if args.dbar is not None else None
    if args.route == "definitional" and not ring.enumerable:
        raise NotEnumerableError(f"route definitional needs an enumerable ring; {ring.spec} is not")
    try:
        r = al.inverse_along(a, d, route=args.route, dbar=dbar)
    except NotRegularError as exc:
        return {"result": None, "route": args.route, "reason": str(exc)}, EXIT_NONE
    if r is None:
        return {"result": None, "route": args.route}, EXIT_NONE
    return {"result": str(r.inverse), "route": r.route, "witnesses": _witnesses(r.witnesses)}, EXIT_OK


def _group(ring: Ring, args) -> tuple[dict, int]:
    r = gi.group_inverse(ring(args.a))
    if r is None:
        return {"result": None}, EXIT_NONE
    return {"result": str(r.inverse), "spectral_idempotent": str(r.spectral_idempotent)}, EXIT_OK


def _drazin(ring: Ring, args) -> tuple[dict, int]:
    r = gi.drazin_inverse(ring(args.a))
    if r is None:
        return {"result": None}, EXIT_NONE
    return {
        "result": str(r.inverse),
        "index": r.index,
        "positive_index": r.positive_index,
        "spectral_idempotent": str(r.spectral_idempotent),
    }, EXIT_OK


def _gdrazin(ring: Ring, args) -> tuple[dict, int]:
    r = gi.generalized_drazin_inverse(ring(args.a))
    if r is None:
        return {"result": None}, EXIT_NONE
    return {"result": str(r.inverse), "spectral_idempotent": str(r.spectral_idempotent)}, EXIT_OK


def _mp(ring: Ring, args) -> tuple[dict, int]:
    a = ring(args.a)
    r = gi.mp_inverse(a)
    if r is None:
        return {"result": None}, EXIT_NONE
    return {"result": str(r.inverse), "ep": a * r.inverse == r.inverse * a}, EXIT_OK


def _classify(ring: Ring, args) -> tuple[dict, int]:
    a = ring(args.a)
    g = gi.group_inverse(a)
    dz = gi.drazin_inverse(a)
    doc = {
        "element": str(a),
        "unit": is_unit(a),
        "idempotent": is_idempotent(a),
        "regular": gi.is_regular(a),
        "group_invertible": g is not None,
        "drazin_index": None if dz is None else dz.index,
        "quasinilpotent": gi.is_quasinilpotent(a) if ring.enumerable else None,
    }
    if ring.has_involution:
        mp = gi.mp_inverse(a)
        doc["mp_invertible"] = mp is not None
        doc["ep"] = mp is not None and a * mp.inverse == mp.inverse * a
    return doc, EXIT_OK


def _census(ring: Ring, args) -> tuple[dict, int]:
    return census(ring).to_json(), EXIT_OK


def _verify(ring: Ring, args) -> tuple[dict, int]:
    ids = list(CATALOG) if args.theorem in (None, "all") else [args.theorem]
    reports = [verify_theorem(i, ring, seed=args.seed) for i in ids]
    code = EXIT_NONE if any(r.status == "fail" for r in reports) else EXIT_OK
    if len(reports) == 1:
        return reports[0].to_json(), code
    return {"ring": ring.spec, "reports": [r.to_json() for r in reports]}, code


def _decompose(ring: Ring, args) -> tuple[dict, int]:
    a, d = ring(args.a), ring(args.d)
    dbar = ring(args.dbar) if args.dbar is not None else None
    r = al.decompose_along(a, d, dbar, args.flavor)
    if r is None:
        return {"result": None, "flavor": args.flavor}, EXIT_NONE
    return {"result": {"s": str(r.s), "t": str(r.t)}, "flavor": r.flavor}, EXIT_OK


def _set_along(ring: Ring, args) -> tuple[dict, int]:
    d = ring(args.d)
    dbar = ring(args.dbar) if args.dbar is not None else None
    if args.side is None:
        members = al.invertibles_along(d)
    else:
        members = al.along_set_decomposition(d, dbar, args.side)
    return {"result": [str(x) for x in members], "size": len(members), "side": args.side}, EXIT_OK


HANDLERS = {
    "inverse-along": _inverse_along,
    "group": _group,
    "drazin": _drazin,
    "gdrazin": _gdrazin,
    "mp": _mp,
    "classify": _classify,
    "census": _census,
    "verify": _verify,
    "decompose": _decompose,
    "set-along": _set_along,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ringinv", description="Inverses along an element in concrete rings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, help_text, *positionals):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--ring", required=True, help="zmod:N, mat:K:zP or mat:K:q")
        p.add_argument("--format", choices=("json", "text"), default="json")
        for pos in positionals:
            p.add_argument(pos)
        return p

    p = command("inverse-along", "a||d by one of four routes", "a", "d")
    p.add_argument("--route", choices=al.ROUTES, default="corner")
    p.add_argument("--dbar", help="inner inverse of d to use")
    for name, text in [
        ("group", "group inverse"),
        ("drazin", "Drazin inverse and index"),
        ("gdrazin", "generalized Drazin inverse (finite rings)"),
        ("mp", "Moore-Penrose inverse"),
        ("classify", "element classification"),
    ]:
        command(name, text, "a")
    command("census", "classify every element of a finite ring")
    p = command("verify", "run catalog theorem checks")
    p.add_argument("--theorem", default="all", help="catalog id or 'all'")
    p.add_argument("--seed", type=int, default=0)
    p = command("decompose", "unique decomposition attached to a||d", "a", "d")
    p.add_argument("--flavor", choices=("left", "right", "idempotent"), default="left")
    p.add_argument("--dbar")
    p = command("set-along", "the set of elements invertible along d", "d")
    p.add_argument("--side", choices=("left", "right", "idempotent"), default=None)
    p.add_argument("--dbar")
    return parser


def _text(doc, indent: str = "") -> str:
    lines = []
    if isinstance(doc, dict) and "reports" in doc:
        lines.append(f"ring {doc['ring']}")
        for r in doc["reports"]:
            lines.append(f"  {r['theorem_id']:<11} {r['status']:<15} {r['instances_checked']:>8}")
        return "\n".join(lines)
    for k, v in sorted(doc.items()):
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        elif isinstance(v, list):
            lines.append(f"{indent}{k}: " + " ".join(str(x) for x in v))
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(lines)


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        ring = make_ring(args.ring)
        start = time.perf_counter()
        doc, code = HANDLERS[args.command](ring, args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError:
        raise
    except RingInvError as exc:
        print(f"ringinv: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if "elapsed_ms" not in doc:
        doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000.0, 3)
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        print(_text(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
