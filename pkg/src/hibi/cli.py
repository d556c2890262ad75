"""Command-line interface.

Every verb takes a poset source (inline JSON, a JSON file, or a DSL string
such as ``product(chain:2,chain:2)``).  Output is human-readable unless
``--json`` is given.  Exit codes: 0 success, 1 invalid input, 2 oracle
mismatch or internal invariant violation; errors are JSON on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Optional, Sequence

from .checks import verify_poset
from .divisors import (
    cartier_obstruction,
    class_generators,
    class_group_rank,
    is_cartier,
    picard_generators,
    picard_rank,
    reduce_to_class,
)
from .errors import HibiError, InputError, ParseError
from .ideals import DEFAULT_CAP, enumerate_ideals
from .io import divisor_from_json, load_poset
from .polytope import order_polytope
from .poset import Poset, arborescence
from .ring import hibi_relations, presentation_json, ring_generators
from .zlinalg import cl_oracle


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _default_cap() -> int:
    env = os.environ.get("HIBI_CAP")
    if env is None:
        return DEFAULT_CAP
    try:
        cap = int(env)
    except ValueError:
        raise ParseError(f"HIBI_CAP must be an integer, got {env!r}") from None
    if cap < 1:
        raise ParseError("HIBI_CAP must be at least 1")
    return cap


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def _fmt_set(P: Poset, S) -> str:
    return "{" + ", ".join(P.sort(S)) + "}"


# Each handler returns (json_payload, human_lines).
Handler = Callable[[Poset, argparse.Namespace], tuple[dict, list[str]]]


def _ideals(P, args):
    L = enumerate_ideals(P, args.cap)
    if args.count:
        return {"count": len(L)}, [f"count: {len(L)}"]
    return L.to_json(), [_fmt_set(P, I) for I in L]


def _polytope(P, args):
    poly = order_polytope(P, args.cap)
    lines = [f"dimension: {poly.dimension}", "vertices:"]
    lines += ["  (" + ", ".join(map(str, v)) + ")" for v in poly.vertices]
    lines.append("facets:")
    for f in poly.facets:
        terms = ""
        for p, u in zip(P.elements, f.normal):
            if u:
                sign = ("" if u > 0 else "-") if not terms else (" + " if u > 0 else " - ")
                terms += f"{sign}x[{p}]"
        lines.append(f"  {f.edge}: {terms} >= {-f.offset}")
    return poly.to_json(), lines


def _ring(P, args):
    L = enumerate_ideals(P, args.cap)
    lines = [f"generators: {len(L)} (embedding in P^{len(L) - 1})"]
    for g in ring_generators(P, args.cap):
        lines.append(f"  y{_fmt_set(P, g.ideal)} -> t^1 x^{g.exponent[1:]}")
    rels = hibi_relations(P, args.cap)
    lines.append(f"relations: {len(rels)}")
    for r in rels:
        I, J = r.pair
        lines.append(
            f"  y{_fmt_set(P, I)}*y{_fmt_set(P, J)} - y{_fmt_set(P, r.meet)}*y{_fmt_set(P, r.join)}"
        )
    return presentation_json(P, args.cap), lines


def _class_group(P, args):
    out = {"rank": class_group_rank(P)}
    lines = [f"rank: {out['rank']}"]
    if args.generators:
        T = arborescence(P)
        gens = [str(e) for e in class_generators(P, T)]
        out["tree"] = T.to_json(P)
        out["generators"] = gens
        lines.append("generators: " + ", ".join(f"[D({g})]" for g in gens))
    if args.oracle:
        free, torsion = cl_oracle(P)
        out["oracle"] = {"formula": out["rank"], "snf": free, "torsion": torsion}
        lines.append(f"oracle: Smith form cokernel Z^{free}, torsion {torsion}")
    return out, lines


def _picard(P, args):
    out = {"rank": picard_rank(P)}
    lines = [f"rank: {out['rank']}"]
    if args.generators:
        gens = [D.to_json(P) for D in picard_generators(P)]
        out["generators"] = gens
        for g in gens:
            lines.append("  " + " + ".join(f"{a}*D({e})" for e, a in g["coeffs"].items()))
    return out, lines


def _cartier(P, args):
    D = divisor_from_json(P, args.divisor)
    ok, cert = is_cartier(P, D, args.cap)
    out: dict = {"cartier": ok}
    lines = [f"cartier: {str(ok).lower()}"]
    if not ok:
        bad = cartier_obstruction(P, D, args.cap)
        out["obstruction"] = list(P.sort(bad))
        lines.append(f"obstruction at ideal {_fmt_set(P, bad)}")
    elif args.certificates:
        out["certificates"] = cert.to_json(P)
        for I, m in cert.per_ideal.items():
            lines.append(f"  {_fmt_set(P, I)}: m = {list(m)}")
    return out, lines


def _reduce(P, args):
    D = divisor_from_json(P, args.divisor)
    cls = reduce_to_class(P, arborescence(P), D)
    out = cls.to_json(P)
    lines = [f"{e}: {a}" for e, a in out["coords"].items()]
    return out, lines


def _verify(P, args):
    report = verify_poset(P, box=args.box, cap=args.cap)
    lines = [f"{'PASS' if ok else 'FAIL'} {name}" for name, ok in report["checks"].items()]
    cl, pic = report["cl"], report["pic"]
    lines.append(f"Cl: formula Z^{cl['formula']}, Smith form Z^{cl['snf']}, torsion {cl['torsion']}")
    lines.append(f"Pic: formula Z^{pic['formula']}, box {pic['box']}, verified {pic['verified']}")
    return report, lines


def hasse_dot(P: Poset) -> str:
    lines = ["digraph hasse {", "  rankdir=BT;"]
    lines += [f'  "{p}";' for p in P.elements]
    lines += [f'  "{e.lower}" -> "{e.upper}";' for e in P.covers]
    lines.append("}")
    return "\n".join(lines)


def _hasse(P, args):
    if args.dot:
        return {"dot": hasse_dot(P)}, [hasse_dot(P)]
    lines = [f"elements: {', '.join(P.elements)}"]
    lines += [str(e) for e in P.covers]
    return P.to_json(), lines


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit canonical JSON")
    common.add_argument("--cap", type=_positive, default=argparse.SUPPRESS,
                        help="maximum number of order ideals to enumerate")

    parser = _Parser(prog="hibi", description="Invariants of projective Hibi varieties.")
    parser.add_argument("--json", action="store_true", help="emit canonical JSON")
    parser.add_argument("--cap", type=_positive, default=None,
                        help="maximum number of order ideals (default: $HIBI_CAP or 10^6)")
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def verb(name, handler, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.add_argument("poset", help="poset JSON, JSON file, or DSL expression")
        p.set_defaults(handler=handler)
        return p

    verb("ideals", _ideals, "order ideal lattice").add_argument("--count", action="store_true")
    verb("polytope", _polytope, "vertices and facets of the order polytope")
    verb("ring", _ring, "Hibi ring generators and relations")
    p = verb("class-group", _class_group, "divisor class group")
    p.add_argument("--generators", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check with the Smith normal form")
    verb("picard", _picard, "Picard group").add_argument("--generators", action="store_true")
    p = verb("cartier", _cartier, "decide whether a divisor is Cartier")
    p.add_argument("--divisor", required=True, help='{"coeffs": {"lower<upper": k}}')
    p.add_argument("--certificates", action="store_true")
    verb("reduce", _reduce, "class coordinates of a divisor").add_argument("--divisor", required=True)
    verb("verify", _verify, "run all invariant checks and oracles").add_argument(
        "--box", type=_positive, default=2)
    verb("hasse", _hasse, "Hasse diagram").add_argument("--dot", action="store_true")
    return parser


def _emit_error(exc: Exception, stream) -> None:
    stream.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")


def main(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.cap is None:
            args.cap = _default_cap()
        P = load_poset(args.poset)
        payload, lines = args.handler(P, args)
    except InputError as exc:
        _emit_error(exc, stderr)
        return 1
    except HibiError as exc:
        _emit_error(exc, stderr)
        return 2
    if args.json:
        stdout.write(json.dumps(payload) + "\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    if args.verb == "verify" and not all(payload["checks"].values()):
        return 2
    return 0


def run() -> None:
    sys.exit(main())
