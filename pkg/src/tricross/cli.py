"""Command-line front end.

Every subcommand reads one input: a file path, a fixture name, ``-`` (or
nothing) for stdin, or the literal text itself.  Diagram text and
``braid <s>: ...`` text are both accepted wherever a diagram is expected.
Errors print ``CODE: message`` on stderr and exit with status 1.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analyzer, bigons, braids, covering, diagram, ncross, resolve, skein, textio
from .errors import ParseError, PreconditionError, TricrossError
from .fixtures import FIXTURE_NAMES, fixture_text

__all__ = ["main", "build_parser"]


def _read(source: str | None) -> str:
    if source in (None, "-"):
        return sys.stdin.read()
    if os.path.exists(source):
        with open(source) as fh:
            return fh.read()
    if source in FIXTURE_NAMES:
        return fixture_text(source)
    return source


def _is_braid(text: str) -> bool:
    return text.lstrip().startswith("braid")


def _parse_orient_flag(spec: str) -> dict[int, int]:
    return textio._parse_orient(spec.replace(" ", ""), 0)


def load(args, want_braid: bool = False):
    """Oriented diagram, or a BraidWord when ``want_braid`` and the text is one."""
    text = _read(args.input)
    if _is_braid(text):
        b = braids.parse_braid(text)
        if want_braid:
            return b
        return braids.braid_closure(b, oriented=True)
    od = textio.parse_oriented(text)
    if getattr(args, "orient", None):
        od = diagram.orient(od.diagram, _parse_orient_flag(args.orient))
    return od


def _diagram_out(od, extra=None) -> tuple[str, dict]:
    d = od.diagram if isinstance(od, diagram.OrientedDiagram) else od
    text = textio.serialize_oriented(od) if isinstance(od, diagram.OrientedDiagram) else textio.serialize(d)
    payload = {"crossings": len(d.crossings), "n": d.n, "diagram": text}
    payload.update(extra or {})
    return text, payload


def _poly_payload(p) -> dict:
    out = {"polynomial": p.to_pairs(), "text": str(p)}
    if not p.is_zero():
        out["span"] = skein.span(p)
    return out


# subcommands ----------------------------------------------------------------


def cmd_validate(args):
    text = _read(args.input)
    if _is_braid(text):
        d = braids._closure(braids.parse_braid(text))[0]
    else:
        d, _ = textio._parse_statements(text)
    rep = diagram.validate(d)
    payload = {
        "ok": rep.ok,
        "violations": [{"code": c, "message": m} for c, m in rep.violations],
        "faces": rep.face_count,
        "components": rep.component_count,
        "connected": rep.connected,
        "crossings": len(d.crossings),
    }
    lines = [
        f"{'valid' if rep.ok else 'invalid'}: {len(d.crossings)} crossings, {rep.face_count} faces, "
        f"{rep.component_count} components"
    ]
    lines += [f"{c}: {m}" for c, m in rep.violations]
    status = 0
    if not rep.ok:
        code, msg = rep.violations[0]
        print(f"{code}: {msg}", file=sys.stderr)
        status = 1
    return "\n".join(lines) + "\n", payload, status


def cmd_faces(args):
    d = load(args).diagram
    fs = diagram.faces(d)
    payload = {"count": len(fs), "faces": [[list(c) for c in f.corners] for f in fs]}
    lines = [f"{len(fs)} faces"]
    lines += [f"  {len(f)}: " + " ".join(f"{c}.{g}" for c, g in f.corners) for f in fs]
    return "\n".join(lines) + "\n", payload


def cmd_components(args):
    d = load(args).diagram
    comps = diagram.components(d)
    payload = {"count": comps.count, "edge_component": {str(e): k + 1 for e, k in sorted(comps.edge_component.items())}}
    lines = [f"{comps.count} components"]
    by_comp: dict[int, list[int]] = {}
    for e, k in sorted(comps.edge_component.items()):
        by_comp.setdefault(k, []).append(e)
    lines += [f"  c{k + 1}: edges {' '.join(map(str, es))}" for k, es in sorted(by_comp.items())]
    return "\n".join(lines) + "\n", payload


def _bracket(args):
    od = load(args)
    d = od.diagram
    if args.normalized:
        return skein.normalized_polynomial(od, cap=args.cap)
    if d.is_double:
        cap = skein.DOUBLE_CAP if args.cap is None else args.cap
        return skein.bracket_double(d, cap=cap, method=args.method)
    if all(c.n == 3 for c in d.crossings):
        cap = skein.TRIPLE_CAP if args.cap is None else args.cap
        return skein.bracket_triple(d, cap=cap, method=args.method)
    r = resolve.resolve_multi(d)
    cap = skein.DOUBLE_CAP if args.cap is None else args.cap
    return skein.bracket_double(r, cap=cap, method=args.method)


def cmd_bracket(args):
    p = _bracket(args)
    return str(p) + "\n", _poly_payload(p)


def cmd_span(args):
    p = _bracket(args)
    s = skein.span(p)
    return f"{s}\n", {"span": s, "c3_lower": skein.c3_lower_from_span(p)}


def cmd_resolve(args):
    od = load(args)
    return _diagram_out(resolve.resolve_multi(od))


def cmd_braid_close(args):
    b = load(args, want_braid=True)
    if not isinstance(b, braids.BraidWord):
        raise ParseError("braid-close needs braid text")
    return _diagram_out(braids.braid_closure(b, oriented=True))


def cmd_fold_braid(args):
    b = load(args, want_braid=True)
    if not isinstance(b, braids.BraidWord):
        raise ParseError("fold-braid needs braid text")
    return _diagram_out(braids.fold_braid(b, oriented=True))


def _double(args):
    od = load(args)
    if not od.diagram.is_double:
        raise PreconditionError("this command needs a double-crossing diagram", "E_STRAND")
    return od


def _node_cap(args):
    return covering.NODE_CAP if args.cap is None else args.cap


def cmd_covering(args):
    d = _double(args).diagram
    coll = covering.find_covering_collections(d, mode=args.mode, cap=_node_cap(args))
    payload = {"circles": len(coll), "collection": coll.to_json()}
    lines = [f"{len(coll)} circles"]
    lines += ["  " + " ".join(f"{p.crossing}.{p.gap}" for p in circle) for circle in coll.circles]
    return "\n".join(lines) + "\n", payload


def cmd_fold(args):
    od = _double(args)
    coll = covering.find_covering_collections(od.diagram, mode=args.mode, cap=_node_cap(args))
    return _diagram_out(covering.fold_along(od, coll), {"circles": len(coll)})


def cmd_bigons(args):
    d = _double(args).diagram
    chains = bigons.bigon_chains(d)
    even = bigons.even_bigon_condition(d)
    payload = {
        "twist_number": len(chains),
        "even": even,
        "chains": [{"crossings": list(ch.crossings), "length": ch.length, "cyclic": ch.cyclic} for ch in chains],
    }
    lines = [f"twist number {len(chains)}, even bigon chains: {'yes' if even else 'no'}"]
    lines += [f"  {' '.join(map(str, ch.crossings))}" + (" (cyclic)" if ch.cyclic else "") for ch in chains]
    return "\n".join(lines) + "\n", payload


def cmd_twist(args):
    return _diagram_out(bigons.twist_bigon_chains(_double(args)))


def cmd_cor36(args):
    return _diagram_out(bigons.cor36_construction(_double(args), cap=args.cap))


def cmd_full_twist(args):
    return _diagram_out(braids.full_twist_generator(args.m, oriented=True))


def cmd_to_even_n(args):
    return _diagram_out(ncross.double_to_even_n(_double(args), args.n))


def cmd_fold_multi(args):
    od = load(args)
    d = od.diagram
    base = d if d.is_double else ncross.collapse_even_n(d)
    coll = covering.find_covering_collections(base, mode=args.mode, cap=_node_cap(args))
    return _diagram_out(covering.fold_multi(od, coll), {"circles": len(coll)})


def _report_text(rep: analyzer.BoundsReport) -> str:
    c3 = rep.c3
    lines = [
        f"crossings: {rep.crossings}",
        f"alternating: {rep.alternating}, reduced: {rep.reduced}, twist number: {rep.twist_number}",
    ]
    upper = "?" if c3.upper is None else str(c3.upper)
    lines.append(
        f"c3: {c3.lower} <= c3 <= {upper}{' (exact)' if c3.exact else ''}"
        f"  [lower: {c3.lower_provenance}; upper: {c3.upper_provenance}]"
    )
    for n, lo, hi in rep.cn:
        lines.append(f"c{n}: {lo} <= c{n} <= {hi}")
    for v in rep.volume:
        flag = "" if v.applicable else f"  (not applicable: {v.reason})"
        lines.append(f"volume <= {v.value} by {v.formula}{flag}")
    if c3.witness is not None:
        lines.append("witness:")
        lines.append(c3.witness.text.rstrip("\n"))
    lines += [f"note: {m}" for m in rep.notices]
    return "\n".join(lines) + "\n"


def cmd_bounds(args):
    src = load(args, want_braid=True)
    rep = analyzer.c3_bounds(
        src,
        known_c=args.known_c,
        assume_nontrivial=not args.no_span_bound,
        ns=tuple(args.n or ()),
        hyperbolic=args.hyperbolic,
        cap=skein.DOUBLE_CAP if args.cap is None else args.cap,
    )
    return _report_text(rep), rep.to_json()


def cmd_volume(args):
    vs = analyzer.volume_bounds(c=args.c, c3=args.c3, tw=args.tw, hyperbolic=args.hyperbolic)
    lines = [
        f"{v.formula}: {v.value if v.value is not None else '-'}"
        + ("" if v.applicable else f"  (not applicable: {v.reason})")
        for v in vs
    ]
    return "\n".join(lines) + "\n", {"volume_bounds": [v.to_json() for v in vs]}


def cmd_table_check(args):
    if args.input is None and args.name in FIXTURE_NAMES:
        args.input = args.name
    d = _double(args).diagram
    v = analyzer.knot_table_check(args.name, d)
    payload = {"name": v.name, "verdict": v.verdict, "expected": v.expected, "report": v.report.to_json()}
    c3 = v.report.c3
    text = f"{v.name}: {v.verdict} (expected {v.expected}, bounds {c3.lower}..{c3.upper})\n"
    return text, payload


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tricross", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cap", type=int, default=None, help="crossing cap, or node cap for searches")
    common.add_argument("--orient", default=None, help="component signs such as c1=+,c2=-")

    def add(name, func, help_, input_=True):
        p = sub.add_parser(name, parents=[common], help=help_)
        if input_:
            p.add_argument("input", nargs="?", help="file, fixture name, '-' for stdin, or literal text")
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check a diagram's invariants")
    add("faces", cmd_faces, "list faces as corner cycles")
    add("components", cmd_components, "count link components")
    p = add("bracket", cmd_bracket, "bracket polynomial")
    p.add_argument("--normalized", action="store_true", help="multiply by (-A^3)^-writhe")
    p.add_argument("--method", choices=("frontier", "enumerate"), default="frontier")
    p = add("span", cmd_span, "span of the bracket")
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--method", choices=("frontier", "enumerate"), default="frontier")
    add("resolve", cmd_resolve, "resolve multi-crossings into double crossings")
    add("braid-close", cmd_braid_close, "closure of a braid")
    add("fold-braid", cmd_fold_braid, "triple diagram folded from a braid")
    for name, func, help_ in (
        ("covering", cmd_covering, "find a crossing covering collection"),
        ("fold", cmd_fold, "fold along a covering collection"),
        ("fold-multi", cmd_fold_multi, "add one strand to every crossing of an even multi diagram"),
    ):
        p = add(name, func, help_)
        p.add_argument("--mode", choices=("first", "maximum"), default="maximum")
    add("bigons", cmd_bigons, "maximal bigon chains and twist number")
    add("twist", cmd_twist, "twist alternate bigons into triple crossings")
    add("cor36", cmd_cor36, "fold a three-crossing circle and twist the remainder")
    p = add("full-twist", cmd_full_twist, "triple braid of m full twists on 3 strings", input_=False)
    p.add_argument("--m", type=int, default=1)
    p = add("to-even-n", cmd_to_even_n, "replace double crossings by even n-crossings")
    p.add_argument("--n", type=int, default=4)
    p = add("bounds", cmd_bounds, "triple and n-crossing number bounds")
    p.add_argument("--known-c", type=int, default=None)
    p.add_argument("--hyperbolic", action="store_true")
    p.add_argument("--n", type=int, action="append", help="report n-crossing bounds (repeatable)")
    p.add_argument("--no-span-bound", action="store_true", help="the link may be trivial")
    p = add("volume", cmd_volume, "hyperbolic volume upper bounds", input_=False)
    p.add_argument("--c", type=int, default=None)
    p.add_argument("--c3", type=int, default=None)
    p.add_argument("--tw", type=int, default=None)
    p.add_argument("--hyperbolic", action="store_true")
    p = sub.add_parser("table-check", parents=[common], help="compare with the expected table value")
    p.add_argument("name")
    p.add_argument("input", nargs="?")
    p.set_defaults(func=cmd_table_check)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except TricrossError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    text, payload, *rest = result
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        sys.stdout.write(text)
    return rest[0] if rest else 0


if __name__ == "__main__":
    sys.exit(main())
