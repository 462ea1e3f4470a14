"""Command line front end.

Every subcommand builds a JSON-ready payload; ``--format text`` renders the
same payload for reading.  Exit codes: 0 success, 1 failed check, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections.abc import Sequence
from pathlib import Path

from . import algebras, catalog, frobenius, graph, grmod, orient, tqft

ITEMS = (
    ("(i)", "associativity", ("associativity",)),
    ("(ii)", "unitality", ("unit_left", "unit_right")),
    ("(iii)", "coassociativity", ("coassociativity",)),
    ("(iv)", "counitality", ("counit_left", "counit_right")),
    ("(v)", "Frobenius", ("frobenius_left", "frobenius_right")),
    ("(vi)", "commutativity", ("commutativity",)),
    ("(vi')", "symmetry", ("symmetry",)),
)
GENERATORS = ("multi", "comulti", "unit", "counit")


class InputError(Exception):
    pass


class CheckFailed(Exception):
    def __init__(self, payload: dict):
        super().__init__("check failed")
        self.payload = payload


# ---------------------------------------------------------------------------
# resolving inputs


def _graph(ref: str) -> graph.Graph:
    try:
        if ref == "-":
            return graph.graph_from_json(json.load(sys.stdin))
        return catalog.resolve_graph(ref)
    except FileNotFoundError as exc:
        raise InputError(str(exc)) from exc
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read graph {ref!r}: {exc}") from exc


def _valid_graph(ref: str) -> graph.Graph:
    g = _graph(ref)
    problems = graph.validate(g)
    if problems:
        raise InputError(f"invalid graph {ref}: " + "; ".join(problems))
    return g


_RCD = re.compile(r"^R_?\(?(-?\d+),(-?\d+)\)?$")


def builtin_algebra(name: str) -> frobenius.FrobeniusData:
    """Builtin algebras by name: ``R1,1``, ``unit``, ``S2``, ``T2``, ``CP2``."""
    m = _RCD.match(name.replace(" ", ""))
    if m:
        return frobenius.builtin_Rcd(int(m.group(1)), int(m.group(2)))
    low = name.lower()
    if low == "unit":
        return frobenius.unit_algebra()
    if low in ("t2", "torus"):
        return algebras.torus()
    m = re.match(r"^(?:s|sphere)(\d+)$", low)
    if m:
        return algebras.sphere(int(m.group(1)))
    m = re.match(r"^cp(\d+)$", low)
    if m:
        return algebras.cohomology_algebra(algebras.projective_presentation(int(m.group(1))))
    raise InputError(f"unknown algebra {name!r}")


def _algebra(ref: str | None, args) -> frobenius.FrobeniusData:
    if ref is None:
        if args.c is None or args.d is None:
            raise InputError("give --algebra or both --c and --d")
        return frobenius.builtin_Rcd(args.c, args.d)
    p = Path(ref)
    if p.suffix == ".json":
        if not p.exists():
            raise InputError(f"no such file {ref}")
        with open(p) as fh:
            obj = json.load(fh)
        if "gens" in obj:
            return algebras.cohomology_algebra(algebras.presentation_from_json(obj))
        return frobenius.algebra_from_json(obj)
    return builtin_algebra(ref)


def _cd(args, default=(1, 1)) -> tuple[int, int]:
    return (
        args.c if args.c is not None else default[0],
        args.d if args.d is not None else default[1],
    )


def _orientation(
    ref: str | None, g: graph.Graph, c: int, d: int, name: str = ""
) -> orient.CdOrientation:
    if ref is None:
        key = _stem(name).lower()
        if key in GENERATORS and g == graph.elementary(key):
            return orient.generator_orientation(key, c, d)
        return orient.canonical_orientation(g, c, d)
    with open(ref) as fh:
        return orient.cd_from_json(json.load(fh), g)


def _stem(ref: str) -> str:
    return Path(ref).stem if ref.endswith(".json") else ref


def _word(ref: str, g: graph.Graph, side: str) -> orient.OrientationWord:
    """The chosen generator word for the four generators, else the canonical one."""
    name = _stem(ref).lower()
    if name in GENERATORS and graph.isomorphic(g, graph.elementary(name)):
        return orient.generator_word(name, side)
    return orient.canonical_word(g, side)


def _tagged(w: orient.OrientationWord, tag: str) -> orient.OrientationWord:
    table = {x: f"{tag}{x}" for x in graph.ids(w.graph)}
    return orient.rename_word(w, table, graph.rename(w.graph, table))


def _padded(inner: graph.Graph, width: int, port: int) -> tuple[graph.Graph, list]:
    """``id^(port-1) (x) inner (x) id^rest`` as graphs, left to right."""
    before = port - 1
    after = width - before - len(inner.legs_out)
    if before < 0 or after < 0:
        raise InputError(f"port {port} does not fit {len(inner.legs_out)} strands into {width}")
    pieces = [graph.identity_graph(1, f"p{i}") for i in range(before)]
    pieces.append(inner)
    pieces += [graph.identity_graph(1, f"q{i}") for i in range(after)]
    return graph.disjoint_union_all(pieces), pieces


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> dict:
    g = _graph(args.graph)
    problems = graph.validate(g)
    if problems:
        raise InputError("; ".join(problems))
    return {
        "valid": True,
        "vertices": len(g.vertices),
        "edges": len(g.edges),
        "in": len(g.legs_in),
        "out": len(g.legs_out),
        "forest": graph.is_forest(g),
        "components": len(graph.components(g)),
    }


def cmd_sign(args) -> dict:
    side = args.side
    if args.kind == "compose":
        if not (args.left and args.right):
            raise InputError("sign compose needs --left and --right")
        outer, inner = _valid_graph(args.left), _valid_graph(args.right)
        wo = _tagged(_word(args.left, outer, side), "L.")
        wi = _tagged(_word(args.right, inner, side), "R.")
        width = len(outer.legs_in)
        _, pieces = _padded(inner, width, args.port)
        w = None
        for i, piece in enumerate(pieces):
            pw = wi if piece is inner else orient.canonical_word(piece, side)
            w = pw if w is None else orient.tensor_words(w, pw)
        out = orient.compose_words(wo, w)
        return {"kind": "compose", "side": side, "port": args.port, "sign": out.sign, "word": out.to_json()}
    if not args.graph:
        raise InputError(f"sign {args.kind} needs a graph")
    g = _valid_graph(args.graph)
    if args.kind == "collapse":
        if not args.edge:
            raise InputError("sign collapse needs --edge")
        w = _word(args.graph, g, side)
        if args.edge not in g.edge_names:
            raise InputError(f"no edge {args.edge!r}")
        out = orient.collapse_action(w, args.edge)
        return {"kind": "collapse", "side": side, "edge": args.edge, "sign": out.sign * w.sign,
                "word": out.to_json()}
    c, d = _cd(args)
    o = _orientation(args.orientation, g, c, d, args.graph)
    actions = []
    for iso in graph.find_isomorphisms(g, g, limit=256):
        actions.append({
            "vertices": dict(sorted(iso.vertices.items())),
            "sign": orient.cd_automorphism_action(o, iso),
        })
    return {"kind": "automorphism", "c": c, "d": d, "actions": actions,
            "sign": min((a["sign"] for a in actions), default=1)}


def cmd_compose(args) -> dict:
    outer, inner = _valid_graph(args.left), _valid_graph(args.right)
    padded, _ = _padded(inner, len(outer.legs_in), args.port)
    try:
        return graph.graph_to_json(graph.glue(padded, outer))
    except graph.GraphError as exc:
        raise InputError(str(exc)) from exc


def cmd_collapse(args) -> dict:
    g = _valid_graph(args.graph)
    try:
        return graph.graph_to_json(graph.collapse_edge(g, args.edge))
    except (graph.GraphError, KeyError) as exc:
        raise InputError(f"cannot collapse {args.edge}: {exc}") from exc


def cmd_orbit(args) -> dict:
    g = _valid_graph(args.graph)
    c, d = _cd(args)
    oc = orient.orbit_class(g, c, d)
    return {"c": c, "d": d, "class": str(oc), "witness": list(oc.witness)}


def cmd_decompose(args) -> dict:
    g = _valid_graph(args.graph)
    try:
        dec = tqft.decompose(g, args.seed, args.flavor or "commutative")
    except tqft.PlanarTwistRequired as exc:
        raise InputError(str(exc)) from exc
    return {
        "expression": dec.expression(),
        "layers": [[a.token() for a in layer.atoms] for layer in dec.layers],
        "in": dec.n_in,
        "out": dec.n_out,
        "counts": dec.counts(),
        "seed": args.seed,
    }


def cmd_evaluate(args) -> dict:
    g = _valid_graph(args.graph)
    f = _algebra(args.algebra, args)
    if args.flavor:
        f = f.with_(flavor=args.flavor)
    o = _orientation(args.orientation, g, f.c, f.d, args.graph)
    try:
        ev = tqft.evaluate_oriented(g, o, f, args.seed)
    except (tqft.FlavorMismatch, tqft.OrientationMismatch, tqft.PlanarTwistRequired) as exc:
        raise InputError(str(exc)) from exc
    return {
        "map": grmod.map_to_json(ev.map),
        "sign": ev.sign,
        "torsion": ev.torsion,
        "expression": ev.decomposition.expression(),
        "seed": args.seed,
    }


def check_payload(f: frobenius.FrobeniusData, snake: bool) -> dict:
    report = frobenius.check_relations(f, snake=snake)
    items = []
    for label, title, keys in ITEMS:
        present = [k for k in keys if k in report.verdicts]
        if not present:
            items.append({"item": label, "relation": title, "status": "n/a"})
            continue
        bad = [k for k in present if not report.verdicts[k].ok]
        entry = {"item": label, "relation": title, "status": "fail" if bad else "pass"}
        if bad:
            entry["failures"] = {k: report.verdicts[k].to_json() for k in bad}
        items.append(entry)
    out = {"c": f.c, "d": f.d, "flavor": f.flavor, "ok": report.ok, "items": items}
    if report.snake is not None:
        out["snake"] = "pass" if report.snake.ok else "fail"
    return out


def cmd_check(args) -> dict:
    f = _algebra(args.algebra, args)
    if args.flavor:
        f = f.with_(flavor=args.flavor)
    payload = check_payload(f, args.snake)
    if not payload["ok"]:
        raise CheckFailed(payload)
    return payload


def cmd_suspend(args) -> dict:
    f = _algebra(args.algebra, args)
    for _ in range(args.times):
        f = frobenius.desuspend_algebra(f) if args.down else frobenius.suspend_algebra(f)
    return f.to_json()


def cmd_tensor(args) -> dict:
    f1, f2 = _algebra(args.first, args), _algebra(args.second, args)
    if (f1.c, f1.d) != (f2.c, f2.d):
        raise InputError(f"cannot tensor ({f1.c},{f1.d}) with ({f2.c},{f2.d})")
    return frobenius.tensor_algebras(f1, f2).to_json()


def cmd_examples(args) -> dict:
    if args.what == "list":
        return {
            "graphs": sorted(catalog.catalogue()),
            "algebras": ["R<c>,<d>", "unit", "S<d>", "T2", "CP<n>"],
        }
    if args.what == "graph":
        return graph.graph_to_json(_graph(args.name))
    if args.what == "algebra":
        return builtin_algebra(args.name).to_json()
    if args.what == "write":
        written = catalog.write_catalogue(args.name)
        return {"written": [str(p) for p in written]}
    raise InputError(f"unknown examples action {args.what!r}")


COMMANDS = {
    "validate": cmd_validate,
    "sign": cmd_sign,
    "compose": cmd_compose,
    "collapse": cmd_collapse,
    "orbit": cmd_orbit,
    "decompose": cmd_decompose,
    "evaluate": cmd_evaluate,
    "check": cmd_check,
    "suspend": cmd_suspend,
    "tensor": cmd_tensor,
    "examples": cmd_examples,
}


# ---------------------------------------------------------------------------
# text rendering


def render_text(command: str, payload: dict) -> str:
    if command == "check":
        lines = [f"(c, d) = ({payload['c']}, {payload['d']}), flavor {payload['flavor']}"]
        for it in payload["items"]:
            lines.append(f"{it['item']:<6} {it['relation']:<16} {it['status']}")
            for k, v in it.get("failures", {}).items():
                lines.append(f"       {k}: witness {v.get('witness')!r} {v.get('detail', '')}".rstrip())
        if "snake" in payload:
            lines.append(f"{'':<6} {'snake':<16} {payload['snake']}")
        lines.append("all relations hold" if payload["ok"] else "some relations fail")
        return "\n".join(lines)
    if command == "sign":
        if payload["kind"] == "automorphism":
            return "\n".join(str(a["sign"]) for a in payload["actions"])
        return str(payload["sign"])
    if command == "decompose":
        return payload["expression"]
    if command == "orbit":
        return payload["class"]
    if command == "evaluate":
        m = grmod.map_from_json(payload["map"])
        head = f"{payload['expression']}  (sign {payload['sign']}, torsion {payload['torsion']})"
        return head + "\n" + _matrix_text(m)
    if command == "validate":
        return "valid: " + ", ".join(f"{k}={v}" for k, v in payload.items() if k != "valid")
    return json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)


def _matrix_text(m: grmod.GradedMap) -> str:
    lines = [f"degree {m.degree}"]
    for a in m.source.basis:
        col = m.column(a)
        terms = " + ".join(f"{v}*{_label(b)}" for b, v in col.items()) or "0"
        lines.append(f"  {_label(a)} -> {terms}")
    return "\n".join(lines)


def _label(x) -> str:
    if isinstance(x, tuple):
        return "⊗".join(x) if x else "1"
    return str(x)


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--c", type=int, default=None)
    common.add_argument("--d", type=int, default=None)
    common.add_argument("--flavor", choices=frobenius.FLAVORS, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="write output to this path")

    p = argparse.ArgumentParser(prog="frobgraph", description="graph cobordisms and graded Frobenius algebras")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check graph invariants")
    s.add_argument("graph")

    s = sub.add_parser("sign", parents=[common], help="orientation sign of a composition, collapse or automorphism")
    s.add_argument("kind", choices=("compose", "collapse", "automorphism"))
    s.add_argument("graph", nargs="?")
    s.add_argument("--left")
    s.add_argument("--right")
    s.add_argument("--port", type=int, default=1)
    s.add_argument("--edge")
    s.add_argument("--side", choices=("in", "out"), default="in")
    s.add_argument("--orientation")

    s = sub.add_parser("compose", parents=[common], help="glue --right into --left at --port")
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    s.add_argument("--port", type=int, default=1)

    s = sub.add_parser("collapse", parents=[common], help="collapse one edge")
    s.add_argument("graph")
    s.add_argument("--edge", required=True)

    s = sub.add_parser("orbit", parents=[common], help="orbit class of the orientation line")
    s.add_argument("graph")

    s = sub.add_parser("decompose", parents=[common], help="layered decomposition")
    s.add_argument("graph")

    s = sub.add_parser("evaluate", parents=[common], help="evaluate an oriented graph on an algebra")
    s.add_argument("graph")
    s.add_argument("--algebra")
    s.add_argument("--orientation")

    s = sub.add_parser("check", parents=[common], help="check the Frobenius relations")
    s.add_argument("--algebra")
    s.add_argument("--snake", action="store_true")

    s = sub.add_parser("suspend", parents=[common], help="suspend an algebra")
    s.add_argument("--algebra")
    s.add_argument("--times", type=int, default=1)
    s.add_argument("--down", action="store_true", help="desuspend instead")

    s = sub.add_parser("tensor", parents=[common], help="tensor product of two algebras")
    s.add_argument("first")
    s.add_argument("second")

    s = sub.add_parser("examples", parents=[common], help="builtin graphs and algebras")
    s.add_argument("what", choices=("list", "graph", "algebra", "write"))
    s.add_argument("name", nargs="?")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    code = 0
    try:
        payload = COMMANDS[args.command](args)
    except CheckFailed as exc:
        payload, code = exc.payload, 1
    except (InputError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    if args.format == "json":
        text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
    else:
        text = render_text(args.command, payload)
    _emit(text, args.out)
    return code


def main() -> None:
    sys.exit(run())
