"""Named test graphs and the on-disk catalogue.

The catalogue directory holds one ``<name>.json`` per graph.  It is
located through the ``FROBGRAPH_CATALOG`` environment variable and
falls back to the graphs built in this module.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

from .graph import (
    Graph,
    disjoint_union,
    disjoint_union_all,
    elementary,
    glue,
    graph_from_json,
    graph_to_json,
    identity_graph,
    make_graph,
    relabel,
    star,
    validate,
)

ENV = "FROBGRAPH_CATALOG"


def _tag(g: Graph, tag: str) -> Graph:
    return relabel(g, lambda x: f"{tag}.{x}")


def _builders() -> dict:
    m, c = elementary("multi"), elementary("comulti")
    u, k = elementary("unit"), elementary("counit")
    idg = identity_graph()

    def pair(a, b):
        return disjoint_union(_tag(a, "a"), _tag(b, "b"))

    copair = glue(u, c)
    sympair = glue(m, k)
    return {
        "multi": m,
        "comulti": c,
        "unit": u,
        "counit": k,
        "id": idg,
        "twist": elementary("twist"),
        "assoc_left": glue(pair(m, idg), m),
        "assoc_right": glue(pair(idg, m), m),
        "coassoc_left": glue(c, pair(c, idg)),
        "frobenius_middle": glue(m, c),
        "handle": glue(c, m),
        "sympair": sympair,
        "copair": copair,
        "snake": glue(glue(pair(idg, copair), pair(sympair, idg)), identity_graph(1, "z")),
        "sphere": glue(u, k),
        "torus": glue(glue(glue(u, c), m), k),
        "star_3_2": star(3, 2),
        "star_1_3": star(1, 3),
        "point": Graph(("p",), (), {}, {}, (), (), {}, {"p": ()}),
        "tadpole_cap": make_graph(
            ["a", "b"],
            {"e0": ("x", "a", "y", "b"), "e1": ("p", "b", "q", "b")},
            ["a"], [],
            {"a": ("x",), "b": ("y", "p", "q")},
        ),
        "tadpole_through": make_graph(
            ["a", "b", "o"],
            {"e0": ("x", "a", "y", "b"), "e1": ("p", "b", "q", "b"), "e2": ("r", "b", "w", "o")},
            ["a"], ["o"],
            {"a": ("x",), "b": ("y", "p", "q", "r"), "o": ("w",)},
        ),
        "figure_eight": make_graph(
            ["b"],
            {"e0": ("x", "b", "y", "b"), "e1": ("p", "b", "q", "b")},
            [], [],
            {"b": ("x", "p", "y", "q")},
        ),
        "multi_and_counit": pair(m, k),
        "units_and_id": disjoint_union_all([_tag(u, "a"), _tag(u, "b"), _tag(idg, "c")]),
        "leg_to_leg": make_graph(
            ["i", "o"], {"e0": ("x", "i", "y", "o")}, ["i"], ["o"], {"i": ("x",), "o": ("y",)}
        ),
        "cup": make_graph(
            ["i", "j"], {"e0": ("x", "i", "y", "j")}, ["i", "j"], [], {"i": ("x",), "j": ("y",)}
        ),
        "cap": make_graph(
            ["i", "j"], {"e0": ("x", "i", "y", "j")}, [], ["i", "j"], {"i": ("x",), "j": ("y",)}
        ),
        "path": make_graph(
            ["i", "a", "b", "o"],
            {"e0": ("x", "i", "y", "a"), "e1": ("p", "a", "q", "b"), "e2": ("r", "b", "w", "o")},
            ["i"], ["o"],
            {"i": ("x",), "a": ("y", "p"), "b": ("q", "r"), "o": ("w",)},
        ),
        "double_edge": make_graph(
            ["i", "a", "b", "o"],
            {
                "e0": ("x", "i", "y", "a"),
                "e1": ("p", "a", "q", "b"),
                "e2": ("p2", "a", "q2", "b"),
                "e3": ("r", "b", "w", "o"),
            },
            ["i"], ["o"],
            {"i": ("x",), "a": ("y", "p", "p2"), "b": ("q2", "q", "r"), "o": ("w",)},
        ),
        "handle_fat": make_graph(
            ["i", "b", "o"],
            {
                "e0": ("x", "i", "y", "b"),
                "e1": ("p", "b", "q", "b"),
                "e2": ("p2", "b", "q2", "b"),
                "e3": ("r", "b", "w", "o"),
            },
            ["i"], ["o"],
            {"i": ("x",), "b": ("y", "p", "p2", "q", "q2", "r"), "o": ("w",)},
        ),
        "rose_four": make_graph(
            ["b"],
            {f"e{j}": (f"x{j}", "b", f"y{j}", "b") for j in range(4)},
            [], [],
            {"b": ("x0", "x1", "y0", "y1", "x2", "x3", "y2", "y3")},
        ),
        "crossed_multi": glue(elementary("twist"), m),
        "lonely_in_leg": disjoint_union(
            Graph(("q",), (), {}, {}, ("q",), (), {}, {"q": ()}), m
        ),
        "lonely_out_leg": disjoint_union(
            m, Graph(("q",), (), {}, {}, (), ("q",), {}, {"q": ()})
        ),
        "bivalent_loop": make_graph(
            ["a", "b"],
            {"e0": ("x", "a", "y", "b"), "e1": ("p", "b", "q", "a")},
            [], [],
            {"a": ("x", "q"), "b": ("y", "p")},
        ),
        "internal_arity_one": make_graph(
            ["i", "a", "b", "o"],
            {"e0": ("x", "i", "y", "a"), "e1": ("p", "a", "q", "o"), "e2": ("r", "a", "w", "b")},
            ["i"], ["o"],
            {"i": ("x",), "a": ("y", "r", "p"), "b": ("w",), "o": ("q",)},
        ),
    }


def builtin_catalogue() -> dict[str, Graph]:
    out = _builders()
    for name, g in out.items():
        problems = validate(g)
        if problems:
            raise AssertionError(f"catalogue graph {name} invalid: {problems}")
    return out


def catalogue_dir() -> Path | None:
    path = os.environ.get(ENV)
    return Path(path) if path else None


def load_catalogue(path: str | os.PathLike) -> dict[str, Graph]:
    out = {}
    for p in sorted(Path(path).glob("*.json")):
        with open(p) as fh:
            out[p.stem] = graph_from_json(json.load(fh))
    return out


def catalogue() -> dict[str, Graph]:
    d = catalogue_dir()
    if d is not None and d.is_dir():
        return load_catalogue(d)
    return builtin_catalogue()


def write_catalogue(path: str | os.PathLike) -> list[Path]:
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    written = []
    for name, g in builtin_catalogue().items():
        p = path / f"{name}.json"
        with open(p, "w") as fh:
            json.dump(graph_to_json(g), fh, indent=1)
        written.append(p)
    return written


def resolve_graph(ref: str) -> Graph:
    """A path to a JSON file, or a catalogue name."""
    p = Path(ref)
    if p.suffix == ".json" and p.exists():
        with open(p) as fh:
            return graph_from_json(json.load(fh))
    d = catalogue_dir()
    if d is not None and (d / f"{ref}.json").exists():
        with open(d / f"{ref}.json") as fh:
            return graph_from_json(json.load(fh))
    stem = p.stem if p.suffix == ".json" else ref
    cat = builtin_catalogue()
    if stem in cat:
        return cat[stem]
    raise FileNotFoundError(f"no graph file or catalogue entry named {ref!r}")
