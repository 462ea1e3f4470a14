"""Combinatorial cobordisms: graphs with ordered in/out legs.

A graph is a set of vertices, a set of half-edges with a fixed-point free
involution ``sigma`` and an incidence map ``s``.  Legs are vertices of
arity at most one listed in ``legs_in`` / ``legs_out``.  An optional
``cyclic`` map turns the graph into a fat (ribbon) graph.

Every edge carries a name.  Names, vertex ids and half-edge ids survive
collapse and gluing so that orientation words can follow them.
"""

from __future__ import annotations

import json
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field, replace
from itertools import permutations, product


class GraphError(ValueError):
    pass


class InvalidGraph(GraphError):
    pass


class TadpoleCollapse(GraphError):
    pass


class ExternalCollapse(GraphError):
    pass


class LegMismatch(GraphError):
    pass


@dataclass(frozen=True, eq=False)
class Graph:
    vertices: tuple[str, ...]
    half_edges: tuple[str, ...]
    sigma: Mapping[str, str]
    s: Mapping[str, str]
    legs_in: tuple[str, ...]
    legs_out: tuple[str, ...]
    edge_names: Mapping[str, tuple[str, str]] = field(default_factory=dict)
    cyclic: Mapping[str, tuple[str, ...]] | None = None

    def __post_init__(self):
        names = dict(self.edge_names)
        seen = {h for pair in names.values() for h in pair}
        for h in self.half_edges:
            if h not in seen and h in self.sigma and self.sigma[h] != h:
                h2 = self.sigma[h]
                pair = tuple(sorted((h, h2)))
                names[f"{pair[0]}~{pair[1]}"] = pair
                seen.update(pair)
        object.__setattr__(self, "edge_names", names)
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "half_edges", tuple(self.half_edges))
        object.__setattr__(self, "legs_in", tuple(self.legs_in))
        object.__setattr__(self, "legs_out", tuple(self.legs_out))

    # -- basic queries
    @property
    def edges(self) -> list[str]:
        return list(self.edge_names)

    def edge_pair(self, e: str) -> tuple[str, str]:
        return self.edge_names[e]

    def edge_of(self, h: str) -> str:
        for name, pair in self.edge_names.items():
            if h in pair:
                return name
        raise KeyError(h)

    def incident(self, v: str) -> list[str]:
        return [h for h in self.half_edges if self.s[h] == v]

    def arity(self, v: str) -> int:
        return sum(1 for h in self.half_edges if self.s[h] == v)

    def endpoints(self, e: str) -> tuple[str, str]:
        h, h2 = self.edge_names[e]
        return self.s[h], self.s[h2]

    def legs(self, side: str) -> tuple[str, ...]:
        if side == "in":
            return self.legs_in
        if side == "out":
            return self.legs_out
        raise ValueError(f"side must be 'in' or 'out', not {side!r}")

    def internal_vertices(self, side: str | None = None) -> list[str]:
        if side is None:
            lv = set(self.legs_in) | set(self.legs_out)
        else:
            lv = set(self.legs(side))
        return [v for v in self.vertices if v not in lv]

    def is_leg(self, v: str) -> bool:
        return v in self.legs_in or v in self.legs_out

    @property
    def is_fat(self) -> bool:
        return self.cyclic is not None

    def without_cyclic(self) -> "Graph":
        return replace(self, cyclic=None)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            set(self.vertices) == set(other.vertices)
            and set(self.half_edges) == set(other.half_edges)
            and dict(self.sigma) == dict(other.sigma)
            and dict(self.s) == dict(other.s)
            and self.legs_in == other.legs_in
            and self.legs_out == other.legs_out
            and {k: frozenset(v) for k, v in self.edge_names.items()}
            == {k: frozenset(v) for k, v in other.edge_names.items()}
            and _cyc_norm(self.cyclic) == _cyc_norm(other.cyclic)
        )

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"Graph(|V|={len(self.vertices)}, |E|={len(self.edge_names)}, "
            f"in={list(self.legs_in)}, out={list(self.legs_out)})"
        )

    def to_json(self) -> dict:
        return graph_to_json(self)


def _cyc_norm(cyc):
    if cyc is None:
        return None
    out = {}
    for v, order in cyc.items():
        order = tuple(order)
        if order:
            i = order.index(min(order))
            order = order[i:] + order[:i]
        out[v] = order
    return out


# ---------------------------------------------------------------------------
# construction


def make_graph(
    vertices: Sequence[str],
    edges: Mapping[str, tuple[str, str, str, str]] | Sequence[tuple],
    legs_in: Sequence[str] = (),
    legs_out: Sequence[str] = (),
    cyclic: Mapping[str, Sequence[str]] | None = None,
) -> Graph:
    """Build a graph from ``{name: (h, v, h2, v2)}``: edge ``name`` joins
    half-edge ``h`` at ``v`` to ``h2`` at ``v2``."""
    if not isinstance(edges, Mapping):
        edges = {f"e{i}": e for i, e in enumerate(edges)}
    hs, sigma, s, names = [], {}, {}, {}
    for name, (h, v, h2, v2) in edges.items():
        hs += [h, h2]
        sigma[h], sigma[h2] = h2, h
        s[h], s[h2] = v, v2
        names[name] = (h, h2)
    cyc = {v: tuple(o) for v, o in cyclic.items()} if cyclic is not None else None
    return Graph(tuple(vertices), tuple(hs), sigma, s, tuple(legs_in), tuple(legs_out), names, cyc)


def star(n_in: int, n_out: int, center: str = "v", fat: bool = True) -> Graph:
    """One internal vertex ``center`` joined to every leg.

    Out-legs come first in the numbering (``v0``..), then in-legs, which
    reproduces the labelled generators: multi is ``star(2, 1)``.
    """
    edges = {}
    outs = [f"v{i}" for i in range(n_out)]
    ins = [f"v{n_out + i}" for i in range(n_in)]
    for i, leg in enumerate(outs + ins):
        edges[f"e{i}"] = (f"h{i}", leg, f"sh{i}", center)
    cyc = None
    if fat:
        cyc = {leg: (f"h{i}",) for i, leg in enumerate(outs + ins)}
        in_h = [f"sh{n_out + i}" for i in range(n_in)]
        out_h = [f"sh{i}" for i in range(n_out)]
        cyc[center] = tuple(in_h + out_h[::-1])
    return make_graph([center] + outs + ins, edges, ins, outs, cyc)


def identity_graph(n: int = 1, prefix: str = "u") -> Graph:
    names = [prefix] if n == 1 else [f"{prefix}{i}" for i in range(n)]
    return Graph(tuple(names), (), {}, {}, tuple(names), tuple(names), {}, {v: () for v in names})


def permutation_graph(perm: Sequence[int], prefix: str = "t") -> Graph:
    """``G_f``: arity-0 vertices, in-leg ``i`` is out-leg ``perm[i]``."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise GraphError("not a permutation")
    names = [f"{prefix}{i}" for i in range(n)]
    out = [None] * n
    for i, p in enumerate(perm):
        out[p] = names[i]
    return Graph(tuple(names), (), {}, {}, tuple(names), tuple(out), {}, {v: () for v in names})


def elementary(name: str, perm: Sequence[int] | None = None) -> Graph:
    """Labelled generator graphs ``Multi``, ``Comulti``, ``Unit``,
    ``Counit``, ``Id`` and ``Twist`` (optionally with a permutation)."""
    key = name.lower()
    if key == "multi":
        return star(2, 1)
    if key == "comulti":
        edges = {
            "e0": ("h0", "v0", "sh0", "v"),
            "e1": ("h1", "v1", "sh1", "v"),
            "e2": ("h2", "v2", "sh2", "v"),
        }
        cyc = {"v0": ("h0",), "v1": ("h1",), "v2": ("h2",), "v": ("sh0", "sh2", "sh1")}
        return make_graph(["v", "v0", "v1", "v2"], edges, ["v0"], ["v1", "v2"], cyc)
    if key == "unit":
        return make_graph(
            ["v", "v0"], {"e0": ("h0", "v0", "sh0", "v")}, [], ["v0"], {"v": ("sh0",), "v0": ("h0",)}
        )
    if key == "counit":
        return make_graph(
            ["v", "v0"], {"e0": ("h0", "v0", "sh0", "v")}, ["v0"], [], {"v": ("sh0",), "v0": ("h0",)}
        )
    if key == "id":
        return identity_graph(1)
    if key == "twist":
        return permutation_graph(perm if perm is not None else (1, 0))
    raise GraphError(f"unknown elementary graph {name!r}")


# ---------------------------------------------------------------------------
# validation


def validate(g: Graph) -> list[str]:
    """Every violated invariant; empty means valid."""
    problems: list[str] = []
    vs = set(g.vertices)
    hs = set(g.half_edges)
    if len(vs) != len(g.vertices):
        problems.append("duplicate vertex ids")
    if len(hs) != len(g.half_edges):
        problems.append("duplicate half-edge ids")
    for h in g.half_edges:
        if h not in g.sigma:
            problems.append(f"sigma undefined on {h}")
            continue
        h2 = g.sigma[h]
        if h2 == h:
            problems.append(f"involution has fixed point {h}")
        elif h2 not in hs:
            problems.append(f"sigma({h}) = {h2} is not a half-edge")
        elif g.sigma.get(h2) != h:
            problems.append(f"sigma is not an involution at {h}")
        if h not in g.s:
            problems.append(f"incidence undefined on {h}")
        elif g.s[h] not in vs:
            problems.append(f"incidence of {h} is not a vertex")
    for name, pair in g.edge_names.items():
        if len(pair) != 2 or any(h not in hs for h in pair) or g.sigma.get(pair[0]) != pair[1]:
            problems.append(f"edge {name} is not a sigma orbit")
    covered = [h for pair in g.edge_names.values() for h in pair]
    if sorted(covered) != sorted(hs):
        problems.append("edge names do not partition the half-edges")
    for side, legs in (("in", g.legs_in), ("out", g.legs_out)):
        if len(set(legs)) != len(legs):
            problems.append(f"duplicate {side}-leg")
        for v in legs:
            if v not in vs:
                problems.append(f"{side}-leg {v} is not a vertex")
            elif g.arity(v) > 1:
                problems.append(f"leg vertex {v} has arity {g.arity(v)} > 1")
    for v in set(g.legs_in) & set(g.legs_out):
        if v in vs and g.arity(v) != 0:
            problems.append(f"vertex {v} is in both leg lists but has arity {g.arity(v)}")
    if g.cyclic is not None:
        for v in g.vertices:
            order = tuple(g.cyclic.get(v, ()))
            if sorted(order) != sorted(h for h in g.half_edges if g.s.get(h) == v):
                problems.append(f"cyclic order at {v} is not a permutation of its half-edges")
    return problems


def is_valid(g: Graph) -> bool:
    return not validate(g)


def require_valid(g: Graph) -> Graph:
    problems = validate(g)
    if problems:
        raise InvalidGraph("; ".join(problems))
    return g


# ---------------------------------------------------------------------------
# relabelling, unions, gluing


def relabel(g: Graph, f: Callable[[str], str]) -> Graph:
    """Apply ``f`` to every vertex, half-edge and edge name."""
    cyc = None
    if g.cyclic is not None:
        cyc = {f(v): tuple(f(h) for h in o) for v, o in g.cyclic.items()}
    return Graph(
        tuple(f(v) for v in g.vertices),
        tuple(f(h) for h in g.half_edges),
        {f(h): f(h2) for h, h2 in g.sigma.items()},
        {f(h): f(v) for h, v in g.s.items()},
        tuple(f(v) for v in g.legs_in),
        tuple(f(v) for v in g.legs_out),
        {f(e): (f(a), f(b)) for e, (a, b) in g.edge_names.items()},
        cyc,
    )


def rename(g: Graph, mapping: Mapping[str, str]) -> Graph:
    return relabel(g, lambda x: mapping.get(x, x))


def prime(g: Graph, mark: str = "'") -> Graph:
    return relabel(g, lambda x: x + mark)


def ids(g: Graph) -> set[str]:
    return set(g.vertices) | set(g.half_edges) | set(g.edge_names)


def disjoint_union(g: Graph, g2: Graph) -> Graph:
    clash = ids(g) & ids(g2)
    if clash:
        raise GraphError(f"ids are not disjoint: {sorted(clash)[:5]}")
    cyc = None
    if g.cyclic is not None and g2.cyclic is not None:
        cyc = {**g.cyclic, **g2.cyclic}
    return Graph(
        g.vertices + g2.vertices,
        g.half_edges + g2.half_edges,
        {**g.sigma, **g2.sigma},
        {**g.s, **g2.s},
        g.legs_in + g2.legs_in,
        g.legs_out + g2.legs_out,
        {**g.edge_names, **g2.edge_names},
        cyc,
    )


def disjoint_union_all(graphs: Sequence[Graph]) -> Graph:
    out = Graph((), (), {}, {}, (), (), {}, {})
    for g in graphs:
        out = disjoint_union(out, g)
    return out


@dataclass(frozen=True)
class GlueResult:
    graph: Graph
    first: dict[str, str]
    second: dict[str, str]


def glue_with_maps(g: Graph, g2: Graph, mark: str = "'") -> GlueResult:
    """``g2 o g``: out-leg ``i`` of ``g`` is identified with in-leg ``i`` of ``g2``.

    If ids clash, every id of ``g`` gets ``mark`` appended until they are
    disjoint.  The merged vertex keeps the id coming from ``g``.
    The returned maps send old ids of ``g`` / ``g2`` to ids in the result.
    """
    if len(g.legs_out) != len(g2.legs_in):
        raise LegMismatch(f"cannot glue {len(g.legs_out)} out-legs to {len(g2.legs_in)} in-legs")
    first = {x: x for x in ids(g)}
    while ids(g) & ids(g2):
        g = prime(g, mark)
        first = {k: v + mark for k, v in first.items()}
    merge = dict(zip(g2.legs_in, g.legs_out))
    second = {x: merge.get(x, x) for x in ids(g2)}
    g2m = rename(g2, merge)
    merged = set(merge.values())
    vertices = g.vertices + tuple(v for v in g2m.vertices if v not in merged)
    legs_in, legs_out = g.legs_in, g2m.legs_out
    cyc = None
    if g.cyclic is not None and g2m.cyclic is not None:
        cyc = dict(g.cyclic)
        for v, o in g2m.cyclic.items():
            cyc[v] = tuple(cyc.get(v, ())) + tuple(o) if v in merged else tuple(o)
    out = Graph(
        vertices,
        g.half_edges + g2m.half_edges,
        {**g.sigma, **g2m.sigma},
        {**g.s, **g2m.s},
        legs_in,
        legs_out,
        {**g.edge_names, **g2m.edge_names},
        cyc,
    )
    return GlueResult(out, first, second)


def glue(g: Graph, g2: Graph) -> Graph:
    return glue_with_maps(g, g2).graph


# ---------------------------------------------------------------------------
# collapse


def default_survivor(g: Graph, e: str) -> str:
    """Half-edge ``h0`` whose endpoint survives when ``e`` is collapsed.

    The endpoint of the second listed half-edge is deleted, unless that
    endpoint is a leg and the other one is not.
    """
    h, h2 = g.edge_names[e]
    if g.is_leg(g.s[h2]) and not g.is_leg(g.s[h]):
        return h2
    return h


def collapse_edge(g: Graph, e: str, h0: str | None = None) -> Graph:
    """Contract edge ``e``; ``s(h0)`` survives and ``s(sigma h0)`` is deleted."""
    if e not in g.edge_names:
        raise GraphError(f"no edge {e!r}")
    if h0 is None:
        h0 = default_survivor(g, e)
    if h0 not in g.edge_names[e]:
        raise GraphError(f"{h0} is not a half-edge of {e}")
    h1 = g.sigma[h0]
    keep, gone = g.s[h0], g.s[h1]
    if keep == gone:
        raise TadpoleCollapse(f"edge {e} is a tadpole")
    hs = tuple(h for h in g.half_edges if h not in (h0, h1))
    s = {h: (keep if g.s[h] == gone else g.s[h]) for h in hs}
    sigma = {h: g.sigma[h] for h in hs}

    def leg_list(legs):
        out = []
        for v in legs:
            if v == gone:
                v = keep
            if v in out:
                raise ExternalCollapse(f"collapsing {e} merges two legs of the same side")
            out.append(v)
        return tuple(out)

    legs_in, legs_out = leg_list(g.legs_in), leg_list(g.legs_out)
    names = {k: p for k, p in g.edge_names.items() if k != e}
    cyc = None
    if g.cyclic is not None:
        cyc = {v: o for v, o in g.cyclic.items() if v not in (keep, gone)}
        cyc[keep] = _merge_cyclic(g.cyclic[keep], h0, g.cyclic[gone], h1)
    out = Graph(
        tuple(v for v in g.vertices if v != gone), hs, sigma, s, legs_in, legs_out, names, cyc
    )
    for v in set(legs_in) | set(legs_out):
        a = sum(1 for h in hs if s[h] == v)
        if a > 1:
            raise ExternalCollapse(f"collapsing {e} gives leg {v} arity {a}")
        if v in legs_in and v in legs_out and a != 0:
            raise ExternalCollapse(f"collapsing {e} gives a two-sided leg of arity {a}")
    return out


def _merge_cyclic(o1, h0, o2, h1) -> tuple[str, ...]:
    i, j = o1.index(h0), o2.index(h1)
    return tuple(o1[i + 1:] + o1[:i]) + tuple(o2[j + 1:] + o2[:j])


def can_collapse(g: Graph, e: str, h0: str | None = None) -> bool:
    try:
        collapse_edge(g, e, h0)
    except GraphError:
        return False
    return True


# ---------------------------------------------------------------------------
# topology


def euler_char_rel(g: Graph, side: str) -> int:
    return len(g.internal_vertices(side)) - len(g.edge_names)


def components(g: Graph) -> list[list[str]]:
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in (g.endpoints(e) for e in g.edge_names):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[str, list[str]] = {}
    for v in g.vertices:
        groups.setdefault(find(v), []).append(v)
    return list(groups.values())


def first_betti(g: Graph) -> int:
    return len(g.edge_names) - len(g.vertices) + len(components(g))


def is_forest(g: Graph) -> bool:
    return first_betti(g) == 0


def has_tadpole(g: Graph) -> bool:
    return any(a == b for a, b in (g.endpoints(e) for e in g.edge_names))


def find_cycle(g: Graph) -> list[str] | None:
    """Edge names of one simple cycle, or None for a forest."""
    for e in g.edge_names:
        a, b = g.endpoints(e)
        if a == b:
            return [e]
    adj: dict[str, list[tuple[str, str]]] = {v: [] for v in g.vertices}
    for e in g.edge_names:
        a, b = g.endpoints(e)
        adj[a].append((b, e))
        adj[b].append((a, e))
    seen: set[str] = set()
    for root in g.vertices:
        if root in seen:
            continue
        parent: dict[str, tuple[str | None, str | None]] = {root: (None, None)}
        stack = [root]
        seen.add(root)
        while stack:
            v = stack.pop()
            for w, e in adj[v]:
                if e == parent[v][1]:
                    continue
                if w in parent:
                    path_v, path_w = _path_to_root(parent, v), _path_to_root(parent, w)
                    return _cycle_edges(path_v, path_w, e)
                parent[w] = (v, e)
                seen.add(w)
                stack.append(w)
    return None


def _path_to_root(parent, v):
    out = []
    while v is not None:
        out.append(v)
        v = parent[v][0]
    return [(x, parent[x][1]) for x in out]


def _cycle_edges(pv, pw, closing):
    vs_w = {x for x, _ in pw}
    edges = [closing]
    meet = None
    for x, e in pv:
        if x in vs_w:
            meet = x
            break
        edges.append(e)
    for x, e in pw:
        if x == meet:
            break
        edges.append(e)
    return edges


def boundary_cycles(g: Graph) -> list[list[str]]:
    """Orbits of ``h -> next(sigma(h))`` where ``next`` is the cyclic successor."""
    if g.cyclic is None:
        raise GraphError("boundary cycles need a fat graph")
    succ = {}
    for v, o in g.cyclic.items():
        for i, h in enumerate(o):
            succ[h] = o[(i + 1) % len(o)]
    seen: set[str] = set()
    faces = []
    for h in g.half_edges:
        if h in seen:
            continue
        face = []
        x = h
        while x not in seen:
            seen.add(x)
            face.append(x)
            x = succ[g.sigma[x]]
        faces.append(face)
    return faces


def _faces_with_isolated(g: Graph) -> int:
    return len(boundary_cycles(g)) + sum(1 for v in g.vertices if g.arity(v) == 0)


def genus(g: Graph) -> int:
    """Sum of component genera, from ``|V| - |E| = 2 - 2g - b``."""
    b = _faces_with_isolated(g)
    chi = len(g.vertices) - len(g.edge_names)
    two_g = 2 * len(components(g)) - chi - b
    return two_g // 2


def component_genera(g: Graph) -> list[int]:
    return [genus(induced(g, comp)) for comp in components(g)]


def induced(g: Graph, vertices: Sequence[str]) -> Graph:
    vs = set(vertices)
    hs = tuple(h for h in g.half_edges if g.s[h] in vs)
    cyc = {v: o for v, o in g.cyclic.items() if v in vs} if g.cyclic is not None else None
    return Graph(
        tuple(v for v in g.vertices if v in vs),
        hs,
        {h: g.sigma[h] for h in hs},
        {h: g.s[h] for h in hs},
        tuple(v for v in g.legs_in if v in vs),
        tuple(v for v in g.legs_out if v in vs),
        {e: p for e, p in g.edge_names.items() if p[0] in hs},
        cyc,
    )


def is_planar_ordered(
    g: Graph, in_order: Sequence[str] | None = None, out_order: Sequence[str] | None = None
) -> bool:
    """Genus zero and boundary walk compatible with the leg orders.

    Legs sit on a circle as ``in_1 .. in_k, out_l .. out_1``.  Each
    component must carry its legs on one boundary cycle in that cyclic
    order, and legs of distinct components must not interleave.
    """
    if g.cyclic is None:
        raise GraphError("planarity needs a fat graph")
    in_order = tuple(g.legs_in if in_order is None else in_order)
    out_order = tuple(g.legs_out if out_order is None else out_order)
    circle = [("in", v) for v in in_order] + [("out", v) for v in reversed(out_order)]
    pos = {x: i for i, x in enumerate(circle)}
    blocks = []
    for comp in components(g):
        sub = induced(g, comp)
        if genus(sub) != 0:
            return False
        mine = [x for x in circle if x[1] in comp]
        blocks.append([pos[x] for x in mine])
        if len(mine) <= 1:
            continue
        if any(sub.arity(v) != 1 for _, v in mine):
            return False
        leg_h = {sub.incident(v)[0]: (side, v) for side, v in mine}
        faces = [f for f in boundary_cycles(sub) if any(h in leg_h for h in f)]
        if len(faces) != 1:
            return False
        seq = [leg_h[h] for h in faces[0] if h in leg_h]
        k = seq.index(mine[0])
        if seq[k:] + seq[:k] != mine:
            return False
    for i, a in enumerate(blocks):
        for b in blocks[i + 1:]:
            if _interleave(a, b):
                return False
    return True


def _interleave(a: list[int], b: list[int]) -> bool:
    """True if ``b`` meets more than one arc cut out by ``a`` on the circle."""
    if not a or not b:
        return False
    gaps = {sum(1 for y in a if y < x) % len(a) for x in b}
    return len(gaps) > 1


# ---------------------------------------------------------------------------
# isomorphisms


@dataclass(frozen=True)
class Isomorphism:
    vertices: dict[str, str]
    half_edges: dict[str, str]
    edges: dict[str, str]


def find_isomorphisms(g1: Graph, g2: Graph, limit: int | None = None) -> Iterator[Isomorphism]:
    """Isomorphisms ``g1 -> g2`` fixing legs positionally."""
    if (
        len(g1.vertices) != len(g2.vertices)
        or len(g1.half_edges) != len(g2.half_edges)
        or len(g1.legs_in) != len(g2.legs_in)
        or len(g1.legs_out) != len(g2.legs_out)
    ):
        return
    fixed: dict[str, str] = {}
    for a, b in list(zip(g1.legs_in, g2.legs_in)) + list(zip(g1.legs_out, g2.legs_out)):
        if fixed.get(a, b) != b:
            return
        fixed[a] = b
    if len(set(fixed.values())) != len(fixed):
        return
    mult1, mult2 = _multiplicity(g1), _multiplicity(g2)
    ar1 = {v: g1.arity(v) for v in g1.vertices}
    ar2 = {v: g2.arity(v) for v in g2.vertices}
    rest1 = [v for v in g1.vertices if v not in fixed]
    rest2 = [v for v in g2.vertices if v not in set(fixed.values())]
    count = 0

    def consistent(vmap, a):
        for x, y in vmap.items():
            if mult1.get(frozenset((a, x)), 0) != mult2.get(frozenset((vmap[a], y)), 0):
                return False
        return True

    def extend(vmap, i):
        if i == len(rest1):
            yield dict(vmap)
            return
        a = rest1[i]
        for b in rest2:
            if b in used or ar1[a] != ar2[b]:
                continue
            vmap[a] = b
            used.add(b)
            if consistent(vmap, a):
                yield from extend(vmap, i + 1)
            used.discard(b)
            del vmap[a]

    for v, w in fixed.items():
        if ar1[v] != ar2[w] or v in g1.legs_in and w not in g2.legs_in:
            return
    vmap0 = dict(fixed)
    for a in list(fixed):
        if not consistent({k: fixed[k] for k in fixed if k != a} | {a: fixed[a]}, a):
            return
    used = set(fixed.values())
    for vmap in extend(vmap0, 0):
        for iso in _edge_maps(g1, g2, vmap):
            yield iso
            count += 1
            if limit is not None and count >= limit:
                return


def _multiplicity(g: Graph) -> dict[frozenset, int]:
    out: dict[frozenset, int] = {}
    for e in g.edge_names:
        key = frozenset(g.endpoints(e))
        out[key] = out.get(key, 0) + 1
    return out


def _edge_maps(g1: Graph, g2: Graph, vmap: dict[str, str]) -> Iterator[Isomorphism]:
    classes1: dict[frozenset, list[str]] = {}
    for e in g1.edge_names:
        classes1.setdefault(frozenset(g1.endpoints(e)), []).append(e)
    classes2: dict[frozenset, list[str]] = {}
    for e in g2.edge_names:
        classes2.setdefault(frozenset(g2.endpoints(e)), []).append(e)
    choices = []
    for key, es in classes1.items():
        target = classes2.get(frozenset(vmap[v] for v in key), [])
        if len(target) != len(es):
            return
        options = []
        for perm in permutations(target):
            flips = []
            for e, f in zip(es, perm):
                h, h2 = g1.edge_names[e]
                k, k2 = g2.edge_names[f]
                opts = []
                if vmap[g1.s[h]] == g2.s[k] and vmap[g1.s[h2]] == g2.s[k2]:
                    opts.append({h: k, h2: k2})
                if vmap[g1.s[h]] == g2.s[k2] and vmap[g1.s[h2]] == g2.s[k]:
                    opts.append({h: k2, h2: k})
                flips.append([(e, f, o) for o in opts])
            for combo in product(*flips):
                options.append(combo)
        choices.append(options)
    for pick in product(*choices):
        hmap, emap = {}, {}
        for combo in pick:
            for e, f, o in combo:
                emap[e] = f
                hmap.update(o)
        yield Isomorphism(dict(vmap), hmap, emap)


def isomorphic(g1: Graph, g2: Graph) -> bool:
    return next(find_isomorphisms(g1, g2, limit=1), None) is not None


def apply_isomorphism(g: Graph, iso: Isomorphism) -> Graph:
    table = {**iso.vertices, **iso.half_edges, **iso.edges}
    return relabel(g, lambda x: table[x])


# ---------------------------------------------------------------------------
# JSON


def graph_to_json(g: Graph) -> dict:
    out = {
        "vertices": list(g.vertices),
        "half_edges": list(g.half_edges),
        "sigma": [list(p) for p in g.edge_names.values()],
        "s": {h: g.s[h] for h in g.half_edges},
        "in": list(g.legs_in),
        "out": list(g.legs_out),
        "edges": {e: list(p) for e, p in g.edge_names.items()},
    }
    if g.cyclic is not None:
        out["cyclic"] = {v: list(g.cyclic.get(v, ())) for v in g.vertices}
    return out


def graph_from_json(obj: Mapping) -> Graph:
    sigma: dict[str, str] = {}
    for pair in obj.get("sigma", []):
        if len(pair) == 1 or pair[0] == pair[1]:
            sigma[pair[0]] = pair[0]
            continue
        a, b = pair
        sigma[a], sigma[b] = b, a
    names = {e: tuple(p) for e, p in obj.get("edges", {}).items()}
    for e, (a, b) in names.items():
        sigma.setdefault(a, b)
        sigma.setdefault(b, a)
    cyc = obj.get("cyclic")
    return Graph(
        tuple(obj["vertices"]),
        tuple(obj.get("half_edges", [])),
        sigma,
        dict(obj.get("s", {})),
        tuple(obj.get("in", [])),
        tuple(obj.get("out", [])),
        names,
        {v: tuple(o) for v, o in cyc.items()} if cyc is not None else None,
    )


def load_graph(path) -> Graph:
    with open(path) as fh:
        return graph_from_json(json.load(fh))


def dump_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        json.dump(graph_to_json(g), fh, indent=1)
