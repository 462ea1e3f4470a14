"""Orientation words and the (c, d)-twisted determinant lines of graphs.

A word on ``(G, side)`` is the normal form

    (e_1 ^ ... ^ e_k)^{-1} (x) h_1 sh_1 ... h_k sh_k (x) v_1 ^ ... ^ v_n

with ``v_i`` running over the vertices off the ``side`` legs.  Within a
block letters anticommute; a word has degree ``k - n``.  Words with
``inverse=True`` stand for the dual generator and have degree ``n - k``.
"""

from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field, replace
from fractions import Fraction

from .graph import (
    Graph,
    GraphError,
    Isomorphism,
    collapse_edge,
    default_survivor,
    disjoint_union,
    elementary,
    find_cycle,
    find_isomorphisms,
    glue_with_maps,
    is_forest,
    rename,
)
from .grmod import sign


class SideViolation(GraphError):
    """The vertex that a collapse would delete is a leg of the word's side."""


class NotAcyclic(ValueError):
    pass


class ParameterMismatch(ValueError):
    pass


def perm_parity(seq: Sequence, target: Sequence) -> int:
    """Sign of the permutation taking ``seq`` to ``target``."""
    if sorted(seq) != sorted(target) or len(set(seq)) != len(seq):
        raise ValueError("not a permutation of the same letters")
    pos = {x: i for i, x in enumerate(target)}
    arr = [pos[x] for x in seq]
    s, seen = 1, [False] * len(arr)
    for i in range(len(arr)):
        if seen[i]:
            continue
        j, n = i, 0
        while not seen[j]:
            seen[j] = True
            j = arr[j]
            n += 1
        if n % 2 == 0:
            s = -s
    return s


@dataclass(frozen=True)
class OrientationWord:
    graph: Graph = field(repr=False, compare=False)
    side: str
    edges: tuple[str, ...]
    half_edges: tuple[str, ...]
    vertices: tuple[str, ...]
    sign: int = 1
    inverse: bool = False

    @property
    def degree(self) -> int:
        k = len(self.edges) - len(self.vertices)
        return -k if self.inverse else k

    def check(self) -> "OrientationWord":
        g = self.graph
        if sorted(self.edges) != sorted(g.edge_names):
            raise ValueError("edge block does not enumerate the edges")
        if sorted(self.half_edges) != sorted(g.half_edges):
            raise ValueError("half-edge block does not enumerate the half-edges")
        if sorted(self.vertices) != sorted(g.internal_vertices(self.side)):
            raise ValueError(f"vertex block does not enumerate V minus the {self.side}-legs")
        return self

    def __neg__(self) -> "OrientationWord":
        return replace(self, sign=-self.sign)

    def letters(self) -> str:
        e = " ^ ".join(self.edges)
        h = " ".join(self.half_edges)
        v = " ^ ".join(self.vertices)
        s = "-" if self.sign < 0 else "+"
        inv = "^-1" if self.inverse else ""
        return f"{s}[({e})^-1 | {h} | {v}]{inv}"

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "edges": list(self.edges),
            "half_edges": list(self.half_edges),
            "vertices": list(self.vertices),
            "sign": self.sign,
            "inverse": self.inverse,
        }


def word_from_json(obj: Mapping, graph: Graph) -> OrientationWord:
    return OrientationWord(
        graph,
        obj["side"],
        tuple(obj["edges"]),
        tuple(obj["half_edges"]),
        tuple(obj["vertices"]),
        int(obj.get("sign", 1)),
        bool(obj.get("inverse", False)),
    ).check()


def make_word(g: Graph, side: str, edges, half_edges, vertices, sign_: int = 1, inverse=False):
    return OrientationWord(g, side, tuple(edges), tuple(half_edges), tuple(vertices), sign_, inverse).check()


def reorder_sign(w: OrientationWord, target: OrientationWord) -> int:
    """``w = r * target`` as elements; letters are only permuted blockwise."""
    if w.side != target.side or w.inverse != target.inverse:
        raise ValueError("words on different sides")
    p = (
        perm_parity(w.edges, target.edges)
        * perm_parity(w.half_edges, target.half_edges)
        * perm_parity(w.vertices, target.vertices)
    )
    return w.sign * p * target.sign


def reorder(w: OrientationWord, edges=None, half_edges=None, vertices=None) -> OrientationWord:
    """Same element written with new letter orders."""
    new = replace(
        w,
        edges=tuple(w.edges if edges is None else edges),
        half_edges=tuple(w.half_edges if half_edges is None else half_edges),
        vertices=tuple(w.vertices if vertices is None else vertices),
        sign=1,
    )
    return replace(new, sign=reorder_sign(w, new))


def rename_word(w: OrientationWord, table: Mapping[str, str], graph: Graph) -> OrientationWord:
    f = lambda x: table.get(x, x)
    return replace(
        w,
        graph=graph,
        edges=tuple(map(f, w.edges)),
        half_edges=tuple(map(f, w.half_edges)),
        vertices=tuple(map(f, w.vertices)),
    )


# ---------------------------------------------------------------------------
# collapse


def _to_front(seq: tuple, items: Sequence) -> tuple[int, tuple]:
    """Move ``items`` (in this order) to the head; return parity and rest."""
    rest = [x for x in seq if x not in items]
    target = list(items) + rest
    return perm_parity(seq, target), tuple(rest)


def collapse_action(
    w: OrientationWord, e: str, h0: str | None = None, graph_h0: str | None = None
) -> OrientationWord:
    """Push ``w`` along the collapse of edge ``e``.

    ``s(h0)`` survives in the word and ``s(sigma h0)`` is deleted from the
    vertex block.  Without ``h0`` the word's own pair order decides, with
    a swap when the second endpoint is a leg of the word's side.
    ``graph_h0`` selects the survivor id in the collapsed graph; vertex
    letters are renamed to it without sign.
    """
    g = w.graph
    if e not in g.edge_names:
        raise GraphError(f"no edge {e!r}")
    a, b = g.edge_names[e]
    first, second = (a, b) if w.half_edges.index(a) < w.half_edges.index(b) else (b, a)
    if g.s[a] == g.s[b]:
        from .graph import TadpoleCollapse

        raise TadpoleCollapse(f"edge {e} is a tadpole")
    vset = set(w.vertices)
    if h0 is None:
        h0 = first
        if g.s[second] not in vset and g.s[first] in vset:
            h0 = second
    h1 = g.sigma[h0]
    gone = g.s[h1]
    if gone not in vset:
        raise SideViolation(f"collapsing {e} would delete {gone}, a {w.side}-leg")
    keep = g.s[h0]
    pe, edges = _to_front(w.edges, [e])
    ph, halves = _to_front(w.half_edges, [h0, h1])
    pv, verts = _to_front(w.vertices, [gone])
    if graph_h0 is None:
        graph_h0 = default_survivor(g, e)
        try:
            new_graph = collapse_edge(g, e, graph_h0)
        except GraphError:
            graph_h0 = g.sigma[graph_h0]
            new_graph = collapse_edge(g, e, graph_h0)
    else:
        new_graph = collapse_edge(g, e, graph_h0)
    gkeep = g.s[graph_h0]
    if gkeep != keep:
        verts = tuple(gkeep if v == keep else v for v in verts)
    return OrientationWord(
        new_graph, w.side, edges, halves, verts, w.sign * pe * ph * pv, w.inverse
    ).check()


# ---------------------------------------------------------------------------
# gluing and unions


def _concat(w2: OrientationWord, w1: OrientationWord, graph: Graph) -> OrientationWord:
    if w1.side != w2.side:
        raise ParameterMismatch("words on different sides")
    if w1.inverse != w2.inverse:
        raise ParameterMismatch("cannot combine a word with an inverse word")
    m, n, k = len(w2.edges), len(w2.vertices), len(w1.edges)
    s = w2.sign * w1.sign * sign((m + n) * k)
    if w1.inverse:
        s *= sign(w1.degree * w2.degree)
    return OrientationWord(
        graph,
        w1.side,
        w2.edges + w1.edges,
        w2.half_edges + w1.half_edges,
        w2.vertices + w1.vertices,
        s,
        w1.inverse,
    ).check()


def compose_words(w2: OrientationWord, w1: OrientationWord) -> OrientationWord:
    """Word of ``glue(G, G')`` from ``w2`` on ``G'`` and ``w1`` on ``G``.

    Letters of ``G'`` come first in each block; the sign is
    ``(-1)^{(m+n)k}`` with ``m = |E(G')|``, ``n`` the vertex letters of
    ``w2`` and ``k = |E(G)|``.
    """
    gr = glue_with_maps(w1.graph, w2.graph)
    a = rename_word(w1, gr.first, gr.graph)
    b = rename_word(w2, gr.second, gr.graph)
    return _concat(b, a, gr.graph)


def tensor_words(w1: OrientationWord, w2: OrientationWord) -> OrientationWord:
    """Word of ``disjoint_union(G1, G2)``, ``G1`` letters first."""
    g = disjoint_union(w1.graph, w2.graph)
    return _concat(w1, w2, g)


# ---------------------------------------------------------------------------
# canonical words


def canonical_word(g: Graph, side: str) -> OrientationWord:
    """Deterministic word with sign +1.

    Edges in sorted order; each edge contributes ``h`` then ``sigma h``
    with ``s(sigma h)`` off the side legs when possible; vertices sorted.
    """
    legs = set(g.legs(side))
    edges = tuple(sorted(g.edge_names))
    halves: list[str] = []
    for e in edges:
        h, h2 = g.edge_names[e]
        if g.s[h2] in legs and g.s[h] not in legs:
            h, h2 = h2, h
        halves += [h, h2]
    verts = tuple(sorted(g.internal_vertices(side)))
    return OrientationWord(g, side, edges, tuple(halves), verts, 1).check()


def _det(mat: list[list[int]]) -> int:
    import sympy

    return int(sympy.Matrix(mat).det()) if mat else 1


def trivial_word(g: Graph, side: str) -> OrientationWord:
    """The generator ``1`` of an acyclic ``det(G, side)``.

    ``(e_1..e_k)^{-1} (x) h_1 sh_1 .. (x) d_1 ^ .. ^ d_k`` with
    ``d_i = s(sh_i) - s(h_i)`` and side legs set to zero, expanded in the
    vertex basis.
    """
    w = canonical_word(g, side)
    verts = list(w.vertices)
    if len(verts) != len(w.edges):
        raise NotAcyclic(f"|E| != |V| off the {side}-legs")
    idx = {v: i for i, v in enumerate(verts)}
    rows = []
    for j in range(len(w.edges)):
        h, h2 = w.half_edges[2 * j], w.half_edges[2 * j + 1]
        row = [0] * len(verts)
        if g.s[h2] in idx:
            row[idx[g.s[h2]]] += 1
        if g.s[h] in idx:
            row[idx[g.s[h]]] -= 1
        rows.append(row)
    d = _det(rows)
    if d not in (1, -1):
        raise NotAcyclic(f"det(G, {side}) is not trivialised by the boundary map")
    return replace(w, sign=d)


def is_acyclic(g: Graph, side: str) -> bool:
    try:
        trivial_word(g, side)
    except NotAcyclic:
        return False
    return True


def generator_word(name: str, side: str) -> OrientationWord:
    """The chosen generators of the elementary graphs."""
    key = name.lower()
    g = elementary(key)
    chosen = {
        ("multi", "in"), ("comulti", "out"), ("unit", "in"), ("counit", "out"),
    }
    if (key, side) in chosen:
        if key in ("multi", "comulti"):
            return make_word(
                g, side, ["e2", "e1", "e0"], ["h0", "sh0", "h1", "sh1", "h2", "sh2"], ["v", "v0"]
            )
        return make_word(g, side, ["e0"], ["h0", "sh0"], ["v", "v0"])
    return trivial_word(g, side)


# ---------------------------------------------------------------------------
# (c, d)-orientations


@dataclass(frozen=True)
class CdOrientation:
    graph: Graph = field(repr=False)
    c: int
    d: int
    in_words: tuple[OrientationWord, ...]
    out_words: tuple[OrientationWord, ...]
    coefficient: Fraction = Fraction(1)

    @property
    def degree(self) -> int:
        return sum(w.degree for w in self.in_words) + sum(w.degree for w in self.out_words)

    def words(self) -> tuple[OrientationWord, ...]:
        return self.in_words + self.out_words

    def total_sign(self) -> int:
        s = 1
        for w in self.words():
            s *= w.sign
        return s

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "d": self.d,
            "coefficient": str(self.coefficient),
            "in_words": [w.to_json() for w in self.in_words],
            "out_words": [w.to_json() for w in self.out_words],
        }


def power(g: Graph, w_in: OrientationWord, w_out: OrientationWord, c: int, d: int) -> CdOrientation:
    ins = tuple(replace(w_in, inverse=c < 0) for _ in range(abs(c)))
    outs = tuple(replace(w_out, inverse=d < 0) for _ in range(abs(d)))
    return CdOrientation(g, c, d, ins, outs)


def generator_orientation(name: str, c: int, d: int, perm: Sequence[int] | None = None) -> CdOrientation:
    key = name.lower()
    if key in ("id", "twist"):
        g = elementary(key, perm)
        return power(g, canonical_word(g, "in"), canonical_word(g, "out"), c, d)
    g = elementary(key)
    return power(g, generator_word(key, "in"), generator_word(key, "out"), c, d)


def canonical_orientation(g: Graph, c: int, d: int) -> CdOrientation:
    return power(g, canonical_word(g, "in"), canonical_word(g, "out"), c, d)


def _koszul(degrees: Sequence[int], order: Sequence[int]) -> int:
    """Sign of reordering letters of the given degrees into ``order``."""
    s = 0
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                s += degrees[order[i]] * degrees[order[j]]
    return sign(s)


def _riffle(o2: CdOrientation, o1: CdOrientation) -> tuple[int, list, list]:
    if (o1.c, o1.d) != (o2.c, o2.d):
        raise ParameterMismatch("orientations have different (c, d)")
    nc, nd = len(o1.in_words), len(o1.out_words)
    letters = list(o2.in_words) + list(o2.out_words) + list(o1.in_words) + list(o1.out_words)
    degs = [w.degree for w in letters]
    base = nc + nd
    order = []
    for i in range(nc):
        order += [i, base + i]
    for j in range(nd):
        order += [nc + j, base + nc + j]
    s = _koszul(degs, order)
    ins = [(o2.in_words[i], o1.in_words[i]) for i in range(nc)]
    outs = [(o2.out_words[j], o1.out_words[j]) for j in range(nd)]
    return s, ins, outs


def cd_compose(o2: CdOrientation, o1: CdOrientation) -> CdOrientation:
    """``o2 o o1``: o1 lives on ``G``, o2 on ``G'``, result on ``glue(G, G')``."""
    s, ins, outs = _riffle(o2, o1)
    gr = glue_with_maps(o1.graph, o2.graph)

    def comp(b, a):
        return _concat(rename_word(b, gr.second, gr.graph), rename_word(a, gr.first, gr.graph), gr.graph)

    return CdOrientation(
        gr.graph,
        o1.c,
        o1.d,
        tuple(comp(b, a) for b, a in ins),
        tuple(comp(b, a) for b, a in outs),
        o1.coefficient * o2.coefficient * s,
    )


def cd_tensor(o1: CdOrientation, o2: CdOrientation) -> CdOrientation:
    s, ins, outs = _riffle(o1, o2)
    g = disjoint_union(o1.graph, o2.graph)
    return CdOrientation(
        g,
        o1.c,
        o1.d,
        tuple(_concat(a, b, g) for a, b in ins),
        tuple(_concat(a, b, g) for a, b in outs),
        o1.coefficient * o2.coefficient * s,
    )


def cd_collapse(o: CdOrientation, e: str, graph_h0: str | None = None) -> CdOrientation:
    g = o.graph
    if graph_h0 is None:
        graph_h0 = default_survivor(g, e)
        try:
            collapse_edge(g, e, graph_h0)
        except GraphError:
            graph_h0 = g.sigma[graph_h0]
    new_graph = collapse_edge(g, e, graph_h0)
    ins = tuple(replace(collapse_action(w, e, graph_h0=graph_h0), graph=new_graph) for w in o.in_words)
    outs = tuple(replace(collapse_action(w, e, graph_h0=graph_h0), graph=new_graph) for w in o.out_words)
    return CdOrientation(new_graph, o.c, o.d, ins, outs, o.coefficient)


def cd_normalize(o: CdOrientation) -> CdOrientation:
    """Fold word signs into the coefficient."""
    coeff = o.coefficient * o.total_sign()
    return replace(
        o,
        in_words=tuple(replace(w, sign=1) for w in o.in_words),
        out_words=tuple(replace(w, sign=1) for w in o.out_words),
        coefficient=coeff,
    )


def transport(o: CdOrientation, iso: Isomorphism, target: Graph) -> CdOrientation:
    table = {**iso.vertices, **iso.half_edges, **iso.edges}
    return replace(
        o,
        graph=target,
        in_words=tuple(rename_word(w, table, target) for w in o.in_words),
        out_words=tuple(rename_word(w, table, target) for w in o.out_words),
    )


def ratio(o1: CdOrientation, o2: CdOrientation) -> Fraction:
    """``r`` with ``o1 = r * o2``; both on the same graph."""
    if (o1.c, o1.d) != (o2.c, o2.d):
        raise ParameterMismatch("different (c, d)")
    r = o1.coefficient / o2.coefficient
    for a, b in zip(o1.words(), o2.words()):
        r *= reorder_sign(a, b)
    return r


def automorphism_action(w: OrientationWord, iso: Isomorphism) -> int:
    """Sign by which ``iso`` (a self-map of ``w.graph``) acts on ``w``."""
    table = {**iso.vertices, **iso.half_edges, **iso.edges}
    moved = rename_word(w, table, w.graph)
    return reorder_sign(moved, w)


def cd_automorphism_action(o: CdOrientation, iso: Isomorphism) -> int:
    s = 1
    for w in o.words():
        s *= automorphism_action(w, iso)
    return s


# ---------------------------------------------------------------------------
# reduction and comparison


def collapsible_edges(g: Graph) -> list[str]:
    """Edges whose collapse gives a valid graph, internal edges first."""
    internal, rest = [], []
    for e in sorted(g.edge_names):
        a, b = g.endpoints(e)
        if a == b:
            continue
        try:
            collapse_edge(g, e, default_survivor(g, e))
        except GraphError:
            try:
                collapse_edge(g, e, g.sigma[default_survivor(g, e)])
            except GraphError:
                continue
        (internal if not (g.is_leg(a) or g.is_leg(b)) else rest).append(e)
    return internal + rest


def reduce_orientation(o: CdOrientation, order: Sequence[str] | None = None) -> CdOrientation:
    """Collapse edges (given order, or greedily) until none is collapsible."""
    if order is not None:
        for e in order:
            o = cd_collapse(o, e)
        return o
    while True:
        es = collapsible_edges(o.graph)
        if not es:
            return o
        o = cd_collapse(o, es[0])


def compare(o1: CdOrientation, o2: CdOrientation) -> Fraction:
    """``r`` with ``o1 = r * o2`` after moving ``o1`` along an isomorphism.

    All isomorphisms fixing the legs must agree; otherwise the class is
    not well defined and ``ValueError`` is raised.
    """
    values = set()
    for iso in find_isomorphisms(o1.graph, o2.graph, limit=64):
        values.add(ratio(transport(o1, iso, o2.graph), o2))
    if not values:
        raise ValueError("graphs are not isomorphic")
    if len(values) != 1:
        raise ValueError(f"automorphisms act non-trivially: ratios {sorted(values)}")
    return values.pop()


def compare_reduced(o1: CdOrientation, o2: CdOrientation) -> Fraction:
    return compare(reduce_orientation(o1), reduce_orientation(o2))


# ---------------------------------------------------------------------------
# relation signs of the generators


def _gen(name, c, d, perm=None):
    return generator_orientation(name, c, d, perm)


def _idg(c, d, tag):
    o = _gen("id", c, d)
    table = {"u": tag}
    g = rename(o.graph, table)
    return transport_rename(o, table, g)


def transport_rename(o: CdOrientation, table: Mapping[str, str], g: Graph) -> CdOrientation:
    return replace(
        o,
        graph=g,
        in_words=tuple(rename_word(w, table, g) for w in o.in_words),
        out_words=tuple(rename_word(w, table, g) for w in o.out_words),
    )


def tag_orientation(o: CdOrientation, tag: str) -> CdOrientation:
    from .graph import ids

    table = {x: f"{tag}{x}" for x in ids(o.graph)}
    return transport_rename(o, table, rename(o.graph, table))


def relation_signs(c: int, d: int) -> dict[str, Fraction]:
    """Signs of the seven generator identities, computed from words.

    Keys and the sign expected from the graded relations:

    * ``associativity``: ``w(m)(w(m) x 1) / w(m)(1 x w(m))``, ``(-1)^c``
    * ``unit_left``: ``w(m)(w(u) x 1)``, ``(-1)^{c + c(c-1)/2}``
    * ``unit_right``: ``w(m)(1 x w(u))``, ``(-1)^{c(c-1)/2}``
    * ``coassociativity``: ``(1 x w(n))w(n) / (w(n) x 1)w(n)``, ``(-1)^d``
    * ``counit_left``: ``(w(e) x 1)w(n)``, ``(-1)^{d(d-1)/2}``
    * ``counit_right``: ``(1 x w(e))w(n)``, ``(-1)^{d + d(d-1)/2}``
    * ``frobenius_left`` / ``frobenius_right``: ``(-1)^{cd}`` against ``w(n)w(m)``
    * ``commutativity``: ``w(m)w(twist) / w(m)``, ``(-1)^c``
    * ``symmetry``: ``w(e)w(m)w(twist) / w(e)w(m)``, ``(-1)^c``
    """
    m = lambda t: tag_orientation(_gen("multi", c, d), t)
    n = lambda t: tag_orientation(_gen("comulti", c, d), t)
    u = lambda t: tag_orientation(_gen("unit", c, d), t)
    k = lambda t: tag_orientation(_gen("counit", c, d), t)
    one = lambda t: tag_orientation(_gen("id", c, d), t)
    tw = lambda t: tag_orientation(_gen("twist", c, d), t)
    idw = tag_orientation(_gen("id", c, d), "I.")
    out: dict[str, Fraction] = {}

    lhs = cd_compose(m("B."), cd_tensor(m("A."), one("C.")))
    rhs = cd_compose(m("B."), cd_tensor(one("C."), m("A.")))
    out["associativity"] = compare_reduced(lhs, rhs)

    out["unit_left"] = compare_reduced(cd_compose(m("B."), cd_tensor(u("A."), one("C."))), idw)
    out["unit_right"] = compare_reduced(cd_compose(m("B."), cd_tensor(one("C."), u("A."))), idw)

    lhs = cd_compose(cd_tensor(one("C."), n("B.")), n("A."))
    rhs = cd_compose(cd_tensor(n("B."), one("C.")), n("A."))
    out["coassociativity"] = compare_reduced(lhs, rhs)

    out["counit_left"] = compare_reduced(cd_compose(cd_tensor(k("B."), one("C.")), n("A.")), idw)
    out["counit_right"] = compare_reduced(cd_compose(cd_tensor(one("C."), k("B.")), n("A.")), idw)

    mid = cd_compose(n("B."), m("A."))
    left = cd_compose(cd_tensor(m("B."), one("D.")), cd_tensor(one("C."), n("A.")))
    right = cd_compose(cd_tensor(one("D."), m("B.")), cd_tensor(n("A."), one("C.")))
    out["frobenius_left"] = compare_reduced(left, mid)
    out["frobenius_right"] = compare_reduced(right, mid)

    out["commutativity"] = compare_reduced(cd_compose(m("B."), tw("A.")), m("C."))
    out["symmetry"] = compare_reduced(
        cd_compose(k("C."), cd_compose(m("B."), tw("A."))), cd_compose(k("C."), m("B."))
    )
    return out


def expected_relation_signs(c: int, d: int) -> dict[str, int]:
    t = lambda n: n * (n - 1) // 2
    return {
        "associativity": sign(c),
        "unit_left": sign(c + t(c)),
        "unit_right": sign(t(c)),
        "coassociativity": sign(d),
        "counit_left": sign(t(d)),
        "counit_right": sign(d + t(d)),
        "frobenius_left": sign(c * d),
        "frobenius_right": sign(c * d),
        "commutativity": sign(c),
        "symmetry": sign(c),
    }


# ---------------------------------------------------------------------------
# orbit classes


@dataclass(frozen=True)
class OrbitClass:
    kind: str  # "free", "two_torsion" or "unknown"
    sign: int = 1
    witness: tuple[str, ...] = ()

    def __str__(self) -> str:
        return {"free": "FreeGenerator", "two_torsion": "TwoTorsion", "unknown": "Unknown"}[self.kind]


def tadpole_witness(g: Graph) -> tuple[Graph, list[str], str]:
    """Collapse all but one edge of a cycle; return graph, collapsed edges, loop."""
    cyc = find_cycle(g)
    if cyc is None:
        raise ValueError("graph is a forest")
    done = []
    for e in cyc[:-1]:
        g = collapse_edge(g, e, default_survivor(g, e))
        done.append(e)
    return g, done, cyc[-1]


def orbit_class(g: Graph, c: int, d: int) -> OrbitClass:
    if is_forest(g):
        return OrbitClass("free", 1)
    if (c + d) % 2:
        _, path, loop = tadpole_witness(g)
        return OrbitClass("two_torsion", 1, tuple(path) + (loop,))
    return OrbitClass("unknown")


def flip_action(o: CdOrientation, loop: str) -> int:
    """Action of reversing a tadpole edge, ``(-1)^{|c| + |d|}``."""
    g = o.graph
    h, h2 = g.edge_names[loop]
    if g.s[h] != g.s[h2]:
        raise ValueError(f"{loop} is not a tadpole")
    iso = Isomorphism(
        {v: v for v in g.vertices},
        {x: (h2 if x == h else h if x == h2 else x) for x in g.half_edges},
        {e: e for e in g.edge_names},
    )
    return cd_automorphism_action(o, iso)


def cd_from_json(obj: Mapping, graph: Graph) -> CdOrientation:
    return CdOrientation(
        graph,
        int(obj["c"]),
        int(obj["d"]),
        tuple(word_from_json(w, graph) for w in obj["in_words"]),
        tuple(word_from_json(w, graph) for w in obj["out_words"]),
        Fraction(obj.get("coefficient", "1")),
    )
