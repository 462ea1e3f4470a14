"""Layered decompositions of graph cobordisms and their evaluation.

A decomposition slices a graph into layers of elementary atoms.  Evaluating
it on a Frobenius algebra gives a graded map; multiplying by the sign that
relates a given orientation to the composite of generator orientations makes
the result independent of the decomposition.
"""

from __future__ import annotations

import random
import re
from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .frobenius import FrobeniusData
from .graph import Graph, validate
from .grmod import (
    GradedMap,
    from_letters,
    letters,
    scale,
    sign,
    tensor_power,
)
from .orient import (
    CdOrientation,
    canonical_orientation,
    cd_compose,
    cd_tensor,
    compare,
    generator_orientation,
    orbit_class,
    reduce_orientation,
    tag_orientation,
)


class PlanarTwistRequired(ValueError):
    pass


class ZeroOnTorsion(ArithmeticError):
    pass


class FlavorMismatch(ValueError):
    pass


class OrientationMismatch(ValueError):
    pass


ARITY = {"Mu": (2, 1), "Eta": (0, 1), "Nu": (1, 2), "Eps": (1, 0), "Id": (1, 1)}
TOKENS = {"Mu": "mu", "Eta": "eta", "Nu": "nu", "Eps": "eps", "Id": "id"}
_GENERATOR = {"Mu": "multi", "Eta": "unit", "Nu": "comulti", "Eps": "counit", "Id": "id"}


@dataclass(frozen=True)
class Atom:
    kind: str
    perm: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind == "Twist":
            if self.perm is None or sorted(self.perm) != list(range(len(self.perm))):
                raise ValueError("Twist needs a permutation")
            object.__setattr__(self, "perm", tuple(self.perm))
        elif self.kind not in ARITY:
            raise ValueError(f"unknown atom {self.kind!r}")

    @property
    def inputs(self) -> int:
        return len(self.perm) if self.kind == "Twist" else ARITY[self.kind][0]

    @property
    def outputs(self) -> int:
        return len(self.perm) if self.kind == "Twist" else ARITY[self.kind][1]

    @property
    def is_crossing(self) -> bool:
        return self.kind == "Twist" and self.perm != tuple(range(len(self.perm)))

    def token(self) -> str:
        if self.kind != "Twist":
            return TOKENS[self.kind]
        if self.perm == (1, 0):
            return "tau"
        return "tau[" + ",".join(map(str, self.perm)) + "]"


@dataclass(frozen=True)
class Layer:
    atoms: tuple[Atom, ...]

    @property
    def inputs(self) -> int:
        return sum(a.inputs for a in self.atoms)

    @property
    def outputs(self) -> int:
        return sum(a.outputs for a in self.atoms)

    def expression(self) -> str:
        parts = [a.token() for a in self.atoms]
        return parts[0] if len(parts) == 1 else "(" + " ⊗ ".join(parts) + ")"


def _around(k: int, atom: Atom, n: int) -> Layer:
    """``atom`` at strand position ``k`` among ``n`` strands, identities elsewhere."""
    idle = n - k - atom.inputs
    return Layer((Atom("Id"),) * k + (atom,) + (Atom("Id"),) * idle)


@dataclass(frozen=True)
class Decomposition:
    layers: tuple[Layer, ...]
    n_in: int
    n_out: int
    graph: Graph | None = field(default=None, repr=False, compare=False)
    seed: int | None = None

    def __post_init__(self):
        width = self.n_in
        for i, layer in enumerate(self.layers):
            if layer.inputs != width:
                raise ValueError(f"layer {i} takes {layer.inputs} strands, {width} arrive")
            width = layer.outputs
        if width != self.n_out:
            raise ValueError(f"decomposition ends with {width} strands, expected {self.n_out}")

    def atoms(self) -> list[Atom]:
        return [a for layer in self.layers for a in layer.atoms]

    def counts(self) -> dict[str, int]:
        out = {k: 0 for k in ("Mu", "Eta", "Nu", "Eps", "Id", "Twist")}
        for a in self.atoms():
            out[a.kind] += 1
        return out

    def has_crossing(self) -> bool:
        return any(a.is_crossing for a in self.atoms())

    def expression(self) -> str:
        return to_expression(self)

    def witness(self, c: int, d: int) -> CdOrientation:
        """Composite of the generator orientations along the layers."""
        return _witness(self, c, d)

    def glued_graph(self) -> Graph:
        return self.witness(0, 0).graph


# ---------------------------------------------------------------------------
# expression language


def to_expression(dec: Decomposition) -> str:
    if not dec.layers:
        return "1"
    return " ∘ ".join(layer.expression() for layer in reversed(dec.layers))


_ALIASES = {
    "mu": "Mu", "multi": "Mu", "eta": "Eta", "unit": "Eta", "nu": "Nu", "comulti": "Nu",
    "eps": "Eps", "counit": "Eps", "id": "Id",
}
_TAU = re.compile(r"^tau(?:\[([0-9,\s]+)\])?$")


def _parse_atom(tok: str) -> Atom:
    tok = tok.strip()
    if tok.lower() in _ALIASES:
        return Atom(_ALIASES[tok.lower()])
    m = _TAU.match(tok)
    if m:
        perm = (1, 0) if m.group(1) is None else tuple(int(x) for x in m.group(1).split(","))
        return Atom("Twist", perm)
    raise ValueError(f"unknown token {tok!r}")


def _split_top(s: str, sep: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def _strip_parens(s: str) -> str:
    s = s.strip()
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and i < len(s) - 1:
                return s
        s = s[1:-1].strip()
    return s


def parse_expression(text: str, n_in: int | None = None) -> Decomposition:
    """Inverse of :func:`to_expression`; the rightmost layer acts first."""
    text = text.strip()
    if text in ("", "1"):
        return Decomposition((), n_in or 0, n_in or 0)
    layers = []
    for chunk in reversed(_split_top(text, "∘")):
        body = _strip_parens(chunk)
        atoms = tuple(_parse_atom(t) for t in _split_top(body, "⊗"))
        layers.append(Layer(atoms))
    start = layers[0].inputs if n_in is None else n_in
    width = start
    for layer in layers:
        width = layer.outputs
    return Decomposition(tuple(layers), start, width)


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class _Flow:
    """Directed multigraph: nodes with ordered inputs and outputs."""

    edges: dict[str, tuple[str, str]] = field(default_factory=dict)
    order: list[str] = field(default_factory=list)
    sources: list[str] = field(default_factory=list)
    sinks: dict[str, int] = field(default_factory=dict)

    def add(self, name: str, a: str, b: str) -> None:
        self.edges[name] = (a, b)


def _heights(g: Graph, rng: random.Random | None) -> list[str]:
    internal = g.internal_vertices()
    nbrs: dict[str, list[str]] = {v: [] for v in g.vertices}
    for e in g.edges:
        a, b = g.endpoints(e)
        nbrs[a].append(b)
        nbrs[b].append(a)
    starts = [v for leg in g.legs_in for v in nbrs[leg]] + list(internal)
    if rng is not None:
        if rng.random() < 0.5:
            order = list(internal)
            rng.shuffle(order)
            return order
        rng.shuffle(starts)
    seen: set[str] = set()
    out = []
    for s0 in starts:
        if s0 in seen or g.is_leg(s0):
            continue
        seen.add(s0)
        queue = deque([s0])
        while queue:
            v = queue.popleft()
            out.append(v)
            nxt = [w for w in nbrs[v] if w not in seen and not g.is_leg(w)]
            if rng is not None:
                rng.shuffle(nxt)
            for w in nxt:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return out


def _flow(g: Graph, rng: random.Random | None) -> _Flow:
    order = _heights(g, rng)
    pos = {v: i for i, v in enumerate(order)}
    legs_in = {v: i for i, v in enumerate(g.legs_in)}
    legs_out = {v: i for i, v in enumerate(g.legs_out)}
    fl = _Flow()
    src: dict[int, str] = {}
    early: list[str] = []
    late: list[str] = []
    after: dict[str, list[str]] = {}

    for e in g.edges:
        a, b = g.endpoints(e)
        a_in, b_in = a in legs_in, b in legs_in
        a_out, b_out = a in legs_out, b in legs_out
        if a == b:
            t = f"{e}#t"
            after.setdefault(a, []).append(t)
            fl.add(f"{e}#1", a, t)
            fl.add(f"{e}#2", a, t)
        elif a_in and b_in:
            t = f"{e}#t"
            early.append(t)
            fl.add(f"{e}#1", f"in:{legs_in[a]}", t)
            fl.add(f"{e}#2", f"in:{legs_in[b]}", t)
            src[legs_in[a]] = f"{e}#1"
            src[legs_in[b]] = f"{e}#2"
        elif a_out and b_out:
            t = f"{e}#t"
            late.append(t)
            fl.add(f"{e}#1", t, f"out:{legs_out[a]}")
            fl.add(f"{e}#2", t, f"out:{legs_out[b]}")
        elif a_in or b_in:
            leg, other = (a, b) if a_in else (b, a)
            dst = f"out:{legs_out[other]}" if other in legs_out else other
            fl.add(e, f"in:{legs_in[leg]}", dst)
            src[legs_in[leg]] = e
        elif a_out or b_out:
            leg, other = (a, b) if a_out else (b, a)
            fl.add(e, other, f"out:{legs_out[leg]}")
        else:
            lo, hi = (a, b) if pos[a] < pos[b] else (b, a)
            fl.add(e, lo, hi)
    for v in g.vertices:
        if g.arity(v):
            continue
        if v in legs_in and v in legs_out:
            name = f"{v}#pass"
            fl.add(name, f"in:{legs_in[v]}", f"out:{legs_out[v]}")
            src[legs_in[v]] = name
        elif v in legs_in:
            t = f"{v}#t"
            early.append(t)
            name = f"{v}#in"
            fl.add(name, f"in:{legs_in[v]}", t)
            src[legs_in[v]] = name
        elif v in legs_out:
            t = f"{v}#t"
            late.append(t)
            fl.add(f"{v}#out", t, f"out:{legs_out[v]}")
    full = list(early)
    for v in order:
        full.append(v)
        full.extend(after.get(v, []))
    full.extend(late)
    fl.order = full
    fl.sources = [src[i] for i in range(len(g.legs_in))]
    fl.sinks = {name: int(b[4:]) for name, (_, b) in fl.edges.items() if b.startswith("out:")}
    return fl


def _permute(strands: list[str], new: list[str], layers: list[Layer]) -> None:
    if new == strands:
        return
    index = {s: i for i, s in enumerate(new)}
    layers.append(Layer((Atom("Twist", tuple(index[s] for s in strands)),)))


def decompose(g: Graph, seed: int = 0, flavor: str = "commutative") -> Decomposition:
    problems = validate(g)
    if problems:
        raise ValueError(f"invalid graph: {problems[0]}")
    rng = None if seed == 0 else random.Random(seed)
    fl = _flow(g, rng)
    rank = {v: i for i, v in enumerate(fl.order)}
    # crossings are free only when the target is commutative
    shuffle = rng if flavor == "commutative" else None

    def out_key(name: str):
        dst = fl.edges[name][1]
        if dst.startswith("out:"):
            return (len(rank) + int(dst[4:]), name)
        return (rank[dst], name)

    strands = list(fl.sources)
    layers: list[Layer] = []
    for v in fl.order:
        ins = [s for s in strands if fl.edges[s][1] == v]
        outs = sorted((n for n, (a, _) in fl.edges.items() if a == v), key=out_key)
        if shuffle is not None:
            shuffle.shuffle(outs)
        k = strands.index(ins[0]) if ins else len(strands)
        if ins:
            rest = [s for s in strands if s not in ins]
            lead = sum(1 for s in strands[:k] if s not in ins)
            new = rest[:lead] + ins + rest[lead:]
            _permute(strands, new, layers)
            strands = new
        p, q = len(ins), len(outs)
        if (p, q) == (1, 1):
            strands[k] = outs[0]
            continue
        n = len(strands)
        if p == 0:
            layers.append(_around(k, Atom("Eta"), n))
            n += 1
        for _ in range(p - 1):
            layers.append(_around(k, Atom("Mu"), n))
            n -= 1
        if q == 0:
            layers.append(_around(k, Atom("Eps"), n))
        for _ in range(q - 1):
            layers.append(_around(k, Atom("Nu"), n))
            n += 1
        strands = strands[:k] + outs + strands[k + p:]
    target = sorted(strands, key=lambda s: fl.sinks[s])
    _permute(strands, target, layers)
    if not layers and strands:
        layers.append(Layer((Atom("Id"),) * len(strands)))
    dec = Decomposition(tuple(layers), len(g.legs_in), len(g.legs_out), g, seed)
    if flavor == "planar" and dec.has_crossing():
        raise PlanarTwistRequired("no crossing-free decomposition found for a planar evaluation")
    return dec


# ---------------------------------------------------------------------------
# orientations and signs


def _atom_orientation(atom: Atom, c: int, d: int, tag: str) -> CdOrientation:
    if atom.kind == "Twist":
        o = generator_orientation("twist", c, d, atom.perm)
    else:
        o = generator_orientation(_GENERATOR[atom.kind], c, d)
    return tag_orientation(o, tag)


def _witness(dec: Decomposition, c: int, d: int) -> CdOrientation:
    if not dec.layers:
        return canonical_orientation(Graph((), (), {}, {}, (), (), {}, {}), c, d)
    total = None
    for i, layer in enumerate(dec.layers):
        o = None
        for j, atom in enumerate(layer.atoms):
            a = _atom_orientation(atom, c, d, f"L{i}.{j}.")
            o = a if o is None else cd_tensor(o, a)
        total = o if total is None else cd_compose(o, total)
    return total


def decomposition_sign(dec: Decomposition, omega: CdOrientation) -> int:
    """``r`` with ``omega = r * witness``; ``ValueError`` if the class is torsion."""
    w = dec.witness(omega.c, omega.d)
    try:
        r = compare(reduce_orientation(omega), reduce_orientation(w))
    except ValueError as exc:
        if "not isomorphic" in str(exc):
            raise OrientationMismatch("orientation does not live on the decomposed graph") from exc
        raise
    if r not in (1, -1):
        raise OrientationMismatch(f"unexpected ratio {r}")
    return int(r)


# ---------------------------------------------------------------------------
# evaluation


def _atom_map(atom: Atom, f: FrobeniusData) -> GradedMap | None:
    return {"Mu": f.mu, "Eta": f.eta, "Nu": f.nu, "Eps": f.eps}.get(atom.kind)


def _apply_atom(atom: Atom, m: GradedMap | None, chunk: tuple, A) -> list[tuple[tuple, Fraction]]:
    if atom.kind == "Id":
        return [(chunk, Fraction(1))]
    if atom.kind == "Twist":
        perm, n = atom.perm, len(chunk)
        degs = [A.degree(x) for x in chunk]
        e = sum(degs[i] * degs[j] for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        out = [None] * n
        for i, p in enumerate(perm):
            out[p] = chunk[i]
        return [(tuple(out), Fraction(sign(e)))]
    col = m.entries.get(from_letters(chunk) if chunk else (), {})
    w = m.target.width
    return [(letters(x, w) if w else (), v) for x, v in col.items()]


def _apply_layer(layer: Layer, maps: list, vec: dict, A) -> dict:
    out: dict = {}
    for t, coeff in vec.items():
        partial = [((), coeff)]
        pos = before = 0
        for atom, m in zip(layer.atoms, maps):
            chunk = t[pos:pos + atom.inputs]
            s = sign(m.degree * before) if m is not None else 1
            images = _apply_atom(atom, m, chunk, A)
            partial = [(p + x, c * v * s) for p, c in partial for x, v in images]
            before += sum(A.degree(x) for x in chunk)
            pos += atom.inputs
            if not partial:
                break
        for p, c in partial:
            if c:
                out[p] = out.get(p, 0) + c
    return {k: v for k, v in out.items() if v}


def evaluate(dec: Decomposition, f: FrobeniusData) -> GradedMap:
    """Composite of the layer maps, applied column by column."""
    if dec.has_crossing() and f.flavor == "planar":
        raise FlavorMismatch("a crossing needs a symmetric or commutative algebra")
    source = tensor_power(f.A, dec.n_in)
    n = dec.counts()
    degree = f.c * (n["Mu"] - n["Eta"]) + f.d * (n["Nu"] - n["Eps"])
    layer_maps = [[_atom_map(a, f) for a in layer.atoms] for layer in dec.layers]
    entries = {}
    for label in source.basis:
        vec = {(letters(label, source.width) if source.width else ()): Fraction(1)}
        for layer, maps in zip(dec.layers, layer_maps):
            vec = _apply_layer(layer, maps, vec, f.A)
            if not vec:
                break
        entries[label] = {(from_letters(t) if t else ()): v for t, v in vec.items()}
    return GradedMap(source, tensor_power(f.A, dec.n_out), degree, entries)


@dataclass(frozen=True)
class Evaluation:
    map: GradedMap
    sign: int
    torsion: bool
    decomposition: Decomposition


def evaluate_oriented(
    g: Graph, omega: CdOrientation, f: FrobeniusData, seed: int = 0
) -> Evaluation:
    """Evaluate the oriented cobordism ``(g, omega)`` on ``f``.

    On a two-torsion class the raw composite must vanish; a nonzero value
    raises :class:`ZeroOnTorsion`.
    """
    if (omega.c, omega.d) != (f.c, f.d):
        raise OrientationMismatch(f"orientation is ({omega.c}, {omega.d}), algebra is ({f.c}, {f.d})")
    dec = decompose(g, seed, f.flavor)
    raw = evaluate(dec, f)
    torsion = orbit_class(g, f.c, f.d).kind == "two_torsion"
    r = 0
    if not torsion:
        try:
            r = decomposition_sign(dec, omega)
        except OrientationMismatch:
            raise
        except ValueError:
            torsion = True
    if torsion:
        if not raw.is_zero():
            raise ZeroOnTorsion("two-torsion class evaluates to a nonzero map")
        return Evaluation(raw, 0, True, dec)
    return Evaluation(scale(raw, Fraction(r)), r, False, dec)


def from_atoms(layers: Sequence[Sequence[Atom | str]], n_in: int | None = None) -> Decomposition:
    built = []
    for layer in layers:
        built.append(Layer(tuple(a if isinstance(a, Atom) else _parse_atom(a) for a in layer)))
    start = built[0].inputs if n_in is None else n_in
    return Decomposition(tuple(built), start, built[-1].outputs if built else start)

