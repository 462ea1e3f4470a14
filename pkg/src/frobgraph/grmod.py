"""Exact graded linear algebra over the rationals.

Modules are free, finite rank and ``Z``-graded.  Basis elements carry
string labels; tensor products use flattened tuples of atomic labels so
that the tensor product is strictly associative and unital.  Maps are
sparse dictionaries ``{source_label: {target_label: Fraction}}`` with a
declared degree.  All symmetric monoidal structure follows the Koszul
rule: moving ``x`` past ``y`` costs ``(-1)^{|x||y|}``.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Union

Label = Union[str, tuple]
Scalar = Union[int, Fraction]


class GradingMismatch(ValueError):
    """Source/target shapes or degrees do not fit together."""


class NonInvertible(ValueError):
    pass


def sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return Fraction(value)
    return Fraction(value)


def fraction_str(value: Fraction) -> str:
    value = as_fraction(value)
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# modules


@dataclass(frozen=True, eq=False)
class GradedModule:
    """Free graded module with an ordered basis in each degree.

    ``width`` is the number of tensor factors.  Width-1 modules have
    string labels, width-0 modules have the single label ``()`` and
    wider modules have tuples of strings.  Equality ignores basis order.
    """

    components: tuple[tuple[int, tuple[Label, ...]], ...]
    width: int = 1
    factors: tuple["GradedModule", ...] = field(default=(), repr=False)

    def __post_init__(self):
        degs = {}
        for d, labels in self.components:
            for lab in labels:
                if lab in degs:
                    raise ValueError(f"duplicate basis label {lab!r}")
                degs[lab] = d
        object.__setattr__(self, "_degrees", degs)

    @classmethod
    def from_dict(cls, spec: Mapping[int, Sequence[str]]) -> "GradedModule":
        comps = tuple(
            (int(d), tuple(labels)) for d, labels in sorted(spec.items()) if labels
        )
        for _, labels in comps:
            for lab in labels:
                if not isinstance(lab, str):
                    raise TypeError("atomic labels must be strings")
        return cls(comps, 1)

    @classmethod
    def unit(cls) -> "GradedModule":
        return cls(((0, ((),)),), 0)

    @classmethod
    def zero(cls) -> "GradedModule":
        return cls((), 1)

    # -- queries
    def degree(self, label: Label) -> int:
        try:
            return self._degrees[label]
        except KeyError:
            raise KeyError(f"{label!r} is not a basis label") from None

    def __contains__(self, label) -> bool:
        return label in self._degrees

    @property
    def basis(self) -> list[Label]:
        return [lab for _, labels in self.components for lab in labels]

    @property
    def degrees(self) -> list[int]:
        return [d for d, _ in self.components]

    def in_degree(self, d: int) -> tuple[Label, ...]:
        for k, labels in self.components:
            if k == d:
                return labels
        return ()

    @property
    def rank(self) -> int:
        return len(self._degrees)

    def __len__(self) -> int:
        return self.rank

    def is_zero(self) -> bool:
        return self.rank == 0

    def factor_modules(self) -> tuple["GradedModule", ...]:
        if self.width == 1:
            return (self,)
        return self.factors

    def split(self, label: Label, left_width: int) -> tuple[Label, Label]:
        return split_label(label, left_width, self.width)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedModule):
            return NotImplemented
        return self.width == other.width and self._degrees == other._degrees

    def __hash__(self) -> int:
        return hash((self.width, frozenset(self._degrees.items())))

    def __repr__(self) -> str:
        parts = ", ".join(f"{d}: {list(labels)}" for d, labels in self.components)
        return f"GradedModule({{{parts}}}, width={self.width})"

    def shift(self, k: int) -> "GradedModule":
        """Same labels, degrees raised by ``k``."""
        comps = tuple((d + k, labels) for d, labels in self.components)
        facs = self.factors
        return GradedModule(comps, self.width, facs)


def join_labels(a: Label, b: Label, wa: int, wb: int) -> Label:
    ta = (a,) if wa == 1 else a
    tb = (b,) if wb == 1 else b
    t = ta + tb
    return t[0] if len(t) == 1 else t


def split_label(label: Label, left: int, width: int) -> tuple[Label, Label]:
    t = (label,) if width == 1 else label
    a, b = t[:left], t[left:]
    a = a[0] if left == 1 else a
    b = b[0] if width - left == 1 else b
    return a, b


def letters(label: Label, width: int) -> tuple[str, ...]:
    return (label,) if width == 1 else label


def from_letters(parts: Sequence[str]) -> Label:
    parts = tuple(parts)
    return parts[0] if len(parts) == 1 else parts


def tensor_module(a: GradedModule, b: GradedModule) -> GradedModule:
    if a.width == 0:
        return b
    if b.width == 0:
        return a
    out: dict[int, list[Label]] = {}
    for da, la in a.components:
        for db, lb in b.components:
            out.setdefault(da + db, [])
    for k in sorted(out):
        for da, la in a.components:
            lb = b.in_degree(k - da)
            for x in la:
                for y in lb:
                    out[k].append(join_labels(x, y, a.width, b.width))
    comps = tuple((k, tuple(v)) for k, v in sorted(out.items()) if v)
    return GradedModule(comps, a.width + b.width, a.factor_modules() + b.factor_modules())


def tensor_power(a: GradedModule, n: int) -> GradedModule:
    out = GradedModule.unit()
    for _ in range(n):
        out = tensor_module(out, a)
    return out


def tensor_modules(mods: Iterable[GradedModule]) -> GradedModule:
    out = GradedModule.unit()
    for m in mods:
        out = tensor_module(out, m)
    return out


def dual_module(a: GradedModule, suffix: str = "*") -> GradedModule:
    """``A^v_k = (A_{-k})^*`` with labels ``x + suffix``."""
    if a.width != 1:
        raise GradingMismatch("dual is defined on width-1 modules")
    comps = tuple(
        (-d, tuple(lab + suffix for lab in labels)) for d, labels in reversed(a.components)
    )
    return GradedModule(comps, 1)


def direct_sum(a: GradedModule, b: GradedModule) -> GradedModule:
    if a.width != 1 or b.width != 1:
        raise GradingMismatch("direct sums of width-1 modules only")
    spec: dict[int, list[str]] = {}
    for m in (a, b):
        for d, labels in m.components:
            spec.setdefault(d, []).extend(labels)
    return GradedModule.from_dict(spec)


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True, eq=False)
class Element:
    module: GradedModule
    coeffs: Mapping[Label, Fraction]

    @classmethod
    def basis(cls, module: GradedModule, label: Label) -> "Element":
        module.degree(label)
        return cls(module, {label: Fraction(1)})

    def items(self):
        return ((k, v) for k, v in self.coeffs.items() if v)

    def is_zero(self) -> bool:
        return not any(self.coeffs.values())

    def homogeneous_degree(self) -> int | None:
        ds = {self.module.degree(k) for k, v in self.items()}
        return ds.pop() if len(ds) == 1 else None

    def __add__(self, other: "Element") -> "Element":
        if self.module != other.module:
            raise GradingMismatch("elements live in different modules")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, Fraction(0)) + v
        return Element(self.module, _prune(out))

    def __rmul__(self, r) -> "Element":
        r = as_fraction(r)
        return Element(self.module, _prune({k: r * v for k, v in self.coeffs.items()}))

    def __neg__(self) -> "Element":
        return -1 * self

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.module == other.module and _prune(self.coeffs) == _prune(other.coeffs)

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        return " + ".join(f"{v}*{k!r}" for k, v in self.items())


def _prune(d: Mapping) -> dict:
    return {k: v for k, v in d.items() if v}


# ---------------------------------------------------------------------------
# maps


@dataclass(frozen=True, eq=False)
class GradedMap:
    """Homogeneous linear map stored sparsely by basis label."""

    source: GradedModule
    target: GradedModule
    degree: int
    entries: Mapping[Label, Mapping[Label, Fraction]]

    def __post_init__(self):
        clean: dict = {}
        for a, col in self.entries.items():
            da = self.source.degree(a)
            c = {}
            for b, v in col.items():
                v = as_fraction(v)
                if not v:
                    continue
                if self.target.degree(b) != da + self.degree:
                    raise GradingMismatch(
                        f"entry {a!r}->{b!r} violates degree {self.degree}"
                    )
                c[b] = v
            if c:
                clean[a] = c
        object.__setattr__(self, "entries", clean)

    # -- construction helpers
    @classmethod
    def zero(cls, source: GradedModule, target: GradedModule, degree: int) -> "GradedMap":
        return cls(source, target, degree, {})

    @classmethod
    def from_images(cls, source, target, degree, images: Mapping[Label, Mapping[Label, Scalar]]):
        return cls(source, target, degree, {a: dict(col) for a, col in images.items()})

    @classmethod
    def from_blocks(cls, source, target, degree, blocks: Mapping[int, Sequence[Sequence[Scalar]]]):
        """``blocks[i]`` is the matrix ``target_{i+degree} x source_i``."""
        ent: dict = {}
        for i, mat in blocks.items():
            src = source.in_degree(i)
            tgt = target.in_degree(i + degree)
            if len(mat) != len(tgt) or any(len(row) != len(src) for row in mat):
                raise GradingMismatch(f"block {i} has the wrong shape")
            for r, b in enumerate(tgt):
                for c, a in enumerate(src):
                    if mat[r][c]:
                        ent.setdefault(a, {})[b] = as_fraction(mat[r][c])
        return cls(source, target, degree, ent)

    # -- queries
    def column(self, a: Label) -> Mapping[Label, Fraction]:
        return self.entries.get(a, {})

    def coefficient(self, a: Label, b: Label) -> Fraction:
        return self.entries.get(a, {}).get(b, Fraction(0))

    def block(self, i: int) -> list[list[Fraction]]:
        src = self.source.in_degree(i)
        tgt = self.target.in_degree(i + self.degree)
        return [[self.coefficient(a, b) for a in src] for b in tgt]

    def is_zero(self) -> bool:
        return not self.entries

    def __call__(self, x: Element) -> Element:
        if x.module != self.source:
            raise GradingMismatch("element is not in the source module")
        out: dict = {}
        for a, v in x.items():
            for b, w in self.column(a).items():
                out[b] = out.get(b, Fraction(0)) + v * w
        return Element(self.target, _prune(out))

    def apply_basis(self, a: Label) -> Element:
        return Element(self.target, dict(self.column(a)))

    # -- algebra
    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        return compose(self, other)

    def __add__(self, other: "GradedMap") -> "GradedMap":
        return add(self, other)

    def __sub__(self, other: "GradedMap") -> "GradedMap":
        return add(self, scale(other, -1))

    def __neg__(self) -> "GradedMap":
        return scale(self, -1)

    def __rmul__(self, r) -> "GradedMap":
        return scale(self, r)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedMap):
            return NotImplemented
        if self.source != other.source or self.target != other.target:
            return False
        if self.entries != other.entries:
            return False
        return self.degree == other.degree or not self.entries

    __hash__ = None

    def __repr__(self) -> str:
        return (
            f"GradedMap(deg={self.degree}, rank {self.source.rank}->{self.target.rank}, "
            f"{sum(len(c) for c in self.entries.values())} nonzero)"
        )


def identity(a: GradedModule) -> GradedMap:
    return GradedMap(a, a, 0, {x: {x: Fraction(1)} for x in a.basis})


def scale(f: GradedMap, r) -> GradedMap:
    r = as_fraction(r)
    return GradedMap(
        f.source, f.target, f.degree,
        {a: {b: r * v for b, v in col.items()} for a, col in f.entries.items()},
    )


def add(f: GradedMap, g: GradedMap) -> GradedMap:
    if f.source != g.source or f.target != g.target:
        raise GradingMismatch("cannot add maps between different modules")
    if f.degree != g.degree:
        if f.is_zero():
            return g
        if g.is_zero():
            return f
        raise GradingMismatch(f"cannot add maps of degrees {f.degree} and {g.degree}")
    out = {a: dict(col) for a, col in f.entries.items()}
    for a, col in g.entries.items():
        tgt = out.setdefault(a, {})
        for b, v in col.items():
            tgt[b] = tgt.get(b, Fraction(0)) + v
    return GradedMap(f.source, f.target, f.degree, out)


def compose(f: GradedMap, g: GradedMap) -> GradedMap:
    """``f o g``; no sign."""
    if g.target != f.source:
        raise GradingMismatch("composition: target of g is not the source of f")
    out: dict = {}
    for a, col in g.entries.items():
        acc: dict = {}
        for b, v in col.items():
            for c, w in f.column(b).items():
                acc[c] = acc.get(c, Fraction(0)) + v * w
        if acc:
            out[a] = acc
    return GradedMap(g.source, f.target, f.degree + g.degree, out)


def compose_all(*maps: GradedMap) -> GradedMap:
    out = maps[-1]
    for m in reversed(maps[:-1]):
        out = compose(m, out)
    return out


def tensor_map(f: GradedMap, g: GradedMap) -> GradedMap:
    """``(f (x) g)(a (x) b) = (-1)^{|g||a|} f(a) (x) g(b)``."""
    src = tensor_module(f.source, g.source)
    tgt = tensor_module(f.target, g.target)
    wf, wg = f.source.width, g.source.width
    vf, vg = f.target.width, g.target.width
    out: dict = {}
    for a, fcol in f.entries.items():
        s = sign(g.degree * f.source.degree(a))
        for b, gcol in g.entries.items():
            key = join_labels(a, b, wf, wg)
            acc = out.setdefault(key, {})
            for x, v in fcol.items():
                for y, w in gcol.items():
                    acc[join_labels(x, y, vf, vg)] = s * v * w
    return GradedMap(src, tgt, f.degree + g.degree, out)


def tensor_maps(maps: Sequence[GradedMap]) -> GradedMap:
    out = identity(GradedModule.unit())
    for m in maps:
        out = tensor_map(out, m)
    return out


def permutation_map(factors: Sequence[GradedModule], perm: Sequence[int]) -> GradedMap:
    """Koszul permutation sending factor ``i`` to output slot ``perm[i]``.

    The output is ``factors[perm^{-1}(0)] (x) ...``.
    """
    n = len(factors)
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation")
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    src = tensor_modules(factors)
    tgt = tensor_modules([factors[inv[j]] for j in range(n)])
    widths = [m.width for m in factors]
    out: dict = {}
    for parts in product(*[m.basis for m in factors]):
        degs = [factors[i].degree(parts[i]) for i in range(n)]
        s = 0
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    s += degs[i] * degs[j]
        key = _join_many(parts, widths)
        img = _join_many([parts[inv[j]] for j in range(n)], [widths[inv[j]] for j in range(n)])
        out[key] = {img: Fraction(sign(s))}
    return GradedMap(src, tgt, 0, out)


def _join_many(parts: Sequence[Label], widths: Sequence[int]) -> Label:
    flat: list = []
    for p, w in zip(parts, widths):
        flat.extend(letters(p, w) if w else ())
    return from_letters(flat) if flat else ()


def twist(a: GradedModule, b: GradedModule) -> GradedMap:
    """``a (x) b -> (-1)^{|a||b|} b (x) a``."""
    return permutation_map([a, b], [1, 0])


# ---------------------------------------------------------------------------
# suspension


def suspend_module(a: GradedModule, k: int = 1) -> GradedModule:
    return a.shift(k)


def _check_power(m: GradedModule, base: GradedModule, n: int, what: str):
    if m != tensor_power(base, n):
        raise GradingMismatch(f"{what} is not the {n}-th tensor power of the base module")


def _eps(label: Label, width: int, module: GradedModule) -> int:
    facs = module.factor_modules() if width else ()
    parts = letters(label, width) if width else ()
    e = 0
    for j, (x, m) in enumerate(zip(parts, facs), start=1):
        e += (width - j) * m.degree(x)
    return e


def _shift_map(f: GradedMap, base: GradedModule, k: int, l: int, step: int) -> GradedMap:
    _check_power(f.source, base, k, "source")
    _check_power(f.target, base, l, "target")
    nb = base.shift(step)
    src, tgt = tensor_power(nb, k), tensor_power(nb, l)
    out: dict = {}
    for a, col in f.entries.items():
        sa = _eps(a, k, f.source) + k * f.degree
        out[a] = {b: sign(sa + _eps(b, l, f.target)) * v for b, v in col.items()}
    return GradedMap(src, tgt, f.degree + step * (l - k), out)


def suspend_map(f: GradedMap, base: GradedModule, k: int, l: int) -> GradedMap:
    """Transport ``f: A^{(x)k} -> A^{(x)l}`` to ``(sA)^{(x)k} -> (sA)^{(x)l}``.

    ``(sf)(sa_1..sa_k) = e_k(a) (-1)^{k|f|} sum_b f_{b,a} e_l(b) sb``
    with ``e_k(a) = (-1)^{sum_j (k-j)|a_j|}``.  The degree becomes
    ``|f| + l - k``.
    """
    return _shift_map(f, base, k, l, 1)


def desuspend_map(f: GradedMap, base: GradedModule, k: int, l: int) -> GradedMap:
    """Same sign rule as :func:`suspend_map`, degree shift ``k - l``."""
    return _shift_map(f, base, k, l, -1)


# ---------------------------------------------------------------------------
# duality


def dual_map(f: GradedMap, suffix: str = "*") -> GradedMap:
    """Graded transpose ``f^v(phi) = (-1)^{|f||phi|} phi o f``."""
    if f.source.width != 1 or f.target.width != 1:
        raise GradingMismatch("dual_map expects width-1 modules")
    src, tgt = dual_module(f.target, suffix), dual_module(f.source, suffix)
    out: dict = {}
    for a, col in f.entries.items():
        for b, v in col.items():
            phi = b + suffix
            out.setdefault(phi, {})[a + suffix] = sign(f.degree * src.degree(phi)) * v
    return GradedMap(src, tgt, f.degree, out)


def evaluation_pairing(a: GradedModule, suffix: str = "*") -> GradedMap:
    """``A^v (x) A -> 1``, ``phi (x) x -> phi(x)``."""
    dv = dual_module(a, suffix)
    one = GradedModule.unit()
    src = tensor_module(dv, a)
    return GradedMap(src, one, 0, {(x + suffix, x): {(): Fraction(1)} for x in a.basis})


# ---------------------------------------------------------------------------
# exact linear algebra


def _sympy_matrix(rows):
    import sympy

    return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in r] for r in rows])


def _from_sympy(m) -> list[list[Fraction]]:
    return [[Fraction(int(m[i, j].p), int(m[i, j].q)) for j in range(m.cols)] for i in range(m.rows)]


def invert_matrix(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    m = _sympy_matrix(rows)
    if m.rows != m.cols or m.det() == 0:
        raise NonInvertible("matrix is singular")
    return _from_sympy(m.inv())


def kernel_basis(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    import sympy

    m = _sympy_matrix(rows) if rows else sympy.zeros(0, ncols)
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    return [[Fraction(int(v.p), int(v.q)) for v in vec] for vec in m.nullspace()]


def matrix_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return _sympy_matrix(rows).rank()


def invert(f: GradedMap) -> GradedMap:
    """Inverse of an invertible graded map, degree ``-|f|``."""
    ent: dict = {}
    for d, _ in f.source.components:
        src = f.source.in_degree(d)
        tgt = f.target.in_degree(d + f.degree)
        if len(src) != len(tgt):
            raise NonInvertible(f"degree {d} block is not square")
        inv = invert_matrix(f.block(d))
        for r, a in enumerate(src):
            for c, b in enumerate(tgt):
                if inv[r][c]:
                    ent.setdefault(b, {})[a] = inv[r][c]
    if f.target.rank != f.source.rank:
        raise NonInvertible("ranks differ")
    return GradedMap(f.target, f.source, -f.degree, ent)


# ---------------------------------------------------------------------------
# JSON


def _label_json(lab: Label):
    return list(lab) if isinstance(lab, tuple) else lab


def _label_from_json(x, width: int):
    if isinstance(x, list):
        return tuple(x) if width != 1 else x[0]
    return x


def module_to_json(m: GradedModule) -> dict:
    return {
        "width": m.width,
        "components": [
            {"degree": d, "basis": [_label_json(x) for x in labels]} for d, labels in m.components
        ],
        **(
            {"factors": [module_to_json(f) for f in m.factors]}
            if m.width != 1 and m.factors
            else {}
        ),
    }


def module_from_json(obj: Mapping) -> GradedModule:
    width = int(obj.get("width", 1))
    comps = tuple(
        (int(c["degree"]), tuple(_label_from_json(x, width) for x in c["basis"]))
        for c in obj["components"]
    )
    comps = tuple(sorted(comps))
    facs = tuple(module_from_json(f) for f in obj.get("factors", ()))
    return GradedModule(comps, width, facs)


def map_to_json(f: GradedMap) -> dict:
    return {
        "source": module_to_json(f.source),
        "target": module_to_json(f.target),
        "degree": f.degree,
        "blocks": [
            {"source_degree": d, "matrix": [[fraction_str(v) for v in row] for row in f.block(d)]}
            for d, _ in f.source.components
            if f.target.in_degree(d + f.degree)
        ],
    }


def map_from_json(obj: Mapping) -> GradedMap:
    src = module_from_json(obj["source"])
    tgt = module_from_json(obj["target"])
    blocks = {
        int(b["source_degree"]): [[Fraction(v) for v in row] for row in b["matrix"]]
        for b in obj["blocks"]
    }
    return GradedMap.from_blocks(src, tgt, int(obj["degree"]), blocks)


def element_to_json(x: Element) -> dict:
    basis = x.module.basis
    return {
        "module": module_to_json(x.module),
        "coefficients": [
            {"label": _label_json(k), "value": fraction_str(x.coeffs[k])}
            for k in basis
            if x.coeffs.get(k)
        ],
    }


def element_from_json(obj: Mapping) -> Element:
    m = module_from_json(obj["module"])
    return Element(
        m, {_label_from_json(c["label"], m.width): Fraction(c["value"]) for c in obj["coefficients"]}
    )


def iter_basis_pairs(m: GradedModule) -> Iterator[tuple[Label, int]]:
    for d, labels in m.components:
        for lab in labels:
            yield lab, d
