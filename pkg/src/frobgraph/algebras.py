"""Example algebras: manifold cohomology rings and Hochschild chains.

Cohomology rings are given by multiplication tables on a basis
``1, g_1, ..., g_r`` and completed to ``(0, d)`` Frobenius algebras
through the pairing.  Hochschild chains ``a_0 (x) ... (x) a_k`` live on
basis labels of a ``(0, d)`` algebra; the internal letters carry
degree ``|a_i| + 1``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .frobenius import FrobeniusData, from_pairing, tensor_algebras
from .grmod import (
    GradedMap,
    GradedModule,
    as_fraction,
    desuspend_map,
    fraction_str,
    sign,
    tensor_module,
)

UNIT = "1"


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class RingPresentation:
    gens: tuple[tuple[str, int], ...]
    table: Mapping[str, Mapping[str, Fraction]]
    top: int
    counit: Mapping[str, Fraction]

    @property
    def degrees(self) -> dict[str, int]:
        return {UNIT: 0, **dict(self.gens)}

    def module(self) -> GradedModule:
        spec: dict[int, list[str]] = {}
        for lab, deg in self.degrees.items():
            spec.setdefault(deg, []).append(lab)
        return GradedModule.from_dict(spec)

    def product(self, a: str, b: str) -> dict[str, Fraction]:
        if a == UNIT:
            return {b: Fraction(1)}
        if b == UNIT:
            return {a: Fraction(1)}
        key = f"{a}*{b}"
        if key in self.table:
            return dict(self.table[key])
        rev = f"{b}*{a}"
        degs = self.degrees
        if rev in self.table:
            s = sign(degs[a] * degs[b])
            return {k: s * v for k, v in self.table[rev].items()}
        if degs[a] + degs[b] > self.top:
            return {}
        raise ValueError(f"table does not define {a}*{b}")

    def to_json(self) -> dict:
        return {
            "gens": [{"name": n, "deg": d} for n, d in self.gens],
            "table": {k: format_combination(v) for k, v in self.table.items()},
            "top": self.top,
            "counit": {k: fraction_str(v) for k, v in self.counit.items()},
        }


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z_][\w]*)?\s*")


def parse_combination(text: str) -> dict[str, Fraction]:
    """``"2 a - b/1"``-style linear combinations; ``"0"`` is zero."""
    text = text.strip()
    if text in ("", "0"):
        return {}
    out: dict[str, Fraction] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {text!r} at position {pos}")
        sgn, coeff, lab = m.groups()
        if coeff is None and lab is None:
            raise ValueError(f"cannot parse {text!r}")
        v = Fraction(coeff) if coeff else Fraction(1)
        if sgn == "-":
            v = -v
        lab = lab or UNIT
        out[lab] = out.get(lab, Fraction(0)) + v
        pos = m.end()
    return {k: v for k, v in out.items() if v}


def format_combination(comb: Mapping[str, Fraction]) -> str:
    if not comb:
        return "0"
    parts = []
    for lab, v in comb.items():
        mag = abs(v)
        coeff = "" if mag == 1 else f"{fraction_str(mag)} "
        parts.append(("-" if v < 0 else "+") + " " + coeff + lab)
    s = " ".join(parts)
    return s[2:] if s.startswith("+ ") else s


def presentation_from_json(obj: Mapping) -> RingPresentation:
    gens = tuple((g["name"], int(g["deg"])) for g in obj["gens"])
    table = {k: parse_combination(str(v)) for k, v in obj.get("table", {}).items()}
    counit = {k: as_fraction(v) for k, v in obj["counit"].items()}
    return RingPresentation(gens, table, int(obj["top"]), counit)


def load_presentation(path) -> RingPresentation:
    with open(path) as fh:
        return presentation_from_json(json.load(fh))


def check_presentation(p: RingPresentation) -> list[str]:
    problems = []
    degs = p.degrees
    for a in degs:
        for b in degs:
            try:
                ab = p.product(a, b)
            except ValueError as exc:
                problems.append(str(exc))
                continue
            for lab in ab:
                if lab not in degs:
                    problems.append(f"{a}*{b} leaves the basis ({lab})")
                elif degs[lab] != degs[a] + degs[b]:
                    problems.append(f"{a}*{b} is not homogeneous")
            if p.product(b, a) != {k: sign(degs[a] * degs[b]) * v for k, v in ab.items()}:
                problems.append(f"{a}*{b} is not graded commutative")
    for lab in p.counit:
        if degs.get(lab) != p.top:
            problems.append(f"counit on {lab} outside the top degree")
    return problems


def cohomology_algebra(p: RingPresentation) -> FrobeniusData:
    """``(0, top)`` commutative Frobenius algebra with the Thom coproduct."""
    problems = check_presentation(p)
    if problems:
        raise ValueError("; ".join(problems))
    A = p.module()
    AA = tensor_module(A, A)
    one = GradedModule.unit()
    mu = GradedMap(AA, A, 0, {(a, b): p.product(a, b) for a in A.basis for b in A.basis})
    eta = GradedMap(one, A, 0, {(): {UNIT: 1}})
    eps = GradedMap(A, one, -p.top, {k: {(): v} for k, v in p.counit.items()})
    return from_pairing(A, mu, eta, eps, 0, p.top, "commutative")


def sphere_presentation(d: int) -> RingPresentation:
    if d < 1:
        raise ValueError("spheres of dimension >= 1")
    return RingPresentation((("a", d),), {"a*a": {}}, d, {"a": Fraction(1)})


def torus_presentation() -> RingPresentation:
    """``H*(S^1 x S^1)`` with ``a = a (x) 1``, ``b = 1 (x) a`` and ``ab`` on top.

    The counit is ``-1`` on ``ab``: the Koszul sign of ``(eps (x) eps)(a (x) a)``.
    """
    return RingPresentation(
        (("a", 1), ("b", 1), ("ab", 2)),
        {
            "a*a": {},
            "b*b": {},
            "a*b": {"ab": Fraction(1)},
            "a*ab": {},
            "b*ab": {},
            "ab*ab": {},
        },
        2,
        {"ab": Fraction(-1)},
    )


def projective_presentation(n: int) -> RingPresentation:
    """``H*(CP^n) = Q[x]/x^{n+1}`` with ``|x| = 2``."""
    names = [UNIT] + [f"x{i}" for i in range(1, n + 1)]
    table = {}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            table[f"{names[i]}*{names[j]}"] = {names[i + j]: Fraction(1)} if i + j <= n else {}
    return RingPresentation(
        tuple((names[i], 2 * i) for i in range(1, n + 1)), table, 2 * n, {names[n]: Fraction(1)}
    )


def sphere(d: int) -> FrobeniusData:
    return cohomology_algebra(sphere_presentation(d))


def torus() -> FrobeniusData:
    return cohomology_algebra(torus_presentation())


def torus_as_product() -> FrobeniusData:
    return tensor_algebras(sphere(1), sphere(1))


# ---------------------------------------------------------------------------
# Thom and Poincare coproducts


def thom_to_poincare(nu_th: GradedMap, d: int) -> GradedMap:
    """Multiply the ``(i, d + k - i)`` output coordinate by ``(-1)^{d(d-1)/2 + d + d i}``.

    ``i`` is the degree of the first tensor factor of the output.  The
    map is returned on the same labels, so it is directly comparable to
    :func:`iterated_desuspension`.  The two differ by the global sign
    :func:`transport_discrepancy`.
    """
    tgt = nu_th.target
    facs = tgt.factor_modules()
    out = {}
    for a, col in nu_th.entries.items():
        out[a] = {}
        for b, v in col.items():
            i = facs[0].degree(b[0])
            out[a][b] = sign(d * (d - 1) // 2 + d + d * i) * v
    return GradedMap(nu_th.source, tgt, nu_th.degree, out)


def iterated_desuspension(nu: GradedMap, base: GradedModule, d: int) -> GradedMap:
    """Apply :func:`grmod.desuspend_map` ``d`` times to ``nu: A -> A (x) A``."""
    f = nu
    for _ in range(d):
        f = desuspend_map(f, base, 1, 2)
        base = base.shift(-1)
    return f


def transport_discrepancy(d: int) -> int:
    """``thom_to_poincare(nu, d) = transport_discrepancy(d) * iterated_desuspension(nu, A, d)``."""
    return sign(d * (d - 1) // 2)


def same_entries(f: GradedMap, g: GradedMap) -> bool:
    return {a: dict(c) for a, c in f.entries.items()} == {a: dict(c) for a, c in g.entries.items()}


# ---------------------------------------------------------------------------
# Hochschild chains


Word = tuple[str, ...]


@dataclass(frozen=True)
class HochschildWord:
    letters: Word
    coefficient: Fraction = Fraction(1)

    @property
    def length(self) -> int:
        return len(self.letters) - 1

    def to_json(self, A: GradedModule) -> dict:
        return {
            "coefficient": fraction_str(self.coefficient),
            "letters": [[lab, A.degree(lab)] for lab in self.letters],
        }


def word_from_json(obj: Mapping) -> HochschildWord:
    return HochschildWord(tuple(x[0] for x in obj["letters"]), as_fraction(obj.get("coefficient", 1)))


@dataclass
class Chain:
    """Formal sum of Hochschild words with rational coefficients."""

    terms: dict[Word, Fraction] = field(default_factory=dict)

    def add(self, word: Iterable[str], v) -> None:
        w = tuple(word)
        v = self.terms.get(w, Fraction(0)) + as_fraction(v)
        if v:
            self.terms[w] = v
        else:
            self.terms.pop(w, None)

    def __iter__(self) -> Iterator[tuple[Word, Fraction]]:
        return iter(self.terms.items())

    def __eq__(self, other) -> bool:
        if isinstance(other, Chain):
            return self.terms == other.terms
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms

    def words(self) -> list[HochschildWord]:
        return [HochschildWord(w, v) for w, v in self.terms.items()]


@dataclass
class PairChain:
    """Formal sum of pairs of words, the image of a coproduct."""

    terms: dict[tuple[Word, Word], Fraction] = field(default_factory=dict)

    def add(self, left: Iterable[str], right: Iterable[str], v) -> None:
        key = (tuple(left), tuple(right))
        v = self.terms.get(key, Fraction(0)) + as_fraction(v)
        if v:
            self.terms[key] = v
        else:
            self.terms.pop(key, None)

    def __eq__(self, other) -> bool:
        if isinstance(other, PairChain):
            return self.terms == other.terms
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.terms


def _require_hh(f: FrobeniusData) -> None:
    if f.c != 0:
        raise ValueError("Hochschild operations need a (0, d) algebra")
    if f.flavor not in ("symmetric", "commutative"):
        raise ValueError("Hochschild operations need a symmetric algebra")


def letter_degree(A: GradedModule, word: Word, i: int) -> int:
    """Degree of the ``i``-th letter in the chain grading."""
    return A.degree(word[i]) + (1 if i else 0)


def word_degree(A: GradedModule, word: Word) -> int:
    return sum(A.degree(x) for x in word) + len(word) - 1


def unit_label(f: FrobeniusData) -> str | None:
    col = f.eta.column(())
    if len(col) == 1:
        return next(iter(col))
    return None


def is_normalized(f: FrobeniusData, word: Word) -> bool:
    u = unit_label(f)
    if u is None:
        raise ValueError("normalization needs the unit to be a basis element")
    return u not in word[1:]


def _product(f: FrobeniusData, a: str, b: str) -> dict[str, Fraction]:
    return dict(f.mu.column((a, b)))


def hochschild_mu(w1: HochschildWord, w2: HochschildWord, f: FrobeniusData) -> Chain:
    _require_hh(f)
    out = Chain()
    if w1.length > 0:
        return out
    A, d = f.A, f.d
    a0 = w1.letters[0]
    b0, rest = w2.letters[0], w2.letters[1:]
    coeff = w1.coefficient * w2.coefficient
    for (p, q), v in f.nu.column(a0).items():
        s = sign((A.degree(p) + d) * A.degree(q))
        for r, u in _product(f, q, p).items():
            for t, x in _product(f, r, b0).items():
                out.add((t,) + rest, s * v * u * x * coeff)
    return out


def hochschild_nu(w: HochschildWord, f: FrobeniusData) -> PairChain:
    _require_hh(f)
    A = f.A
    a0, tail = w.letters[0], w.letters[1:]
    k = len(tail)
    out = PairChain()
    for (p, q), v in f.nu.column(a0).items():
        for i in range(k + 1):
            moved = A.degree(q) + sum(A.degree(x) + 1 for x in tail[:i])
            s = sign((A.degree(p) + k - i) * moved)
            out.add((q,) + tail[:i], (p,) + tail[i:], s * v * w.coefficient)
    return out


def hochschild_eps(w: HochschildWord, f: FrobeniusData) -> Fraction:
    _require_hh(f)
    if w.length > 0:
        return Fraction(0)
    return w.coefficient * f.eps.coefficient(w.letters[0], ())


def hochschild_differential(w: HochschildWord, f: FrobeniusData, normalized: bool = True) -> Chain:
    """Bar differential in the chain grading.

    Merging ``a_i a_{i+1}`` carries ``(-1)^{e_i}`` with
    ``e_i = |a_0| + sum_{1<=j<=i} (|a_j| + 1)``; the wrap-around term
    ``a_k a_0`` carries ``(-1)^{(|a_k| + 1) e_{k-1} + 1}``: the Koszul sign
    of moving ``a_k`` to the front, and one more sign so that the counit
    vanishes on boundaries.
    """
    A = f.A
    letters = w.letters
    k = len(letters) - 1
    out = Chain()
    if k == 0:
        return out
    e = [A.degree(letters[0])]
    for j in range(1, k + 1):
        e.append(e[-1] + A.degree(letters[j]) + 1)
    for i in range(k):
        for r, v in _product(f, letters[i], letters[i + 1]).items():
            new = letters[:i] + (r,) + letters[i + 2 :]
            out.add(new, sign(e[i]) * v * w.coefficient)
    last = letters[k]
    wrap = (A.degree(last) + 1) * e[k - 1] + 1
    for r, v in _product(f, last, letters[0]).items():
        out.add((r,) + letters[1:k], sign(wrap) * v * w.coefficient)
    if normalized:
        u = unit_label(f)
        out.terms = {t: v for t, v in out.terms.items() if u not in t[1:]}
    return out


def differential_of_chain(ch: Chain, f: FrobeniusData, normalized: bool = True) -> Chain:
    out = Chain()
    for w in ch.words():
        for t, v in hochschild_differential(w, f, normalized):
            out.add(t, v)
    return out
