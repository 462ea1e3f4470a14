"""Graded Frobenius algebras of bidegree ``(c, d)``.

A candidate is a tuple ``(A, mu, eta, nu, eps)`` with ``|mu| = c``,
``|eta| = -c``, ``|nu| = d`` and ``|eps| = -d``.  The signed relations
checked here are

* ``mu(mu x 1) = (-1)^c mu(1 x mu)``
* ``(-1)^c mu(eta x 1) = (-1)^{c(c-1)/2} 1 = mu(1 x eta)``
* ``(1 x nu) nu = (-1)^d (nu x 1) nu``
* ``(-1)^d (1 x eps) nu = (-1)^{d(d-1)/2} 1 = (eps x 1) nu``
* ``(mu x 1)(1 x nu) = (-1)^{cd} nu mu = (1 x mu)(nu x 1)``

together with ``mu tau = (-1)^c mu`` (commutative flavor) or
``eps mu tau = (-1)^c eps mu`` (symmetric flavor).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .grmod import (
    GradedMap,
    GradedModule,
    GradingMismatch,
    identity,
    invert_matrix,
    kernel_basis,
    map_from_json,
    map_to_json,
    module_from_json,
    module_to_json,
    scale,
    sign,
    suspend_map,
    tensor_map,
    tensor_module,
    tensor_power,
    twist,
)

FLAVORS = ("planar", "symmetric", "commutative")


class DegeneratePairing(ValueError):
    """The pairing ``eps mu`` has a kernel; ``witness`` is a kernel vector."""

    def __init__(self, msg: str, witness: Mapping[str, Fraction]):
        super().__init__(msg)
        self.witness = dict(witness)


class RelationFailure(ValueError):
    def __init__(self, msg: str, report: "CheckReport"):
        super().__init__(msg)
        self.report = report


def tri(n: int) -> int:
    """``n(n+1)/2``, defined for negative ``n`` as well."""
    return n * (n + 1) // 2


def _flavor(name: str) -> str:
    f = name.lower()
    if f not in FLAVORS:
        raise ValueError(f"unknown flavor {name!r}; expected one of {FLAVORS}")
    return f


@dataclass(frozen=True)
class FrobeniusData:
    A: GradedModule
    mu: GradedMap
    eta: GradedMap
    nu: GradedMap
    eps: GradedMap
    c: int
    d: int
    flavor: str = "commutative"

    def __post_init__(self):
        object.__setattr__(self, "flavor", _flavor(self.flavor))
        self.validate_shapes()

    def validate_shapes(self) -> None:
        A, one = self.A, GradedModule.unit()
        AA = tensor_module(A, A)
        want = {
            "mu": (AA, A, self.c),
            "eta": (one, A, -self.c),
            "nu": (A, AA, self.d),
            "eps": (A, one, -self.d),
        }
        for name, (src, tgt, deg) in want.items():
            f = getattr(self, name)
            if f.source != src or f.target != tgt:
                raise GradingMismatch(f"{name} has the wrong source or target")
            if f.degree != deg:
                raise GradingMismatch(f"{name} has degree {f.degree}, expected {deg}")

    @property
    def pairing(self) -> GradedMap:
        return self.eps @ self.mu

    @property
    def copairing(self) -> GradedMap:
        return self.nu @ self.eta

    def with_(self, **kw) -> "FrobeniusData":
        vals = {k: getattr(self, k) for k in ("A", "mu", "eta", "nu", "eps", "c", "d", "flavor")}
        vals.update(kw)
        return FrobeniusData(**vals)

    def to_json(self) -> dict:
        return {
            "module": module_to_json(self.A),
            "mu": map_to_json(self.mu),
            "eta": map_to_json(self.eta),
            "nu": map_to_json(self.nu),
            "eps": map_to_json(self.eps),
            "c": self.c,
            "d": self.d,
            "flavor": self.flavor,
        }


def algebra_from_json(obj: Mapping) -> FrobeniusData:
    return FrobeniusData(
        module_from_json(obj["module"]),
        map_from_json(obj["mu"]),
        map_from_json(obj["eta"]),
        map_from_json(obj["nu"]),
        map_from_json(obj["eps"]),
        int(obj["c"]),
        int(obj["d"]),
        obj.get("flavor", "commutative"),
    )


def load_algebra(path) -> FrobeniusData:
    with open(path) as fh:
        return algebra_from_json(json.load(fh))


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: object = None
    detail: str = ""

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if not self.ok:
            out["witness"] = _witness_json(self.witness)
            out["detail"] = self.detail
        return out


def _witness_json(w):
    if isinstance(w, tuple):
        return list(w)
    return w


@dataclass(frozen=True)
class CheckReport:
    verdicts: Mapping[str, Verdict]
    snake: Verdict | None = None

    @property
    def ok(self) -> bool:
        return all(v.ok for v in self.verdicts.values()) and (self.snake is None or self.snake.ok)

    @property
    def failures(self) -> list[str]:
        out = [k for k, v in self.verdicts.items() if not v.ok]
        if self.snake is not None and not self.snake.ok:
            out.append("snake")
        return out

    def __getitem__(self, key: str) -> Verdict:
        if key == "snake" and self.snake is not None:
            return self.snake
        return self.verdicts[key]

    def to_json(self) -> dict:
        out = {"ok": self.ok, "relations": {k: v.to_json() for k, v in self.verdicts.items()}}
        if self.snake is not None:
            out["snake"] = self.snake.to_json()
        return out

    def to_text(self) -> str:
        rows = list(self.verdicts.items())
        if self.snake is not None:
            rows.append(("snake", self.snake))
        width = max((len(k) for k, _ in rows), default=0)
        lines = []
        for k, v in rows:
            if v.ok:
                lines.append(f"{k:<{width}}  ok")
            else:
                lines.append(f"{k:<{width}}  FAIL at {v.witness!r}: {v.detail}")
        lines.append("all relations hold" if self.ok else "failed: " + ", ".join(self.failures))
        return "\n".join(lines)


def compare_maps(lhs: GradedMap, rhs: GradedMap, detail: str = "") -> Verdict:
    """Exact equality, with the first differing source basis element as witness."""
    if lhs.source != rhs.source or lhs.target != rhs.target or lhs.degree != rhs.degree:
        return Verdict(False, None, f"shape mismatch {detail}".strip())
    for a in lhs.source.basis:
        if dict(lhs.column(a)) != dict(rhs.column(a)):
            return Verdict(False, a, detail)
    return Verdict(True)


def _both(name: str, left: GradedMap, mid: GradedMap, right: GradedMap) -> dict[str, Verdict]:
    return {
        f"{name}_left": compare_maps(left, mid, f"{name}: left side differs"),
        f"{name}_right": compare_maps(mid, right, f"{name}: right side differs"),
    }


# ---------------------------------------------------------------------------
# the checker


def relation_maps(f: FrobeniusData) -> dict[str, tuple[GradedMap, GradedMap]]:
    """Each relation as a pair ``(lhs, rhs)`` of maps that must agree."""
    A, c, d = f.A, f.c, f.d
    one = identity(A)
    mu, eta, nu, eps = f.mu, f.eta, f.nu, f.eps
    T = twist(A, A)
    id_ = identity(A)
    out = {
        "associativity": (mu @ tensor_map(mu, one), scale(mu @ tensor_map(one, mu), sign(c))),
        "unit_left": (scale(mu @ tensor_map(eta, one), sign(c)), scale(id_, sign(c * (c - 1) // 2))),
        "unit_right": (scale(id_, sign(c * (c - 1) // 2)), mu @ tensor_map(one, eta)),
        "coassociativity": (tensor_map(one, nu) @ nu, scale(tensor_map(nu, one) @ nu, sign(d))),
        "counit_left": (scale(tensor_map(one, eps) @ nu, sign(d)), scale(id_, sign(d * (d - 1) // 2))),
        "counit_right": (scale(id_, sign(d * (d - 1) // 2)), tensor_map(eps, one) @ nu),
        "frobenius_left": (tensor_map(mu, one) @ tensor_map(one, nu), scale(nu @ mu, sign(c * d))),
        "frobenius_right": (scale(nu @ mu, sign(c * d)), tensor_map(one, mu) @ tensor_map(nu, one)),
    }
    if f.flavor == "commutative":
        out["commutativity"] = (mu @ T, scale(mu, sign(c)))
    if f.flavor in ("commutative", "symmetric"):
        out["symmetry"] = (eps @ mu @ T, scale(eps @ mu, sign(c)))
    return out


def check_relations(f: FrobeniusData, snake: bool = False) -> CheckReport:
    verdicts = {
        name: compare_maps(lhs, rhs, name) for name, (lhs, rhs) in relation_maps(f).items()
    }
    return CheckReport(verdicts, check_snake(f) if snake else None)


def snake_maps(f: FrobeniusData) -> tuple[GradedMap, GradedMap]:
    """``(p x 1)(1 x q)`` and ``(1 x p)(q x 1)`` with ``p = eps mu``, ``q = nu eta``."""
    one = identity(f.A)
    p, q = f.pairing, f.copairing
    return tensor_map(p, one) @ tensor_map(one, q), tensor_map(one, p) @ tensor_map(q, one)


def snake_signs(c: int, d: int) -> tuple[int, int]:
    """Signs ``s1, s2`` with ``(p x 1)(1 x q) = s1 id`` and ``(1 x p)(q x 1) = s2 id``.

    These are the values forced by the signed relations; both are
    ``+1`` when ``c = d = 0``.
    """
    s2 = sign(c * d + tri(c) + tri(d))
    s1 = s2 * sign(c + d)
    return s1, s2


def check_snake(f: FrobeniusData) -> Verdict:
    """Zig-zag identities for the pairing and copairing.

    With signs, the composites are multiples ``s1 id`` and ``s2 id``
    of the identity (see :func:`snake_signs`); the check requires
    exactly those multiples.
    """
    left, right = snake_maps(f)
    s1, s2 = snake_signs(f.c, f.d)
    idA = identity(f.A)
    a = compare_maps(left, scale(idA, s1), "(p x 1)(1 x q)")
    if not a.ok:
        return a
    return compare_maps(right, scale(idA, s2), "(1 x p)(q x 1)")


# ---------------------------------------------------------------------------
# unsigned (classical) relations


UNSIGNED_RELATIONS = (
    "associativity",
    "unit_left",
    "unit_right",
    "coassociativity",
    "counit_left",
    "counit_right",
    "frobenius_left",
    "frobenius_right",
)


def unsigned_relation_maps(f: FrobeniusData) -> dict[str, tuple[GradedMap, GradedMap]]:
    return {n: _unsigned_relation(f, n) for n in UNSIGNED_RELATIONS}


def check_unsigned(f: FrobeniusData, names: Sequence[str] | None = None) -> CheckReport:
    """Classical (sign-free) relations; ``names`` restricts to a subset, checked lazily."""
    if names is None:
        pairs = unsigned_relation_maps(f)
        return CheckReport({n: compare_maps(l, r, n) for n, (l, r) in pairs.items()})
    out: dict = {}
    for n in names:
        l, r = _unsigned_relation(f, n)
        out[n] = compare_maps(l, r, n)
        if not out[n].ok:
            break
    return CheckReport(out)


def _unsigned_relation(f: FrobeniusData, name: str) -> tuple[GradedMap, GradedMap]:
    one = identity(f.A)
    mu, eta, nu, eps = f.mu, f.eta, f.nu, f.eps
    table = {
        "associativity": lambda: (mu @ tensor_map(mu, one), mu @ tensor_map(one, mu)),
        "unit_left": lambda: (mu @ tensor_map(eta, one), one),
        "unit_right": lambda: (one, mu @ tensor_map(one, eta)),
        "coassociativity": lambda: (tensor_map(one, nu) @ nu, tensor_map(nu, one) @ nu),
        "counit_left": lambda: (tensor_map(one, eps) @ nu, one),
        "counit_right": lambda: (one, tensor_map(eps, one) @ nu),
        "frobenius_left": lambda: (tensor_map(mu, one) @ tensor_map(one, nu), nu @ mu),
        "frobenius_right": lambda: (nu @ mu, tensor_map(one, mu) @ tensor_map(nu, one)),
    }
    if name not in table:
        raise KeyError(f"unknown relation {name!r}")
    return table[name]()


# ---------------------------------------------------------------------------
# builtin algebras


def unit_algebra(flavor: str = "commutative") -> FrobeniusData:
    """The line in degree 0 with its trivial Frobenius structure at ``(0, 0)``."""
    A = GradedModule.from_dict({0: ["x"]})
    one = GradedModule.unit()
    AA = tensor_module(A, A)
    return FrobeniusData(
        A,
        GradedMap(AA, A, 0, {("x", "x"): {"x": 1}}),
        GradedMap(one, A, 0, {(): {"x": 1}}),
        GradedMap(A, AA, 0, {"x": {("x", "x"): 1}}),
        GradedMap(A, one, 0, {"x": {(): 1}}),
        0,
        0,
        flavor,
    )


def builtin_Rcd(c: int, d: int, flavor: str = "commutative") -> FrobeniusData:
    if c + d == 0:
        f = unit_algebra(flavor)
        for _ in range(abs(d)):
            f = suspend_algebra(f) if d > 0 else desuspend_algebra(f)
        return f
    A = GradedModule.from_dict({-c: ["x"], d: ["y"]})
    one = GradedModule.unit()
    AA = tensor_module(A, A)
    mu = GradedMap(
        AA,
        A,
        c,
        {
            ("x", "y"): {"y": sign(tri(c))},
            ("y", "x"): {"y": sign(c * d + c * (c - 1) // 2)},
            ("x", "x"): {"x": sign(tri(c))},
        },
    )
    nu = GradedMap(
        A,
        AA,
        d,
        {
            "x": {("x", "y"): sign(c * d + tri(d)), ("y", "x"): sign(d * (d - 1) // 2)},
            "y": {("y", "y"): sign(d * (d - 1) // 2)},
        },
    )
    eta = GradedMap(one, A, -c, {(): {"x": 1}})
    eps = GradedMap(A, one, -d, {"y": {(): 1}})
    return FrobeniusData(A, mu, eta, nu, eps, c, d, flavor)


# ---------------------------------------------------------------------------
# constructors


def require(f: FrobeniusData, what: str = "input") -> None:
    rep = check_relations(f)
    if not rep.ok:
        raise RelationFailure(f"{what} fails: {', '.join(rep.failures)}", rep)


def _unsuspend_map(f: GradedMap, base: GradedModule, k: int, l: int) -> GradedMap:
    # the exact inverse of suspend_map: its signs are an involution on entries
    low = base.shift(-1)
    raw = GradedMap(
        tensor_power(low, k), tensor_power(low, l), f.degree - (l - k), f.entries
    )
    signed = suspend_map(raw, low, k, l)
    return GradedMap(raw.source, raw.target, raw.degree, signed.entries)


def _shift_algebra(f: FrobeniusData, up: bool) -> FrobeniusData:
    op = suspend_map if up else _unsuspend_map
    A = f.A
    step = 1 if up else -1
    return FrobeniusData(
        A.shift(step),
        op(f.mu, A, 2, 1),
        op(f.eta, A, 0, 1),
        op(f.nu, A, 1, 2),
        op(f.eps, A, 1, 0),
        f.c - step,
        f.d + step,
        f.flavor,
    )


def suspend_algebra(f: FrobeniusData, check: bool = False) -> FrobeniusData:
    """``(sA, s mu, s eta, s nu, s eps)`` at bidegree ``(c - 1, d + 1)``."""
    if check:
        require(f)
    return _shift_algebra(f, True)


def desuspend_algebra(f: FrobeniusData, check: bool = False) -> FrobeniusData:
    if check:
        require(f)
    return _shift_algebra(f, False)


def relabel_map(f: GradedMap, source: GradedModule, target: GradedModule, src_of, tgt_of) -> GradedMap:
    return GradedMap(
        source,
        target,
        f.degree,
        {src_of(a): {tgt_of(b): v for b, v in col.items()} for a, col in f.entries.items()},
    )


def _flat(a: str, b: str) -> str:
    return f"{a}|{b}"


def tensor_algebras(f1: FrobeniusData, f2: FrobeniusData, check: bool = False) -> FrobeniusData:
    """Structure on ``A (x) B`` with basis labels ``"a|b"``.

    ``mu = (mu_A x mu_B)(1 x tau x 1)`` and ``nu = (1 x tau x 1)(nu_A x nu_B)``;
    the unit and counit are tensor products.
    """
    if check:
        require(f1, "first factor")
        require(f2, "second factor")
    A, B = f1.A, f2.A
    AB2 = tensor_module(A, B)
    spec: dict[int, list[str]] = {}
    for deg, labels in AB2.components:
        spec[deg] = [_flat(a, b) for a, b in labels]
    C = GradedModule.from_dict(spec)
    one = GradedModule.unit()
    idA, idB = identity(A), identity(B)

    def flat(lab):
        return _flat(lab[0], lab[1])

    def flat2(lab):
        return (_flat(lab[0], lab[1]), _flat(lab[2], lab[3]))

    mid = tensor_map(tensor_map(idA, twist(B, A)), idB)
    mu4 = tensor_map(f1.mu, f2.mu) @ mid
    nu4 = tensor_map(tensor_map(idA, twist(A, B)), idB) @ tensor_map(f1.nu, f2.nu)
    CC = tensor_module(C, C)
    mu = relabel_map(mu4, CC, C, flat2, flat)
    nu = relabel_map(nu4, C, CC, flat, flat2)
    eta = relabel_map(tensor_map(f1.eta, f2.eta), one, C, lambda a: (), flat)
    eps = relabel_map(tensor_map(f1.eps, f2.eps), C, one, flat, lambda b: ())
    flavor = _weaker(f1.flavor, f2.flavor)
    return FrobeniusData(C, mu, eta, nu, eps, f1.c + f2.c, f1.d + f2.d, flavor)


def _weaker(a: str, b: str) -> str:
    return FLAVORS[min(FLAVORS.index(a), FLAVORS.index(b))]


def one_sided_extend(f: FrobeniusData, check: bool = False) -> FrobeniusData:
    """Tensor with ``R_{0,1}``: bidegree ``(c, d + 1)``, underlying ``A + sA``."""
    return tensor_algebras(f, builtin_Rcd(0, 1), check=check)


# ---------------------------------------------------------------------------
# comultiplication from a pairing


def pairing_matrix(A: GradedModule, p: GradedMap) -> list[list[Fraction]]:
    basis = A.basis
    return [[p.coefficient((a, b), ()) for b in basis] for a in basis]


def copairing_from_pairing(A: GradedModule, p: GradedMap) -> GradedMap:
    """The ``q`` with ``(1 x p)(q x 1) = id``.

    Writing ``q(1) = sum Q_ij b_i (x) b_j``, the identity reads
    ``Q' P = 1`` with ``Q'_ij = (-1)^{|p||b_i|} Q_ij``.
    """
    basis = A.basis
    P = pairing_matrix(A, p)
    n = len(basis)
    if n and _rank(P) < n:
        ker = kernel_basis([list(row) for row in zip(*P)], n)
        witness = {basis[i]: v for i, v in enumerate(ker[0]) if v}
        raise DegeneratePairing("the pairing eps mu is degenerate", witness)
    Qp = invert_matrix(P) if n else []
    AA = tensor_module(A, A)
    col = {}
    for i, bi in enumerate(basis):
        for j, bj in enumerate(basis):
            v = Qp[i][j]
            if v:
                col[(bi, bj)] = v * sign(p.degree * A.degree(bi))
    return GradedMap(GradedModule.unit(), AA, -p.degree, {(): col})


def _rank(rows) -> int:
    from .grmod import matrix_rank

    return matrix_rank(rows)


def from_pairing(
    A: GradedModule,
    mu: GradedMap,
    eta: GradedMap,
    eps: GradedMap,
    c: int | None = None,
    d: int | None = None,
    flavor: str = "commutative",
    check: bool = True,
) -> FrobeniusData:
    """Complete ``(A, mu, eta, eps)`` to a Frobenius algebra.

    ``nu = (-1)^{d(d+1)/2} (1 x mu)(q x 1)`` where ``q`` inverts the
    pairing ``eps mu``.  Raises :class:`DegeneratePairing` when no such
    ``q`` exists and :class:`RelationFailure` when ``mu`` is not
    associative and unital in the signed sense.
    """
    c = mu.degree if c is None else c
    d = -eps.degree if d is None else d
    if check:
        probe = FrobeniusData(
            A, mu, eta, GradedMap.zero(A, tensor_module(A, A), d), eps, c, d, "planar"
        )
        rels = relation_maps(probe)
        bad = [
            k
            for k in ("associativity", "unit_left", "unit_right")
            if not compare_maps(*rels[k]).ok
        ]
        if bad:
            raise RelationFailure(f"precondition fails: {', '.join(bad)}", check_relations(probe))
    q = copairing_from_pairing(A, eps @ mu)
    one = identity(A)
    nu = scale(tensor_map(one, mu) @ tensor_map(q, one), sign(tri(d)))
    return FrobeniusData(A, mu, eta, nu, eps, c, d, flavor)


# ---------------------------------------------------------------------------
# the other sign convention


def convert_convention(f: FrobeniusData, direction: str = "to_biunital", check: bool = True) -> FrobeniusData:
    """Rescale ``mu`` by ``(-1)^{c(c+1)/2}`` and ``nu`` by ``(-1)^{d(d+1)/2}``.

    ``direction`` is ``"to_biunital"`` (from the relations above) or
    ``"from_biunital"``; the rescaling is an involution.  The biunital
    convention has ``mu(eta x 1) = 1 = (-1)^c mu(1 x eta)`` and
    ``(1 x eps) nu = 1 = (-1)^d (eps x 1) nu``.
    """
    if direction not in ("to_biunital", "from_biunital"):
        raise ValueError("direction must be 'to_biunital' or 'from_biunital'")
    if check:
        rep = check_relations(f) if direction == "to_biunital" else check_biunital(f)
        if not rep.ok:
            raise RelationFailure(f"source relations fail: {', '.join(rep.failures)}", rep)
    return f.with_(mu=scale(f.mu, sign(tri(f.c))), nu=scale(f.nu, sign(tri(f.d))))


def check_biunital(f: FrobeniusData) -> CheckReport:
    A, c, d = f.A, f.c, f.d
    one = identity(A)
    mu, eta, nu, eps = f.mu, f.eta, f.nu, f.eps
    rels = {
        "unit_left": (mu @ tensor_map(eta, one), one),
        "unit_right": (one, scale(mu @ tensor_map(one, eta), sign(c))),
        "counit_left": (tensor_map(one, eps) @ nu, one),
        "counit_right": (one, scale(tensor_map(eps, one) @ nu, sign(d))),
    }
    return CheckReport({n: compare_maps(l, r, n) for n, (l, r) in rels.items()})


# ---------------------------------------------------------------------------
# the triviality probe


@dataclass(frozen=True)
class ProbeReport:
    c: int
    d: int
    max_rank: int
    ranks_found: tuple[int, ...]
    argument: str
    brute_force_rank1: int = 0
    details: list = field(default_factory=list)

    @property
    def only_zero(self) -> bool:
        return self.ranks_found == (0,)

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "d": self.d,
            "max_rank": self.max_rank,
            "ranks_found": list(self.ranks_found),
            "only_zero": self.only_zero,
            "argument": self.argument,
            "rank1_solutions": self.brute_force_rank1,
        }


def _rank1_candidates(c: int, d: int, values: Iterable[int] = (-1, 0, 1), window: int = 4):
    """All rank-1 candidates ``A = line in degree k`` with constants in ``values``."""
    one = GradedModule.unit()
    for k in range(-window, window + 1):
        A = GradedModule.from_dict({k: ["a"]})
        AA = tensor_module(A, A)
        ok_mu = 2 * k + c == k
        ok_eta = -c == k
        ok_nu = k + d == 2 * k
        ok_eps = k - d == 0
        for m, e, n, u in itertools.product(values, repeat=4):
            if (m and not ok_mu) or (e and not ok_eta) or (n and not ok_nu) or (u and not ok_eps):
                continue
            yield FrobeniusData(
                A,
                GradedMap(AA, A, c, {("a", "a"): {"a": m}} if m else {}),
                GradedMap(one, A, -c, {(): {"a": e}} if e else {}),
                GradedMap(A, AA, d, {"a": {("a", "a"): n}} if n else {}),
                GradedMap(A, one, -d, {"a": {(): u}} if u else {}),
                c,
                d,
                "planar",
            )


def triviality_probe(c: int, d: int, max_rank: int = 3) -> ProbeReport:
    """Show that unsigned Frobenius structures with ``c - d`` odd vanish.

    Argument: unitality and counitality give a copairing
    ``q = nu eta`` and pairing ``p = eps mu`` satisfying the zig-zag
    identities.  Pick ``alpha`` in ``A`` nonzero with dual ``beta``
    under ``p``.  Evaluating ``p(beta x alpha)`` through the two
    zig-zags (which differ by moving ``q`` past ``alpha`` with
    ``n = |mu| - |nu|`` odd) gives ``(-1)^{n|alpha|}`` and
    ``(-1)^{n + n|alpha|}``, which is impossible unless ``A = 0``.
    The rank-1 case is also solved by exhaustion as a cross-check.
    """
    n = c - d
    if n % 2 == 0:
        raise ValueError("the probe applies when c - d is odd")
    argument = (
        f"n = {n} is odd: p(b (x) a) = (-1)^(n|a|) and (-1)^(n + n|a|) for any "
        "nonzero basis element a, contradiction; hence every candidate is the zero module"
    )
    sols = 0
    for f in _rank1_candidates(c, d):
        if check_unsigned(f).ok:
            sols += 1
    found = (0,) if sols == 0 else (0, 1)
    return ProbeReport(c, d, max_rank, found, argument, sols)
