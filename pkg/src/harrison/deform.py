"""Gerstenhaber bracket, star products and the obstruction/extension pipeline.

All cochains here take values in the algebra itself.  Sign conventions:

* insertion ``(f o g)(a_1..a_{p+q-1}) = sum_i (-1)^{(i-1)(q-1)} f(a_1.., g(a_i..a_{i+q-1}), ..)``
* bracket ``[f, g] = f o g - (-1)^{(p-1)(q-1)} g o f``

With these, ``[mu, mu] / 2`` is the associator of ``mu`` and the coboundary
satisfies ``df = -[f, mu_0]`` in every arity, equivalently
``[mu_0, f] = (-1)^{p-1} df`` for ``f`` of arity ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Literal, Sequence

from .algebras import StructureAlgebra
from .complexes import (
    Cochain,
    HarrisonWitness,
    basis_tuples,
    coboundary,
    coboundary_columns,
    is_harrison,
    tuple_index,
)
from .exactla import SparseVec, sparse_solve
from .symgrp import act, multi_shuffles, sign

__all__ = [
    "PreconditionError",
    "NotAssociativeError",
    "StarTruncation",
    "ObstructionReport",
    "MaurerCartanOrder",
    "ClosureReport",
    "Coderivation",
    "gerstenhaber_circ",
    "gerstenhaber_bracket",
    "coboundary_sign",
    "lift_coderivation",
    "shuffle_words",
    "harrison_bracket_closure_check",
    "order_associator",
    "obstruction",
    "maurer_cartan_check",
    "extend_deformation",
    "symmetric_cochain_basis",
]

Mode = Literal["commutative", "associative"]

# df = COBOUNDARY_SIGN * [f, mu_0] for every arity
COBOUNDARY_SIGN = -1


class PreconditionError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAssociativeError(PreconditionError):
    def __init__(self, order: int, witness: tuple[int, ...]):
        super().__init__(f"truncation is not associative at order {order}, e.g. on basis triple {witness}", witness)
        self.order = order


def _regular(f: Cochain) -> None:
    if f.module.dim != f.algebra.dim:
        raise ValueError("bracket operations need algebra-valued cochains")


def _axpy(acc: list[Fraction], c: Fraction, v: Sequence[Fraction]) -> None:
    for k, x in enumerate(v):
        if x:
            acc[k] += c * x


# ---------------------------------------------------------------- bracket


def gerstenhaber_circ(f: Cochain, g: Cochain) -> Cochain:
    p, q = f.arity, g.arity
    if p < 1 or q < 1:
        raise ValueError("insertion needs cochains of arity >= 1")
    _regular(f)
    _regular(g)
    a = f.algebra
    d = a.dim
    n = p + q - 1
    rows = []
    for t in basis_tuples(d, n):
        acc = [Fraction(0)] * d
        for i in range(p):
            s = -1 if (i * (q - 1)) % 2 else 1
            inner = g.evaluate(t[i:i + q])
            for k, y in enumerate(inner):
                if y:
                    _axpy(acc, s * y, f.evaluate(t[:i] + (k,) + t[i + q:]))
        rows.append(acc)
    return Cochain.from_vector(a, n, [x for r in rows for x in r], f.module)


def gerstenhaber_bracket(f: Cochain, g: Cochain) -> Cochain:
    p, q = f.arity, g.arity
    if p < 1 or q < 1:
        raise ValueError("the bracket needs cochains of arity >= 1")
    fg = gerstenhaber_circ(f, g)
    gf = gerstenhaber_circ(g, f)
    return fg - gf if ((p - 1) * (q - 1)) % 2 == 0 else fg + gf


def coboundary_sign(f: Cochain) -> int:
    """The sign s with [mu_0, f] = s * df for this arity."""
    return 1 if f.arity % 2 else -1


# ---------------------------------------------------------------- coderivations and shuffles on words

Word = tuple[int, ...]


def shuffle_words(u: Word, v: Word) -> dict[Word, Fraction]:
    """Signed shuffle product of two words of degree-one letters."""
    if not u or not v:
        return {u + v: Fraction(1)}
    out: dict[Word, Fraction] = {}
    for s in multi_shuffles([len(u), len(v)]):
        w = act(s, u + v)
        out[w] = out.get(w, 0) + sign(s)
    return {w: c for w, c in out.items() if c}


def _add_into(target: dict, src: dict, scale) -> None:
    for k, x in src.items():
        y = target.get(k, 0) + scale * x
        if y:
            target[k] = y
        else:
            target.pop(k, None)


@dataclass
class Coderivation:
    """Weight-graded lift of a cochain to tensor words up to ``max_weight``."""

    cochain: Cochain
    max_weight: int
    koszul: bool = False
    maps: dict[int, dict[Word, dict[Word, Fraction]]] = field(default_factory=dict, repr=False)

    def __call__(self, w: Word) -> dict[Word, Fraction]:
        n = len(w)
        if n > self.max_weight:
            raise ValueError(f"word of weight {n} beyond the computed bound {self.max_weight}")
        if n < self.cochain.arity:
            return {}
        return self.maps[n][tuple(w)]

    def apply(self, vec: dict[Word, Fraction]) -> dict[Word, Fraction]:
        out: dict[Word, Fraction] = {}
        for w, c in vec.items():
            _add_into(out, self(w), c)
        return out


def lift_coderivation(f: Cochain, max_weight: int, koszul: bool = False) -> Coderivation:
    """Extend f: A^k -> A to tensor words by summing insertions at every position.

    With ``koszul=True`` the insertion at position i carries (-1)^{(i-1)(k-1)},
    the sign used by the insertion composition.
    """
    k = f.arity
    if k < 1:
        raise ValueError("cannot lift a cochain of arity 0")
    if max_weight < k:
        raise ValueError(f"max_weight {max_weight} below the arity {k}")
    _regular(f)
    d = f.algebra.dim
    maps: dict[int, dict[Word, dict[Word, Fraction]]] = {}
    for n in range(k, max_weight + 1):
        level: dict[Word, dict[Word, Fraction]] = {}
        for w in basis_tuples(d, n):
            out: dict[Word, Fraction] = {}
            for i in range(n - k + 1):
                s = -1 if koszul and (i * (k - 1)) % 2 else 1
                for j, y in enumerate(f.evaluate(w[i:i + k])):
                    if y:
                        _add_into(out, {w[:i] + (j,) + w[i + k:]: y}, s)
            level[w] = out
        maps[n] = level
    return Coderivation(f, max_weight, koszul, maps)


def deconcatenate(w: Word) -> list[tuple[Word, Word]]:
    return [(w[:j], w[j:]) for j in range(len(w) + 1)]


# ---------------------------------------------------------------- Harrison closure


@dataclass
class ClosureReport:
    bracket: Cochain
    bracket_is_harrison: bool
    bracket_witness: HarrisonWitness | None
    lemma_holds: bool
    lemma_witness: tuple[str, Word, Word] | None

    @property
    def ok(self) -> bool:
        return self.bracket_is_harrison and self.lemma_holds


def _lemma_witness(f: Cochain, weight_bound: int) -> tuple[str, Word, Word] | None:
    """Check lift(f)(u . v) == lift(f)(u) . v + (-1)^{(k-1)|u|} u . lift(f)(v) on basis words."""
    k = f.arity
    lift = lift_coderivation(f, max(weight_bound, k), koszul=True)
    d = f.algebra.dim
    for total in range(2, weight_bound + 1):
        for p in range(1, total):
            for u in basis_tuples(d, p):
                for v in basis_tuples(d, total - p):
                    lhs = lift.apply(shuffle_words(u, v))
                    rhs: dict[Word, Fraction] = {}
                    for w, c in lift(u).items():
                        _add_into(rhs, shuffle_words(w, v), c)
                    s = -1 if ((k - 1) * p) % 2 else 1
                    for w, c in lift(v).items():
                        _add_into(rhs, shuffle_words(u, w), s * c)
                    if lhs != rhs:
                        return (f"arity {k}", u, v)
    return None


def harrison_bracket_closure_check(f: Cochain, g: Cochain, weight_bound: int = 4) -> ClosureReport:
    """Bracket of two Harrison cochains, whether it is Harrison, and the shuffle-derivation lemma for f and g."""
    for name, h in (("f", f), ("g", g)):
        ok, witness = is_harrison(h)
        if not ok:
            raise PreconditionError(f"{name} is not a Harrison cochain", witness)
    br = gerstenhaber_bracket(f, g)
    ok, witness = is_harrison(br)
    lemma = _lemma_witness(f, weight_bound) or _lemma_witness(g, weight_bound)
    return ClosureReport(br, ok, witness, lemma is None, lemma)


# ---------------------------------------------------------------- star products


@dataclass(frozen=True, eq=False)
class StarTruncation:
    """mu_0 + lambda mu_1 + ... + lambda^N mu_N, modulo lambda^{N+1}."""

    algebra: StructureAlgebra
    terms: tuple[Cochain, ...]

    def __post_init__(self):
        terms = tuple(self.terms)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("a truncation needs at least mu_0")
        for i, t in enumerate(terms):
            if t.arity != 2 or t.algebra != self.algebra or t.module.dim != self.algebra.dim:
                raise ValueError(f"term mu_{i} is not an algebra-valued 2-cochain on this algebra")
        if terms[0] != Cochain.multiplication(self.algebra):
            raise ValueError("mu_0 must be the algebra multiplication")

    @classmethod
    def trivial(cls, algebra: StructureAlgebra, order: int = 0) -> StarTruncation:
        zero = Cochain.zero(algebra, 2)
        return cls(algebra, (Cochain.multiplication(algebra),) + (zero,) * order)

    @property
    def order(self) -> int:
        return len(self.terms) - 1

    def extended(self, term: Cochain) -> StarTruncation:
        return StarTruncation(self.algebra, self.terms + (term,))

    def all_symmetric(self, upto: int | None = None) -> bool:
        upto = self.order if upto is None else upto
        return all(t.is_symmetric() for t in self.terms[1:upto + 1])


def _associator_sum(terms: Sequence[Cochain], pairs: Sequence[tuple[int, int]]) -> Cochain:
    """sum over (k, j) of mu_k(mu_j(a, b), c) - mu_k(a, mu_j(b, c))."""
    a = terms[0].algebra
    d = a.dim
    rows = []
    for t in basis_tuples(d, 3):
        x, y, z = t
        acc = [Fraction(0)] * d
        for k, j in pairs:
            outer, inner = terms[k], terms[j]
            for l, c in enumerate(inner(x, y)):
                if c:
                    _axpy(acc, c, outer(l, z))
            for l, c in enumerate(inner(y, z)):
                if c:
                    _axpy(acc, -c, outer(x, l))
        rows.append(acc)
    return Cochain.from_vector(a, 3, [v for r in rows for v in r])


def order_associator(s: StarTruncation, n: int) -> Cochain:
    """A_n = sum_{k=0}^{n} mu_k(mu_{n-k}(f, g), h) - mu_k(f, mu_{n-k}(g, h))."""
    if n > s.order or n < 0:
        raise ValueError(f"order {n} outside 0..{s.order}")
    return _associator_sum(s.terms, [(k, n - k) for k in range(n + 1)])


def _first_nonzero(f: Cochain) -> tuple[int, ...] | None:
    entries = f.nonzero_entries()
    return entries[0][0] if entries else None


def symmetric_cochain_basis(a: StructureAlgebra) -> list[SparseVec]:
    """Basis of symmetric 2-cochains, ordered by (i <= j, k) lexicographically."""
    d = a.dim
    out = []
    for i, j in product(range(d), repeat=2):
        if i > j:
            continue
        for k in range(d):
            v = {tuple_index((i, j), d) * d + k: Fraction(1)}
            v[tuple_index((j, i), d) * d + k] = Fraction(1)
            out.append(v)
    return out


@dataclass
class ObstructionReport:
    order: int
    cochain: Cochain
    is_cocycle: bool
    is_harrison: bool
    mode: str
    extension: Cochain | None = None

    @property
    def cohomology_class_nonzero(self) -> bool:
        return self.extension is None


def _solve_coboundary(target: Cochain, mode: Mode) -> Cochain | None:
    """A 2-cochain mu with d mu = target (symmetric in commutative mode), or None."""
    a = target.algebra
    m = target.module
    delta = coboundary_columns(a, m, 2)
    if mode == "commutative":
        basis = symmetric_cochain_basis(a)
    else:
        basis = [{i: Fraction(1)} for i in range(a.dim**2 * a.dim)]
    cols = []
    for v in basis:
        img: SparseVec = {}
        for j, x in v.items():
            _add_into(img, delta[j], x)
        cols.append(img)
    size = a.dim**3 * a.dim
    rows: list[SparseVec] = [{} for _ in range(size)]
    for j, col in enumerate(cols):
        for i, x in col.items():
            rows[i][j] = x
    coords = sparse_solve(rows, len(basis), list(target.vector))
    if coords is None:
        return None
    vec: SparseVec = {}
    for j, x in coords.items():
        _add_into(vec, basis[j], x)
    return Cochain.from_vector(a, 2, vec)


def _check_associative(s: StarTruncation, upto: int) -> None:
    for n in range(upto + 1):
        w = _first_nonzero(order_associator(s, n))
        if w is not None:
            raise NotAssociativeError(n, w)


def obstruction(s: StarTruncation, r: int, mode: Mode = "commutative") -> ObstructionReport:
    """Obstruction to extending an order-r associative truncation to order r+1.

    Computes A'_{r+1} = sum_{k=1}^{r} mu_k(mu_{r+1-k}(.,.),.) - mu_k(., mu_{r+1-k}(.,.))
    and tries to solve d mu_{r+1} = A'_{r+1}.
    """
    if mode not in ("commutative", "associative"):
        raise ValueError(f"unknown mode {mode!r}")
    if r < 0 or r > s.order:
        raise ValueError(f"order {r} outside 0..{s.order}")
    _check_associative(s, r)
    a = s.algebra
    if r == 0:
        reduced = Cochain.zero(a, 3)
    else:
        reduced = _associator_sum(s.terms, [(k, r + 1 - k) for k in range(1, r + 1)])
    cocycle = coboundary(reduced).is_zero()
    harrison, _ = is_harrison(reduced)
    extension = _solve_coboundary(reduced, mode)
    return ObstructionReport(r + 1, reduced, cocycle, harrison, mode, extension)


@dataclass
class MaurerCartanOrder:
    order: int
    component: Cochain
    vanishes: bool
    associator_vanishes: bool

    @property
    def consistent(self) -> bool:
        return self.vanishes == self.associator_vanishes


def maurer_cartan_check(s: StarTruncation) -> list[MaurerCartanOrder]:
    """Order-by-order components of [mu_0 + mu_*, mu_0 + mu_*] / 2 through lambda^N."""
    out = []
    for n in range(s.order + 1):
        comp = Cochain.zero(s.algebra, 3)
        for k in range(n + 1):
            comp = comp + gerstenhaber_bracket(s.terms[k], s.terms[n - k])
        comp = comp.scale(Fraction(1, 2))
        out.append(MaurerCartanOrder(n, comp, comp.is_zero(), order_associator(s, n).is_zero()))
    return out


def extend_deformation(
    a: StructureAlgebra, seed: Cochain, target_order: int, mode: Mode = "commutative"
) -> StarTruncation | ObstructionReport:
    """Extend mu_0 + lambda*seed order by order up to ``target_order``.

    Returns the truncation, or the report of the first order whose obstruction
    class does not vanish.
    """
    if target_order < 1:
        raise ValueError("target order must be >= 1")
    if seed.arity != 2 or seed.algebra != a:
        raise PreconditionError("seed must be a 2-cochain on the given algebra")
    dseed = coboundary(seed)
    w = _first_nonzero(dseed)
    if w is not None:
        raise PreconditionError(f"seed is not a cocycle: d(seed) is nonzero on {w}", w)
    if mode == "commutative":
        ok, witness = is_harrison(seed)
        if not ok:
            raise PreconditionError("seed is not symmetric", witness)
    s = StarTruncation(a, (Cochain.multiplication(a), seed))
    for r in range(1, target_order):
        report = obstruction(s, r, mode)
        if report.extension is None:
            return report
        s = s.extended(report.extension)
    return s
