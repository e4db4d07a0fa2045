"""Hochschild and Harrison (co)chains, (co)boundaries and (co)homology.

Chains of degree ``n`` live in ``A (x) A^{(x)n}`` and are stored sparsely as
``{basis index tuple of length n+1: coefficient}``.  Cochains of arity ``n``
with values in a module ``M`` are dense matrices with one row per basis
``n``-tuple (lexicographic order) and one column per basis vector of ``M``.

Harrison cochains are handled in both presentations: cochains vanishing on
all shuffle products, and cochains fixed by precomposition with the first
eulerian idempotent.  Harrison chains are likewise the quotient by the span
of shuffle products or the image of the first eulerian idempotent.
Degree 0 is treated as fixed by the idempotent (the weight-zero part of a
chain is its coefficient in ``A``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Literal, Sequence

from .algebras import StructureAlgebra, SymmetricModule
from .exactla import Echelon, Matrix, SparseVec, sparse_kernel, sparse_subspace_dims
from .symgrp import GroupAlgebraElement, act, eulerian_idempotent, multi_shuffles, sign

__all__ = [
    "Chain",
    "Cochain",
    "CohomologyReport",
    "HomologyReport",
    "BarrReport",
    "ResourceCapError",
    "DEFAULT_CAP",
    "chain_boundary",
    "shuffle_product_chains",
    "coboundary",
    "coboundary_columns",
    "harrison_project",
    "is_harrison",
    "harrison_cochain_basis",
    "cohomology",
    "homology",
    "barr_decomposition_check",
]

DEFAULT_CAP = 4096

Variant = Literal["hochschild", "harrison"]


class ResourceCapError(RuntimeError):
    """A chain or cochain space would exceed the configured size limit."""


def _check_cap(dim: int, n: int, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if dim**n > cap:
        raise ResourceCapError(f"space of {dim}^{n} = {dim ** n} basis tuples exceeds cap {cap}")


@lru_cache(maxsize=None)
def basis_tuples(dim: int, n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(product(range(dim), repeat=n))


def tuple_index(t: Sequence[int], dim: int) -> int:
    i = 0
    for x in t:
        i = i * dim + x
    return i


def _add(target: dict, key, value) -> None:
    v = target.get(key, 0) + value
    if v:
        target[key] = v
    else:
        target.pop(key, None)


# ---------------------------------------------------------------- chains


@dataclass(frozen=True, eq=False)
class Chain:
    algebra: StructureAlgebra
    degree: int
    coefficients: dict[tuple[int, ...], Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for t, c in self.coefficients.items():
            t = tuple(t)
            if len(t) != self.degree + 1:
                raise ValueError(f"degree-{self.degree} chain needs tuples of length {self.degree + 1}, got {t}")
            _add(clean, t, Fraction(c))
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def basis(cls, algebra: StructureAlgebra, t: Sequence[int]) -> Chain:
        return cls(algebra, len(t) - 1, {tuple(t): Fraction(1)})

    @classmethod
    def from_names(cls, algebra: StructureAlgebra, *names: str) -> Chain:
        return cls.basis(algebra, [algebra.index(n) for n in names])

    def __eq__(self, other):
        if not isinstance(other, Chain):
            return NotImplemented
        return self.degree == other.degree and self.coefficients == other.coefficients

    def __add__(self, other: Chain) -> Chain:
        if self.degree != other.degree:
            raise ValueError("cannot add chains of different degrees")
        out = dict(self.coefficients)
        for t, c in other.coefficients.items():
            _add(out, t, c)
        return Chain(self.algebra, self.degree, out)

    def scale(self, c) -> Chain:
        c = Fraction(c)
        return Chain(self.algebra, self.degree, {t: c * x for t, x in self.coefficients.items()})

    def __neg__(self) -> Chain:
        return self.scale(-1)

    def __sub__(self, other: Chain) -> Chain:
        return self + (-other)

    def __rmul__(self, c) -> Chain:
        return self.scale(c)

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def to_sparse(self) -> SparseVec:
        d = self.algebra.dim
        return {tuple_index(t, d): c for t, c in self.coefficients.items()}

    def act(self, e: GroupAlgebraElement) -> Chain:
        """Let a group algebra element of degree n act on the last n slots."""
        if e.n != self.degree:
            raise ValueError(f"element of degree {e.n} on a degree-{self.degree} chain")
        out: dict = {}
        for t, c in self.coefficients.items():
            for s, x in e.act_on(t[1:]).items():
                _add(out, (t[0],) + s, c * x)
        return Chain(self.algebra, self.degree, out)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        names = self.algebra.basis_names
        return " + ".join(
            f"{c}*({', '.join(names[i] for i in t)})" for t, c in sorted(self.coefficients.items())
        )


def _product_terms(a: StructureAlgebra, i: int, j: int) -> Iterable[tuple[int, Fraction]]:
    return ((k, c) for k, c in enumerate(a.structure[i][j]) if c)


def chain_boundary(c: Chain) -> Chain:
    """Hochschild boundary, including the cyclic term (a_n a_0, a_1, ..., a_{n-1})."""
    n = c.degree
    if n < 1:
        raise ValueError("the boundary is defined on chains of degree >= 1")
    a = c.algebra
    out: dict = {}
    for t, x in c.coefficients.items():
        for i in range(n):
            s = (-1) ** i
            for k, y in _product_terms(a, t[i], t[i + 1]):
                _add(out, t[:i] + (k,) + t[i + 2:], s * x * y)
        s = (-1) ** n
        for k, y in _product_terms(a, t[n], t[0]):
            _add(out, (k,) + t[1:n], s * x * y)
    return Chain(a, n - 1, out)


def shuffle_product_chains(c1: Chain, c2: Chain) -> Chain:
    """(a_0, a_1..a_p) . (a'_0, a_{p+1}..a_{p+q}) = sum sgn(s) s.(a_0 a'_0, a_1, ..., a_{p+q})."""
    if c1.algebra != c2.algebra:
        raise ValueError("shuffle product of chains over different algebras")
    a = c1.algebra
    p, q = c1.degree, c2.degree
    shuffles = [(s, sign(s)) for s in multi_shuffles([p, q])] if p and q else None
    out: dict = {}
    for t1, x1 in c1.coefficients.items():
        for t2, x2 in c2.coefficients.items():
            tail = t1[1:] + t2[1:]
            for k, y in _product_terms(a, t1[0], t2[0]):
                coeff = x1 * x2 * y
                if shuffles is None:
                    _add(out, (k,) + tail, coeff)
                    continue
                for s, sg in shuffles:
                    _add(out, (k,) + act(s, tail), sg * coeff)
    return Chain(a, p + q, out)


# ---------------------------------------------------------------- cochains


@dataclass(frozen=True, eq=False)
class Cochain:
    """Multilinear map A^n -> M; ``values`` row ``tuple_index(t)`` is f(e_t)."""

    algebra: StructureAlgebra
    module: SymmetricModule
    arity: int
    values: Matrix

    def __post_init__(self):
        rows = self.algebra.dim**self.arity
        if self.values.rows != rows or self.values.cols != self.module.dim:
            raise ValueError(
                f"arity-{self.arity} cochain needs a {rows}x{self.module.dim} matrix, "
                f"got {self.values.rows}x{self.values.cols}"
            )

    # construction

    @classmethod
    def zero(cls, algebra: StructureAlgebra, arity: int, module: SymmetricModule | None = None) -> Cochain:
        module = module or algebra.regular_module()
        return cls(algebra, module, arity, Matrix.zeros(algebra.dim**arity, module.dim))

    @classmethod
    def from_vector(
        cls, algebra: StructureAlgebra, arity: int, vec: Sequence | SparseVec, module: SymmetricModule | None = None
    ) -> Cochain:
        module = module or algebra.regular_module()
        size = algebra.dim**arity * module.dim
        if isinstance(vec, dict):
            entries = [Fraction(0)] * size
            for i, x in vec.items():
                entries[i] = Fraction(x)
        else:
            if len(vec) != size:
                raise ValueError(f"vector of length {len(vec)} for a cochain space of dimension {size}")
            entries = [Fraction(x) for x in vec]
        return cls(algebra, module, arity, Matrix(algebra.dim**arity, module.dim, tuple(entries)))

    @classmethod
    def from_function(
        cls,
        algebra: StructureAlgebra,
        arity: int,
        fn: Callable[[tuple[int, ...]], Sequence],
        module: SymmetricModule | None = None,
    ) -> Cochain:
        module = module or algebra.regular_module()
        rows = [list(fn(t)) for t in basis_tuples(algebra.dim, arity)]
        return cls(algebra, module, arity, Matrix.from_rows(rows, module.dim))

    @classmethod
    def from_entries(
        cls,
        algebra: StructureAlgebra,
        arity: int,
        entries: dict[tuple[int, ...], Sequence],
        module: SymmetricModule | None = None,
    ) -> Cochain:
        """Sparse construction: ``{argument tuple: value vector}``, absent tuples map to zero."""
        module = module or algebra.regular_module()
        zero = [Fraction(0)] * module.dim
        return cls.from_function(algebra, arity, lambda t: entries.get(t, zero), module)

    @classmethod
    def multiplication(cls, algebra: StructureAlgebra) -> Cochain:
        return cls.from_function(algebra, 2, lambda t: algebra.structure[t[0]][t[1]])

    @classmethod
    def identity(cls, algebra: StructureAlgebra) -> Cochain:
        return cls.from_function(algebra, 1, lambda t: [Fraction(int(k == t[0])) for k in range(algebra.dim)])

    # access

    def __call__(self, *t: int) -> tuple[Fraction, ...]:
        if len(t) != self.arity:
            raise ValueError(f"arity-{self.arity} cochain evaluated on {len(t)} arguments")
        return self.values.row(tuple_index(t, self.algebra.dim))

    def evaluate(self, t: Sequence[int]) -> tuple[Fraction, ...]:
        return self(*t)

    @property
    def vector(self) -> tuple[Fraction, ...]:
        return self.values.entries

    def to_sparse(self) -> SparseVec:
        return {i: x for i, x in enumerate(self.values.entries) if x}

    def nonzero_entries(self) -> list[tuple[tuple[int, ...], tuple[Fraction, ...]]]:
        d = self.algebra.dim
        return [(t, self.values.row(i)) for i, t in enumerate(basis_tuples(d, self.arity)) if any(self.values.row(i))]

    def is_zero(self) -> bool:
        return self.values.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_symmetric(self) -> bool:
        if self.arity != 2:
            raise ValueError("symmetry is checked on 2-cochains")
        d = self.algebra.dim
        return all(self(i, j) == self(j, i) for i in range(d) for j in range(i + 1, d))

    # arithmetic

    def _like(self, entries: Iterable[Fraction]) -> Cochain:
        return Cochain(self.algebra, self.module, self.arity, Matrix(self.values.rows, self.values.cols, tuple(entries)))

    def _check(self, other: Cochain) -> None:
        if self.arity != other.arity or self.algebra != other.algebra or self.module != other.module:
            raise ValueError("cochains live in different spaces")

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.arity == other.arity
            and self.module.dim == other.module.dim
            and self.values.entries == other.values.entries
        )

    def __add__(self, other: Cochain) -> Cochain:
        self._check(other)
        return self._like(x + y for x, y in zip(self.vector, other.vector))

    def __sub__(self, other: Cochain) -> Cochain:
        self._check(other)
        return self._like(x - y for x, y in zip(self.vector, other.vector))

    def __neg__(self) -> Cochain:
        return self._like(-x for x in self.vector)

    def scale(self, c) -> Cochain:
        c = Fraction(c)
        return self._like(c * x for x in self.vector)

    def __rmul__(self, c) -> Cochain:
        return self.scale(c)

    def __repr__(self) -> str:
        return f"Cochain(arity={self.arity}, nonzero={len(self.nonzero_entries())})"


def _module_act(m: SymmetricModule, i: int, v: Sequence[Fraction]) -> list[Fraction]:
    return m.act(i, v)


def coboundary(f: Cochain) -> Cochain:
    """(df)(a_1..a_{n+1}) = a_1 f(a_2..) + sum_i (-1)^i f(.., a_i a_{i+1}, ..) + (-1)^{n+1} f(a_1..a_n) a_{n+1}."""
    a, m, n = f.algebra, f.module, f.arity
    d = a.dim
    rows = []
    for t in basis_tuples(d, n + 1):
        acc = _module_act(m, t[0], f.evaluate(t[1:]))
        for i in range(1, n + 1):
            s = (-1) ** i
            for k, c in _product_terms(a, t[i - 1], t[i]):
                val = f.evaluate(t[:i - 1] + (k,) + t[i + 1:])
                acc = [x + s * c * y for x, y in zip(acc, val)]
        last = _module_act(m, t[n], f.evaluate(t[:n]))
        s = (-1) ** (n + 1)
        acc = [x + s * y for x, y in zip(acc, last)]
        rows.append(acc)
    return Cochain(a, m, n + 1, Matrix.from_rows(rows, m.dim))


def coboundary_columns(a: StructureAlgebra, m: SymmetricModule, n: int) -> list[SparseVec]:
    """Images of the standard basis of C^n(A, M) under the coboundary, as sparse vectors of C^{n+1}."""
    d, md = a.dim, m.dim
    cols: list[SparseVec] = [{} for _ in range(d**n * md)]
    for r, t in enumerate(basis_tuples(d, n + 1)):
        first = tuple_index(t[1:], d)
        last = tuple_index(t[:n], d)
        for k in range(md):
            row = r * md + k
            for j in range(md):
                x = m.action[t[0]][k][j]
                if x:
                    _add(cols[first * md + j], row, x)
                y = m.action[t[n]][k][j]
                if y:
                    _add(cols[last * md + j], row, (-1) ** (n + 1) * y)
            for i in range(1, n + 1):
                s = (-1) ** i
                for l, c in _product_terms(a, t[i - 1], t[i]):
                    src = tuple_index(t[:i - 1] + (l,) + t[i + 1:], d)
                    _add(cols[src * md + k], row, s * c)
    return cols


def _apply_columns(cols: Sequence[SparseVec], v: SparseVec) -> SparseVec:
    out: SparseVec = {}
    for j, x in v.items():
        for i, y in cols[j].items():
            _add(out, i, x * y)
    return out


def _transpose(cols: Sequence[SparseVec]) -> list[SparseVec]:
    rows: dict[int, SparseVec] = {}
    for j, col in enumerate(cols):
        for i, x in col.items():
            rows.setdefault(i, {})[j] = x
    return [rows[i] for i in sorted(rows)]


# ---------------------------------------------------------------- Harrison projection


def _idempotent_or_identity(n: int) -> GroupAlgebraElement:
    return GroupAlgebraElement.identity(0) if n == 0 else eulerian_idempotent(n, 1)


@lru_cache(maxsize=None)
def _projection_table(dim: int, n: int) -> tuple[tuple[tuple[int, Fraction], ...], ...]:
    """Row t lists (index of s, coefficient) with e_n^(1) . t = sum coefficient * s."""
    e = eulerian_idempotent(n, 1)
    return tuple(
        tuple(sorted((tuple_index(s, dim), c) for s, c in e.act_on(t).items()))
        for t in basis_tuples(dim, n)
    )


def harrison_project(f: Cochain) -> Cochain:
    """f |-> f o e^(1): precompose the arguments with the first eulerian idempotent."""
    if f.arity < 1:
        raise ValueError("Harrison cochains have arity >= 1")
    table = _projection_table(f.algebra.dim, f.arity)
    md = f.module.dim
    rows = []
    for entries in table:
        acc = [Fraction(0)] * md
        for s, c in entries:
            acc = [x + c * y for x, y in zip(acc, f.values.row(s))]
        rows.append(acc)
    return Cochain(f.algebra, f.module, f.arity, Matrix.from_rows(rows, md))


def _projection_columns(dim: int, md: int, n: int) -> list[SparseVec]:
    """Images of the standard basis of C^n under f |-> f o e^(1)."""
    cols: list[SparseVec] = [{} for _ in range(dim**n * md)]
    for r, entries in enumerate(_projection_table(dim, n)):
        for s, c in entries:
            for k in range(md):
                _add(cols[s * md + k], r * md + k, c)
    return cols


@dataclass(frozen=True)
class HarrisonWitness:
    blocks: tuple[int, int]
    args: tuple[int, ...]
    value: tuple[Fraction, ...]


def is_harrison(f: Cochain) -> tuple[bool, HarrisonWitness | None]:
    """Does ``f`` vanish on every shuffle sh_{p,q}(t), p + q = arity?  Returns a witness if not."""
    n = f.arity
    if n < 1:
        raise ValueError("Harrison cochains have arity >= 1")
    md = f.module.dim
    for p in range(1, n):
        shuffles = [(s, sign(s)) for s in multi_shuffles([p, n - p])]
        for t in basis_tuples(f.algebra.dim, n):
            acc = [Fraction(0)] * md
            for s, sg in shuffles:
                acc = [x + sg * y for x, y in zip(acc, f.evaluate(act(s, t)))]
            if any(acc):
                return False, HarrisonWitness((p, n - p), t, tuple(acc))
    return True, None


def harrison_cochain_basis(a: StructureAlgebra, n: int, module: SymmetricModule | None = None) -> list[SparseVec]:
    """Echelon basis of the Harrison cochains of arity n (the image of the projection)."""
    module = module or a.regular_module()
    e = Echelon()
    e.extend(_projection_columns(a.dim, module.dim, n))
    return e.basis()


# ---------------------------------------------------------------- cohomology


@dataclass
class CohomologyReport:
    degree: int
    variant: str
    dim_cochains: int
    dim_cocycles: int
    dim_coboundaries: int
    representatives: list[Cochain] = field(default_factory=list, repr=False)

    @property
    def betti(self) -> int:
        return self.dim_cocycles - self.dim_coboundaries


def _domain_basis(a: StructureAlgebra, m: SymmetricModule, n: int, variant: str) -> list[SparseVec]:
    if variant == "hochschild":
        return [{i: Fraction(1)} for i in range(a.dim**n * m.dim)]
    return harrison_cochain_basis(a, n, m)


def cohomology(
    a: StructureAlgebra,
    m: SymmetricModule | None,
    n: int,
    variant: Variant = "hochschild",
    cap: int | None = None,
    representatives: bool = True,
) -> CohomologyReport:
    """Dimensions of cocycles, coboundaries and cohomology in degree n."""
    if variant not in ("hochschild", "harrison"):
        raise ValueError(f"unknown variant {variant!r}")
    if n < 0 or (variant == "harrison" and n < 1):
        raise ValueError(f"degree {n} is outside the {variant} complex")
    m = m or a.regular_module()
    _check_cap(a.dim, n + 1, cap)

    domain = _domain_basis(a, m, n, variant)
    delta = coboundary_columns(a, m, n)
    images = [_apply_columns(delta, v) for v in domain]
    # kernel of the restricted map, in coordinates of `domain`
    kernel_coords = sparse_kernel(_transpose(images), len(domain))
    cocycles = []
    for coords in kernel_coords:
        v: SparseVec = {}
        for j, x in coords.items():
            for i, y in domain[j].items():
                _add(v, i, x * y)
        cocycles.append(v)

    boundaries = Echelon()
    has_previous = n >= 1 if variant == "hochschild" else n >= 2
    if has_previous:
        prev = coboundary_columns(a, m, n - 1)
        boundaries.extend(_apply_columns(prev, v) for v in _domain_basis(a, m, n - 1, variant))

    reps = []
    if representatives:
        quotient = Echelon()
        quotient.extend(boundaries.basis())
        for v in cocycles:
            if quotient.add(v):
                reps.append(Cochain.from_vector(a, n, v, m))
    return CohomologyReport(n, variant, len(domain), len(cocycles), boundaries.rank, reps)


# ---------------------------------------------------------------- homology


@dataclass
class HomologyReport:
    degree: int
    variant: str
    presentation: str | None
    dim_chains: int
    dim_cycles: int
    dim_boundaries: int

    @property
    def betti(self) -> int:
        return self.dim_cycles - self.dim_boundaries


def _basis_chains(a: StructureAlgebra, n: int) -> list[Chain]:
    return [Chain.basis(a, t) for t in basis_tuples(a.dim, n + 1)]


def boundary_columns(a: StructureAlgebra, n: int) -> list[SparseVec]:
    if n == 0:
        return [{} for _ in range(a.dim)]
    return [chain_boundary(c).to_sparse() for c in _basis_chains(a, n)]


def shuffle_span(a: StructureAlgebra, n: int) -> Echelon:
    """Span of all shuffle products of positive-degree chains of total degree n."""
    e = Echelon()
    for p in range(1, n):
        left = _basis_chains(a, p)
        right = _basis_chains(a, n - p)
        for c1 in left:
            for c2 in right:
                e.add(shuffle_product_chains(c1, c2).to_sparse())
    return e


def eulerian_image(a: StructureAlgebra, n: int, element: GroupAlgebraElement | None = None) -> Echelon:
    element = element or _idempotent_or_identity(n)
    e = Echelon()
    e.extend(c.act(element).to_sparse() for c in _basis_chains(a, n))
    return e


def _span_rank(*gens: Iterable[SparseVec]) -> int:
    e = Echelon()
    for g in gens:
        e.extend(g)
    return e.rank


def homology(
    a: StructureAlgebra,
    n: int,
    variant: Variant = "hochschild",
    presentation: Literal["quotient", "eulerian"] = "quotient",
    cap: int | None = None,
) -> HomologyReport:
    """Homology with coefficients in A itself."""
    if n < 0:
        raise ValueError("homology degree must be >= 0")
    _check_cap(a.dim, n + 2, cap)
    size = a.dim ** (n + 1)
    if variant == "hochschild":
        cycles = size - _span_rank(boundary_columns(a, n))
        boundaries = _span_rank(boundary_columns(a, n + 1))
        return HomologyReport(n, variant, None, size, cycles, boundaries)
    if variant != "harrison":
        raise ValueError(f"unknown variant {variant!r}")

    if presentation == "eulerian":
        here = eulerian_image(a, n).basis()
        above = eulerian_image(a, n + 1).basis()
        b_here = boundary_columns(a, n)
        b_above = boundary_columns(a, n + 1)
        cycles = len(here) - _span_rank(_apply_columns(b_here, v) for v in here)
        boundaries = _span_rank(_apply_columns(b_above, v) for v in above)
        return HomologyReport(n, variant, presentation, len(here), cycles, boundaries)
    if presentation != "quotient":
        raise ValueError(f"unknown presentation {presentation!r}")

    s_here = shuffle_span(a, n).basis()
    s_below = shuffle_span(a, n - 1).basis() if n >= 1 else []
    # c is a cycle of the quotient iff b(c) lies in the shuffle span one degree down
    image_mod_below = _span_rank(boundary_columns(a, n), s_below) - len(s_below)
    preimage = size - image_mod_below
    cycles = preimage - len(s_here)
    boundaries = _span_rank(boundary_columns(a, n + 1), s_here) - len(s_here)
    return HomologyReport(n, variant, presentation, size - len(s_here), cycles, boundaries)


# ---------------------------------------------------------------- Barr decomposition


@dataclass
class BarrReport:
    degree: int
    dim_chains: int
    dim_shuffles: int
    dim_eulerian: int
    dim_intersection: int
    dim_sum: int
    shuffles_equal_complement: bool

    @property
    def ok(self) -> bool:
        return (
            self.dim_intersection == 0
            and self.dim_sum == self.dim_chains
            and self.shuffles_equal_complement
        )


def barr_decomposition_check(a: StructureAlgebra, n: int, cap: int | None = None) -> BarrReport:
    """Compare the shuffle span with the images of e^(1) and id - e^(1) in degree n."""
    if n < 2:
        raise ValueError("the decomposition check needs degree >= 2")
    _check_cap(a.dim, n + 1, cap)
    shuffles = shuffle_span(a, n).basis()
    e1 = eulerian_idempotent(n, 1)
    image = eulerian_image(a, n, e1).basis()
    complement = eulerian_image(a, n, GroupAlgebraElement.identity(n) - e1).basis()
    u, v, cap_dim, sum_dim = sparse_subspace_dims(shuffles, image)
    su, sv, s_cap, _ = sparse_subspace_dims(shuffles, complement)
    same = su == sv == s_cap
    return BarrReport(n, a.dim ** (n + 1), u, v, cap_dim, sum_dim, same)
