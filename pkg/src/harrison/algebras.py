"""Finite-dimensional unital commutative algebras over Q and symmetric modules.

An algebra is given by structure constants ``c[i][j][k]`` with
``e_i e_j = sum_k c[i][j][k] e_k``.  Modules are given by one matrix per
basis element; ``action[i][k][j]`` is the ``e_k`` coefficient of ``e_i . m_j``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

__all__ = [
    "StructureAlgebra",
    "SymmetricModule",
    "Violation",
    "ValidationReport",
    "validate",
    "validate_module",
    "multiply",
    "builtin",
    "BUILTINS",
]

Tensor3 = tuple[tuple[tuple[Fraction, ...], ...], ...]


@dataclass(frozen=True)
class StructureAlgebra:
    dim: int
    basis_names: tuple[str, ...]
    structure: Tensor3
    unit_index: int = 0

    def __post_init__(self):
        names = tuple(str(n) for n in self.basis_names)
        object.__setattr__(self, "basis_names", names)
        if self.dim < 1:
            raise ValueError("algebra dimension must be positive")
        if len(names) != self.dim or len(set(names)) != self.dim:
            raise ValueError(f"need {self.dim} distinct basis names, got {names}")
        if not 0 <= self.unit_index < self.dim:
            raise ValueError(f"unit index {self.unit_index} out of range")
        try:
            c = tuple(
                tuple(tuple(Fraction(x) for x in self.structure[i][j]) for j in range(self.dim))
                for i in range(self.dim)
            )
        except (IndexError, TypeError):
            raise ValueError("structure constants must be a dim x dim x dim array") from None
        if len(self.structure) != self.dim or any(
            len(self.structure[i]) != self.dim or len(c[i][j]) != self.dim
            for i in range(self.dim)
            for j in range(self.dim)
        ):
            raise ValueError("structure constants must be a dim x dim x dim array")
        object.__setattr__(self, "structure", c)

    @classmethod
    def from_products(
        cls,
        basis_names: Sequence[str],
        unit: str,
        products: dict[tuple[str, str], dict[str, Fraction]],
        symmetric: bool = False,
    ) -> StructureAlgebra:
        """Build from a sparse product table; the unit rows are filled in.

        With ``symmetric=True`` each listed product is also used for the
        swapped pair, unless that pair is listed explicitly.
        """
        names = list(basis_names)
        idx = {n: i for i, n in enumerate(names)}
        d = len(names)
        c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
        u = idx[unit]
        for j in range(d):
            c[u][j][j] = c[j][u][j] = Fraction(1)
        items = list(products.items())
        if symmetric:
            items = [((b, a), r) for (a, b), r in items if (b, a) not in products] + items
        for (a, b), result in items:
            row = [Fraction(0)] * d
            for name, coeff in result.items():
                row[idx[name]] += Fraction(coeff)
            c[idx[a]][idx[b]] = row
        return cls(d, tuple(names), c, u)

    @property
    def unit(self) -> list[Fraction]:
        return basis_vector(self.dim, self.unit_index)

    def index(self, name: str) -> int:
        try:
            return self.basis_names.index(name)
        except ValueError:
            raise KeyError(f"unknown basis element {name!r}") from None

    def left_matrix(self, i: int) -> tuple[tuple[Fraction, ...], ...]:
        """Matrix of multiplication by e_i: entry [k][j] = c[i][j][k]."""
        c = self.structure
        return tuple(tuple(c[i][j][k] for j in range(self.dim)) for k in range(self.dim))

    def regular_module(self) -> SymmetricModule:
        return SymmetricModule(self.dim, tuple(self.left_matrix(i) for i in range(self.dim)), name="A")


@dataclass(frozen=True)
class SymmetricModule:
    dim: int
    action: tuple[tuple[tuple[Fraction, ...], ...], ...]
    name: str = "M"

    def __post_init__(self):
        act = tuple(tuple(tuple(Fraction(x) for x in row) for row in m) for m in self.action)
        if any(len(m) != self.dim or any(len(r) != self.dim for r in m) for m in act):
            raise ValueError(f"action matrices must be {self.dim}x{self.dim}")
        object.__setattr__(self, "action", act)

    def act(self, i: int, v: Sequence[Fraction]) -> list[Fraction]:
        m = self.action[i]
        return [sum((m[k][j] * v[j] for j in range(self.dim) if v[j]), Fraction(0)) for k in range(self.dim)]


def basis_vector(dim: int, i: int) -> list[Fraction]:
    v = [Fraction(0)] * dim
    v[i] = Fraction(1)
    return v


@dataclass(frozen=True)
class Violation:
    law: str  # "commutativity" | "associativity" | "unit" | "representation"
    indices: tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.law} fails at {self.indices}{': ' + self.detail if self.detail else ''}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.ok

    @property
    def laws(self) -> set[str]:
        return {v.law for v in self.violations}


def validate(a: StructureAlgebra) -> ValidationReport:
    """Check commutativity, associativity and the unit law, listing every failure."""
    d, c, u = a.dim, a.structure, a.unit_index
    out = []
    for i, j, k in product(range(d), repeat=3):
        if c[i][j][k] != c[j][i][k] and i < j:
            out.append(Violation("commutativity", (i, j, k), f"{c[i][j][k]} != {c[j][i][k]}"))
    for j, k in product(range(d), repeat=2):
        want = Fraction(int(j == k))
        if c[u][j][k] != want:
            out.append(Violation("unit", (u, j, k), f"1*e_{j} has e_{k} coefficient {c[u][j][k]}"))
    for i, j, k, l in product(range(d), repeat=4):
        lhs = sum((c[i][j][m] * c[m][k][l] for m in range(d)), Fraction(0))
        rhs = sum((c[j][k][m] * c[i][m][l] for m in range(d)), Fraction(0))
        if lhs != rhs:
            out.append(Violation("associativity", (i, j, k, l), f"{lhs} != {rhs}"))
    return ValidationReport(out)


def validate_module(a: StructureAlgebra, m: SymmetricModule) -> ValidationReport:
    out = []
    if len(m.action) != a.dim:
        return ValidationReport([Violation("representation", (), "one action matrix per basis element needed")])
    d, n = a.dim, m.dim

    def matmul(x, y):
        return [[sum((x[r][s] * y[s][t] for s in range(n)), Fraction(0)) for t in range(n)] for r in range(n)]

    ident = [[Fraction(int(r == t)) for t in range(n)] for r in range(n)]
    if [list(r) for r in m.action[a.unit_index]] != ident:
        out.append(Violation("unit", (a.unit_index,), "unit does not act as identity"))
    for i, j in product(range(d), repeat=2):
        lhs = matmul(m.action[i], m.action[j])
        rhs = [
            [sum((a.structure[i][j][k] * m.action[k][r][t] for k in range(d)), Fraction(0)) for t in range(n)]
            for r in range(n)
        ]
        if lhs != rhs:
            out.append(Violation("representation", (i, j)))
    return ValidationReport(out)


def multiply(a: StructureAlgebra, u: Sequence, v: Sequence) -> list[Fraction]:
    if len(u) != a.dim or len(v) != a.dim:
        raise ValueError(f"vectors must have length {a.dim}")
    c = a.structure
    out = [Fraction(0)] * a.dim
    for i, x in enumerate(u):
        if not x:
            continue
        for j, y in enumerate(v):
            if not y:
                continue
            xy = Fraction(x) * Fraction(y)
            for k, z in enumerate(c[i][j]):
                if z:
                    out[k] += xy * z
    return out


def _truncated_poly(m: int) -> StructureAlgebra:
    names = ["1", "x"] + [f"x^{k}" for k in range(2, m)]
    c = [[[Fraction(0)] * m for _ in range(m)] for _ in range(m)]
    for i, j in product(range(m), repeat=2):
        if i + j < m:
            c[i][j][i + j] = Fraction(1)
    return StructureAlgebra(m, tuple(names), c, 0)


def _cross(m: int) -> StructureAlgebra:
    # basis 1, x, ..., x^{m-1}, y, ..., y^{m-1}; xy = 0
    xs = [(k, 0) for k in range(1, m)]
    ys = [(0, k) for k in range(1, m)]
    monos = [(0, 0)] + xs + ys
    names = ["1"] + [("x" if k == 1 else f"x^{k}") for k, _ in xs] + [("y" if k == 1 else f"y^{k}") for _, k in ys]
    idx = {mono: i for i, mono in enumerate(monos)}
    d = len(monos)
    c = [[[Fraction(0)] * d for _ in range(d)] for _ in range(d)]
    for (p, q), (r, s) in product(monos, repeat=2):
        e = (p + r, q + s)
        if e in idx:
            c[idx[(p, q)]][idx[(r, s)]][idx[e]] = Fraction(1)
    return StructureAlgebra(d, tuple(names), c, 0)


BUILTINS = ("dual_numbers", "truncated_poly", "cross")


def builtin(name: str, m: int | None = None) -> StructureAlgebra:
    """The test corpus: ``dual_numbers``, ``truncated_poly(m)`` = Q[x]/(x^m), ``cross(m)`` = Q[x,y]/(xy, x^m, y^m).

    >>> builtin("cross", 2).basis_names
    ('1', 'x', 'y')
    """
    if name == "dual_numbers":
        return _truncated_poly(2)
    if name not in BUILTINS:
        raise ValueError(f"unknown builtin algebra {name!r}; choose from {', '.join(BUILTINS)}")
    if m is None or m < 2:
        raise ValueError(f"{name} needs a parameter m >= 2, got {m}")
    return _truncated_poly(m) if name == "truncated_poly" else _cross(m)
