"""Exact linear algebra over the rationals.

Everything here works on :class:`fractions.Fraction` entries; there is no
floating point.  Dense matrices are carried by :class:`Matrix`, but the
elimination itself runs on sparse rows (``dict[int, Fraction]``) because the
coboundary and shuffle matrices met in practice are very sparse.

>>> m = Matrix.from_rows([[2, 4], [1, 2]])
>>> r, pivots = rref(m)
>>> r.to_rows(), pivots
([[Fraction(1, 1), Fraction(2, 1)], [Fraction(0, 1), Fraction(0, 1)]], [0])
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Matrix",
    "SparseVec",
    "Echelon",
    "DimensionError",
    "rref",
    "rank",
    "kernel_basis",
    "solve",
    "subspace_dims",
    "to_sparse",
    "to_dense",
]

SparseVec = dict[int, Fraction]


class DimensionError(ValueError):
    """Raised on shape mismatches between matrices and vectors."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Matrix:
    """Dense row-major rational matrix."""

    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(_frac(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(Fraction(int(i == j)) for i in range(n) for j in range(n)))

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[SparseVec], cols: int) -> Matrix:
        return cls.from_rows([to_dense(r, cols) for r in rows], cols)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def sparse_rows(self) -> list[SparseVec]:
        return [to_sparse(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> Matrix:
        return Matrix(
            self.cols,
            self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
        )

    def matvec(self, v: Sequence) -> list[Fraction]:
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} against {self.cols} columns")
        v = [_frac(x) for x in v]
        return [sum((a * b for a, b in zip(self.row(i), v) if a), Fraction(0)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return not any(self.entries)


def to_sparse(v: Iterable) -> SparseVec:
    return {i: _frac(x) for i, x in enumerate(v) if x}


def to_dense(v: SparseVec, length: int) -> list[Fraction]:
    out = [Fraction(0)] * length
    for i, x in v.items():
        out[i] = x
    return out


def _axpy(target: SparseVec, scale: Fraction, source: SparseVec) -> None:
    """target += scale * source, dropping cancelled entries."""
    for j, x in source.items():
        y = target.get(j, 0) + scale * x
        if y:
            target[j] = y
        else:
            target.pop(j, None)


class Echelon:
    """Incrementally maintained reduced echelon basis of a row space.

    Rows are kept fully reduced against each other, so ``reduce`` returns the
    canonical remainder of a vector modulo the span.
    """

    def __init__(self, length: int | None = None):
        self.length = length
        self.pivot_rows: dict[int, SparseVec] = {}

    def __len__(self) -> int:
        return len(self.pivot_rows)

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, v: SparseVec) -> SparseVec:
        v = dict(v)
        # pivots are reduced against each other, one pass in any order suffices
        for p in [j for j in v if j in self.pivot_rows]:
            c = v.get(p)
            if c:
                _axpy(v, -c, self.pivot_rows[p])
        return v

    def add(self, v: SparseVec) -> bool:
        """Insert ``v``; return True iff it enlarged the span."""
        if self.length is not None and v and max(v) >= self.length:
            raise DimensionError("vector longer than echelon width")
        r = self.reduce(v)
        if not r:
            return False
        p = min(r)
        c = r[p]
        r = {j: x / c for j, x in r.items()}
        for q, row in self.pivot_rows.items():
            c = row.get(p)
            if c:
                _axpy(row, -c, r)
        self.pivot_rows[p] = r
        return True

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)

    def extend(self, vectors: Iterable[SparseVec]) -> int:
        return sum(self.add(v) for v in vectors)

    def pivots(self) -> list[int]:
        return sorted(self.pivot_rows)

    def basis(self) -> list[SparseVec]:
        return [self.pivot_rows[p] for p in self.pivots()]


def _rref_sparse(rows: Sequence[SparseVec]) -> tuple[list[SparseVec], list[int]]:
    e = Echelon()
    e.extend(rows)
    return e.basis(), e.pivots()


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns; zero rows go to the bottom."""
    basis, pivots = _rref_sparse(m.sparse_rows())
    rows = [to_dense(r, m.cols) for r in basis]
    rows += [[Fraction(0)] * m.cols for _ in range(m.rows - len(rows))]
    return Matrix.from_rows(rows, m.cols), pivots


def rank(m: Matrix | Sequence[SparseVec]) -> int:
    rows = m.sparse_rows() if isinstance(m, Matrix) else m
    e = Echelon()
    return e.extend(rows)


def sparse_kernel(rows: Sequence[SparseVec], cols: int) -> list[SparseVec]:
    """Null space basis of the matrix whose rows are given, one vector per free column."""
    basis, pivots = _rref_sparse(rows)
    pivot_set = set(pivots)
    kernel = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v: SparseVec = {f: Fraction(1)}
        for p, row in zip(pivots, basis):
            c = row.get(f)
            if c:
                v[p] = -c
        kernel.append(v)
    return kernel


def kernel_basis(m: Matrix) -> list[list[Fraction]]:
    """Basis of ``{v : m v = 0}``; count is ``cols - rank``."""
    return [to_dense(v, m.cols) for v in sparse_kernel(m.sparse_rows(), m.cols)]


def sparse_solve(rows: Sequence[SparseVec], cols: int, b: Sequence) -> SparseVec | None:
    """One solution of ``M x = b`` with free variables set to zero, or None."""
    if len(rows) != len(b):
        raise DimensionError(f"{len(rows)} equations against right-hand side of length {len(b)}")
    aug = []
    for r, bi in zip(rows, b):
        r = dict(r)
        bi = _frac(bi)
        if bi:
            r[cols] = bi
        aug.append(r)
    basis, pivots = _rref_sparse(aug)
    if pivots and pivots[-1] == cols:
        return None
    return {p: row[cols] for p, row in zip(pivots, basis) if cols in row}


def solve(m: Matrix, b: Sequence) -> list[Fraction] | None:
    """Exact solution of ``m x = b``, or None when the system is inconsistent.

    Free variables are set to zero, which makes the answer deterministic.
    """
    x = sparse_solve(m.sparse_rows(), m.cols, b)
    return None if x is None else to_dense(x, m.cols)


def subspace_dims(u_gens: Sequence[Sequence], v_gens: Sequence[Sequence]) -> tuple[int, int, int, int]:
    """Return ``(dim U, dim V, dim U∩V, dim U+V)`` for spanning sets of U and V."""
    lengths = {len(v) for v in (*u_gens, *v_gens)}
    if len(lengths) > 1:
        raise DimensionError(f"generators of differing lengths {sorted(lengths)}")
    return sparse_subspace_dims([to_sparse(v) for v in u_gens], [to_sparse(v) for v in v_gens])


def sparse_subspace_dims(u_gens: Iterable[SparseVec], v_gens: Iterable[SparseVec]) -> tuple[int, int, int, int]:
    u, v = Echelon(), Echelon()
    u.extend(u_gens)
    v.extend(v_gens)
    total = Echelon()
    total.extend(u.basis())
    total.extend(v.basis())
    return u.rank, v.rank, u.rank + v.rank - total.rank, total.rank
