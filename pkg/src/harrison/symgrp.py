"""Permutations, the group algebra Q[S_n], signed shuffles and eulerian idempotents.

Conventions
-----------
Permutations are stored in one-line notation with 1-based images, so
``Permutation((2, 3, 1))`` is the cycle 1->2->3->1.  ``compose(p, q)`` is
``i -> p(q(i))``.  A permutation acts on tuples by moving entry ``j`` to
position ``p(j)``, i.e. ``act(p, t)[i] = t[p^{-1}(i)]``.  With these choices

    act(compose(p, q), t) == act(p, act(q, t))

and the group algebra product ``ga_product(a, b)`` acts as "``a`` after ``b``".

Shuffle elements carry the sign of the permutation: chain entries behave as
degree-one letters.  This is what makes ``e_2^(1) = (id + (1 2))/2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "Permutation",
    "GroupAlgebraElement",
    "compose",
    "sign",
    "act",
    "multi_shuffles",
    "shuffle_element",
    "ga_product",
    "block_product",
    "compositions",
    "eulerian_idempotent",
    "eulerian_idempotents",
    "antisymmetrizer",
    "MAX_DEGREE",
]

# documented hard limit; n! grows past what exact dict arithmetic handles quickly
MAX_DEGREE = 8


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(int(i) for i in self.images))
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"{self.images} is not a permutation of 1..{len(self.images)}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, *cycles: Sequence[int]) -> Permutation:
        """Build from disjoint cycles, e.g. ``from_cycles(3, (1, 2, 3))``."""
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, (*cyc[1:], cyc[0])):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for j, i in enumerate(self.images, 1):
            inv[i - 1] = j
        return Permutation(tuple(inv))

    def inversions(self) -> int:
        im = self.images
        return sum(1 for a, b in combinations(range(len(im)), 2) if im[a] > im[b])

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.images)) + "]"


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation(tuple(p.images[j - 1] for j in q.images))


def sign(p: Permutation) -> int:
    return -1 if p.inversions() % 2 else 1


def act(p: Permutation, t: Sequence) -> tuple:
    if len(t) != p.degree:
        raise ValueError(f"tuple of length {len(t)} acted on by a permutation of degree {p.degree}")
    out = [None] * len(t)
    for j, x in enumerate(t):
        out[p.images[j] - 1] = x
    return tuple(out)


def _check_blocks(blocks: Sequence[int]) -> tuple[int, ...]:
    blocks = tuple(int(b) for b in blocks)
    if not blocks:
        raise ValueError("empty block list")
    if any(b < 1 for b in blocks):
        raise ValueError(f"blocks must be positive, got {blocks}")
    return blocks


@lru_cache(maxsize=None)
def _multi_shuffles(blocks: tuple[int, ...]) -> tuple[Permutation, ...]:
    n = sum(blocks)
    if len(blocks) == 1:
        return (Permutation.identity(n),)
    first, rest = blocks[0], blocks[1:]
    out = []
    # choose the image set of the first block, then shuffle the rest into the remainder
    for chosen in combinations(range(1, n + 1), first):
        remaining = [i for i in range(1, n + 1) if i not in chosen]
        for tail in _multi_shuffles(rest):
            out.append(Permutation(chosen + tuple(remaining[j - 1] for j in tail.images)))
    return tuple(sorted(out))


def multi_shuffles(blocks: Sequence[int]) -> list[Permutation]:
    """Permutations increasing on each consecutive block of positions."""
    return list(_multi_shuffles(_check_blocks(blocks)))


class GroupAlgebraElement:
    """A finite rational combination of permutations of one fixed degree."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, Fraction] | Iterable = ()):
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Permutation, Fraction] = {}
        for p, c in items:
            if p.degree != n:
                raise ValueError(f"permutation {p} is not of degree {n}")
            c = clean.get(p, 0) + Fraction(c)
            if c:
                clean[p] = c
            else:
                clean.pop(p, None)
        self.terms = clean

    @classmethod
    def identity(cls, n: int) -> GroupAlgebraElement:
        return cls(n, {Permutation.identity(n): Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> GroupAlgebraElement:
        return cls(n)

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        if self.n != other.n:
            raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
        return GroupAlgebraElement(self.n, [*self.terms.items(), *other.terms.items()])

    def __neg__(self) -> GroupAlgebraElement:
        return GroupAlgebraElement(self.n, {p: -c for p, c in self.terms.items()})

    def __sub__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return self + (-other)

    def scale(self, c) -> GroupAlgebraElement:
        c = Fraction(c)
        return GroupAlgebraElement(self.n, {p: c * x for p, x in self.terms.items()})

    def __rmul__(self, c) -> GroupAlgebraElement:
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return ga_product(self, other)
        return self.scale(other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, p: Permutation) -> Fraction:
        return self.terms.get(p, Fraction(0))

    def act_on(self, t: Sequence) -> dict[tuple, Fraction]:
        """Apply to a tuple, collecting the permuted tuples with coefficients."""
        out: dict[tuple, Fraction] = {}
        for p, c in self.terms.items():
            s = act(p, t)
            v = out.get(s, 0) + c
            if v:
                out[s] = v
            else:
                out.pop(s, None)
        return out

    def sorted_terms(self) -> list[tuple[Permutation, Fraction]]:
        return sorted(self.terms.items(), key=lambda pc: pc[0].images)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c} * {p}" for p, c in self.sorted_terms())

    def __repr__(self) -> str:
        return f"GroupAlgebraElement({self.n}, {str(self)!r})"


def shuffle_element(blocks: Sequence[int]) -> GroupAlgebraElement:
    """Signed sum of the multi-shuffles for ``blocks``."""
    blocks = _check_blocks(blocks)
    return GroupAlgebraElement(sum(blocks), {s: Fraction(sign(s)) for s in _multi_shuffles(blocks)})


@lru_cache(maxsize=None)
def _all_perms(n: int) -> np.ndarray:
    """All of S_n in lexicographic order of one-line notation, 0-based images."""
    return np.array(list(permutations(range(n))), dtype=np.int64).reshape(-1, n)


@lru_cache(maxsize=None)
def _lehmer_weights(n: int) -> np.ndarray:
    return np.array([math.factorial(n - 1 - j) for j in range(n)], dtype=np.int64)


def _rank(images: np.ndarray) -> np.ndarray:
    """Lexicographic rank of each row of 0-based one-line images."""
    n = images.shape[-1]
    smaller_after = np.zeros(images.shape, dtype=np.int64)
    for j in range(n):
        smaller_after[..., j] = (images[..., j + 1:] < images[..., j:j + 1]).sum(axis=-1)
    return smaller_after @ _lehmer_weights(n)


@lru_cache(maxsize=8)
def _left_table(n: int) -> np.ndarray | None:
    # full multiplication table only where it stays small (720 x 720 at n = 6)
    if n > 6:
        return None
    perms = _all_perms(n)
    return _rank(perms[:, perms]).astype(np.int32)


def _left_row(n: int, p_index: int) -> np.ndarray:
    """Indices of compose(p, q) for every q, in lexicographic order of q."""
    table = _left_table(n)
    if table is not None:
        return table[p_index]
    perms = _all_perms(n)
    return _rank(perms[p_index][perms])


def _dense(e: GroupAlgebraElement) -> tuple[np.ndarray, int]:
    """Integer numerators over S_n (lexicographic order) and a common denominator."""
    den = math.lcm(*(c.denominator for c in e.terms.values())) if e.terms else 1
    idx = np.array([_rank(np.array(p.images) - 1) for p in e.terms], dtype=np.int64)
    nums = [int(c * den) for c in e.terms.values()]
    big = max((abs(x) for x in nums), default=0) >= 2**31
    vec = np.zeros(math.factorial(e.n), dtype=object if big else np.int64)
    vec[idx] = nums
    return vec, den


def ga_product(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    if a.n != b.n:
        raise ValueError(f"degree mismatch: {a.n} vs {b.n}")
    n = a.n
    if not a.terms or not b.terms:
        return GroupAlgebraElement.zero(n)
    av, ad = _dense(a)
    bv, bd = _dense(b)
    bound = int(np.abs(av).max()) * int(np.abs(bv).max()) * min(len(a.terms), len(b.terms))
    dtype = np.int64 if bound < 2**62 else object
    out = np.zeros(math.factorial(n), dtype=dtype)
    bv = bv.astype(dtype)
    # left multiplication by p permutes the basis, so c[p q] += a_p b_q row by row
    for p_index in np.flatnonzero(av):
        out[_left_row(n, int(p_index))] += int(av[p_index]) * bv
    perms = _all_perms(n)
    den = ad * bd
    return GroupAlgebraElement(
        n, {Permutation(tuple(perms[k] + 1)): Fraction(int(out[k]), den) for k in np.flatnonzero(out)}
    )


def block_product(*elements: GroupAlgebraElement) -> GroupAlgebraElement:
    """Tensor product a_1 x ... x a_k acting blockwise on consecutive slots."""
    out = {(): Fraction(1)}
    for e in elements:
        nxt: dict[tuple[int, ...], Fraction] = {}
        for images, x in out.items():
            shift = len(images)
            for p, y in e.terms.items():
                key = images + tuple(i + shift for i in p.images)
                nxt[key] = nxt.get(key, 0) + x * y
        out = nxt
    n = sum(e.n for e in elements)
    return GroupAlgebraElement(n, {Permutation(k): c for k, c in out.items()})


@lru_cache(maxsize=None)
def _compositions(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    if k == 1:
        return ((n,),) if n >= 1 else ()
    return tuple((first, *rest) for first in range(1, n - k + 2) for rest in _compositions(n - first, k - 1))


def compositions(n: int, k: int) -> list[tuple[int, ...]]:
    """Ordered ways of writing ``n`` as a sum of ``k`` positive parts."""
    if k < 1 or n < k:
        return []
    return list(_compositions(n, k))


def _check_degree(n: int) -> None:
    if n > MAX_DEGREE:
        raise ValueError(f"degree {n} exceeds the supported limit {MAX_DEGREE}")


@lru_cache(maxsize=None)
def _first_idempotent(n: int) -> GroupAlgebraElement:
    # weight-n part of log(1 + J) = sum_k (-1)^{k+1} J^{*k} / k
    total = GroupAlgebraElement.zero(n)
    for k in range(1, n + 1):
        coeff = Fraction((-1) ** (k + 1), k)
        for comp in compositions(n, k):
            total = total + shuffle_element(comp).scale(coeff)
    return total


@lru_cache(maxsize=None)
def _idempotent(n: int, i: int) -> GroupAlgebraElement:
    if i > n:
        return GroupAlgebraElement.zero(n)
    if i == 1:
        return _first_idempotent(n)
    # (e^(1))^{*i} at weight n: deconcatenate into i pieces, apply e^(1) to each, shuffle
    total = GroupAlgebraElement.zero(n)
    for comp in compositions(n, i):
        inner = block_product(*(_first_idempotent(m) for m in comp))
        total = total + ga_product(shuffle_element(comp), inner)
    return total.scale(Fraction(1, math.factorial(i)))


def eulerian_idempotent(n: int, i: int) -> GroupAlgebraElement:
    """The eulerian idempotent e_n^(i) in Q[S_n]; zero when i > n.

    >>> print(eulerian_idempotent(2, 1))
    1/2 * [1,2] + 1/2 * [2,1]
    """
    if n < 1 or i < 1:
        raise ValueError(f"need n >= 1 and i >= 1, got n={n}, i={i}")
    _check_degree(n)
    return _idempotent(n, i)


def eulerian_idempotents(n: int) -> list[GroupAlgebraElement]:
    return [eulerian_idempotent(n, i) for i in range(1, n + 1)]


def antisymmetrizer(n: int) -> GroupAlgebraElement:
    """(1/n!) sum of sgn(s) s over S_n."""
    c = Fraction(1, math.factorial(n))
    return GroupAlgebraElement(
        n, {Permutation(p): c * sign(Permutation(p)) for p in permutations(range(1, n + 1))}
    )
