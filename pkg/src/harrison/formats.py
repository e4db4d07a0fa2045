"""JSON documents for algebras, cochains and star products.

Rationals are written as strings ``"p/q"`` (or plain integers) in lowest
terms.  Output is deterministic: entries are emitted in lexicographic basis
order and keys in a fixed order.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebras import StructureAlgebra
from .complexes import Cochain
from .deform import StarTruncation
from .symgrp import GroupAlgebraElement

__all__ = [
    "FormatError",
    "StructureMismatchError",
    "parse_rational",
    "format_rational",
    "algebra_from_doc",
    "algebra_to_doc",
    "cochain_from_doc",
    "cochain_to_doc",
    "star_from_doc",
    "star_to_doc",
    "load_json",
    "dumps",
    "format_element",
]


class FormatError(ValueError):
    """Malformed input document."""


class StructureMismatchError(ValueError):
    """A well-formed document that disagrees with the algebra it is read against."""


def parse_rational(x: Any) -> Fraction:
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise FormatError(f"rational literal must be an integer or a 'p/q' string, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    s = x.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise FormatError(f"bad rational literal {x!r}") from None
    if q == 0:
        raise FormatError(f"zero denominator in {x!r}")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def format_element(e: GroupAlgebraElement) -> str:
    """``coefficient * [one-line]`` terms joined by `` + ``, sorted by one-line notation."""
    return str(e)


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2) + "\n"


def load_json(path: str | Path) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except json.JSONDecodeError as err:
        raise FormatError(f"not valid JSON ({err})") from None


def _require(doc: dict, key: str, kind: type | tuple[type, ...]) -> Any:
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(f"field {key!r} has the wrong type")
    return value


def _vector(a: StructureAlgebra, terms: Any) -> list[Fraction]:
    if not isinstance(terms, list):
        raise FormatError("a value must be a list of {basis, coeff} entries")
    v = [Fraction(0)] * a.dim
    for term in terms:
        name = _require(term, "basis", str)
        try:
            i = a.index(name)
        except KeyError as err:
            raise FormatError(str(err)) from None
        v[i] += parse_rational(term.get("coeff", 1))
    return v


def _terms(a: StructureAlgebra, v) -> list[dict[str, str]]:
    return [{"basis": a.basis_names[k], "coeff": format_rational(x)} for k, x in enumerate(v) if x]


def algebra_from_doc(doc: Any) -> StructureAlgebra:
    dim = _require(doc, "dim", int)
    basis = _require(doc, "basis", list)
    unit = _require(doc, "unit", str)
    if len(basis) != dim or not all(isinstance(b, str) for b in basis):
        raise FormatError(f"basis must list {dim} names")
    if len(set(basis)) != dim:
        raise FormatError("basis names must be distinct")
    if unit not in basis:
        raise FormatError(f"unit {unit!r} is not a basis name")
    zero = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    shell = StructureAlgebra(dim, tuple(basis), zero, basis.index(unit))
    c = zero
    for entry in doc.get("products", []):
        lhs = _require(entry, "lhs", str)
        rhs = _require(entry, "rhs", str)
        if lhs not in basis or rhs not in basis:
            raise FormatError(f"product {lhs}*{rhs} names an unknown basis element")
        i, j = basis.index(lhs), basis.index(rhs)
        result = _vector(shell, entry.get("result", []))
        c[i][j] = [x + y for x, y in zip(c[i][j], result)]
    return StructureAlgebra(dim, tuple(basis), c, basis.index(unit))


def algebra_to_doc(a: StructureAlgebra) -> dict:
    products = []
    for i in range(a.dim):
        for j in range(a.dim):
            result = _terms(a, a.structure[i][j])
            if result:
                products.append({"lhs": a.basis_names[i], "rhs": a.basis_names[j], "result": result})
    return {
        "dim": a.dim,
        "basis": list(a.basis_names),
        "unit": a.basis_names[a.unit_index],
        "products": products,
    }


def cochain_from_doc(a: StructureAlgebra, doc: Any) -> Cochain:
    arity = _require(doc, "arity", int)
    if arity < 0:
        raise FormatError("arity must be non-negative")
    module = doc.get("module", "A")
    if module != "A":
        raise FormatError(f"only cochains with values in the algebra ('A') are supported, got {module!r}")
    entries: dict[tuple[int, ...], list[Fraction]] = {}
    for entry in doc.get("entries", []):
        args = _require(entry, "args", list)
        if len(args) != arity:
            raise FormatError(f"entry {args} does not have {arity} arguments")
        try:
            t = tuple(a.index(n) for n in args)
        except (KeyError, TypeError) as err:
            raise FormatError(f"bad arguments {args}: {err}") from None
        value = _vector(a, entry.get("value", []))
        old = entries.get(t, [Fraction(0)] * a.dim)
        entries[t] = [x + y for x, y in zip(old, value)]
    return Cochain.from_entries(a, arity, entries)


def cochain_to_doc(f: Cochain) -> dict:
    a = f.algebra
    return {
        "arity": f.arity,
        "module": "A",
        "entries": [
            {"args": [a.basis_names[i] for i in t], "value": _terms(a, v)} for t, v in f.nonzero_entries()
        ],
    }


def star_from_doc(a: StructureAlgebra, doc: Any) -> StarTruncation:
    order = _require(doc, "order", int)
    terms = _require(doc, "terms", list)
    if len(terms) != order + 1:
        raise FormatError(f"order {order} needs {order + 1} terms, got {len(terms)}")
    cochains = []
    for t in terms:
        if t == "structure":
            cochains.append(Cochain.multiplication(a))
            continue
        f = cochain_from_doc(a, t)
        if f.arity != 2:
            raise FormatError("star product terms must have arity 2")
        cochains.append(f)
    if cochains[0] != Cochain.multiplication(a):
        raise StructureMismatchError("mu_0 in the star product file differs from the algebra multiplication")
    return StarTruncation(a, tuple(cochains))


def star_to_doc(s: StarTruncation) -> dict:
    return {"order": s.order, "terms": ["structure"] + [cochain_to_doc(t) for t in s.terms[1:]]}
