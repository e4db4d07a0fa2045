"""Command-line entry point.

Exit codes: 0 success, 1 domain failure (invalid algebra, failed check,
violated precondition, size cap), 2 unreadable input, 3 obstruction.
Algebra arguments are JSON files or ``builtin:NAME[:M]``.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Sequence

from . import __version__
from .algebras import StructureAlgebra, builtin, validate
from .complexes import DEFAULT_CAP, HarrisonWitness, ResourceCapError, barr_decomposition_check, cohomology, homology
from .deform import (
    ObstructionReport,
    PreconditionError,
    extend_deformation,
    maurer_cartan_check,
    order_associator,
)
from .formats import (
    FormatError,
    StructureMismatchError,
    algebra_from_doc,
    algebra_to_doc,
    cochain_from_doc,
    dumps,
    load_json,
    star_from_doc,
    star_to_doc,
)
from .symgrp import MAX_DEGREE, GroupAlgebraElement, eulerian_idempotent

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_OBSTRUCTED = 0, 1, 2, 3
CAP_ENV = "HARRISON_CAP"


class CommandError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def default_cap() -> int:
    raw = os.environ.get(CAP_ENV)
    if not raw:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CommandError(f"{CAP_ENV}={raw!r} is not an integer", EXIT_PARSE) from None
    if cap < 1:
        raise CommandError(f"{CAP_ENV} must be positive", EXIT_PARSE)
    return cap


def load_algebra(spec: str) -> StructureAlgebra:
    if spec.startswith("builtin:"):
        name, _, param = spec[len("builtin:"):].partition(":")
        try:
            return builtin(name, int(param) if param else None)
        except ValueError as err:
            raise CommandError(str(err), EXIT_PARSE) from None
    try:
        return algebra_from_doc(load_json(spec))
    except OSError as err:
        raise CommandError(f"cannot read {spec}: {err.strerror}", EXIT_PARSE) from None
    except (FormatError, ValueError) as err:
        raise CommandError(f"{spec}: {err}", EXIT_PARSE) from None


def _valid_algebra(spec: str) -> StructureAlgebra:
    a = load_algebra(spec)
    report = validate(a)
    if not report.ok:
        raise CommandError(f"{spec} is not a commutative unital associative algebra: {report.violations[0]}", EXIT_FAIL)
    return a


def _flag(b: bool) -> str:
    return "true" if b else "false"


def _names(a: StructureAlgebra, t) -> str:
    return ",".join(a.basis_names[i] for i in t)


# ---------------------------------------------------------------- commands


def cmd_validate(args) -> int:
    a = load_algebra(args.algebra)
    report = validate(a)
    if args.machine:
        print(f"valid={_flag(report.ok)}")
        print(f"violations={len(report.violations)}")
        for v in report.violations:
            print(f"violation law={v.law} indices={','.join(map(str, v.indices))}")
    elif report.ok:
        print(f"{args.algebra}: valid (dim {a.dim})")
    else:
        for v in report.violations:
            print(v)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_export(args) -> int:
    a = load_algebra(args.algebra)
    sys.stdout.write(dumps(algebra_to_doc(a)))
    return EXIT_OK


def cmd_idempotents(args) -> int:
    n = args.n
    if n < 1 or n > MAX_DEGREE:
        raise CommandError(f"n must lie in 1..{MAX_DEGREE}", EXIT_FAIL)
    indices = [args.i] if args.i is not None else list(range(1, n + 1))
    if any(i < 1 for i in indices):
        raise CommandError("i must be positive", EXIT_FAIL)
    elements = [eulerian_idempotent(n, i) for i in indices]
    for i, e in zip(indices, elements):
        print(f"n={n} i={i} element={e}" if args.machine else str(e))
    if args.i is None:
        total = GroupAlgebraElement.zero(n)
        for e in elements:
            total = total + e
        ok = total == GroupAlgebraElement.identity(n)
        print(f"partition_of_unity={_flag(ok)}" if args.machine else f"# sum = {total}")
        return EXIT_OK if ok else EXIT_FAIL
    return EXIT_OK


def _degrees(args, lowest: int) -> range:
    lo = lowest if args.min_degree is None else max(args.min_degree, lowest)
    return range(lo, args.max_degree + 1)


def cmd_cohomology(args) -> int:
    a = _valid_algebra(args.algebra)
    lowest = 1 if args.variant == "harrison" else 0
    if not args.machine:
        print(f"{'degree':>6} {'cochains':>9} {'cocycles':>9} {'cobound.':>9} {'betti':>6}")
    for n in _degrees(args, lowest):
        r = cohomology(a, None, n, args.variant, cap=args.cap, representatives=args.representatives)
        if args.machine:
            print(
                f"degree={n} variant={args.variant} cochains={r.dim_cochains} cocycles={r.dim_cocycles} "
                f"coboundaries={r.dim_coboundaries} betti={r.betti}"
            )
        else:
            print(f"{n:>6} {r.dim_cochains:>9} {r.dim_cocycles:>9} {r.dim_coboundaries:>9} {r.betti:>6}")
        for k, rep in enumerate(r.representatives):
            entries = ";".join(
                f"{_names(a, t)}->{'+'.join(f'{x}*{a.basis_names[j]}' for j, x in enumerate(v) if x)}"
                for t, v in rep.nonzero_entries()
            )
            print(f"representative degree={n} index={k} {entries}" if args.machine else f"    [{k}] {entries}")
    return EXIT_OK


def cmd_homology(args) -> int:
    a = _valid_algebra(args.algebra)
    if not args.machine:
        print(f"{'degree':>6} {'chains':>7} {'cycles':>7} {'bound.':>7} {'betti':>6}")
    for n in _degrees(args, 0):
        r = homology(a, n, args.variant, args.presentation, cap=args.cap)
        if args.machine:
            pres = f" presentation={r.presentation}" if r.presentation else ""
            print(
                f"degree={n} variant={args.variant}{pres} chains={r.dim_chains} cycles={r.dim_cycles} "
                f"boundaries={r.dim_boundaries} betti={r.betti}"
            )
        else:
            print(f"{n:>6} {r.dim_chains:>7} {r.dim_cycles:>7} {r.dim_boundaries:>7} {r.betti:>6}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    a = _valid_algebra(args.algebra)
    ok = True
    for n in _degrees(args, 2):
        r = barr_decomposition_check(a, n, cap=args.cap)
        ok &= r.ok
        if args.machine:
            print(
                f"degree={n} chains={r.dim_chains} shuffles={r.dim_shuffles} eulerian={r.dim_eulerian} "
                f"intersection={r.dim_intersection} sum={r.dim_sum} "
                f"shuffles_equal_complement={_flag(r.shuffles_equal_complement)} ok={_flag(r.ok)}"
            )
        else:
            verdict = "direct sum" if r.ok else "FAILED"
            print(
                f"degree {n}: C = I.I ({r.dim_shuffles}) + e1 C ({r.dim_eulerian}) of {r.dim_chains}, "
                f"intersection {r.dim_intersection}: {verdict}"
            )
    return EXIT_OK if ok else EXIT_FAIL


def _print_obstruction(rep: ObstructionReport, machine: bool) -> None:
    group = "Harr3" if rep.mode == "commutative" else "HH3"
    if machine:
        print(
            f"obstructed=true order={rep.order} mode={rep.mode} is_cocycle={_flag(rep.is_cocycle)} "
            f"is_harrison={_flag(rep.is_harrison)} class_nonzero={_flag(rep.cohomology_class_nonzero)} group={group}"
        )
    else:
        print(
            f"obstruction at order {rep.order}: the class of A'_{rep.order} in {group} is nonzero "
            f"(cocycle: {rep.is_cocycle}, Harrison: {rep.is_harrison})"
        )


def cmd_deform(args) -> int:
    a = _valid_algebra(args.algebra)
    try:
        seed = cochain_from_doc(a, load_json(args.seed))
    except OSError as err:
        raise CommandError(f"cannot read {args.seed}: {err.strerror}", EXIT_PARSE) from None
    except FormatError as err:
        raise CommandError(f"{args.seed}: {err}", EXIT_PARSE) from None
    try:
        result = extend_deformation(a, seed, args.order, args.mode)
    except PreconditionError as err:
        t = err.witness.args if isinstance(err.witness, HarrisonWitness) else err.witness
        witness = f" witness={_names(a, t)}" if isinstance(t, tuple) else ""
        raise CommandError(f"precondition failed: {err}{witness}", EXIT_FAIL) from None
    if isinstance(result, ObstructionReport):
        _print_obstruction(result, args.machine)
        return EXIT_OBSTRUCTED
    text = dumps(star_to_doc(result))
    if args.output:
        Path(args.output).write_text(text)
        print(f"order={result.order} written={args.output}" if args.machine else f"wrote order-{result.order} star product to {args.output}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    a = _valid_algebra(args.algebra)
    try:
        s = star_from_doc(a, load_json(args.star))
    except OSError as err:
        raise CommandError(f"cannot read {args.star}: {err.strerror}", EXIT_PARSE) from None
    except StructureMismatchError as err:
        raise CommandError(str(err), EXIT_FAIL) from None
    except FormatError as err:
        raise CommandError(f"{args.star}: {err}", EXIT_PARSE) from None
    mc = maurer_cartan_check(s)
    ok = True
    first_failure = None
    for n in range(s.order + 1):
        assoc = order_associator(s, n)
        entries = assoc.nonzero_entries()
        associative = not entries
        symmetric = s.terms[n].is_symmetric()
        consistent = mc[n].vanishes == associative
        ok &= associative and symmetric and consistent
        if not associative and first_failure is None:
            first_failure = (n, entries[0][0])
        witness = f" witness={_names(a, entries[0][0])}" if entries else ""
        if args.machine:
            print(
                f"order={n} associative={_flag(associative)} symmetric={_flag(symmetric)} "
                f"maurer_cartan={_flag(mc[n].vanishes)} consistent={_flag(consistent)}{witness}"
            )
        else:
            print(
                f"order {n}: associative {associative}, symmetric {symmetric}, "
                f"Maurer-Cartan {mc[n].vanishes}{witness}"
            )
    if first_failure is not None:
        n, t = first_failure
        print(f"first_failing_order={n} witness={_names(a, t)}" if args.machine else f"first failing order: {n} at ({_names(a, t)})")
    return EXIT_OK if ok else EXIT_FAIL


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="harrison", description="Hochschild/Harrison (co)homology and commutative deformations over Q.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--machine", action="store_true", help="line-oriented key=value output")
    common.add_argument("--cap", type=int, default=None, help=f"maximum number of basis tuples per space (default {DEFAULT_CAP}, env {CAP_ENV})")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check the algebra axioms")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("export", parents=[common], help="print an algebra (e.g. a builtin) as JSON")
    s.add_argument("algebra")
    s.set_defaults(func=cmd_export)

    s = sub.add_parser("idempotents", parents=[common], help="eulerian idempotents e_n^(i)")
    s.add_argument("n", type=int)
    s.add_argument("-i", "--i", type=int, default=None, dest="i")
    s.set_defaults(func=cmd_idempotents)

    for name, func, variants, text in (
        ("cohomology", cmd_cohomology, ("hochschild", "harrison"), "betti numbers of HH^n(A,A) or Harr^n(A,A)"),
        ("homology", cmd_homology, ("hochschild", "harrison"), "betti numbers of HH_n(A) or Harr_n(A)"),
        ("decompose", cmd_decompose, None, "check C_n = shuffles + e^(1) C_n as a direct sum"),
    ):
        s = sub.add_parser(name, parents=[common], help=text)
        s.add_argument("algebra")
        s.add_argument("--max-degree", type=int, default=3)
        s.add_argument("--min-degree", type=int, default=None)
        if variants:
            s.add_argument("--variant", choices=variants, default="hochschild")
        if name == "cohomology":
            s.add_argument("--representatives", action="store_true")
        if name == "homology":
            s.add_argument("--presentation", choices=("quotient", "eulerian"), default="quotient")
        s.set_defaults(func=func)

    s = sub.add_parser("deform", parents=[common], help="extend a seed 2-cocycle order by order")
    s.add_argument("algebra")
    s.add_argument("seed")
    s.add_argument("--order", type=int, default=2)
    s.add_argument("--mode", choices=("commutative", "associative"), default="commutative")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_deform)

    s = sub.add_parser("verify", parents=[common], help="check a star product order by order")
    s.add_argument("algebra")
    s.add_argument("star")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.cap is None:
            args.cap = default_cap()
        if args.cap < 1:
            raise CommandError("--cap must be positive", EXIT_PARSE)
        if getattr(args, "order", 1) < 1:
            raise CommandError("--order must be positive", EXIT_PARSE)
        return args.func(args)
    except CommandError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except ResourceCapError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
