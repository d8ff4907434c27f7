"""Command-line front end.

Exit codes: 0 success, 1 a check came out false, 2 bad usage or bad input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings

from .abgroups import AbelianGroup, GroupHom, quotient_by
from .classify import classify, invariant_vector
from .constructions import (
    DimensionFunction,
    building_block,
    catalog,
    catalog_labels,
    clifford_graded,
    endo_algebra,
    from_presentation,
    pauli_for_group,
    pauli_grading,
)
from .errors import (
    BadInput,
    FormatError,
    GradivError,
    InconsistentPresentation,
    NotDivision,
    NotDivisionCompatible,
    NotMonomial,
    NotSimple,
    NotSquareGroup,
    TooLarge,
    Unclassifiable,
)
from .fileio import dump_algebra, dump_map, load_map, load_presentation, read_algebra
from .galgebra import check_division_grading, coarsen, regrade, tensor_product, validate
from .isomaps import search_monomial_iso, verify_graded_map
from .labels import ClassLabel
from .scalars import Scalar

CHECK_FALSE = (NotDivision, NotSimple, Unclassifiable, NotMonomial)
BAD_INPUT = (FormatError, BadInput, InconsistentPresentation, NotSquareGroup, TooLarge)


class UsageError(Exception):
    pass


def _emit(args, text: str, obj: dict) -> None:
    if args.json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)


def _write_output(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}", path) from exc


def _parse_kappa(text: str, G: AbelianGroup) -> dict:
    """'0,0:2;1,0:1' -> {(0, 0): 2, (1, 0): 1}."""
    kappa = {}
    for part in filter(None, (p.strip() for p in text.split(";"))):
        rep, sep, count = part.partition(":")
        if not sep:
            raise FormatError(f"kappa entry {part!r} is not rep:count", "--kappa")
        try:
            kappa[G.parse_element(rep)] = int(count)
        except (ValueError, BadInput) as exc:
            raise FormatError(f"bad kappa entry {part!r}: {exc}", "--kappa") from exc
    if not kappa:
        raise FormatError("kappa is empty", "--kappa")
    return kappa


def _parse_elements(text: str, G: AbelianGroup, flag: str) -> list:
    try:
        return [G.parse_element(p) for p in text.split(";") if p.strip()]
    except (ValueError, BadInput) as exc:
        raise FormatError(f"bad element list {text!r}: {exc}", flag) from exc


# -- verbs ------------------------------------------------------------------------

def cmd_construct(args) -> int:
    kind = args.type
    if kind == "cgr":
        if args.p is None or args.m is None:
            raise UsageError("construct --type cgr needs --p and --m")
        R = clifford_graded((args.p, args.m))
    elif kind == "block":
        if not args.name:
            raise UsageError("construct --type block needs --name")
        R = building_block(args.name)
    elif kind == "catalog":
        if not args.label:
            raise UsageError("construct --type catalog needs --label, e.g. 'type=ix k=2'")
        R = catalog(ClassLabel.parse(args.label))
    elif kind == "pauli":
        if args.group:
            R = pauli_for_group(AbelianGroup.parse(args.group))
        elif args.H:
            R = pauli_grading(AbelianGroup.parse(args.H).orders)
        else:
            raise UsageError("construct --type pauli needs --H or --group")
    else:
        if not args.pres:
            raise UsageError("construct --type pres needs --pres FILE")
        R = from_presentation(load_presentation(_read_text(args.pres)))
    _write_output(args, dump_algebra(R))
    return 0


def cmd_validate(args) -> int:
    R = read_algebra(args.file)
    rep = validate(R)
    if rep.ok:
        _emit(args, "ok", {"ok": True, "support_is_subgroup": rep.support_is_subgroup})
        return 0
    _emit(args, "\n".join(rep.failures), {"ok": False, "failures": rep.failures, "witness": rep.witness})
    return 1


def cmd_invariants(args) -> int:
    R = read_algebra(args.file)
    div = check_division_grading(R)
    if not div.is_division:
        _emit(args, f"not a graded division algebra (identity component dim {div.re_dim})",
              {"is_division": False, "re_dim": div.re_dim})
        return 1
    inv = invariant_vector(R).as_dict()
    _emit(args, "\n".join(f"{k} = {v}" for k, v in inv.items()), inv)
    return 0


def cmd_classify(args) -> int:
    label = classify(read_algebra(args.file))
    _emit(args, str(label), {"label": str(label)})
    return 0


def cmd_tensor(args) -> int:
    _write_output(args, dump_algebra(tensor_product(read_algebra(args.a), read_algebra(args.b))))
    return 0


def cmd_coarsen(args) -> int:
    R = read_algebra(args.file)
    _, proj = quotient_by(R.group, _parse_elements(args.kill, R.group, "--kill"))
    _write_output(args, dump_algebra(coarsen(R, proj)))
    return 0


def cmd_iso_verify(args) -> int:
    A, B = read_algebra(args.a), read_algebra(args.b)
    f = load_map(_read_text(args.map), A, B)
    rep = verify_graded_map(A, B, f)
    if rep.ok:
        _emit(args, "ok", {"ok": True})
        return 0
    _emit(args, rep.failures[0], {"ok": False, "failure": rep.failures[0], "witness": rep.witness})
    return 1


def cmd_iso_search(args) -> int:
    A, B = read_algebra(args.a), read_algebra(args.b)
    if args.roots < 1:
        raise UsageError("--roots must be positive")
    N = math.lcm(A.conductor, B.conductor, 8, args.roots)
    scalars = [Scalar.root_of_unity(args.roots, k, N) for k in range(args.roots)]
    f = search_monomial_iso(A, B, scalars, jobs=args.jobs)
    if f is None:
        _emit(args, "not found", {"found": False})
        return 1
    text = dump_map(f, B)
    if args.output:
        _write_output(args, text)
        _emit(args, f"found; written to {args.output}", {"found": True, "alpha": [list(i) for i in f.alpha.images]})
    else:
        sys.stdout.write(text)
    return 0


def cmd_catalog(args) -> int:
    for L in catalog_labels(args.max_k):
        if args.check:
            R = catalog(L)
            ok = bool(validate(R)) and check_division_grading(R).is_division and classify(R) == L
            _emit(args, f"{L}\tdim {R.dim}\tgroup {R.group}\t{'ok' if ok else 'FAILED'}",
                  {"label": str(L), "dim": R.dim, "group": list(R.group.orders), "ok": ok})
            if not ok:
                return 1
        else:
            _emit(args, str(L), {"label": str(L)})
    return 0


def cmd_endo(args) -> int:
    D = read_algebra(args.file)
    if args.extend:
        extra = AbelianGroup.parse(args.extend).orders
        G = AbelianGroup(D.group.orders + extra)
        images = tuple(tuple(int(i == j) for j in range(G.rank)) for i in range(D.group.rank))
        D = regrade(D, GroupHom(D.group, G, images), D.name)
    M = endo_algebra(DimensionFunction(D, _parse_kappa(args.kappa, D.group)))
    _write_output(args, dump_algebra(M))
    return 0


def cmd_selftest(args) -> int:
    from .acceptance import run_all

    if args.json:
        results = run_all(report=lambda line: None)
        for r in results:
            print(json.dumps({"criterion": r.number, "name": r.name, "passed": r.passed,
                              "detail": r.detail, "seconds": round(r.seconds, 3)}, sort_keys=True))
    else:
        results = run_all()
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output, one JSON object per line")
    common.add_argument("-o", "--output", help="write the produced file here instead of standard output")

    parser = argparse.ArgumentParser(prog="gradiv", description="Real graded division algebras: build, check, classify.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("construct", parents=[common], help="build an algebra and write it as galg/1")
    p.add_argument("--type", required=True, choices=["cgr", "block", "catalog", "pauli", "pres"])
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--name", help="building block name, e.g. M2_8")
    p.add_argument("--label", help="catalog label, e.g. 'type=ix k=2' or 'type=xiii H=2,2'")
    p.add_argument("--H", help="factor orders of H for a Pauli grading by H x H")
    p.add_argument("--group", help="grading group G = H x H for a Pauli grading")
    p.add_argument("--pres", help="pres/1 file")
    p.set_defaults(func=cmd_construct)

    for verb, func, text in [
        ("validate", cmd_validate, "check associativity, unit and grading"),
        ("invariants", cmd_invariants, "print the separating invariants"),
        ("classify", cmd_classify, "print the type label"),
    ]:
        p = sub.add_parser(verb, parents=[common], help=text)
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("tensor", parents=[common], help="graded tensor product of two algebras")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("coarsen", parents=[common], help="factor-grading by the subgroup generated by --kill")
    p.add_argument("file")
    p.add_argument("--kill", required=True, help="elements separated by ';', e.g. '0,1;2,0'")
    p.set_defaults(func=cmd_coarsen)

    p = sub.add_parser("iso-verify", parents=[common], help="check a gmap/1 graded map between two algebras")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("map")
    p.set_defaults(func=cmd_iso_verify)

    p = sub.add_parser("iso-search", parents=[common], help="search for a monomial weak isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--roots", type=int, default=8, help="use the n-th roots of unity as frame scalars (default 8)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_iso_search)

    p = sub.add_parser("catalog", parents=[common], help="list the catalog labels")
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--check", action="store_true", help="build, validate and classify every entry")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("endo", parents=[common], help="build M(D, kappa) from a division algebra D")
    p.add_argument("file")
    p.add_argument("--kappa", required=True, help="coset representatives with multiplicities, e.g. '0,0:2;1,0:1'")
    p.add_argument("--extend", help="append cyclic factors to D's group first, e.g. '3'")
    p.set_defaults(func=cmd_endo)

    p = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NotDivisionCompatible)
            return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except FormatError as exc:
        where = f" (field {exc.field})" if exc.field else ""
        print(f"error{where}: {exc}", file=sys.stderr)
        return 2
    except BAD_INPUT as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CHECK_FALSE as exc:
        _emit(args, f"no: {exc}", {"ok": False, "reason": str(exc), "error": type(exc).__name__})
        return 1
    except GradivError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
