"""Command-line front end.

Commands map one-to-one onto the library surface: ``minima``, ``check``,
``standardize``, ``reduce2d``, ``family``, ``nearest``.  Input is a small
JSON object ({"dim": n, "basis": [[...], ...], "norm": "l2"}) or plain text
(first line the dimension, then the rows); output is deterministic human
text, or full structured certificates with --json.

Exit codes: 0 success/Standard, 2 input error, 3 NonStandard verdict,
4 resource ceiling, 5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .cvp import equality_case_analyze, nearest_plane
from .enumeration import (
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_DIM,
    SuccessiveMinima,
    successive_minima,
)
from .errors import (
    DimensionMismatchError,
    InputError,
    InternalConsistencyError,
    LatticeError,
    ResourceLimitError,
    StructuralError,
)
from .exactlin import LatticeBasis, determinant
from .families import verify_family
from .norm2d import reduce_2d
from .norms import NormKind, measure
from .standardness import Verdict, check_standard, standardize_low_dim

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NON_STANDARD = 3
EXIT_RESOURCE = 4
EXIT_INTERNAL = 5

_NORM_NAMES = {kind.value: kind for kind in NormKind}


def _parse_json_basis(data) -> tuple[LatticeBasis, NormKind | None]:
    if not isinstance(data, dict):
        raise InputError("top-level JSON value must be an object")
    try:
        dim = data["dim"]
        rows = data["basis"]
    except KeyError as exc:
        raise InputError(f"missing required key {exc}") from exc
    if not isinstance(dim, int) or dim < 1:
        raise InputError("'dim' must be a positive integer")
    if not isinstance(rows, list) or len(rows) != dim:
        raise InputError(f"'basis' must be a list of {dim} rows")
    for row in rows:
        if not isinstance(row, list) or len(row) != dim:
            raise InputError(f"every basis row must have {dim} entries")
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"basis entries must be integers, got {x!r}")
    kind = None
    if "norm" in data:
        name = data["norm"]
        if name not in _NORM_NAMES:
            raise InputError(f"unknown norm {name!r}; expected one of l1, l2, linf")
        kind = _NORM_NAMES[name]
    return LatticeBasis(rows), kind


def _parse_text_basis(text: str) -> tuple[LatticeBasis, NormKind | None]:
    tokens = text.split()
    if not tokens:
        raise InputError("empty basis file")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise InputError(f"plain-text basis files contain integers only: {exc}") from exc
    dim = values[0]
    if dim < 1:
        raise InputError("dimension must be a positive integer")
    if len(values) != 1 + dim * dim:
        raise InputError(
            f"expected {dim * dim} entries after the dimension, got {len(values) - 1}"
        )
    rows = [values[1 + i * dim : 1 + (i + 1) * dim] for i in range(dim)]
    return LatticeBasis(rows), None


def load_basis_file(path: str) -> tuple[LatticeBasis, NormKind | None]:
    """Parse a basis file (JSON object or plain text)."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid JSON in {path}: {exc}") from exc
        return _parse_json_basis(data)
    return _parse_text_basis(text)


def _resolve_kind(flag_value: str | None, file_kind: NormKind | None) -> NormKind:
    if flag_value is not None:
        return _NORM_NAMES[flag_value]
    if file_kind is not None:
        return file_kind
    return NormKind.L2


def _jnum(x):
    """Exact JSON rendering: integers stay integers, other rationals become
    'p/q' strings."""
    f = Fraction(x)
    if f.denominator == 1:
        return int(f)
    return f"{f.numerator}/{f.denominator}"


def _fmt(x) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def _minima_label(kind: NormKind) -> str:
    return "λ²" if kind is NormKind.L2 else "λ"


def _minima_json(sm: SuccessiveMinima) -> dict:
    return {
        "norm": sm.kind.value,
        "squared": sm.kind is NormKind.L2,
        "values": [_jnum(nv.value) for nv in sm.minima],
        "witnesses": [list(w) for w in sm.witnesses],
    }


def _print_minima_text(sm: SuccessiveMinima) -> None:
    label = _minima_label(sm.kind)
    values = ", ".join(_fmt(nv.value) for nv in sm.minima)
    print(f"{label} = [{values}]")
    for i, w in enumerate(sm.witnesses):
        print(f"witness {i + 1}: {list(w)}  {label} = {_fmt(sm.minima[i].value)}")


def _emit(args, payload: dict, text_printer) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True, indent=2))
    else:
        text_printer()


def cmd_minima(args) -> int:
    basis, file_kind = load_basis_file(args.file)
    kind = _resolve_kind(args.norm, file_kind)
    sm = successive_minima(
        basis, kind, max_candidates=args.max_candidates, max_dim=args.max_dim
    )
    payload = {"command": "minima", "dim": basis.dim, "minima": _minima_json(sm)}

    def text():
        print(f"dim: {basis.dim}")
        print(f"norm: {kind.value}")
        _print_minima_text(sm)

    _emit(args, payload, text)
    return EXIT_OK


def cmd_check(args) -> int:
    basis, file_kind = load_basis_file(args.file)
    kind = _resolve_kind(args.norm, file_kind)
    cert = check_standard(
        basis, kind, max_candidates=args.max_candidates, max_dim=args.max_dim
    )
    payload = {
        "command": "check",
        "dim": basis.dim,
        "verdict": cert.verdict.value,
        "basis": [list(r) for r in cert.basis] if cert.basis is not None else None,
        "minima": _minima_json(cert.minima),
        "search_stats": {
            "level_candidates": list(cert.stats.level_candidates),
            "nodes_explored": cert.stats.nodes_explored,
        },
    }

    def text():
        print(f"dim: {basis.dim}")
        print(f"norm: {kind.value}")
        print(f"verdict: {cert.verdict.value}")
        _print_minima_text(cert.minima)
        if cert.basis is not None:
            for i, row in enumerate(cert.basis):
                print(f"basis {i + 1}: {list(row)}")
        print(
            f"search: candidates per level {list(cert.stats.level_candidates)}, "
            f"nodes {cert.stats.nodes_explored}"
        )

    _emit(args, payload, text)
    return EXIT_OK if cert.verdict is Verdict.STANDARD else EXIT_NON_STANDARD


def cmd_standardize(args) -> int:
    basis, _ = load_basis_file(args.file)
    rows = standardize_low_dim(basis, max_candidates=args.max_candidates)
    norms = [measure(r, NormKind.L2).value for r in rows]
    payload = {
        "command": "standardize",
        "dim": basis.dim,
        "basis": [list(r) for r in rows],
        "squared_norms": [_jnum(v) for v in norms],
        "determinant": determinant(basis),
    }

    def text():
        print(f"dim: {basis.dim}")
        for i, row in enumerate(rows):
            print(f"basis {i + 1}: {list(row)}  λ² = {_fmt(norms[i])}")
        print(f"determinant: {determinant(basis)}")

    _emit(args, payload, text)
    return EXIT_OK


def cmd_reduce2d(args) -> int:
    basis, file_kind = load_basis_file(args.file)
    kind = _resolve_kind(args.norm, file_kind)
    red = reduce_2d(basis, kind, max_candidates=args.max_candidates)
    label = _minima_label(kind)
    payload = {
        "command": "reduce2d",
        "norm": kind.value,
        "squared": kind is NormKind.L2,
        "basis": [list(red.b1), list(red.b2)],
        "norms": [_jnum(red.norms[0].value), _jnum(red.norms[1].value)],
    }

    def text():
        print(f"norm: {kind.value}")
        print(f"b1: {list(red.b1)}  {label} = {_fmt(red.norms[0].value)}")
        print(f"b2: {list(red.b2)}  {label} = {_fmt(red.norms[1].value)}")

    _emit(args, payload, text)
    return EXIT_OK


def cmd_family(args) -> int:
    kind = _NORM_NAMES[args.norm] if args.norm is not None else NormKind.L2
    report = verify_family(
        args.n, kind, max_candidates=args.max_candidates, max_dim=args.max_dim
    )
    arg = report.parity_argument
    cert = report.certificate
    payload = {
        "command": "family",
        "n": report.n,
        "norm": kind.value,
        "verdict": report.verdict.value,
        "minima": _minima_json(report.minima),
        "parity_argument": {
            "odd_coset_min": _jnum(arg.odd_coset_min.value),
            "even_coset_min": _jnum(arg.even_coset_min.value),
            "covolume": arg.covolume,
            "even_tuple_divisor": arg.even_tuple_divisor,
            "forces_odd_vector": arg.forces_odd_vector,
            "consistent": arg.consistent,
        },
        "certificate": {
            "basis": [list(r) for r in cert.basis] if cert.basis is not None else None,
            "search_stats": {
                "level_candidates": list(cert.stats.level_candidates),
                "nodes_explored": cert.stats.nodes_explored,
            },
        },
    }

    def text():
        print(f"parity lattice n = {report.n}, norm: {kind.value}")
        print(f"verdict: {report.verdict.value}")
        _print_minima_text(report.minima)
        label = _minima_label(kind)
        print(f"odd-coset minimum  {label} = {_fmt(arg.odd_coset_min.value)}")
        print(f"even-coset minimum {label} = {_fmt(arg.even_coset_min.value)}")
        print(
            f"covolume {arg.covolume}; any all-even n-tuple has determinant divisible by "
            f"{arg.even_tuple_divisor}; forces an odd vector in every basis: "
            f"{arg.forces_odd_vector}"
        )
        print(f"parity argument consistent with verdict: {arg.consistent}")

    _emit(args, payload, text)
    return EXIT_OK if report.verdict is Verdict.STANDARD else EXIT_NON_STANDARD


def _parse_rational(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational coordinate {token!r}: {exc}") from exc


def cmd_nearest(args) -> int:
    basis, _ = load_basis_file(args.file)
    point = [_parse_rational(tok) for tok in args.point]
    if len(point) != basis.dim:
        raise InputError(f"expected {basis.dim} coordinates, got {len(point)}")
    res = nearest_plane(basis, point)
    eq = equality_case_analyze(basis, point)
    payload = {
        "command": "nearest",
        "target": [_jnum(x) for x in point],
        "point": list(res.point),
        "coeffs": list(res.coeffs),
        "dist_sq": _jnum(res.dist_sq),
        "bound_sq": _jnum(res.bound_sq),
        "at_equality": res.at_equality,
        "equality_conditions": {
            "orthogonal": eq.orthogonal,
            "equal_norms": eq.equal_norms,
            "half_integer_coefficients": eq.half_integer_coefficients,
        },
    }

    def text():
        print(f"target: [{', '.join(_fmt(x) for x in point)}]")
        print(f"nearest point: {list(res.point)}")
        print(f"coefficients: {list(res.coeffs)}")
        print(f"dist² = {_fmt(res.dist_sq)}")
        print(f"bound² = {_fmt(res.bound_sq)}")
        print(f"at_equality: {res.at_equality}")
        print(
            f"equality conditions: orthogonal={eq.orthogonal}, "
            f"equal_norms={eq.equal_norms}, "
            f"half_integer_coefficients={eq.half_integer_coefficients}"
        )

    _emit(args, payload, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stdlattice",
        description="Exact successive minima, standardness certificates, and "
        "reduction for integer lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, norm_flag: bool = True) -> None:
        if norm_flag:
            p.add_argument("--norm", choices=sorted(_NORM_NAMES), default=None)
        p.add_argument("--json", action="store_true")
        p.add_argument("--max-candidates", type=int, default=DEFAULT_MAX_CANDIDATES)
        p.add_argument("--max-dim", type=int, default=DEFAULT_MAX_DIM)

    p = sub.add_parser("minima", help="successive minima with witnesses")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_minima)

    p = sub.add_parser("check", help="decide standardness with a certificate")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("standardize", help="minima-achieving basis (dim <= 4, L2)")
    p.add_argument("file")
    common(p, norm_flag=False)
    p.set_defaults(func=cmd_standardize)

    p = sub.add_parser("reduce2d", help="reduce a 2D basis under any built-in norm")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_reduce2d)

    p = sub.add_parser("family", help="verify the dimension-n parity lattice")
    p.add_argument("n", type=int)
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("nearest", help="nearest-plane point for a rational target")
    p.add_argument("file")
    p.add_argument("point", nargs="+", help="coordinates, integers or p/q")
    common(p, norm_flag=False)
    p.set_defaults(func=cmd_nearest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse already printed a usage message; fold into the input-error
        # exit class unless this was --help.
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, StructuralError, DimensionMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except InternalConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except LatticeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
