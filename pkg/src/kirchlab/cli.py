"""Command-line interface.

Commands: transform, resist, kirchhoff, verify, audit.  Exit codes: 0 on
success, 1 when a verification or self-check misses its tolerance, 2 on bad
input or usage.  Every option can also be set through an environment
variable named KLAB_<OPTION> (KLAB_KIND, KLAB_FORMAT, KLAB_TOL, KLAB_SEED,
KLAB_COUNT, KLAB_N_MAX, KLAB_P); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from typing import Callable, Sequence

from .graph import DisconnectedGraphError, GraphError, parse_edge_list, render_edge_list
from .linalg import SingularMatrixError
from .oracle import oracle_kirchhoff
from .structured import build_structured_inverse, kirchhoff, resistance_matrix
from .transforms import TransformKind, apply_transform
from .verify import audit_theorems, run_corpus

ENV_PREFIX = "KLAB_"

_DEFAULTS = {
    "kind": "quad",
    "format": "json",
    "tol": 1e-8,
    "seed": 0,
    "count": 100,
    "n_max": 10,
    "p": 0.5,
}


class UsageError(Exception):
    """Bad flag or environment value; maps to exit code 2."""


def _resolve(args: argparse.Namespace, name: str, cast: Callable):
    """Flag if given, else KLAB_ environment variable, else built-in default."""
    value = getattr(args, name)
    if value is not None:
        return value
    raw = os.environ.get(ENV_PREFIX + name.upper())
    if raw is None:
        return _DEFAULTS[name]
    try:
        return cast(raw)
    except (ValueError, KeyError):
        raise UsageError(
            f"invalid value {raw!r} for {ENV_PREFIX}{name.upper()}"
        ) from None


def _cast_kind(raw: str) -> TransformKind:
    return TransformKind(raw)


def _resolve_kind(args: argparse.Namespace, allow_none: bool = False):
    value = getattr(args, "kind")
    if value is None:
        raw = os.environ.get(ENV_PREFIX + "KIND")
        value = raw if raw is not None else _DEFAULTS["kind"]
    if value == "none":
        if allow_none:
            return None
        raise UsageError("kind 'none' is not valid for this command")
    try:
        return TransformKind(value)
    except ValueError:
        raise UsageError(f"invalid kind {value!r}") from None


def _resolve_format(args: argparse.Namespace, matrix_output: bool) -> str:
    fmt = getattr(args, "format", None)
    if fmt is None:
        fmt = os.environ.get(ENV_PREFIX + "FORMAT", _DEFAULTS["format"])
    if fmt not in ("json", "csv", "plain"):
        raise UsageError(f"invalid format {fmt!r}")
    if fmt == "csv" and not matrix_output:
        raise UsageError("csv format is only valid for matrix outputs")
    return fmt


def _positive(name: str, value: float) -> float:
    if not value > 0:
        raise UsageError(f"{name} must be positive, got {value}")
    return value


def _read_graph(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_edge_list(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None


def format_significant(value: float, digits: int = 12) -> str:
    """Fixed-point with exactly ``digits`` significant digits (desk scale)."""
    if value == 0 or not math.isfinite(value):
        return f"{0.0:.{digits - 1}f}" if value == 0 else repr(value)
    # round to the significant digits first so carries shift the magnitude
    sci = f"{value:.{digits - 1}e}"
    exponent = int(sci.split("e")[1])
    decimals = max(digits - 1 - exponent, 0)
    return f"{float(sci):.{decimals}f}"


def _emit_json(obj) -> None:
    print(json.dumps(obj, indent=2))


# ---------------------------------------------------------------------------
# commands


def cmd_transform(args: argparse.Namespace) -> int:
    kind = _resolve_kind(args)
    g = _read_graph(args.input)
    text = render_edge_list(apply_transform(g, kind))
    if args.output is None:
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0


def cmd_resist(args: argparse.Namespace) -> int:
    kind = _resolve_kind(args)
    fmt = _resolve_format(args, matrix_output=True)
    tol = _positive("tol", _resolve(args, "tol", float))
    g = _read_graph(args.input)
    x = build_structured_inverse(g, kind)
    r = resistance_matrix(x)

    exit_code = 0
    if args.self_check:
        from .verify import compare

        report = compare(g, kind, tol=tol)
        if not report.passed:
            print(
                f"self-check failed: overall delta {report.overall_max:.3e}, "
                f"kirchhoff delta {report.kirchhoff_delta:.3e}",
                file=sys.stderr,
            )
            exit_code = 1

    if fmt == "json":
        _emit_json(
            {"kind": kind.value, "n": int(r.shape[0]), "matrix": r.tolist()}
        )
    elif fmt == "csv":
        for row in r:
            print(",".join(repr(float(v)) for v in row))
    else:
        for row in r:
            print(" ".join(repr(float(v)) for v in row))
    return exit_code


def cmd_kirchhoff(args: argparse.Namespace) -> int:
    kind = _resolve_kind(args, allow_none=True)
    g = _read_graph(args.input)
    if kind is None:
        value = oracle_kirchhoff(g)
    else:
        value = kirchhoff(build_structured_inverse(g, kind))
    print(format_significant(value))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    count = int(_resolve(args, "count", int))
    n_max = int(_resolve(args, "n_max", int))
    p = float(_resolve(args, "p", float))
    seed = int(_resolve(args, "seed", int))
    tol = _positive("tol", _resolve(args, "tol", float))
    if count < 1:
        raise UsageError(f"count must be >= 1, got {count}")
    if n_max < 2:
        raise UsageError(f"n_max must be >= 2, got {n_max}")
    if not 0.0 < p <= 1.0:
        raise UsageError(f"p must be in (0, 1], got {p}")
    reports = run_corpus(count, n_max, p, seed, tol=tol)
    ok = all(r.passed for r in reports)
    _emit_json({"reports": [r.as_dict() for r in reports], "pass": ok})
    return 0 if ok else 1


def cmd_audit(args: argparse.Namespace) -> int:
    kind = _resolve_kind(args)
    g = _read_graph(args.input)
    report = audit_theorems(g, kind)
    _emit_json(report.as_dict())
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kirchlab",
        description=(
            "Resistance distances and Kirchhoff indices of quadrilateral and "
            "pentagonal edge-replacement transforms."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_kind(p: argparse.ArgumentParser, extra: Sequence[str] = ()) -> None:
        p.add_argument(
            "--kind",
            choices=["quad", "pent", *extra],
            default=None,
            help="transform kind (default quad, env KLAB_KIND)",
        )

    p = sub.add_parser("transform", help="write the transformed graph's edge list")
    p.add_argument("input", help="edge-list file")
    p.add_argument("-o", "--output", default=None, help="output file (default stdout)")
    add_kind(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("resist", help="all-pairs resistance matrix of the transform")
    p.add_argument("input", help="edge-list file")
    add_kind(p)
    p.add_argument("--format", choices=["json", "csv", "plain"], default=None)
    p.add_argument(
        "--self-check",
        action="store_true",
        help="also run the brute-force oracle; exit 1 beyond --tol",
    )
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_resist)

    p = sub.add_parser("kirchhoff", help="Kirchhoff index (12 significant digits)")
    p.add_argument("input", help="edge-list file")
    add_kind(p, extra=["none"])
    p.set_defaults(func=cmd_kirchhoff)

    p = sub.add_parser("verify", help="random corpus, structured engine vs oracle")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--n-max", dest="n_max", type=int, default=None)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", help="audit the published clauses against the oracle")
    p.add_argument("input", help="edge-list file")
    add_kind(p)
    p.set_defaults(func=cmd_audit)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (GraphError, DisconnectedGraphError, SingularMatrixError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
