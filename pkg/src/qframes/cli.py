"""Command-line surface and the frame file format.

Frame files are JSON documents

    {"dim": n, "vectors": [[[w, x, y, z], ... n entries], ... m vectors]}

with every quaternion a flat 4-array in (w, x, y, z) order.  Numbers are
written with round-trip-safe precision, so write-then-read is the identity.

Exit codes: 0 success/affirmative, 1 usage or schema error, 2 negative
mathematical verdict, 3 numerical failure, 4 undetermined.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from .errors import (
    BadDimension,
    ConvergenceFailure,
    DimensionMismatch,
    NotAFrame,
    NotPositiveDefinite,
    SchemaError,
    StructureViolation,
)
from .frames import (
    Frame,
    FrameReport,
    canonical_dual,
    frame_bounds,
    gen_example,
    parsevalize,
    random_frame,
    reconstruct,
)
from .perturbation import PerturbReport, check_condition, circulant_example
from .qlinalg import QVector
from .quaternion import as_quaternion

RECONSTRUCT_TOL = 1e-8


# ---------------------------------------------------------------- file format

def _check_number(x) -> float:
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise SchemaError(f"expected a number, got {x!r}")
    x = float(x)
    if not math.isfinite(x):
        raise SchemaError("numbers must be finite")
    return x


def parse_frame_doc(doc) -> Frame:
    if not isinstance(doc, dict):
        raise SchemaError("top level must be an object")
    if set(doc) != {"dim", "vectors"}:
        raise SchemaError("expected exactly the keys 'dim' and 'vectors'")
    dim = doc["dim"]
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise SchemaError("'dim' must be a positive integer")
    vectors = doc["vectors"]
    if not isinstance(vectors, list) or not vectors:
        raise SchemaError("'vectors' must be a non-empty list")
    out = []
    for vec in vectors:
        if not isinstance(vec, list) or len(vec) != dim:
            raise SchemaError(f"every vector must be a list of {dim} quaternions")
        rows = []
        for quat in vec:
            if not isinstance(quat, list) or len(quat) != 4:
                raise SchemaError("every quaternion must be a flat [w, x, y, z] array")
            rows.append([_check_number(c) for c in quat])
        out.append(QVector(rows))
    return Frame(dim, tuple(out))


def read_frame_file(path: str) -> Frame:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path}: invalid JSON ({exc})") from exc
    return parse_frame_doc(doc)


def frame_to_text(F: Frame) -> str:
    """Serialize one vector per line; floats use shortest round-trip repr."""
    lines = ["{", f'  "dim": {F.dim},', '  "vectors": [']
    for i, v in enumerate(F.vectors):
        comma = "," if i + 1 < F.m else ""
        entries = json.dumps([list(row) for row in v.data.tolist()])
        lines.append(f"    {entries}{comma}")
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_frame_file(F: Frame, path: str | None) -> None:
    text = frame_to_text(F)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------- report docs

def _finite_or_none(x):
    if x is None:
        return None
    x = float(x)
    return x if math.isfinite(x) else None


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")


def analyze_doc(report: FrameReport) -> dict:
    return {
        "A": report.A,
        "B": report.B,
        "is_frame": report.is_frame,
        "is_tight": report.is_tight,
        "is_parseval": report.is_parseval,
        "is_exact": report.is_exact,
        "condition": _finite_or_none(report.condition),
        "tol": report.tol,
    }


def perturb_doc(report: PerturbReport) -> dict:
    witness = None
    if report.witness is not None:
        witness = [list(row) for row in report.witness.data.tolist()]
    return {
        "lambda": report.lam,
        "mu": report.mu,
        "admissible": report.admissible,
        "status": report.status,
        "witness": witness,
        "predicted_A": _finite_or_none(report.predicted_A),
        "predicted_B": _finite_or_none(report.predicted_B),
        "exact_A": report.exact_A,
        "exact_B": report.exact_B,
    }


# ------------------------------------------------------------------- commands

def cmd_analyze(args) -> int:
    frame = read_frame_file(args.path)
    report = frame_bounds(frame, tol=args.tol)
    _emit(analyze_doc(report))
    return 0 if report.is_frame else 2


def cmd_dual(args) -> int:
    frame = read_frame_file(args.path)
    try:
        out = canonical_dual(frame)
    except NotAFrame as exc:
        print(f"error: not a frame: {exc}", file=sys.stderr)
        return 2
    write_frame_file(out, args.out)
    return 0


def cmd_parsevalize(args) -> int:
    frame = read_frame_file(args.path)
    try:
        out = parsevalize(frame)
    except NotAFrame as exc:
        print(f"error: not a frame: {exc}", file=sys.stderr)
        return 2
    write_frame_file(out, args.out)
    return 0


def _parse_vector(text: str, dim: int) -> QVector:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"--vector: invalid JSON ({exc})") from exc
    if not isinstance(doc, list) or len(doc) != dim:
        raise SchemaError(f"--vector must be a list of {dim} quaternion 4-arrays")
    rows = []
    for quat in doc:
        if not isinstance(quat, list) or len(quat) != 4:
            raise SchemaError("every quaternion must be a flat [w, x, y, z] array")
        rows.append([_check_number(c) for c in quat])
    return QVector(rows)


def cmd_reconstruct(args) -> int:
    frame = read_frame_file(args.path)
    u = _parse_vector(args.vector, frame.dim)
    try:
        _, residual = reconstruct(frame, u)
    except NotAFrame as exc:
        print(f"error: not a frame: {exc}", file=sys.stderr)
        return 2
    _emit({"residual": residual, "tol": RECONSTRUCT_TOL})
    return 0 if residual <= RECONSTRUCT_TOL else 3


def cmd_perturb(args) -> int:
    if args.samples > 0 and args.seed is None:
        print("error: --seed is required when --samples > 0", file=sys.stderr)
        return 1
    frame_u = read_frame_file(args.path_u)
    frame_v = read_frame_file(args.path_v)
    report = check_condition(
        frame_u,
        frame_v,
        lam=args.lam,
        mu=args.mu,
        samples=args.samples,
        seed=args.seed if args.seed is not None else 0,
    )
    _emit(perturb_doc(report))
    if report.status == "falsified" or not report.admissible:
        return 2
    if report.status == "undetermined":
        return 4
    return 0


def cmd_gen(args) -> int:
    if args.kind == "circulant":
        _, frame = circulant_example(args.n, as_quaternion(_parse_p(args.p)))
    elif args.kind == "random":
        if args.seed is None:
            print("error: --seed is required for kind 'random'", file=sys.stderr)
            return 1
        frame = random_frame(args.n, 2 * args.n, args.seed)
    else:
        frame = gen_example(args.kind, args.n)
    write_frame_file(frame, args.out)
    return 0


def _parse_p(text: str):
    parts = text.split(",")
    if len(parts) == 1:
        return float(parts[0])
    if len(parts) == 4:
        return [float(c) for c in parts]
    raise SchemaError("--p must be a real number or four comma-separated components")


# --------------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    """argparse variant that exits with code 1 on usage errors."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qframes", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="frame bounds and flags for a frame file")
    p.add_argument("path")
    p.add_argument("--tol", type=float, default=1e-9, help="relative flag tolerance")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dual", help="write the canonical dual frame")
    p.add_argument("path")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("parsevalize", help="write the Parseval-ized frame")
    p.add_argument("path")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_parsevalize)

    p = sub.add_parser("reconstruct", help="expand a vector against the canonical dual")
    p.add_argument("path")
    p.add_argument("--vector", required=True, help="JSON list of [w,x,y,z] arrays")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("perturb", help="check the perturbation condition for two files")
    p.add_argument("path_u")
    p.add_argument("path_v")
    p.add_argument("--lambda", dest="lam", type=float, default=0.0)
    p.add_argument("--mu", type=float, default=0.0)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("gen", help="write a reference frame file")
    p.add_argument(
        "kind",
        choices=["dup_onb", "shifted", "multiplicity", "onb", "circulant", "random"],
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", default="1", help="circulant shift scalar (real or w,x,y,z)")
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotAFrame as exc:
        print(f"error: not a frame: {exc}", file=sys.stderr)
        return 2
    except (ConvergenceFailure, StructureViolation, NotPositiveDefinite) as exc:
        print(f"error: numerical failure: {exc}", file=sys.stderr)
        return 3
    except (SchemaError, DimensionMismatch, BadDimension, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
