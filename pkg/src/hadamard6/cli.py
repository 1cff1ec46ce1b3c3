"""Command-line front end: construction, verification, dephasing,
equivalence, fingerprints, grid scans, projection search, classification,
and order-12 composition, all as reproducible batch commands."""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import io
from .compose import ComposeSpec, compose12
from .core import dephase, fingerprint, is_hadamard, modulus_defect, unitarity_defect
from .equivalence import are_equivalent
from .errors import HadamardError, SingularZ
from .families import (
    border_h,
    dita_corner,
    dita_d6,
    family_h,
    fourier_f6,
    self_adjoint_h,
    symmetric_m,
)
from .search import SearchConfig, classify, project_search

DEFAULT_CLI_TOL = 1e-10


def _tol_from(args):
    """Precedence: explicit flag, then HADAMARD_TOL env, then 1e-10."""
    if getattr(args, "tol", None) is not None:
        return args.tol
    env = os.environ.get("HADAMARD_TOL")
    if env is not None:
        return float(env)
    return DEFAULT_CLI_TOL


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _angle(value, turns):
    return value * 2 * math.pi if turns else value


def _cmd_gen(args):
    t = args.turns
    family = args.family
    if family == "f6":
        m = fourier_f6(_angle(args.a, t), _angle(args.b, t))
    elif family == "f6t":
        m = fourier_f6(_angle(args.a, t), _angle(args.b, t)).T
    elif family == "d6":
        m = dita_d6(_angle(args.c, t))
    elif family == "h":
        m = family_h(_angle(args.x1, t), _angle(args.x2, t))
    elif family == "sym":
        m = symmetric_m(_angle(args.x, t))
    elif family == "selfadj":
        m = self_adjoint_h(_angle(args.x, t))
    elif family == "corner":
        m = dita_corner(_angle(args.x, t))
    else:
        m = border_h(args.axis, _angle(args.x, t))
    _emit(io.dumps(io.matrix_to_obj(m)), args.out)
    return 0


def _cmd_verify(args):
    m = io.read_matrix(args.infile)
    tol = _tol_from(args)
    obj = {
        "modulus_defect": float(modulus_defect(m)),
        "unitarity_defect": float(unitarity_defect(m)),
        "hadamard": bool(is_hadamard(m, tol)),
    }
    _emit(io.dumps(obj), args.out)
    return 0


def _cmd_dephase(args):
    m = io.read_matrix(args.infile)
    out, w = dephase(m)
    if args.with_witness:
        obj = {"matrix": io.matrix_to_obj(out), "witness": io.witness_to_obj(w)}
    else:
        obj = io.matrix_to_obj(out)
    _emit(io.dumps(obj), args.out)
    return 0


def _cmd_equiv(args):
    h1 = io.read_matrix(args.a)
    h2 = io.read_matrix(args.b)
    res = are_equivalent(h1, h2, tol=_tol_from(args), screen=not args.no_screen)
    obj = {
        "decision": res.decision,
        "witness": io.witness_to_obj(res.witness) if res.witness else None,
        "screened_by": res.screened_by,
    }
    _emit(io.dumps(obj), args.out)
    return 0


def _cmd_fingerprint(args):
    m = io.read_matrix(args.infile)
    fp = fingerprint(m, args.precision)
    obj = {"precision": fp.rounding, "values": [float(v) for v in fp.values]}
    _emit(io.dumps(obj), args.out)
    return 0


def _cmd_scan(args):
    n = args.grid
    lines = ["x1,x2,modulus_defect,unitarity_defect"]
    for k1 in range(1, n + 1):
        x1 = -math.pi / 2 + k1 * math.pi / n
        for k2 in range(1, n + 1):
            x2 = -math.pi / 2 + k2 * math.pi / n
            try:
                m = family_h(x1, x2)
                md, ud = repr(float(modulus_defect(m))), repr(float(unitarity_defect(m)))
            except SingularZ:
                md = ud = "nan"
            lines.append(f"{x1!r},{x2!r},{md},{ud}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _search_record(result):
    obj = {
        "matrix": io.matrix_to_obj(result.matrix),
        "iterations": result.iterations,
        "final_defect": float(result.final_defect),
        "converged": result.converged,
        "classification": None,
    }
    if is_hadamard(result.matrix, 1e-8):
        c = classify(result.matrix)
        obj["classification"] = _classification_obj(c)
    return obj


def _classification_obj(c):
    return {
        "label": c.label,
        "params": None if c.params is None else [float(p) for p in c.params],
        "distance": float(c.distance),
    }


def _cmd_search(args):
    records = []
    failed = False
    for i in range(args.runs):
        cfg = SearchConfig(rng_seed=args.seed + i, tol=args.tol, max_iter=args.max_iter)
        result = project_search(cfg)
        failed = failed or not result.converged
        records.append(_search_record(result))
    obj = records[0] if args.runs == 1 else records
    _emit(io.dumps(obj), args.out)
    if failed:
        print("MaxIterExceeded", file=sys.stderr)
        return 1
    return 0


def _cmd_classify(args):
    m = io.read_matrix(args.infile)
    c = classify(m, grid_n=args.grid)
    _emit(io.dumps(_classification_obj(c)), args.out)
    return 0


def _cmd_compose12(args):
    with open(args.spec) as fh:
        spec = ComposeSpec.from_dict(json.load(fh))
    m = compose12(spec)
    _emit(io.dumps(io.matrix_to_obj(m)), args.out)
    return 0


def _build_parser():
    ap = argparse.ArgumentParser(
        prog="hadamard6",
        description="Order-6 complex Hadamard matrix toolkit.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen", help="construct a family member as matrix JSON")
    p.add_argument(
        "--family",
        required=True,
        choices=["f6", "f6t", "d6", "h", "sym", "selfadj", "corner", "border"],
    )
    p.add_argument("--a", type=float, default=0.0)
    p.add_argument("--b", type=float, default=0.0)
    p.add_argument("--c", type=float, default=0.0)
    p.add_argument("--x1", type=float, default=0.0)
    p.add_argument("--x2", type=float, default=0.0)
    p.add_argument("--x", type=float, default=0.0)
    p.add_argument("--axis", choices=["x1", "x2"], default="x1")
    p.add_argument("--turns", action="store_true", help="angles are fractions of 2*pi")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("verify", help="report defects and the Hadamard check")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("dephase", help="normalize first row and column to ones")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--with-witness", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_dephase)

    p = sub.add_parser("equiv", help="decide Hadamard equivalence of two matrices")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--no-screen", action="store_true", help="skip the fingerprint screen")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("fingerprint", help="equivalence-invariant phase multiset")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--precision", type=int, default=8)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_fingerprint)

    p = sub.add_parser("scan", help="defect CSV over the two-parameter grid")
    p.add_argument("--family", choices=["h"], default="h")
    p.add_argument("--grid", type=int, default=33)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("search", help="alternating-projection Hadamard search")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--max-iter", type=int, default=2000)
    p.add_argument("--runs", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("classify", help="label a matrix against the known families")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--grid", type=int, default=24)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("compose12", help="order-12 block composition from a spec file")
    p.add_argument("--spec", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_compose12)

    return ap


def main(argv=None):
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 0
    try:
        return args.func(args)
    except (HadamardError, ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(type(exc).__name__, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
