"""Command-line front end.

Exit codes: 0 success/feasible, 1 invalid matrix or failed check,
2 usage or I/O or syntax error, 3 infeasible with certificate,
4 internal inconsistency (a constructed embedding failed its verifier).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import oracle as oracle_mod
from .bounds import LOWER, UPPER, format_bound
from .embedding import (
    Embedding, construct_embedding, expand_embedding, verify_embedding,
)
from .errors import (
    EmbeddingGapError, InternalVerificationError, MatrixInvariantError,
    MatrixSyntaxError, SizeGuardError, ThresholdOrderError,
)
from .feasibility import InfeasibilityCertificate, Thresholds
from .generate import perturb_once, random_instance
from .matrix import RobinsonMatrix, parse_matrix, reduce_repeated_rows
from .pathgen import AUTO, CycleRecord, generate_bound_tables
from .solver import GENERAL, RATIO, check_certificate, solve

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_INTERNAL = 4


def _load_matrix(path: str) -> RobinsonMatrix:
    with open(path) as fh:
        return parse_matrix(fh.read())


def _emit(data: dict) -> None:
    print(json.dumps(data, indent=2))


def _format_pi(emb: Embedding, as_float: bool) -> str:
    if as_float:
        return "<" + ", ".join(f"{float(x):g}" for x in emb.positions) + ">"
    return "<" + ", ".join(str(x) for x in emb.positions) + ">"


def _format_d(d: Thresholds, as_float: bool) -> str:
    if as_float:
        return "(" + ", ".join(f"{float(x):g}" for x in d.values) + ")"
    return "(" + ", ".join(str(x) for x in d.values) + ")"


def _print_certificate(m: RobinsonMatrix, cert: InfeasibilityCertificate) -> None:
    print("NO SOLUTION")
    print(f"reason: {cert.explanation}")
    for idx, cycle in enumerate(cert.cycles, start=1):
        verts = ",".join(str(v) for v in cycle.vertices)
        print(f"cycle {idx}: <{verts}>  bound {format_bound(cycle.bound)}")
        for i in range(1, len(cycle.vertices)):
            x, y = cycle.vertices[i - 1], cycle.vertices[i]
            t = m.level(x, y)
            if x < y:
                constraint = f"gap({x},{y}) < d{t}"
            elif t == m.k:
                constraint = f"gap({y},{x}) > 0"
            else:
                constraint = f"gap({y},{x}) > d{t + 1}"
            print(f"  step {x}->{y}: level {t}, forces {constraint}")


def cmd_validate(args: argparse.Namespace) -> int:
    try:
        m = _load_matrix(args.matrix)
    except MatrixInvariantError as exc:
        if args.json:
            _emit({"status": "invalid", "kind": exc.kind,
                   "witness": list(exc.witness), "message": str(exc)})
        else:
            print(f"invalid: {exc}")
        return EXIT_INVALID
    if args.json:
        _emit({"status": "ok", "n": m.n, "k": m.k})
    else:
        print(f"valid Robinson matrix (n={m.n}, k={m.k})")
    return EXIT_OK


def cmd_solve(args: argparse.Namespace) -> int:
    m = _load_matrix(args.matrix)
    method = RATIO if args.k2 else GENERAL if args.general else "auto"
    result = solve(m, method=method)
    if not result.feasible:
        assert result.certificate is not None
        if args.json:
            _emit(result.to_json_dict())
        else:
            _print_certificate(m, result.certificate)
        return EXIT_INFEASIBLE
    assert result.d is not None and result.embedding is not None
    if args.json:
        _emit(result.to_json_dict())
    else:
        print(f"FEASIBLE ({result.method} method)")
        print(f"d  = {_format_d(result.d, args.float)}")
        print(f"pi = {_format_pi(result.embedding, args.float)}")
    return EXIT_OK


def _parse_thresholds(text: str) -> Thresholds:
    parts = [p for p in text.replace(",", " ").split() if p]
    return Thresholds(tuple(Fraction(p) for p in parts))


def cmd_embed(args: argparse.Namespace) -> int:
    m = _load_matrix(args.matrix)
    if args.check:
        with open(args.check) as fh:
            data = json.load(fh)
        try:
            d = Thresholds(tuple(Fraction(x) for x in data["d"]))
            emb = Embedding(tuple(Fraction(x) for x in data["pi"]))
        except (KeyError, TypeError) as exc:
            print(f"embed: malformed embedding file: {exc}", file=sys.stderr)
            return EXIT_USAGE
        violation = verify_embedding(m, d, emb)
        if violation is None:
            if args.json:
                _emit({"status": "ok"})
            else:
                print("embedding verifies")
            return EXIT_OK
        if args.json:
            _emit({"status": "violation", "u": violation.u, "v": violation.v,
                   "level": violation.level, "gap": str(violation.gap)})
        else:
            print(f"violation: {violation}")
        return EXIT_INVALID
    if not args.d:
        print("embed: provide --d thresholds or --check FILE", file=sys.stderr)
        return EXIT_USAGE
    d = _parse_thresholds(args.d)
    if d.k != m.k:
        print(f"embed: expected {m.k} thresholds, got {d.k}", file=sys.stderr)
        return EXIT_USAGE
    reduction = reduce_repeated_rows(m)
    table = generate_bound_tables(reduction.reduced)
    try:
        reduced_emb = construct_embedding(reduction.reduced, d, table)
    except EmbeddingGapError as exc:
        print(f"no embedding for these thresholds: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    emb = expand_embedding(reduction, reduced_emb, d)
    violation = verify_embedding(m, d, emb)
    if violation is not None:
        raise InternalVerificationError(
            f"constructed embedding failed verification: {violation}")
    if args.json:
        _emit({"d": d.to_json_list(), "pi": emb.to_json_list()})
    else:
        print(f"d  = {_format_d(d, args.float)}")
        print(f"pi = {_format_pi(emb, args.float)}")
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    m = _load_matrix(args.matrix)
    table = generate_bound_tables(m, mode=args.mode)
    _emit(table.to_json_dict())
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    m = _load_matrix(args.matrix)
    with open(args.certificate) as fh:
        data = json.load(fh)
    if "certificate" in data:
        data = data["certificate"]
    try:
        cycles = tuple(
            CycleRecord(vertices=tuple(verts), bound=tuple(bound))
            for verts, bound in zip(data["cycles"], data["bounds"])
        )
    except (KeyError, TypeError) as exc:
        print(f"certify: malformed certificate file: {exc}", file=sys.stderr)
        return EXIT_USAGE
    cert = InfeasibilityCertificate(
        cycles=cycles, explanation=data.get("explanation", ""))
    ok, message = check_certificate(m, cert)
    if args.json:
        _emit({"status": "valid" if ok else "invalid", "message": message})
    else:
        print(("valid certificate: " if ok else "INVALID certificate: ") + message)
    return EXIT_OK if ok else EXIT_INVALID


def _decide_feasible(m: RobinsonMatrix) -> bool:
    if m.n <= 7 and m.k <= 3:
        return oracle_mod.direct_feasibility(m) is not None
    return solve(m).feasible


def cmd_gen(args: argparse.Namespace) -> int:
    if args.n < 1 or args.k < 1:
        print("gen: n and k must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    rng = random.Random(args.seed)
    m = random_instance(args.n, args.k, rng, duplicate_prob=args.dup_prob)
    status = "feasible"
    if args.infeasible_attempts > 0:
        found = False
        for _ in range(args.infeasible_attempts):
            candidate = perturb_once(m, rng)
            if candidate is None:
                continue
            m = candidate
            if not _decide_feasible(m):
                found = True
                break
        status = "infeasible" if found else (
            "feasible" if _decide_feasible(m) else "infeasible")
    print(f"# status: {status}")
    print(m.serialize(), end="")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.oracle_command == "paths":
        m = _load_matrix(args.matrix)
        kind = LOWER if args.kind == "lower" else UPPER
        entries = oracle_mod.enumerate_paths_bruteforce(m, args.u, args.v, kind)
        _emit({"pair": [args.u, args.v], "kind": kind,
               "entries": [{"bound": list(e.bound), "path": list(e.path)}
                           for e in entries]})
        return EXIT_OK
    if args.oracle_command == "feasible":
        m = _load_matrix(args.matrix)
        outcome = oracle_mod.direct_feasibility(m)
        if outcome is None:
            _emit({"status": "infeasible"})
            return EXIT_INFEASIBLE
        d, emb = outcome
        _emit({"status": "feasible", "d": d.to_json_list(),
               "pi": emb.to_json_list()})
        return EXIT_OK
    if args.oracle_command == "buffer":
        a = tuple(int(x) for x in args.a.split(","))
        b = tuple(int(x) for x in args.b.split(","))
        c = oracle_mod.buffer_vector(a, b)
        _emit({"a": list(a), "b": list(b), "buffer": list(c)})
        return EXIT_OK
    raise AssertionError(f"unhandled oracle command {args.oracle_command!r}")


def cmd_report(args: argparse.Namespace) -> int:
    from .report import render_report

    m = _load_matrix(args.matrix)
    result = solve(m)
    written = render_report(m, result, args.outdir, dpi=args.dpi)
    for path in written:
        print(f"wrote {path}")
    return EXIT_OK if result.feasible else EXIT_INFEASIBLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="uniembed",
        description=("Find uniform threshold embeddings of Robinson "
                     "similarity matrices, or certify that none exist."))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a matrix file")
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="solve a matrix end to end")
    p.add_argument("matrix")
    p.add_argument("--json", action="store_true")
    p.add_argument("--float", action="store_true",
                   help="render values as decimals (display only)")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--k2", action="store_true",
                       help="force the k=2 ratio method")
    group.add_argument("--general", action="store_true",
                       help="force the general elimination method")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("embed", help="construct or check an embedding")
    p.add_argument("matrix")
    p.add_argument("--d", help="thresholds, e.g. \"8,6\"")
    p.add_argument("--check", metavar="FILE",
                   help="verify an embedding JSON file instead")
    p.add_argument("--json", action="store_true")
    p.add_argument("--float", action="store_true")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("bounds", help="dump the bound table as JSON")
    p.add_argument("matrix")
    p.add_argument("--mode", choices=["auto", "exact", "pruned"],
                   default=AUTO)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("certify", help="re-check an infeasibility certificate")
    p.add_argument("matrix")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("gen", help="generate a random valid matrix")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--infeasible-attempts", type=int, default=0,
                   help="perturbation rounds hunting for an infeasible instance")
    p.add_argument("--dup-prob", type=float, default=0.0,
                   help="probability of duplicating the previous row")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force reference routines")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    op = osub.add_parser("paths")
    op.add_argument("matrix")
    op.add_argument("u", type=int)
    op.add_argument("v", type=int)
    op.add_argument("--kind", choices=["upper", "lower"], default="upper")
    op = osub.add_parser("feasible")
    op.add_argument("matrix")
    op = osub.add_parser("buffer")
    op.add_argument("a", help="comma-separated integers")
    op.add_argument("b", help="comma-separated integers")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("report", help="render figures and CSV for a solve")
    p.add_argument("matrix")
    p.add_argument("--outdir", default="report")
    p.add_argument("--dpi", type=int, default=150)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MatrixSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatrixInvariantError as exc:
        print(f"invalid matrix: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeGuardError, ThresholdOrderError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalVerificationError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
