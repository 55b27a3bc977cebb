"""Command-line interface.

Every subcommand is a thin shim over one library call; JSON payloads carry
the verdict, an optional certificate, counts as decimal strings (so
arbitrary precision survives serialization), and the elapsed time.

Exit codes: 0 positive verdict / success, 1 negative verdict (not lonesum,
ambiguous), 2 search budget exhausted, 3 infeasible margins, 64 usage
errors, 65 unreadable input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence

from . import bijection, counting, oracle, series, weak
from .matrix import (
    MatrixFormatError,
    NotLonesumError,
    QMatrix,
    format_matrix,
    parse_matrix,
)
from .strong import Reconstruction, find_forbidden, is_strong_lonesum, reconstruct_strong

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_BUDGET = 2
EXIT_INFEASIBLE = 3
EXIT_USAGE = 64
EXIT_DATA = 65


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # keep exit codes ours
        raise _UsageError(message)


def _read_matrix(path: str) -> QMatrix:
    if path == "-":
        return parse_matrix(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return parse_matrix(handle.read())


def _payload(verdict: str, certificate, count, started: float) -> dict:
    return {
        "verdict": verdict,
        "certificate": certificate,
        "count": None if count is None else str(count),
        "elapsed_ms": (time.perf_counter() - started) * 1000.0,
    }


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload))
    elif text:
        print(text)


def _default_budget() -> int:
    raw = os.environ.get("LONESUM_BUDGET")
    if raw is None:
        return weak.DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError as exc:
        raise _UsageError(f"LONESUM_BUDGET must be an integer, got {raw!r}") from exc


def _csv_ints(raw: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError as exc:
        raise _UsageError(f"{what} must be comma-separated integers") from exc


def _cmd_check(args) -> int:
    started = time.perf_counter()
    matrix = _read_matrix(args.matrix)
    if args.weak:
        verdict = weak.is_weak_lonesum(matrix, args.budget)
        if verdict.status is weak.WeakStatus.BUDGET_EXCEEDED:
            payload = _payload("budget-exceeded", {"nodes": verdict.nodes}, None, started)
            _emit(args, payload, f"budget exceeded after {verdict.nodes} nodes")
            return EXIT_BUDGET
        if verdict.status is weak.WeakStatus.UNIQUE:
            payload = _payload("weak-lonesum", {"nodes": verdict.nodes}, None, started)
            _emit(args, payload, "weak lonesum")
            return EXIT_OK
        certificate = {
            "nodes": verdict.nodes,
            "alternative": [list(row) for row in verdict.witness.entries],
        }
        payload = _payload("not-weak-lonesum", certificate, None, started)
        _emit(
            args,
            payload,
            "not weak lonesum; alternative filling:\n"
            + format_matrix(verdict.witness).rstrip(),
        )
        return EXIT_NEGATIVE
    if is_strong_lonesum(matrix):
        _emit(args, _payload("lonesum", None, None, started), "lonesum")
        return EXIT_OK
    witness = find_forbidden(matrix)
    certificate = {
        "rows": list(witness.rows),
        "cols": list(witness.cols),
        "values": [list(row) for row in witness.values],
    }
    payload = _payload("not-lonesum", certificate, None, started)
    _emit(
        args,
        payload,
        f"not lonesum: rows {witness.rows} x cols {witness.cols} "
        f"form {witness.values}",
    )
    return EXIT_NEGATIVE


def _cmd_reconstruct(args) -> int:
    started = time.perf_counter()
    rows = _csv_ints(args.rows, "--rows")
    cols = _csv_ints(args.cols, "--cols")
    result = reconstruct_strong(args.q, rows, cols)
    if result is Reconstruction.AMBIGUOUS:
        _emit(args, _payload("ambiguous", None, None, started), "ambiguous")
        return EXIT_NEGATIVE
    if result is Reconstruction.INFEASIBLE:
        _emit(args, _payload("infeasible", None, None, started), "infeasible")
        return EXIT_INFEASIBLE
    certificate = {"matrix": [list(row) for row in result.entries]}
    payload = _payload("unique", certificate, None, started)
    _emit(args, payload, format_matrix(result).rstrip())
    return EXIT_OK


def _cmd_count(args) -> int:
    started = time.perf_counter()
    if args.stairs is not None:
        if args.symmetric:
            raise _UsageError("--stairs and --symmetric are mutually exclusive")
        if args.q != 2:
            raise _UsageError("--stairs counts binary staircases; use --q 2")
        if args.m is None or args.n is None:
            raise _UsageError("--stairs needs --m and --n")
        value = counting.stairs_count(args.m, args.n, args.stairs)
    elif args.symmetric:
        if args.n is None:
            raise _UsageError("--symmetric needs --n")
        value = counting.count_symmetric_lonesum(args.q, args.n)
    else:
        if args.m is None or args.n is None:
            raise _UsageError("count needs --m and --n")
        value = counting.count_lonesum(args.q, args.m, args.n)
    _emit(args, _payload("ok", None, value, started), str(value))
    return EXIT_OK


def _cmd_series(args) -> int:
    order = args.order
    if args.symmetric and args.fixed_index is not None:
        raise _UsageError("--symmetric and --fixed-index are mutually exclusive")
    if args.symmetric:
        egf = series.symmetric_lonesum_egf(args.q, order)
        table = [{"n": n, "value": str(egf.egf(n))} for n in range(order + 1)]
        lines = [f"{row['n']}\t{row['value']}" for row in table]
    elif args.fixed_index is not None:
        egf = series.fixed_column_series(args.q, args.fixed_index, order)
        table = [{"n": n, "value": str(egf.egf(n))} for n in range(order + 1)]
        lines = [f"{row['n']}\t{row['value']}" for row in table]
    else:
        egf = series.lonesum_egf(args.q, order, order)
        table = [
            {"m": m, "n": n, "value": str(egf.egf(m, n))}
            for m in range(order + 1)
            for n in range(order + 1)
        ]
        lines = [f"{row['m']}\t{row['n']}\t{row['value']}" for row in table]
    if args.json:
        print(json.dumps({"coefficients": table}))
    else:
        print("\n".join(lines))
    return EXIT_OK


def _cmd_bijection(args) -> int:
    if args.direction == "to-perm":
        matrix = _read_matrix(args.matrix)
        sigma = bijection.matrix_to_permutation(matrix)
        print(" ".join(str(v) for v in sigma.images))
        return EXIT_OK
    if args.m is None or args.n is None:
        raise _UsageError("from-perm needs --m and --n")
    raw = args.matrix.replace(",", " ")
    try:
        images = tuple(int(part) for part in raw.split())
    except ValueError as exc:
        raise MatrixFormatError("permutation images must be integers") from exc
    try:
        sigma = bijection.BoundedPermutation(images, args.m, args.n)
    except ValueError as exc:
        raise MatrixFormatError(str(exc)) from exc
    print(format_matrix(bijection.permutation_to_matrix(sigma)).rstrip())
    return EXIT_OK


def _cmd_weak_search(args) -> int:
    started = time.perf_counter()
    matrix = _read_matrix(args.matrix)
    verdict = weak.is_weak_lonesum(matrix, args.budget)
    if verdict.status is weak.WeakStatus.BUDGET_EXCEEDED:
        payload = _payload("budget-exceeded", {"nodes": verdict.nodes}, None, started)
        _emit(args, payload, f"budget exceeded after {verdict.nodes} nodes")
        return EXIT_BUDGET
    if verdict.status is weak.WeakStatus.UNIQUE:
        payload = _payload("unique", {"nodes": verdict.nodes}, None, started)
        _emit(args, payload, f"unique ({verdict.nodes} nodes)")
        return EXIT_OK
    certificate = {
        "nodes": verdict.nodes,
        "alternative": [list(row) for row in verdict.witness.entries],
    }
    payload = _payload("witness", certificate, None, started)
    _emit(args, payload, format_matrix(verdict.witness).rstrip())
    return EXIT_NEGATIVE


def _cmd_oracle(args) -> int:
    started = time.perf_counter()
    kind = "symmetric" if args.symmetric else ("weak" if args.weak else "strong")
    if args.symmetric:
        if args.n is None:
            raise _UsageError("--symmetric needs --n")
        m = n = args.n
    else:
        if args.m is None or args.n is None:
            raise _UsageError("oracle needs --m and --n")
        m, n = args.m, args.n
    rep = oracle.report(args.q, m, n, kind=kind, limit=args.limit)
    payload = {
        "q": rep.q,
        "m": rep.m,
        "n": rep.n,
        "kind": rep.kind,
        "total": str(rep.total),
        "lonesum": str(rep.lonesum),
        "elapsed_ms": (time.perf_counter() - started) * 1000.0,
    }
    print(json.dumps(payload))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lonesum",
        description="Exact lonesum matrix toolkit: detection, reconstruction, "
        "counting, generating functions, and searches.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide lonesum-ness of a matrix file ('-' reads stdin)")
    p.add_argument("matrix")
    p.add_argument("--weak", action="store_true", help="decide weak lonesum-ness instead")
    p.add_argument("--budget", type=int, default=None, help="search node budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("reconstruct", help="rebuild the unique matrix with given margins")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--rows", required=True, help="comma-separated row sums")
    p.add_argument("--cols", required=True, help="comma-separated column sums")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_reconstruct)

    p = sub.add_parser("count", help="closed-form lonesum counts")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--stairs", type=int, help="binary count with this many steps j")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("series", help="generating-function coefficient tables")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    p.add_argument("--fixed-index", type=int, dest="fixed_index",
                   help="fix the column count and expand in the row count")
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("bijection", help="matrix <-> bounded-displacement permutation")
    p.add_argument("direction", choices=("to-perm", "from-perm"))
    p.add_argument("matrix", help="matrix file for to-perm; permutation images for from-perm")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(handler=_cmd_bijection)

    p = sub.add_parser("weak-search", help="search for a structure-profile twin")
    p.add_argument("matrix")
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_weak_search)

    p = sub.add_parser("oracle", help="brute-force enumeration report")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--weak", action="store_true")
    p.add_argument("--symmetric", action="store_true")
    p.add_argument("--limit", type=int, default=oracle.DEFAULT_LIMIT)
    p.set_defaults(handler=_cmd_oracle)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if hasattr(args, "budget") and args.budget is None:
            args.budget = _default_budget()
        return args.handler(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (MatrixFormatError, FileNotFoundError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except NotLonesumError as exc:
        print(f"not lonesum: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (oracle.EnumerationLimitError, bijection.EnumerationLimitError) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
