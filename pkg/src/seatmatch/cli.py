"""Command-line client for the matching solver.

By default every subcommand runs in-process against the same handlers the
HTTP service uses; with ``--server URL`` the request is POSTed to a running
service instead.  Exit codes: 0 for feasible / verified / found / agreement,
1 for infeasible / failed / not found / counterexample, 2 for unknown,
64 for usage errors.

Set ``SEATMATCH_LOG`` (e.g. ``INFO`` or ``DEBUG``) to enable logging.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Optional

import httpx
from pydantic import BaseModel

from . import service

EXIT_FEASIBLE = 0
EXIT_INFEASIBLE = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64


def _setup_logging() -> None:
    level = os.environ.get("SEATMATCH_LOG")
    if level:
        logging.basicConfig(level=level.upper(),
                            format="%(asctime)s %(name)s %(levelname)s %(message)s")


def _post(server: str, path: str, payload: dict) -> dict:
    response = httpx.post(server.rstrip("/") + path, json=payload, timeout=600.0)
    if response.status_code != 200:
        raise service.ServiceError(f"{path}: HTTP {response.status_code}: {response.text}")
    return response.json()


def _call(args: argparse.Namespace, path: str, handler, request: BaseModel) -> dict:
    if args.server:
        return _post(args.server, path, request.model_dump())
    return handler(request).model_dump()


def _emit(args: argparse.Namespace, data: dict, text: str) -> None:
    print(json.dumps(data, indent=2) if args.format == "json" else text)


def _read_list(args: argparse.Namespace) -> str:
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            return fh.read().strip()
    if args.list is None:
        raise service.ServiceError("missing --list (or --input FILE)")
    return args.list


def _format_matching(data: Optional[dict]) -> str:
    if data is None:
        return "-"
    edges = " ".join(f"{{{u},{w}}}" for u, w in data["edges"])
    return f"K_{data['v']}: {edges}"


def _cmd_solve(args: argparse.Namespace) -> int:
    req = service.SolveRequest(v=args.v, list=_read_list(args),
                               allow_oracle=not args.no_oracle,
                               oracle_threshold=args.oracle_threshold)
    data = _call(args, "/solve", service.handle_solve, req)
    verdict = data["verdict"]
    lines = [f"status: {verdict['status']}"]
    if verdict.get("witness"):
        lines.append(f"witness: {verdict['witness']}")
    if data.get("matching"):
        lines.append(f"route: {data['route']}")
        lines.append(f"verified: {data['verified']}")
        lines.append(_format_matching(data["matching"]))
    _emit(args, data, "\n".join(lines))
    return {"feasible": EXIT_FEASIBLE, "infeasible": EXIT_INFEASIBLE}.get(
        verdict["status"], EXIT_UNKNOWN)


def _cmd_decide(args: argparse.Namespace) -> int:
    req = service.DecideRequest(v=args.v, list=_read_list(args))
    data = _call(args, "/decide", service.handle_decide, req)
    detail = data.get("route") or data.get("witness") or ""
    _emit(args, data, f"{data['status']}" + (f" ({detail})" if detail else ""))
    return {"feasible": EXIT_FEASIBLE, "infeasible": EXIT_INFEASIBLE}.get(
        data["status"], EXIT_UNKNOWN)


def _cmd_verify(args: argparse.Namespace) -> int:
    if not args.input:
        raise service.ServiceError("verify needs --input FILE with matching JSON")
    with open(args.input, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    matching = service.MatchingModel(v=raw["v"], edges=[tuple(e) for e in raw["edges"]])
    if args.list is None:
        raise service.ServiceError("verify needs --list")
    req = service.VerifyRequest(matching=matching, list=args.list)
    data = _call(args, "/verify", service.handle_verify, req)
    _emit(args, data, "ok" if data["ok"] else f"failed: {data['diagnostic']}")
    return EXIT_FEASIBLE if data["ok"] else EXIT_INFEASIBLE


def _cmd_oracle(args: argparse.Namespace) -> int:
    req = service.OracleRequest(v=args.v, list=_read_list(args), count=args.count)
    data = _call(args, "/oracle", service.handle_oracle, req)
    if args.count:
        _emit(args, data, f"solutions: {data['count']} "
              f"(nodes: {data['nodes_expanded']}, {data['wall_time']:.3f}s)")
        return EXIT_FEASIBLE if data["count"] else EXIT_INFEASIBLE
    found = data.get("found")
    _emit(args, data, _format_matching(found) if found else "no matching")
    return EXIT_FEASIBLE if found else EXIT_INFEASIBLE


def _cmd_conjecture(args: argparse.Namespace) -> int:
    req = service.ConjectureRequest(p=args.p, workers=args.workers)
    data = _call(args, "/conjecture", service.handle_conjecture, req)
    text = (f"p={data['p']}: checked {data['lists_checked']} lists, "
            + ("agreement" if data["agrees"]
               else "COUNTEREXAMPLES:\n" + "\n".join(data["counterexamples"])))
    _emit(args, data, text)
    return EXIT_FEASIBLE if data["agrees"] else EXIT_INFEASIBLE


def _cmd_skolem(args: argparse.Namespace) -> int:
    req = service.SkolemRequest(n=args.n)
    data = _call(args, "/skolem", service.handle_skolem, req)
    _emit(args, data, _format_matching(data["matching"])
          + "\nsequence: " + " ".join(map(str, data["sequence"])))
    return EXIT_FEASIBLE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seatmatch",
        description="Perfect matchings of K_2n with prescribed circular edge lengths")
    parser.add_argument("--server", metavar="URL", default=None,
                        help="send requests to a running service instead of in-process")
    parser.add_argument("--format", choices=("json", "text"), default="text")
    # accept the shared flags after the subcommand too, without clobbering
    # values given before it
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--server", metavar="URL", default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_instance_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--v", type=int, required=True, help="number of vertices (even)")
        p.add_argument("--list", help='length list, e.g. "1^5,7^4"')
        p.add_argument("--input", help="read the length list from a file")

    p = sub.add_parser("solve", parents=[common], help="decide and construct a matching")
    add_instance_flags(p)
    p.add_argument("--no-oracle", action="store_true",
                   help="never fall back to exhaustive search")
    p.add_argument("--oracle-threshold", type=int, default=28,
                   help="largest v the oracle fallback may search")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("decide", parents=[common], help="feasibility verdict only")
    add_instance_flags(p)
    p.set_defaults(func=_cmd_decide)

    p = sub.add_parser("verify", parents=[common], help="check a matching against a length list")
    p.add_argument("--input", required=True,
                   help='file with matching JSON {"v": ..., "edges": [[u,w], ...]}')
    p.add_argument("--list", required=True, help="target length list")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="exhaustive search, independent of the solver")
    add_instance_flags(p)
    p.add_argument("--count", action="store_true", help="count all realizations")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("conjecture", parents=[common],
                       help="test parity-characterization for short-length lists")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=_cmd_conjecture)

    p = sub.add_parser("skolem", parents=[common], help="emit a Skolem sequence and its matching")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_skolem)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    _setup_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (service.ServiceError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
