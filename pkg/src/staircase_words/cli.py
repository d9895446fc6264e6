"""Command-line front end; a thin client over the HTTP service.

Every subcommand builds a request against the service API. By default the
requests run against an in-process application instance (no network, no
server to start); --server points the same client at a remote deployment.
"""
from __future__ import annotations

import argparse
import asyncio
import json
import os
import sys
from datetime import datetime, timezone

import httpx

from . import __version__

FAMILY_HELP = (
    "family short names: grid = 2xN grid graph, rt = grid plus one diagonal "
    "per cell, kg = 2xN king's graph, path = 1xN path, cycle = 1xN cycle"
)
DEFAULT_PRECISION = int(os.environ.get("STAIRCASE_PRECISION", "60"))


class ServiceError(RuntimeError):
    def __init__(self, status_code: int, detail: str):
        self.status_code = status_code
        self.detail = detail
        super().__init__(f"service returned {status_code}: {detail}")


class ServiceClient:
    """Minimal HTTP client; in-process ASGI transport unless a server is given."""

    def __init__(self, server: str | None = None):
        self.server = server

    def request(self, method: str, path: str, params=None, json_body=None):
        return asyncio.run(self._request(method, path, params, json_body))

    async def _request(self, method: str, path: str, params, json_body):
        if self.server:
            client = httpx.AsyncClient(base_url=self.server, timeout=600.0)
        else:
            from .service import create_app

            client = httpx.AsyncClient(
                transport=httpx.ASGITransport(app=create_app()),
                base_url="http://staircase-words.local",
                timeout=600.0,
            )
        async with client:
            response = await client.request(method, path, params=params, json=json_body)
        content_type = response.headers.get("content-type", "")
        if response.status_code >= 400:
            try:
                detail = response.json().get("detail", response.text)
            except ValueError:
                detail = response.text
            raise ServiceError(response.status_code, str(detail))
        if "application/json" in content_type:
            return response.json()
        return response.text


def _timestamp_lines(args) -> list[str]:
    lines = [f"# staircase-words v{__version__}"]
    if not args.no_timestamp:
        lines.append(f"# generated: {datetime.now(timezone.utc).isoformat()}")
    return lines


def _config_line(config: dict) -> str:
    parts = " ".join(f"{key}={value}" for key, value in sorted(config.items()))
    return f"# config: {parts}"


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _render_count(args, payload) -> int:
    if args.format == "json":
        _emit_json(payload)
    elif args.format == "csv":
        if payload.get("refined") is not None:
            print("family,k,n,state,count")
            for state, value in payload["refined"].items():
                print(f"{payload['family']},{payload['k']},{payload['n']},\"{state}\",{value}")
        else:
            print("family,k,n,count")
            print(f"{payload['family']},{payload['k']},{payload['n']},{payload['count']}")
    else:
        for line in _timestamp_lines(args):
            print(line)
        print(_config_line(payload["config"]))
        head = f"family={payload['family']} k={payload['k']} n={payload['n']} method={payload['method']}"
        print(head)
        if payload.get("refined") is not None:
            for state, value in payload["refined"].items():
                print(f"  ({state}): {value}")
            print(f"total: {sum(payload['refined'].values())}")
        else:
            print(f"count: {payload['count']}")
    return 0


def _render_table(args, payload) -> int:
    if args.format == "json":
        _emit_json(payload)
        return 0
    rows = payload["rows"]
    ns = list(range(1, payload["n_max"] + 1))
    if args.format == "csv":
        print("family,k,n,count")
        for name, counts in rows.items():
            for n, value in zip(ns, counts):
                print(f"{name},{payload['k']},{n},{value}")
        return 0
    for line in _timestamp_lines(args):
        print(line)
    print(_config_line(payload["config"]))
    widths = [
        max(len(str(n)), *(len(str(rows[name][i])) for name in rows))
        for i, n in enumerate(ns)
    ]
    label = max(len(name) for name in rows)
    header = "  ".join(str(n).rjust(w) for n, w in zip(ns, widths))
    print(f"{'n'.ljust(label)}  {header}")
    for name, counts in rows.items():
        body = "  ".join(str(v).rjust(w) for v, w in zip(counts, widths))
        print(f"{name.ljust(label)}  {body}")
    return 0


def _render_gf(args, payload) -> int:
    if args.format == "json":
        _emit_json(payload)
        return 0
    for line in _timestamp_lines(args):
        print(line)
    print(_config_line(payload["config"]))
    print(f"family={payload['family']} k={payload['k']}")
    print(f"gf: {payload['gf']['string']}")
    check = payload.get("printed_check")
    if check is not None:
        print(f"printed: {check['printed']['string']}")
        print(f"status: {check['status']}")
        if check.get("corrected") is not None:
            print(f"corrected: {check['corrected']['string']}")
        if check.get("note"):
            print(f"note: {check['note']}")
    return 0


def _render_recurrence(args, payload) -> int:
    if args.format == "json":
        _emit_json(payload)
        return 0
    for line in _timestamp_lines(args):
        print(line)
    print(_config_line(payload["config"]))
    print(f"family={payload['family']} k={payload['k']} terms_used={payload['terms_used']}")
    print(f"order: {payload['order']}")
    terms = " + ".join(
        f"{c}*c(n-{i})" for i, c in enumerate(payload["coefficients"], start=1)
    )
    print(f"recurrence: c(n) = {terms}")
    print(f"initial terms: {', '.join(str(v) for v in payload['initial_terms'])}")
    return 0


def _render_verify(args, payload) -> int:
    if args.format == "json":
        _emit_json(payload)
    else:
        for line in _timestamp_lines(args):
            print(line)
        print(_config_line(payload["config"]))
        print(f"suite: {payload['suite']}")
        for report in payload["reports"]:
            status = "pass" if report["pass"] else "FAIL"
            residual = "" if report.get("residual") is None else f"  residual={report['residual']}"
            notes = f"  [{report['notes']}]" if report.get("notes") else ""
            print(f"{status}  {report['subject']}{residual}{notes}")
        total = sum(1 for r in payload["reports"] if r["pass"])
        print(f"{total}/{len(payload['reports'])} checks passed")
    return 0 if payload["pass"] else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text",
                        help="output encoding (default text)")
    common.add_argument("--precision", type=int, default=DEFAULT_PRECISION,
                        help="working precision in significant digits "
                        "(default 60, or STAIRCASE_PRECISION)")
    common.add_argument("--no-timestamp", action="store_true",
                        help="omit the timestamp line from text output")
    common.add_argument("--server", default=None,
                        help="base URL of a running service; default runs in-process")

    parser = argparse.ArgumentParser(
        prog="staircase-words",
        description="Exact staircase-word counting, generating functions, and "
        "verification suites. " + FAMILY_HELP,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count staircase words")
    p.add_argument("--family", required=True, help=FAMILY_HELP)
    p.add_argument("--k", type=int, required=True, help="alphabet size")
    p.add_argument("--n", type=int, required=True, help="number of columns / length")
    p.add_argument("--method", choices=("oracle", "transfer"), default="transfer")
    p.add_argument("--refined", action="store_true", help="split the count by first column")
    p.add_argument("--budget", type=int, default=10_000_000,
                   help="enumeration budget for --method oracle")

    p = sub.add_parser("table", parents=[common], help="counts for all three 2xN families")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)

    p = sub.add_parser("gf", parents=[common], help="derive the generating function")
    p.add_argument("--family", required=True, help=FAMILY_HELP)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--check-printed", action="store_true",
                   help="compare against the cataloged closed form")

    p = sub.add_parser("recurrence", parents=[common], help="minimal linear recurrence of the counts")
    p.add_argument("--family", required=True, help=FAMILY_HELP)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--terms", type=int, default=25, help="how many counts to fit (default 25)")

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", required=True,
                   choices=("lemmas", "examples", "theorems", "chebyshev", "all"))
    p.add_argument("--k", type=int, action="append", default=None,
                   help="restrict to an alphabet size (repeatable)")
    p.add_argument("--x", action="append", default=None,
                   help="evaluation point such as 1/64 (repeatable)")
    p.add_argument("--n-max", type=int, default=30, help="length bound for lemma sweeps")
    p.add_argument("--order", type=int, default=120, help="series truncation order")
    p.add_argument("--tol", default="1e-20", help="relative tolerance")

    p = sub.add_parser("bfile", parents=[common], help="write OEIS b-file lines")
    p.add_argument("--family", required=True, help=FAMILY_HELP)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--out", default=None, help="output file (default stdout)")

    p = sub.add_parser("serve", parents=[common], help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def run_command(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "format", "text") == "csv" and args.command not in ("count", "table"):
        parser.error(f"csv output is not defined for {args.command!r}; use text or json")
    client = ServiceClient(server=args.server)
    try:
        if args.command == "count":
            payload = client.request("GET", "/count", params={
                "family": args.family, "k": args.k, "n": args.n,
                "method": args.method, "refined": args.refined, "budget": args.budget,
            })
            return _render_count(args, payload)
        if args.command == "table":
            payload = client.request("GET", "/table", params={"k": args.k, "n_max": args.n_max})
            return _render_table(args, payload)
        if args.command == "gf":
            payload = client.request("GET", "/gf", params={
                "family": args.family, "k": args.k, "check_printed": args.check_printed,
            })
            return _render_gf(args, payload)
        if args.command == "recurrence":
            payload = client.request("GET", "/recurrence", params={
                "family": args.family, "k": args.k, "terms": args.terms,
            })
            return _render_recurrence(args, payload)
        if args.command == "verify":
            body = {
                "suite": args.suite, "k": args.k, "x": args.x,
                "n_max": args.n_max, "series_order": args.order,
                "tolerance": args.tol, "precision": args.precision,
            }
            payload = client.request("POST", "/verify", json_body=body)
            return _render_verify(args, payload)
        if args.command == "bfile":
            text = client.request("GET", "/bfile", params={
                "family": args.family, "k": args.k, "n_max": args.n_max,
            })
            if args.out:
                with open(args.out, "w", encoding="ascii") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.command == "serve":
            import uvicorn

            from .service import create_app

            uvicorn.run(create_app(), host=args.host, port=args.port)
            return 0
    except ServiceError as err:
        detail = err.detail
        if "oracle out of range" in detail and "--method transfer" not in detail:
            detail += " (retry with --method transfer)"
        print(f"error: {detail}", file=sys.stderr)
        return 1
    except httpx.HTTPError as err:
        print(f"error: cannot reach service: {err}", file=sys.stderr)
        return 1
    parser.error(f"unhandled command {args.command!r}")
    return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
