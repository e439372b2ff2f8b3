"""Command-line client for the fingerprinting toolkit.

Each subcommand validates its flags, sends one request to the service (an
in-process instance by default, or a remote one via --server), and prints
the machine-readable response: JSON passed through verbatim, or CSV rendered
from it.  Diagnostics go to stderr.  Exit codes: 0 success, 1 runtime or
input-data error, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys


def _open_client(server: str | None):
    if server:
        import httpx

        return httpx.Client(base_url=server, timeout=600.0)
    import warnings

    with warnings.catch_warnings():
        # starlette's testclient import warns about the installed httpx line;
        # it is only noise for the in-process transport used here.
        warnings.simplefilter("ignore")
        from fastapi.testclient import TestClient

    from .service import app

    return TestClient(app)


def _post(args, path: str, payload: dict):
    """POST to the service; returns (response, exit_code_or_None)."""
    with _open_client(args.server) as client:
        resp = client.post(path, json=payload)
        if resp.status_code == 422:
            print(f"usage error: {resp.text}", file=sys.stderr)
            return None, 2
        if resp.status_code >= 400:
            print(f"error: {resp.json().get('detail', resp.text)}", file=sys.stderr)
            return None, 1
        return resp, None


def _probability(parser, name, value):
    if not 0.0 <= value <= 1.0:
        parser.error(f"{name} must lie in [0, 1], got {value}")


def _cmd_encode(parser, args) -> int:
    if not 0 <= args.message < args.m:
        parser.error(f"--message must lie in [0, {args.m})")
    payload = {
        "m": args.m,
        "message": args.message,
        "search": args.search,
        "iterations": args.iterations,
        "seed": args.seed,
    }
    resp, code = _post(args, "/encode", payload)
    if resp is None:
        return code
    data = resp.json()
    print("w,theta,phi")
    print(f"{data['w']},{data['theta']!r},{data['phi']!r}")
    return 0


def _cmd_simulate(parser, args) -> int:
    if args.trials < 1:
        parser.error("--trials must be positive")
    _probability(parser, "--dip-depth", args.dip_depth)
    _probability(parser, "--pi0", args.pi0)
    _probability(parser, "--pi1", args.pi1)
    if args.adversary == "pair":
        if args.x is None or args.y is None:
            parser.error("--adversary pair needs --x and --y")
        if not (0 <= args.x < 4 and 0 <= args.y < 4):
            parser.error("--x and --y must lie in [0, 4)")
    payload = {
        "protocol": args.protocol,
        "trials": args.trials,
        "seed": args.seed,
        "dip_depth": args.dip_depth,
        "tau_c": args.tau_c,
        "pi0": args.pi0,
        "pi1": args.pi1,
        "adversary": args.adversary,
        "x": args.x,
        "y": args.y,
        "workers": args.workers,
    }
    resp, code = _post(args, "/simulate", payload)
    if resp is None:
        return code
    print(resp.text)
    return 0


def _cmd_optimize(parser, args) -> int:
    _probability(parser, "--p-same", args.p_same)
    _probability(parser, "--p-diff", args.p_diff)
    resp, code = _post(args, "/optimize", {"p_same": args.p_same, "p_diff": args.p_diff})
    if resp is None:
        return code
    print(resp.text)
    return 0


def _cmd_calibrate(parser, args) -> int:
    try:
        with open(args.table, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: cannot read {args.table}: {exc}", file=sys.stderr)
        return 1
    resp, code = _post(args, "/calibrate", {"csv_text": text, "optimize": args.optimize})
    if resp is None:
        return code
    print(resp.text)
    return 0


def _cmd_classical(parser, args) -> int:
    payload = {
        "shared_bits": args.shared_bits,
        "roger": args.roger,
        "scoring": args.scoring.replace("-", "_"),
    }
    resp, code = _post(args, "/classical", payload)
    if resp is None:
        return code
    print(resp.text)
    return 0


def _cmd_dip_curve(parser, args) -> int:
    _probability(parser, "--delta", args.delta)
    _probability(parser, "--dip-depth", args.dip_depth)
    if args.tau_c <= 0:
        parser.error("--tau-c must be positive")
    if args.tau_max <= 0:
        parser.error("--tau-max must be positive")
    if args.points < 2:
        parser.error("--points must be at least 2")
    payload = {
        "delta": args.delta,
        "dip_depth": args.dip_depth,
        "tau_c": args.tau_c,
        "tau_max": args.tau_max,
        "points": args.points,
    }
    resp, code = _post(args, "/dip-curve", payload)
    if resp is None:
        return code
    print("tau_s,relative_rate")
    for point in resp.json()["points"]:
        print(f"{point['tau_s']!r},{point['relative_rate']!r}")
    return 0


def _cmd_serve(parser, args) -> int:
    import uvicorn

    uvicorn.run("qfp.service:app", host=args.host, port=args.port)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qfp",
        description="Single-qubit quantum fingerprinting toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_server(p):
        p.add_argument("--server", default=None, metavar="URL",
                       help="remote service URL (default: run in-process)")

    p = sub.add_parser("encode", help="print the fingerprint state for a message")
    p.add_argument("--m", type=int, default=4)
    p.add_argument("--message", type=int, required=True)
    p.add_argument("--search", action="store_true",
                   help="use the numerical encoding search instead of the tetrahedral map")
    p.add_argument("--iterations", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    add_server(p)
    p.set_defaults(func=_cmd_encode)

    p = sub.add_parser("simulate", help="run seeded Monte Carlo protocol trials")
    p.add_argument("--protocol", choices=["quantum", "entangled"], required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dip-depth", type=float, default=1.0)
    p.add_argument("--tau-c", type=float, default=1e-12)
    p.add_argument("--pi0", type=float, default=0.0)
    p.add_argument("--pi1", type=float, default=0.0)
    p.add_argument("--adversary", choices=["wcs", "uniform", "pair"], default="wcs")
    p.add_argument("--x", type=int, default=None)
    p.add_argument("--y", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    add_server(p)
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("optimize", help="optimal mixed strategy for given error rates")
    p.add_argument("--p-same", type=float, required=True, dest="p_same")
    p.add_argument("--p-diff", type=float, required=True, dest="p_diff")
    add_server(p)
    p.set_defaults(func=_cmd_optimize)

    p = sub.add_parser("calibrate", help="fit the imperfection model to a visibility table")
    p.add_argument("--table", required=True, metavar="FILE")
    p.add_argument("--optimize", action="store_true",
                   help="also chain into the mixed-strategy optimizer")
    add_server(p)
    p.set_defaults(func=_cmd_calibrate)

    p = sub.add_parser("classical", help="exact classical shared-randomness game value")
    p.add_argument("--shared-bits", type=int, choices=[0, 1, 2], required=True)
    p.add_argument("--roger", choices=["pure", "mixed"], default="mixed")
    p.add_argument("--scoring", choices=["one-sided", "two-sided"], default="one-sided")
    add_server(p)
    p.set_defaults(func=_cmd_classical)

    p = sub.add_parser("dip-curve", help="normalized coincidence rate vs photon delay")
    p.add_argument("--delta", type=float, required=True,
                   help="overlap |<a|b>|^2 of the two input states")
    p.add_argument("--dip-depth", type=float, default=1.0)
    p.add_argument("--tau-c", type=float, default=1e-12)
    p.add_argument("--tau-max", type=float, required=True)
    p.add_argument("--points", type=int, default=101)
    add_server(p)
    p.set_defaults(func=_cmd_dip_curve)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(parser, args)


if __name__ == "__main__":
    sys.exit(main())
