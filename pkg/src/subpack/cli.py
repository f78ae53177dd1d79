"""Thin command-line client for the service.

Every subcommand builds a JSON request and posts it to the service: either a
remote instance (``--server http://host:port``) or an in-process instance of
the app (the default, no network involved).  Exit codes: 0 ok, 1 invalid
input or failed verification, 2 usage error, 3 budget or size cap exceeded,
4 internal/transport error.
"""

from __future__ import annotations

import argparse
import json
import sys

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_INTERNAL = 4


class _Client:
    def __init__(self, server: str | None):
        self.server = server.rstrip("/") if server else None
        self._test_client = None

    def post(self, path: str, payload: dict):
        if self.server:
            import httpx

            r = httpx.post(self.server + path, json=payload, timeout=3600.0)
            return r.status_code, r.json()
        if self._test_client is None:
            from fastapi.testclient import TestClient

            from .service.app import app

            self._test_client = TestClient(app, raise_server_exceptions=False)
        r = self._test_client.post(path, json=payload)
        return r.status_code, r.json()


def _error_exit(status: int, body: dict) -> int:
    detail = body.get("detail", body)
    if isinstance(detail, dict):
        code = detail.get("code", "")
        message = detail.get("message", str(detail))
        counts = detail.get("counts") or {}
    else:
        code, message, counts = "", str(detail), {}
    print(f"error: {message}", file=sys.stderr)
    if counts:
        print("  " + " ".join(f"{k}={v}" for k, v in counts.items()), file=sys.stderr)
    if status == 413 or code in ("size-cap", "budget"):
        return EXIT_CAP
    if code == "bad-code-file":
        return EXIT_INVALID
    if status in (400, 422):
        return EXIT_USAGE
    return EXIT_INTERNAL


def _write_out(path: str | None, text: str):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_bound(args, client: _Client) -> int:
    payload = {"q": args.q, "n": args.n, "k": args.k, "t": args.t, "lambda": args.lam,
               "paper_free": args.paper_free}
    status, body = client.post("/bound", payload)
    if status != 200:
        return _error_exit(status, body)
    if args.json:
        print(json.dumps(body, indent=2))
        return EXIT_OK
    tag = "exact" if body["exact"] else "interval"
    print(f"A_{body['q']}({body['n']},{body['k']},{body['t']};{body['lambda']}): "
          f"lower {body['lower']}  upper {body['upper']}  [{tag}]")
    for side in ("upper", "lower"):
        vals = [m for m in body["methods"] if m["side"] == side]
        print(f"  {side}: " + "  ".join(f"{m['method']}={m['value']}" for m in vals))
    return EXIT_OK


def _cmd_construct(args, client: _Client) -> int:
    payload = {"method": args.method, "q": args.q, "n": args.n, "k": args.k,
               "verify": not args.no_verify, "size_cap": args.size_cap}
    if args.method == "dual-linkage":
        if args.t is None or args.lam is None:
            print("error: dual-linkage needs --t and --lam", file=sys.stderr)
            return EXIT_USAGE
        payload.update({"t": args.t, "lambda": args.lam})
    else:
        if args.delta is None or args.alpha is None:
            print(f"error: {args.method} needs --delta and --alpha", file=sys.stderr)
            return EXIT_USAGE
        payload.update({"delta": args.delta, "alpha": args.alpha})
        if args.t_choice is not None:
            payload["t_choice"] = args.t_choice
    status, body = client.post("/construct", payload)
    if status != 200:
        return _error_exit(status, body)
    print(f"{body['params']}: {body['size']} blocks (formula value {body['formula']})")
    if body["verified"] is not None:
        print(f"verification ({body['verify_mode']}): {'valid' if body['verified'] else 'INVALID'}")
    _write_out(args.output, body["code"])
    if args.output:
        print(f"wrote {args.output}")
    return EXIT_OK if body["verified"] in (None, True) else EXIT_INVALID


def _cmd_verify(args, client: _Client) -> int:
    try:
        with open(args.path) as fh:
            text = fh.read()
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    if args.covering:
        if args.delta is None or args.alpha is None:
            print("error: covering mode needs --delta and --alpha", file=sys.stderr)
            return EXIT_USAGE
        payload = {"code": text, "mode": "covering", "delta": args.delta, "alpha": args.alpha,
                   "budget": args.budget, "seed": args.seed}
    else:
        if args.t is None or args.lam is None:
            print("error: packing mode needs --t and --lam", file=sys.stderr)
            return EXIT_USAGE
        payload = {"code": text, "mode": "packing", "t": args.t, "lambda": args.lam}
    status, body = client.post("/verify", payload)
    if status != 200:
        return _error_exit(status, body)
    if args.json:
        print(json.dumps(body, indent=2))
    else:
        print(body["report"])
    return EXIT_OK if body["valid"] else EXIT_INVALID


def _cmd_table(args, client: _Client) -> int:
    payload = {"q": args.q, "n": args.n, "lambda": args.lam,
               "paper_free": args.paper_free, "compare": args.compare}
    status, body = client.post("/table", payload)
    if status != 200:
        return _error_exit(status, body)
    if args.json:
        print(json.dumps(body, indent=2))
    else:
        print(body["rendered"], end="")
    if args.compare:
        bad = [c for c in body["cells"] if c.get("consistent") is False]
        return EXIT_INVALID if bad else EXIT_OK
    return EXIT_OK


def _cmd_ilp(args, client: _Client) -> int:
    payload = {"q": args.q, "n": args.n, "k": args.k, "t": args.t, "lambda": args.lam,
               "format": args.format, "strengthen": args.strengthen,
               "paper_free": args.paper_free,
               "max_variables": args.max_vars, "max_rows": args.max_rows}
    status, body = client.post("/ilp", payload)
    if status != 200:
        return _error_exit(status, body)
    print(f"{body['num_variables']} variables, {body['num_rows']} rows"
          + (" (strengthened)" if body["strengthened"] else ""))
    _write_out(args.output, body["model_text"])
    if args.output:
        print(f"wrote {args.output}")
        index_path = args.index_out or (args.output + ".index")
        with open(index_path, "w") as fh:
            fh.write(body["index_text"])
        print(f"wrote {index_path}")
    return EXIT_OK


def _cmd_search(args, client: _Client) -> int:
    payload = {"q": args.q, "n": args.n, "k": args.k, "t": args.t, "lambda": args.lam,
               "mode": args.mode, "seed": args.seed, "passes": args.passes,
               "budget": args.budget, "max_blocks": args.max_blocks,
               "paper_free": args.paper_free}
    status, body = client.post("/search", payload)
    if status != 200:
        return _error_exit(status, body)
    flag = "exact" if body["complete"] else "best found (budget exhausted)"
    cut = f", upper cutoff {body['cutoff']}" if body["cutoff"] is not None else ""
    print(f"{args.mode}: {body['value']} blocks [{flag}]{cut} ({body['nodes']} nodes)")
    if args.output:
        _write_out(args.output, body["code"])
        print(f"wrote {args.output}")
    return EXIT_OK


def _cmd_serve(args, _client) -> int:
    import uvicorn

    from .service.app import app

    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def _add_packing_args(sp):
    sp.add_argument("q", type=int)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("t", type=int)
    sp.add_argument("lam", type=int, metavar="lambda")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="subpack",
        description="bounds, constructions, verification and ILP export for subspace packings",
    )
    ap.add_argument("--server", help="URL of a running service (default: in-process)")
    sub = ap.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bound", help="lower/upper bounds with provenance")
    _add_packing_args(b)
    b.add_argument("--paper-free", action="store_true", help="disable the known-values registry")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=_cmd_bound)

    c = sub.add_parser("construct", help="build a code and write it out")
    c.add_argument("method", choices=["lifted-mrd", "linkage", "dual-linkage"])
    c.add_argument("--q", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--delta", type=int)
    c.add_argument("--alpha", type=int)
    c.add_argument("--t", type=int)
    c.add_argument("--lam", type=int)
    c.add_argument("--t-choice", type=int, dest="t_choice")
    c.add_argument("--no-verify", action="store_true")
    c.add_argument("--size-cap", type=int, default=500_000)
    c.add_argument("-o", "--output")
    c.set_defaults(func=_cmd_construct)

    v = sub.add_parser("verify", help="verify a code file")
    v.add_argument("path")
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--packing", action="store_true", default=True)
    mode.add_argument("--covering", action="store_true")
    v.add_argument("--t", type=int)
    v.add_argument("--lam", type=int)
    v.add_argument("--delta", type=int)
    v.add_argument("--alpha", type=int)
    v.add_argument("--budget", type=int, default=10_000_000)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)

    t = sub.add_parser("table", help="render a bound table")
    t.add_argument("q", type=int)
    t.add_argument("n", type=int)
    t.add_argument("lam", type=int, metavar="lambda")
    t.add_argument("--paper-free", action="store_true")
    t.add_argument("--compare", action="store_true", help="diff against bundled fixtures")
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=_cmd_table)

    i = sub.add_parser("ilp", help="emit the integer program")
    _add_packing_args(i)
    i.add_argument("--format", choices=["lp", "mps"], default="lp")
    i.add_argument("--strengthen", action="store_true")
    i.add_argument("--paper-free", action="store_true")
    i.add_argument("--max-vars", type=int, default=20_000)
    i.add_argument("--max-rows", type=int, default=50_000)
    i.add_argument("-o", "--output")
    i.add_argument("--index-out")
    i.set_defaults(func=_cmd_ilp)

    s = sub.add_parser("search", help="exhaustive or greedy search")
    _add_packing_args(s)
    s.add_argument("--mode", choices=["exhaustive", "greedy"], default="exhaustive")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--passes", type=int, default=1)
    s.add_argument("--budget", type=int, default=1_000_000)
    s.add_argument("--max-blocks", type=int, default=700)
    s.add_argument("--paper-free", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=_cmd_search)

    sv = sub.add_parser("serve", help="run the service with uvicorn")
    sv.add_argument("--host", default="127.0.0.1")
    sv.add_argument("--port", type=int, default=8000)
    sv.set_defaults(func=_cmd_serve)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    client = _Client(args.server)
    try:
        return args.func(args, client)
    except Exception as e:  # transport or unexpected failure
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
