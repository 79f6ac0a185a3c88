"""Command line front end.

The CLI is a thin client over the HTTP service: every command builds a
request, sends it to the FastAPI app (in-process by default, or to a remote
server via ``--server`` / ``SKH_SERVER``), and renders the JSON response.
Exit codes follow a fixed contract so scripts can branch on outcomes:

* 0   success (including a positive braid verdict)
* 1   parse or input error
* 2   invariant incompatible with the input
* 3   size cap exceeded
* 10  detect-braid: the tangle is not a braid
* 20  verify: a suite case failed
"""

from __future__ import annotations

import asyncio
import json
import os
import sys

import click
import httpx

from . import __version__

_EXIT_BY_CODE = {
    "parse-error": 1,
    "invalid-input": 1,
    "incompatible-invariant": 2,
    "size-cap": 3,
    "internal-check": 1,
}

EXIT_NOT_BRAID = 10
EXIT_VERIFY_FAILED = 20


def _post(path: str, payload: dict, server: str | None) -> httpx.Response:
    """Send one request, in-process unless a server URL is configured."""
    if server:
        with httpx.Client(base_url=server, timeout=600.0) as client:
            return client.post(path, json=payload)

    from .service import create_app

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(
            transport=transport, base_url="http://skh.internal", timeout=None
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _finish_error(resp: httpx.Response) -> None:
    """Print a service error and exit with the contract code."""
    try:
        err = resp.json()["error"]
        code, message = err["code"], err["message"]
    except Exception:
        code, message = "internal-check", resp.text.strip() or f"HTTP {resp.status_code}"
    click.echo(f"error ({code}): {message}", err=True)
    sys.exit(_EXIT_BY_CODE.get(code, 1))


def _read_diagram(file: str) -> str:
    if file == "-":
        return sys.stdin.read()
    try:
        with open(file, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        click.echo(f"error (parse-error): cannot read {file}: {exc}", err=True)
        sys.exit(1)


def _threads_opt(value: int | None) -> int | None:
    if value is not None:
        return value
    env = os.environ.get("SKH_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            click.echo(f"error (parse-error): bad SKH_THREADS value {env!r}", err=True)
            sys.exit(1)
    return None


def _render_record(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2, sort_keys=False)
    trigraded = any("k" in g for g in record["gradings"])
    cols = ["i", "j", "k", "dim"] if trigraded else ["i", "j", "dim"]
    lines = ["\t".join(cols)]
    for g in record["gradings"]:
        lines.append("\t".join(str(g[c]) for c in cols))
    return "\n".join(lines)


server_option = click.option(
    "--server",
    default=None,
    envvar="SKH_SERVER",
    help="Base URL of a running skh service; default runs in-process.",
)
threads_option = click.option(
    "--threads",
    type=int,
    default=None,
    help="Worker threads for the homology buckets (env: SKH_THREADS).",
)
max_crossings_option = click.option(
    "--max-crossings",
    type=int,
    default=24,
    show_default=True,
    help="Refuse diagrams with more crossings than this.",
)


@click.group()
@click.version_option(version=__version__, prog_name="skh")
def main() -> None:
    """Sutured Khovanov homology for tangles and annular links."""


@main.command()
@click.argument("file", type=str)
@click.option(
    "--invariant",
    type=click.Choice(["skh-tangle", "skh-annular", "khr", "kh-total"]),
    default="skh-tangle",
    show_default=True,
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "tsv"]),
    default="json",
    show_default=True,
)
@max_crossings_option
@threads_option
@server_option
def compute(
    file: str,
    invariant: str,
    fmt: str,
    max_crossings: int,
    threads: int | None,
    server: str | None,
) -> None:
    """Compute an invariant of the diagram in FILE ('-' for stdin)."""
    payload = {
        "diagram": _read_diagram(file),
        "invariant": invariant,
        "max_crossings": max_crossings,
        "threads": _threads_opt(threads),
    }
    resp = _post("/v1/compute", payload, server)
    if resp.status_code != 200:
        _finish_error(resp)
    click.echo(_render_record(resp.json(), fmt))


@main.command("detect-braid")
@click.argument("file", type=str)
@max_crossings_option
@threads_option
@server_option
def detect_braid_cmd(
    file: str, max_crossings: int, threads: int | None, server: str | None
) -> None:
    """Decide whether the tangle in FILE is isotopic to a braid."""
    payload = {
        "diagram": _read_diagram(file),
        "max_crossings": max_crossings,
        "threads": _threads_opt(threads),
    }
    resp = _post("/v1/detect-braid", payload, server)
    if resp.status_code != 200:
        _finish_error(resp)
    record = resp.json()
    if record["verdicts"]["braid"]:
        click.echo("BRAID")
        return
    click.echo(f"NOT-BRAID total={record['total']}")
    sys.exit(EXIT_NOT_BRAID)


@main.command()
@click.option(
    "--suite",
    type=click.Choice(["parity", "tensor", "cut", "moves", "oracle", "filtration"]),
    required=True,
)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--count", type=int, default=20, show_default=True)
@threads_option
@server_option
def verify(
    suite: str, seed: int, count: int, threads: int | None, server: str | None
) -> None:
    """Run a randomized verification suite; fail fast and echo the case."""
    payload = {
        "suite": suite,
        "seed": seed,
        "count": count,
        "threads": _threads_opt(threads),
    }
    resp = _post("/v1/verify", payload, server)
    if resp.status_code != 200:
        _finish_error(resp)
    rep = resp.json()
    status = "ok" if rep["ok"] else "FAIL"
    click.echo(
        f"suite={rep['suite']} seed={rep['seed']} passed={rep['passed']}/{rep['runs']} "
        f"elapsed_ms={rep['elapsed_ms']:.0f} {status}"
    )
    if not rep["ok"]:
        if rep.get("failure"):
            click.echo(rep["failure"], err=True)
        sys.exit(EXIT_VERIFY_FAILED)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    uvicorn.run("skh.service:app", host=host, port=port)


if __name__ == "__main__":
    main()
