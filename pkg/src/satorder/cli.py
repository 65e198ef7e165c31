"""Command-line front end.

The CLI is a thin client of the HTTP service: it parses poset files, sends
requests, and formats responses.  By default it mounts the service
in-process, so no server is needed; pass ``--server URL`` to talk to a
running instance instead.

Exit codes across all commands: 0 for an affirmative verdict or success,
1 for a negative verdict (not saturated, mismatches found), 2 for usage or
input errors.
"""

from __future__ import annotations

import json
import sys

import click
import httpx

from .client import make_session
from .errors import ParseError
from .fileio import load_poset_payload, save_poset_payload


class CommandFailed(Exception):
    """An error the command should report on stderr before exiting 2."""


def post(session, path: str, payload: dict) -> dict:
    try:
        resp = session.post(path, json=payload)
    except httpx.HTTPError as exc:
        raise CommandFailed(f"cannot reach the service: {exc}") from exc
    if resp.status_code != 200:
        try:
            detail = resp.json().get("detail")
        except Exception:
            detail = None
        if isinstance(detail, dict) and "error" in detail:
            raise CommandFailed(f"{detail['error']}: {detail.get('message', '')}")
        if isinstance(detail, list):
            msgs = []
            for item in detail:
                if isinstance(item, dict) and "msg" in item:
                    loc = ".".join(str(x) for x in item.get("loc", ())[1:])
                    msgs.append(f"{loc}: {item['msg']}" if loc else str(item["msg"]))
            if msgs:
                raise CommandFailed("; ".join(msgs))
        if detail:
            raise CommandFailed(f"service rejected the request: {detail}")
        raise CommandFailed(f"service error: HTTP {resp.status_code}")
    return resp.json()


def fail(ctx: click.Context, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    ctx.exit(2)


@click.group()
@click.option("--server", default=None, metavar="URL", help="Remote service URL; default runs the service in-process.")
@click.pass_context
def main(ctx, server):
    """Analyze finite posets: saturation, witnesses, interval orders."""
    ctx.obj = make_session(server)


@main.command()
@click.argument("file", metavar="FILE")
@click.option("--method", type=click.Choice(["fast", "exhaustive", "oracle"]), default="fast", show_default=True)
@click.pass_context
def check(ctx, file, method):
    """Decide whether the poset in FILE is saturated."""
    try:
        payload = load_poset_payload(file)
        data = post(ctx.obj, "/check", {"poset": payload, "method": method})
    except (ParseError, CommandFailed) as exc:
        fail(ctx, str(exc))
    click.echo("saturated" if data["saturated"] else "not saturated")
    ctx.exit(0 if data["saturated"] else 1)


@main.command()
@click.argument("file", metavar="FILE")
@click.pass_context
def witness(ctx, file):
    """Print a witness: an untopped bouquet pair plus its merging
    representation, or a saturation certificate (with the interval
    representation when the order is two-plus-two free)."""
    try:
        payload = load_poset_payload(file)
        data = post(ctx.obj, "/witness", {"poset": payload})
    except (ParseError, CommandFailed) as exc:
        fail(ctx, str(exc))
    if not data["saturated"]:
        click.echo("not saturated")
        for i, b in enumerate(data["bouquets"]):
            click.echo(f"bouquet {i}: members={b['members']} top={b['top']}")
        click.echo(f"merging representation (merged point {data['merged_point']}):")
        block = dict(data["merging"])
        block["merged_point"] = data["merged_point"]
        click.echo(json.dumps(block, sort_keys=True))
        ctx.exit(1)
    click.echo("saturated")
    if data["two_plus_two"] is not None:
        quad = tuple(data["two_plus_two"])
        click.echo(f"contains a two-plus-two suborder at {quad}; no interval representation exists")
    if data["intervals"] is not None:
        click.echo("interval representation:")
        click.echo(json.dumps({"intervals": data["intervals"]}, sort_keys=True))
    click.echo(f"certificate: {data['canonical_pairs_topped']} canonical bouquet pairs, all skewly topped")
    ctx.exit(0)


@main.command()
@click.argument("kind", metavar="KIND")
@click.option("--n", type=int, default=None, help="Element count (chain, antichain, random).")
@click.option("--k", type=int, default=None, help="Tower height (skew-towers).")
@click.option("--density", type=float, default=None, help="Pair probability (random).")
@click.option("--seed", type=int, default=None, help="Seed (random).")
@click.option("-o", "--output", required=True, metavar="FILE", help="Poset file to write.")
@click.pass_context
def generate(ctx, kind, n, k, density, seed, output):
    """Write a named fixture to a poset file.

    Kinds: chain, antichain, two-plus-two, n-poset, topped-two-two,
    skew-towers, random.  Element identity is positional; skew-towers labels
    its elements l0..l{k-1}, l, r0..r{k-1}, r, t0..t{k-1} in that index order.
    """
    try:
        data = post(ctx.obj, "/generate", {"kind": kind, "n": n, "k": k, "density": density, "seed": seed})
    except CommandFailed as exc:
        fail(ctx, str(exc))
    try:
        save_poset_payload(output, data["n"], [tuple(p) for p in data["strict"]], data["names"])
    except OSError as exc:
        fail(ctx, f"cannot write {output}: {exc}")
    click.echo(f"wrote {output}: n={data['n']}, {len(data['strict'])} cover pairs")


@main.command()
@click.argument("file", metavar="FILE")
@click.pass_context
def reps(ctx, file):
    """List the canonical parsimonious representations as new-point maps."""
    try:
        payload = load_poset_payload(file)
        data = post(ctx.obj, "/reps", {"poset": payload})
    except (ParseError, CommandFailed) as exc:
        fail(ctx, str(exc))
    for i, m in enumerate(data["maps"]):
        marker = "injective" if m["injective"] else "NOT injective"
        click.echo(f"{i}: values={m['values']} {marker}")
    click.echo(f"{data['count']} canonical parsimonious maps")


@main.command()
@click.option("--n-max", type=int, required=True, help="Largest size to examine (<= 8).")
@click.option("--exhaustive-limit", type=int, default=5, show_default=True, help="Enumerate all posets up to this size.")
@click.option("--samples", type=int, default=100, show_default=True, help="Random posets per size above the limit.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("-o", "--output", default=None, metavar="FILE", help="Also write the structured JSON report.")
@click.pass_context
def verify(ctx, n_max, exhaustive_limit, samples, seed, output):
    """Cross-validate all checkers over a corpus and report mismatches."""
    try:
        data = post(
            ctx.obj,
            "/campaign",
            {"n_max": n_max, "exhaustive_limit": exhaustive_limit, "samples_per_n": samples, "seed": seed},
        )
    except CommandFailed as exc:
        fail(ctx, str(exc))
    click.echo(data["text"], nl=False)
    if output:
        try:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(data["json_text"])
        except OSError as exc:
            fail(ctx, f"cannot write {output}: {exc}")
    ctx.exit(0 if not data["mismatches"] else 1)


@main.command("export-dot")
@click.argument("file", metavar="FILE")
@click.option("-o", "--output", default=None, metavar="FILE", help="DOT file to write (default: stdout).")
@click.pass_context
def export_dot(ctx, file, output):
    """Render the poset's cover diagram as a DOT digraph."""
    try:
        payload = load_poset_payload(file)
        data = post(ctx.obj, "/export/dot", {"poset": payload})
    except (ParseError, CommandFailed) as exc:
        fail(ctx, str(exc))
    if output:
        try:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(data["dot"])
        except OSError as exc:
            fail(ctx, f"cannot write {output}: {exc}")
    else:
        click.echo(data["dot"], nl=False)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main(sys.argv[1:])
