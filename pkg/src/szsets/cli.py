"""Command-line client for the counting service.

By default each invocation spins the FastAPI app up in-process (no network,
no running daemon needed) and talks to it over an ASGI transport; pass
``--server URL`` to target a live instance started with ``szsets serve``.

Exit codes are a stable scripting contract: 0 success, 1 verification
mismatch, 2 argument error, 3 enumeration ceiling exceeded, 4 mapping
precondition violated.
"""

from __future__ import annotations

import asyncio
import json
import sys
from typing import Any, Optional

import click
import httpx

from .counts import FAMILY_TAGS, GAP_FAMILY_TAGS
from .sets import FiniteSet

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CEILING = 3
EXIT_MAPPING = 4


def _call(server: Optional[str], path: str, payload: dict) -> tuple[int, Any]:
    async def go() -> tuple[int, Any]:
        if server:
            client = httpx.AsyncClient(base_url=server, timeout=None)
        else:
            from .service.app import create_app

            transport = httpx.ASGITransport(app=create_app())
            client = httpx.AsyncClient(transport=transport, base_url="http://szsets.local", timeout=None)
        async with client:
            response = await client.post(path, json=payload)
            try:
                data = response.json()
            except ValueError:
                data = None
            return response.status_code, data

    try:
        return asyncio.run(go())
    except httpx.HTTPError as exc:
        click.echo(f"error: cannot reach service: {exc}", err=True)
        raise SystemExit(EXIT_USAGE) from None


def _format_validation_detail(detail: Any) -> str:
    if isinstance(detail, list):
        parts = []
        for item in detail:
            loc = ".".join(str(p) for p in item.get("loc", []) if p != "body")
            parts.append(f"{loc}: {item.get('msg', 'invalid')}" if loc else item.get("msg", "invalid"))
        return "; ".join(parts) or "invalid request"
    return str(detail)


def _ensure_ok(status: int, data: Any) -> Any:
    if status == 200:
        return data
    code = None
    message = f"service returned status {status}"
    if isinstance(data, dict):
        err = data.get("error")
        if isinstance(err, dict):
            code = err.get("code")
            message = err.get("message", message)
        elif "detail" in data:
            message = _format_validation_detail(data["detail"])
    click.echo(f"error: {message}", err=True)
    if code == "oracle_ceiling":
        raise SystemExit(EXIT_CEILING)
    if code == "mapping_domain":
        raise SystemExit(EXIT_MAPPING)
    raise SystemExit(EXIT_USAGE)


def _validate_family_args(family: str, k: Optional[int]) -> None:
    if family not in FAMILY_TAGS:
        raise click.UsageError(f"unknown family {family!r}; choose from {', '.join(FAMILY_TAGS)}")
    if family in GAP_FAMILY_TAGS:
        if k is None:
            raise click.UsageError(f"family {family} requires --k")
        if k < 2:
            raise click.UsageError(f"--k must be >= 2, got {k}")
    elif k is not None:
        raise click.UsageError(f"family {family} does not take --k")


def _parse_k_range(text: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise click.UsageError(f"--k-range must look like 2..4, got {text!r}")
    try:
        start, stop = int(lo), int(hi)
    except ValueError:
        raise click.UsageError(f"--k-range must look like 2..4, got {text!r}") from None
    if start < 2 or stop < start:
        raise click.UsageError(f"--k-range bounds must satisfy 2 <= lo <= hi, got {text!r}")
    return list(range(start, stop + 1))


@click.group()
@click.option("--server", metavar="URL", default=None, help="Base URL of a running szsets service; omit to run the service in-process.")
@click.pass_context
def main(ctx: click.Context, server: Optional[str]) -> None:
    """Exact counts of Schreier and Zeckendorf subset families."""
    ctx.obj = server


@main.command()
@click.argument("family")
@click.option("--n", type=int, required=True, help="Ambient upper bound n.")
@click.option("--k", type=int, default=None, help="Gap parameter for families H, I, J.")
@click.pass_obj
def count(server: Optional[str], family: str, n: int, k: Optional[int]) -> None:
    """Print the family's exact value at n."""
    _validate_family_args(family, k)
    status, data = _call(server, "/count", {"family": family, "n": n, "k": k})
    data = _ensure_ok(status, data)
    click.echo(data["value"])


@main.command()
@click.argument("family")
@click.option("--from", "start", type=int, required=True, help="First n, inclusive.")
@click.option("--to", "stop", type=int, required=True, help="Last n, inclusive.")
@click.option("--k", type=int, default=None, help="Gap parameter for families H, I, J.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["plain", "bfile", "csv", "json"]),
    default="plain",
    help="Output format.",
)
@click.pass_obj
def table(server: Optional[str], family: str, start: int, stop: int, k: Optional[int], fmt: str) -> None:
    """Print one row per n in [from, to]."""
    _validate_family_args(family, k)
    if start > stop:
        raise click.UsageError(f"empty range: --from {start} > --to {stop}")
    status, data = _call(server, "/table", {"family": family, "from": start, "to": stop, "k": k})
    data = _ensure_ok(status, data)
    rows = data["rows"]
    if fmt == "plain":
        for row in rows:
            click.echo(row["value"])
    elif fmt == "bfile":
        for row in rows:
            click.echo(f"{row['n']} {row['value']}")
    elif fmt == "csv":
        click.echo("n,value")
        for row in rows:
            click.echo(f"{row['n']},{row['value']}")
    else:
        click.echo(json.dumps([{"n": row["n"], "value": row["value"]} for row in rows]))


@main.command(name="list")
@click.option("--n", type=int, required=True, help="Ambient upper bound n.")
@click.option("--schreier", type=click.Choice(["any", "weak", "strong", "maximal"]), default="any")
@click.option("--zeck-k", type=int, default=None, help="Require every consecutive gap >= this value.")
@click.option("--odd-gaps", is_flag=True, help="Require every consecutive gap to be odd.")
@click.option("--contains-n", "constraint", flag_value="contains_n", help="Only sets containing n.")
@click.option("--max-n", "constraint", flag_value="max_equals_n", help="Only sets with maximum exactly n.")
@click.option("--max-parity", type=click.Choice(["any", "even", "odd"]), default="any", help="Parity filter on the maximum.")
@click.option("--include-empty", is_flag=True, help="Admit the empty set.")
@click.pass_obj
def list_cmd(
    server: Optional[str],
    n: int,
    schreier: str,
    zeck_k: Optional[int],
    odd_gaps: bool,
    constraint: Optional[str],
    max_parity: str,
    include_empty: bool,
) -> None:
    """List matching subsets of {1..n}, one per line, then their count."""
    payload = {
        "n": n,
        "schreier": schreier,
        "zeckendorf_gap": zeck_k,
        "odd_gaps_only": odd_gaps,
        "max_constraint": constraint or "none",
        "max_parity": max_parity,
        "include_empty": include_empty,
    }
    status, data = _call(server, "/list", payload)
    data = _ensure_ok(status, data)
    for elements in data["sets"]:
        click.echo(str(FiniteSet(elements)))
    click.echo(f"# count: {data['count']}")


def _print_family_report(resp: dict) -> tuple[bool, Optional[dict]]:
    label = resp["family"] + (f"[k={resp['k']}]" if resp.get("k") is not None else "")
    click.echo(f"== family {label}")
    first_fail = None
    passed = 0
    for row in resp["rows"]:
        parts = [f"n={row['n']}", f"oracle={row['oracle']}", f"formula={row['formula']}"]
        if row.get("recurrence") is not None:
            parts.append(f"recurrence={row['recurrence']}")
        ok = row["all_equal"]
        passed += ok
        click.echo("  " + "  ".join(parts) + ("  PASS" if ok else "  FAIL"))
        if not ok and first_fail is None:
            first_fail = dict(row, family=label)
    verdict = "PASS" if resp["overall_pass"] else "FAIL"
    click.echo(f"family {label}: {verdict} ({passed}/{len(resp['rows'])} rows)")
    return resp["overall_pass"], first_fail


def _print_bijection_report(resp: dict) -> tuple[bool, Optional[dict]]:
    click.echo("== bijection")
    first_fail = None
    for report in resp["reports"]:
        ok = report["is_bijection"]
        click.echo(
            f"  n={report['n']}  domain={report['domain_size']}  image={report['image_size']}"
            f"  round_trip={'yes' if report['round_trip_ok'] else 'no'}"
            + ("  PASS" if ok else "  FAIL")
        )
        if not ok and first_fail is None:
            first_fail = dict(report, family="bijection")
    verdict = "PASS" if resp["overall_pass"] else "FAIL"
    click.echo(f"bijection: {verdict} ({len(resp['reports'])} values of n)")
    return resp["overall_pass"], first_fail


def _finish_verify(all_pass: bool, first_fail: Optional[dict]) -> None:
    if all_pass:
        return
    if first_fail is not None:
        click.echo(f"first failing row: {first_fail}", err=True)
    raise SystemExit(EXIT_VERIFY_FAILED)


@main.command()
@click.argument("target")
@click.option("--max-n", type=int, required=True, help="Verify n = 1..max-n.")
@click.option("--k", type=int, default=None, help="Single gap parameter for H, I, J.")
@click.option("--k-range", default=None, metavar="A..B", help="Gap parameter range, e.g. 2..4.")
@click.pass_obj
def verify(server: Optional[str], target: str, max_n: int, k: Optional[int], k_range: Optional[str]) -> None:
    """Cross-check a family (or 'all', or 'bijection') against the oracle."""
    if target == "bijection":
        status, data = _call(server, "/verify/bijection", {"max_n": max_n})
        data = _ensure_ok(status, data)
        ok, first_fail = _print_bijection_report(data)
        _finish_verify(ok, first_fail)
        return

    k_values: Optional[list[int]] = None
    if k_range is not None:
        k_values = _parse_k_range(k_range)
    elif k is not None:
        if k < 2:
            raise click.UsageError(f"--k must be >= 2, got {k}")
        k_values = [k]

    if target == "all":
        payload = {"max_n": max_n, "k_values": k_values or [2, 3, 4]}
        status, data = _call(server, "/verify/all", payload)
        data = _ensure_ok(status, data)
        all_pass = True
        first_fail = None
        for family_resp in data["families"]:
            ok, fail = _print_family_report(family_resp)
            all_pass &= ok
            first_fail = first_fail or fail
        ok, fail = _print_bijection_report(data["bijection"])
        all_pass &= ok
        first_fail = first_fail or fail
        _finish_verify(all_pass, first_fail)
        return

    if target not in FAMILY_TAGS:
        raise click.UsageError(
            f"unknown verify target {target!r}; choose a family tag, 'all', or 'bijection'"
        )
    if target in GAP_FAMILY_TAGS:
        if k_values is None:
            raise click.UsageError(f"family {target} requires --k or --k-range")
    elif k_values is not None:
        raise click.UsageError(f"family {target} does not take --k")

    all_pass = True
    first_fail = None
    for k_value in k_values or [None]:
        status, data = _call(server, "/verify/family", {"family": target, "max_n": max_n, "k": k_value})
        data = _ensure_ok(status, data)
        ok, fail = _print_family_report(data)
        all_pass &= ok
        first_fail = first_fail or fail
    _finish_verify(all_pass, first_fail)


@main.command()
@click.option("--n", type=int, required=True, help="Ambient upper bound n.")
@click.option("--set", "set_text", required=True, metavar="SET", help="Set in canonical form, e.g. '{2,3}'.")
@click.option("--invert", is_flag=True, help="Apply the inverse mapping instead.")
@click.pass_obj
def bijection(server: Optional[str], n: int, set_text: str, invert: bool) -> None:
    """Apply the gap-widening mapping (or its inverse) to one set."""
    try:
        source = FiniteSet.parse(set_text)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        raise SystemExit(EXIT_USAGE) from None
    payload = {"n": n, "elements": list(source.elements), "invert": invert}
    status, data = _call(server, "/bijection/apply", payload)
    data = _ensure_ok(status, data)
    click.echo(str(FiniteSet(data["result"])))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, type=int, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service.app import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main(sys.argv[1:])
