"""Command-line interface.

Usage:
    revdickson eval --field 7 --n 5 --x 2 --method all
    revdickson coeffs --field 7 --n 4 --kind 2
    revdickson scan --field 3^2 --n-max 80 --format csv --out scan.csv
    revdickson sum --field 5
    revdickson verify --level full

Exit codes: 0 success, 1 usage or parse error, 2 a verification failed.
Records are newline-delimited JSON (or CSV with a header matching the JSON
keys); field elements are written as coefficient lists, low degree first.
"""

from __future__ import annotations

import json
import sys
from typing import Any, Iterable, TextIO

import click

from . import charsum, dickson as dk, permcheck as pc, verify as vf
from .gf import GF, FieldError, parse_field

__all__ = ["cli", "main", "SCHEMA"]

SCHEMA = "revdickson/1"

_METHODS = {
    "recurrence": lambda F, n, x: dk.f3_eval_recurrence(F, n, x),
    "coeff": lambda F, n, x: dk.f3_eval_coeff(F, n, 1, x),
    "functional": lambda F, n, x: dk.f3_eval_functional(F, n, x),
    "jacobsthal": lambda F, n, x: dk.f3_eval_jacobsthal(F, n, x),
}


class _FieldType(click.ParamType):
    name = "field"

    def convert(self, value: Any, param, ctx) -> GF:
        if isinstance(value, GF):
            return value
        try:
            return parse_field(str(value))
        except FieldError as exc:
            self.fail(str(exc), param, ctx)


FIELD = _FieldType()


def parse_element(F: GF, text: str) -> int:
    """A bare integer is a prime-field constant; "c0,c1,..." is a coefficient list."""
    try:
        parts = [int(t) for t in text.split(",")]
    except ValueError:
        raise click.BadParameter(f"cannot parse element {text!r}") from None
    if len(parts) == 1:
        return F.scalar(parts[0])
    try:
        return F.from_coeffs(parts)
    except FieldError as exc:
        raise click.BadParameter(str(exc)) from None


def _elem(F: GF, a: int) -> list[int]:
    return list(F.coeffs(a))


def _odd(F: GF) -> None:
    try:
        dk.require_odd(F)
    except dk.CharacteristicTwoError as exc:
        raise click.UsageError(str(exc)) from None


def _csv_cell(v: Any) -> str:
    if isinstance(v, list):
        return '"' + ",".join(str(c) for c in v) + '"'
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    s = str(v)
    if any(ch in s for ch in ',"\n'):
        return '"' + s.replace('"', '""') + '"'
    return s


def write_records(records: Iterable[dict], fmt: str, out: TextIO) -> None:
    records = list(records)
    if fmt == "json":
        for rec in records:
            out.write(json.dumps(rec, separators=(",", ":")) + "\n")
        return
    if not records:
        return
    keys = list(records[0])
    out.write(",".join(keys) + "\r\n")
    for rec in records:
        out.write(",".join(_csv_cell(rec[k]) for k in keys) + "\r\n")


def _emit(records: list[dict], fmt: str, out_path: str | None) -> None:
    if out_path is None:
        write_records(records, fmt, sys.stdout)
        return
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        write_records(records, fmt, fh)


@click.group()
def cli() -> None:
    """Reversed Dickson polynomials of the third kind over finite fields."""


@cli.command("eval")
@click.option("--field", "F", type=FIELD, required=True, help="p or p^e")
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--x", "x_text", required=True, help="integer or comma-separated coefficients")
@click.option(
    "--method",
    type=click.Choice([*_METHODS, "all"]),
    default="recurrence",
    show_default=True,
)
def cmd_eval(F: GF, n: int, x_text: str, method: str) -> int:
    """Evaluate F_n(1, x)."""
    _odd(F)
    x = parse_element(F, x_text)
    rec: dict[str, Any] = {"schema": SCHEMA, "field": F.label, "n": n, "x": _elem(F, x)}
    if method == "all":
        values = {name: fn(F, n, x) for name, fn in _METHODS.items()}
        rec["value"] = _elem(F, values["recurrence"])
        rec["values"] = {k: _elem(F, v) for k, v in values.items()}
        rec["agree"] = len(set(values.values())) == 1
    else:
        rec["method"] = method
        rec["value"] = _elem(F, _METHODS[method](F, n, x))
    write_records([rec], "json", sys.stdout)
    return 0 if rec.get("agree", True) else 2


@cli.command("coeffs")
@click.option("--field", "F", type=FIELD, required=True)
@click.option("--n", "n", type=click.IntRange(min=0), required=True)
@click.option("--kind", type=click.IntRange(0, 2), default=2, show_default=True,
              help="0, 1, 2 for the first, second, third kind")
def cmd_coeffs(F: GF, n: int, kind: int) -> int:
    """Coefficients of D_{n,kind}(1, x) over F_p, low degree first."""
    poly = dk.reversed_dickson_coeffs(F, n, kind)
    rec = {"schema": SCHEMA, "field": F.label, "n": n, "kind": kind, "coeffs": list(poly.coeffs)}
    write_records([rec], "json", sys.stdout)
    return 0


@cli.command("scan")
@click.option("--field", "F", type=FIELD, required=True)
@click.option("--n-max", type=click.IntRange(min=0), required=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
def cmd_scan(F: GF, n_max: int, out_path: str | None, fmt: str) -> int:
    """Permutation verdict and theorem cross-checks for n = 0..n_max."""
    _odd(F)
    reports = pc.scan(F, n_max)
    records = []
    for r in reports:
        rec = {"schema": SCHEMA, "field": F.label, **r.as_record()}
        rec["value_sum"] = _elem(F, r.value_sum)
        records.append(rec)
    _emit(records, fmt, out_path)
    problems = [v for r in reports for v in r.violations()]
    for v in problems:
        click.echo(f"violation: {v}", err=True)
    return 2 if problems else 0


@cli.command("sum")
@click.option("--field", "F", type=FIELD, required=True)
@click.option("--n", "n", type=int, default=None, help="single index in 1..q^2-1")
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), default=None)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
def cmd_sum(F: GF, n: int | None, out_path: str | None, fmt: str) -> int:
    """sum over a in F_q of F_n(1, a): brute force against the coefficient recursion."""
    _odd(F)
    top = F.q**2 - 1
    if n is not None and not 1 <= n <= top:
        raise click.BadParameter(f"n must lie in 1..{top}", param_hint="--n")
    indices = [n] if n is not None else list(range(1, top + 1))
    brute = charsum.sums_bruteforce(F, max(indices))
    records = []
    for i in indices:
        rec_val = charsum.sum_via_recursion(F, i)
        records.append({
            "schema": SCHEMA,
            "field": F.label,
            "n": i,
            "brute": _elem(F, brute[i]),
            "recursive": _elem(F, rec_val),
            "equal": brute[i] == rec_val,
        })
    _emit(records, fmt, out_path)
    return 0 if all(r["equal"] for r in records) else 2


@cli.command("verify")
@click.option("--fields", default=None, help="comma-separated field list, e.g. 3,9,5^2")
@click.option("--level", type=click.Choice(["quick", "full"]), default="quick", show_default=True)
def cmd_verify(fields: str | None, level: str) -> int:
    """Run every identity check; one PASS/FAIL line per (check, field)."""
    labels = None
    if fields:
        labels = []
        for text in fields.split(","):
            F = FIELD.convert(text, None, None)
            _odd(F)
            labels.append(F.label)
    results = vf.run(level, labels, workers=pc.worker_count())
    for r in results:
        click.echo(r.line())
    failed = [r for r in results if not r.ok]
    if failed:
        first = failed[0]
        click.echo(f"first failure: {first.name} q={first.field}: {first.detail}", err=True)
        return 2
    click.echo(f"all {len(results)} checks passed")
    return 0


def main(argv: list[str] | None = None) -> int:
    try:
        rv = cli.main(args=argv, prog_name="revdickson", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.Abort:
        return 1
    except ValueError as exc:
        click.echo(f"Error: {exc}", err=True)
        return 1
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
