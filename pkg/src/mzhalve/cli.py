"""Command-line front end.

Exit status is 0 on success, 1 on I/O failure and 2 on bad usage.  Data goes
to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import contextlib
import sys
from pathlib import Path

import click

from . import codes, graph, render
from .core import DigitParseError, format_quotient, halve, parse_digit_string


def _number(ctx, param, value):
    if value is None:
        return None
    try:
        return parse_digit_string(value)
    except DigitParseError as exc:
        raise click.BadParameter(str(exc)) from exc


def _digit_set(ctx, param, value):
    if value is None:
        return None
    try:
        digits = codes.parse_digit_set(value)
        codes.permutation_family(digits)
    except codes.FamilyError as exc:
        raise click.BadParameter(str(exc)) from exc
    return digits


def _pair(ctx, param, value):
    if not value:
        return None
    return tuple(_number(ctx, param, v) for v in value)


def _palette(ctx, param, value):
    if value is None:
        return render.DEFAULT_PALETTE
    try:
        return render.load_palette(value)
    except (OSError, ValueError) as exc:
        raise click.BadParameter(str(exc)) from exc


@contextlib.contextmanager
def _io_errors():
    try:
        yield
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)


def _check_range(k_from: int, k_to: int) -> None:
    if k_from > k_to:
        raise click.UsageError(f"--k-from {k_from} is greater than --k-to {k_to}")


palette_option = click.option(
    "--palette",
    "palette",
    type=click.Path(dir_okay=False),
    callback=_palette,
    help="Palette file: eleven lines 'label R G B' (labels 0-9, background).",
)


@click.group()
@click.version_option(package_name="artifact")
def cli():
    """Digit-wise halving, division graphs and parity codes."""


@cli.command()
@click.argument("x", callback=_number)
@click.option("--steps", default=1, show_default=True, type=click.IntRange(min=1))
def divide(x, steps):
    """Halve X repeatedly, printing each quotient."""
    row = x
    for _ in range(steps):
        trace = halve(row)
        click.echo(format_quotient(trace))
        row = trace.result


@cli.command("graph")
@click.argument("x", callback=_number)
@click.option("--k", "k", required=True, type=click.IntRange(min=0))
@click.option("--stats", is_flag=True, help="Print order, edges, leaves, C8 count and path test.")
@click.option("--export", "export_path", type=click.Path(dir_okay=False), help="Write the adjacency list.")
def graph_cmd(x, k, stats, export_path):
    """Build the division graph of X after K halvings."""
    g = graph.build(x, k)
    if stats or not export_path:
        click.echo(
            f"order={graph.order(g)} edges={graph.edge_count(g)} "
            f"leaves={graph.count_leaves(g)} c8={graph.count_c8_structural(g)} "
            f"path={'true' if graph.is_path(g) else 'false'}"
        )
    if export_path:
        with _io_errors():
            Path(export_path).write_text(graph.to_adjacency_text(g), encoding="utf-8")


@cli.command()
@click.argument("x", callback=_number)
@click.option("--k", "k", required=True, type=click.IntRange(min=0))
@click.option("--out", "out", required=True, type=click.Path(dir_okay=False))
@click.option("--binary", is_flag=True, help="Colour by parity instead of digit value.")
@click.option("--full", is_flag=True, help="Also draw the floor/fraction rows of each step.")
@click.option("--align", type=click.Choice(render.ALIGNMENTS), default="right", show_default=True)
@palette_option
def bitmap(x, k, out, binary, full, align, palette):
    """Write a PPM bitmap of the halving rows of X."""
    draw = render.binary_bitmap if binary else render.digit_bitmap
    img = draw(x, k, palette=palette, align=align, full=full)
    with _io_errors():
        render.write_ppm(img, out)


@cli.command()
@click.option("--digits", "digits", required=True, callback=_digit_set, help="Distinct digits, e.g. 2,5,6.")
@click.option("--k", "k", required=True, type=click.IntRange(min=0))
@click.option("--strip", is_flag=True, help="Drop the leading zeros common to all words.")
@click.option("--dump", "dump", type=click.Path(dir_okay=False), help="Write one codeword per line.")
@click.option("--params", is_flag=True, help="Print n, M, d and k0.")
def code(digits, k, strip, dump, params):
    """Level-K parity code of every ordering of DIGITS."""
    c = codes.family_code(digits, k)
    k0 = 0
    if strip:
        c, k0 = codes.strip_common_leading_zeros(c)
    if params:
        click.echo(str(codes.code_params(c, k0)))
    if dump:
        with _io_errors():
            render.write_codewords(c.words, dump)
    if not params and not dump:
        for w in c.words:
            click.echo(w)


@cli.command()
@click.option("--digits", "digits", required=True, callback=_digit_set)
@click.option("--k-from", "k_from", required=True, type=click.IntRange(min=0))
@click.option("--k-to", "k_to", required=True, type=click.IntRange(min=0))
@click.option("--out", "out", type=click.Path(dir_okay=False), help="Per-level CSV (k,raw_n,k0,n,d).")
def scan(digits, k_from, k_to, out):
    """Search a permutation family for identical codewords."""
    _check_range(k_from, k_to)
    report = codes.conjecture_scan(digits, k_from, k_to)
    click.echo(f"collisions={len(report.collisions)}")
    for c in report.collisions:
        click.echo(f"collision k={c.k} x={c.x} y={c.y}")
    if out:
        with _io_errors():
            render.write_csv(report.records, out, header=render.SCATTER_HEADER)


@cli.command("distance-pair")
@click.argument("x", callback=_number)
@click.argument("y", callback=_number)
@click.option("--k-from", "k_from", required=True, type=click.IntRange(min=1))
@click.option("--k-to", "k_to", required=True, type=click.IntRange(min=1))
@click.option("--out", "out", required=True, type=click.Path(dir_okay=False))
@click.option("--csv", "fmt", flag_value="csv", help="Write k,distance rows.")
@click.option("--ppm", "fmt", flag_value="ppm", default=True, help="Write the XOR bitmap (default).")
def distance_pair(x, y, k_from, k_to, out, fmt):
    """Level-by-level Hamming distance between the codewords of X and Y."""
    _check_range(k_from, k_to)
    if len(x) != len(y):
        raise click.UsageError(f"{x} and {y} have different digit counts")
    with _io_errors():
        if fmt == "csv":
            words = codes.xor_series(x, y, k_from, k_to)
            rows = [(k, codes.weight(w)) for k, w in zip(range(k_from, k_to + 1), words)]
            render.write_csv(rows, out, header=render.PAIR_DISTANCE_HEADER)
        else:
            render.write_ppm(render.xor_bitmap(x, y, k_from, k_to), out)


@cli.command()
@click.option("--digits", "digits", required=True, callback=_digit_set)
@click.option("--k-from", "k_from", default=1, show_default=True, type=click.IntRange(min=1))
@click.option("--k-to", "k_to", default=300, show_default=True, type=click.IntRange(min=1))
@click.option("--pair", "pair", nargs=2, callback=_pair, help="Two family members for the XOR bitmap (default: first and last).")
@click.option("--out-dir", "out_dir", required=True, type=click.Path(file_okay=False))
@palette_option
def report(digits, k_from, k_to, pair, out_dir, palette):
    """Write the full figure set for a digit family into OUT_DIR."""
    _check_range(k_from, k_to)
    members = codes.permutation_family(digits)
    if pair:
        x, y = pair
        if len(x) != len(members[0]) or len(y) != len(members[0]):
            raise click.UsageError("--pair numbers must have one digit per family digit")
    else:
        x, y = members[0], members[-1]
    scan_report = codes.conjecture_scan(digits, k_from, k_to)
    series = scan_report.records
    outputs = {
        "scatter.csv": render.csv_bytes(render.SCATTER_HEADER, series),
        "pie.csv": render.csv_bytes(render.PIE_HEADER, codes.offset_histogram(series)),
        "collisions.csv": render.csv_bytes(render.COLLISION_HEADER, scan_report.collisions),
        f"digits_{x}.ppm": render.ppm_bytes(render.digit_bitmap(x, k_to, palette=palette)),
        f"binary_{x}.ppm": render.ppm_bytes(render.binary_bitmap(x, k_to, palette=palette)),
        f"xor_{x}_{y}.ppm": render.ppm_bytes(render.xor_bitmap(x, y, k_from, k_to, palette=palette)),
    }
    with _io_errors():
        target = Path(out_dir)
        target.mkdir(parents=True, exist_ok=True)
        for name, data in outputs.items():
            (target / name).write_bytes(data)
            click.echo(str(target / name))


def main(argv=None):
    cli.main(args=argv, prog_name="mzhalve")


if __name__ == "__main__":
    main()
