"""Command-line front end.

Subcommands: compute (index table for one graph), matrix (mean Sombor
matrix + trace/variance summary), enumerate (octane skeleton files),
qspr (fit at one exponent), scan (exponent scan per property), verify
(inequality sweep).  Exit codes: 0 success, 1 operational error, 2
verification failure.
"""

from __future__ import annotations

import io
import json
import sys
from pathlib import Path

import click

from .bounds import DEFAULT_RANDOM_SEED, run_verification, write_reports_csv
from .graphs import (
    GraphParseError,
    enumerate_octane_skeletons,
    parse_graph,
    to_edge_list_text,
)
from .indices import (
    ALPHA_MINUS_INF,
    ALPHA_PLUS_INF,
    Alpha,
    ZERO_LIMIT,
    classical_index,
    mean_sombor,
    parse_alpha,
)
from .qspr import (
    AlphaGrid,
    RegressionReport,
    alpha_scan,
    load_dataset,
    qspr_at_alpha,
    reports_to_json,
    write_curve_csv,
    write_reports_csv as write_qspr_csv,
)
from .spectral import (
    build_matrix,
    edge_term_stats,
    trace_of_square,
    variance_identity_check,
    write_matrix_csv,
)


class VerificationFailure(Exception):
    """At least one bound check failed; maps to exit code 2."""


def _read_graph(path: str):
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        click.echo(text, nl=False)


@click.group()
def cli() -> None:
    """Mean Sombor index toolkit: computation, verification, QSPR."""


# Table-2 panel: (alpha, label of the equivalent classical expression,
# evaluator of that expression).
_TABLE2 = (
    (ALPHA_MINUS_INF, "SP-min", lambda g: classical_index(g, "sp-min")),
    (Alpha.finite(-1), "2*ISI", lambda g: 2.0 * classical_index(g, "isi")),
    (ZERO_LIMIT, "R^-1", lambda g: classical_index(g, "r-1")),
    (Alpha.finite(0.5), "2^-2*KA1[0.5,2]", lambda g: 0.25 * classical_index(g, "ka1", alpha=0.5, beta=2.0)),
    (Alpha.finite(1), "M1/2", lambda g: classical_index(g, "m1") / 2.0),
    (Alpha.finite(2), "2^-1/2*SO", lambda g: 2.0**-0.5 * classical_index(g, "so")),
    (Alpha.finite(3), "2^-1/3*KA1[3,1/3]", lambda g: 2.0 ** (-1 / 3) * classical_index(g, "ka1", alpha=3.0, beta=1 / 3)),
    (ALPHA_PLUS_INF, "SP-max", lambda g: classical_index(g, "sp-max")),
)


@cli.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--alpha", "alpha_spec", required=True, help="exponent: decimal, '0', 'inf', '-inf'")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=click.Path(), default=None)
def compute(graph_path: str, alpha_spec: str, fmt: str, out: str | None) -> None:
    """Index table: mSO at the requested exponent plus every special case."""
    g = _read_graph(graph_path)
    a = parse_alpha(alpha_spec)
    rows: list[tuple[str, float]] = [(f"mSO[{a.token()}]", mean_sombor(g, a))]
    for special, label, fn in _TABLE2:
        rows.append((f"mSO[{special.token()}]", mean_sombor(g, special)))
        rows.append((label, fn(g)))
    if fmt == "json":
        text = json.dumps(
            [{"quantity": q, "value": v} for q, v in rows], indent=2
        ) + "\n"
    else:
        text = "quantity,value\n" + "".join(
            f"{q},{format(v, '.17g')}\n" for q, v in rows
        )
    _emit(text, out)


@cli.command()
@click.option("--graph", "graph_path", required=True, type=click.Path(exists=True))
@click.option("--alpha", "alpha_spec", required=True)
@click.option("--out", required=True, type=click.Path(), help="matrix CSV destination")
def matrix(graph_path: str, alpha_spec: str, out: str) -> None:
    """Mean Sombor matrix CSV plus trace and variance-identity summary."""
    g = _read_graph(graph_path)
    a = parse_alpha(alpha_spec)
    mat = build_matrix(g, a)
    buf = io.StringIO()
    write_matrix_csv(mat, buf)
    Path(out).write_text(buf.getvalue(), encoding="utf-8")
    stats = edge_term_stats(g, a) if g.edge_count else None
    click.echo(f"matrix written to {out}")
    click.echo(f"trace_of_square,{format(trace_of_square(mat), '.17g')}")
    click.echo(f"mean_sombor,{format(mean_sombor(g, a), '.17g')}")
    if stats is not None:
        click.echo(f"sigma2,{format(stats.sigma2, '.17g')}")
        click.echo(
            f"variance_identity_residual,{format(variance_identity_check(g, a), '.17g')}"
        )


def _slug(name: str) -> str:
    return name.replace(",", "-").replace(" ", "-")


@cli.command("enumerate")
@click.option("--out", "out_dir", required=True, type=click.Path())
def enumerate_skeletons(out_dir: str) -> None:
    """Write the 18 octane skeleton edge lists plus a canonical manifest."""
    d = Path(out_dir)
    d.mkdir(parents=True, exist_ok=True)
    manifest = ["index,name,canonical,degrees,file"]
    skeletons = enumerate_octane_skeletons()
    for i, sk in enumerate(skeletons, start=1):
        fname = f"{i:02d}-{_slug(sk.name)}.txt"
        (d / fname).write_text(to_edge_list_text(sk.graph), encoding="utf-8")
        degs = "-".join(str(x) for x in sorted(sk.graph.degrees, reverse=True))
        manifest.append(f'{i:02d},"{sk.name}",{sk.canonical},{degs},{fname}')
    (d / "manifest.csv").write_text("\n".join(manifest) + "\n", encoding="utf-8")
    click.echo(f"wrote {len(skeletons)} skeletons to {out_dir}")


def _load_octane_dataset(properties_path: str):
    csv_text = Path(properties_path).read_text(encoding="utf-8")
    return load_dataset(enumerate_octane_skeletons(), csv_text)


def _write_qspr_reports(reports: list[RegressionReport], fmt: str, out: str | None) -> None:
    if fmt == "json":
        _emit(reports_to_json(reports), out)
    else:
        buf = io.StringIO()
        write_qspr_csv(reports, buf)
        _emit(buf.getvalue(), out)


@cli.command()
@click.option("--properties", "properties_path", required=True, type=click.Path(exists=True))
@click.option("--property", "prop", default=None, help="single property (default: all usable)")
@click.option("--alpha", "alpha_spec", required=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=click.Path(), default=None)
def qspr(properties_path: str, prop: str | None, alpha_spec: str, fmt: str, out: str | None) -> None:
    """Fit the linear model at one exponent for octane-isomer properties."""
    ds = _load_octane_dataset(properties_path)
    a = parse_alpha(alpha_spec)
    props = [prop] if prop else ds.usable_properties()
    reports = [qspr_at_alpha(ds, p, a) for p in props]
    _write_qspr_reports(reports, fmt, out)


def _parse_range(spec: str) -> AlphaGrid:
    parts = spec.split(":")
    if len(parts) != 3:
        raise click.BadParameter("alpha range must be LO:HI:STEP")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        raise click.BadParameter(f"bad alpha range {spec!r}")
    return AlphaGrid(lo, hi, step)


@cli.command()
@click.option("--properties", "properties_path", required=True, type=click.Path(exists=True))
@click.option("--property", "prop", default=None)
@click.option("--alpha-range", "range_spec", default=None, help="LO:HI:STEP (default -10:10:0.01)")
@click.option("--curve-out", "curve_dir", type=click.Path(), default=None)
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv")
@click.option("--out", type=click.Path(), default=None)
@click.option("--jobs", type=int, default=1)
def scan(
    properties_path: str,
    prop: str | None,
    range_spec: str | None,
    curve_dir: str | None,
    fmt: str,
    out: str | None,
    jobs: int,
) -> None:
    """Scan the exponent for the best |r| per property."""
    ds = _load_octane_dataset(properties_path)
    grid = _parse_range(range_spec) if range_spec else AlphaGrid()
    props = [prop] if prop else ds.usable_properties()
    reports = []
    for p in props:
        best, curve = alpha_scan(ds, p, grid, jobs=jobs)
        reports.append(best)
        if curve_dir:
            d = Path(curve_dir)
            d.mkdir(parents=True, exist_ok=True)
            buf = io.StringIO()
            write_curve_csv(curve, buf)
            (d / f"curve-{_slug(p)}.csv").write_text(buf.getvalue(), encoding="utf-8")
    _write_qspr_reports(reports, fmt, out)


@cli.command()
@click.option("--random", "random_count", type=int, default=1000, show_default=True)
@click.option("--seed", type=int, default=DEFAULT_RANDOM_SEED, show_default=True)
@click.option("--out", type=click.Path(), default="bound_reports.csv", show_default=True)
@click.option("--jobs", type=int, default=1)
def verify(random_count: int, seed: int, out: str, jobs: int) -> None:
    """Check every proved bound over the corpus; exit 2 on any failure."""
    reports = run_verification(random_count=random_count, seed=seed, jobs=jobs)
    with open(out, "w", encoding="utf-8") as fh:
        write_reports_csv(reports, fh, seed=seed, random_count=random_count)
    failures = [r for r in reports if not r.ok]
    click.echo(f"checked {len(reports)} bound instances, {len(failures)} failures")
    if failures:
        worst = min(failures, key=lambda r: r.slack)
        raise VerificationFailure(
            f"{len(failures)} bound checks failed; worst: {worst.bound_id} on "
            f"{worst.graph_id} (slack {worst.slack:.3e})"
        )


def main(argv: list[str] | None = None) -> int:
    """Entry point with the documented exit-code contract."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except VerificationFailure as exc:
        click.echo(f"verification failed: {exc}", err=True)
        return 2
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except (OSError, ValueError, GraphParseError, RuntimeError) as exc:
        click.echo(f"error: {exc}", err=True)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
