"""Batch front door: load spaces, check properties, run suites, verify the
gallery, construct product/exponential/completion spaces, export DOT.

Exit codes: 0 when the requested property/suite/claims hold, 1 when a
property or claim fails, 2 on usage errors (bad files, unknown names).
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from . import approximation as approx
from . import constructions as cons
from . import lattices as lat
from .errors import (
    BoundExceeded,
    ClaimFailed,
    DtopwError,
    ParseError,
    UnknownName,
    UnknownProperty,
)
from .gallery import gallery_names, gallery_space, verify_gallery_claims
from .suites import SuiteConfig, SUITES, default_jobs, run_suite
from .topology import (
    FiniteSpace,
    hasse_dot,
    open_lattice,
    open_lattice_dot,
    parse_space,
    format_space,
    specialization_dot,
)

PROPERTIES = {
    "directed-space": lambda X: X.is_directed_space(),
    "c-space": approx.is_c_space,
    "b-space": approx.is_b_space,
    "locally-hypercompact": approx.is_locally_hypercompact,
    "hypercompactly-based": approx.is_hypercompactly_based,
    "core-compact": lambda X: cons.check_core_compact(X).passed,
    "completely-distributive-opens": lambda X: lat.is_completely_distributive(open_lattice(X)),
    "hypercontinuous-opens": lambda X: lat.is_hypercontinuous(open_lattice(X)),
}

EXPORT_KINDS = {
    "specialization": specialization_dot,
    "hasse": hasse_dot,
    "openlattice": open_lattice_dot,
}


def _load_space(path: str) -> FiniteSpace:
    try:
        return parse_space(Path(path).read_text())
    except OSError as exc:
        raise ParseError(str(exc)) from exc


@click.group()
def main() -> None:
    """Workbench for directed-space topology on finite T0 spaces."""


@main.command()
@click.argument("space_file")
@click.argument("property_name")
def check(space_file: str, property_name: str) -> None:
    """Check PROPERTY_NAME on the space in SPACE_FILE."""
    try:
        if property_name not in PROPERTIES:
            raise UnknownProperty(
                f"{property_name!r}; known: {', '.join(sorted(PROPERTIES))}"
            )
        X = _load_space(space_file)
        holds = PROPERTIES[property_name](X)
    except (ParseError, UnknownProperty, BoundExceeded) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    click.echo(f"{space_file}: {property_name} -> {holds}")
    sys.exit(0 if holds else 1)


@main.command()
@click.argument("suite_id")
@click.option("--max-size", default=4, show_default=True, help="largest poset size to sweep")
@click.option("--depth", default=8, show_default=True, help="gallery truncation depth")
@click.option("--jobs", default=None, type=int, help="work-pool size (default: DTOPW_JOBS or 1)")
@click.option("--out", default=None, help="write the report to this path")
@click.option("--format", "fmt", default="text", type=click.Choice(["text", "json"]), show_default=True)
@click.option("--seed", default=1201, show_default=True, help="seed for sampled checks")
def suite(suite_id: str, max_size: int, depth: int, jobs: int | None, out: str | None,
          fmt: str, seed: int) -> None:
    """Run a named theorem suite."""
    try:
        cfg = SuiteConfig(
            suite_id=suite_id,
            max_size=max_size,
            depth=depth,
            jobs=jobs if jobs is not None else default_jobs(),
            out=out,
            seed=seed,
            fmt=fmt,
        )
        report = run_suite(suite_id, cfg)
    except (UnknownName, BoundExceeded) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    text = report.as_json() if fmt == "json" else report.summary()
    if out:
        Path(out).write_text(text + "\n")
    click.echo(text)
    sys.exit(0 if report.passed else 1)


@main.command()
@click.argument("space_file")
@click.argument("kind", type=click.Choice(sorted(EXPORT_KINDS)))
@click.option("--out", default=None, help="write the DOT text to this path")
def export(space_file: str, kind: str, out: str | None) -> None:
    """Export a deterministic DOT rendering of the space."""
    try:
        X = _load_space(space_file)
        text = EXPORT_KINDS[kind](X)
    except ParseError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)
    sys.exit(0)


@main.group()
def gallery() -> None:
    """Counterexample gallery."""


@gallery.command("list")
def gallery_list() -> None:
    for name in gallery_names():
        click.echo(name)


@gallery.command("verify")
@click.argument("name")
@click.option("--depth", default=8, show_default=True)
def gallery_verify(name: str, depth: int) -> None:
    try:
        report = verify_gallery_claims(name, depth=depth)
    except UnknownName as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    except ClaimFailed as exc:
        if exc.report is not None:
            click.echo("\n".join(exc.report.lines()))
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo("\n".join(report.lines()))
    sys.exit(0)


@main.command()
@click.argument("kind", type=click.Choice(["product", "tensor", "exponential", "ideals"]))
@click.option("--lhs", required=True, help="left operand .space file")
@click.option("--rhs", default=None, help="right operand .space file")
@click.option("--out", required=True, help="output .space file")
def construct(kind: str, lhs: str, rhs: str | None, out: str) -> None:
    """Build a space from one or two .space files."""
    try:
        X = _load_space(lhs)
        if kind == "ideals":
            result = cons.ideal_completion(X)
        else:
            if rhs is None:
                raise ParseError(f"{kind} needs --rhs")
            Y = _load_space(rhs)
            builder = {"product": cons.product, "tensor": cons.tensor,
                       "exponential": cons.exponential}[kind]
            result = builder(X, Y)
    except (ParseError, BoundExceeded) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(2)
    Path(out).write_text(format_space(result))
    click.echo(f"wrote {out} ({len(result.carrier)} points, {len(result.opens)} opens)")
    sys.exit(0)


if __name__ == "__main__":
    main()
