"""CLI interface for cantor-retract.

All results go to stdout as plain text with a fixed field order; errors
and logs go to stderr. Exit statuses: 0 success or pass, 1 usage or input
error, 2 verification counterexample.
"""

import json
import sys
from pathlib import Path
from typing import Any, NoReturn, Optional

import click
from loguru import logger
from rich.console import Console
from rich.markup import escape

from .cantor import CantorError, format_point, parse_basic_set, parse_point
from .config import settings
from .group import Cover, enumerate_subgroup, parse_cover, parse_element
from .retraction import maximal_even_prefixes, retract_extended
from .verifier.campaign import run_campaign
from .verifier.campaign_config import load_campaign
from .verifier.suite_catalog import SUITE_IDS
from .witness import (
    build_extended_witness,
    build_witness,
    check_subspace_embedding,
    verify_witness,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLE = 2

# Errors and progress go to stderr so stdout stays diffable
console = Console(stderr=True, soft_wrap=True)


def setup_logging(verbose: bool = False) -> None:
    """Configure logging based on verbosity."""
    logger.remove()
    level = "DEBUG" if verbose else settings.log_level
    logger.add(sys.stderr, level=level, format="<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {message}")

    if settings.log_file:
        logger.add(settings.log_file, rotation="10 MB", level=level)


def _fail(error: Any) -> NoReturn:
    console.print(f"[red]Error:[/red] {escape(str(error))}")
    raise SystemExit(EXIT_ERROR)


class CantorGroup(click.Group):
    """Click group that reports usage errors with exit status 1 instead of 2."""

    def main(self, *args: Any, standalone_mode: bool = True, **kwargs: Any) -> Any:
        try:
            rv = super().main(*args, standalone_mode=False, **kwargs)
        except click.ClickException as e:
            e.show()
            sys.exit(EXIT_ERROR)
        except click.exceptions.Abort:
            console.print("Aborted!")
            sys.exit(EXIT_ERROR)
        if not standalone_mode:
            return rv
        sys.exit(rv if isinstance(rv, int) else EXIT_OK)


@click.group(cls=CantorGroup)
@click.option("--verbose", "-v", is_flag=True, help="Enable verbose output")
@click.pass_context
def main(ctx: click.Context, verbose: bool) -> None:
    """Cantor-set retraction toolkit.

    Compute the retraction r of B(C) onto the Cantor set, build and verify
    continuity witnesses, enumerate the subgroups H_Γ, and run property
    campaigns.
    """
    ctx.ensure_object(dict)
    ctx.obj["verbose"] = verbose
    setup_logging(verbose)


@main.command()
@click.argument("text")
@click.option(
    "--kind",
    "-k",
    type=click.Choice(["point", "set", "element", "cover"]),
    default="element",
    show_default=True,
    help="What TEXT denotes",
)
def parse(text: str, kind: str) -> None:
    """Parse TEXT and print its canonical form.

    Examples:
        cantor-retract parse "{22, 0, 20}"
        cantor-retract parse 0~2 --kind point
        cantor-retract parse "{0, 2}" --kind cover
    """
    try:
        if kind == "point":
            click.echo(format_point(parse_point(text)))
        elif kind == "set":
            click.echo(str(parse_basic_set(text)))
        elif kind == "cover":
            click.echo(str(parse_cover(text)))
        else:
            click.echo(str(parse_element(text)))
    except CantorError as e:
        _fail(e)


@main.command()
@click.argument("element")
def retract(element: str) -> None:
    """Print r̂(F) for the group element F, with its even decomposition.

    Examples:
        cantor-retract retract "{0, 2, 22}"
        cantor-retract retract "{}"
    """
    try:
        f = parse_element(element)
    except CantorError as e:
        _fail(e)

    click.echo(f"F = {f}")
    click.echo(f"|F| = {len(f)} ({'odd' if f.is_odd else 'even'})")
    if f:
        click.echo(str(maximal_even_prefixes(f)))
    image = retract_extended(f)
    if f.is_odd:
        click.echo(f"r = {image}")
    else:
        click.echo(f"r = {image} (even cardinality, extended value)")


def _echo_verification(depth: int, cap: int, rendered: str) -> None:
    click.echo(f"depth = {depth}")
    click.echo(f"cap = {cap}")
    click.echo(rendered)


@main.command()
@click.argument("element")
@click.argument("neighborhood")
@click.option("--depth", "-d", type=click.IntRange(min=1), default=None, help="Enumeration depth (default: cover depth + margin)")
@click.option("--cap", "-c", type=click.IntRange(min=1), default=None, help="Maximum number of H to check")
@click.option("--extended", is_flag=True, help="Use r̂ and accept even elements")
def witness(
    element: str,
    neighborhood: str,
    depth: Optional[int],
    cap: Optional[int],
    extended: bool,
) -> None:
    """Build the witness Γ for F and the basic neighborhood U of r(F), then verify it.

    Examples:
        cantor-retract witness "{2}" 2 --depth 2
        cantor-retract witness "{0, 2, 22}" "*" --depth 3
    """
    try:
        f = parse_element(element)
        u = parse_basic_set(neighborhood)
        report = build_extended_witness(f, u) if extended else build_witness(f, u)
        depth = depth if depth is not None else max(1, report.gamma.depth + settings.depth_margin)
        cap = cap if cap is not None else settings.default_enum_cap
        result = verify_witness(report, f, depth, cap)
    except CantorError as e:
        _fail(e)

    click.echo(report.render())
    _echo_verification(depth, cap, result.render())
    if not result.passed:
        raise SystemExit(EXIT_COUNTEREXAMPLE)


@main.command()
@click.argument("point")
@click.argument("neighborhood")
@click.argument("cover")
@click.option("--depth", "-d", type=click.IntRange(min=1), default=None, help="Enumeration depth (default: cover depth + margin)")
@click.option("--cap", "-c", type=click.IntRange(min=1), default=None, help="Maximum number of H to check")
def check(point: str, neighborhood: str, cover: str, depth: Optional[int], cap: Optional[int]) -> None:
    """Check (x + H_Γ) ∩ C ⊆ V for the point x, basic set V and cover Γ.

    Examples:
        cantor-retract check 2 2 "{0, 2}" --depth 2
        cantor-retract check 0 0 "{*}" --depth 1
    """
    try:
        x = parse_point(point)
        v_x = parse_basic_set(neighborhood)
        gamma = parse_cover(cover)
        depth = depth if depth is not None else max(1, gamma.depth + settings.depth_margin)
        cap = cap if cap is not None else settings.default_enum_cap
        result = check_subspace_embedding(x, v_x, gamma, depth, cap)
    except CantorError as e:
        _fail(e)

    click.echo(f"x = {x}")
    click.echo(f"v_x = {v_x}")
    click.echo(f"gamma = {gamma}")
    _echo_verification(depth, cap, result.render())
    if not result.passed:
        raise SystemExit(EXIT_COUNTEREXAMPLE)


@main.command("enumerate")
@click.argument("cover")
@click.option("--depth", "-d", type=click.IntRange(min=1), default=None, help="Grid depth (default: cover depth + margin)")
@click.option("--cap", "-c", type=click.IntRange(min=1), default=None, help="Maximum number of elements")
def enumerate_cmd(cover: str, depth: Optional[int], cap: Optional[int]) -> None:
    """List the elements of H_Γ on the depth grid, smallest first.

    Examples:
        cantor-retract enumerate "{0, 2}" --depth 2
        cantor-retract enumerate "{*}" --depth 1
    """
    try:
        gamma: Cover = parse_cover(cover)
        depth = depth if depth is not None else max(1, gamma.depth + settings.depth_margin)
        enumeration = enumerate_subgroup(gamma, depth, cap or settings.default_enum_cap)
        count = 0
        for h in enumeration:
            click.echo(str(h))
            count += 1
    except CantorError as e:
        _fail(e)

    click.echo(f"count = {count}")
    if enumeration.warning:
        click.echo(f"warning = {enumeration.warning}")


@main.command()
@click.option("--config", "config_path", type=click.Path(path_type=Path), default=None, help="Campaign file (key = value)")
@click.option("--seed", type=int, default=None, help="Override the campaign seed")
@click.option("--suite", "suites", type=click.Choice(list(SUITE_IDS)), multiple=True, help="Suite to run (repeatable)")
@click.option("--depth", "-d", type=int, default=None, help="Override the enumeration depth")
@click.option("--cap", "-c", type=int, default=None, help="Override the enumeration cap")
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "lines", "json"]),
    default="text",
    show_default=True,
)
def campaign(
    config_path: Optional[Path],
    seed: Optional[int],
    suites: tuple[str, ...],
    depth: Optional[int],
    cap: Optional[int],
    output_format: str,
) -> None:
    """Run a verification campaign and print its report.

    Examples:
        cantor-retract campaign
        cantor-retract campaign --config campaigns/default.cfg --format lines
        cantor-retract campaign --suite group-laws --suite retraction-oracle --seed 7
    """
    try:
        plan = load_campaign(
            config_path,
            seed=seed,
            suites=suites,
            enum_depth=depth,
            enum_cap=cap,
        )
        report = run_campaign(plan)
    except CantorError as e:
        _fail(e)

    if output_format == "json":
        click.echo(json.dumps(report.to_dict(), indent=2))
    elif output_format == "lines":
        click.echo(report.render_lines())
    else:
        click.echo(report.render_text())

    if not report.all_passed:
        console.print(f"[red]{report.total_failed} failing case(s)[/red]")
        raise SystemExit(EXIT_COUNTEREXAMPLE)


if __name__ == "__main__":
    main()
