from __future__ import annotations

from contextlib import contextmanager
from pathlib import Path
from typing import Iterator, Optional

import typer

from transalg.algebra.checks import BATTERIES, battery
from transalg.algebra.fileformat import format_relation, load, serialize
from transalg.closure import Reading, check_chi0_minimality, check_schemas, chi0, closure_chain
from transalg.closure.unrolled import MAX_UNROLLED_N
from transalg.config import load_settings
from transalg.core.errors import TransalgError
from transalg.core.logging_utils import get_logger
from transalg.maps.pfun import parse_map_list
from transalg.maps.tsemi import GENERATOR_SET_MAX_BASE, TransSemigroup, enumerate_all, extract_abstract, generate
from transalg.repsearch import ConditionsFail, SearchOrder, find_representation
from transalg.sweep.runner import run_sweep

logger = get_logger(__name__)
app = typer.Typer(no_args_is_help=True)


@contextmanager
def _diagnostics() -> Iterator[None]:
    """Turn library errors into a one-line diagnostic on stderr and exit status 2."""
    try:
        yield
    except TransalgError as exc:
        typer.echo(f"error: {exc}", err=True)
        raise typer.Exit(code=2)


def _parse_set(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise typer.BadParameter(f"expected comma-separated element indices, got {text!r}", param_hint="--set")


def _check_base(base: int) -> None:
    limit = min(load_settings().max_enum_base, GENERATOR_SET_MAX_BASE)
    if not 1 <= base <= limit:
        raise typer.BadParameter(f"base must be in 1..{limit} (TRANSALG_MAX_ENUM_BASE)", param_hint="--base")


@app.command("check")
def check(
    file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Algebra file."),
    theorem: int = typer.Option(7, help="Axiom battery: 1..7."),
    invertible: bool = typer.Option(False, help="Use the invertible-transformation variant."),
):
    """Run an axiom battery; exit 0 iff every record passes."""
    if theorem not in BATTERIES:
        raise typer.BadParameter(f"theorem must be one of {sorted(BATTERIES)}", param_hint="--theorem")
    with _diagnostics():
        report = battery(load(file), theorem, invertible=invertible)
    typer.echo(report.to_text())
    if not report.passed:
        raise typer.Exit(code=1)


@app.command("closure")
def closure(
    file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Algebra file."),
    set_: str = typer.Option(..., "--set", help="Element indices of H, e.g. 0,2."),
):
    """f-closure of H and the number of F1 steps to reach it."""
    H = _parse_set(set_)
    with _diagnostics():
        chain = closure_chain(load(file), H)
    typer.echo("closure " + ",".join(str(x) for x in sorted(chain[-1])))
    typer.echo(f"iterations {len(chain) - 1}")


@app.command("chi0")
def chi0_cmd(
    file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Algebra file."),
    minimality: bool = typer.Option(False, help="Add the exhaustive minimality record."),
):
    """χ₀ as a bit-matrix (delta-block format)."""
    settings = load_settings()
    with _diagnostics():
        system = load(file)
        if minimality and system.size > settings.minimality_max_size:
            raise typer.BadParameter(
                f"|G| = {system.size} exceeds TRANSALG_MINIMALITY_MAX_SIZE={settings.minimality_max_size}",
                param_hint="--minimality",
            )
        typer.echo(format_relation(chi0(system)))
        if minimality:
            report = check_chi0_minimality(system, max_size=settings.minimality_max_size)
            typer.echo(report.to_text())
            if not report.passed:
                raise typer.Exit(code=1)


@app.command("schemas")
def schemas(
    file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Algebra file."),
    max_n: int = typer.Option(MAX_UNROLLED_N, help="Largest unrolling depth (1 or 2)."),
    reading: Reading = typer.Option(Reading.INDEXED, help="Leaf membership reading."),
):
    """A_n and B_n through the unrolled membership schema."""
    limit = min(load_settings().unrolled_max_n, MAX_UNROLLED_N)
    if not 1 <= max_n <= limit:
        raise typer.BadParameter(f"max-n must be in 1..{limit} (TRANSALG_UNROLLED_MAX_N)", param_hint="--max-n")
    with _diagnostics():
        report = check_schemas(load(file), max_n=max_n, reading=reading)
    typer.echo(report.to_text())
    if not report.passed:
        raise typer.Exit(code=1)


@app.command("enumerate")
def enumerate_cmd(
    base: int = typer.Option(..., help="Base set size."),
    with_meet: bool = typer.Option(False, help="Require closure under ∩ as well as ∘."),
    invertible: bool = typer.Option(False, help="Injective maps only."),
):
    """Emit every closed semigroup, one map literal per line between begin/end."""
    _check_base(base)
    with _diagnostics():
        corpus = list(enumerate_all(base, with_meet=with_meet, invertible_only=invertible))
    for sg in corpus:
        typer.echo("begin")
        for lit in sg.literals():
            typer.echo(lit)
        typer.echo("end")


@app.command("extract")
def extract(
    base: int = typer.Option(..., help="Base set size."),
    gens: str = typer.Option(..., help='Generators, e.g. "0,0;0,1".'),
    with_meet: bool = typer.Option(False, help="Close under ∩ as well as ∘."),
):
    """Generate a semigroup and print its abstract system as an algebra file."""
    with _diagnostics():
        generators = parse_map_list(gens)
        for g in generators:
            if g.base_size != base:
                raise typer.BadParameter(
                    f"generator has base size {g.base_size}, expected {base}", param_hint="--gens"
                )
        sg = generate(base, generators, with_meet=with_meet)
        system = extract_abstract(TransSemigroup(base, sg.elements, with_meet=True))
    logger.info("Extracted a %d-element system from %d generators", system.size, len(generators))
    typer.echo(serialize(system), nl=False)


@app.command("find-rep")
def find_rep(
    file: Path = typer.Argument(..., exists=True, dir_okay=False, help="Algebra file."),
    max_base: int = typer.Option(..., help="Largest base set size to search."),
    invertible: bool = typer.Option(False, help="Search injective maps only and require dt-3."),
    order: SearchOrder = typer.Option(SearchOrder.CANONICAL, help="Element assignment order."),
    max_workers: Optional[int] = typer.Option(None, help="Parallel branches (default: TRANSALG_MAX_WORKERS)."),
):
    """Search for a representation by partial maps up to --max-base."""
    settings = load_settings()
    with _diagnostics():
        system = load(file)
        if max_base * system.size > settings.search_guard:
            raise typer.BadParameter(
                f"max-base * |G| = {max_base * system.size} exceeds TRANSALG_SEARCH_GUARD={settings.search_guard}",
                param_hint="--max-base",
            )
        outcome = find_representation(
            system,
            max_base,
            invertible=invertible,
            order=order,
            max_workers=max_workers or settings.max_workers,
            guard=settings.search_guard,
        )
    typer.echo(outcome.to_text())
    if isinstance(outcome, ConditionsFail):
        raise typer.Exit(code=1)


@app.command("sweep")
def sweep(
    base: int = typer.Option(..., help="Base set size of the corpus."),
    out: Optional[Path] = typer.Option(None, help="Write per-system verdicts (parquet)."),
):
    """Evaluate every corpus property and print condition / passed / total."""
    _check_base(base)
    with _diagnostics():
        result = run_sweep(base, load_settings(), out=out)
    typer.echo(result.to_text())
    if not result.passed:
        raise typer.Exit(code=1)
