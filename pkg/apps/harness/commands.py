"""
Harness commands: verify, sweep, extremal, demo.

Each command binds a run context, delegates to its service and maps the
outcome onto the exit-code contract: 0 everything holds, 1 a numerical
violation, 2 an input or configuration error. stdout carries tables and
machine output only; logs and errors go to stderr.
"""

from enum import Enum
from pathlib import Path
from typing import Callable, List, Optional

import typer

from app_logging import run_context
from apps.common.exception_handler import handle_exception
from apps.common.output import dumps_json, echo_json, format_human, stdout_console, write_bytes
from core.exceptions import ConfigError, ExitCode
from core.Execution import PoolExecutor, PoolType
from core.Relations import Relation, parse_relations
from core.Sampling import RANDOM_PROVENANCES, Provenance
from core.tolerances import DEFAULT_TOLERANCES, Tolerances
from revbound import settings

from .reports import records_table, scalars_table, tallies_table, tightest_table
from .services import demo_service, extremal_service, sweep_service, verify_service


class OutputFormat(str, Enum):
    csv = "csv"
    json = "json"


def _tolerances(holds: Optional[float]) -> Tolerances:
    holds = settings.HOLDS_TOLERANCE if holds is None else holds
    if holds == DEFAULT_TOLERANCES.holds:
        return DEFAULT_TOLERANCES
    return DEFAULT_TOLERANCES.with_holds(holds)


def parse_dims(text: str) -> List[int]:
    try:
        dims = [int(token) for token in text.split(",") if token.strip()]
    except ValueError:
        raise ConfigError(f"--dims must be a comma-separated list of integers, got '{text}'") from None
    if not dims:
        raise ConfigError("--dims selects no dimensions")
    return list(dict.fromkeys(dims))


def parse_provenances(text: str) -> List[Provenance]:
    if text.strip().lower() == "all":
        return list(RANDOM_PROVENANCES)
    provenances = []
    for token in text.split(","):
        name = token.strip().upper().replace("-", "_")
        if not name:
            continue
        try:
            provenances.append(Provenance(name))
        except ValueError:
            raise ConfigError(
                f"Unknown provenance '{token.strip()}'",
                available=[p.value for p in RANDOM_PROVENANCES],
            ) from None
    if not provenances:
        raise ConfigError("--provenance selects nothing")
    return list(dict.fromkeys(provenances))


def _executor(pool: str, workers: int) -> PoolExecutor:
    return PoolExecutor(PoolType.parse(pool), workers)


def _run(command: str, body: Callable[[], int], **fields) -> None:
    with run_context(command, **fields):
        try:
            code = body()
        except Exception as exc:
            code = handle_exception(exc)
    raise typer.Exit(code)


def verify(
    path: Path = typer.Argument(..., help="Instance JSON file"),
    relations: str = typer.Option("all", "--relations", help="Comma-separated relation tags, or 'all'"),
    tolerance: Optional[float] = typer.Option(None, "--tolerance", help="Holds tolerance (default 1e-10)"),
    json_output: bool = typer.Option(False, "--json", help="Print the report as JSON instead of tables"),
    output: Optional[Path] = typer.Option(None, "--output", help="Also write the JSON report to this file"),
    quiet: bool = typer.Option(False, "--quiet", help="No tables"),
) -> None:
    """Evaluate every relation on one instance file."""

    def body() -> int:
        report = verify_service.verify_file(path, parse_relations(relations), _tolerances(tolerance))
        if output is not None:
            write_bytes(output, dumps_json(report.to_document()))
        if json_output:
            echo_json(report.to_document())
        elif not quiet:
            stdout_console.print(records_table(report.records, title=f"{report.source} (d={report.dim})"))
            stdout_console.print(scalars_table(report.scalars, report.corridor))
            for claim in report.claims:
                marker = "[bold red]FAILED[/bold red]" if claim.failed else "[green]ok[/green]"
                stdout_console.print(f"claim {claim.relation.value}: {marker} {claim.message}", markup=True)
        return int(ExitCode.OK if report.ok else ExitCode.VIOLATION)

    _run("verify", body, path=str(path))


def sweep(
    dims: str = typer.Option(settings.SWEEP_DIMS, "--dims", help="Comma-separated dimensions"),
    trials: int = typer.Option(1000, "--trials", help="Trials per (dim, provenance)"),
    seed: int = typer.Option(0, "--seed", help="Base seed; trial i uses seed + i"),
    relations: str = typer.Option("all", "--relations", help="Comma-separated relation tags, or 'all'"),
    provenance: str = typer.Option("HAAR_GUE", "--provenance", help="Comma-separated provenances, or 'all'"),
    tolerance: Optional[float] = typer.Option(None, "--tolerance", help="Holds tolerance (default 1e-10)"),
    output: Optional[Path] = typer.Option(None, "--output", help="Report file; stdout when omitted"),
    output_format: OutputFormat = typer.Option(OutputFormat.csv, "--format", help="Report format"),
    quiet: bool = typer.Option(False, "--quiet", help="No summary table"),
    workers: int = typer.Option(settings.SWEEP_WORKERS, "--workers", help="Parallel workers"),
    pool: str = typer.Option(settings.SWEEP_POOL, "--pool", help="SERIAL, THREAD or PROCESS"),
    dump_failures: Optional[Path] = typer.Option(None, "--dump-failures", help="Write violating instances here"),
) -> None:
    """Evaluate the relations on seeded random instances and tally the outcomes."""

    def body() -> int:
        config = sweep_service.build_config(
            parse_dims(dims),
            trials,
            seed,
            parse_relations(relations),
            parse_provenances(provenance),
            _tolerances(tolerance),
        )
        with _executor(pool, workers) as executor:
            outcome = sweep_service.run(
                config,
                executor,
                collect_rows=output_format is OutputFormat.csv,
                dump_failures=dump_failures,
            )
        report = outcome.report
        if output_format is OutputFormat.csv:
            payload = outcome.render_csv().encode()
        else:
            payload = dumps_json(report.to_document())

        if output is None:
            stdout_console.file.write(payload.decode())
            stdout_console.file.flush()
        else:
            write_bytes(output, payload)
            if not quiet:
                stdout_console.print(tallies_table(report))
                stdout_console.print(tightest_table(report))
                for skipped in config.skipped:
                    stdout_console.print(f"skipped {skipped}", markup=False)
        return int(ExitCode.VIOLATION if report.total_violations else ExitCode.OK)

    _run("sweep", body, trials=trials, seed=seed)


def extremal(
    relation: str = typer.Option(Relation.REV_COV.value, "--relation", help="REV_COV, REV_PROD or REV_DW"),
    instance: Optional[Path] = typer.Option(None, "--instance", help="Take A and B from this instance file"),
    example: Optional[str] = typer.Option(None, "--example", help="Take A and B from a named example"),
    dim: Optional[int] = typer.Option(None, "--dim", help="Random HAAR_GUE observables of this dimension"),
    seed: int = typer.Option(0, "--seed", help="Seed for the random pair and the restarts"),
    restarts: int = typer.Option(8, "--restarts"),
    max_iterations: int = typer.Option(2000, "--max-iterations"),
    convergence_tol: float = typer.Option(1e-9, "--convergence-tol"),
    grid_check: bool = typer.Option(False, "--grid-check", help="Compare with a 200x200 Bloch grid (qubits only)"),
    tolerance: Optional[float] = typer.Option(None, "--tolerance", help="Holds tolerance (default 1e-10)"),
    json_output: bool = typer.Option(False, "--json", help="Print the result as JSON"),
    output: Optional[Path] = typer.Option(None, "--output", help="Also write the JSON result to this file"),
    workers: int = typer.Option(1, "--workers", help="Parallel restarts"),
    pool: str = typer.Option("THREAD", "--pool", help="SERIAL, THREAD or PROCESS"),
) -> None:
    """Search the state that minimizes an upper-bound relation's gap."""

    def body() -> int:
        tolerances = _tolerances(tolerance)
        selected = parse_relations(relation)
        if len(selected) != 1:
            raise ConfigError("--relation takes a single relation", relation=relation)
        config = extremal_service.search_config(selected[0], restarts, max_iterations, convergence_tol, seed)
        pair = extremal_service.resolve_pair(instance, example, dim, seed, tolerances)
        with _executor(pool, workers) as executor:
            report = extremal_service.run(pair, config, tolerances, executor, grid_check)

        document = report.to_document()
        if output is not None:
            write_bytes(output, dumps_json(document))
        if json_output:
            echo_json(document)
        else:
            result = report.result
            stdout_console.print(f"{result.relation.value} on {report.source}", markup=False)
            for index, amplitude in enumerate(result.best_state.vector):
                stdout_console.print(f"  phi[{index}] = {format_human(complex(amplitude))}", markup=False)
            stdout_console.print(f"best gap     {format_human(result.best_gap)}", markup=False)
            stdout_console.print(f"evaluations  {result.evaluations}", markup=False)
            stdout_console.print(f"converged    {result.converged}", markup=False)
            if report.grid is not None:
                stdout_console.print(
                    f"grid minimum {format_human(report.grid.gap)} ({report.grid.points}x{report.grid.points}, "
                    f"agrees: {report.grid_agrees})",
                    markup=False,
                )
            if result.crossed_bound:
                stdout_console.print("[bold red]the returned state violates the relation[/bold red]")
        return int(ExitCode.OK if report.ok else ExitCode.VIOLATION)

    _run("extremal", body, relation=relation)


def demo(
    seed: int = typer.Option(0, "--seed", help="Seed of the random uncorrelated instance"),
    json_output: bool = typer.Option(False, "--json", help="Print the rows as JSON"),
) -> None:
    """Show the reduced forms of the reverse relations on degenerate instances."""

    def body() -> int:
        report = demo_service.run(seed)
        if json_output:
            echo_json(report.to_document())
        else:
            stdout_console.print(demo_service.table(report))
        return int(ExitCode.OK if report.ok else ExitCode.VIOLATION)

    _run("demo", body, seed=seed)
