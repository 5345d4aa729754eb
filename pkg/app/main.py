"""
hodge-games command-line interface

Exit codes: 0 success, 1 usage error, 2 input parse or schema error,
3 numeric failure (including a failed ``check``).
"""
import argparse
import sys
from typing import Any, Callable, Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from app import __version__, wiring
from app.adapters.report_writer import JsonReportWriter, Provenance, format_value
from app.api.v1.schemas import ErrorResponse, RunConfig, parse_floats, parse_gammas
from app.application.analysis.use_cases import (
    CheckGameRequest,
    ClassifyGameRequest,
    DecomposeGameRequest,
    SampleFieldRequest,
)
from app.application.dynamics.use_cases import (
    CriticalPointsRequest,
    EnsembleRequest,
    RecurrenceRequest,
    SimulateRequest,
)
from app.application.experiments.use_cases import InterpolationSpectrumRequest
from app.core.config import Settings, settings as default_settings
from app.core.exceptions import HodgeGamesError, NumericError, UsageError
from app.core.logger import bind_run_context, setup_logging

PROG = "hodge-games"
DEFAULT_FIELD_NODES = 21
DEFAULT_ENSEMBLE_RADIUS = 0.1
DEFAULT_ENSEMBLE_POINTS = 16


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that raises UsageError instead of exiting"""

    def error(self, message: str):
        raise UsageError(message)


def _floats(text: str) -> Tuple[float, ...]:
    try:
        return parse_floats(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def _gammas(text: str) -> Tuple[float, ...]:
    try:
        return parse_gammas(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from None


# Parser

def _add_box(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--box", nargs=2, type=float, metavar=("LO", "HI"), help="Sampling box per axis")


def _add_grid(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--grid", type=int, help="Lattice points per axis (power of two >= 8)")


def _add_integrator(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--method", choices=["rk4", "rkf45"], help="Integration method")
    parser.add_argument("--dt", type=float, help="Fixed step (rk4) or initial step (rkf45)")
    parser.add_argument("--t-end", dest="t_end", type=float, help="Final time")


def _add_init(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--init", type=_floats, required=True, metavar="V1,...,VN", help="Initial state")


def _add_out(parser: argparse.ArgumentParser, required: bool = False, help_text: str = "Output file") -> None:
    parser.add_argument("--out", required=required, help=help_text)


def build_parser() -> argparse.ArgumentParser:
    common = CliArgumentParser(add_help=False)
    common.add_argument(
        "--json", dest="json_output", action="store_true", default=argparse.SUPPRESS,
        help="Print the report as JSON",
    )
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="Sampler seed")
    common.add_argument(
        "--log-level", dest="log_level", default=argparse.SUPPRESS,
        choices=["DEBUG", "INFO", "WARNING", "ERROR"], help="Log level on stderr",
    )

    parser = CliArgumentParser(
        prog=PROG,
        description="Helmholtz-Hodge decomposition and gradient dynamics of differential games",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"{PROG} {__version__}")
    commands = parser.add_subparsers(dest="subcommand", required=True, metavar="COMMAND")

    check = commands.add_parser("check", parents=[common], help="Run the invariant suite")
    check.add_argument("game")
    _add_box(check)
    _add_grid(check)
    check.add_argument("--t-end", dest="t_end", type=float, help="Horizon of the Liouville cross-check")
    _add_out(check, help_text="Write the JSON report here")

    classify = commands.add_parser("classify", parents=[common], help="Label a game")
    classify.add_argument("game")
    _add_box(classify)
    _add_grid(classify)
    _add_out(classify, help_text="Write the JSON report here")

    decompose = commands.add_parser("decompose", parents=[common], help="Hodge-decompose windowed Du")
    decompose.add_argument("game")
    _add_box(decompose)
    _add_grid(decompose)
    decompose.add_argument(
        "--zero-mode", dest="zero_mode",
        choices=["potential", "vector", "to_potential", "to_vector"],
        help="Component that receives the constant mode",
    )
    _add_out(decompose, required=True, help_text="Output directory")

    simulate = commands.add_parser("simulate", parents=[common], help="Integrate the gradient flow")
    simulate.add_argument("game")
    _add_init(simulate)
    _add_integrator(simulate)
    simulate.add_argument("--conserved", help="Expression tracked along the trajectory")
    simulate.add_argument("--utilities", action="store_true", help="Add u_<player> columns")
    _add_out(simulate, required=True, help_text="Trajectory CSV")

    recurrence = commands.add_parser("recurrence", parents=[common], help="Detect Poincare recurrence")
    recurrence.add_argument("game")
    _add_init(recurrence)
    recurrence.add_argument("--eps", type=float, help="Return radius")
    recurrence.add_argument("--t-min", dest="t_min", type=float, help="Ignore returns before this time")
    _add_integrator(recurrence)
    _add_out(recurrence, help_text="Write the JSON report here")

    critical = commands.add_parser("critical", parents=[common], help="Find critical points of Du")
    critical.add_argument("game")
    critical.add_argument("--seeds", type=int, help="Number of Newton seeds")
    _add_box(critical)
    _add_out(critical, help_text="Write the JSON report here")

    interpolate = commands.add_parser(
        "interpolate", parents=[common], help="Sweep gamma * A + (1 - gamma) * B"
    )
    interpolate.add_argument("game_a")
    interpolate.add_argument("game_b")
    interpolate.add_argument("--gammas", type=_gammas, required=True, metavar="A:B:STEP")
    _add_init(interpolate)
    _add_box(interpolate)
    _add_grid(interpolate)
    _add_integrator(interpolate)
    interpolate.add_argument("--workers", type=int, help="Concurrent gamma runs")
    _add_out(interpolate, help_text="Spectrum CSV")

    field = commands.add_parser("field", parents=[common], help="Sample Du on a uniform lattice")
    field.add_argument("game")
    field.add_argument(
        "--grid", dest="nodes", type=int, default=DEFAULT_FIELD_NODES, help="Nodes per axis, endpoints included"
    )
    _add_box(field)
    _add_out(field, required=True, help_text="Field CSV")

    ensemble = commands.add_parser("ensemble", parents=[common], help="Phase-volume change of a cloud")
    ensemble.add_argument("game")
    ensemble.add_argument("--center", type=_floats, required=True, metavar="C1,...,CN")
    ensemble.add_argument("--radius", type=float, default=DEFAULT_ENSEMBLE_RADIUS)
    ensemble.add_argument("--points", type=int, default=DEFAULT_ENSEMBLE_POINTS)
    _add_integrator(ensemble)
    _add_out(ensemble, help_text="Write the JSON report here")

    return parser


# RunConfig and settings

def _validation_message(error: ValidationError) -> str:
    parts = []
    for item in error.errors():
        location = ".".join(str(p) for p in item.get("loc", ()))
        message = str(item.get("msg", "")).removeprefix("Value error, ")
        parts.append(f"{location}: {message}" if location else message)
    return "; ".join(parts)


def build_run_config(args: argparse.Namespace) -> RunConfig:
    values = {k: v for k, v in vars(args).items() if v is not None}
    values.pop("log_level", None)
    games = [values.pop(key) for key in ("game", "game_a", "game_b") if key in values]
    try:
        return RunConfig(games=games, **values)
    except ValidationError as e:
        raise UsageError(_validation_message(e)) from None


def settings_for(config: RunConfig, base: Settings) -> Settings:
    """Settings with the command-line seed and worker count applied"""
    update: Dict[str, Any] = {}
    if config.seed is not None:
        update["sampler"] = base.sampler.model_copy(update={"seed": config.seed})
    if config.workers is not None:
        update["max_workers"] = config.workers
    return base.model_copy(update=update) if update else base


# Dispatch

def _game(config: RunConfig, index: int = 0):
    return config.games[index]


Command = Tuple[Callable[[wiring.Container], Any], Callable[[RunConfig], Any]]

COMMANDS: Dict[str, Command] = {
    "check": (
        wiring.get_check_game_use_case,
        lambda c: CheckGameRequest(_game(c), box=c.box, resolution=c.grid, t_end=c.t_end, out=c.out),
    ),
    "classify": (
        wiring.get_classify_game_use_case,
        lambda c: ClassifyGameRequest(_game(c), box=c.box, resolution=c.grid, out=c.out),
    ),
    "decompose": (
        wiring.get_decompose_game_use_case,
        lambda c: DecomposeGameRequest(
            _game(c), out_dir=c.out, box=c.box, resolution=c.grid, zero_mode=c.zero_mode
        ),
    ),
    "simulate": (
        wiring.get_simulate_use_case,
        lambda c: SimulateRequest(
            _game(c), init=c.init, out=c.out, method=c.method, dt=c.dt, t_end=c.t_end,
            conserved=c.conserved, utilities=c.utilities,
        ),
    ),
    "recurrence": (
        wiring.get_recurrence_use_case,
        lambda c: RecurrenceRequest(
            _game(c), init=c.init, eps=c.eps, t_min=c.t_min, method=c.method, dt=c.dt,
            t_end=c.t_end, out=c.out,
        ),
    ),
    "critical": (
        wiring.get_critical_points_use_case,
        lambda c: CriticalPointsRequest(_game(c), seeds=c.seeds, box=c.box, out=c.out),
    ),
    "interpolate": (
        wiring.get_interpolation_spectrum_use_case,
        lambda c: InterpolationSpectrumRequest(
            _game(c, 0), _game(c, 1), gammas=c.gammas, init=c.init, box=c.box, resolution=c.grid,
            method=c.method, dt=c.dt, t_end=c.t_end, workers=c.workers, out=c.out,
        ),
    ),
    "field": (
        wiring.get_sample_field_use_case,
        lambda c: SampleFieldRequest(_game(c), out=c.out, resolution=c.nodes, box=c.box),
    ),
    "ensemble": (
        wiring.get_ensemble_use_case,
        lambda c: EnsembleRequest(
            _game(c), center=c.center, radius=c.radius, points=c.points, method=c.method,
            dt=c.dt, t_end=c.t_end, out=c.out,
        ),
    ),
}


# Output

def human_lines(payload: Any, prefix: str = "") -> Iterator[str]:
    """key: value lines with dotted keys for nested reports"""
    if isinstance(payload, dict):
        for key, value in payload.items():
            yield from human_lines(value, f"{prefix}.{key}" if prefix else str(key))
    elif isinstance(payload, (list, tuple)) and any(isinstance(v, (dict, list, tuple)) for v in payload):
        for index, value in enumerate(payload):
            yield from human_lines(value, f"{prefix}.{index}")
    elif isinstance(payload, (list, tuple)):
        yield f"{prefix}: {','.join(format_value(v) for v in payload)}"
    else:
        yield f"{prefix}: {format_value(payload)}"


def _print_report(payload: Dict[str, Any], json_output: bool, writer: JsonReportWriter) -> None:
    if json_output:
        sys.stdout.write(writer.render(payload))
    else:
        sys.stdout.write("".join(line + "\n" for line in human_lines(payload)))


def _print_error(error: HodgeGamesError, json_output: bool) -> None:
    sys.stderr.write(f"{PROG}: error: {error.message}\n")
    if json_output:
        report = ErrorResponse(**error.to_dict())
        sys.stdout.write(report.model_dump_json(exclude_none=True) + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the process exit code"""
    argv: List[str] = list(sys.argv[1:] if argv is None else argv)
    json_output = "--json" in argv

    try:
        # 1. Parse and validate the command line
        args = build_parser().parse_args(argv)
        config = build_run_config(args)
        app_settings = settings_for(config, default_settings)
        setup_logging(
            level=getattr(args, "log_level", None) or app_settings.log_level,
            format_type=app_settings.log_format,
            log_file=app_settings.log_file,
        )
        bind_run_context(command=config.subcommand, seed=app_settings.sampler.seed)

        # 2. Wire and run the use case
        provenance = Provenance(argv=argv, seed=app_settings.sampler.seed, version=__version__)
        container = wiring.build_container(app_settings, provenance)
        factory, build_request = COMMANDS[config.subcommand]
        response = factory(container).execute(build_request(config))

        # 3. Report
        _print_report(response.to_dict(), config.json_output, container.json_writer)
        if getattr(response, "passed", True) is False:
            return NumericError.exit_code
        return 0
    except SystemExit as e:
        # --help and --version
        return int(e.code or 0)
    except HodgeGamesError as e:
        _print_error(e, json_output)
        return e.exit_code
    except ValueError as e:
        _print_error(UsageError(str(e)), json_output)
        return UsageError.exit_code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
