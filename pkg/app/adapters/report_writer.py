"""
Report writers - trajectory, spectrum and field CSV plus JSON reports

Every artifact carries provenance: CSV files start with a comment line,
JSON documents hold a ``provenance`` object. Floats are written with 17
significant digits so identical runs produce identical bytes.
"""
import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterable, List, Optional, Sequence, Union

import numpy as np

from app import __version__
from app.core.logger import get_logger
from app.infrastructure.file_store import atomic_write

logger = get_logger(__name__)

PathLike = Union[str, Path]

SPECTRUM_COLUMNS = (
    "gamma",
    "label",
    "rho_P",
    "rho_V",
    "rho_harmonic",
    "sym_res",
    "skew_res",
    "div_max",
    "summary",
    "final_norm",
)


def format_value(value: Any) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if value is None:
        return ""
    return str(value)


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return _jsonable(value.tolist())
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        # JSON has no literal for these
        return value if np.isfinite(value) else str(value)
    return value


@dataclass(frozen=True)
class Provenance:
    """Tool version, command line and seed of the run that wrote an artifact"""
    argv: List[str] = field(default_factory=list)
    seed: int = 0
    version: str = __version__
    tool: str = "hodge-games"

    def csv_line(self) -> str:
        argv = json.dumps(list(self.argv), ensure_ascii=True)
        return f"# {self.tool} {self.version} argv={argv} seed={self.seed}"

    def to_dict(self) -> dict:
        return {
            "tool": self.tool,
            "version": self.version,
            "argv": list(self.argv),
            "seed": self.seed,
        }


class CsvReportWriter:
    """Writes tabular data series with a provenance header"""

    def __init__(self, provenance: Optional[Provenance] = None):
        self.provenance = provenance or Provenance()

    def render(self, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
        buffer = io.StringIO()
        buffer.write(self.provenance.csv_line() + "\n")
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_value(v) for v in row])
        return buffer.getvalue()

    def write(self, path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
        target = atomic_write(path, self.render(header, rows))
        logger.info("CSV written", path=str(target))
        return target

    def write_trajectory(self, path: PathLike, simulation) -> Path:
        """t, the state, log_volume, then conserved and u_<player> when present"""
        trajectory = simulation.trajectory
        header = ["t", *trajectory.variables, "log_volume"]
        columns = [trajectory.times[:, None], trajectory.states, trajectory.log_volume[:, None]]
        if simulation.conserved is not None:
            header.append("conserved")
            columns.append(simulation.conserved[:, None])
        for player, series in simulation.utilities.items():
            header.append(f"u_{player}")
            columns.append(np.asarray(series)[:, None])
        table = np.hstack(columns)
        return self.write(path, header, table.tolist())

    def write_spectrum(self, path: PathLike, records: Sequence) -> Path:
        rows = [[record.row()[c] for c in SPECTRUM_COLUMNS] for record in records]
        return self.write(path, SPECTRUM_COLUMNS, rows)

    def write_field(self, path: PathLike, sample) -> Path:
        table = np.hstack([sample.points, sample.values])
        return self.write(path, sample.header(), table.tolist())


class JsonReportWriter:
    """Writes JSON reports with a provenance object"""

    def __init__(self, provenance: Optional[Provenance] = None):
        self.provenance = provenance or Provenance()

    def render(self, payload: Dict[str, Any]) -> str:
        document = {"provenance": self.provenance.to_dict(), **_jsonable(payload)}
        return json.dumps(document, indent=2, sort_keys=True, allow_nan=False) + "\n"

    def write(self, path: PathLike, payload: Dict[str, Any]) -> Path:
        target = atomic_write(path, self.render(payload))
        logger.info("JSON written", path=str(target))
        return target
