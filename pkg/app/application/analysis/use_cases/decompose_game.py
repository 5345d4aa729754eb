"""
Application Layer - Decompose Game Use Case

Writes the sampled field, phi, X_P and X_V as GHG1 lattices plus
diagnostics.json into the output directory.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Tuple

from app.adapters.lattice_codec import write_lattice
from app.adapters.report_writer import JsonReportWriter
from app.core.logger import get_logger
from app.domain.game.repository import GameRepository
from app.services.hodge_service import GameDecomposition, HodgeService

logger = get_logger(__name__)

LATTICE_FILES = {
    "field": "field.ghg1",
    "phi": "phi.ghg1",
    "x_p": "x_p.ghg1",
    "x_v": "x_v.ghg1",
}
DIAGNOSTICS_FILE = "diagnostics.json"


@dataclass
class DecomposeGameRequest:
    game_path: Path
    out_dir: Path
    box: Optional[Tuple[float, float]] = None
    resolution: Optional[int] = None
    zero_mode: Optional[str] = None


@dataclass
class DecomposeGameResponse:
    decomposition: GameDecomposition
    files: Dict[str, Path] = field(default_factory=dict)

    def to_dict(self) -> dict:
        data = self.decomposition.to_dict()
        data["files"] = {k: str(v) for k, v in self.files.items()}
        return data


class DecomposeGameUseCase:
    def __init__(
        self,
        game_repository: GameRepository,
        hodge_service: HodgeService,
        json_writer: JsonReportWriter,
    ):
        self.game_repo = game_repository
        self.hodge_service = hodge_service
        self.json_writer = json_writer

    def execute(self, request: DecomposeGameRequest) -> DecomposeGameResponse:
        game = self.game_repo.load(request.game_path)
        low, high = request.box if request.box is not None else (None, None)
        decomposition = self.hodge_service.decompose_game(
            game,
            low=low,
            high=high,
            resolution=request.resolution,
            config=self.hodge_service.config(request.zero_mode),
        )

        result = decomposition.result
        lattices = {
            "field": decomposition.field,
            "phi": result.phi,
            "x_p": result.x_p,
            "x_v": result.x_v,
        }
        out_dir = Path(request.out_dir)
        files = {
            key: write_lattice(out_dir / LATTICE_FILES[key], lattice)
            for key, lattice in lattices.items()
        }
        response = DecomposeGameResponse(decomposition=decomposition, files=files)
        files["diagnostics"] = self.json_writer.write(out_dir / DIAGNOSTICS_FILE, response.to_dict())
        return response
