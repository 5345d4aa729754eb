"""
Application Layer - Sample Field Use Case
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from app.adapters.report_writer import CsvReportWriter
from app.domain.game.repository import GameRepository
from app.services.game_field_service import FieldSample, GameFieldService


@dataclass
class SampleFieldRequest:
    game_path: Path
    out: Path
    resolution: int = 21
    box: Optional[Tuple[float, float]] = None


@dataclass
class SampleFieldResponse:
    sample: FieldSample
    path: Path

    def to_dict(self) -> dict:
        return {
            "rows": int(self.sample.points.shape[0]),
            "columns": self.sample.header(),
            "path": str(self.path),
        }


class SampleFieldUseCase:
    """Du on a uniform lattice, the data behind a gradient vector-field plot"""

    def __init__(
        self,
        game_repository: GameRepository,
        field_service: GameFieldService,
        csv_writer: CsvReportWriter,
    ):
        self.game_repo = game_repository
        self.field_service = field_service
        self.csv_writer = csv_writer

    def execute(self, request: SampleFieldRequest) -> SampleFieldResponse:
        game = self.game_repo.load(request.game_path)
        sampler = self.field_service.settings.sampler
        low, high = request.box if request.box is not None else (sampler.box_low, sampler.box_high)
        sample = self.field_service.field_sample(game, low, high, request.resolution)
        path = self.csv_writer.write_field(request.out, sample)
        return SampleFieldResponse(sample=sample, path=path)
