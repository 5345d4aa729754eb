"""
Application Layer - Interpolation Spectrum Use Case

Sweeps gamma over the convex combination gamma * A + (1 - gamma) * B,
classifying and integrating the game at every gamma.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from app.adapters.report_writer import CsvReportWriter
from app.core.exceptions import UsageError
from app.core.logger import get_logger
from app.domain.classification.value_objects import SpectrumRecord
from app.domain.game.repository import GameRepository
from app.domain.game.value_objects import SamplerSpec
from app.services.classification_service import ClassificationService
from app.services.dynamics_service import DynamicsService

logger = get_logger(__name__)


@dataclass
class InterpolationSpectrumRequest:
    game_a_path: Path
    game_b_path: Path
    gammas: Tuple[float, ...]
    init: Tuple[float, ...]
    box: Optional[Tuple[float, float]] = None
    resolution: Optional[int] = None
    method: Optional[str] = None
    dt: Optional[float] = None
    t_end: Optional[float] = None
    workers: Optional[int] = None
    out: Optional[Path] = None


@dataclass
class InterpolationSpectrumResponse:
    records: List[SpectrumRecord] = field(default_factory=list)
    path: Optional[Path] = None

    def to_dict(self) -> dict:
        return {
            "records": [r.to_dict() for r in self.records],
            "path": str(self.path) if self.path is not None else None,
        }


class InterpolationSpectrumUseCase:
    def __init__(
        self,
        game_repository: GameRepository,
        classification_service: ClassificationService,
        dynamics_service: DynamicsService,
        csv_writer: CsvReportWriter,
    ):
        self.game_repo = game_repository
        self.classification_service = classification_service
        self.dynamics_service = dynamics_service
        self.csv_writer = csv_writer

    def execute(self, request: InterpolationSpectrumRequest) -> InterpolationSpectrumResponse:
        if not request.gammas:
            raise UsageError("interpolate needs at least one gamma")

        # 1. Load both endpoints
        game_a = self.game_repo.load(request.game_a_path)
        game_b = self.game_repo.load(request.game_b_path)
        game_a.require_same_structure(game_b)

        # 2. Shared settings for every gamma
        x0 = self.dynamics_service.initial_state(game_a, request.init)
        config = self.dynamics_service.integrator_config(
            method=request.method, step=request.dt, t_end=request.t_end
        )
        sampler = SamplerSpec.from_settings(self.classification_service.settings.sampler)
        if request.box is not None:
            sampler = SamplerSpec(request.box[0], request.box[1], sampler.count, sampler.seed)

        # 3. Sweep
        records = self.classification_service.spectrum_experiment(
            game_a,
            game_b,
            request.gammas,
            x0,
            config=config,
            sampler=sampler,
            resolution=request.resolution,
            max_workers=request.workers,
        )

        path = None
        if request.out is not None:
            path = self.csv_writer.write_spectrum(request.out, records)
        return InterpolationSpectrumResponse(records=records, path=path)
