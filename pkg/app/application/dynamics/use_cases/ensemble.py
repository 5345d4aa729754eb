"""
Application Layer - Ensemble Volume Use Case
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from app.adapters.report_writer import JsonReportWriter
from app.domain.dynamics.value_objects import EnsembleVolumeReport
from app.domain.game.repository import GameRepository
from app.services.dynamics_service import DynamicsService


@dataclass
class EnsembleRequest:
    game_path: Path
    center: Tuple[float, ...]
    radius: float = 0.1
    points: int = 16
    method: Optional[str] = None
    dt: Optional[float] = None
    t_end: Optional[float] = None
    out: Optional[Path] = None


@dataclass
class EnsembleResponse:
    report: EnsembleVolumeReport

    def to_dict(self) -> dict:
        return self.report.to_dict()


class EnsembleUseCase:
    def __init__(
        self,
        game_repository: GameRepository,
        dynamics_service: DynamicsService,
        json_writer: JsonReportWriter,
    ):
        self.game_repo = game_repository
        self.dynamics_service = dynamics_service
        self.json_writer = json_writer

    def execute(self, request: EnsembleRequest) -> EnsembleResponse:
        game = self.game_repo.load(request.game_path)
        config = self.dynamics_service.integrator_config(
            method=request.method, step=request.dt, t_end=request.t_end
        )
        report = self.dynamics_service.ensemble(
            game, request.center, request.radius, request.points, config
        )
        response = EnsembleResponse(report=report)
        if request.out is not None:
            self.json_writer.write(request.out, response.to_dict())
        return response
