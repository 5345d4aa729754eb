"""
Application Layer - Simulate Use Case
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from app.adapters.report_writer import CsvReportWriter
from app.core.logger import get_logger
from app.domain.game.repository import GameRepository
from app.services.dynamics_service import DynamicsService, SimulationResult

logger = get_logger(__name__)


@dataclass
class SimulateRequest:
    game_path: Path
    init: Tuple[float, ...]
    out: Path
    method: Optional[str] = None
    dt: Optional[float] = None
    t_end: Optional[float] = None
    conserved: Optional[str] = None
    utilities: bool = False


@dataclass
class SimulateResponse:
    result: SimulationResult
    path: Path

    def to_dict(self) -> dict:
        data = self.result.to_dict()
        data["path"] = str(self.path)
        return data


class SimulateUseCase:
    """Integrate the gradient flow and write the trajectory CSV"""

    def __init__(
        self,
        game_repository: GameRepository,
        dynamics_service: DynamicsService,
        csv_writer: CsvReportWriter,
    ):
        self.game_repo = game_repository
        self.dynamics_service = dynamics_service
        self.csv_writer = csv_writer

    def execute(self, request: SimulateRequest) -> SimulateResponse:
        game = self.game_repo.load(request.game_path)
        x0 = self.dynamics_service.initial_state(game, request.init)
        config = self.dynamics_service.integrator_config(
            method=request.method, step=request.dt, t_end=request.t_end
        )
        result = self.dynamics_service.simulate(
            game, x0, config, conserved=request.conserved, utilities=request.utilities
        )
        path = self.csv_writer.write_trajectory(request.out, result)
        return SimulateResponse(result=result, path=path)
