"""
Application Layer - Check Game Use Case
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from app.adapters.report_writer import JsonReportWriter
from app.core.logger import get_logger
from app.domain.game.repository import GameRepository
from app.domain.game.value_objects import SamplerSpec
from app.services.game_analysis_service import GameAnalysisService, InvariantSuiteReport

logger = get_logger(__name__)


@dataclass
class CheckGameRequest:
    game_path: Path
    box: Optional[Tuple[float, float]] = None
    resolution: Optional[int] = None
    t_end: Optional[float] = None
    out: Optional[Path] = None


@dataclass
class CheckGameResponse:
    report: InvariantSuiteReport

    @property
    def passed(self) -> bool:
        return self.report.passed

    def to_dict(self) -> dict:
        return self.report.to_dict()


class CheckGameUseCase:
    """Run the invariant suite on one game"""

    def __init__(
        self,
        game_repository: GameRepository,
        analysis_service: GameAnalysisService,
        json_writer: JsonReportWriter,
    ):
        self.game_repo = game_repository
        self.analysis_service = analysis_service
        self.json_writer = json_writer

    def execute(self, request: CheckGameRequest) -> CheckGameResponse:
        game = self.game_repo.load(request.game_path)
        sampler = SamplerSpec.from_settings(self.analysis_service.settings.sampler)
        if request.box is not None:
            sampler = SamplerSpec(request.box[0], request.box[1], sampler.count, sampler.seed)

        report = self.analysis_service.check(
            game,
            sampler=sampler,
            resolution=request.resolution,
            t_end=request.t_end or 5.0,
        )
        response = CheckGameResponse(report=report)
        if request.out is not None:
            self.json_writer.write(request.out, response.to_dict())
        return response
