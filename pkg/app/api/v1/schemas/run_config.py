"""
RunConfig - validated command-line options of one CLI invocation
"""
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

GAMMA_GRID_TOLERANCE = 1e-9


def parse_floats(text: str) -> Tuple[float, ...]:
    """Comma-separated reals, e.g. ``1,0.5,-2``"""
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"Expected comma-separated numbers, got {text!r}") from None


def parse_gammas(text: str) -> Tuple[float, ...]:
    """
    ``a:b:step`` inclusive range or a comma-separated list

    The range endpoint must be reached by whole steps.
    """
    if ":" not in text:
        return parse_floats(text)
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"Expected a:b:step, got {text!r}")
    start, stop, step = parse_floats(",".join(parts))
    if not step > 0.0:
        raise ValueError(f"Gamma step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"Gamma range end {stop} is below its start {start}")
    intervals = (stop - start) / step
    count = int(round(intervals))
    if abs(intervals - count) > GAMMA_GRID_TOLERANCE * max(1.0, intervals):
        raise ValueError(f"Gamma range {text!r} does not end on a whole step")
    return tuple(float(g) for g in np.linspace(start, stop, count + 1))


class RunConfig(BaseModel):
    """Every option a subcommand may carry; unused ones keep their defaults"""
    model_config = ConfigDict(extra="forbid", frozen=True)

    subcommand: str
    games: List[Path] = Field(default_factory=list)
    box: Optional[Tuple[float, float]] = None
    grid: Optional[int] = None
    nodes: Optional[int] = Field(default=None, ge=2)
    zero_mode: Optional[str] = None
    init: Optional[Tuple[float, ...]] = None
    method: Optional[str] = None
    dt: Optional[float] = Field(default=None, gt=0)
    t_end: Optional[float] = Field(default=None, gt=0)
    conserved: Optional[str] = None
    utilities: bool = False
    eps: Optional[float] = Field(default=None, gt=0)
    t_min: Optional[float] = Field(default=None, ge=0)
    seeds: Optional[int] = Field(default=None, gt=0)
    gammas: Tuple[float, ...] = ()
    center: Optional[Tuple[float, ...]] = None
    radius: Optional[float] = Field(default=None, gt=0)
    points: Optional[int] = Field(default=None, gt=0)
    out: Optional[Path] = None
    seed: Optional[int] = Field(default=None, ge=0)
    workers: Optional[int] = Field(default=None, ge=1)
    json_output: bool = False

    @field_validator("games")
    @classmethod
    def _games_exist(cls, value: List[Path]) -> List[Path]:
        for path in value:
            if not path.is_file():
                raise ValueError(f"Game file not found: {path}")
        return value

    @field_validator("box")
    @classmethod
    def _box_ordered(cls, value: Optional[Tuple[float, float]]) -> Optional[Tuple[float, float]]:
        if value is not None and not value[0] < value[1]:
            raise ValueError(f"Box lower bound {value[0]} must be below upper bound {value[1]}")
        return value

    @field_validator("grid")
    @classmethod
    def _power_of_two(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and (value < 8 or value & (value - 1)):
            raise ValueError(f"Grid resolution must be a power of two >= 8, got {value}")
        return value

    @field_validator("gammas")
    @classmethod
    def _unit_interval(cls, value: Tuple[float, ...]) -> Tuple[float, ...]:
        for gamma in value:
            if not 0.0 <= gamma <= 1.0:
                raise ValueError(f"Gamma must lie in [0, 1], got {gamma}")
        return value

    @model_validator(mode="after")
    def _outputs(self) -> "RunConfig":
        if self.subcommand in ("decompose", "simulate", "field") and self.out is None:
            raise ValueError(f"{self.subcommand} needs --out")
        return self
