"""
Integrator Configuration Value Object
"""
from dataclasses import asdict, dataclass
from enum import Enum


class IntegrationMethod(str, Enum):
    RK4 = "rk4"
    RKF45 = "rkf45"


@dataclass(frozen=True)
class IntegratorConfig:
    """
    Settings of one gradient-flow integration

    ``step`` is the fixed step for rk4 and the initial step for rkf45.
    """
    method: IntegrationMethod = IntegrationMethod.RK4
    step: float = 1e-3
    abs_tol: float = 1e-10
    rel_tol: float = 1e-8
    t_end: float = 50.0
    escape_radius: float = 1e3
    record_stride: int = 1
    max_steps: int = 5_000_000

    def __post_init__(self):
        object.__setattr__(self, "method", IntegrationMethod(self.method))
        if not self.step > 0.0:
            raise ValueError(f"Step must be positive, got {self.step}")
        if not (self.abs_tol > 0.0 and self.rel_tol > 0.0):
            raise ValueError("Tolerances must be positive")
        if not self.t_end > 0.0:
            raise ValueError(f"t_end must be positive, got {self.t_end}")
        if not self.escape_radius > 0.0:
            raise ValueError("Escape radius must be positive")
        if self.record_stride < 1:
            raise ValueError("record_stride must be at least 1")
        if self.max_steps < 1:
            raise ValueError("max_steps must be at least 1")

    @classmethod
    def from_settings(cls, integrator_settings, **overrides) -> "IntegratorConfig":
        values = dict(
            method=integrator_settings.method,
            step=integrator_settings.step,
            abs_tol=integrator_settings.abs_tol,
            rel_tol=integrator_settings.rel_tol,
            t_end=integrator_settings.t_end,
            escape_radius=integrator_settings.escape_radius,
            record_stride=integrator_settings.record_stride,
            max_steps=integrator_settings.max_steps,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def to_dict(self) -> dict:
        data = asdict(self)
        data["method"] = self.method.value
        return data
