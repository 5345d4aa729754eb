"""
Decomposition value objects
"""
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from app.core.exceptions import GridError
from app.domain.grid.services import DerivativeScheme, inner1, norm1
from app.domain.grid.value_objects import GridField, GridScalar


class ZeroModePolicy(str, Enum):
    """Where the constant (harmonic) component of the field goes"""
    TO_POTENTIAL = "to_potential"
    TO_VECTOR = "to_vector"

    @classmethod
    def parse(cls, value: str) -> "ZeroModePolicy":
        aliases = {"potential": cls.TO_POTENTIAL, "vector": cls.TO_VECTOR}
        if value in aliases:
            return aliases[value]
        try:
            return cls(value)
        except ValueError:
            raise GridError(f"Unknown zero-mode policy: {value!r}") from None


@dataclass(frozen=True)
class DecompositionConfig:
    zero_mode_policy: ZeroModePolicy = ZeroModePolicy.TO_POTENTIAL
    scheme: DerivativeScheme = DerivativeScheme.SPECTRAL
    norm_guard: float = 1e-30

    def __post_init__(self):
        object.__setattr__(self, "zero_mode_policy", ZeroModePolicy(self.zero_mode_policy))
        object.__setattr__(self, "scheme", DerivativeScheme(self.scheme))
        if self.norm_guard <= 0.0:
            raise ValueError("norm_guard must be positive")

    @classmethod
    def from_settings(cls, settings) -> "DecompositionConfig":
        return cls(
            zero_mode_policy=ZeroModePolicy(settings.grid.zero_mode_policy),
            scheme=DerivativeScheme(settings.grid.scheme),
            norm_guard=settings.tolerances.norm_guard,
        )


@dataclass(frozen=True)
class ResidualReport:
    """Normalized curl, divergence and near-vector-potential residuals"""
    curl_residual: float
    div_residual: float
    near_vp_residual: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class DecompositionDiagnostics:
    """
    Residuals of one decomposition

    Every residual is normalized by the H1 norm of the input field, so the
    numbers stay meaningful when a component is itself close to zero.
    """
    reconstruction_error: float
    curl_residual_P: float
    div_residual_V: float
    orthogonality_L2: float
    orthogonality_H1: float
    near_vp_residual: float

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class EnergyFractions:
    rho_P: float
    rho_V: float
    rho_harmonic: float

    @property
    def total(self) -> float:
        return self.rho_P + self.rho_V + self.rho_harmonic

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True, eq=False)
class DecompositionResult:
    """
    phi, X_P and X_V of a sampled field

    The oscillatory parts do not depend on the zero-mode policy; x_p and x_v
    add the lattice mean of the input to one of them.
    """
    field: GridField
    phi: GridScalar
    x_p_oscillatory: GridField
    x_v_oscillatory: GridField
    harmonic_mean: Tuple[float, ...]
    config: DecompositionConfig
    diagnostics: DecompositionDiagnostics

    @property
    def policy(self) -> ZeroModePolicy:
        return self.config.zero_mode_policy

    @property
    def x_p(self) -> GridField:
        if self.policy is ZeroModePolicy.TO_POTENTIAL:
            return self.x_p_oscillatory.plus_constant(self.harmonic_mean)
        return self.x_p_oscillatory

    @property
    def x_v(self) -> GridField:
        if self.policy is ZeroModePolicy.TO_VECTOR:
            return self.x_v_oscillatory.plus_constant(self.harmonic_mean)
        return self.x_v_oscillatory

    def harmonic_field(self) -> GridField:
        return GridField.zeros(self.field.grid).plus_constant(self.harmonic_mean)

    def energy_fractions(self) -> EnergyFractions:
        """
        Shares of |X|_1^2 carried by the gradient, rotational and constant parts

        They sum to one because the three parts are mutually orthogonal in
        the H1 inner product. The zero field is all harmonic.
        """
        total = inner1(self.field, self.field)
        if total <= self.config.norm_guard:
            return EnergyFractions(rho_P=0.0, rho_V=0.0, rho_harmonic=1.0)
        grid = self.field.grid
        harmonic = float(np.sum(np.square(self.harmonic_mean))) * grid.cell_volume * grid.size
        return EnergyFractions(
            rho_P=norm1(self.x_p_oscillatory) ** 2 / total,
            rho_V=norm1(self.x_v_oscillatory) ** 2 / total,
            rho_harmonic=harmonic / total,
        )

    def to_dict(self) -> dict:
        return {
            "zero_mode_policy": self.policy.value,
            "scheme": self.config.scheme.value,
            "harmonic_mean": list(self.harmonic_mean),
            "diagnostics": self.diagnostics.to_dict(),
            "energy_fractions": self.energy_fractions().to_dict(),
            "grid": self.field.grid.to_dict(),
        }


@dataclass(frozen=True, eq=False)
class PotentialFit:
    """phi with d1 phi the closest gradient to X, and the relative misfit"""
    phi: GridScalar
    residual: float
    x_v_fraction: float

    def to_dict(self) -> dict:
        return {"residual": self.residual, "x_v_fraction": self.x_v_fraction}
