"""
Classification value objects
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from app.domain.hodge.value_objects import DecompositionDiagnostics, EnergyFractions, ResidualReport


class GameLabel(str, Enum):
    """Exactly one label per game, assigned by precedence"""
    NON_STRATEGIC = "non-strategic"
    EXACT_SCALAR_POTENTIAL = "exact-scalar-potential"
    HAMILTONIAN = "hamiltonian"
    VECTOR_POTENTIAL = "vector-potential"
    NEAR_VECTOR_POTENTIAL = "near-vector-potential"
    MIXED = "mixed"


class TrajectorySummary(str, Enum):
    ESCAPED = "escaped"
    CONVERGED = "converged"
    RECURRENT = "recurrent"
    BOUNDED = "bounded"


@dataclass(frozen=True)
class LabelThresholds:
    nonstrategic: float = 1e-10
    symbolic: float = 1e-8
    grid: float = 1e-3

    @classmethod
    def from_settings(cls, tolerances) -> "LabelThresholds":
        return cls(
            nonstrategic=tolerances.nonstrategic,
            symbolic=tolerances.label_symbolic,
            grid=tolerances.label_grid,
        )


@dataclass(frozen=True)
class ClassificationReport:
    """
    Taxonomy verdict of one game

    ``hamiltonian`` is only ever true together with ``vector_potential``;
    ``scalar_potential`` records closedness of Du whatever the label.
    """
    game: str
    label: GameLabel
    hamiltonian: bool
    vector_potential: bool
    scalar_potential: bool
    nonstrategic_max_norm: float
    sym_res: float
    skew_res: float
    analytic_div_max: float
    symbolic_divergence_zero: bool
    grid_residuals: ResidualReport
    energy_fractions: EnergyFractions
    diagnostics: DecompositionDiagnostics
    thresholds: LabelThresholds
    sampler: Dict[str, Any]
    grid: Dict[str, Any]

    @property
    def rho_P(self) -> float:
        return self.energy_fractions.rho_P

    @property
    def rho_V(self) -> float:
        return self.energy_fractions.rho_V

    @property
    def rho_harmonic(self) -> float:
        return self.energy_fractions.rho_harmonic

    def to_dict(self) -> dict:
        return {
            "game": self.game,
            "label": self.label.value,
            "hamiltonian": self.hamiltonian,
            "vector_potential": self.vector_potential,
            "scalar_potential": self.scalar_potential,
            "nonstrategic_max_norm": self.nonstrategic_max_norm,
            "sym_res": self.sym_res,
            "skew_res": self.skew_res,
            "analytic_div_max": self.analytic_div_max,
            "symbolic_divergence_zero": self.symbolic_divergence_zero,
            "grid_residuals": self.grid_residuals.to_dict(),
            "energy_fractions": self.energy_fractions.to_dict(),
            "diagnostics": self.diagnostics.to_dict(),
            "thresholds": {
                "nonstrategic": self.thresholds.nonstrategic,
                "symbolic": self.thresholds.symbolic,
                "grid": self.thresholds.grid,
            },
            "sampler": self.sampler,
            "grid": self.grid,
        }


@dataclass(frozen=True)
class SpectrumRecord:
    gamma: float
    classification: ClassificationReport
    summary: TrajectorySummary
    final_norm: float
    initial_state: tuple = field(default_factory=tuple)
    recurrence_returns: Optional[int] = None

    def row(self) -> Dict[str, Any]:
        """Values in spectrum-CSV column order"""
        c = self.classification
        return {
            "gamma": self.gamma,
            "label": c.label.value,
            "rho_P": c.rho_P,
            "rho_V": c.rho_V,
            "rho_harmonic": c.rho_harmonic,
            "sym_res": c.sym_res,
            "skew_res": c.skew_res,
            "div_max": c.analytic_div_max,
            "summary": self.summary.value,
            "final_norm": self.final_norm,
        }

    def to_dict(self) -> dict:
        data = self.row()
        data["initial_state"] = list(self.initial_state)
        data["recurrence_returns"] = self.recurrence_returns
        data["classification"] = self.classification.to_dict()
        return data
