"""
Jacobian Split Value Object
"""
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class JacobianSplit:
    """
    Jacobian of Du with its symmetric and antisymmetric parts

    sym_res = |A|_F / max(|J|_F, eps) is zero for a potential game and
    skew_res = |S|_F / max(|J|_F, eps) is zero for a Hamiltonian game.
    """
    J: np.ndarray
    norm_guard: float = 1e-30
    S: np.ndarray = field(init=False)
    A: np.ndarray = field(init=False)
    sym_res: float = field(init=False)
    skew_res: float = field(init=False)

    def __post_init__(self):
        J = np.array(self.J, dtype=float)
        if J.ndim != 2 or J.shape[0] != J.shape[1]:
            raise ValueError(f"Jacobian must be square, got shape {J.shape}")
        S = (J + J.T) / 2.0
        A = (J - J.T) / 2.0
        scale = max(float(np.linalg.norm(J)), self.norm_guard)
        object.__setattr__(self, "J", J)
        object.__setattr__(self, "S", S)
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "sym_res", float(np.linalg.norm(A)) / scale)
        object.__setattr__(self, "skew_res", float(np.linalg.norm(S)) / scale)

    @property
    def trace(self) -> float:
        return float(np.trace(self.J))

    def to_dict(self) -> dict:
        return {
            "J": self.J.tolist(),
            "sym_res": self.sym_res,
            "skew_res": self.skew_res,
        }
