from .decomposition import decompose, epsilon_potential_fit, residuals

__all__ = ["decompose", "epsilon_potential_fit", "residuals"]
