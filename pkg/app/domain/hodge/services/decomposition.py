"""
Spectral Helmholtz-Hodge projection on the periodic box

Per nonzero Fourier mode k with angular wavevector kappa:

    phi_hat = -i (kappa . X_hat) / |kappa|^2
    X_P_hat = i kappa phi_hat = kappa (kappa . X_hat) / |kappa|^2
    X_V_hat = X_hat - X_P_hat

The H1 weight (1 + |kappa|^2) is a per-mode scalar, so this projection is
orthogonal in both L2 and H1. Modes with kappa = 0 other than k = 0 (the
zeroed Nyquist modes) stay in X_V. The k = 0 mode is the harmonic mean.
"""
from typing import Optional

import numpy as np

from app.core.exceptions import GridError
from app.domain.grid.services import (
    d1_grid,
    d2_grid,
    div_grid,
    inner1,
    inner1_l2,
    laplacian_grid,
    norm1,
    norm1_l2,
    norm2,
    norm_l2,
)
from app.domain.grid.value_objects import GridField, GridScalar
from app.domain.hodge.value_objects import (
    DecompositionConfig,
    DecompositionDiagnostics,
    DecompositionResult,
    PotentialFit,
    ResidualReport,
    ZeroModePolicy,
)


def residuals(
    X: GridField,
    config: Optional[DecompositionConfig] = None,
) -> ResidualReport:
    """
    curl, divergence and near-vector-potential residuals of X

        curl_residual    = |d2 X|_2 / |X|_1
        div_residual     = |div X|_L2 / |X|_1
        near_vp_residual = |div X + lap(div X)|_L2 / |X|_1
    """
    config = config or DecompositionConfig()
    scale = max(norm1(X), config.norm_guard)
    div = div_grid(X, config.scheme)
    near = div + laplacian_grid(div, config.scheme)
    return ResidualReport(
        curl_residual=norm2(d2_grid(X, config.scheme)) / scale,
        div_residual=norm_l2(div) / scale,
        near_vp_residual=norm_l2(near) / scale,
    )


def decompose(X: GridField, config: Optional[DecompositionConfig] = None) -> DecompositionResult:
    """Split X into X_P (closed), X_V (divergence-free) and the constant mode"""
    config = config or DecompositionConfig()
    grid = X.grid
    values = X.stack()
    if not np.all(np.isfinite(values)):
        raise GridError("Cannot decompose a non-finite field")

    # 1. Forward transform and wavevectors
    axes = tuple(range(1, grid.dimension + 1))
    spectrum = np.fft.fftn(values, axes=axes)
    kappa = np.stack(grid.wavevector_mesh())
    kappa_sq = np.sum(kappa**2, axis=0)
    nonzero = kappa_sq > 0.0
    safe_sq = np.where(nonzero, kappa_sq, 1.0)

    # 2. Harmonic mean (k = 0)
    zero_index = (slice(None),) + (0,) * grid.dimension
    harmonic_mean = tuple(float(v) for v in np.real(spectrum[zero_index]) / grid.size)
    oscillatory = spectrum.copy()
    oscillatory[zero_index] = 0.0

    # 3. Per-mode projection
    projection = np.where(nonzero, np.sum(kappa * oscillatory, axis=0) / safe_sq, 0.0)
    phi_hat = -1j * projection
    p_hat = kappa * projection
    v_hat = oscillatory - p_hat

    phi = GridScalar(grid, np.real(np.fft.ifftn(phi_hat)))
    x_p = GridField.from_arrays(grid, np.real(np.fft.ifftn(p_hat, axes=axes)))
    x_v = GridField.from_arrays(grid, np.real(np.fft.ifftn(v_hat, axes=axes)))

    # 4. Zero-mode placement and diagnostics
    if config.zero_mode_policy is ZeroModePolicy.TO_POTENTIAL:
        placed_p, placed_v = x_p.plus_constant(harmonic_mean), x_v
    else:
        placed_p, placed_v = x_p, x_v.plus_constant(harmonic_mean)

    return DecompositionResult(
        field=X,
        phi=phi,
        x_p_oscillatory=x_p,
        x_v_oscillatory=x_v,
        harmonic_mean=harmonic_mean,
        config=config,
        diagnostics=_diagnostics(X, placed_p, placed_v, config),
    )


def _diagnostics(
    X: GridField, x_p: GridField, x_v: GridField, config: DecompositionConfig
) -> DecompositionDiagnostics:
    guard = config.norm_guard

    l2_sq = max(inner1_l2(X, X), guard)
    h1_sq = max(inner1(X, X), guard)
    h1 = max(np.sqrt(h1_sq), guard)

    rest = X - x_p - x_v
    return DecompositionDiagnostics(
        reconstruction_error=norm1_l2(rest) / max(np.sqrt(l2_sq), guard),
        curl_residual_P=norm2(d2_grid(x_p, config.scheme)) / h1,
        div_residual_V=norm_l2(div_grid(x_v, config.scheme)) / h1,
        orthogonality_L2=abs(inner1_l2(x_p, x_v)) / l2_sq,
        orthogonality_H1=abs(inner1(x_p, x_v)) / h1_sq,
        near_vp_residual=residuals(X, config).near_vp_residual,
    )


def epsilon_potential_fit(X: GridField, config: Optional[DecompositionConfig] = None) -> PotentialFit:
    """
    Best gradient approximation d1 phi of X

    Uses the to_vector policy so the constant mode counts as misfit; the
    residual |d1 phi - X|_1 / |X|_1 equals |X_V|_1 / |X|_1.
    """
    base = config or DecompositionConfig()
    config = DecompositionConfig(
        zero_mode_policy=ZeroModePolicy.TO_VECTOR,
        scheme=base.scheme,
        norm_guard=base.norm_guard,
    )
    result = decompose(X, config)
    scale = max(norm1(X), config.norm_guard)
    misfit = d1_grid(result.phi) - X
    return PotentialFit(
        phi=result.phi,
        residual=norm1(misfit) / scale,
        x_v_fraction=norm1(result.x_v) / scale,
    )
