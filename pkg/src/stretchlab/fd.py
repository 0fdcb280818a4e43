"""Central finite-difference oracle over stretch triples.

Used by the test suite as the independent reference for analytic
gradients and Hessians, and by the Lame extraction as the authoritative
path. Steps are relative, scaled per coordinate by max(1, |l_i|), which
keeps conditioning uniform near rest and at large stretch.
"""

from dataclasses import dataclass

import numpy as np

__all__ = ["FDConfig", "fd_gradient", "fd_hessian"]


@dataclass(frozen=True)
class FDConfig:
    """Finite-difference settings; scheme is central."""

    step: float = 1e-5

    def __post_init__(self):
        if not 1e-9 < self.step < 1e-2:
            raise ValueError(f"fd step {self.step} outside (1e-9, 1e-2)")

    def steps(self, s):
        return self.step * np.maximum(1.0, np.abs(s))


def fd_gradient(f, s, cfg=FDConfig()):
    """Central-difference gradient of a scalar field over stretch triples."""
    s = np.asarray(s, dtype=float)
    h = cfg.steps(s)
    g = np.zeros(3)
    for i in range(3):
        e = np.zeros(3)
        e[i] = h[i]
        g[i] = (f(s + e) - f(s - e)) / (2.0 * h[i])
    return g


def fd_hessian(f, s, cfg=FDConfig()):
    """Central-difference Hessian; off-diagonals via the 4-point cross stencil."""
    s = np.asarray(s, dtype=float)
    h = cfg.steps(s)
    H = np.zeros((3, 3))
    f0 = f(s)
    for i in range(3):
        ei = np.zeros(3)
        ei[i] = h[i]
        H[i, i] = (f(s + ei) - 2.0 * f0 + f(s - ei)) / h[i] ** 2
        for j in range(i + 1, 3):
            ej = np.zeros(3)
            ej[j] = h[j]
            H[i, j] = (
                f(s + ei + ej) - f(s + ei - ej) - f(s - ei + ej) + f(s - ei - ej)
            ) / (4.0 * h[i] * h[j])
            H[j, i] = H[i, j]
    return H
